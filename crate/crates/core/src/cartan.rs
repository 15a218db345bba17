//! Generalized Cartan matrices, root/coroot/weight coordinates and the
//! simple reflections acting on them.
//!
//! Pairing convention: `a[i][j] = <alpha_j, alpha_i^vee>`, i.e. row `i` lists
//! the values of the `i`-th simple coroot on the simple roots. With this
//! orientation the Bourbaki matrix of `C2` is `[[2, -2], [-1, 2]]`.
//!
//! Roots are carried in simple-root coordinates, coroots in simple-coroot
//! coordinates and weights in fundamental-weight coordinates. Moving between
//! bases only happens through the explicit conversions on [`CartanMatrix`].

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple finite type such as `B3`, indexed as in the Bourbaki tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteType {
    pub family: Family,
    pub rank: usize,
}

impl FiniteType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(FiniteType { family, rank })
        } else {
            Err(Error::UnknownType(format!("{family:?}{rank}")))
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for FiniteType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        FiniteType::new(family, rank).map_err(|_| Error::UnknownType(s.to_string()))
    }
}

/// Vector in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coordinates nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn neg(&self) -> Self {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|c| c * k).collect())
    }

    /// The positive member of `{self, -self}`. Mixed-sign vectors are returned unchanged.
    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Vector in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorootVector(pub Vec<i64>);

impl CorootVector {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        CorootVector(v)
    }

    pub fn neg(&self) -> Self {
        CorootVector(self.0.iter().map(|c| -c).collect())
    }
}

/// Weight in fundamental-weight coordinates: `coords[i] = <mu, alpha_i^vee>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Rational::zero(); n])
    }

    /// The `i`-th fundamental weight.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.0[i] = Rational::one();
        w
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A real root together with its coroot, transported as a pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealRoot {
    pub root: RootVector,
    pub coroot: CorootVector,
}

impl RealRoot {
    pub fn simple(n: usize, i: usize) -> Self {
        RealRoot {
            root: RootVector::simple(n, i),
            coroot: CorootVector::simple(n, i),
        }
    }

    pub fn neg(&self) -> Self {
        RealRoot {
            root: self.root.neg(),
            coroot: self.coroot.neg(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.root.is_positive()
    }
}

impl Ord for RealRoot {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.root
            .height()
            .cmp(&other.root.height())
            .then_with(|| other.root.cmp(&self.root))
            .then_with(|| self.coroot.cmp(&other.coroot))
    }
}

impl PartialOrd for RealRoot {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
    finite_type: Option<FiniteType>,
}

impl CartanMatrix {
    /// Validates and wraps a square integer matrix. Errors name the offending
    /// row and column (1-based).
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let a = rows[i][j];
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!(
                        "row {}, column {}: diagonal entry is {a}, expected 2",
                        i + 1,
                        j + 1
                    )));
                }
                if i != j && a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "row {}, column {}: off-diagonal entry {a} is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if i != j && (a == 0) != (rows[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "row {}, column {}: entry {a} vanishes asymmetrically with row {}, column {} ({})",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1,
                        rows[j][i]
                    )));
                }
            }
        }
        Ok(CartanMatrix {
            rank: n,
            entries: rows.into_iter().flatten().collect(),
            finite_type: None,
        })
    }

    /// Bourbaki-indexed Cartan matrix of a simple finite type.
    pub fn finite(family: Family, rank: usize) -> Result<Self> {
        let ty = FiniteType::new(family, rank)?;
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match family {
            Family::A | Family::B | Family::C => (0..n - 1).for_each(|i| bond(i, i + 1)),
            Family::D => {
                (0..n - 2).for_each(|i| bond(i, i + 1));
                bond(n - 3, n - 1);
            }
            Family::E => {
                bond(0, 2);
                bond(1, 3);
                (2..n - 1).for_each(|i| bond(i, i + 1));
            }
            Family::F => (0..3).for_each(|i| bond(i, i + 1)),
            Family::G => bond(0, 1),
        }
        // Multiple bonds: a[short][long] = -(ratio), a[long][short] = -1.
        match family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        let mut m = CartanMatrix::new(a)?;
        m.finite_type = Some(ty);
        Ok(m)
    }

    /// Parses the text format: first line the rank `n`, then `n` rows of
    /// `n` whitespace-separated integers.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let first = lines
            .next()
            .ok_or_else(|| Error::parse("", "empty Cartan matrix file"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::parse(first, "first line must be the rank"))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines.next().ok_or_else(|| {
                Error::InvalidCartan(format!("row {} missing (expected {n} rows)", i + 1))
            })?;
            let row = line
                .split_whitespace()
                .enumerate()
                .map(|(j, tok)| {
                    tok.parse::<i64>().map_err(|_| {
                        Error::InvalidCartan(format!(
                            "row {}, column {}: `{tok}` is not an integer",
                            i + 1,
                            j + 1
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::parse(extra, "unexpected line after the matrix"));
        }
        CartanMatrix::new(rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.rank);
        for i in 0..self.rank {
            let row: Vec<String> = (0..self.rank).map(|j| self.entry(i, j).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `<alpha_j, alpha_i^vee>`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn finite_type(&self) -> Option<FiniteType> {
        self.finite_type
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                rank: self.rank,
            })
        }
    }

    /// Finite type iff every principal minor is positive.
    pub fn is_finite_type(&self) -> bool {
        if self.finite_type.is_some() {
            return true;
        }
        let n = self.rank;
        (1u32..(1 << n)).all(|mask| {
            let idx: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
            let sub: Vec<Vec<i128>> = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entry(i, j) as i128).collect())
                .collect();
            determinant(sub) > 0
        })
    }

    pub fn determinant(&self) -> i128 {
        let n = self.rank;
        determinant(
            (0..n)
                .map(|i| (0..n).map(|j| self.entry(i, j) as i128).collect())
                .collect(),
        )
    }

    /// `<beta, alpha_i^vee>`.
    pub fn pair_simple_coroot(&self, beta: &RootVector, i: usize) -> i64 {
        (0..self.rank).map(|j| self.entry(i, j) * beta.0[j]).sum()
    }

    /// `<alpha_i, h>` for a coroot vector `h`.
    pub fn pair_simple_root(&self, i: usize, h: &CorootVector) -> i64 {
        (0..self.rank).map(|j| h.0[j] * self.entry(j, i)).sum()
    }

    /// `<beta, h>`.
    pub fn pairing(&self, beta: &RootVector, h: &CorootVector) -> i64 {
        (0..self.rank)
            .map(|i| h.0[i] * self.pair_simple_coroot(beta, i))
            .sum()
    }

    /// `r_i(beta) = beta - <beta, alpha_i^vee> alpha_i`.
    pub fn reflect_root(&self, i: usize, beta: &RootVector) -> RootVector {
        let k = self.pair_simple_coroot(beta, i);
        let mut out = beta.clone();
        out.0[i] -= k;
        out
    }

    /// `r_i(h) = h - <alpha_i, h> alpha_i^vee`.
    pub fn reflect_coroot(&self, i: usize, h: &CorootVector) -> CorootVector {
        let k = self.pair_simple_root(i, h);
        let mut out = h.clone();
        out.0[i] -= k;
        out
    }

    pub fn reflect_real_root(&self, i: usize, beta: &RealRoot) -> RealRoot {
        RealRoot {
            root: self.reflect_root(i, &beta.root),
            coroot: self.reflect_coroot(i, &beta.coroot),
        }
    }

    /// `r_i(mu) = mu - <mu, alpha_i^vee> alpha_i` in fundamental-weight coordinates.
    pub fn reflect_weight(&self, i: usize, mu: &Weight) -> Weight {
        let k = mu.0[i];
        let mut out = mu.clone();
        for j in 0..self.rank {
            out.0[j] -= k * Rational::from_integer(self.entry(j, i));
        }
        out
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn weight_of_root(&self, beta: &RootVector) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| Rational::from_integer(self.pair_simple_coroot(beta, i)))
                .collect(),
        )
    }

    /// Solves `weight_of_root(x) = mu` exactly. `None` if the solution is not integral.
    pub fn root_coordinates(&self, mu: &Weight) -> Result<Option<RootVector>> {
        let x = self.solve_rational(mu)?;
        if x.iter().all(|c| c.is_integer()) {
            Ok(Some(RootVector(x.iter().map(|c| *c.numer()).collect())))
        } else {
            Ok(None)
        }
    }

    /// The root equal to `mu`, if `mu` is a root. Finite type only.
    pub fn root_of_weight(&self, mu: &Weight) -> Result<Option<RootVector>> {
        let roots = self.positive_roots()?;
        let Some(x) = self.root_coordinates(mu)? else {
            return Ok(None);
        };
        let pos = x.abs();
        Ok(roots.iter().any(|r| r.root == pos).then_some(x))
    }

    /// If `mu` is a nonzero rational multiple `t * beta` of a positive root,
    /// returns `(t, beta)`. Finite type only.
    pub fn root_multiple_of_weight(&self, mu: &Weight) -> Result<Option<(Rational, RootVector)>> {
        let roots = self.positive_roots()?;
        if mu.is_zero() {
            return Ok(None);
        }
        let x = self.solve_rational(mu)?;
        for r in &roots {
            let k = r.root.0.iter().position(|&c| c != 0).expect("nonzero root");
            let t = x[k] / Rational::from_integer(r.root.0[k]);
            if x
                .iter()
                .zip(&r.root.0)
                .all(|(xc, &rc)| *xc == t * Rational::from_integer(rc))
            {
                return Ok(Some((t, r.root.clone())));
            }
        }
        Ok(None)
    }

    fn solve_rational(&self, mu: &Weight) -> Result<Vec<Rational>> {
        let n = self.rank;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n)
                    .map(|j| Rational::from_integer(self.entry(i, j)))
                    .collect();
                row.push(mu.0[i]);
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::Singular)?;
            m.swap(col, piv);
            let p = m[col][col];
            for c in col..=n {
                m[col][c] /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in col..=n {
                        let d = f * m[col][c];
                        m[r][c] -= d;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[n]).collect())
    }

    /// All positive roots with their coroots, sorted by height. Finite type only.
    pub fn positive_roots(&self) -> Result<Vec<RealRoot>> {
        if !self.is_finite_type() {
            return Err(Error::NotFiniteType("positive root enumeration"));
        }
        Ok(self.closure(None))
    }

    /// Positive real roots of height at most `max_height`, for any GCM.
    pub fn real_roots_up_to_height(&self, max_height: i64) -> Vec<RealRoot> {
        self.closure(Some(max_height))
    }

    fn closure(&self, max_height: Option<i64>) -> Vec<RealRoot> {
        let n = self.rank;
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut out = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let s = RealRoot::simple(n, i);
            if max_height.is_none_or(|h| h >= 1) {
                seen.insert(s.root.clone());
                queue.push_back(s);
            }
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let next = self.reflect_real_root(i, &beta);
                if !next.is_positive() || max_height.is_some_and(|h| next.root.height() > h) {
                    continue;
                }
                if seen.insert(next.root.clone()) {
                    queue.push_back(next);
                }
            }
            out.insert(beta);
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = self.finite_type {
            return write!(f, "{t}");
        }
        f.write_str("[")?;
        for i in 0..self.rank {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.rank {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

// Fraction-free (Bareiss) elimination.
fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanMatrix {
        let t: FiniteType = s.parse().unwrap();
        CartanMatrix::finite(t.family, t.rank).unwrap()
    }

    fn rows(m: &CartanMatrix) -> Vec<Vec<i64>> {
        (0..m.rank())
            .map(|i| (0..m.rank()).map(|j| m.entry(i, j)).collect())
            .collect()
    }

    #[test]
    fn bourbaki_rank_two() {
        assert_eq!(rows(&ty("A2")), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(rows(&ty("C2")), vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(rows(&ty("B2")), vec![vec![2, -1], vec![-2, 2]]);
        let g2 = ty("G2");
        assert_eq!(g2.entry(0, 1) * g2.entry(1, 0), 3);
    }

    #[test]
    fn invalid_types_rejected() {
        for bad in ["D3", "E9", "F3", "G3", "B1", "A0", "X2", "A"] {
            assert!(bad.parse::<FiniteType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn validation_cites_position() {
        let e = CartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]).unwrap_err();
        assert!(e.to_string().contains("row 1, column 2"), "{e}");
        let e = CartanMatrix::new(vec![vec![2, 0], vec![-1, 2]]).unwrap_err();
        assert!(e.to_string().contains("row 1, column 2"), "{e}");
        let e = CartanMatrix::new(vec![vec![2, -1], vec![-1, 3]]).unwrap_err();
        assert!(e.to_string().contains("row 2, column 2"), "{e}");
        let e = CartanMatrix::from_text("2\n2 -1\n-1 x\n").unwrap_err();
        assert!(e.to_string().contains("row 2, column 2"), "{e}");
    }

    #[test]
    fn text_format_round_trip() {
        let m = CartanMatrix::from_text("2\n2 -2\n-2 2\n").unwrap();
        assert_eq!(m.entry(0, 1), -2);
        assert!(!m.is_finite_type());
        assert_eq!(CartanMatrix::from_text(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn finite_type_detection() {
        let a2 = CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert!(a2.is_finite_type());
        let hyper = CartanMatrix::new(vec![vec![2, -3], vec![-3, 2]]).unwrap();
        assert!(!hyper.is_finite_type());
    }

    #[test]
    fn simple_reflections() {
        let a2 = ty("A2");
        assert_eq!(a2.reflect_root(0, &RootVector(vec![0, 1])), RootVector(vec![1, 1]));
        assert_eq!(a2.reflect_root(1, &RootVector(vec![0, 1])), RootVector(vec![0, -1]));
        let c2 = ty("C2");
        assert_eq!(c2.reflect_root(0, &RootVector(vec![0, 1])), RootVector(vec![2, 1]));
    }

    #[test]
    fn positive_root_counts() {
        for s in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"] {
            let m = ty(s);
            let roots = m.positive_roots().unwrap();
            assert_eq!(roots.len(), m.finite_type().unwrap().positive_root_count(), "{s}");
            for r in &roots {
                assert_eq!(m.pairing(&r.root, &r.coroot), 2);
            }
        }
        let a2 = ty("A2");
        let roots: Vec<String> = a2.positive_roots().unwrap().iter().map(|r| r.to_string()).collect();
        assert_eq!(roots, vec!["a1", "a2", "a1+a2"]);
    }

    #[test]
    fn affine_roots_need_height_bound() {
        let m = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(m.positive_roots().is_err());
        let roots = m.real_roots_up_to_height(5);
        let shown: Vec<String> = roots.iter().map(|r| r.root.to_string()).collect();
        assert_eq!(shown, vec!["a1", "a2", "2a1+a2", "a1+2a2", "3a1+2a2", "2a1+3a2"]);
    }

    #[test]
    fn weights_and_roots() {
        let a2 = ty("A2");
        assert_eq!(
            a2.weight_of_root(&RootVector(vec![1, 0])),
            Weight::from_integers(&[2, -1])
        );
        assert_eq!(
            a2.root_of_weight(&Weight::from_integers(&[1, 1])).unwrap(),
            Some(RootVector(vec![1, 1]))
        );
        let zero = Weight::zero(2);
        assert_eq!(a2.root_of_weight(&zero).unwrap(), None);
        assert_eq!(a2.root_multiple_of_weight(&zero).unwrap(), None);
        // 2(a1+a2) is a multiple but not a root
        let two_theta = a2.weight_of_root(&RootVector(vec![2, 2]));
        assert_eq!(a2.root_of_weight(&two_theta).unwrap(), None);
        let (t, b) = a2.root_multiple_of_weight(&two_theta).unwrap().unwrap();
        assert_eq!((t, b), (Rational::from_integer(2), RootVector(vec![1, 1])));
    }

    #[test]
    fn root_display() {
        assert_eq!(RootVector(vec![1, 2]).to_string(), "a1+2a2");
        assert_eq!(RootVector(vec![-1, 0, -3]).to_string(), "-a1-3a3");
        assert_eq!(RootVector(vec![0, 0]).to_string(), "0");
    }
}
