use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cartan::RootVector;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with rational coefficients in the simple-root
/// variables `a1..an`. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(m, BigRational::one());
        p
    }

    /// The linear form `sum_i beta_i a_i`.
    pub fn linear(beta: &RootVector) -> Self {
        let n = beta.rank();
        let mut p = Self::zero(n);
        for (i, &c) in beta.0.iter().enumerate() {
            if c != 0 {
                let mut m = Monomial::one(n);
                m.0[i] = 1;
                p.terms.insert(m, rat(c));
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "exponent vector has wrong length");
            p.add_term(Monomial(m), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `q` with `q * beta = self`, if it exists.
    pub fn exact_divide_linear(&self, beta: &RootVector) -> Option<MultiPoly> {
        let j = beta
            .0
            .iter()
            .position(|&c| c != 0)
            .expect("division by the zero linear form");
        if self.is_zero() {
            return Some(self.clone());
        }
        let bj = rat(beta.0[j]);
        let others: Vec<(usize, BigRational)> = beta
            .0
            .iter()
            .enumerate()
            .filter(|&(k, &c)| k != j && c != 0)
            .map(|(k, &c)| (k, rat(c)))
            .collect();
        let dmax = self.terms.keys().map(|m| m.0[j]).max().unwrap_or(0) as usize;
        // buckets[d]: terms with a_j-degree d, keyed with a_j stripped.
        let mut buckets: Vec<HashMap<Vec<u32>, BigRational>> = vec![HashMap::new(); dmax + 1];
        for (m, c) in &self.terms {
            let mut key = m.0.clone();
            let d = key[j] as usize;
            key[j] = 0;
            buckets[d].insert(key, c.clone());
        }
        let mut q = Self::zero(self.nvars);
        for d in (1..=dmax).rev() {
            let top = std::mem::take(&mut buckets[d]);
            for (key, c) in top {
                if c.is_zero() {
                    continue;
                }
                let qc = &c / &bj;
                for (k, bk) in &others {
                    let mut k2 = key.clone();
                    k2[*k] += 1;
                    let slot = buckets[d - 1].entry(k2).or_insert_with(BigRational::zero);
                    *slot -= &qc * bk;
                }
                let mut m = key;
                m[j] = (d - 1) as u32;
                q.add_term(Monomial(m), qc);
            }
        }
        if buckets[0].values().all(Zero::is_zero) {
            Some(q)
        } else {
            None
        }
    }

    /// Evaluates at an integer point modulo a prime; `None` when a
    /// coefficient denominator vanishes mod `p`.
    pub(crate) fn eval_mod(&self, point: &[u64], p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let num = mod_big(c.numer(), &pb);
            let den = mod_big(c.denom(), &pb);
            if den == 0 {
                return None;
            }
            let mut t = num as u128 * inv_mod(den, p) as u128 % p as u128;
            for (x, &e) in point.iter().zip(&m.0) {
                t = t * pow_mod(*x, e, p) as u128 % p as u128;
            }
            acc = (acc + t) % p as u128;
        }
        Some(acc as u64)
    }
}

fn mod_big(x: &BigInt, p: &BigInt) -> u64 {
    let r = ((x % p) + p) % p;
    u64::try_from(r).expect("residue fits in u64")
}

pub(crate) fn pow_mod(b: u64, mut e: u32, p: u64) -> u64 {
    let mut r: u128 = 1;
    let mut base = (b % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    r as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, (p - 2) as u32, p)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

pub(crate) fn fmt_coeff_prefix(f: &mut fmt::Formatter<'_>, c: &BigRational, first: bool, is_unit_monomial: bool) -> fmt::Result {
    let neg = c.is_negative();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else if neg {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    let a = c.abs();
    if is_unit_monomial {
        write!(f, "{a}")
    } else if !a.is_one() {
        write!(f, "{a}*")
    } else {
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let unit = m.degree() == 0;
            fmt_coeff_prefix(f, c, k == 0, unit)?;
            let mut first_var = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    f.write_str("*")?;
                }
                write!(f, "a{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                first_var = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    #[test]
    fn divide_difference_of_squares() {
        let p = &a(0).pow(2) - &a(1).pow(2);
        let q = p.exact_divide_linear(&RootVector(vec![1, 1])).unwrap();
        assert_eq!(q, &a(0) - &a(1));
    }

    #[test]
    fn non_divisible() {
        assert!(a(0).exact_divide_linear(&RootVector(vec![0, 1])).is_none());
        assert!(MultiPoly::one(2).exact_divide_linear(&RootVector(vec![1, 0])).is_none());
        let z = MultiPoly::zero(2);
        assert_eq!(z.exact_divide_linear(&RootVector(vec![2, 1])), Some(z.clone()));
    }

    #[test]
    fn non_unit_leading_coefficient() {
        let l = MultiPoly::linear(&RootVector(vec![2, 1]));
        let p = &l * &(&a(0) + &a(1));
        assert_eq!(p.exact_divide_linear(&RootVector(vec![2, 1])).unwrap(), &a(0) + &a(1));
    }

    #[test]
    fn display() {
        let p = &(&a(0).pow(2) - &a(1).scale(&BigRational::new(1.into(), 2.into()))) + &MultiPoly::constant(2, rat(-3));
        assert_eq!(p.to_string(), "a1^2 - 1/2*a2 - 3");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!((&a(0) * &a(1)).scale(&rat(-1)).to_string(), "-a1*a2");
    }

    #[test]
    fn evaluation_mod_prime() {
        let p = &(&a(0) * &a(1)) + &MultiPoly::constant(2, rat(5));
        assert_eq!(p.eval_mod(&[3, 4], 101), Some(17));
    }
}
