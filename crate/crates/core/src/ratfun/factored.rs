use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::poly::{inv_mod, rat, MultiPoly};
use crate::cartan::RootVector;
use crate::error::{Error, Result};

const PRIME: u64 = 2_147_483_647;

/// `N / prod beta^m` with `N` a polynomial in the simple roots and every
/// `beta` a positive root. Kept in lowest terms: no `beta` in the
/// denominator divides `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    numerator: MultiPoly,
    denominator: BTreeMap<RootVector, u32>,
}

impl FactoredRational {
    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        FactoredRational {
            numerator: p,
            denominator: BTreeMap::new(),
        }
    }

    /// The linear form `beta`.
    pub fn root(beta: &RootVector) -> Self {
        Self::from_poly(MultiPoly::linear(beta))
    }

    /// `1 / beta`; `beta` may be negative.
    pub fn inv_root(beta: &RootVector) -> Self {
        Self::one(beta.rank()).divide_by_root(beta)
    }

    /// Builds `numerator / prod beta^m` and reduces it; roots of either sign are accepted.
    pub fn new(numerator: MultiPoly, denominator: impl IntoIterator<Item = (RootVector, u32)>) -> Self {
        let mut out = Self::from_poly(numerator);
        for (beta, m) in denominator {
            for _ in 0..m {
                out = out.divide_by_root(&beta);
            }
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    /// Denominator factors with multiplicities, all positive roots.
    pub fn denominator(&self) -> impl Iterator<Item = (&RootVector, u32)> {
        self.denominator.iter().map(|(b, &m)| (b, m))
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.denominator.is_empty() {
            self.numerator.as_constant()
        } else {
            None
        }
    }

    /// Total degree (numerator degree minus denominator degree) when homogeneous and nonzero.
    pub fn degree(&self) -> Option<i64> {
        if !self.numerator.is_homogeneous() {
            return None;
        }
        self.numerator
            .total_degree()
            .map(|d| d as i64 - self.denominator_degree() as i64)
    }

    /// True when every denominator factor appears at most once.
    pub fn is_multiplicity_free(&self) -> bool {
        self.denominator.values().all(|&m| m <= 1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        FactoredRational {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// `self / beta`.
    pub fn divide_by_root(&self, beta: &RootVector) -> Self {
        assert!(!beta.is_zero(), "division by the zero root");
        if self.is_zero() {
            return self.clone();
        }
        let (pos, sign) = if beta.is_negative() {
            (beta.neg(), -BigRational::one())
        } else {
            (beta.clone(), BigRational::one())
        };
        let mut out = self.scale(&sign);
        match out.numerator.exact_divide_linear_checked(&pos) {
            Some(q) => out.numerator = q,
            None => *out.denominator.entry(pos).or_insert(0) += 1,
        }
        out
    }

    /// `self * beta`.
    pub fn multiply_by_root(&self, beta: &RootVector) -> Self {
        let (pos, sign) = if beta.is_negative() {
            (beta.neg(), -BigRational::one())
        } else {
            (beta.clone(), BigRational::one())
        };
        let mut out = self.scale(&sign);
        match out.denominator.get_mut(&pos) {
            Some(m) => {
                *m -= 1;
                if *m == 0 {
                    out.denominator.remove(&pos);
                }
            }
            None => out.numerator = &out.numerator * &MultiPoly::linear(&pos),
        }
        out
    }

    fn with_denominator(&self, target: &BTreeMap<RootVector, u32>) -> MultiPoly {
        let mut num = self.numerator.clone();
        for (beta, &m) in target {
            let have = self.denominator.get(beta).copied().unwrap_or(0);
            for _ in have..m {
                num = &num * &MultiPoly::linear(beta);
            }
        }
        num
    }

    fn reduce(numerator: MultiPoly, mut denominator: BTreeMap<RootVector, u32>) -> Self {
        let mut numerator = numerator;
        if numerator.is_zero() {
            return Self::from_poly(numerator);
        }
        let roots: Vec<RootVector> = denominator.keys().cloned().collect();
        for beta in roots {
            while let Some(m) = denominator.get_mut(&beta) {
                match numerator.exact_divide_linear_checked(&beta) {
                    Some(q) => {
                        numerator = q;
                        *m -= 1;
                        if *m == 0 {
                            denominator.remove(&beta);
                        }
                    }
                    None => break,
                }
            }
        }
        FactoredRational {
            numerator,
            denominator,
        }
    }

    pub fn to_json(&self) -> Value {
        let num: Vec<Value> = self
            .numerator
            .terms()
            .map(|(m, c)| json!([c.to_string(), m.0]))
            .collect();
        let den: Vec<Value> = self
            .denominator
            .iter()
            .map(|(b, m)| json!([b.0, m]))
            .collect();
        json!({ "numerator": num, "denominator": den })
    }

    pub fn from_json(v: &Value, nvars: usize) -> Result<Self> {
        let bad = |what: &str| Error::parse(v.to_string(), format!("malformed rational function: {what}"));
        let num = v["numerator"].as_array().ok_or_else(|| bad("numerator"))?;
        let mut terms = Vec::new();
        for t in num {
            let c: BigRational = t[0]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("coefficient"))?;
            let exps: Vec<u32> = serde_json::from_value(t[1].clone()).map_err(|_| bad("exponents"))?;
            if exps.len() != nvars {
                return Err(bad("exponent length"));
            }
            terms.push((exps, c));
        }
        let den = v["denominator"].as_array().ok_or_else(|| bad("denominator"))?;
        let mut factors = Vec::new();
        for d in den {
            let root: Vec<i64> = serde_json::from_value(d[0].clone()).map_err(|_| bad("root"))?;
            let m: u32 = serde_json::from_value(d[1].clone()).map_err(|_| bad("multiplicity"))?;
            if root.len() != nvars || root.iter().all(|&x| x == 0) {
                return Err(bad("root"));
            }
            factors.push((RootVector(root), m));
        }
        Ok(Self::new(MultiPoly::from_terms(nvars, terms), factors))
    }
}

impl MultiPoly {
    /// Exact division by a linear form, rejecting quickly when the
    /// polynomial does not vanish at a point of the hyperplane `beta = 0`.
    pub(crate) fn exact_divide_linear_checked(&self, beta: &RootVector) -> Option<MultiPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some(point) = hyperplane_point(beta, self.len() as u64) {
            if let Some(v) = self.eval_mod(&point, PRIME) {
                if v != 0 {
                    return None;
                }
            }
        }
        self.exact_divide_linear(beta)
    }
}

fn hyperplane_point(beta: &RootVector, seed: u64) -> Option<Vec<u64>> {
    let j = beta.0.iter().position(|&c| c != 0)?;
    let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ seed.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    let mut point: Vec<u64> = (0..beta.rank())
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % PRIME
        })
        .collect();
    let to_mod = |x: i64| x.rem_euclid(PRIME as i64) as u64;
    let mut s: u128 = 0;
    for (k, (&b, &x)) in beta.0.iter().zip(&point).enumerate() {
        if k != j {
            s = (s + to_mod(b) as u128 * x as u128) % PRIME as u128;
        }
    }
    let neg_s = (PRIME as u128 - s) % PRIME as u128;
    point[j] = (neg_s * inv_mod(to_mod(beta.0[j]), PRIME) as u128 % PRIME as u128) as u64;
    Some(point)
}

impl Add for &FactoredRational {
    type Output = FactoredRational;
    fn add(self, rhs: &FactoredRational) -> FactoredRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut lcm = self.denominator.clone();
        for (b, &m) in &rhs.denominator {
            let e = lcm.entry(b.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let num = &self.with_denominator(&lcm) + &rhs.with_denominator(&lcm);
        FactoredRational::reduce(num, lcm)
    }
}

impl Sub for &FactoredRational {
    type Output = FactoredRational;
    fn sub(self, rhs: &FactoredRational) -> FactoredRational {
        self + &(-rhs)
    }
}

impl Neg for &FactoredRational {
    type Output = FactoredRational;
    fn neg(self) -> FactoredRational {
        self.scale(&rat(-1))
    }
}

impl Mul for &FactoredRational {
    type Output = FactoredRational;
    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        if self.is_zero() || rhs.is_zero() {
            return FactoredRational::zero(self.nvars());
        }
        let mut den = self.denominator.clone();
        for (b, &m) in &rhs.denominator {
            *den.entry(b.clone()).or_insert(0) += m;
        }
        FactoredRational::reduce(&self.numerator * &rhs.numerator, den)
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        if self.numerator.len() > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        f.write_str(" / ")?;
        for (b, &m) in &self.denominator {
            write!(f, "({b})")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn partial_fractions_combine() {
        // -1/(a1 a2) + 1/(a1 (a1+a2)) = -1/(a2 (a1+a2))
        let lhs = &(&FactoredRational::inv_root(&r(&[1, 0])) * &FactoredRational::inv_root(&r(&[0, 1]))).scale(&rat(-1))
            + &(&FactoredRational::inv_root(&r(&[1, 0])) * &FactoredRational::inv_root(&r(&[1, 1])));
        let rhs = (&FactoredRational::inv_root(&r(&[0, 1])) * &FactoredRational::inv_root(&r(&[1, 1]))).scale(&rat(-1));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.degree(), Some(-2));
        assert_eq!(lhs.to_string(), "-1 / (a2)(a1+a2)");
    }

    #[test]
    fn negative_roots_flip_sign() {
        let x = FactoredRational::inv_root(&r(&[-1, -1]));
        assert_eq!(x, FactoredRational::inv_root(&r(&[1, 1])).scale(&rat(-1)));
        let back = x.multiply_by_root(&r(&[-1, -1]));
        assert_eq!(back, FactoredRational::one(2));
    }

    #[test]
    fn cancellation_to_polynomial() {
        let a = FactoredRational::root(&r(&[1, 0]));
        let b = FactoredRational::root(&r(&[0, 1]));
        let prod = &a * &b;
        let q = prod.divide_by_root(&r(&[1, 0]));
        assert_eq!(q, b);
        let s = &(&a + &b).divide_by_root(&r(&[1, 1])) - &FactoredRational::one(2);
        assert!(s.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let x = &FactoredRational::inv_root(&r(&[1, 2])) + &FactoredRational::root(&r(&[3, -1])).scale(&BigRational::new(2.into(), 3.into()));
        let back = FactoredRational::from_json(&x.to_json(), 2).unwrap();
        assert_eq!(back, x);
    }
}
