use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use super::factored::FactoredRational;
use super::laurent::LaurentElement;
use super::poly::rat;
use crate::cartan::RootVector;
use crate::error::{Error, Result};

/// `N / prod (1 - e^{-beta})^m` with `N` a Laurent polynomial and every `beta`
/// a positive root.
#[derive(Clone, Debug)]
pub struct CharFraction {
    numerator: LaurentElement,
    denominator: BTreeMap<RootVector, u32>,
}

impl CharFraction {
    pub fn zero(nvars: usize) -> Self {
        Self::from_laurent(LaurentElement::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_laurent(LaurentElement::one(nvars))
    }

    pub fn from_laurent(n: LaurentElement) -> Self {
        CharFraction {
            numerator: n,
            denominator: BTreeMap::new(),
        }
    }

    /// `1 / (1 - e^{-gamma})` for a root `gamma` of either sign.
    pub fn inv_one_minus(gamma: &RootVector) -> Self {
        Self::one(gamma.rank()).divide_one_minus(gamma)
    }

    pub fn new(numerator: LaurentElement, denominator: impl IntoIterator<Item = (RootVector, u32)>) -> Self {
        let mut out = Self::from_laurent(numerator);
        for (beta, m) in denominator {
            for _ in 0..m {
                out = out.divide_one_minus(&beta);
            }
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &LaurentElement {
        &self.numerator
    }

    pub fn denominator(&self) -> impl Iterator<Item = (&RootVector, u32)> {
        self.denominator.iter().map(|(b, &m)| (b, m))
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CharFraction {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// `self / (1 - e^{-gamma})`.
    ///
    /// For negative `gamma = -beta`, `1 - e^{beta} = -e^{beta} (1 - e^{-beta})`.
    pub fn divide_one_minus(&self, gamma: &RootVector) -> Self {
        assert!(!gamma.is_zero(), "division by 1 - e^0");
        if self.is_zero() {
            return self.clone();
        }
        let mut num = self.numerator.clone();
        let beta = if gamma.is_negative() {
            let beta = gamma.neg();
            num = &num * &LaurentElement::monomial(&gamma.clone(), -BigRational::one());
            beta
        } else {
            gamma.clone()
        };
        match num.exact_divide_one_minus(&beta) {
            Some(q) => CharFraction {
                numerator: q,
                denominator: self.denominator.clone(),
            },
            None => {
                let mut den = self.denominator.clone();
                *den.entry(beta).or_insert(0) += 1;
                CharFraction {
                    numerator: num,
                    denominator: den,
                }
            }
        }
    }

    fn reduce(mut numerator: LaurentElement, mut denominator: BTreeMap<RootVector, u32>) -> Self {
        if numerator.is_zero() {
            return Self::from_laurent(numerator);
        }
        let roots: Vec<RootVector> = denominator.keys().cloned().collect();
        for beta in roots {
            while let Some(m) = denominator.get_mut(&beta) {
                match numerator.exact_divide_one_minus(&beta) {
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
        CharFraction {
            numerator,
            denominator,
        }
    }

    fn with_denominator(&self, target: &BTreeMap<RootVector, u32>) -> LaurentElement {
        let mut num = self.numerator.clone();
        for (beta, &m) in target {
            let have = self.denominator.get(beta).copied().unwrap_or(0);
            for _ in have..m {
                num = &num * &LaurentElement::one_minus_exp_neg(beta);
            }
        }
        num
    }

    /// The involution `e^lambda -> e^{-lambda}`.
    pub fn star(&self) -> Self {
        let mut num = self.numerator.star();
        for (beta, &m) in &self.denominator {
            let factor = LaurentElement::monomial(&beta.neg(), -BigRational::one());
            for _ in 0..m {
                num = &num * &factor;
            }
        }
        CharFraction::reduce(num, self.denominator.clone())
    }

    /// `[N] / prod beta^m`: the lowest-degree part of the expansion.
    pub fn lowest_term(&self) -> Option<FactoredRational> {
        let (_, p) = self.numerator.lowest_term()?;
        Some(FactoredRational::new(
            p,
            self.denominator.iter().map(|(b, &m)| (b.clone(), m)),
        ))
    }

    /// Order of the pole at the origin: `sum m - l0(N)`.
    pub fn pole_order(&self) -> Option<i64> {
        let (l0, _) = self.numerator.lowest_term()?;
        Some(self.denominator.values().sum::<u32>() as i64 - l0 as i64)
    }

    pub fn to_json(&self) -> Value {
        let num: Vec<Value> = self
            .numerator
            .terms()
            .map(|(l, c)| json!([c.to_string(), l]))
            .collect();
        let den: Vec<Value> = self
            .denominator
            .iter()
            .map(|(b, m)| json!([b.0, m]))
            .collect();
        json!({ "numerator": num, "denominator": den })
    }

    pub fn from_json(v: &Value, nvars: usize) -> Result<Self> {
        let bad = |what: &str| Error::parse(v.to_string(), format!("malformed character fraction: {what}"));
        let num = v["numerator"].as_array().ok_or_else(|| bad("numerator"))?;
        let mut terms = Vec::new();
        for t in num {
            let c: BigRational = t[0]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("coefficient"))?;
            let exps: Vec<i64> = serde_json::from_value(t[1].clone()).map_err(|_| bad("exponents"))?;
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
        Ok(Self::new(LaurentElement::from_terms(nvars, terms), factors))
    }
}

impl PartialEq for CharFraction {
    fn eq(&self, other: &Self) -> bool {
        let mut lcm = self.denominator.clone();
        for (b, &m) in &other.denominator {
            let e = lcm.entry(b.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        self.with_denominator(&lcm) == other.with_denominator(&lcm)
    }
}

impl Eq for CharFraction {}

impl Add for &CharFraction {
    type Output = CharFraction;
    fn add(self, rhs: &CharFraction) -> CharFraction {
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
        CharFraction::reduce(num, lcm)
    }
}

impl Sub for &CharFraction {
    type Output = CharFraction;
    fn sub(self, rhs: &CharFraction) -> CharFraction {
        self + &(-rhs)
    }
}

impl Neg for &CharFraction {
    type Output = CharFraction;
    fn neg(self) -> CharFraction {
        self.scale(&rat(-1))
    }
}

impl Mul for &CharFraction {
    type Output = CharFraction;
    fn mul(self, rhs: &CharFraction) -> CharFraction {
        let mut den = self.denominator.clone();
        for (b, &m) in &rhs.denominator {
            *den.entry(b.clone()).or_insert(0) += m;
        }
        CharFraction::reduce(&self.numerator * &rhs.numerator, den)
    }
}

impl fmt::Display for CharFraction {
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
            write!(f, "(1 - e^({}))", b.neg())?;
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
    fn quotient_reduces_to_laurent() {
        let a1 = r(&[1, 0]);
        let x = CharFraction::from_laurent(LaurentElement::one_minus_exp_neg(&r(&[2, 0]))).divide_one_minus(&a1);
        let expected = &LaurentElement::one(2) + &LaurentElement::exp(&r(&[-1, 0]));
        assert_eq!(x.numerator(), &expected);
        assert_eq!(x.denominator().count(), 0);
    }

    #[test]
    fn star_of_simple_inverse() {
        // star(1/(1 - e^{-a})) = 1/(1 - e^{a}) = -e^{-a}/(1 - e^{-a})
        let a = r(&[0, 1]);
        let x = CharFraction::inv_one_minus(&a).star();
        assert_eq!(x, CharFraction::inv_one_minus(&a.neg()));
        let low = x.lowest_term().unwrap();
        assert_eq!(low, FactoredRational::inv_root(&a).scale(&rat(-1)));
        assert_eq!(x.pole_order(), Some(1));
        assert_eq!(x.star(), CharFraction::inv_one_minus(&a));
    }

    #[test]
    fn lowest_term_of_one_minus_is_root() {
        let b = r(&[1, 1]);
        let x = CharFraction::from_laurent(LaurentElement::one_minus_exp_neg(&b));
        assert_eq!(x.lowest_term().unwrap(), FactoredRational::root(&b));
        assert_eq!(x.pole_order(), Some(-1));
    }

    #[test]
    fn equality_across_denominators() {
        let a = r(&[1, 0]);
        let b = r(&[0, 1]);
        let x = CharFraction::inv_one_minus(&a);
        let y = CharFraction::new(LaurentElement::one_minus_exp_neg(&b), [(a.clone(), 1), (b, 1)]);
        assert_eq!(x, y);
    }
}
