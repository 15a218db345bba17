use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{fmt_coeff_prefix, rat, MultiPoly};
use crate::cartan::RootVector;

/// Finite sum `sum n_lambda e^lambda` over root-lattice exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentElement {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl LaurentElement {
    pub fn zero(nvars: usize) -> Self {
        LaurentElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(&RootVector::zero(nvars), BigRational::one())
    }

    /// `c e^lambda`.
    pub fn monomial(lambda: &RootVector, c: BigRational) -> Self {
        let mut out = Self::zero(lambda.rank());
        out.add_term(lambda.0.clone(), c);
        out
    }

    /// `e^lambda`.
    pub fn exp(lambda: &RootVector) -> Self {
        Self::monomial(lambda, BigRational::one())
    }

    /// `1 - e^{-beta}`.
    pub fn one_minus_exp_neg(beta: &RootVector) -> Self {
        let mut out = Self::one(beta.rank());
        out.add_term(beta.neg().0, -BigRational::one());
        out
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, BigRational)>) -> Self {
        let mut out = Self::zero(nvars);
        for (l, c) in terms {
            assert_eq!(l.len(), nvars, "exponent vector has wrong length");
            out.add_term(l, c);
        }
        out
    }

    fn add_term(&mut self, lambda: Vec<i64>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &RootVector) -> BigRational {
        self.terms.get(&lambda.0).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    /// Applies a linear map to every exponent (Weyl action, the `*` involution).
    pub fn map_exponents(&self, f: impl Fn(&RootVector) -> RootVector) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(l, c)| (f(&RootVector(l.clone())).0, c.clone())),
        )
    }

    /// `e^lambda -> e^{-lambda}`.
    pub fn star(&self) -> Self {
        self.map_exponents(RootVector::neg)
    }

    /// `q` with `q (1 - e^{-beta}) = self`, if it exists.
    ///
    /// Writing `q = sum m_mu e^mu`, the coefficients satisfy
    /// `n_mu = m_mu - m_{mu+beta}`, so along each coset `lambda + Z beta`
    /// the quotient is the tail sum of `n` and exists iff the coset total is 0.
    pub fn exact_divide_one_minus(&self, beta: &RootVector) -> Option<Self> {
        assert!(!beta.is_zero(), "division by 1 - e^0");
        let bb: i64 = beta.0.iter().map(|x| x * x).sum();
        let mut cosets: HashMap<Vec<i64>, BTreeMap<i64, BigRational>> = HashMap::new();
        for (l, c) in &self.terms {
            let lb: i64 = l.iter().zip(&beta.0).map(|(x, y)| x * y).sum();
            let k = lb.div_euclid(bb);
            let key: Vec<i64> = l.iter().zip(&beta.0).map(|(x, y)| x - k * y).collect();
            cosets.entry(key).or_default().insert(k, c.clone());
        }
        let mut q = Self::zero(self.nvars);
        for (key, chain) in cosets {
            let (&kmin, _) = chain.iter().next().unwrap();
            let (&kmax, _) = chain.iter().next_back().unwrap();
            let mut tail = BigRational::zero();
            for k in (kmin + 1..=kmax).rev() {
                if let Some(c) = chain.get(&k) {
                    tail += c;
                }
                if !tail.is_zero() {
                    let l: Vec<i64> = key.iter().zip(&beta.0).map(|(x, y)| x + k * y).collect();
                    q.add_term(l, tail.clone());
                }
            }
            tail += &chain[&kmin];
            if !tail.is_zero() {
                return None;
            }
        }
        Some(q)
    }

    /// `(a)_l = sum n_lambda lambda^l / l!` as a polynomial in the simple roots.
    pub fn degree_part(&self, l: u32) -> MultiPoly {
        let mut acc = MultiPoly::zero(self.nvars);
        for (lambda, c) in &self.terms {
            let p = MultiPoly::linear(&RootVector(lambda.clone())).pow(l);
            acc = &acc + &p.scale(c);
        }
        acc.scale(&(BigRational::one() / factorial(l)))
    }

    /// `(l0, [a])` where `l0` is the least degree with `(a)_l0 != 0`; `None` for zero.
    pub fn lowest_term(&self) -> Option<(u32, MultiPoly)> {
        if self.is_zero() {
            return None;
        }
        let terms: Vec<(MultiPoly, &BigRational)> = self
            .terms
            .iter()
            .map(|(l, c)| (MultiPoly::linear(&RootVector(l.clone())), c))
            .collect();
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(self.nvars); terms.len()];
        // Distinct exponents make the power sums independent, so l0 < #terms.
        for l in 0..terms.len() as u32 {
            let mut acc = MultiPoly::zero(self.nvars);
            for (p, (_, c)) in powers.iter().zip(&terms) {
                acc = &acc + &p.scale(c);
            }
            if !acc.is_zero() {
                return Some((l, acc.scale(&(BigRational::one() / factorial(l)))));
            }
            for (p, (lin, _)) in powers.iter_mut().zip(&terms) {
                *p = &*p * lin;
            }
        }
        unreachable!("nonzero Laurent element with vanishing power sums")
    }
}

fn factorial(l: u32) -> BigRational {
    BigRational::from_integer((1..=l).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

impl Add for &LaurentElement {
    type Output = LaurentElement;
    fn add(self, rhs: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentElement {
    type Output = LaurentElement;
    fn sub(self, rhs: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentElement {
    type Output = LaurentElement;
    fn neg(self) -> LaurentElement {
        self.scale(&rat(-1))
    }
}

impl Mul for &LaurentElement {
    type Output = LaurentElement;
    fn mul(self, rhs: &LaurentElement) -> LaurentElement {
        let mut acc: HashMap<Vec<i64>, BigRational> = HashMap::new();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &rhs.terms {
                let l: Vec<i64> = l1.iter().zip(l2).map(|(a, b)| a + b).collect();
                *acc.entry(l).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        LaurentElement {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms.iter().rev().enumerate() {
            let unit = l.iter().all(|&x| x == 0);
            fmt_coeff_prefix(f, c, k == 0, unit)?;
            if !unit {
                write!(f, "e^({})", RootVector(l.clone()))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(l: &[i64]) -> LaurentElement {
        LaurentElement::exp(&RootVector(l.to_vec()))
    }

    #[test]
    fn division_by_one_minus() {
        let a1 = RootVector(vec![1, 0]);
        let f = LaurentElement::one_minus_exp_neg(&a1);
        assert_eq!(f.exact_divide_one_minus(&a1).unwrap(), LaurentElement::one(2));
        let g = LaurentElement::one_minus_exp_neg(&RootVector(vec![2, 0]));
        assert_eq!(g.exact_divide_one_minus(&a1).unwrap(), &e(&[0, 0]) + &e(&[-1, 0]));
        assert!(e(&[1, 0]).exact_divide_one_minus(&a1).is_none());
        let z = LaurentElement::zero(2);
        assert_eq!(z.exact_divide_one_minus(&a1).unwrap(), z);
    }

    #[test]
    fn division_recovers_products() {
        let beta = RootVector(vec![1, 1]);
        let q = &(&e(&[3, -1]) - &e(&[0, 2]).scale(&rat(5))) + &e(&[-2, -2]);
        let p = &q * &LaurentElement::one_minus_exp_neg(&beta);
        assert_eq!(p.exact_divide_one_minus(&beta).unwrap(), q);
    }

    #[test]
    fn lowest_terms() {
        let b = RootVector(vec![1, 1]);
        let (l0, p) = LaurentElement::one_minus_exp_neg(&b).lowest_term().unwrap();
        assert_eq!(l0, 1);
        assert_eq!(p, MultiPoly::linear(&b));
        let (l0, p) = e(&[3, -4]).lowest_term().unwrap();
        assert_eq!((l0, p), (0, MultiPoly::one(2)));
        assert!(LaurentElement::zero(2).lowest_term().is_none());
    }

    #[test]
    fn display() {
        let x = &e(&[0, 0]) - &e(&[-1, 0]).scale(&rat(2));
        assert_eq!(x.to_string(), "1 - 2*e^(-a1)");
    }
}
