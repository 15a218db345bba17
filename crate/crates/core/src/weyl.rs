//! Weyl group elements over an arbitrary generalized Cartan matrix.
//!
//! An element is stored as the integer matrix of its action on the root
//! lattice (column `c` is the image of `alpha_c`). The representation is
//! faithful for every GCM, so equality, hashing and memo keys all go through
//! the matrix. Each element also carries its canonical reduced word: peel
//! off the smallest right descent until the identity is reached, then read
//! the peeled letters backwards. Canonical words are prefix-closed.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, RwLock};

use crate::cartan::{CartanMatrix, RealRoot, RootVector, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: Vec<i64>,
    word: Vec<usize>,
    group: u64,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Canonical reduced word, 0-based letters.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn reduced_word(&self) -> ReducedWord {
        ReducedWord(self.word.clone())
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    /// The word in 1-based digit form, `e` for the identity.
    pub fn label(&self) -> String {
        format_word(&self.word)
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.matrix.hash(state);
    }
}

// Shortlex on canonical words; the word determines the element.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.group.cmp(&other.group))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Sequence of simple indices (0-based) whose product has length equal to
/// the number of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    if word.iter().any(|&i| i >= 9) {
        word.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    } else {
        word.iter().map(|i| char::from(b'1' + *i as u8)).collect()
    }
}

/// Parses `1,2,1`, `121`, `e` or the empty string into 0-based letters.
pub fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let tokens: Vec<String> = if s.contains(',') {
        s.split(',').map(|t| t.trim().to_string()).collect()
    } else {
        s.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
    };
    tokens
        .into_iter()
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(Error::parse(t.as_str(), format!("bad letter in word `{s}`"))),
        })
        .collect()
}

/// Unordered set of positive real roots, kept sorted by height.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSet(Vec<RealRoot>);

impl RootSet {
    pub fn from_roots(mut roots: Vec<RealRoot>) -> Self {
        roots.sort();
        roots.dedup();
        RootSet(roots)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &RealRoot> {
        self.0.iter()
    }

    pub fn contains(&self, root: &RootVector) -> bool {
        self.0.iter().any(|r| &r.root == root)
    }

    pub fn roots(&self) -> &[RealRoot] {
        &self.0
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, r) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

type BruhatKey = (Vec<i64>, Vec<i64>);

/// The Weyl group of a GCM, with shared memo tables.
pub struct WeylGroup {
    cartan: CartanMatrix,
    id: u64,
    simple: Vec<Vec<i64>>,
    bruhat: RwLock<HashMap<BruhatKey, bool>>,
    memo_cap: Option<usize>,
    finite: bool,
    positive: OnceLock<Option<Vec<(RealRoot, WeylElement)>>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup").field("cartan", &self.cartan).finish()
    }
}

impl WeylGroup {
    pub fn new(cartan: CartanMatrix) -> Self {
        let n = cartan.rank();
        let simple = (0..n)
            .map(|i| {
                let mut m = identity_matrix(n);
                for c in 0..n {
                    m[i * n + c] -= cartan.entry(i, c);
                }
                m
            })
            .collect();
        // FNV-1a over the entries; stable across runs and platforms.
        let mut id: u64 = 0xcbf29ce484222325;
        for &a in std::iter::once(&(n as i64)).chain(cartan.entries()) {
            for b in a.to_le_bytes() {
                id ^= b as u64;
                id = id.wrapping_mul(0x100000001b3);
            }
        }
        WeylGroup {
            finite: cartan.is_finite_type(),
            cartan,
            id,
            simple,
            bruhat: RwLock::new(HashMap::new()),
            memo_cap: None,
            positive: OnceLock::new(),
        }
    }

    /// Bounds the Bruhat memo; the table is flushed when it grows past `cap`.
    pub fn with_memo_cap(mut self, cap: Option<usize>) -> Self {
        self.memo_cap = cap;
        self
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    fn n(&self) -> usize {
        self.cartan.rank()
    }

    pub(crate) fn check(&self, w: &WeylElement) -> Result<()> {
        if w.group == self.id {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            matrix: identity_matrix(self.n()),
            word: Vec::new(),
            group: self.id,
        }
    }

    pub fn simple(&self, i: usize) -> Result<WeylElement> {
        self.cartan.check_index(i)?;
        Ok(WeylElement {
            matrix: self.simple[i].clone(),
            word: vec![i],
            group: self.id,
        })
    }

    /// Product of simple reflections; the word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let n = self.n();
        let mut m = identity_matrix(n);
        for &i in word {
            self.cartan.check_index(i)?;
            m = mat_mul(n, &m, &self.simple[i]);
        }
        Ok(self.from_matrix(m))
    }

    /// Parses a 1-based word (`121`, `1,2,1`, `e`).
    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        let letters = parse_letters(s)?;
        for &i in &letters {
            if i >= self.n() {
                return Err(Error::parse(
                    (i + 1).to_string(),
                    format!("index out of range for rank {} in word `{s}`", self.n()),
                ));
            }
        }
        self.from_word(&letters)
    }

    fn from_matrix(&self, matrix: Vec<i64>) -> WeylElement {
        let n = self.n();
        let id = identity_matrix(n);
        let mut cur = matrix.clone();
        let mut peeled = Vec::new();
        while cur != id {
            let i = (0..n)
                .find(|&i| column_negative(n, &cur, i))
                .expect("non-identity Weyl group element has a right descent");
            peeled.push(i);
            cur = mat_mul(n, &cur, &self.simple[i]);
        }
        peeled.reverse();
        WeylElement {
            matrix,
            word: peeled,
            group: self.id,
        }
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.from_matrix(mat_mul(self.n(), &a.matrix, &b.matrix)))
    }

    /// `w * r_i`.
    pub fn mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        if w.word.last() == Some(&i) {
            let mut word = w.word.clone();
            word.pop();
            return WeylElement {
                matrix: mat_mul(self.n(), &w.matrix, &self.simple[i]),
                word,
                group: self.id,
            };
        }
        self.from_matrix(mat_mul(self.n(), &w.matrix, &self.simple[i]))
    }

    /// `r_i * w`.
    pub fn simple_mul(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.from_matrix(mat_mul(self.n(), &self.simple[i], &w.matrix))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.from_word(&rev).expect("letters of a canonical word are in range")
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length()
    }

    pub fn reduced_word(&self, w: &WeylElement) -> ReducedWord {
        w.reduced_word()
    }

    /// `l(w r_i) < l(w)`, i.e. `w(alpha_i)` is negative.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        column_negative(self.n(), &w.matrix, i)
    }

    /// `l(r_i w) < l(w)`.
    pub fn is_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.simple_mul(i, w).length() < w.length()
    }

    pub fn apply_root(&self, w: &WeylElement, beta: &RootVector) -> RootVector {
        let n = self.n();
        RootVector(
            (0..n)
                .map(|r| (0..n).map(|c| w.matrix[r * n + c] * beta.0[c]).sum())
                .collect(),
        )
    }

    pub fn apply_real_root(&self, w: &WeylElement, beta: &RealRoot) -> RealRoot {
        let mut out = beta.clone();
        for &i in w.word.iter().rev() {
            out = self.cartan.reflect_real_root(i, &out);
        }
        out
    }

    pub fn apply_weight(&self, w: &WeylElement, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in w.word.iter().rev() {
            out = self.cartan.reflect_weight(i, &out);
        }
        out
    }

    /// Reflection `x -> x - <x, beta^vee> beta` as a group element.
    pub fn reflection(&self, beta: &RealRoot) -> WeylElement {
        let n = self.n();
        let mut m = identity_matrix(n);
        for c in 0..n {
            let f = self.cartan.pair_simple_root(c, &beta.coroot);
            for r in 0..n {
                m[r * n + c] -= beta.root.0[r] * f;
            }
        }
        self.from_matrix(m)
    }

    /// Bruhat order by the left-descent recursion, memoized on matrix pairs.
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> Result<bool> {
        self.check(v)?;
        self.check(w)?;
        Ok(self.leq(v, w))
    }

    fn leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        if v.length() > w.length() {
            return false;
        }
        if v.is_identity() {
            return true;
        }
        if v.length() == w.length() {
            return v == w;
        }
        let key = (v.matrix.clone(), w.matrix.clone());
        if let Some(&hit) = self.bruhat.read().expect("bruhat memo poisoned").get(&key) {
            return hit;
        }
        let i = w.word[0];
        let sw = self.simple_mul(i, w);
        let sv = self.simple_mul(i, v);
        let result = if sv.length() < v.length() {
            self.leq(&sv, &sw)
        } else {
            self.leq(v, &sw)
        };
        let mut memo = self.bruhat.write().expect("bruhat memo poisoned");
        if self.memo_cap.is_some_and(|cap| memo.len() >= cap) {
            memo.clear();
        }
        memo.insert(key, result);
        result
    }

    /// `{v : v <= w}` by subword closure along the canonical word, sorted shortlex.
    pub fn interval_below(&self, w: &WeylElement) -> Vec<WeylElement> {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity());
        for &i in &w.word {
            let snapshot = out.len();
            for k in 0..snapshot {
                let y = self.mul_simple(&out[k], i);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
        }
        out.sort();
        out
    }

    /// `{theta : v <= theta <= w}`, sorted shortlex.
    pub fn interval(&self, v: &WeylElement, w: &WeylElement) -> Result<Vec<WeylElement>> {
        self.check(v)?;
        self.check(w)?;
        Ok(self
            .interval_below(w)
            .into_iter()
            .filter(|t| self.leq(v, t))
            .collect())
    }

    /// If `t` is a reflection, its positive real root with coroot.
    pub fn reflection_root(&self, t: &WeylElement) -> Option<RealRoot> {
        if t.length() % 2 == 0 {
            return None;
        }
        let n = self.n();
        // t - 1 must have rank one.
        let d: Vec<i64> = (0..n * n)
            .map(|k| t.matrix[k] - i64::from(k / n == k % n))
            .collect();
        let pivot = d.iter().position(|&x| x != 0)?;
        let (pr, pc) = (pivot / n, pivot % n);
        for r in 0..n {
            for c in 0..n {
                if d[r * n + c] * d[pr * n + pc] != d[r * n + pc] * d[pr * n + c] {
                    return None;
                }
            }
        }
        // Conjugate by left descents down to a simple reflection.
        let mut cur = t.clone();
        let mut conj = Vec::new();
        while cur.length() > 1 {
            let i = cur.word[0];
            let next = self.mul_simple(&self.simple_mul(i, &cur), i);
            if next.length() + 2 != cur.length() {
                return None;
            }
            conj.push(i);
            cur = next;
        }
        let mut beta = RealRoot::simple(n, cur.word[0]);
        for &i in conj.iter().rev() {
            beta = self.cartan.reflect_real_root(i, &beta);
        }
        if !beta.is_positive() || &self.reflection(&beta) != t {
            return None;
        }
        Some(beta)
    }

    /// `Delta_+ cap w Delta_-`, the roots `gamma` with `w^{-1} gamma < 0`.
    pub fn inversion_set(&self, w: &WeylElement) -> RootSet {
        let n = self.n();
        let mut prefix = self.identity();
        let mut roots = Vec::with_capacity(w.length());
        for &i in &w.word {
            roots.push(self.apply_real_root(&prefix, &RealRoot::simple(n, i)));
            prefix = self.mul_simple(&prefix, i);
        }
        RootSet::from_roots(roots)
    }

    fn positive_with_reflections(&self) -> Option<&[(RealRoot, WeylElement)]> {
        self.positive
            .get_or_init(|| {
                self.cartan.positive_roots().ok().map(|roots| {
                    roots
                        .into_iter()
                        .map(|r| {
                            let t = self.reflection(&r);
                            (r, t)
                        })
                        .collect()
                })
            })
            .as_deref()
    }

    /// All positive roots. Finite type only.
    pub fn positive_roots(&self) -> Result<Vec<RealRoot>> {
        self.positive_with_reflections()
            .map(|p| p.iter().map(|(r, _)| r.clone()).collect())
            .ok_or(Error::NotFiniteType("positive root enumeration"))
    }

    /// `S(w, v) = {alpha > 0 : v r_alpha <= w}`. Filters `Delta_+` in finite
    /// type, otherwise recognizes reflections in `v^{-1} [e, w]`.
    pub fn s_set(&self, w: &WeylElement, v: &WeylElement) -> Result<RootSet> {
        if self.is_finite() {
            self.s_set_by_roots(w, v)
        } else {
            self.s_set_by_interval(w, v)
        }
    }

    pub fn s_set_by_roots(&self, w: &WeylElement, v: &WeylElement) -> Result<RootSet> {
        self.check(w)?;
        self.check(v)?;
        let roots = self
            .positive_with_reflections()
            .ok_or(Error::NotFiniteType("S(w,v) by root filtering"))?;
        Ok(RootSet::from_roots(
            roots
                .iter()
                .filter(|(_, t)| {
                    let vt = self.from_matrix(mat_mul(self.n(), &v.matrix, &t.matrix));
                    self.leq(&vt, w)
                })
                .map(|(r, _)| r.clone())
                .collect(),
        ))
    }

    pub fn s_set_by_interval(&self, w: &WeylElement, v: &WeylElement) -> Result<RootSet> {
        self.check(w)?;
        self.check(v)?;
        let v_inv = self.inverse(v);
        Ok(RootSet::from_roots(
            self.interval_below(w)
                .iter()
                .filter_map(|u| {
                    let t = self.from_matrix(mat_mul(self.n(), &v_inv.matrix, &u.matrix));
                    self.reflection_root(&t)
                })
                .collect(),
        ))
    }

    /// Root-filtering `S(w, v)` over real roots of bounded height; usable on any GCM.
    pub fn s_set_bounded(&self, w: &WeylElement, v: &WeylElement, max_height: i64) -> Result<RootSet> {
        self.check(w)?;
        self.check(v)?;
        Ok(RootSet::from_roots(
            self.cartan
                .real_roots_up_to_height(max_height)
                .into_iter()
                .filter(|r| {
                    let vt = self.from_matrix(mat_mul(
                        self.n(),
                        &v.matrix,
                        &self.reflection(r).matrix,
                    ));
                    self.leq(&vt, w)
                })
                .collect(),
        ))
    }

    /// Every reduced word of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Vec<usize>> {
        let mut memo: HashMap<WeylElement, Vec<Vec<usize>>> = HashMap::new();
        let mut out = self.reduced_words_memo(w, &mut memo);
        out.sort();
        out
    }

    fn reduced_words_memo(
        &self,
        w: &WeylElement,
        memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        if let Some(hit) = memo.get(w) {
            return hit.clone();
        }
        let mut out = Vec::new();
        for i in 0..self.n() {
            if self.is_right_descent(w, i) {
                for mut word in self.reduced_words_memo(&self.mul_simple(w, i), memo) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }

    /// The longest element, by greedy ascent. Finite type only.
    pub fn longest_element(&self) -> Result<WeylElement> {
        if !self.is_finite() {
            return Err(Error::NotFiniteType("the longest element"));
        }
        let mut w = self.identity();
        while let Some(i) = (0..self.n()).find(|&i| !self.is_right_descent(&w, i)) {
            w = self.mul_simple(&w, i);
        }
        Ok(w)
    }

    /// Every element of a finite Weyl group, sorted shortlex.
    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        if !self.is_finite() {
            return Err(Error::NotFiniteType("element enumeration"));
        }
        Ok(self.elements_up_to_length(usize::MAX))
    }

    /// All elements of length at most `max_length`, sorted shortlex.
    pub fn elements_up_to_length(&self, max_length: usize) -> Vec<WeylElement> {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut out = layer.clone();
        let mut len = 0;
        while len < max_length && !layer.is_empty() {
            let mut next = Vec::new();
            for x in &layer {
                for i in 0..self.n() {
                    if self.is_right_descent(x, i) {
                        continue;
                    }
                    let y = self.mul_simple(x, i);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
            len += 1;
        }
        out.sort();
        out
    }
}

/// Shared handle used throughout the crate.
pub type Group = Arc<WeylGroup>;

fn identity_matrix(n: usize) -> Vec<i64> {
    (0..n * n).map(|k| i64::from(k / n == k % n)).collect()
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

fn column_negative(n: usize, m: &[i64], c: usize) -> bool {
    (0..n).all(|r| m[r * n + c] <= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{Family, FiniteType};

    fn group(s: &str) -> WeylGroup {
        let t: FiniteType = s.parse().unwrap();
        WeylGroup::new(CartanMatrix::finite(t.family, t.rank).unwrap())
    }

    fn affine_a1() -> WeylGroup {
        WeylGroup::new(CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap())
    }

    #[test]
    fn words_and_identity() {
        let g = group("C2");
        assert!(g.parse_word("").unwrap().is_identity());
        assert!(g.parse_word("11").unwrap().is_identity());
        assert_eq!(g.parse_word("1212").unwrap(), g.parse_word("2,1,2,1").unwrap());
        assert_eq!(g.parse_word("121").unwrap().label(), "121");
        assert!(g.parse_word("13").is_err());
        assert!(g.parse_word("1x").is_err());
        assert!(g.from_word(&[5]).is_err());
    }

    #[test]
    fn longest_elements() {
        assert_eq!(group("A1").longest_element().unwrap().label(), "1");
        let a2 = group("A2");
        let w0 = a2.longest_element().unwrap();
        assert_eq!(w0.length(), 3);
        assert!(a2.mul(&w0, &w0).unwrap().is_identity());
        let c2 = group("C2");
        let w0 = c2.longest_element().unwrap();
        assert_eq!(w0.length(), 4);
        assert_eq!(w0.matrix(), &[-1, 0, 0, -1]);
        assert_eq!(group("G2").longest_element().unwrap().length(), 6);
        assert!(affine_a1().longest_element().is_err());
    }

    #[test]
    fn group_orders() {
        for (s, order) in [("A2", 6), ("C2", 8), ("G2", 12), ("A3", 24), ("B3", 48)] {
            assert_eq!(group(s).elements().unwrap().len(), order, "{s}");
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = group("C2");
        let e = g.identity();
        let r1 = g.parse_word("1").unwrap();
        let r2 = g.parse_word("2").unwrap();
        let w = g.parse_word("121").unwrap();
        assert!(g.bruhat_leq(&e, &w).unwrap());
        assert!(g.bruhat_leq(&r1, &w).unwrap());
        assert!(!g.bruhat_leq(&r2, &r1).unwrap());
        let other = group("A2");
        assert!(matches!(
            g.bruhat_leq(&e, &other.identity()),
            Err(Error::MixedGroups)
        ));
    }

    #[test]
    fn intervals() {
        let g = group("C2");
        let w = g.parse_word("121").unwrap();
        let labels: Vec<String> = g.interval_below(&w).iter().map(|x| x.label()).collect();
        assert_eq!(labels, vec!["e", "1", "2", "12", "21", "121"]);
        assert_eq!(g.interval_below(&g.identity()).len(), 1);
        let a2 = group("A2");
        assert_eq!(a2.interval_below(&a2.longest_element().unwrap()).len(), 6);
    }

    #[test]
    fn reflections_recognized() {
        let a2 = group("A2");
        let r1 = a2.parse_word("1").unwrap();
        let b = a2.reflection_root(&r1).unwrap();
        assert_eq!(b, RealRoot::simple(2, 0));
        let t = a2.parse_word("121").unwrap();
        assert_eq!(a2.reflection_root(&t).unwrap().root, RootVector(vec![1, 1]));
        assert!(a2.reflection_root(&a2.parse_word("12").unwrap()).is_none());
        let a1a1 = WeylGroup::new(CartanMatrix::new(vec![vec![2, 0], vec![0, 2]]).unwrap());
        assert!(a1a1.reflection_root(&a1a1.parse_word("12").unwrap()).is_none());
        // coroots of non-simply-laced reflections come out right
        let c2 = group("C2");
        for r in c2.positive_roots().unwrap() {
            let t = c2.reflection(&r);
            assert_eq!(c2.reflection_root(&t).unwrap(), r);
        }
    }

    #[test]
    fn s_sets() {
        let c2 = group("C2");
        let w = c2.parse_word("121").unwrap();
        let e = c2.identity();
        assert_eq!(c2.s_set(&w, &e).unwrap().len(), 3);
        assert_eq!(c2.s_set(&w, &w).unwrap(), c2.inversion_set(&w));
        assert_eq!(c2.s_set_by_interval(&w, &e).unwrap(), c2.s_set_by_roots(&w, &e).unwrap());
    }

    #[test]
    fn affine_s_set_matches_bounded_filter() {
        let g = affine_a1();
        for w in g.elements_up_to_length(5) {
            for v in g.interval_below(&w) {
                let by_interval = g.s_set(&w, &v).unwrap();
                let bounded = g.s_set_bounded(&w, &v, 40).unwrap();
                assert_eq!(by_interval, bounded, "w={w} v={v}");
                assert!(by_interval.len() >= w.length());
            }
        }
    }

    #[test]
    fn family_check() {
        let g = WeylGroup::new(CartanMatrix::finite(Family::D, 4).unwrap());
        assert_eq!(g.elements().unwrap().len(), 192);
    }
}
