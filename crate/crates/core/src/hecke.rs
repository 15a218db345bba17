//! Rows of `x_w` and `y_w` in the delta basis.
//!
//! Every row stores coefficients with scalars on the left: the row of `x_w`
//! maps `v` to the coefficient `q` of `q * delta_v`. The index-level
//! accessors [`NilHecke::c`] and [`NilHecke::b`] translate to the matrix
//! convention `x_{w^{-1}} = sum_v c(w, v) delta_{v^{-1}}`.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::ratfun::{CharFraction, FactoredRational, LaurentElement};
use crate::weyl::{format_word, Group, WeylElement};

/// Version tag for JSON output and cached rows.
pub const SCHEMA: u32 = 1;

/// Coefficient field of a row: `Q(h)` for `x_w`, `Q(T)` for `y_w`.
pub trait Coefficient: Clone + PartialEq + Send + Sync + 'static {
    const KIND: &'static str;
    fn zero(nvars: usize) -> Self;
    fn one(nvars: usize) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    /// The multiplier contributed by one simple factor at `v`:
    /// division by `-v(alpha_i)` for `x`, by `1 - e^{-v(alpha_i)}` for `y`.
    fn step(&self, v_alpha: &RootVector) -> Self;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value, nvars: usize) -> Result<Self>;
}

impl Coefficient for FactoredRational {
    const KIND: &'static str = "x";
    fn zero(nvars: usize) -> Self {
        FactoredRational::zero(nvars)
    }
    fn one(nvars: usize) -> Self {
        FactoredRational::one(nvars)
    }
    fn is_zero(&self) -> bool {
        FactoredRational::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn step(&self, v_alpha: &RootVector) -> Self {
        self.divide_by_root(&v_alpha.neg())
    }
    fn to_json(&self) -> Value {
        FactoredRational::to_json(self)
    }
    fn from_json(v: &Value, nvars: usize) -> Result<Self> {
        FactoredRational::from_json(v, nvars)
    }
}

impl Coefficient for CharFraction {
    const KIND: &'static str = "y";
    fn zero(nvars: usize) -> Self {
        CharFraction::zero(nvars)
    }
    fn one(nvars: usize) -> Self {
        CharFraction::one(nvars)
    }
    fn is_zero(&self) -> bool {
        CharFraction::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn step(&self, v_alpha: &RootVector) -> Self {
        self.divide_one_minus(v_alpha)
    }
    fn to_json(&self) -> Value {
        CharFraction::to_json(self)
    }
    fn from_json(v: &Value, nvars: usize) -> Result<Self> {
        CharFraction::from_json(v, nvars)
    }
}

/// The nonzero delta-coefficients of one element, sorted shortlex by `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct Row<T> {
    nvars: usize,
    w: WeylElement,
    coeffs: BTreeMap<WeylElement, T>,
}

/// Row of `x_w` over `Q(h)`.
pub type NilHeckeRow = Row<FactoredRational>;
/// Row of `y_w` over `Q(T)`.
pub type HeckeRowB = Row<CharFraction>;

impl<T: Coefficient> Row<T> {
    /// The element whose row this is; for a product along a non-reduced
    /// word it is the Demazure product of the word.
    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    /// Coefficient of `delta_v`; `None` means zero.
    pub fn get(&self, v: &WeylElement) -> Option<&T> {
        self.coeffs.get(v)
    }

    pub fn coefficient(&self, v: &WeylElement) -> T {
        self.coeffs
            .get(v)
            .cloned()
            .unwrap_or_else(|| T::zero(self.nvars))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &T)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &WeylElement> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(v, c)| json!({ "v": v.word(), "value": c.to_json() }))
            .collect();
        json!({ "schema": SCHEMA, "kind": T::KIND, "w": self.w.word(), "entries": entries })
    }
}

type Memo<T> = RwLock<HashMap<WeylElement, Arc<Row<T>>>>;

/// Computes and memoizes rows of `x_w` and `y_w` for one Weyl group.
pub struct NilHecke {
    group: Group,
    x_memo: Memo<FactoredRational>,
    y_memo: Memo<CharFraction>,
    memo_cap: Option<usize>,
    cache_dir: Option<PathBuf>,
}

impl NilHecke {
    pub fn new(group: Group) -> Self {
        NilHecke {
            group,
            x_memo: RwLock::new(HashMap::new()),
            y_memo: RwLock::new(HashMap::new()),
            memo_cap: None,
            cache_dir: None,
        }
    }

    /// Flushes each in-memory memo once it holds `cap` rows.
    pub fn with_memo_cap(mut self, cap: Option<usize>) -> Self {
        self.memo_cap = cap;
        self
    }

    /// Persists finished rows as JSON files under `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    fn nvars(&self) -> usize {
        self.group.rank()
    }

    /// Row of `x_w`, built along the canonical reduced word.
    pub fn expand_x(&self, w: &WeylElement) -> Result<Arc<NilHeckeRow>> {
        self.expand(&self.x_memo, w)
    }

    /// Row of `y_w`, built along the canonical reduced word.
    pub fn expand_y(&self, w: &WeylElement) -> Result<Arc<HeckeRowB>> {
        self.expand(&self.y_memo, w)
    }

    fn expand<T: Coefficient>(&self, memo: &Memo<T>, w: &WeylElement) -> Result<Arc<Row<T>>> {
        self.group.check(w)?;
        if let Some(row) = memo.read().expect("row memo poisoned").get(w) {
            return Ok(row.clone());
        }
        if let Some(row) = self.load::<T>(w)? {
            let row = Arc::new(row);
            self.remember(memo, w, row.clone());
            return Ok(row);
        }
        let row = self.expand_uncached(memo, w);
        self.store(&row)?;
        Ok(row)
    }

    fn expand_uncached<T: Coefficient>(&self, memo: &Memo<T>, w: &WeylElement) -> Arc<Row<T>> {
        // Find the longest memoized prefix of the canonical word.
        let word = w.word();
        let mut k = word.len();
        let mut start = None;
        {
            let read = memo.read().expect("row memo poisoned");
            while k > 0 {
                let prefix = self
                    .group
                    .from_word(&word[..k])
                    .expect("canonical letters are in range");
                if let Some(row) = read.get(&prefix) {
                    start = Some(row.clone());
                    break;
                }
                k -= 1;
            }
        }
        let mut row = start.unwrap_or_else(|| Arc::new(self.unit_row()));
        for &i in &word[k..] {
            let next = Arc::new(self.extend(&row, i));
            self.remember(memo, next.w(), next.clone());
            row = next;
        }
        row
    }

    fn remember<T>(&self, memo: &Memo<T>, w: &WeylElement, row: Arc<Row<T>>) {
        let mut table = memo.write().expect("row memo poisoned");
        if self.memo_cap.is_some_and(|cap| table.len() >= cap) {
            table.clear();
        }
        table.entry(w.clone()).or_insert(row);
    }

    fn unit_row<T: Coefficient>(&self) -> Row<T> {
        let e = self.group.identity();
        Row {
            nvars: self.nvars(),
            w: e.clone(),
            coeffs: BTreeMap::from([(e, T::one(self.nvars()))]),
        }
    }

    /// Right multiplication of a row by the simple factor `x_{r_i}` (or `y_{r_i}`):
    /// `new(v) = (old(v) + old(v r_i)) / (-v alpha_i)`, respectively
    /// `/ (1 - e^{-v alpha_i})`.
    pub fn extend<T: Coefficient>(&self, row: &Row<T>, i: usize) -> Row<T> {
        let g = &self.group;
        let n = self.nvars();
        let mut sums: BTreeMap<WeylElement, T> = BTreeMap::new();
        for (v, c) in &row.coeffs {
            for target in [v.clone(), g.mul_simple(v, i)] {
                match sums.get_mut(&target) {
                    Some(s) => *s = s.plus(c),
                    None => {
                        sums.insert(target, c.clone());
                    }
                }
            }
        }
        let alpha = RootVector::simple(n, i);
        let coeffs = sums
            .into_iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|(v, s)| {
                let va = g.apply_root(&v, &alpha);
                let c = s.step(&va);
                (v, c)
            })
            .collect();
        let w = if g.is_right_descent(&row.w, i) {
            row.w.clone()
        } else {
            g.mul_simple(&row.w, i)
        };
        Row {
            nvars: n,
            w,
            coeffs,
        }
    }

    /// Literal product `x_{i_1} ... x_{i_p}`; zero when the word is not reduced.
    pub fn x_word(&self, word: &[usize]) -> Result<NilHeckeRow> {
        self.word_product(word)
    }

    /// Literal product `y_{i_1} ... y_{i_p}`.
    pub fn y_word(&self, word: &[usize]) -> Result<HeckeRowB> {
        self.word_product(word)
    }

    fn word_product<T: Coefficient>(&self, word: &[usize]) -> Result<Row<T>> {
        let mut row = self.unit_row();
        for &i in word {
            self.group.cartan().check_index(i)?;
            row = self.extend(&row, i);
        }
        Ok(row)
    }

    /// `c(w, v)`: the coefficient of `delta_{v^{-1}}` in `x_{w^{-1}}`.
    pub fn c(&self, w: &WeylElement, v: &WeylElement) -> Result<FactoredRational> {
        let row = self.expand_x(&self.group.inverse(w))?;
        Ok(row.coefficient(&self.group.inverse(v)))
    }

    /// `b(w, v)`: the coefficient of `delta_{v^{-1}}` in `y_{w^{-1}}`.
    pub fn b(&self, w: &WeylElement, v: &WeylElement) -> Result<CharFraction> {
        let row = self.expand_y(&self.group.inverse(w))?;
        Ok(row.coefficient(&self.group.inverse(v)))
    }

    /// Row of `x_w` for `w` the product of a reduced `word`, as a sum over subwords.
    /// Exponential in the word length.
    pub fn subword_x_row(&self, word: &[usize]) -> Result<NilHeckeRow> {
        let mut row: Row<FactoredRational> = self.subword_row(word, |acc: &FactoredRational, root| acc.divide_by_root(root))?;
        if word.len() % 2 == 1 {
            for c in row.coeffs.values_mut() {
                *c = -&*c;
            }
        }
        Ok(row)
    }

    /// Row of `y_w` for `w` the product of a reduced `word`, as a sum over subwords.
    pub fn subword_y_row(&self, word: &[usize]) -> Result<HeckeRowB> {
        self.subword_row(word, |acc: &CharFraction, root| acc.divide_one_minus(root))
    }

    /// Single entry of [`Self::subword_x_row`]: the coefficient of `delta_v`.
    pub fn subword_c(&self, word: &[usize], v: &WeylElement) -> Result<FactoredRational> {
        Ok(self.subword_x_row(word)?.coefficient(v))
    }

    /// Single entry of [`Self::subword_y_row`].
    pub fn subword_b(&self, word: &[usize], v: &WeylElement) -> Result<CharFraction> {
        Ok(self.subword_y_row(word)?.coefficient(v))
    }

    fn subword_row<T: Coefficient>(&self, word: &[usize], divide: impl Fn(&T, &RootVector) -> T) -> Result<Row<T>> {
        let g = &self.group;
        let w = g.from_word(word)?;
        if w.length() != word.len() {
            return Err(Error::NotReduced(format_word(word)));
        }
        let n = self.nvars();
        // Depth-first over 0/1 choices, carrying the prefix product and partial term.
        let mut sums: BTreeMap<WeylElement, T> = BTreeMap::new();
        let mut stack: Vec<(usize, WeylElement, T)> = vec![(0, g.identity(), T::one(n))];
        while let Some((k, u, acc)) = stack.pop() {
            if k == word.len() {
                match sums.get_mut(&u) {
                    Some(s) => *s = s.plus(&acc),
                    None => {
                        sums.insert(u, acc);
                    }
                }
                continue;
            }
            let i = word[k];
            let alpha = RootVector::simple(n, i);
            for u_next in [u.clone(), g.mul_simple(&u, i)] {
                let root = g.apply_root(&u_next, &alpha);
                stack.push((k + 1, u_next, divide(&acc, &root)));
            }
        }
        Ok(Row {
            nvars: n,
            w,
            coeffs: sums.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// The operator `f -> (f - e^{-alpha_i} r_i f) / (1 - e^{-alpha_i})`.
    pub fn demazure_step(&self, i: usize, f: &LaurentElement) -> Result<LaurentElement> {
        let cartan = self.group.cartan();
        cartan.check_index(i)?;
        let alpha = RootVector::simple(self.nvars(), i);
        let reflected = f.map_exponents(|l| cartan.reflect_root(i, l));
        let shifted = &reflected * &LaurentElement::exp(&alpha.neg());
        (f - &shifted).exact_divide_one_minus(&alpha).ok_or_else(|| {
            Error::Invariant(format!("Demazure division by 1 - e^(-a{}) failed", i + 1))
        })
    }

    /// Action of `y_w` on `R(T)`: the simple operators along a reduced word,
    /// rightmost first.
    pub fn demazure_apply(&self, w: &WeylElement, f: &LaurentElement) -> Result<LaurentElement> {
        let mut out = f.clone();
        for &i in w.word().iter().rev() {
            out = self.demazure_step(i, &out)?;
        }
        Ok(out)
    }

    fn cache_path<T: Coefficient>(&self, w: &WeylElement) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let mut h = Sha256::new();
        h.update(self.group.cartan().to_text().as_bytes());
        h.update(format!("\n{}\n{}\n{}", T::KIND, format_word(w.word()), SCHEMA).as_bytes());
        Some(dir.join(format!("{}.json", hex::encode(h.finalize()))))
    }

    fn load<T: Coefficient>(&self, w: &WeylElement) -> Result<Option<Row<T>>> {
        let Some(path) = self.cache_path::<T>(w) else {
            return Ok(None);
        };
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let v: Value = serde_json::from_str(&text)?;
        if v["schema"] != json!(SCHEMA) || v["kind"] != json!(T::KIND) {
            return Ok(None);
        }
        let n = self.nvars();
        let mut coeffs = BTreeMap::new();
        for e in v["entries"].as_array().into_iter().flatten() {
            let letters: Vec<usize> = serde_json::from_value(e["v"].clone())?;
            let elt = self.group.from_word(&letters)?;
            coeffs.insert(elt, T::from_json(&e["value"], n)?);
        }
        Ok(Some(Row {
            nvars: n,
            w: w.clone(),
            coeffs,
        }))
    }

    fn store<T: Coefficient>(&self, row: &Row<T>) -> Result<()> {
        let Some(path) = self.cache_path::<T>(&row.w) else {
            return Ok(());
        };
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        // Write then rename so concurrent readers never see a partial file.
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_string(&row.to_json())?)?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }
}
