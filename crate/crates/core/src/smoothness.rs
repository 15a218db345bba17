//! Smoothness and rational smoothness of Schubert varieties at fixed points.
//!
//! For `v <= w` put `q(theta) = (-1)^{l(w)-l(theta)} * c * prod beta`, where
//! `c` is the coefficient of `delta_theta` in `x_w` and `beta` runs over
//! `S(w^{-1}, theta^{-1})`. The point `v` of `X_w` is smooth iff `q(v) = 1`,
//! and rationally smooth iff `q(theta)` is a constant for every `theta` in
//! `[v, w]`; equivalently `#S(w^{-1}, theta^{-1}) = l(w)` on that interval.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cartan::{RootVector, Weight};
use crate::error::{Error, Result};
use crate::hecke::NilHecke;
use crate::ratfun::FactoredRational;
use crate::weyl::{Group, WeylElement};

/// How rational smoothness is decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RsMode {
    /// `#S(w^{-1}, theta^{-1}) = l(w)` for all `theta` in `[v, w]`.
    #[default]
    Count,
    /// `q(theta)` is constant for all `theta` in `[v, w]`.
    ViaC,
}

/// Why a verdict came out negative.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `q(v)`, which differs from 1.
    Leftover(FactoredRational),
    /// A `theta` in `[v, w]` where rational smoothness fails.
    Theta(WeylElement),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointVerdict {
    pub w: WeylElement,
    pub v: WeylElement,
    pub smooth: bool,
    pub rationally_smooth: bool,
    /// `q(v)` when it is a positive integer.
    pub d_constant: Option<BigInt>,
    pub s_size: usize,
    pub length_w: usize,
    pub smooth_witness: Option<Witness>,
    pub rs_witness: Option<Witness>,
}

impl PointVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "w": self.w.label(),
            "v": self.v.label(),
            "smooth": self.smooth,
            "rationally_smooth": self.rationally_smooth,
            "d": self.d_constant.as_ref().map(|d| d.to_string()),
            "s_size": self.s_size,
            "length": self.length_w,
        })
    }
}

impl fmt::Display for PointVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{} at {}: ", self.w.label(), self.v.label())?;
        f.write_str(if self.smooth { "smooth" } else { "not smooth" })?;
        f.write_str(if self.rationally_smooth {
            "; rationally smooth"
        } else {
            "; not rationally smooth"
        })?;
        if let Some(d) = &self.d_constant {
            write!(f, "; d={d}")?;
        }
        write!(f, "; #S={}, l(w)={}", self.s_size, self.length_w)?;
        match &self.rs_witness {
            Some(Witness::Theta(t)) => write!(f, "; fails at theta={}", t.label())?,
            Some(Witness::Leftover(q)) => write!(f, "; leftover {q}")?,
            None => {}
        }
        Ok(())
    }
}

fn sign(k: usize) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn require_below(g: &Group, v: &WeylElement, w: &WeylElement) -> Result<()> {
    if g.bruhat_leq(v, w)? {
        Ok(())
    } else {
        Err(Error::NotBelow {
            v: v.label(),
            w: w.label(),
        })
    }
}

/// `q(theta)` as defined in the module docs. Requires `theta <= w`.
pub fn shape_value(h: &NilHecke, w: &WeylElement, theta: &WeylElement) -> Result<FactoredRational> {
    let g = h.group();
    require_below(g, theta, w)?;
    let c = h.expand_x(w)?.coefficient(theta);
    let s = g.s_set(&g.inverse(w), &g.inverse(theta))?;
    let mut q = c.scale(&sign(w.length() - theta.length()));
    for beta in s.iter() {
        q = q.multiply_by_root(&beta.root);
    }
    Ok(q)
}

/// The smoothness criterion at `v`.
pub fn is_smooth_point(h: &NilHecke, w: &WeylElement, v: &WeylElement) -> Result<bool> {
    Ok(shape_value(h, w, v)?.as_constant() == Some(BigRational::one()))
}

/// Rational smoothness at `v`, with the first failing `theta` (shortlex) as witness.
pub fn is_rationally_smooth_point(
    h: &NilHecke,
    w: &WeylElement,
    v: &WeylElement,
    mode: RsMode,
) -> Result<(bool, Option<WeylElement>)> {
    let g = h.group();
    require_below(g, v, w)?;
    let w_inv = g.inverse(w);
    for theta in g.interval(v, w)? {
        let ok = match mode {
            RsMode::Count => g.s_set(&w_inv, &g.inverse(&theta))?.len() == w.length(),
            RsMode::ViaC => shape_value(h, w, &theta)?.as_constant().is_some(),
        };
        if !ok {
            return Ok((false, Some(theta)));
        }
    }
    if mode == RsMode::ViaC {
        // The constants of a rationally smooth point are positive integers.
        for theta in g.interval(v, w)? {
            let d = shape_value(h, w, &theta)?
                .as_constant()
                .expect("checked constant above");
            if !d.is_integer() || !d.is_positive() {
                return Err(Error::Invariant(format!(
                    "constant {d} at theta={} for X_{} is not a positive integer",
                    theta.label(),
                    w.label()
                )));
            }
        }
    }
    Ok((true, None))
}

/// Every field of the verdict at `v`.
pub fn point_verdict(h: &NilHecke, w: &WeylElement, v: &WeylElement, mode: RsMode) -> Result<PointVerdict> {
    let g = h.group();
    let q = shape_value(h, w, v)?;
    let smooth = q.as_constant() == Some(BigRational::one());
    let (rationally_smooth, theta) = is_rationally_smooth_point(h, w, v, mode)?;
    let s_size = g.s_set(&g.inverse(w), &g.inverse(v))?.len();
    let d_constant = q
        .as_constant()
        .filter(|d| d.is_integer() && d.is_positive())
        .map(|d| d.to_integer());
    let verdict = PointVerdict {
        w: w.clone(),
        v: v.clone(),
        smooth,
        rationally_smooth,
        d_constant,
        s_size,
        length_w: w.length(),
        smooth_witness: (!smooth).then_some(Witness::Leftover(q)),
        rs_witness: theta.map(Witness::Theta),
    };
    if verdict.smooth && !verdict.rationally_smooth {
        return Err(Error::Invariant(format!("{verdict}: smooth but not rationally smooth")));
    }
    if verdict.s_size < verdict.length_w {
        return Err(Error::Invariant(format!("{verdict}: #S below l(w)")));
    }
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularLocusReport {
    pub w: WeylElement,
    /// Bruhat-maximal singular points, shortlex sorted.
    pub maximal_singular: Vec<WeylElement>,
    /// All singular points, shortlex sorted.
    pub singular: Vec<WeylElement>,
    pub is_smooth_variety: bool,
}

impl SingularLocusReport {
    pub fn to_json(&self) -> Value {
        json!({
            "w": self.w.label(),
            "smooth": self.is_smooth_variety,
            "maximal_singular": self.maximal_singular.iter().map(WeylElement::label).collect::<Vec<_>>(),
            "singular_count": self.singular.len(),
        })
    }

    /// `X_w smooth` or `X_w singular; locus X_u + X_v`.
    pub fn line(&self) -> String {
        if self.is_smooth_variety {
            format!("X_{} smooth", self.w.label())
        } else {
            let loci: Vec<String> = self
                .maximal_singular
                .iter()
                .map(|u| format!("X_{}", u.label()))
                .collect();
            format!("X_{} singular; locus {}", self.w.label(), loci.join(" + "))
        }
    }
}

/// Singular points of `X_w`, checked to form a Bruhat order ideal.
pub fn singular_locus(h: &NilHecke, w: &WeylElement) -> Result<SingularLocusReport> {
    let g = h.group();
    h.expand_x(w)?;
    let below = g.interval_below(w);
    let flags: Vec<bool> = below
        .par_iter()
        .map(|v| is_smooth_point(h, w, v))
        .collect::<Result<_>>()?;
    let singular: Vec<WeylElement> = below
        .iter()
        .zip(&flags)
        .filter(|(_, &smooth)| !smooth)
        .map(|(v, _)| v.clone())
        .collect();
    let set: HashSet<&WeylElement> = singular.iter().collect();
    for v in &singular {
        for u in g.interval_below(v) {
            if !set.contains(&u) {
                return Err(Error::Invariant(format!(
                    "singular set of X_{} is not downward closed: {} singular, {} smooth",
                    w.label(),
                    v.label(),
                    u.label()
                )));
            }
        }
    }
    let mut maximal = Vec::new();
    for v in &singular {
        let mut is_max = true;
        for u in &singular {
            if u != v && u.length() > v.length() && g.bruhat_leq(v, u)? {
                is_max = false;
                break;
            }
        }
        if is_max {
            maximal.push(v.clone());
        }
    }
    Ok(SingularLocusReport {
        w: w.clone(),
        is_smooth_variety: singular.is_empty(),
        maximal_singular: maximal,
        singular,
    })
}

fn require_rank2(g: &Group) -> Result<()> {
    if g.rank() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidCartan(format!("rank {} given where rank 2 is required", g.rank())))
    }
}

/// Singular loci of all Schubert varieties of a finite rank-2 group, shortlex by `w`.
pub fn rank2_table(h: &NilHecke) -> Result<Vec<SingularLocusReport>> {
    let g = h.group();
    require_rank2(g)?;
    let elements = g.elements()?;
    elements.par_iter().map(|w| singular_locus(h, w)).collect()
}

/// Outcome of comparing one product of simple factors with its closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormCheck {
    /// The product word, 0-based letters.
    pub word: Vec<usize>,
    pub holds: bool,
}

/// Compares `x_{r_a} x_{r_b} ...` of lengths 2 to 5 with their closed
/// forms, for both orderings `(a, b)` of the two simple reflections.
pub fn closed_form_check(h: &NilHecke) -> Result<Vec<ClosedFormCheck>> {
    let g = h.group();
    require_rank2(g)?;
    let mut out = Vec::new();
    for (a, b) in [(0, 1), (1, 0)] {
        let expected = rank2_closed_forms(g, a, b);
        for (len, form) in (2..=5).zip(expected) {
            let word: Vec<usize> = (0..len).map(|k| if k % 2 == 0 { a } else { b }).collect();
            let row = h.x_word(&word)?;
            let mut actual: BTreeMap<WeylElement, FactoredRational> = BTreeMap::new();
            for (v, c) in row.iter() {
                actual.insert(v.clone(), c.clone());
            }
            out.push(ClosedFormCheck {
                word,
                holds: actual == form,
            });
        }
    }
    Ok(out)
}

/// Rows of `x_a x_b`, `x_a x_b x_a`, ... up to five factors, written with
/// scalars on the left, where `m = a_{ab} a_{ba}`.
fn rank2_closed_forms(g: &Group, a: usize, b: usize) -> Vec<BTreeMap<WeylElement, FactoredRational>> {
    let n = g.rank();
    let cartan = g.cartan();
    let alpha = |i: usize| RootVector::simple(n, i);
    let elt = |word: &[usize]| g.from_word(word).expect("indices in range");
    // u(alpha_i) for u the product of `word`.
    let img = |word: &[usize], i: usize| g.apply_root(&elt(word), &alpha(i));
    let inv = |roots: &[RootVector]| {
        roots
            .iter()
            .fold(FactoredRational::one(n), |acc, r| acc.divide_by_root(r))
    };
    let int = |k: i64| BigRational::from_integer(BigInt::from(k));
    let m = cartan.entry(a, b) * cartan.entry(b, a);
    // alpha_b evaluated on the coroot of alpha_a.
    let p = cartan.entry(a, b);
    let pre = FactoredRational::inv_root(&alpha(a));

    let mut forms = Vec::new();
    let mut push = |terms: Vec<(FactoredRational, &[usize], &[usize])>| {
        let mut row: BTreeMap<WeylElement, FactoredRational> = BTreeMap::new();
        for (q, plus, minus) in terms {
            let q = &pre * &q;
            for (word, c) in [(plus, q.clone()), (minus, -&q)] {
                let v = elt(word);
                let next = match row.get(&v) {
                    Some(old) => old + &c,
                    None => c,
                };
                if next.is_zero() {
                    row.remove(&v);
                } else {
                    row.insert(v, next);
                }
            }
        }
        forms.push(row);
    };

    let (e, wa, wb) = (&[][..], &[a][..], &[b][..]);
    let ab = [a, b];
    let ba = [b, a];
    let aba = [a, b, a];
    let bab = [b, a, b];
    let abab = [a, b, a, b];
    let baba = [b, a, b, a];
    let ababa = [a, b, a, b, a];

    push(vec![
        (inv(&[alpha(b)]), e, wb),
        (inv(&[img(wa, b)]).scale(&int(-1)), wa, &ab),
    ]);
    push(vec![
        (inv(&[alpha(b), img(wa, b)]).scale(&int(p)), e, wa),
        (inv(&[alpha(b), img(wb, a)]), wb, &ba),
        (inv(&[img(wa, b), img(&ab, a)]).scale(&int(-1)), &ab, &aba),
    ]);
    push(vec![
        (inv(&[alpha(b), img(wa, b), img(wb, a)]).scale(&int(m - 1)), e, wb),
        (inv(&[alpha(b), img(wa, b), img(&ab, a)]).scale(&int(-(m - 1))), wa, &ab),
        (inv(&[alpha(b), img(wb, a), img(&ba, b)]), &ba, &bab),
        (inv(&[img(wa, b), img(&ab, a), img(&aba, b)]).scale(&int(-1)), &aba, &abab),
    ]);
    push(vec![
        (
            inv(&[alpha(b), img(wa, b), img(wb, a), img(&ab, a)]).scale(&int((m - 1) * (2 - m))),
            e,
            wa,
        ),
        (
            inv(&[alpha(b), img(wb, a), img(wa, b), img(&ba, b)]).scale(&int((2 - m) * p)),
            wb,
            &ba,
        ),
        (
            inv(&[alpha(b), img(wa, b), img(&ab, a), img(&aba, b)]).scale(&int((m - 2) * p)),
            &ab,
            &aba,
        ),
        (inv(&[alpha(b), img(wb, a), img(&ba, b), img(&bab, a)]), &bab, &baba),
        (
            inv(&[img(wa, b), img(&ab, a), img(&aba, b), img(&abab, a)]).scale(&int(-1)),
            &abab,
            &ababa,
        ),
    ]);
    forms
}

/// `w_0 r_i`, the element of the codimension-one Schubert variety `X_i`.
pub fn codim1_element(g: &Group, i: usize) -> Result<WeylElement> {
    g.cartan().check_index(i)?;
    Ok(g.mul_simple(&g.longest_element()?, i))
}

/// `chi_i - u^{-1} w_0 chi_i`.
fn codim1_weight(g: &Group, i: usize, u: &WeylElement) -> Result<Weight> {
    let n = g.rank();
    let chi = Weight::fundamental(n, i);
    let w0chi = g.apply_weight(&g.longest_element()?, &chi);
    Ok(chi.sub(&g.apply_weight(&g.inverse(u), &w0chi)))
}

/// `v <= w_0 r_i`, decided by `chi_i != v^{-1} w_0 chi_i`.
pub fn codim1_contains(g: &Group, i: usize, v: &WeylElement) -> Result<bool> {
    g.cartan().check_index(i)?;
    Ok(!codim1_weight(g, i, v)?.is_zero())
}

fn require_codim1(g: &Group, i: usize, v: &WeylElement) -> Result<()> {
    if codim1_contains(g, i, v)? {
        Ok(())
    } else {
        Err(Error::NotBelow {
            v: v.label(),
            w: codim1_element(g, i)?.label(),
        })
    }
}

fn weight_root(g: &Group, mu: &Weight) -> Result<Option<RootVector>> {
    let Some(x) = g.cartan().root_coordinates(mu)? else {
        return Ok(None);
    };
    let pos = x.abs();
    Ok(g.positive_roots()?.iter().any(|r| r.root == pos).then_some(x))
}

/// `X_i` is smooth at `v` iff `chi_i - v^{-1} w_0 chi_i` is a root.
pub fn codim1_smooth_by_weight(g: &Group, i: usize, v: &WeylElement) -> Result<bool> {
    require_codim1(g, i, v)?;
    Ok(weight_root(g, &codim1_weight(g, i, v)?)?.is_some())
}

/// Whether `chi_i - v^{-1} w_0 chi_i` is a rational multiple of a root.
pub fn codim1_weight_is_root_multiple(g: &Group, i: usize, v: &WeylElement) -> Result<bool> {
    require_codim1(g, i, v)?;
    Ok(g.cartan().root_multiple_of_weight(&codim1_weight(g, i, v)?)?.is_some())
}

/// `X_i` is rationally smooth at `v` iff the weight condition holds up to
/// rational multiples at every `theta` in `[v, w_0 r_i]`. Returns the first
/// failing `theta` otherwise.
pub fn codim1_rs_by_weight(g: &Group, i: usize, v: &WeylElement) -> Result<(bool, Option<WeylElement>)> {
    require_codim1(g, i, v)?;
    let w = codim1_element(g, i)?;
    for theta in g.interval(v, &w)? {
        if g.cartan().root_multiple_of_weight(&codim1_weight(g, i, &theta)?)?.is_none() {
            return Ok((false, Some(theta)));
        }
    }
    Ok((true, None))
}

/// The coefficient of `delta_v` in `x_{w_0 r_i}` against
/// `(-1)^{N - l(v)} (w_0 chi_i - v chi_i) / prod_{beta > 0} beta`.
/// Returns the number of `v` checked and those where the identity fails.
pub fn codim1_coefficient_identity_check(h: &NilHecke, i: usize) -> Result<(usize, Vec<WeylElement>)> {
    let g = h.group();
    let w = codim1_element(g, i)?;
    let row = h.expand_x(&w)?;
    let n = g.rank();
    let positive = g.positive_roots()?;
    let chi = Weight::fundamental(n, i);
    let w0chi = g.apply_weight(&g.longest_element()?, &chi);
    let mut failures = Vec::new();
    let below = g.interval_below(&w);
    for v in &below {
        let mu = w0chi.sub(&g.apply_weight(v, &chi));
        let Some(num) = g.cartan().root_coordinates(&mu)? else {
            return Err(Error::Invariant(format!(
                "w0 chi - v chi outside the root lattice at v={}",
                v.label()
            )));
        };
        let mut rhs = FactoredRational::root(&num).scale(&sign(positive.len() - v.length()));
        for beta in &positive {
            rhs = rhs.divide_by_root(&beta.root);
        }
        if row.coefficient(v) != rhs {
            failures.push(v.clone());
        }
    }
    Ok((below.len(), failures))
}

/// Classification of one codimension-one Schubert variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codim1Verdict {
    /// 0-based simple index.
    pub i: usize,
    pub smooth: bool,
    pub rationally_smooth: bool,
    /// `chi_i - w_0 chi_i` is a root.
    pub weight_is_root: bool,
    /// `chi_i - w_0 chi_i` is a rational multiple of a root.
    pub weight_is_root_multiple: bool,
}

impl Codim1Verdict {
    pub fn label(&self) -> &'static str {
        match (self.smooth, self.rationally_smooth) {
            (true, _) => "smooth",
            (false, true) => "rationally smooth, not smooth",
            (false, false) => "not rationally smooth",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "i": self.i + 1,
            "smooth": self.smooth,
            "rationally_smooth": self.rationally_smooth,
            "weight_is_root": self.weight_is_root,
            "weight_is_root_multiple": self.weight_is_root_multiple,
        })
    }
}

/// Verdicts at the identity point of every `X_i`; the singular locus is
/// closed and `B`-stable, so these decide the whole variety.
pub fn codim1_classification(h: &NilHecke) -> Result<Vec<Codim1Verdict>> {
    let g = h.group();
    let e = g.identity();
    (0..g.rank())
        .into_par_iter()
        .map(|i| {
            let w = codim1_element(g, i)?;
            let verdict = point_verdict(h, &w, &e, RsMode::Count)?;
            Ok(Codim1Verdict {
                i,
                smooth: verdict.smooth,
                rationally_smooth: verdict.rationally_smooth,
                weight_is_root: codim1_smooth_by_weight(g, i, &e)?,
                weight_is_root_multiple: codim1_weight_is_root_multiple(g, i, &e)?,
            })
        })
        .collect()
}
