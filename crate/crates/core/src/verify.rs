//! Built-in verification suites with their reference tables.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cartan::{CartanMatrix, Family, FiniteType, RootVector};
use crate::error::{Error, Result};
use crate::hecke::NilHecke;
use crate::ratfun::{CharFraction, LaurentElement};
use crate::smoothness::{
    codim1_classification, codim1_coefficient_identity_check, codim1_element, codim1_rs_by_weight,
    codim1_smooth_by_weight, codim1_weight_is_root_multiple, is_rationally_smooth_point, is_smooth_point,
    closed_form_check, point_verdict, rank2_table, shape_value, singular_locus, RsMode,
};
use crate::weyl::{Group, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Bridge,
    Rank2,
    Codim1,
    Deodhar,
    KacMoody,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["algebra", "bridge", "rank2", "codim1", "deodhar", "kacmoody", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Algebra,
                Suite::Bridge,
                Suite::Rank2,
                Suite::Codim1,
                Suite::Deodhar,
                Suite::KacMoody,
            ],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Bridge => "bridge",
            Suite::Rank2 => "rank2",
            Suite::Codim1 => "codim1",
            Suite::Deodhar => "deodhar",
            Suite::KacMoody => "kacmoody",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "algebra" => Suite::Algebra,
            "bridge" => Suite::Bridge,
            "rank2" => Suite::Rank2,
            "codim1" => Suite::Codim1,
            "deodhar" => Suite::Deodhar,
            "kacmoody" => Suite::KacMoody,
            "all" => Suite::All,
            _ => {
                return Err(Error::parse(
                    s,
                    format!("unknown suite; expected one of {}", Suite::NAMES.join(", ")),
                ))
            }
        })
    }
}

/// One identity checked over a family of cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub count: usize,
    /// Up to a few failing cases, rendered.
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>) -> Self {
        Check {
            suite,
            name: name.into(),
            count: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < 5 {
                self.failures.push(case());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.count > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} ({} cases",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.count
        )?;
        if self.failure_count > 0 {
            write!(f, ", {} failed: {}", self.failure_count, self.failures.join("; "))?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": crate::hecke::SCHEMA,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "suite": c.suite,
                "name": c.name,
                "count": c.count,
                "passed": c.passed(),
                "failures": c.failures,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            write!(f, "PASS: {} checks", self.checks.len())
        } else {
            write!(f, "FAIL: {failed} of {} checks", self.checks.len())
        }
    }
}

/// Runs a suite. Rows are cached under `cache_dir` when given.
pub fn run_suite(suite: Suite, cache_dir: Option<&Path>) -> Result<Report> {
    let ctx = Ctx {
        cache_dir: cache_dir.map(Path::to_path_buf),
    };
    let mut report = Report::default();
    for part in suite.parts() {
        let checks = match part {
            Suite::Algebra => algebra(&ctx)?,
            Suite::Bridge => bridge(&ctx)?,
            Suite::Rank2 => rank2(&ctx)?,
            Suite::Codim1 => codim1(&ctx)?,
            Suite::Deodhar => deodhar(&ctx)?,
            Suite::KacMoody => kacmoody(&ctx)?,
            Suite::All => unreachable!("expanded above"),
        };
        report.checks.extend(checks);
    }
    Ok(report)
}

struct Ctx {
    cache_dir: Option<PathBuf>,
}

impl Ctx {
    fn hecke(&self, cartan: CartanMatrix) -> NilHecke {
        let h = NilHecke::new(Arc::new(WeylGroup::new(cartan)));
        match &self.cache_dir {
            Some(dir) => h.with_cache_dir(dir),
            None => h,
        }
    }

    fn finite(&self, family: Family, rank: usize) -> NilHecke {
        self.hecke(CartanMatrix::finite(family, rank).expect("valid finite type"))
    }
}

/// The affine GCM of type A1^(1).
pub fn affine_a1() -> CartanMatrix {
    CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).expect("valid GCM")
}

/// The affine GCM of type A2^(1).
pub fn affine_a2() -> CartanMatrix {
    CartanMatrix::new(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).expect("valid GCM")
}

fn label(h: &NilHecke) -> String {
    h.group().cartan().to_string()
}

fn pair(w: &WeylElement, v: &WeylElement) -> String {
    format!("w={} v={}", w.label(), v.label())
}

fn rank2_types() -> [(Family, usize); 3] {
    [(Family::A, 2), (Family::C, 2), (Family::G, 2)]
}

/// Singular varieties of the finite rank-2 types with their loci; every
/// variety not listed is smooth.
pub fn rank2_reference(family: Family) -> &'static [(&'static str, &'static [&'static str])] {
    match family {
        Family::A => &[],
        Family::C => &[("121", &["1"])],
        Family::G => &[
            ("121", &["1"]),
            ("1212", &["12"]),
            ("2121", &["21"]),
            ("12121", &["121"]),
            ("21212", &["2"]),
        ],
        _ => &[],
    }
}

/// Expected class of the codimension-one Schubert variety `X_i` (1-based `i`):
/// `"smooth"`, `"rs"` (rationally smooth, not smooth) or `"neither"`.
pub fn codim1_reference(ty: FiniteType, i: usize) -> &'static str {
    let n = ty.rank;
    match ty.family {
        Family::A if i == 1 || i == n => "smooth",
        Family::C if i == 1 => "smooth",
        Family::C if n == 2 && i == 2 => "rs",
        // B2 is C2 with the nodes swapped.
        Family::B if n == 2 && i == 2 => "smooth",
        Family::B if i == 1 => "rs",
        Family::G => "rs",
        _ => "neither",
    }
}

/// Whether `chi_i - w_0 chi_i` at the identity is a root (`"root"`), a proper
/// rational multiple of one (`"multiple"`) or neither (`"none"`).
pub fn codim1_weight_reference(ty: FiniteType, i: usize) -> &'static str {
    let n = ty.rank;
    match ty.family {
        Family::A if i == 1 || i == n => "root",
        Family::C if i == 1 => "root",
        Family::B if n == 2 && i == 2 => "root",
        Family::B if i == 1 || i == 2 => "multiple",
        Family::C | Family::D if i == 2 => "multiple",
        Family::E if (n, i) == (6, 2) || (n, i) == (7, 1) || (n, i) == (8, 8) => "multiple",
        Family::F if i == 1 || i == 4 => "multiple",
        Family::G => "multiple",
        _ => "none",
    }
}

fn elements_or_bounded(g: &Group, max_length: usize) -> Vec<WeylElement> {
    if g.is_finite() {
        g.elements().expect("finite")
    } else {
        g.elements_up_to_length(max_length)
    }
}

fn laurent_samples(n: usize) -> Vec<LaurentElement> {
    let mut out = Vec::new();
    let unit = |i: usize| RootVector::simple(n, i);
    out.push(LaurentElement::one(n));
    for i in 0..n {
        out.push(LaurentElement::exp(&unit(i)));
        out.push(LaurentElement::exp(&unit(i).scale(-2)));
    }
    let mut mixed = LaurentElement::exp(&RootVector(vec![1; n]));
    mixed = &mixed - &LaurentElement::exp(&RootVector((0..n as i64).map(|k| k - 1).collect()));
    out.push(mixed);
    out
}

fn algebra(ctx: &Ctx) -> Result<Vec<Check>> {
    let s = "algebra";
    let mut nil = Check::new(s, "x_w x_i = 0 when l(w r_i) < l(w), on A2 C2 G2 A3 B3 and A1~ (l<=6)");
    let mut idem = Check::new(s, "y_w y_i = y_w when l(w r_i) < l(w), same groups");
    let mut braid_x = Check::new(s, "x rows agree along every reduced word, A2 C2 G2 A3 and A1~ A2~ (l<=5)");
    let mut braid_y = Check::new(s, "y rows agree along every reduced word, same groups");
    let mut dem_idem = Check::new(s, "Demazure operators are idempotent on sample characters");
    let mut dem_rows = Check::new(s, "y_w e^lambda = sum_v b e^(v lambda), A2 C2 G2 with lambda = 2rho");
    let mut exact = Check::new(s, "normalized denominators are multiplicity-free positive roots, A2 C2 G2 A3 B3");
    let mut groups: Vec<(NilHecke, usize)> = rank2_types()
        .into_iter()
        .chain([(Family::A, 3), (Family::B, 3)])
        .map(|(f, n)| (ctx.finite(f, n), 0))
        .collect();
    groups.push((ctx.hecke(affine_a1()), 6));
    groups.push((ctx.hecke(affine_a2()), 5));
    for (h, bound) in &groups {
        let g = h.group();
        let finite = g.is_finite();
        let ty = label(h);
        let elements = elements_or_bounded(g, *bound);
        let a3_or_smaller = finite && g.elements()?.len() <= 24;
        for w in &elements {
            let x = h.expand_x(w)?;
            let y = h.expand_y(w)?;
            for i in 0..g.rank() {
                if g.is_right_descent(w, i) {
                    nil.record(h.extend(&x, i).is_zero(), || format!("{ty} w={} i={}", w.label(), i + 1));
                    idem.record(h.extend(&y, i) == *y, || format!("{ty} w={} i={}", w.label(), i + 1));
                }
            }
            if a3_or_smaller || !finite {
                for word in g.reduced_words(w) {
                    let xw = h.x_word(&word)?;
                    braid_x.record(xw == *x, || format!("{ty} word {:?}", word));
                    let yw = h.y_word(&word)?;
                    braid_y.record(yw == *y, || format!("{ty} word {:?}", word));
                }
            }
            if finite {
                let pos: HashSet<RootVector> = g.positive_roots()?.into_iter().map(|r| r.root).collect();
                for (v, c) in x.iter() {
                    let ok = c.denominator().all(|(b, m)| m == 1 && pos.contains(b));
                    exact.record(ok, || format!("{ty} c {} : {c}", pair(w, v)));
                }
                for (v, b) in y.iter() {
                    let ok = b.denominator().all(|(r, m)| m == 1 && pos.contains(r));
                    exact.record(ok, || format!("{ty} b {} : {b}", pair(w, v)));
                }
            }
        }
        if finite && g.rank() == 2 {
            let two_rho = g
                .positive_roots()?
                .iter()
                .fold(RootVector::zero(2), |acc, r| acc.add(&r.root));
            let e_lambda = LaurentElement::exp(&two_rho);
            for w in &elements {
                let direct = h.demazure_apply(w, &e_lambda)?;
                let y = h.expand_y(w)?;
                let mut sum = CharFraction::zero(2);
                for (v, b) in y.iter() {
                    let term = LaurentElement::exp(&g.apply_root(v, &two_rho));
                    sum = &sum + &(b * &CharFraction::from_laurent(term));
                }
                dem_rows.record(sum == CharFraction::from_laurent(direct), || format!("{ty} w={}", w.label()));
            }
        }
        for f in laurent_samples(g.rank()) {
            for i in 0..g.rank() {
                let once = h.demazure_step(i, &f)?;
                let twice = h.demazure_step(i, &once)?;
                dem_idem.record(once == twice, || format!("{ty} i={} f={f}", i + 1));
            }
        }
    }
    Ok(vec![nil, idem, braid_x, braid_y, dem_idem, dem_rows, exact])
}

fn bridge(ctx: &Ctx) -> Result<Vec<Check>> {
    let s = "bridge";
    let mut star = Check::new(s, "[*b] = c on all pairs v <= w in A2 C2 G2 A3");
    let mut pole = Check::new(s, "pole order of b = l(w) on all pairs in A2 C2 G2 A3");
    let mut degree = Check::new(s, "degree of c = -l(w) on all pairs in A2 C2 G2 A3");
    let mut support = Check::new(s, "rows are supported exactly on [e, w] in A2 C2 G2 A3 B3");
    let mut oracle = Check::new(s, "row recursion equals subword sums, l(w) <= 6 in A3 and G2");
    let types = [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::A, 3), (Family::B, 3)];
    for (f, n) in types {
        let h = ctx.finite(f, n);
        let g = h.group();
        let ty = label(&h);
        let small = n <= 3 && f != Family::B;
        for w in g.elements()? {
            let x = h.expand_x(&w)?;
            let y = h.expand_y(&w)?;
            let below: BTreeSet<WeylElement> = g.interval_below(&w).into_iter().collect();
            let sx: BTreeSet<WeylElement> = x.support().cloned().collect();
            let sy: BTreeSet<WeylElement> = y.support().cloned().collect();
            support.record(sx == below && sy == below, || format!("{ty} w={}", w.label()));
            if small {
                for v in &below {
                    let c = x.coefficient(v);
                    let b = y.coefficient(v);
                    star.record(b.star().lowest_term().as_ref() == Some(&c), || format!("{ty} {}", pair(&w, v)));
                    pole.record(b.pole_order() == Some(w.length() as i64), || format!("{ty} {}", pair(&w, v)));
                    degree.record(c.degree() == Some(-(w.length() as i64)), || format!("{ty} {}", pair(&w, v)));
                }
            }
            if ((f, n) == (Family::A, 3) || f == Family::G) && w.length() <= 6 {
                let sub_x = h.subword_x_row(w.word())?;
                oracle.record(sub_x == *x, || format!("{ty} x w={}", w.label()));
                let sub_y = h.subword_y_row(w.word())?;
                oracle.record(sub_y == *y, || format!("{ty} y w={}", w.label()));
            }
        }
    }
    Ok(vec![star, pole, degree, support, oracle])
}

fn rank2(ctx: &Ctx) -> Result<Vec<Check>> {
    let s = "rank2";
    let mut checks = Vec::new();
    for (f, n) in rank2_types() {
        let h = ctx.finite(f, n);
        let ty = label(&h);
        let reference = rank2_reference(f);
        let mut table = Check::new(s, format!("{ty} singular loci match the reference table"));
        for row in rank2_table(&h)? {
            let expected: Option<Vec<String>> = reference
                .iter()
                .find(|(w, _)| *w == row.w.label())
                .map(|(_, loci)| loci.iter().map(|l| l.to_string()).collect());
            let actual: Option<Vec<String>> = (!row.is_smooth_variety)
                .then(|| row.maximal_singular.iter().map(WeylElement::label).collect());
            table.record(expected == actual, || row.line());
        }
        checks.push(table);
        let mut rs = Check::new(s, format!("{ty} every point is rationally smooth in both modes, d a positive integer"));
        let g = h.group();
        for w in g.elements()? {
            for v in g.interval_below(&w) {
                let count = point_verdict(&h, &w, &v, RsMode::Count)?;
                let via_c = point_verdict(&h, &w, &v, RsMode::ViaC)?;
                let ok = count.rationally_smooth && via_c.rationally_smooth && count.d_constant.is_some();
                rs.record(ok, || pair(&w, &v));
            }
        }
        checks.push(rs);
    }
    let mut closed = Check::new(s, "products of 2 to 5 simple factors match their closed forms, m = 1, 2, 3, 4");
    for cartan in [
        CartanMatrix::finite(Family::A, 2)?,
        CartanMatrix::finite(Family::C, 2)?,
        CartanMatrix::finite(Family::G, 2)?,
        affine_a1(),
    ] {
        let h = ctx.hecke(cartan);
        let ty = label(&h);
        for c in closed_form_check(&h)? {
            closed.record(c.holds, || format!("{ty} word {:?}", c.word));
        }
    }
    checks.push(closed);
    Ok(checks)
}

fn codim1_types() -> Vec<(Family, usize)> {
    vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 4),
        (Family::G, 2),
    ]
}

fn codim1(ctx: &Ctx) -> Result<Vec<Check>> {
    let s = "codim1";
    let mut identity = Check::new(s, "coefficient of delta_v in x_{w0 r_i} matches the weight formula, A2 A3 B3 C3");
    let mut equiv = Check::new(s, "smoothness criterion agrees with the root test on chi_i - v^-1 w0 chi_i, A3 B3 C3");
    let mut rs_equiv = Check::new(s, "rational smoothness agrees with the root-multiple test over [v, w0 r_i], A3 B3 C3");
    let mut class = Check::new(s, "classification of X_i matches the reference, A1-A4 B2-B4 C2-C4 D4 G2");
    let mut weights = Check::new(s, "chi_i - w0 chi_i is a root / multiple of a root exactly as listed, classical to rank 6 and exceptional");
    let mut fixture = Check::new(s, "B3 i=2 v=e: shape holds at theta=e, rational smoothness fails with a witness");

    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 3), (Family::C, 3)] {
        let h = ctx.finite(f, n);
        let ty = label(&h);
        for i in 0..n {
            let (count, failures) = codim1_coefficient_identity_check(&h, i)?;
            for _ in 0..count - failures.len() {
                identity.record(true, String::new);
            }
            for v in failures {
                identity.record(false, || format!("{ty} i={} v={}", i + 1, v.label()));
            }
        }
        if n == 3 {
            let g = h.group();
            for i in 0..n {
                let w = codim1_element(g, i)?;
                let below = g.interval_below(&w);
                let results: Vec<(WeylElement, bool, bool, bool, bool)> = below
                    .par_iter()
                    .map(|v| {
                        Ok((
                            v.clone(),
                            is_smooth_point(&h, &w, v)?,
                            codim1_smooth_by_weight(g, i, v)?,
                            is_rationally_smooth_point(&h, &w, v, RsMode::Count)?.0,
                            codim1_rs_by_weight(g, i, v)?.0,
                        ))
                    })
                    .collect::<Result<_>>()?;
                for (v, a, b, c, d) in results {
                    equiv.record(a == b, || format!("{ty} i={} v={}", i + 1, v.label()));
                    rs_equiv.record(c == d, || format!("{ty} i={} v={}", i + 1, v.label()));
                }
            }
        }
    }

    for (f, n) in codim1_types() {
        let h = ctx.finite(f, n);
        let ty = FiniteType::new(f, n)?;
        for verdict in codim1_classification(&h)? {
            let expected = codim1_reference(ty, verdict.i + 1);
            let actual = match (verdict.smooth, verdict.rationally_smooth) {
                (true, _) => "smooth",
                (false, true) => "rs",
                (false, false) => "neither",
            };
            class.record(expected == actual, || format!("{ty} i={}: {}", verdict.i + 1, verdict.label()));
        }
    }

    let mut weight_types: Vec<(Family, usize)> = Vec::new();
    weight_types.extend((1..=6).map(|n| (Family::A, n)));
    weight_types.extend((2..=6).map(|n| (Family::B, n)));
    weight_types.extend((2..=6).map(|n| (Family::C, n)));
    weight_types.extend((4..=6).map(|n| (Family::D, n)));
    weight_types.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]);
    for (f, n) in weight_types {
        let ty = FiniteType::new(f, n)?;
        let g: Group = Arc::new(WeylGroup::new(CartanMatrix::finite(f, n)?));
        let e = g.identity();
        for i in 0..n {
            let actual = if codim1_smooth_by_weight(&g, i, &e)? {
                "root"
            } else if codim1_weight_is_root_multiple(&g, i, &e)? {
                "multiple"
            } else {
                "none"
            };
            let expected = codim1_weight_reference(ty, i + 1);
            weights.record(actual == expected, || format!("{ty} i={}: {actual}, expected {expected}", i + 1));
        }
    }

    let h = ctx.finite(Family::B, 3);
    let g = h.group();
    let w = codim1_element(g, 1)?;
    let e = g.identity();
    let shape_at_e = shape_value(&h, &w, &e)?.as_constant().is_some();
    for mode in [RsMode::Count, RsMode::ViaC] {
        let (rs, witness) = is_rationally_smooth_point(&h, &w, &e, mode)?;
        fixture.record(shape_at_e && !rs && witness.is_some(), || format!("{mode:?}"));
    }
    let (rs_weight, witness) = codim1_rs_by_weight(g, 1, &e)?;
    fixture.record(!rs_weight && witness.is_some(), || "weight test".to_string());

    Ok(vec![identity, equiv, rs_equiv, class, weights, fixture])
}

fn deodhar(ctx: &Ctx) -> Result<Vec<Check>> {
    let s = "deodhar";
    let mut ineq = Check::new(s, "#S(w,v) >= l(w) for v <= w, A3 B3 and A1~ (l<=8)");
    let mut sym = Check::new(s, "#S(w,v) = #S(w^-1,v^-1), A3 B3 and A1~ (l<=8)");
    let mut diag = Check::new(s, "S(w,w) is the inversion set of w^-1, A3 B3");
    let mut modes = Check::new(s, "count and shape tests for rational smoothness agree, A3 C2 G2 B3");
    let mut implies = Check::new(s, "smooth implies rationally smooth, A3 C2 G2 B3");
    let mut ideal = Check::new(s, "singular sets are Bruhat order ideals, A2 C2 G2 A3 B3");
    let mut groups: Vec<(NilHecke, usize)> = vec![(ctx.finite(Family::A, 3), 0), (ctx.finite(Family::B, 3), 0)];
    groups.push((ctx.hecke(affine_a1()), 8));
    for (h, bound) in &groups {
        let g = h.group();
        let ty = label(h);
        let elements = elements_or_bounded(g, *bound);
        let rows: Vec<(WeylElement, Vec<(usize, usize, WeylElement)>)> = elements
            .par_iter()
            .map(|w| {
                let w_inv = g.inverse(w);
                let cases = g
                    .interval_below(w)
                    .into_iter()
                    .map(|v| {
                        let a = g.s_set(w, &v)?.len();
                        let b = g.s_set(&w_inv, &g.inverse(&v))?.len();
                        Ok((a, b, v))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((w.clone(), cases))
            })
            .collect::<Result<_>>()?;
        for (w, cases) in rows {
            for (a, b, v) in cases {
                ineq.record(a >= w.length(), || format!("{ty} {} #S={a}", pair(&w, &v)));
                sym.record(a == b, || format!("{ty} {} {a} vs {b}", pair(&w, &v)));
            }
            if g.is_finite() {
                let inv = g.inversion_set(&g.inverse(&w));
                let diagonal = g.s_set(&w, &w)?;
                diag.record(inv == diagonal, || format!("{ty} w={}", w.label()));
            }
        }
    }
    for (f, n) in [(Family::A, 3), (Family::C, 2), (Family::G, 2), (Family::B, 3)] {
        let h = ctx.finite(f, n);
        let g = h.group();
        let ty = label(&h);
        let elements = g.elements()?;
        let verdicts: Vec<(WeylElement, WeylElement, bool, bool, bool)> = elements
            .par_iter()
            .map(|w| {
                g.interval_below(w)
                    .into_iter()
                    .map(|v| {
                        let smooth = is_smooth_point(&h, w, &v)?;
                        let count = is_rationally_smooth_point(&h, w, &v, RsMode::Count)?.0;
                        let via_c = is_rationally_smooth_point(&h, w, &v, RsMode::ViaC)?.0;
                        Ok((w.clone(), v, smooth, count, via_c))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        for (w, v, smooth, count, via_c) in verdicts {
            modes.record(count == via_c, || format!("{ty} {}", pair(&w, &v)));
            implies.record(!smooth || count, || format!("{ty} {}", pair(&w, &v)));
        }
    }
    for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::A, 3), (Family::B, 3)] {
        let h = ctx.finite(f, n);
        let ty = label(&h);
        for w in h.group().elements()? {
            // singular_locus itself raises an invariant error on a non-ideal.
            let ok = match singular_locus(&h, &w) {
                Ok(_) => true,
                Err(Error::Invariant(_)) => false,
                Err(e) => return Err(e),
            };
            ideal.record(ok, || format!("{ty} w={}", w.label()));
        }
    }
    Ok(vec![ineq, sym, diag, modes, implies, ideal])
}

fn kacmoody(ctx: &Ctx) -> Result<Vec<Check>> {
    let s = "kacmoody";
    let mut support = Check::new(s, "A1~ rows of x and y are supported exactly on [e, w], l(w) <= 8");
    let mut simple = Check::new(s, "A1~ and A2~ denominators are multiplicity-free positive real roots, l(w) <= 8 / 5");
    let mut sset = Check::new(s, "A1~ S(w,v) by interval equals S(w,v) by bounded root filtering, l(w) <= 6");
    let mut implies = Check::new(s, "A1~ smooth implies rationally smooth, l(w) <= 6");
    let mut demazure = Check::new(s, "A1~ and A2~ Demazure actions divide exactly along reduced words, l(w) <= 5");
    for (cartan, bound) in [(affine_a1(), 8usize), (affine_a2(), 5)] {
        let h = ctx.hecke(cartan);
        let g = h.group();
        let ty = label(&h);
        let affine_a1 = g.rank() == 2;
        let elements = g.elements_up_to_length(bound);
        for w in &elements {
            let x = h.expand_x(w)?;
            let y = h.expand_y(w)?;
            if affine_a1 {
                let below: BTreeSet<WeylElement> = g.interval_below(w).into_iter().collect();
                let sx: BTreeSet<WeylElement> = x.support().cloned().collect();
                let sy: BTreeSet<WeylElement> = y.support().cloned().collect();
                support.record(sx == below && sy == below, || format!("{ty} w={}", w.label()));
            }
            for (v, c) in x.iter() {
                let ok = c.denominator().all(|(b, m)| m == 1 && b.is_positive());
                simple.record(ok, || format!("{ty} {}", pair(w, v)));
            }
            for (v, b) in y.iter() {
                let ok = b.denominator().all(|(r, m)| m == 1 && r.is_positive());
                simple.record(ok, || format!("{ty} {}", pair(w, v)));
            }
            if w.length() <= 5 {
                for f in laurent_samples(g.rank()) {
                    let ok = h.demazure_apply(w, &f).is_ok();
                    demazure.record(ok, || format!("{ty} w={} f={f}", w.label()));
                }
            }
            if affine_a1 && w.length() <= 6 {
                for v in g.interval_below(w) {
                    let by_interval = g.s_set(w, &v)?;
                    let bounded = g.s_set_bounded(w, &v, 2 * bound as i64 + 2)?;
                    sset.record(by_interval == bounded, || format!("{ty} {}", pair(w, &v)));
                    let smooth = is_smooth_point(&h, w, &v)?;
                    let rs = is_rationally_smooth_point(&h, w, &v, RsMode::Count)?.0;
                    implies.record(!smooth || rs, || format!("{ty} {}", pair(w, &v)));
                }
            }
        }
    }
    Ok(vec![support, simple, sset, implies, demazure])
}
