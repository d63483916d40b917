//! Finite-window verification of the combinatorial lemmas and ring
//! identities. Each check returns a [`CheckReport`]; a report passes when it
//! has no failures. Counterexamples are written in the expression grammar so
//! they can be replayed through the command line.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_integer::binomial;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::grading::{
    d_slice, d_slice_recursive, line_point, may_be_nonzero, rel_leq, rel_leq_at, rel_lt, rel_lt_at, Extended, Grading,
    LatticeFn, LineId,
};
use crate::maps::{
    big_gamma_or_zero, eta, lewis_generator, pushforward_omega, restrict, sphere_gen_grading, LewisGenerator,
    SphereModule,
};
use crate::ring::{
    basis_monomial, basis_slice, fixed_ring_normalize, mul, normalize, normalize_graded, normalize_randomized, Element,
    FixedSide, Monomial, RawExpr, RingParams, Rule,
};
use crate::scalar::{CoefficientMode, Scalar};

type Elem = Element<i64>;
type S = Scalar<i64>;

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Human-readable parameter ranges.
    pub params: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, params: impl Into<String>) -> Self {
        CheckReport { name: name.into(), params: params.into(), cases: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case; `describe` is only evaluated on failure.
    pub fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    /// Records an evaluation error as a failed case.
    pub fn error(&mut self, context: impl std::fmt::Display, err: impl std::fmt::Display) {
        self.cases += 1;
        self.failures.push(format!("{context}: error: {err}"));
    }

    /// Folds another report's cases and failures into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures.into_iter().map(|f| format!("[{}] {f}", other.name)));
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "params": self.params, "cases": self.cases, "failures": self.failures })
    }
}

fn window_text(w: &RangeInclusive<i64>) -> String {
    format!("{}..{}", w.start(), w.end())
}

fn params_bq(p: u32, q: u32) -> RingParams {
    RingParams::finite(p, q).expect("p + q > 0")
}

/* ---------------------------------------------------------------- grading */

fn line(p: u32, q: u32, i: usize) -> LatticeFn {
    LatticeFn::Line(LineId::new(p, q, i))
}

/// The Example diagrams for `X_{1,2}`, planes 2 down to −3.
pub const X12_DIAGRAMS: [(i64, [(i64, i64); 3]); 6] = [
    (2, [(-4, 0), (0, -2), (2, -2)]),
    (1, [(-2, 0), (0, 0), (2, 0)]),
    (0, [(0, 0), (0, 2), (2, 2)]),
    (-1, [(0, 2), (2, 2), (2, 4)]),
    (-2, [(0, 4), (2, 4), (4, 4)]),
    (-3, [(0, 6), (2, 6), (6, 4)]),
];

/// Compares `d_slice(1,2,n)` against the worked example.
pub fn check_x12_diagrams() -> CheckReport {
    let mut r = CheckReport::new("x12-diagrams", "p=1 q=2 n=-3..2");
    for (n, pts) in X12_DIAGRAMS {
        let want: Vec<Grading> = pts.iter().map(|&(a, b)| Grading::new(a, b, n)).collect();
        match d_slice(1, 2, n) {
            Ok(got) => r.case(got == want, || format!("plane {n}: got {got:?}, expected {want:?}")),
            Err(e) => r.error(format!("plane {n}"), e),
        }
    }
    r
}

/// Partition, recursion, overlap, gluing, stability, boundedness and mixed
/// transitivity for all `p ≤ pmax`, `q ≤ qmax`.
pub fn check_grading_suite(pmax: u32, qmax: u32, window: RangeInclusive<i64>, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("grading", format!("p<={pmax} q<={qmax} n in {}", window_text(&window)));
    r.absorb(check_x12_diagrams());
    for p in 0..=pmax {
        for q in 0..=qmax {
            if p + q == 0 {
                continue;
            }
            if let Err(e) = grading_cases(&mut r, p, q, window.clone()) {
                r.error(format!("({p},{q})"), e);
            }
        }
    }
    // Reflexivity probe: the relation is not reflexive.
    let f = LatticeFn::G(2, 1);
    r.case(!rel_leq(&f, &f, window.clone()).unwrap_or(true), || "rel_leq(g_{2,1}, g_{2,1}) reported true".into());
    mixed_transitivity(&mut r, window, seed);
    r
}

fn grading_cases(r: &mut CheckReport, p: u32, q: u32, window: RangeInclusive<i64>) -> Result<()> {
    let total = (p + q) as usize;
    for n in window.clone() {
        let lines = d_slice(p, q, n)?;
        let set: BTreeSet<_> = lines.iter().copied().collect();
        r.case(set.len() == total, || format!("({p},{q}) plane {n}: lines collide: {lines:?}"));
        let rec = d_slice_recursive(p, q, n)?;
        r.case(set == rec, || format!("({p},{q}) plane {n}: lines {set:?} vs recursive {rec:?}"));
        if p >= 1 && q >= 1 && n == i64::from(p) - i64::from(q) {
            let (left, right) = (d_slice_recursive(p, q - 1, n)?, d_slice_recursive(p - 1, q, n)?);
            r.case(left == right, || format!("({p},{q}): overlap on plane {n} differs: {left:?} vs {right:?}"));
        }
        if p >= 1 && q >= 1 {
            let pivot = i64::from(p) - i64::from(q);
            for i in 1..total - 1 {
                let here = line_point(LineId::new(p, q, i), n)?;
                if n >= pivot {
                    let there = line_point(LineId::new(p, q - 1, i), n)?;
                    r.case(here == there, || format!("L_{i}^[{p},{q}] vs L_{i}^[{p},{}] at plane {n}", q - 1));
                }
                if n <= pivot {
                    let there = line_point(LineId::new(p - 1, q, i), n)?;
                    r.case(here == there, || format!("L_{i}^[{p},{q}] vs L_{i}^[{},{q}] at plane {n}", p - 1));
                }
            }
            for i in 0..p.min(q) as usize {
                let here = line_point(LineId::new(p, q, i), n)?;
                for (pp, qq) in [(p + 1, q), (p, q + 1)] {
                    let there = line_point(LineId::new(pp, qq, i), n)?;
                    r.case(here == there, || format!("L_{i} not stable from ({p},{q}) to ({pp},{qq}) at plane {n}"));
                }
            }
        }
    }
    let last = line(p, q, total - 1);
    for k in 0..total - 1 {
        let ok = rel_leq(&line(p, q, k), &last, window.clone())?;
        r.case(ok, || format!("rel_leq(l_{k}, l_{}) fails for ({p},{q})", total - 1));
    }
    let l0 = line(p, q, 0);
    for k in 1..total {
        for n in window.clone() {
            let holds = rel_lt_at(&l0, &line(p, q, k), n)?;
            let exception = p > 0 && q > 0 && k == 1 && n == 0;
            r.case(holds != exception, || {
                format!("rel_lt(l_0, l_{k}) for ({p},{q}) at plane {n}: got {holds}, expected {}", !exception)
            });
        }
    }
    Ok(())
}

fn mixed_transitivity(r: &mut CheckReport, window: RangeInclusive<i64>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<LatticeFn> = (0..5u32)
        .flat_map(|i| (0..5u32).map(move |j| (i, j)))
        .filter(|&(i, j)| i + j > 0)
        .map(|(i, j)| LatticeFn::G(i, j))
        .collect();
    for _ in 0..2000 {
        let f = *pool.choose(&mut rng).expect("pool");
        let g = *pool.choose(&mut rng).expect("pool");
        let h = *pool.choose(&mut rng).expect("pool");
        for n in window.clone() {
            let (Ok(fg_lt), Ok(fg_le), Ok(gh_lt), Ok(gh_le), Ok(fh_lt), Ok(fh_le)) = (
                rel_lt_at(&f, &g, n),
                rel_leq_at(&f, &g, n),
                rel_lt_at(&g, &h, n),
                rel_leq_at(&g, &h, n),
                rel_lt_at(&f, &h, n),
                rel_leq_at(&f, &h, n),
            ) else {
                r.error(format!("{f:?},{g:?},{h:?}"), "evaluation failed");
                continue;
            };
            if fg_lt {
                r.case(fg_le, || format!("{f:?} < {g:?} but not <= at plane {n}"));
            }
            if fg_le && gh_le {
                r.case(fh_le, || format!("<= not transitive for {f:?},{g:?},{h:?} at plane {n}"));
            }
            if (fg_lt && gh_le) || (fg_le && gh_lt) {
                r.case(fh_lt, || format!("mixed transitivity fails for {f:?},{g:?},{h:?} at plane {n}"));
            }
        }
    }
}

/// The boundedness statements on lines for all `p + q ≤ max_total`.
pub fn check_boundedness(max_total: u32, window: RangeInclusive<i64>) -> CheckReport {
    let mut r = CheckReport::new("boundedness", format!("p+q<={max_total} n in {}", window_text(&window)));
    for total in 1..=max_total {
        for p in 0..=total {
            let q = total - p;
            let last = line(p, q, (total - 1) as usize);
            let l0 = line(p, q, 0);
            for k in 0..(total - 1) as usize {
                match rel_leq(&line(p, q, k), &last, window.clone()) {
                    Ok(ok) => r.case(ok, || format!("rel_leq(l_{k}, l_last) fails for ({p},{q})")),
                    Err(e) => r.error(format!("({p},{q})"), e),
                }
            }
            for k in 1..total as usize {
                // away from the exceptional plane the strict relation holds outright
                let exceptional = p > 0 && q > 0 && k == 1;
                let windows: Vec<RangeInclusive<i64>> =
                    if exceptional { vec![*window.start()..=-1, 1..=*window.end()] } else { vec![window.clone()] };
                for w in windows {
                    match rel_lt(&l0, &line(p, q, k), w.clone()) {
                        Ok(ok) => {
                            r.case(ok, || format!("rel_lt(l_0, l_{k}) fails for ({p},{q}) on {}", window_text(&w)))
                        }
                        Err(e) => r.error(format!("({p},{q})"), e),
                    }
                }
                if exceptional {
                    match rel_lt_at(&l0, &line(p, q, 1), 0) {
                        Ok(holds) => {
                            r.case(!holds, || format!("rel_lt(l_0, l_1) unexpectedly holds at plane 0 for ({p},{q})"))
                        }
                        Err(e) => r.error(format!("({p},{q})"), e),
                    }
                }
            }
        }
    }
    r
}

/* -------------------------------------------------------------- splitting */

/// The boundary maps in the cofibre sequences building `X_{p,q}` vanish for
/// degree reasons: no basis class of `X_{p−1,q}` (resp. `X_{p,q−1}`), shifted
/// up by one, meets the support of the sphere module.
pub fn check_splitting_vanishing(p: u32, q: u32, window: RangeInclusive<i64>) -> CheckReport {
    let mut r = CheckReport::new("splitting", format!("p={p} q={q} n in {}", window_text(&window)));
    let pivot = i64::from(p) - i64::from(q);
    for n in window {
        let sides = [
            (n <= pivot && p >= 1, FixedSide::Zero, p.wrapping_sub(1), q),
            (n >= pivot && q >= 1, FixedSide::One, p, q.wrapping_sub(1)),
        ];
        for (active, side, sp, sq) in sides {
            if !active || sp + sq == 0 {
                continue;
            }
            let gen = sphere_gen_grading(SphereModule { side, p, q }, n);
            let slice = match d_slice(sp, sq, n) {
                Ok(s) => s,
                Err(e) => {
                    r.error(format!("d_slice({sp},{sq},{n})"), e);
                    continue;
                }
            };
            for alpha in slice {
                let off = alpha + Grading::R - gen;
                r.case(!may_be_nonzero(off.a, off.b), || {
                    format!(
                        "({p},{q}) side {side:?} plane {n}: class at {alpha} maps to offset ({},{}) from {gen}",
                        off.a, off.b
                    )
                });
            }
        }
    }
    r
}

/* ------------------------------------------------------------ cancellation */

/// Multiplication by `c_{χω−2}` (resp. `c_{ω−2}`) does not kill basis
/// elements in the ranges where it is cancellable.
pub fn check_cancellation_nonvanishing(p: u32, q: u32, window: RangeInclusive<i64>) -> CheckReport {
    let mut r = CheckReport::new("cancellation", format!("p={p} q={q} n in {}", window_text(&window)));
    let params = params_bq(p, q);
    let (pi, qi) = (i64::from(p), i64::from(q));
    let cxwm2 = Elem::zero(Grading::ZERO).add(&mono_elem(Monomial::C_CHI_OMEGA_MINUS_2), params.mode).expect("zero");
    let cwm2 = mono_elem(Monomial::C_OMEGA_MINUS_2);
    for n in window {
        let slice = match basis_slice::<i64>(&params, n) {
            Ok(s) => s,
            Err(e) => {
                r.error(format!("basis plane {n}"), e);
                continue;
            }
        };
        for (g, x) in slice {
            let (total, fixed) = (g.total_degree(), g.fixed_degree());
            let chi_range = (n >= pi && total >= 2 * (pi - n) && fixed >= 2 * (pi - n))
                || (pi - qi <= n && n <= pi && total >= 4 * (pi - n) && fixed >= 2 * (pi - n));
            let om_range = (n <= -qi && total >= 2 * (qi - n) && fixed >= 2 * qi)
                || (-qi <= n && n <= pi - qi && total >= 4 * qi && fixed >= 2 * qi);
            for (in_range, by, name) in [(chi_range, &cxwm2, "cxwm2"), (om_range, &cwm2, "cwm2")] {
                if !in_range {
                    continue;
                }
                match mul(by, &x, &params) {
                    Ok(y) => r.case(!y.is_zero(), || format!("p={p} q={q}: {name}*({x}) = 0 at {g}")),
                    Err(e) => r.error(format!("{name}*({x})"), e),
                }
            }
        }
    }
    r
}

fn mono_elem(x: Monomial) -> Elem {
    normalize(&RawExpr::monomial(x), &RingParams::classifying()).expect("positive monomial")
}

/* -------------------------------------------------------------- relations */

fn nf(params: &RingParams, x: Monomial) -> Result<Elem> {
    let g = x.grading();
    let out = normalize(&RawExpr::monomial(x), params)?;
    Ok(if out.is_zero() { Elem::zero(g) } else { out })
}

fn nf_raw(params: &RingParams, raw: &RawExpr<i64>, g: Grading) -> Result<Elem> {
    let out = normalize(raw, params)?;
    Ok(if out.is_zero() { Elem::zero(g) } else { out })
}

fn mul_all(params: &RingParams, xs: &[Elem]) -> Result<Elem> {
    let mut acc = nf(params, Monomial::ONE)?;
    for x in xs {
        acc = mul(&acc, x, params)?;
    }
    Ok(acc)
}

/// `c_{χω−2}^{−k} c_ω^m c_{χω}^n := (c_{χω−2}^{−k} c_ω^p) c_ω^{m−p} c_{χω}^n`
/// for `k ≥ 1`, built by multiplying normalized factors; an ordinary monomial
/// for `k ≤ 0`.
fn div_chi(params: &RingParams, p: i64, k: i64, m: i64, n: i64) -> Result<Elem> {
    if k <= 0 {
        return nf(params, Monomial::new(0, -k, m, n));
    }
    mul(&nf(params, Monomial::new(0, -k, p, 0))?, &nf(params, Monomial::new(0, 0, m - p, n))?, params)
}

/// The mirror family `c_{ω−2}^{−k} c_ω^m c_{χω}^n` for `n ≥ q`.
fn div_om(params: &RingParams, q: i64, k: i64, m: i64, n: i64) -> Result<Elem> {
    if k <= 0 {
        return nf(params, Monomial::new(-k, 0, m, n));
    }
    mul(&nf(params, Monomial::new(-k, 0, 0, q))?, &nf(params, Monomial::new(0, 0, m, n - q))?, params)
}

fn lin(params: &RingParams, terms: &[(S, &Elem)], g: Grading) -> Result<Elem> {
    let mut acc = Elem::zero(g);
    for (s, x) in terms {
        acc = acc.add(&x.scale(s, params.mode)?, params.mode)?;
    }
    Ok(acc)
}

fn same(x: &Elem, y: &Elem) -> bool {
    (x.is_zero() && y.is_zero()) || x == y
}

/// Theorem A's relations, every row of the table of further relations, and
/// the closed overflow formula against its one-step recursion.
pub fn check_relations_table(p: u32, q: u32) -> CheckReport {
    let mut r = CheckReport::new("relations", format!("p={p} q={q} k,l in 0..4"));
    if let Err(e) = relations_cases(&mut r, p, q) {
        r.error(format!("p={p} q={q}"), e);
    }
    r
}

fn relations_cases(r: &mut CheckReport, p: u32, q: u32) -> Result<()> {
    let params = params_bq(p, q);
    let (p, q) = (i64::from(p), i64::from(q));
    let e2 = S::e_pow(2);
    let xi = S::xi_pow(1);
    let g = |x: Monomial| x.grading();
    let cw = nf(&params, Monomial::C_OMEGA)?;
    let cxw = nf(&params, Monomial::C_CHI_OMEGA)?;
    let cwm2 = nf(&params, Monomial::C_OMEGA_MINUS_2)?;
    let cxwm2 = nf(&params, Monomial::C_CHI_OMEGA_MINUS_2)?;

    // (1) c_ω^p c_{χω}^q = 0
    let lhs = mul(
        &mul_all(&params, &vec![cw.clone(); p as usize])?,
        &mul_all(&params, &vec![cxw.clone(); q as usize])?,
        &params,
    )?;
    r.case(lhs.is_zero(), || format!("p={p} q={q}: cw^{p}*cxw^{q} = {lhs}"));
    // (2) c_{ω−2} c_{χω} − (1−κ) c_{χω−2} c_ω = e²
    let lhs = mul(&cwm2, &cxw, &params)?
        .sub(&mul(&cxwm2, &cw, &params)?.scale(&S::one_minus_kappa(), params.mode)?, params.mode)?;
    let rhs = nf(&params, Monomial::ONE)?.scale(&e2, params.mode)?;
    r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cwm2*cxw - (1-kappa)*cxwm2*cw = {lhs}"));
    // (3) c_{χω−2} c_{ω−2} = ξ
    let lhs = mul(&cxwm2, &cwm2, &params)?;
    let rhs = nf(&params, Monomial::ONE)?.scale(&xi, params.mode)?;
    r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cxwm2*cwm2 = {lhs}"));

    let ks = 0..=4i64;
    let ms = p..=p + 3;
    let ns_free = 0..=q + 1;
    let ns = q..=q + 3;
    let ms_free = 0..=p + 1;

    for k in ks.clone() {
        for n in ns_free.clone() {
            // row 1, with an extra c_{χω}^n
            let lhs = mul(&div_chi(&params, p, k, p, n)?, &cw, &params)?;
            let t1 = div_chi(&params, p, k + 1, p, n)?;
            let t2 = div_chi(&params, p, k + 2, p, n + 1)?;
            let rhs = lin(&params, &[(e2.clone(), &t1), (xi.clone(), &t2)], lhs.grading())?;
            r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cxwm2^-{k}*cw^{}*cxw^{n}: {lhs} vs {rhs}", p + 1));
        }
        for m in ms_free.clone() {
            // row 2, with an extra c_ω^m
            let lhs = mul(&div_om(&params, q, k, m, q)?, &cxw, &params)?;
            let t1 = div_om(&params, q, k + 1, m, q)?;
            let t2 = div_om(&params, q, k + 2, m + 1, q)?;
            let rhs = lin(&params, &[(e2.clone(), &t1), (xi.clone(), &t2)], lhs.grading())?;
            r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cwm2^-{k}*cw^{m}*cxw^{}: {lhs} vs {rhs}", q + 1));
        }
        for m in ms.clone() {
            for n in ns_free.clone() {
                let x = div_chi(&params, p, k, m, n)?;
                if n >= q {
                    r.case(x.is_zero(), || format!("p={p} q={q}: cxwm2^-{k}*cw^{m}*cxw^{n} = {x}"));
                }
                // rows 5 and 6
                let lhs = mul(&cxwm2, &x, &params)?;
                let rhs = div_chi(&params, p, k - 1, m, n)?;
                r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cxwm2*(cxwm2^-{k}*cw^{m}*cxw^{n}): {lhs} vs {rhs}"));
                let lhs = mul(&cwm2, &x, &params)?;
                let rhs = div_chi(&params, p, k + 1, m, n)?.scale(&xi, params.mode)?;
                r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cwm2*(cxwm2^-{k}*cw^{m}*cxw^{n}): {lhs} vs {rhs}"));
            }
        }
        for n in ns.clone() {
            for m in ms_free.clone() {
                let x = div_om(&params, q, k, m, n)?;
                if m >= p {
                    r.case(x.is_zero(), || format!("p={p} q={q}: cwm2^-{k}*cw^{m}*cxw^{n} = {x}"));
                }
                // rows 8 and 9
                let lhs = mul(&cxwm2, &x, &params)?;
                let rhs = div_om(&params, q, k + 1, m, n)?.scale(&xi, params.mode)?;
                r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cxwm2*(cwm2^-{k}*cw^{m}*cxw^{n}): {lhs} vs {rhs}"));
                let lhs = mul(&cwm2, &x, &params)?;
                let rhs = div_om(&params, q, k - 1, m, n)?;
                r.case(same(&lhs, &rhs), || format!("p={p} q={q}: cwm2*(cwm2^-{k}*cw^{m}*cxw^{n}): {lhs} vs {rhs}"));
            }
        }
    }

    // rows 7, 10, 11: products of divisible classes
    for k in ks.clone() {
        for l in ks.clone() {
            for (m, s) in [(p, p), (p, p + 1), (p + 1, p + 2), (p + 3, p)] {
                for (n, t) in [(0, 0), (0, 1), (1, 1), (q, 0)] {
                    let lhs = mul(&div_chi(&params, p, k, m, n)?, &div_chi(&params, p, l, s, t)?, &params)?;
                    let rhs = div_chi(&params, p, k + l, m + s, n + t)?;
                    r.case(same(&lhs, &rhs), || {
                        format!(
                            "p={p} q={q}: chi-divisible product k={k} l={l} m={m} s={s} n={n} t={t}: {lhs} vs {rhs}"
                        )
                    });
                }
            }
            for (n, t) in [(q, q), (q, q + 1), (q + 1, q + 2), (q + 3, q)] {
                for (m, s) in [(0, 0), (0, 1), (1, 1), (p, 0)] {
                    let lhs = mul(&div_om(&params, q, k, m, n)?, &div_om(&params, q, l, s, t)?, &params)?;
                    let rhs = div_om(&params, q, k + l, m + s, n + t)?;
                    r.case(same(&lhs, &rhs), || {
                        format!(
                            "p={p} q={q}: omega-divisible product k={k} l={l} n={n} t={t} m={m} s={s}: {lhs} vs {rhs}"
                        )
                    });
                }
            }
            for (m, t) in [(p, q), (p + 1, q), (p, q + 2)] {
                for (n, s) in [(0, 0), (1, 0), (0, 1)] {
                    let lhs = mul(&div_chi(&params, p, k, m, n)?, &div_om(&params, q, l, s, t)?, &params)?;
                    r.case(lhs.is_zero(), || format!("p={p} q={q}: mixed divisible product k={k} l={l} = {lhs}"));
                }
            }
        }
    }

    // the closed overflow formula against its one-step recursion
    for k in 0..=4 {
        for t in 0..=4 {
            for n in 0..=q + 1 {
                let x = Monomial::new(0, -k, p + t, n);
                let closed = Rule::OverflowOmega.apply::<i64>(&x, &params).unwrap_or_else(|| vec![(S::one(), x)]);
                let closed = nf_raw(&params, &RawExpr::from_terms(closed), g(x))?;
                let stepped = nf_raw(&params, &overflow_by_steps(x, p, q), g(x))?;
                r.case(same(&closed, &stepped), || format!("p={p} q={q}: overflow of {x}: {closed} vs {stepped}"));
                let y = Monomial::new(-k, 0, n, q + t);
                let closed = Rule::OverflowChiOmega.apply::<i64>(&y, &params).unwrap_or_else(|| vec![(S::one(), y)]);
                let closed = nf_raw(&params, &RawExpr::from_terms(closed), g(y))?;
                let stepped = nf_raw(&params, &overflow_by_steps_mirror(y, p, q), g(y))?;
                r.case(same(&closed, &stepped), || format!("p={p} q={q}: overflow of {y}: {closed} vs {stepped}"));
            }
        }
    }
    Ok(())
}

/// Peels one `c_ω` at a time using
/// `c_{χω−2}^{−k} c_ω^{p+1} = e² c_{χω−2}^{−(k+1)} c_ω^p + ξ c_{χω−2}^{−(k+2)} c_ω^p c_{χω}`,
/// dropping terms with `c_{χω}`-exponent at least `q`.
fn overflow_by_steps(x: Monomial, p: i64, q: i64) -> RawExpr<i64> {
    let mut done = Vec::new();
    let mut work = vec![(S::one(), x)];
    while let Some((s, y)) = work.pop() {
        if y.n >= q {
            continue;
        }
        if y.m <= p {
            done.push((s, y));
            continue;
        }
        work.push((s.mul(&S::e_pow(2), CoefficientMode::Burnside), Monomial::new(y.a, y.b - 1, y.m - 1, y.n)));
        work.push((s.mul(&S::xi_pow(1), CoefficientMode::Burnside), Monomial::new(y.a, y.b - 2, y.m - 1, y.n + 1)));
    }
    RawExpr::from_terms(done)
}

fn overflow_by_steps_mirror(x: Monomial, p: i64, q: i64) -> RawExpr<i64> {
    let mut done = Vec::new();
    let mut work = vec![(S::one(), x)];
    while let Some((s, y)) = work.pop() {
        if y.m >= p {
            continue;
        }
        if y.n <= q {
            done.push((s, y));
            continue;
        }
        work.push((s.mul(&S::e_pow(2), CoefficientMode::Burnside), Monomial::new(y.a - 1, y.b, y.m, y.n - 1)));
        work.push((s.mul(&S::xi_pow(1), CoefficientMode::Burnside), Monomial::new(y.a - 2, y.b, y.m + 1, y.n - 1)));
    }
    RawExpr::from_terms(done)
}

/* ------------------------------------------------------------------- maps */

/// The fixed-set restriction table and the binomial restriction formula
/// `ι^*(c_{χω−2}^{−k} c_ω^{p'} c_{χω}^n) = Σ_ℓ C(p'−p,ℓ) e^{2(p'−p−ℓ)} ξ^ℓ c_{χω−2}^{−(k+p'−p+ℓ)} c_ω^p c_{χω}^{n+ℓ}`
/// for `p' − p ≤ dmax`.
pub fn check_maps_table(p: u32, q: u32, dmax: u32) -> CheckReport {
    let mut r = CheckReport::new("maps", format!("p={p} q={q} p'-p<={dmax}"));
    if let Err(e) = maps_cases(&mut r, p, q, dmax) {
        r.error(format!("p={p} q={q}"), e);
    }
    r
}

fn maps_cases(r: &mut CheckReport, p: u32, q: u32, dmax: u32) -> Result<()> {
    let params = params_bq(p, q);
    let mode = params.mode;
    if p >= 1 && q >= 1 {
        let fixed = |side: FixedSide, s: S, u: i64, c: i64| {
            let trunc = if side == FixedSide::Zero { params.p } else { params.q };
            crate::ring::FixedRingElement::term(side, trunc, mode, s, u, c)
        };
        let swapped = |side: FixedSide| fixed(side, S::e_pow(2), -1, 0).add(&fixed(side, S::xi_pow(1), -2, 1));
        let (z, o) = (FixedSide::Zero, FixedSide::One);
        let table = [
            (Monomial::C_OMEGA, fixed(z, S::one(), 0, 1), swapped(o)),
            (Monomial::C_CHI_OMEGA, swapped(z), fixed(o, S::one(), 0, 1)),
            (Monomial::C_OMEGA_MINUS_2, fixed(z, S::one(), 1, 0), fixed(o, S::xi_pow(1), -1, 0)),
            (Monomial::C_CHI_OMEGA_MINUS_2, fixed(z, S::xi_pow(1), -1, 0), fixed(o, S::one(), 1, 0)),
            (Monomial::new(0, 0, i64::from(p), 0), fixed(z, S::zero(), 0, 0), swapped(o).pow(i64::from(p))),
            (Monomial::new(0, 0, 0, i64::from(q)), swapped(z).pow(i64::from(q)), fixed(o, S::zero(), 0, 0)),
            (
                Monomial::new(0, -1, i64::from(p), 0),
                fixed(z, S::zero(), 0, 0),
                fixed(o, S::one(), -1, 0).mul(&swapped(o).pow(i64::from(p))),
            ),
        ];
        for (x, want0, want1) in table {
            let (got0, got1) = eta(&params, &nf(&params, x)?)?;
            r.case(got0 == want0 && got1 == want1, || {
                format!("p={p} q={q}: eta({x}) = ({got0}, {got1}), expected ({want0}, {want1})")
            });
        }
    }
    for d in 0..=dmax {
        let from = params_bq(p + d, q);
        for k in 0..=3i64 {
            for n in 0..=i64::from(q) {
                let (pi, di) = (i64::from(p), i64::from(d));
                let x = nf(&from, Monomial::new(0, -k, pi + di, n))?;
                let got = restrict(&from, &params, &x)?;
                let mut raw = RawExpr::zero();
                for l in 0..=d {
                    let c: i64 = binomial(di, i64::from(l));
                    let s = Scalar::term(2 * (d - l), l, c);
                    raw = raw.add(&RawExpr::term(s, Monomial::new(0, -(k + di + i64::from(l)), pi, n + i64::from(l))));
                }
                let want = nf_raw(&params, &raw, got.grading())?;
                r.case(same(&got, &want), || {
                    format!("restrict ({},{q})->({p},{q}) of cxwm2^-{k}*cw^{}*cxw^{n}: {got} vs {want}", p + d, p + d)
                });
            }
        }
    }
    Ok(())
}

/* ------------------------------------------------------------------ lewis */

/// Lewis's relations among `γ` and `Γ(k)`, with `Γ(n) = 0` for `n ≥ p`.
pub fn check_lewis(p: u32, q: u32) -> CheckReport {
    let mut r = CheckReport::new("lewis", format!("p={p} q={q}"));
    if let Err(e) = lewis_cases(&mut r, p, q) {
        r.error(format!("p={p} q={q}"), e);
    }
    r
}

fn lewis_cases(r: &mut CheckReport, p: u32, q: u32) -> Result<()> {
    let params = params_bq(p, q);
    let mode = params.mode;
    let gamma: Elem = lewis_generator(&params, LewisGenerator::Gamma)?;
    let big = |k: u32| big_gamma_or_zero::<i64>(&params, k);

    // with q = 0 the two sides of the γ² relation live in different gradings
    if q >= 1 {
        let lhs = mul(&gamma, &gamma, &params)?;
        let rhs = gamma.scale(&S::e_pow(2), mode)?.add(&big(1)?.scale(&S::xi_pow(1), mode)?, mode)?;
        r.case(same(&lhs, &rhs), || format!("p={p} q={q}: gamma^2 = {lhs}, expected {rhs}"));
    }

    for k in q.max(1)..p {
        let lhs = mul(&gamma, &big(k)?, &params)?;
        let rhs = big(k + 1)?.scale(&S::xi_pow(1), mode)?;
        r.case(same(&lhs, &rhs), || format!("p={p} q={q}: gamma*Gamma({k}) = {lhs}, expected {rhs}"));
    }

    for j in 1..p {
        for k in 1..p {
            let lhs = mul(&big(j)?, &big(k)?, &params)?;
            let rhs = if j + k <= q {
                big(j + k)?
            } else {
                let top = j.min(q) + k.min(q) - q;
                let mut acc = Elem::zero(lhs.grading());
                for i in 0..=top {
                    let c: i64 = binomial(i64::from(top), i64::from(i));
                    let s = Scalar::term(2 * (top - i), i, c);
                    acc = acc.add(&big(j + k + i)?.scale(&s, mode)?, mode)?;
                }
                acc
            };
            r.case(same(&lhs, &rhs), || format!("p={p} q={q}: Gamma({j})*Gamma({k}) = {lhs}, expected {rhs}"));
        }
    }
    Ok(())
}

/* ------------------------------------------------------------------- ring */

/// Random generation of test inputs.
struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn scalar(&mut self, homogeneous: bool) -> S {
        let pool = [
            S::one(),
            S::from_int(-1),
            S::from_int(2),
            S::from_int(3),
            S::e_pow(1),
            S::e_pow(2),
            S::term(2, 0, -3),
            S::xi_pow(1),
            S::term(0, 2, 2),
            S::term(1, 1, 1),
            S::term(2, 1, 1),
            S::kappa(),
            S::one_minus_kappa(),
            S::kappa().scale(&-2),
        ];
        let s = pool.choose(&mut self.rng).expect("pool").clone();
        if !homogeneous && self.rng.gen_bool(0.2) {
            s.add(pool.choose(&mut self.rng).expect("pool"))
        } else {
            s
        }
    }

    /// A legitimate exponent vector for `params`, with negative exponents
    /// only where a divisible class exists.
    fn monomial(&mut self, params: &RingParams) -> Monomial {
        let cap = |e: Extended| e.finite().unwrap_or(3);
        let (pc, qc) = (cap(params.p), cap(params.q));
        let mut a = self.rng.gen_range(-3..=3);
        let mut b = self.rng.gen_range(-3..=3);
        let mut m = self.rng.gen_range(0..=pc + 3);
        let mut n = self.rng.gen_range(0..=qc + 3);
        if b < 0 {
            match params.p.finite() {
                Some(p) => m = m.max(p + self.rng.gen_range(0..=2)),
                None => b = -b,
            }
        }
        if a < 0 {
            match params.q.finite() {
                Some(q) => n = n.max(q + self.rng.gen_range(0..=2)),
                None => a = -a,
            }
        }
        Monomial::new(a, b, m, n)
    }

    /// A random nonzero homogeneous element: a basis monomial times a scalar
    /// (or, for infinite indices, a normalized random monomial).
    fn element(&mut self, params: &RingParams) -> Result<Elem> {
        let x = match params.finite_pq() {
            Some((p, q)) => {
                let n = self.rng.gen_range(-4..=4);
                let slice = d_slice(p, q, n)?;
                let g = *slice.choose(&mut self.rng).expect("nonempty slice");
                basis_monomial(params, g)?
            }
            None => loop {
                let x = nf(params, self.monomial(params))?;
                if !x.is_zero() {
                    break x;
                }
            },
        };
        let s = self.scalar(true);
        let y = x.scale(&s, params.mode)?;
        Ok(if y.is_zero() { x } else { y })
    }
}

fn expr_of(x: &Elem) -> String {
    format!("({x})")
}

/// Confluence, commutativity/associativity, soundness of normal forms,
/// overflow closed form, η homomorphism, restriction functoriality and the
/// constant-Z relation, for one parameter set.
pub fn check_ring_suite(params: &RingParams, trials: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("ring", format!("{params} trials={trials} seed={seed}"));
    r.absorb(check_confluence(params, trials, seed));
    r.absorb(check_mul_laws(params, trials, seed ^ 0x9e37));
    if let Some((p, q)) = params.finite_pq() {
        r.absorb(check_basis_soundness(p, q, -10..=10));
        if p >= 1 && q >= 1 {
            r.absorb(check_eta_homomorphism(params, trials.min(2000), seed ^ 0x51));
        }
        if p == 0 || q == 0 {
            r.absorb(check_fixed_consistency(params, trials.min(2000), seed ^ 0x77));
        }
        r.absorb(check_restriction_functoriality(p, q, trials.min(500), seed ^ 0x33));
        r.absorb(check_pushforward_splitting(p, q, -6..=6));
        r.absorb(check_projection_formula(p, q, trials.min(500), seed ^ 0x21));
        r.absorb(check_divisibility(p, q));
        if p >= 1 && q >= 1 {
            r.absorb(check_constz_corollary(p, q));
        }
    } else {
        r.absorb(check_infinite_cases(params));
    }
    r
}

/// Normalizing under random rule orders agrees with the priority strategy.
pub fn check_confluence(params: &RingParams, trials: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("confluence", format!("{params} trials={trials} seed={seed}"));
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let terms = sampler.rng.gen_range(1..=2);
        let raw = RawExpr::from_terms((0..terms).map(|_| {
            let s = sampler.scalar(false);
            (s, sampler.monomial(params))
        }));
        let (reference, random) =
            (normalize_graded(&raw, params), normalize_randomized(&raw, params, &mut sampler.rng, 1_000_000));
        match (reference, random) {
            (Ok(a), Ok(b)) => r.case(a == b, || format!("{params}: {raw} normalizes to {a:?} and {b:?}")),
            (Err(e), _) | (_, Err(e)) => r.error(format!("{params}: {raw}"), e),
        }
    }
    r
}

/// Commutativity and associativity of the product on random elements.
pub fn check_mul_laws(params: &RingParams, trials: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("mul-laws", format!("{params} trials={trials} seed={seed}"));
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let run = |sampler: &mut Sampler, r: &mut CheckReport| -> Result<()> {
            let (x, y, z) = (sampler.element(params)?, sampler.element(params)?, sampler.element(params)?);
            let xy = mul(&x, &y, params)?;
            let yx = mul(&y, &x, params)?;
            r.case(same(&xy, &yx), || format!("{params}: {} * {} not commutative", expr_of(&x), expr_of(&y)));
            let left = mul(&xy, &z, params)?;
            let right = mul(&x, &mul(&y, &z, params)?, params)?;
            r.case(same(&left, &right), || {
                format!(
                    "{params}: ({} * {}) * {} = {left} but {} * ({} * {}) = {right}",
                    expr_of(&x),
                    expr_of(&y),
                    expr_of(&z),
                    expr_of(&x),
                    expr_of(&y),
                    expr_of(&z)
                )
            });
            Ok(())
        };
        if let Err(e) = run(&mut sampler, &mut r) {
            r.error(params, e);
        }
    }
    r
}

/// Basis elements sit at their gradings, one per grading, and products of
/// basis elements expand in the basis.
pub fn check_basis_soundness(p: u32, q: u32, window: RangeInclusive<i64>) -> CheckReport {
    let mut r = CheckReport::new("basis", format!("p={p} q={q} n in {}", window_text(&window)));
    let params = params_bq(p, q);
    let mut planes = Vec::new();
    for n in window.clone() {
        match basis_slice::<i64>(&params, n) {
            Ok(slice) => {
                let gradings: BTreeSet<_> = slice.iter().map(|(g, _)| *g).collect();
                r.case(gradings.len() == (p + q) as usize, || {
                    format!("({p},{q}) plane {n}: {} distinct gradings", gradings.len())
                });
                for (g, x) in &slice {
                    let mono = x.as_monomial();
                    r.case(mono.is_some_and(|m| m.grading() == *g), || {
                        format!("({p},{q}): basis element at {g} is {x}")
                    });
                }
                planes.push(slice);
            }
            Err(e) => r.error(format!("({p},{q}) plane {n}"), e),
        }
    }
    // closure: products land on basis gradings (normalize checks D-membership)
    for a in planes.iter().step_by(3) {
        for b in planes.iter().step_by(4) {
            for (_, x) in a {
                for (_, y) in b {
                    match mul(x, y, &params) {
                        Ok(z) => {
                            let ok = z.terms().all(|(m, _)| {
                                d_slice(p, q, m.grading().c).map(|s| s.contains(&m.grading())).unwrap_or(false)
                            });
                            r.case(ok, || format!("({p},{q}): {x} * {y} = {z} leaves the basis"));
                        }
                        Err(e) => r.error(format!("({p},{q}): {x} * {y}"), e),
                    }
                }
            }
        }
    }
    r
}

/// `c_{χω−2}^k` times the class at the grading of `c_{χω−2}^{−k} c_ω^p`
/// gives back `c_ω^p`, and likewise for the mirror family.
pub fn check_divisibility(p: u32, q: u32) -> CheckReport {
    let mut r = CheckReport::new("divisibility", format!("p={p} q={q} k in 1..6"));
    let params = params_bq(p, q);
    let (pi, qi) = (i64::from(p), i64::from(q));
    for k in 1..=6 {
        for (div, power, target) in [
            (Monomial::new(0, -k, pi, 0), Monomial::new(0, k, 0, 0), Monomial::new(0, 0, pi, 0)),
            (Monomial::new(-k, 0, 0, qi), Monomial::new(k, 0, 0, 0), Monomial::new(0, 0, 0, qi)),
        ] {
            let g = div.grading();
            let (Some((pp, qq)), true) = (params.finite_pq(), q > 0 && p > 0) else { continue };
            let run = || -> Result<(Elem, Elem)> {
                let basis = basis_monomial::<i64>(&params, g)?;
                Ok((mul(&nf(&params, power)?, &basis, &params)?, nf(&params, target)?))
            };
            match run() {
                Ok((lhs, rhs)) => {
                    r.case(same(&lhs, &rhs), || format!("({pp},{qq}): {power} * basis at {g} = {lhs}, expected {rhs}"))
                }
                Err(e) => r.error(format!("({pp},{qq}) grading {g}"), e),
            }
        }
    }
    r
}

/// `η(xy) = η(x) η(y)` on random pairs.
pub fn check_eta_homomorphism(params: &RingParams, trials: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("eta", format!("{params} trials={trials} seed={seed}"));
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let run = |sampler: &mut Sampler| -> Result<Option<String>> {
            let (x, y) = (sampler.element(params)?, sampler.element(params)?);
            let (x0, x1) = eta(params, &x)?;
            let (y0, y1) = eta(params, &y)?;
            let (z0, z1) = eta(params, &mul(&x, &y, params)?)?;
            let ok = z0 == x0.mul(&y0) && z1 == x1.mul(&y1);
            Ok((!ok).then(|| format!("{params}: eta not multiplicative on {} * {}", expr_of(&x), expr_of(&y))))
        };
        match run(&mut sampler) {
            Ok(fail) => r.case(fail.is_none(), || fail.unwrap_or_default()),
            Err(e) => r.error(params, e),
        }
    }
    r
}

/// For `p·q = 0` the ring is its own fixed-set model.
pub fn check_fixed_consistency(params: &RingParams, trials: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("fixed-ring", format!("{params} trials={trials} seed={seed}"));
    let side = if params.q.is_zero() { FixedSide::Zero } else { FixedSide::One };
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let raw = RawExpr::term(sampler.scalar(true), sampler.monomial(params));
        let run = || -> Result<(Vec<Elem>, Vec<Elem>)> {
            let via_ring = normalize_graded(&raw, params)?;
            let fixed = fixed_ring_normalize(side, params, &raw)?;
            let via_fixed = normalize_graded(&fixed.to_raw(), params)?;
            Ok((via_ring, via_fixed))
        };
        match run() {
            Ok((a, b)) => {
                let nonzero = |v: Vec<Elem>| v.into_iter().filter(|e| !e.is_zero()).collect::<Vec<_>>();
                let (a, b) = (nonzero(a), nonzero(b));
                r.case(a == b, || format!("{params}: {raw}: ring {a:?} vs fixed model {b:?}"));
            }
            Err(e) => r.error(format!("{params}: {raw}"), e),
        }
    }
    r
}

/// `restrict(a→c) = restrict(b→c) ∘ restrict(a→b)` for nested parameters.
pub fn check_restriction_functoriality(p: u32, q: u32, trials: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("restriction", format!("p={p} q={q} trials={trials} seed={seed}"));
    let mut sampler = Sampler::new(seed);
    let big = params_bq(p, q);
    let mids: Vec<(u32, u32)> =
        (0..=p).flat_map(|a| (0..=q).map(move |b| (a, b))).filter(|&(a, b)| a + b > 0).collect();
    for _ in 0..trials {
        let &(mp, mq) = mids.choose(&mut sampler.rng).expect("nonempty");
        let (lp, lq) = (sampler.rng.gen_range(0..=mp), sampler.rng.gen_range(0..=mq));
        if lp + lq == 0 {
            continue;
        }
        let (mid, low) = (params_bq(mp, mq), params_bq(lp, lq));
        let run = |sampler: &mut Sampler| -> Result<(Elem, Elem, Elem)> {
            let x = sampler.element(&big)?;
            let direct = restrict(&big, &low, &x)?;
            let staged = restrict(&mid, &low, &restrict(&big, &mid, &x)?)?;
            Ok((x, direct, staged))
        };
        match run(&mut sampler) {
            Ok((x, d, s)) => r.case(same(&d, &s), || format!("({p},{q})->({mp},{mq})->({lp},{lq}) on {x}: {d} vs {s}")),
            Err(e) => r.error(format!("({p},{q})->({mp},{mq})->({lp},{lq})"), e),
        }
    }
    r
}

/// In the isomorphism ranges of the push-forwards, basis elements of
/// `X_{p,q}` are unit multiples of `c_{χω}` (for `n ≤ 0`, `|α| > −2n`,
/// `α^G > 0`) or `c_ω` (for `n ≥ 0`, `|α| > −2n`, `α^G > −2n`) times basis
/// elements of `X_{p,q−1}` (resp. `X_{p−1,q}`).
pub fn check_pushforward_splitting(p: u32, q: u32, window: RangeInclusive<i64>) -> CheckReport {
    let mut r = CheckReport::new("pushforward", format!("p={p} q={q} n in {}", window_text(&window)));
    let target = params_bq(p, q);
    let units = [S::one(), S::from_int(-1), S::one_minus_kappa(), S::one_minus_kappa().neg()];
    for n in window {
        let slice = match basis_slice::<i64>(&target, n) {
            Ok(s) => s,
            Err(e) => {
                r.error(format!("({p},{q}) plane {n}"), e);
                continue;
            }
        };
        for (g, x) in slice {
            let (total, fixed) = (g.total_degree(), g.fixed_degree());
            let steps = [
                (n <= 0 && q >= 1 && total > -2 * n && fixed > 0, p, q.wrapping_sub(1), Monomial::C_CHI_OMEGA),
                (n >= 0 && p >= 1 && total > -2 * n && fixed > -2 * n, p.wrapping_sub(1), q, Monomial::C_OMEGA),
            ];
            for (active, sp, sq, by) in steps {
                if !active || sp + sq == 0 {
                    continue;
                }
                let run = || -> Result<Elem> {
                    let source = params_bq(sp, sq);
                    let y = basis_monomial::<i64>(&source, g - by.grading())?;
                    normalize(&y.to_raw().mul(&RawExpr::monomial(by)), &target)
                };
                match run() {
                    Ok(z) => {
                        let ok = z.as_monomial() == x.as_monomial() && z.terms().all(|(_, s)| units.contains(s));
                        r.case(ok, || {
                            format!(
                                "({p},{q}) at {g}: {by} times the ({sp},{sq}) basis element gives {z}, basis is {x}"
                            )
                        });
                    }
                    Err(e) => r.error(format!("({p},{q}) at {g} from ({sp},{sq})"), e),
                }
            }
        }
    }
    r
}

/// `j̃_!(x · ι^*y) = j̃_!(x) · y`.
pub fn check_projection_formula(p: u32, q: u32, trials: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new("projection", format!("p={p} q={q} trials={trials} seed={seed}"));
    if p == 0 || p + q == 1 {
        return r;
    }
    let (big, small) = (params_bq(p, q), params_bq(p - 1, q));
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let run = |sampler: &mut Sampler| -> Result<(Elem, Elem, Elem, Elem)> {
            let (x, y) = (sampler.element(&small)?, sampler.element(&big)?);
            let lhs = pushforward_omega(&big, &mul(&x, &restrict(&big, &small, &y)?, &small)?)?;
            let rhs = mul(&pushforward_omega(&big, &x)?, &y, &big)?;
            Ok((x, y, lhs, rhs))
        };
        match run(&mut sampler) {
            Ok((x, y, lhs, rhs)) => r.case(same(&lhs, &rhs), || format!("({p},{q}): x={x} y={y}: {lhs} vs {rhs}")),
            Err(e) => r.error(format!("({p},{q})"), e),
        }
    }
    r
}

/// With constant-Z coefficients, `c_{ω−2} c_{χω} − c_{χω−2} c_ω = e²`.
pub fn check_constz_corollary(p: u32, q: u32) -> CheckReport {
    let mut r = CheckReport::new("constz", format!("p={p} q={q}"));
    let params = params_bq(p, q).with_mode(CoefficientMode::ConstantZ);
    let raw = RawExpr::monomial(Monomial::new(1, 0, 0, 1)).sub(&RawExpr::monomial(Monomial::new(0, 1, 1, 0)));
    match (normalize(&raw, &params), nf(&params, Monomial::ONE).and_then(|one| one.scale(&S::e_pow(2), params.mode))) {
        (Ok(lhs), Ok(rhs)) => r.case(same(&lhs, &rhs), || format!("({p},{q}) constz: cwm2*cxw - cxwm2*cw = {lhs}")),
        (Err(e), _) | (_, Err(e)) => r.error(format!("({p},{q}) constz"), e),
    }
    r
}

/// Behaviour specific to one or two infinite indices.
pub fn check_infinite_cases(params: &RingParams) -> CheckReport {
    let mut r = CheckReport::new("infinite", params.to_string());
    if params.p == Extended::Infinite {
        for k in 0..=12 {
            match nf(params, Monomial::new(0, 0, k, 0)) {
                Ok(x) => {
                    r.case(x.as_monomial() == Some(Monomial::new(0, 0, k, 0)), || format!("{params}: cw^{k} = {x}"))
                }
                Err(e) => r.error(format!("cw^{k}"), e),
            }
        }
    }
    if params.q == Extended::Infinite {
        for k in 0..=12 {
            match nf(params, Monomial::new(0, 0, 0, k)) {
                Ok(x) => {
                    r.case(x.as_monomial() == Some(Monomial::new(0, 0, 0, k)), || format!("{params}: cxw^{k} = {x}"))
                }
                Err(e) => r.error(format!("cxw^{k}"), e),
            }
        }
    }
    if let (Some(p), Extended::Infinite) = (params.p.finite(), params.q) {
        let run = || -> Result<(Elem, Elem)> {
            let lhs = nf(params, Monomial::new(0, 0, p + 1, 0))?;
            let t1 = nf(params, Monomial::new(0, -1, p, 0))?.scale(&S::e_pow(2), params.mode)?;
            let t2 = nf(params, Monomial::new(0, -2, p, 1))?.scale(&S::xi_pow(1), params.mode)?;
            Ok((lhs, t1.add(&t2, params.mode)?))
        };
        match run() {
            Ok((lhs, rhs)) => r.case(same(&lhs, &rhs), || format!("{params}: cw^{} = {lhs}, expected {rhs}", p + 1)),
            Err(e) => r.error(params, e),
        }
    }
    r
}

/// Every suite at once, as run by `check --suite all`.
pub fn run_all(pmax: u32, qmax: u32, window: RangeInclusive<i64>, trials: usize, seed: u64) -> Vec<CheckReport> {
    let mut out = vec![check_grading_suite(pmax, qmax, window.clone(), seed)];
    out.push(check_boundedness((pmax + qmax).min(8), window.clone()));
    for p in 0..=pmax {
        for q in 0..=qmax {
            if p + q == 0 {
                continue;
            }
            if p >= 1 && q >= 1 {
                out.push(check_splitting_vanishing(p, q, window.clone()));
            }
            out.push(check_cancellation_nonvanishing(p, q, window.clone()));
            out.push(check_relations_table(p, q));
            out.push(check_maps_table(p, q, 3));
            if q <= p {
                out.push(check_lewis(p, q));
            }
            out.push(check_ring_suite(&params_bq(p, q), trials, seed.wrapping_add(u64::from(p * 31 + q))));
        }
    }
    let inf = Extended::Infinite;
    for (p, q) in [(inf, inf), (Extended::Finite(pmax.max(1)), inf), (inf, Extended::Finite(qmax.max(1)))] {
        let params = RingParams::new(p, q, CoefficientMode::Burnside).expect("nonempty");
        out.push(check_ring_suite(&params, trials, seed ^ 0xff));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_bookkeeping() {
        let mut r = CheckReport::new("demo", "none");
        r.case(true, || unreachable!());
        r.case(false, || "boom".into());
        assert_eq!(r.cases, 2);
        assert!(!r.passed());
        let mut outer = CheckReport::new("outer", "");
        outer.absorb(r);
        assert_eq!(outer.failures, vec!["[demo] boom".to_string()]);
        assert_eq!(outer.to_json()["cases"], 2);
    }

    #[test]
    fn small_suites_pass() {
        assert!(check_x12_diagrams().passed());
        let r = check_splitting_vanishing(2, 1, -12..=12);
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_relations_table(1, 2);
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_lewis(3, 2);
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_maps_table(2, 2, 3);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn splitting_offset_of_example() {
        // (p,q) = (1,1), plane 0: the class 1 of X_{0,1} lands at offset (1,−2)
        let gen = sphere_gen_grading(SphereModule { side: FixedSide::Zero, p: 1, q: 1 }, 0);
        let off = Grading::ZERO + Grading::R - gen;
        assert_eq!((off.a, off.b), (1, -2));
        assert!(!may_be_nonzero(off.a, off.b));
        assert!(may_be_nonzero(0, 0));
    }
}
