//! Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the summary lines are always shown.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use eqproj::grading::{d_slice, Grading};
use eqproj::maps::{big_gamma_or_zero, lewis_generator, LewisGenerator};
use eqproj::ring::{basis_monomial, basis_slice, mul, normalize, parse_expr, RingParams};
use eqproj::verify::{self, CheckReport};
use eqproj::{CoefficientMode, Element64, RawExpr64, Scalar64};

struct Outcome {
    cases: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, r: CheckReport) {
        self.cases += r.cases;
        self.failures.extend(r.failures.into_iter().map(|f| format!("[{}] {f}", r.name)));
    }
}

fn finite(p: u32, q: u32) -> RingParams {
    RingParams::finite(p, q).unwrap()
}

fn nf(text: &str, params: &RingParams) -> Element64 {
    let raw: RawExpr64 = parse_expr(text).unwrap();
    normalize(&raw, params).unwrap()
}

/// The six plane diagrams for `X_{1,2}`, as drawn: `(α^G/2, |α|/2, label)`.
type Figure = (i64, [(i64, i64, &'static str); 3]);

const X12_FIGURES: [Figure; 6] = [
    (2, [(-2, -2, "cwm2^2"), (0, -1, "cxwm2^-1*cw"), (1, 0, "cxwm2^-2*cw*cxw")]),
    (1, [(-1, -1, "cwm2"), (0, 0, "cw"), (1, 1, "cxwm2^-1*cw*cxw")]),
    (0, [(0, 0, "1"), (0, 1, "cxwm2*cw"), (1, 2, "cw*cxw")]),
    (-1, [(0, 1, "cxwm2"), (1, 2, "cxw"), (1, 3, "cxwm2*cw*cxw")]),
    (-2, [(0, 2, "cxwm2^2"), (1, 3, "cxwm2*cxw"), (2, 4, "cxw^2")]),
    (-3, [(0, 3, "cxwm2^3"), (1, 4, "cxwm2^2*cxw"), (3, 5, "cwm2^-1*cxw^2")]),
];

fn example_reproduction() -> Outcome {
    let mut out = Outcome::new();
    let params = finite(1, 2);
    for (n, points) in X12_FIGURES {
        // α^G = a and |α| = a + b, in units of two
        let want: BTreeSet<Grading> = points.iter().map(|&(x, y, _)| Grading::new(2 * x, 2 * (y - x), n)).collect();
        let got: BTreeSet<Grading> = d_slice(1, 2, n).unwrap().into_iter().collect();
        out.check(got == want, || format!("plane {n}: {got:?} vs {want:?}"));
        for &(x, y, label) in &points {
            let g = Grading::new(2 * x, 2 * (y - x), n);
            let basis = basis_monomial::<i64>(&params, g).unwrap();
            let drawn = nf(label, &params);
            out.check(basis == drawn, || format!("plane {n} at {g}: basis {basis}, figure {label}"));
        }
    }
    out
}

fn basis_bookkeeping() -> Outcome {
    let mut out = Outcome::new();
    for total in 1..=6u32 {
        for p in 0..=total {
            let q = total - p;
            let params = finite(p, q);
            for n in -10..=10 {
                let slice = basis_slice::<i64>(&params, n).unwrap();
                let gradings: Vec<Grading> = slice.iter().map(|(g, _)| *g).collect();
                let distinct: BTreeSet<Grading> = gradings.iter().copied().collect();
                out.check(slice.len() == total as usize && distinct.len() == slice.len(), || {
                    format!("({p},{q}) plane {n}: {} classes, {} distinct", slice.len(), distinct.len())
                });
                out.check(gradings == d_slice(p, q, n).unwrap(), || {
                    format!("({p},{q}) plane {n}: gradings differ from d_slice")
                });
                for (g, x) in &slice {
                    let ok = x.as_monomial().is_some_and(|m| m.grading() == *g);
                    out.check(ok, || format!("({p},{q}) at {g}: {x} is not a monomial of that grading"));
                }
            }
        }
    }
    out
}

fn ring_identities() -> Outcome {
    let mut out = Outcome::new();
    for p in 0..=4 {
        for q in 0..=4 {
            if p + q > 0 {
                out.report(verify::check_relations_table(p, q));
            }
        }
    }
    // a few values written out by hand
    let params = finite(1, 2);
    out.check(nf("cxwm2*cw*cxwm2*cw", &params).to_string() == "e^2*cxwm2*cw + xi*cw*cxw", || {
        "gamma squared in X_{1,2}".into()
    });
    out.check(nf("cw^2*cxw^2", &finite(2, 2)).is_zero(), || "cw^2*cxw^2 in X_{2,2}".into());
    out.check(nf("cxwm2*cwm2", &finite(3, 1)).to_string() == "xi", || "cxwm2*cwm2 in X_{3,1}".into());
    out
}

fn lewis_comparison() -> Outcome {
    let mut out = Outcome::new();
    for (p, q) in [(2, 1), (3, 2), (4, 2)] {
        out.report(verify::check_lewis(p, q));
    }
    // (3,2): γΓ(2) = ξΓ(3) = 0 and Γ(1)Γ(1) = Γ(2)
    let params = finite(3, 2);
    let gamma: Element64 = lewis_generator(&params, LewisGenerator::Gamma).unwrap();
    let g = |k| big_gamma_or_zero::<i64>(&params, k).unwrap();
    out.check(mul(&gamma, &g(2), &params).unwrap().is_zero(), || "gamma*Gamma(2) in X_{3,2}".into());
    out.check(mul(&g(1), &g(1), &params).unwrap() == g(2), || "Gamma(1)^2 in X_{3,2}".into());
    // (4,2): Γ(2)Γ(2) = e⁴Γ(4) + 2e²ξΓ(5) + ξ²Γ(6) = 0, as Γ(n) = 0 for n ≥ 4
    let params = finite(4, 2);
    let g2 = big_gamma_or_zero::<i64>(&params, 2).unwrap();
    out.check(mul(&g2, &g2, &params).unwrap().is_zero(), || "Gamma(2)^2 in X_{4,2}".into());
    let g1 = big_gamma_or_zero::<i64>(&params, 1).unwrap();
    let g3 = big_gamma_or_zero::<i64>(&params, 3).unwrap();
    out.check(mul(&g1, &g2, &params).unwrap() == g3.scale(&Scalar64::e_pow(2), params.mode).unwrap(), || {
        "Gamma(1)*Gamma(2) in X_{4,2}".into()
    });
    out
}

fn maps_tables() -> Outcome {
    let mut out = Outcome::new();
    for p in 0..=3 {
        for q in 0..=3 {
            if p + q > 0 {
                out.report(verify::check_maps_table(p, q, 3));
            }
        }
    }
    out
}

fn splitting() -> Outcome {
    let mut out = Outcome::new();
    for p in 1..=5 {
        for q in 1..=5 {
            out.report(verify::check_splitting_vanishing(p, q, -12..=12));
        }
    }
    out
}

fn boundedness() -> Outcome {
    let mut out = Outcome::new();
    out.report(verify::check_boundedness(8, -20..=20));
    out
}

fn robustness() -> Outcome {
    let mut out = Outcome::new();
    for p in 0..=3u32 {
        for q in 0..=3u32 {
            if p + q == 0 {
                continue;
            }
            let params = finite(p, q);
            let seed = 1000 + u64::from(10 * p + q);
            out.report(verify::check_confluence(&params, 10_000, seed));
            out.report(verify::check_mul_laws(&params, 10_000, seed));
            if p >= 1 && q >= 1 {
                out.report(verify::check_constz_corollary(p, q));
            }
        }
    }
    let constz = finite(1, 1).with_mode(CoefficientMode::ConstantZ);
    out.check(nf("cwm2*cxw - cxwm2*cw", &constz).to_string() == "e^2", || "constant-Z relation in X_{1,1}".into());
    out
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("example reproduction", example_reproduction),
        ("basis bookkeeping", basis_bookkeeping),
        ("ring identities", ring_identities),
        ("lewis comparison", lewis_comparison),
        ("maps", maps_tables),
        ("degree-forced splitting", splitting),
        ("boundedness", boundedness),
        ("robustness", robustness),
    ];
    let mut all_passed = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {} ({name}): {status} cases={} failures={} time={secs:.1}s",
            k + 1,
            outcome.cases,
            outcome.failures.len()
        );
        for f in outcome.failures.iter().take(5) {
            println!("    {f}");
        }
        all_passed &= outcome.failures.is_empty();
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
