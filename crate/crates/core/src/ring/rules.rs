//! The rewrite system that brings formal combinations into canonical form.
//!
//! Every rule is an identity in the cohomology ring, valid whenever its
//! precondition holds, independently of the others. The production strategy
//! applies the first rule in [`RULE_PRIORITY`] and memoizes per monomial;
//! [`normalize_randomized`] instead picks any applicable rule at random, which
//! is how confluence is tested.

use std::collections::{BTreeMap, HashMap};

use num_integer::binomial;
use rand::Rng;

use crate::error::{Error, Result};
use crate::grading::{d_slice, Extended, Grading};
use crate::scalar::{int, Coeff, Scalar};

use super::element::{Element, RawExpr};
use super::monomial::Monomial;
use super::RingParams;

/// One rewrite rule, named after the relation it implements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `c_ω^m c_{χω}^n = 0` for `m ≥ p`, `n ≥ q`, whatever the divisors.
    Zero,
    /// `c_{ω−2} c_{χω−2} = ξ`, including its divisible-class variants.
    MixedDivisor,
    /// A product of the two kinds of divisible class vanishes.
    BothNegative,
    /// Overflow of `c_ω` past `p` in the χ-divisible family, in closed form.
    OverflowOmega,
    /// Overflow of `c_{χω}` past `q` in the ω-divisible family, in closed form.
    OverflowChiOmega,
    /// `c_{ω−2}` times a class with `m ≥ p` becomes `ξ c_{χω−2}^{−1}`.
    SaturatedOmega,
    /// `c_{χω−2}` times a class with `n ≥ q` becomes `ξ c_{ω−2}^{−1}`.
    SaturatedChiOmega,
    /// `c_{ω−2} c_{χω} = e² + (1−κ) c_{χω−2} c_ω`.
    SplitPlus,
    /// `c_{χω−2} c_ω = e² + (1−κ) c_{ω−2} c_{χω}`, used once `b ≥ 2`.
    SplitMinus,
}

/// The order in which the production strategy tries the rules.
pub const RULE_PRIORITY: [Rule; 9] = [
    Rule::Zero,
    Rule::MixedDivisor,
    Rule::BothNegative,
    Rule::OverflowOmega,
    Rule::OverflowChiOmega,
    Rule::SaturatedOmega,
    Rule::SaturatedChiOmega,
    Rule::SplitPlus,
    Rule::SplitMinus,
];

fn at_least(bound: Extended, k: i64) -> bool {
    bound.le_int(k)
}

fn beyond(bound: Extended, k: i64) -> bool {
    bound.lt_int(k)
}

impl Rule {
    /// Short label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Rule::Zero => "Z",
            Rule::MixedDivisor => "X1",
            Rule::BothNegative => "X2",
            Rule::OverflowOmega => "D1",
            Rule::OverflowChiOmega => "D2",
            Rule::SaturatedOmega => "E1",
            Rule::SaturatedChiOmega => "E2",
            Rule::SplitPlus => "S+",
            Rule::SplitMinus => "S-",
        }
    }

    pub fn applies(self, x: &Monomial, params: &RingParams) -> bool {
        let (p, q) = (params.p, params.q);
        let Monomial { a, b, m, n } = *x;
        match self {
            Rule::Zero => at_least(p, m) && at_least(q, n),
            Rule::MixedDivisor => a != 0 && b != 0 && !(a < 0 && b < 0),
            Rule::BothNegative => a < 0 && b < 0,
            Rule::OverflowOmega => a == 0 && beyond(p, m),
            Rule::OverflowChiOmega => b == 0 && beyond(q, n),
            Rule::SaturatedOmega => a > 0 && b == 0 && at_least(p, m),
            Rule::SaturatedChiOmega => b > 0 && a == 0 && at_least(q, n),
            Rule::SplitPlus => a > 0 && b == 0 && n > 0,
            Rule::SplitMinus => b >= 2 && a == 0 && m > 0,
        }
    }

    /// The right-hand side of the rule at `x`, or `None` if it does not apply.
    pub fn apply<T: Coeff>(self, x: &Monomial, params: &RingParams) -> Option<Vec<(Scalar<T>, Monomial)>> {
        if !self.applies(x, params) {
            return None;
        }
        let Monomial { a, b, m, n } = *x;
        let xi = || Scalar::xi_pow(1);
        let e2 = || Scalar::e_pow(2);
        let out = match self {
            Rule::Zero | Rule::BothNegative => Vec::new(),
            Rule::MixedDivisor => vec![(xi(), Monomial::new(a - 1, b - 1, m, n))],
            Rule::OverflowOmega => {
                let p = params.p.finite().expect("rule only fires for finite p");
                overflow_sum(m - p)
                    .filter(|&(l, _)| !at_least(params.q, n + l))
                    .map(|(l, s)| (s, Monomial::new(0, b - (m - p) - l, p, n + l)))
                    .collect()
            }
            Rule::OverflowChiOmega => {
                let q = params.q.finite().expect("rule only fires for finite q");
                overflow_sum(n - q)
                    .filter(|&(l, _)| !at_least(params.p, m + l))
                    .map(|(l, s)| (s, Monomial::new(a - (n - q) - l, 0, m + l, q)))
                    .collect()
            }
            Rule::SaturatedOmega => vec![(xi(), Monomial::new(a - 1, -1, m, n))],
            Rule::SaturatedChiOmega => vec![(xi(), Monomial::new(-1, b - 1, m, n))],
            Rule::SplitPlus => vec![
                (e2(), Monomial::new(a - 1, b, m, n - 1)),
                (Scalar::one_minus_kappa(), Monomial::new(a - 1, b + 1, m + 1, n - 1)),
            ],
            Rule::SplitMinus => vec![
                (e2(), Monomial::new(a, b - 1, m - 1, n)),
                (Scalar::one_minus_kappa(), Monomial::new(a + 1, b - 1, m - 1, n + 1)),
            ],
        };
        Some(out)
    }
}

/// `(ℓ, C(t,ℓ)·e^{2(t−ℓ)}ξ^ℓ)` for `ℓ = 0..=t`.
fn overflow_sum<T: Coeff>(t: i64) -> impl Iterator<Item = (i64, Scalar<T>)> {
    (0..=t).map(move |l| {
        let c: T = binomial(int::<T>(t), int::<T>(l));
        (l, Scalar::term(2 * (t - l) as u32, l as u32, c))
    })
}

/// Checks that a raw exponent vector denotes an actual class: a negative
/// exponent on `c_{χω−2}` needs `m ≥ p`, one on `c_{ω−2}` needs `n ≥ q`.
pub fn check_legitimate(x: &Monomial, params: &RingParams) -> Result<()> {
    for (negative, bound, exponent) in [(x.b < 0, params.p, x.m), (x.a < 0, params.q, x.n)] {
        if !negative {
            continue;
        }
        match bound {
            Extended::Infinite => return Err(Error::InfiniteDivisor(x.to_string())),
            Extended::Finite(k) if exponent < i64::from(k) => {
                return Err(Error::IllegalDivisibleClass(x.to_string()));
            }
            Extended::Finite(_) => {}
        }
    }
    Ok(())
}

fn first_rule(x: &Monomial, params: &RingParams) -> Option<Rule> {
    RULE_PRIORITY.into_iter().find(|r| r.applies(x, params))
}

fn add_into<T: Coeff>(acc: &mut BTreeMap<Monomial, Scalar<T>>, mono: Monomial, s: Scalar<T>) {
    if s.is_zero() {
        return;
    }
    let slot = acc.entry(mono).or_insert_with(Scalar::zero);
    *slot = slot.add(&s);
    if slot.is_zero() {
        acc.remove(&mono);
    }
}

/// Memoizing reducer for the priority strategy.
struct Reducer<'a, T: Coeff> {
    params: &'a RingParams,
    cache: HashMap<Monomial, Vec<(Monomial, Scalar<T>)>>,
}

impl<'a, T: Coeff> Reducer<'a, T> {
    fn new(params: &'a RingParams) -> Self {
        Reducer { params, cache: HashMap::new() }
    }

    fn reduce(&mut self, x: Monomial) -> Vec<(Monomial, Scalar<T>)> {
        if let Some(hit) = self.cache.get(&x) {
            return hit.clone();
        }
        let mode = self.params.mode;
        let result = match first_rule(&x, self.params) {
            None => vec![(x, Scalar::one())],
            Some(rule) => {
                let mut acc = BTreeMap::new();
                for (s, y) in rule.apply::<T>(&x, self.params).expect("rule applies") {
                    for (z, t) in self.reduce(y) {
                        add_into(&mut acc, z, s.mul(&t, mode));
                    }
                }
                acc.into_iter().map(|(z, s)| (z, s.reduced(mode))).filter(|(_, s)| !s.is_zero()).collect()
            }
        };
        self.cache.insert(x, result.clone());
        result
    }
}

/// Normal form of a single exponent vector under the priority strategy.
pub fn reduce_monomial<T: Coeff>(x: &Monomial, params: &RingParams) -> Result<Vec<(Monomial, Scalar<T>)>> {
    check_legitimate(x, params)?;
    Ok(Reducer::new(params).reduce(*x))
}

type Buckets<T> = BTreeMap<Grading, Vec<(Monomial, Scalar<T>)>>;

/// Validates the input and splits it into homogeneous pieces.
fn bucket<T: Coeff>(raw: &RawExpr<T>, params: &RingParams) -> Result<Buckets<T>> {
    let mut out: Buckets<T> = BTreeMap::new();
    for (mono, s) in raw.terms() {
        check_legitimate(mono, params)?;
        for (g, part) in s.clone().reduced(params.mode).homogeneous_parts() {
            out.entry(mono.grading() + g).or_default().push((*mono, part));
        }
    }
    Ok(out)
}

/// Turns an accumulated canonical combination into an element, verifying
/// that every surviving monomial sits at a basis grading.
fn finish<T: Coeff>(grading: Grading, acc: BTreeMap<Monomial, Scalar<T>>, params: &RingParams) -> Result<Element<T>> {
    let terms: BTreeMap<_, _> =
        acc.into_iter().map(|(m, s)| (m, s.reduced(params.mode))).filter(|(_, s)| !s.is_zero()).collect();
    for (mono, s) in &terms {
        let g = mono.grading();
        if let Some(sg) = s.grading() {
            if g + sg != grading {
                return Err(Error::Internal(format!("term {s}*{mono} left grading {grading}")));
            }
        }
        if RULE_PRIORITY.iter().any(|r| r.applies(mono, params)) {
            return Err(Error::Internal(format!("{mono} is not in normal form")));
        }
        if let Some((p, q)) = params.finite_pq() {
            if !d_slice(p, q, g.c)?.contains(&g) {
                return Err(Error::Internal(format!("normal form {mono} has grading {g} outside D_{{{p},{q}}}")));
            }
        }
    }
    Ok(Element::from_canonical(grading, terms))
}

/// Normalizes a formal combination, one element per grading that occurs in
/// the input (components that cancel are returned as zero elements).
pub fn normalize_graded<T: Coeff>(raw: &RawExpr<T>, params: &RingParams) -> Result<Vec<Element<T>>> {
    let mut reducer = Reducer::new(params);
    bucket(raw, params)?
        .into_iter()
        .map(|(grading, items)| {
            let mut acc = BTreeMap::new();
            for (mono, s) in items {
                for (z, t) in reducer.reduce(mono) {
                    add_into(&mut acc, z, s.mul(&t, params.mode));
                }
            }
            finish(grading, acc, params)
        })
        .collect()
}

/// Normalizes a homogeneous formal combination.
pub fn normalize<T: Coeff>(raw: &RawExpr<T>, params: &RingParams) -> Result<Element<T>> {
    let mut parts = normalize_graded(raw, params)?;
    match parts.len() {
        0 => Ok(Element::zero(Grading::ZERO)),
        1 => Ok(parts.pop().expect("one part")),
        _ => Err(Error::Inhomogeneous(parts[0].grading(), parts[1].grading())),
    }
}

/// Normalizes by applying a uniformly random applicable rule at each step,
/// ignoring the priority order. Gives up after `max_steps` rewrites.
pub fn normalize_randomized<T: Coeff, R: Rng + ?Sized>(
    raw: &RawExpr<T>,
    params: &RingParams,
    rng: &mut R,
    max_steps: usize,
) -> Result<Vec<Element<T>>> {
    let mut steps = 0usize;
    bucket(raw, params)?
        .into_iter()
        .map(|(grading, mut work)| {
            let mut acc = BTreeMap::new();
            while !work.is_empty() {
                let (mono, s) = work.swap_remove(rng.gen_range(0..work.len()));
                let applicable: Vec<Rule> = RULE_PRIORITY.into_iter().filter(|r| r.applies(&mono, params)).collect();
                if applicable.is_empty() {
                    add_into(&mut acc, mono, s);
                    continue;
                }
                steps += 1;
                if steps > max_steps {
                    return Err(Error::Internal(format!("randomized rewriting exceeded {max_steps} steps")));
                }
                let rule = applicable[rng.gen_range(0..applicable.len())];
                for (t, y) in rule.apply::<T>(&mono, params).expect("rule applies") {
                    let st = s.mul(&t, params.mode);
                    if !st.is_zero() {
                        work.push((y, st));
                    }
                }
            }
            finish(grading, acc, params)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CoefficientMode;

    type S = Scalar<i64>;

    fn nf(mono: Monomial, params: &RingParams) -> Element<i64> {
        normalize(&RawExpr::monomial(mono), params).unwrap()
    }

    fn elem(terms: Vec<(S, Monomial)>, params: &RingParams) -> Element<i64> {
        normalize(&RawExpr::from_terms(terms), params).unwrap()
    }

    /// Canonical monomials written out case by case, independent of the rules.
    fn canonical_closed_form(x: &Monomial, p: i64, q: i64) -> bool {
        let Monomial { a, b, m, n } = *x;
        if a != 0 && b != 0 {
            return false;
        }
        if a < 0 {
            return n == q && m < p;
        }
        if b < 0 {
            return m == p && n < q;
        }
        if a > 0 {
            return n == 0 && m < p;
        }
        if b >= 2 {
            return m == 0 && n < q;
        }
        if b == 1 {
            return m <= p && n < q;
        }
        m <= p && n <= q && !(m == p && n == q)
    }

    #[test]
    fn relation_two_rearranged() {
        for (p, q) in [(1, 1), (2, 3), (4, 2)] {
            let params = RingParams::finite(p, q).unwrap();
            let got = nf(Monomial::new(1, 0, 0, 1), &params);
            let want =
                elem(vec![(S::e_pow(2), Monomial::ONE), (S::one_minus_kappa(), Monomial::new(0, 1, 1, 0))], &params);
            assert_eq!(got, want);
            assert_eq!(got.len(), 2);
        }
    }

    #[test]
    fn gamma_squared() {
        let params = RingParams::finite(2, 2).unwrap();
        let got = nf(Monomial::new(0, 2, 2, 0), &params);
        assert_eq!(got.coefficient(&Monomial::new(0, 1, 1, 0)), Some(&S::e_pow(2)));
        assert_eq!(got.coefficient(&Monomial::new(0, 0, 1, 1)), Some(&S::xi_pow(1)));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn first_overflow_row() {
        for p in 1..4 {
            let params = RingParams::finite(p, 3).unwrap();
            let p = i64::from(p);
            let got = nf(Monomial::new(0, -1, p + 1, 0), &params);
            assert_eq!(got.coefficient(&Monomial::new(0, -2, p, 0)), Some(&S::e_pow(2)));
            assert_eq!(got.coefficient(&Monomial::new(0, -3, p, 1)), Some(&S::xi_pow(1)));
            assert_eq!(got.len(), 2);
        }
    }

    #[test]
    fn relation_one() {
        for (p, q) in [(1, 1), (2, 3), (3, 0), (0, 2)] {
            let params = RingParams::finite(p, q).unwrap();
            assert!(nf(Monomial::new(0, 0, i64::from(p), i64::from(q)), &params).is_zero());
        }
    }

    #[test]
    fn saturated_divisor() {
        let params = RingParams::finite(1, 2).unwrap();
        let got = nf(Monomial::new(1, 0, 1, 0), &params);
        assert_eq!(got.coefficient(&Monomial::new(0, -1, 1, 0)), Some(&S::xi_pow(1)));
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn legitimacy() {
        let params = RingParams::finite(2, 2).unwrap();
        assert!(matches!(
            reduce_monomial::<i64>(&Monomial::new(0, -1, 1, 0), &params),
            Err(Error::IllegalDivisibleClass(_))
        ));
        assert!(matches!(
            reduce_monomial::<i64>(&Monomial::new(-1, 0, 0, 1), &params),
            Err(Error::IllegalDivisibleClass(_))
        ));
        assert!(reduce_monomial::<i64>(&Monomial::new(0, -1, 2, 0), &params).is_ok());
        let b = RingParams::classifying();
        assert!(matches!(reduce_monomial::<i64>(&Monomial::new(0, -1, 5, 0), &b), Err(Error::InfiniteDivisor(_))));
    }

    #[test]
    fn normal_forms_match_closed_form() {
        for p in 0..=4u32 {
            for q in 0..=4u32 {
                if p + q == 0 {
                    continue;
                }
                let params = RingParams::finite(p, q).unwrap();
                let (pi, qi) = (i64::from(p), i64::from(q));
                for a in -4..=4 {
                    for b in -4..=4 {
                        for m in 0..=pi + 2 {
                            for n in 0..=qi + 2 {
                                let x = Monomial::new(a, b, m, n);
                                let irreducible = !RULE_PRIORITY.iter().any(|r| r.applies(&x, &params));
                                let legit = check_legitimate(&x, &params).is_ok();
                                assert_eq!(legit && irreducible, canonical_closed_form(&x, pi, qi), "{x} in ({p},{q})");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn constz_corollary() {
        let params = RingParams::finite(1, 1).unwrap().with_mode(CoefficientMode::ConstantZ);
        let raw =
            RawExpr::<i64>::monomial(Monomial::new(1, 0, 0, 1)).sub(&RawExpr::monomial(Monomial::new(0, 1, 1, 0)));
        let got = normalize(&raw, &params).unwrap();
        assert_eq!(got, elem(vec![(S::e_pow(2), Monomial::ONE)], &params));
    }

    #[test]
    fn classifying_space_never_truncates() {
        let b = RingParams::classifying();
        for k in 0..=12 {
            let got = nf(Monomial::new(0, 0, k, 0), &b);
            assert_eq!(got.as_monomial(), Some(Monomial::new(0, 0, k, 0)));
        }
        assert_eq!(nf(Monomial::new(1, 1, 0, 0), &b), elem(vec![(S::xi_pow(1), Monomial::ONE)], &b));
    }

    #[test]
    fn one_infinite_index() {
        let params = RingParams::new(Extended::Finite(2), Extended::Infinite, CoefficientMode::Burnside).unwrap();
        let got = nf(Monomial::new(0, 0, 3, 0), &params);
        let want =
            elem(vec![(S::e_pow(2), Monomial::new(0, -1, 2, 0)), (S::xi_pow(1), Monomial::new(0, -2, 2, 1))], &params);
        assert_eq!(got, want);
    }

    #[test]
    fn randomized_agrees_on_small_inputs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let params = RingParams::finite(2, 2).unwrap();
        for x in [Monomial::new(3, 0, 1, 4), Monomial::new(0, 3, 4, 1), Monomial::new(0, -2, 5, 1)] {
            let raw = RawExpr::<i64>::monomial(x);
            for _ in 0..50 {
                assert_eq!(
                    normalize_randomized(&raw, &params, &mut rng, 100_000).unwrap(),
                    normalize_graded(&raw, &params).unwrap()
                );
            }
        }
    }
}
