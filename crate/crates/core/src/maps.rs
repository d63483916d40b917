//! Maps between the spaces `X_{p,q}`: restriction along inclusions,
//! push-forwards, restriction to the fixed set, and the dictionary to Lewis's
//! RO(G)-graded generators.
//!
//! Push-forwards are modelled by their effect: the normalized `j̃_!` and `ĩ_!`
//! multiply by `c_ω` and `c_{χω}`. The unit that separates them from the
//! geometric maps is reported as a [`UnitTag`].

use crate::error::{Error, Result};
use crate::grading::{Extended, Grading};
use crate::ring::{
    fixed_ring_normalize, normalize, Element, FixedRingElement, FixedSide, Monomial, RawExpr, RingParams,
};
use crate::scalar::{Coeff, UnitBasis, UnitTag};

/// `j_!(1) = −(1−ε) c_ω`.
pub const OMEGA_PUSH_UNIT: UnitTag = UnitTag::new(true, UnitBasis::OneMinusEps);

/// `i_!(1) = −(1−κ)(1−ε) c_{χω}`.
pub const CHI_OMEGA_PUSH_UNIT: UnitTag = UnitTag::new(true, UnitBasis::OneMinusKappaPlusEps);

fn ext_le(a: Extended, b: Extended) -> bool {
    match (a, b) {
        (_, Extended::Infinite) => true,
        (Extended::Infinite, Extended::Finite(_)) => false,
        (Extended::Finite(x), Extended::Finite(y)) => x <= y,
    }
}

fn check_nested(small: &RingParams, big: &RingParams) -> Result<()> {
    if small.mode != big.mode {
        return Err(Error::ParameterMismatch("coefficient modes differ".into()));
    }
    if !ext_le(small.p, big.p) || !ext_le(small.q, big.q) {
        return Err(Error::ParameterMismatch(format!("{small} is not contained in {big}")));
    }
    Ok(())
}

fn renormalize<T: Coeff>(raw: RawExpr<T>, params: &RingParams, grading: Grading) -> Result<Element<T>> {
    let out = normalize(&raw, params)?;
    Ok(if out.is_zero() { Element::zero(grading) } else { out })
}

/// `ι^*` for the inclusion `X_{to} ⊆ X_{from}`: every monomial, divisible
/// classes included, is read verbatim in the smaller ring.
pub fn restrict<T: Coeff>(from: &RingParams, to: &RingParams, x: &Element<T>) -> Result<Element<T>> {
    check_nested(to, from)?;
    renormalize(x.to_raw(), to, x.grading())
}

fn shifted<T: Coeff>(x: &Element<T>, by: Monomial) -> RawExpr<T> {
    x.to_raw().mul(&RawExpr::monomial(by))
}

/// The normalized push-forward `j̃_! = −(1−ε) j_!` from `X_{p−1,q}` into
/// `target = X_{p,q}`: multiplication by `c_ω`.
pub fn pushforward_omega<T: Coeff>(target: &RingParams, x: &Element<T>) -> Result<Element<T>> {
    match target.p {
        Extended::Finite(p) if p >= 1 => {}
        _ => return Err(Error::Hypothesis("push-forward along ω needs a finite target p ≥ 1".into())),
    }
    renormalize(shifted(x, Monomial::C_OMEGA), target, x.grading() + Grading::OMEGA)
}

/// The normalized push-forward `ĩ_!` from `X_{p,q−1}` into `target = X_{p,q}`:
/// multiplication by `c_{χω}`.
pub fn pushforward_chiomega<T: Coeff>(target: &RingParams, x: &Element<T>) -> Result<Element<T>> {
    match target.q {
        Extended::Finite(q) if q >= 1 => {}
        _ => return Err(Error::Hypothesis("push-forward along χω needs a finite target q ≥ 1".into())),
    }
    renormalize(shifted(x, Monomial::C_CHI_OMEGA), target, x.grading() + Grading::CHI_OMEGA)
}

/// `ι_!` for `X_{from} ⊆ X_{to}`, as the composite of single-step
/// push-forwards: the normalized value `c_ω^{Δp} c_{χω}^{Δq} x` together with
/// the unit `u` such that `ι_!(x) = u · value`.
pub fn pushforward_composite<T: Coeff>(
    from: &RingParams,
    to: &RingParams,
    x: &Element<T>,
) -> Result<(UnitTag, Element<T>)> {
    check_nested(from, to)?;
    let (fp, fq) = from.require_finite()?;
    let (tp, tq) = to.require_finite()?;
    let (dp, dq) = (tp - fp, tq - fq);
    let unit = OMEGA_PUSH_UNIT.pow(u64::from(dp)).mul(CHI_OMEGA_PUSH_UNIT.pow(u64::from(dq)));
    let shift = Monomial::new(0, 0, i64::from(dp), i64::from(dq));
    let value = renormalize(shifted(x, shift), to, x.grading() + shift.grading())?;
    Ok((unit, value))
}

/// Restriction to the fixed set `X_{p,0} ⊔ X_{0,q}`.
pub fn eta<T: Coeff>(params: &RingParams, x: &Element<T>) -> Result<(FixedRingElement<T>, FixedRingElement<T>)> {
    if params.p.is_zero() || params.q.is_zero() {
        return Err(Error::Hypothesis("η needs p ≥ 1 and q ≥ 1".into()));
    }
    let raw = x.to_raw();
    Ok((fixed_ring_normalize(FixedSide::Zero, params, &raw)?, fixed_ring_normalize(FixedSide::One, params, &raw)?))
}

/// Lewis's generators of the RO(G)-graded part, for `q ≤ p < ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LewisGenerator {
    /// `γ`, in grading `M`.
    Gamma,
    /// `Γ(k)`, `1 ≤ k < p`, in grading `2k + min(k,q)·M`.
    BigGamma(u32),
}

fn lewis_pq(params: &RingParams) -> Result<(u32, u32)> {
    let (p, q) = params.require_finite()?;
    if q > p {
        return Err(Error::Hypothesis(format!("Lewis generators need q ≤ p, got p={p}, q={q}")));
    }
    Ok((p, q))
}

/// The monomial for `Γ(k)`, `c_{ω−2}^{−(k−k̄)} c_ω^k c_{χω}^{k̄}` with `k̄ = min(k,q)`.
pub fn big_gamma_monomial(q: u32, k: u32) -> Monomial {
    let kbar = k.min(q);
    Monomial::new(-i64::from(k - kbar), 0, i64::from(k), i64::from(kbar))
}

/// Expresses a Lewis generator in the extended generators.
pub fn lewis_generator<T: Coeff>(params: &RingParams, g: LewisGenerator) -> Result<Element<T>> {
    let (p, q) = lewis_pq(params)?;
    let mono = match g {
        LewisGenerator::Gamma => Monomial::new(0, 1, 1, 0),
        LewisGenerator::BigGamma(k) => {
            if k == 0 || k >= p {
                return Err(Error::Hypothesis(format!("Γ(k) needs 1 ≤ k < p = {p}, got k = {k}")));
            }
            big_gamma_monomial(q, k)
        }
    };
    renormalize(RawExpr::monomial(mono), params, mono.grading())
}

/// `Γ(k)` with the convention `Γ(k) = 0` for `k ≥ p`.
pub fn big_gamma_or_zero<T: Coeff>(params: &RingParams, k: u32) -> Result<Element<T>> {
    let (p, q) = lewis_pq(params)?;
    if k >= p {
        Ok(Element::zero(big_gamma_monomial(q, k).grading()))
    } else {
        lewis_generator(params, LewisGenerator::BigGamma(k))
    }
}

/// The tangent representation `τ_{p,q} = (p−q)ω + 2(q−1) + qM`.
pub fn tangent_rep(p: u32, q: u32) -> Grading {
    let (p, q) = (i64::from(p), i64::from(q));
    Grading::new(2 * (q - 1), 2 * q, p - q)
}

/// The cohomology of one of the spheres in the cofibre sequences relating
/// `X_{p,q}` to `X_{p−1,q}` (side 0) and `X_{p,q−1}` (side 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SphereModule {
    pub side: FixedSide,
    pub p: u32,
    pub q: u32,
}

/// Grading of the generator `c_{ω−2}^n u` of a sphere module in plane `n`.
pub fn sphere_gen_grading(s: SphereModule, n: i64) -> Grading {
    let (p, q) = (i64::from(s.p), i64::from(s.q));
    match s.side {
        FixedSide::Zero => Grading::new(2 * (p - n - 1), 2 * q, n),
        FixedSide::One => Grading::new(2 * (q - 1), 2 * (p - n), n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_expr;
    use crate::scalar::CoefficientMode;

    fn params(p: u32, q: u32) -> RingParams {
        RingParams::finite(p, q).unwrap()
    }

    fn nf(text: &str, p: u32, q: u32) -> Element<i64> {
        normalize(&parse_expr(text).unwrap(), &params(p, q)).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let x = nf("cxwm2^-1*cw^2", 2, 2);
        let got = restrict(&params(2, 2), &params(1, 2), &x).unwrap();
        assert_eq!(got, nf("e^2*cxwm2^-2*cw + xi*cxwm2^-3*cw*cxw", 1, 2));
        let y = nf("cw^2", 2, 1);
        assert_eq!(
            restrict(&params(2, 1), &params(1, 1), &y).unwrap(),
            nf("e^2*cxwm2^-1*cw + xi*cxwm2^-2*cw*cxw", 1, 1)
        );
        assert_eq!(restrict(&params(2, 1), &params(2, 1), &y).unwrap(), y);
        assert!(restrict(&params(1, 1), &params(2, 1), &y).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let one = nf("1", 1, 1);
        assert_eq!(pushforward_omega(&params(2, 1), &one).unwrap(), nf("cw", 2, 1));
        assert_eq!(pushforward_chiomega(&params(1, 2), &one).unwrap(), nf("cxw", 1, 2));
        assert_eq!(OMEGA_PUSH_UNIT.to_string(), "-(1-eps)");
        assert_eq!(CHI_OMEGA_PUSH_UNIT.to_string(), "-(1-kappa)(1-eps)");
        for k in 1..4 {
            let x = nf(&format!("cxwm2^-{k}*cw"), 1, 2);
            assert_eq!(pushforward_omega(&params(2, 2), &x).unwrap(), nf(&format!("cxwm2^-{k}*cw^2"), 2, 2));
        }
    }

    #[test]
    fn composite_units() {
        let one = nf("1", 1, 1);
        let (u, v) = pushforward_composite(&params(1, 1), &params(1, 1), &one).unwrap();
        assert_eq!((u, v), (UnitTag::ONE, one.clone()));
        let (u, v) = pushforward_composite(&params(1, 1), &params(2, 1), &one).unwrap();
        assert_eq!((u, v), (OMEGA_PUSH_UNIT, nf("cw", 2, 1)));
        let x = nf("cwm2", 1, 1);
        let (u, v) = pushforward_composite(&params(1, 1), &params(2, 2), &x).unwrap();
        assert_eq!(u, OMEGA_PUSH_UNIT.mul(CHI_OMEGA_PUSH_UNIT));
        assert_eq!(v, nf("e^2*cw + (1-kappa)*cxwm2*cw^2", 2, 2));
    }

    #[test]
    fn eta_values() {
        let p = params(2, 2);
        let (s0, s1) = eta(&p, &nf("cwm2", 2, 2)).unwrap();
        assert_eq!((s0.to_string(), s1.to_string()), ("cwm2".to_string(), "xi*cxwm2^-1".to_string()));
        let (s0, s1) = eta(&p, &nf("1", 2, 2)).unwrap();
        assert_eq!((s0.to_string(), s1.to_string()), ("1".to_string(), "1".to_string()));
        let (s0, _) = eta(&p, &nf("cw^2", 2, 2)).unwrap();
        assert!(s0.is_zero());
        assert!(eta(&params(2, 0), &nf("1", 2, 0)).is_err());
    }

    #[test]
    fn lewis_dictionary() {
        let p = params(3, 2);
        assert_eq!(lewis_generator::<i64>(&p, LewisGenerator::Gamma).unwrap(), nf("cxwm2*cw", 3, 2));
        assert_eq!(lewis_generator::<i64>(&p, LewisGenerator::BigGamma(1)).unwrap(), nf("cw*cxw", 3, 2));
        assert_eq!(lewis_generator::<i64>(&p, LewisGenerator::BigGamma(2)).unwrap(), nf("cw^2*cxw^2", 3, 2));
        let p = params(4, 1);
        assert_eq!(lewis_generator::<i64>(&p, LewisGenerator::BigGamma(3)).unwrap(), nf("cwm2^-2*cw^3*cxw", 4, 1));
        assert!(lewis_generator::<i64>(&p, LewisGenerator::BigGamma(4)).is_err());
        assert!(lewis_generator::<i64>(&params(1, 2), LewisGenerator::Gamma).is_err());
        // Γ(k) sits in grading 2k + min(k,q)M
        for k in 1..4u32 {
            let g = big_gamma_monomial(1, k).grading();
            assert_eq!(g, Grading::new(2 * i64::from(k), 2, 0));
        }
    }

    #[test]
    fn grading_data() {
        assert_eq!(tangent_rep(1, 1), Grading::new(0, 2, 0));
        let s = SphereModule { side: FixedSide::Zero, p: 1, q: 2 };
        assert_eq!(sphere_gen_grading(s, 0), Grading::new(0, 4, 0));
        for (p, q) in [(1, 1), (3, 2)] {
            let s = SphereModule { side: FixedSide::One, p, q };
            assert_eq!(sphere_gen_grading(s, 0), Grading::new(2 * (i64::from(q) - 1), 2 * i64::from(p), 0));
        }
    }

    #[test]
    fn modes_must_agree() {
        let x = nf("cw", 2, 2);
        let z = params(1, 2).with_mode(CoefficientMode::ConstantZ);
        assert!(matches!(restrict(&params(2, 2), &z, &x), Err(Error::ParameterMismatch(_))));
    }
}
