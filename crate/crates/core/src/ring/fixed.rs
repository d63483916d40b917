use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::Extended;
use crate::scalar::{Coeff, CoefficientMode, Scalar};

use super::element::RawExpr;
use super::format::terms_text;
use super::monomial::Monomial;
use super::RingParams;

/// Which fixed component: `X_{p,0}` (side 0) or `X_{0,q}` (side 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedSide {
    Zero,
    One,
}

/// An element of `Z[e,ξ,κ][c, u, u^{−1}]/(c^N)`: the Laurent model of the
/// cohomology of a fixed component. On side 0, `u = c_{ω−2}` and `c = c_ω`
/// with `N = p`; on side 1, `u = c_{χω−2}` and `c = c_{χω}` with `N = q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedRingElement<T: Coeff> {
    side: FixedSide,
    truncation: Extended,
    mode: CoefficientMode,
    /// `(laurent exponent, truncated exponent) ↦ coefficient`.
    terms: BTreeMap<(i64, i64), Scalar<T>>,
}

impl<T: Coeff> FixedRingElement<T> {
    pub fn zero(side: FixedSide, truncation: Extended, mode: CoefficientMode) -> Self {
        FixedRingElement { side, truncation, mode, terms: BTreeMap::new() }
    }

    /// `s · u^laurent · c^nil`, zero if `nil` reaches the truncation.
    pub fn term(
        side: FixedSide,
        truncation: Extended,
        mode: CoefficientMode,
        s: Scalar<T>,
        laurent: i64,
        nil: i64,
    ) -> Self {
        let mut out = Self::zero(side, truncation, mode);
        out.push(laurent, nil, s);
        out
    }

    fn like(&self) -> Self {
        Self::zero(self.side, self.truncation, self.mode)
    }

    fn push(&mut self, laurent: i64, nil: i64, s: Scalar<T>) {
        if self.truncation.le_int(nil) {
            return;
        }
        let slot = self.terms.entry((laurent, nil)).or_insert_with(Scalar::zero);
        *slot = slot.add(&s).reduced(self.mode);
        if slot.is_zero() {
            self.terms.remove(&(laurent, nil));
        }
    }

    pub fn side(&self) -> FixedSide {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `((laurent, truncated), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Scalar<T>)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(u, c), s) in &other.terms {
            out.push(u, c, s.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar<T>) -> Self {
        let mut out = self.like();
        for (&(u, c), t) in &self.terms {
            out.push(u, c, t.mul(s, self.mode));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.like();
        for (&(u1, c1), s1) in &self.terms {
            for (&(u2, c2), s2) in &other.terms {
                out.push(u1 + u2, c1 + c2, s1.mul(s2, self.mode));
            }
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let one = Self::term(self.side, self.truncation, self.mode, Scalar::one(), 0, 0);
        (0..k).fold(one, |acc, _| acc.mul(self))
    }

    /// Reads the element as a combination of exponent vectors of the ambient
    /// ring, for comparison with [`super::normalize`] when `p·q = 0`.
    pub fn to_raw(&self) -> RawExpr<T> {
        RawExpr::from_terms(self.terms.iter().map(|(&(u, c), s)| {
            let mono = match self.side {
                FixedSide::Zero => Monomial::new(u, 0, c, 0),
                FixedSide::One => Monomial::new(0, u, 0, c),
            };
            (s.clone(), mono)
        }))
    }
}

impl<T: Coeff> fmt::Display for FixedRingElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let raw = self.to_raw();
        f.write_str(&terms_text(raw.terms()))
    }
}

/// Rewrites a formal combination in the Laurent model of one fixed
/// component, substituting
///
/// * side 0: `c_{χω−2} = ξ c_{ω−2}^{−1}`, `c_{χω} = e² c_{ω−2}^{−1} + ξ c_{ω−2}^{−2} c_ω`,
/// * side 1: `c_{ω−2} = ξ c_{χω−2}^{−1}`, `c_ω = e² c_{χω−2}^{−1} + ξ c_{χω−2}^{−2} c_{χω}`,
///
/// and truncating `c_ω^p` (resp. `c_{χω}^q`). Classes divisible by the
/// variable that becomes non-invertible on this side restrict to zero.
pub fn fixed_ring_normalize<T: Coeff>(
    side: FixedSide,
    params: &RingParams,
    raw: &RawExpr<T>,
) -> Result<FixedRingElement<T>> {
    let truncation = match side {
        FixedSide::Zero => params.p,
        FixedSide::One => params.q,
    };
    if truncation.is_zero() {
        return Err(Error::Hypothesis(format!("fixed side {side:?} is empty for {params}")));
    }
    let mode = params.mode;
    let zero = FixedRingElement::zero(side, truncation, mode);
    let unit = |s: Scalar<T>, u: i64, c: i64| FixedRingElement::term(side, truncation, mode, s, u, c);
    let xi = Scalar::xi_pow(1);
    // ξ u^{−1}, and e² u^{−1} + ξ u^{−2} c
    let swapped_divisor = unit(xi.clone(), -1, 0);
    let swapped_euler = unit(Scalar::e_pow(2), -1, 0).add(&unit(xi, -2, 1));

    let mut out = zero.clone();
    for (mono, s) in raw.terms() {
        let (own_div, other_div, own_euler, other_euler) = match side {
            FixedSide::Zero => (mono.a, mono.b, mono.m, mono.n),
            FixedSide::One => (mono.b, mono.a, mono.n, mono.m),
        };
        if other_div < 0 {
            continue;
        }
        let term = unit(s.clone(), own_div, own_euler)
            .mul(&swapped_divisor.pow(other_div))
            .mul(&swapped_euler.pow(other_euler));
        out = out.add(&term);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = Scalar<i64>;

    fn fix(side: FixedSide, p: u32, q: u32, x: Monomial) -> FixedRingElement<i64> {
        fixed_ring_normalize(side, &RingParams::finite(p, q).unwrap(), &RawExpr::monomial(x)).unwrap()
    }

    #[test]
    fn chi_classes_on_side_zero() {
        let got = fix(FixedSide::Zero, 2, 2, Monomial::C_CHI_OMEGA_MINUS_2);
        assert_eq!(
            got,
            FixedRingElement::term(FixedSide::Zero, 2.into(), CoefficientMode::Burnside, S::xi_pow(1), -1, 0)
        );
        assert_eq!(got.to_string(), "xi*cwm2^-1");
    }

    #[test]
    fn omega_on_side_one() {
        let got = fix(FixedSide::One, 2, 3, Monomial::C_OMEGA);
        assert_eq!(got.to_string(), "e^2*cxwm2^-1 + xi*cxwm2^-2*cxw");
    }

    #[test]
    fn truncation() {
        assert!(fix(FixedSide::Zero, 3, 1, Monomial::new(0, 0, 3, 0)).is_zero());
        assert!(!fix(FixedSide::Zero, 3, 1, Monomial::new(0, 0, 2, 0)).is_zero());
        assert!(fix(FixedSide::One, 3, 2, Monomial::new(0, 0, 0, 2)).is_zero());
    }

    #[test]
    fn empty_side_rejected() {
        let params = RingParams::finite(0, 2).unwrap();
        assert!(fixed_ring_normalize::<i64>(FixedSide::Zero, &params, &RawExpr::one()).is_err());
    }
}
