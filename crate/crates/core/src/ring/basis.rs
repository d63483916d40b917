use crate::error::{Error, Result};
use crate::grading::{d_slice, line_point, Grading, LineId};
use crate::scalar::Coeff;

use super::element::{Element, RawExpr};
use super::monomial::Monomial;
use super::rules::normalize;
use super::RingParams;

/// The basis generator `f_{p,q}(α)` as an exponent vector, built by the
/// push-forward recursion rather than read off the canonical form.
///
/// Off the line `L_0`, planes with `α₃ ≥ 0` come from `X_{p−1,q}` through
/// the normalized `j_!` (multiplication by `c_ω`) and planes with `α₃ < 0`
/// from `X_{p,q−1}` through `i_!` (multiplication by `c_{χω}`).
fn f_basis(p: u32, q: u32, alpha: Grading) -> Result<Monomial> {
    let not_in_basis = || Error::GradingNotInBasis(alpha);
    let c = alpha.c;
    if q == 0 {
        // c_{ω−2}^{c−k} c_ω^k sits at (−2(c−k), 0, c)
        if alpha.b != 0 || (alpha.a + 2 * c) % 2 != 0 {
            return Err(not_in_basis());
        }
        let k = (alpha.a + 2 * c) / 2;
        if !(0..i64::from(p)).contains(&k) {
            return Err(not_in_basis());
        }
        return Ok(Monomial::new(c - k, 0, k, 0));
    }
    if p == 0 {
        // c_{χω−2}^{−c−k} c_{χω}^k sits at (2k, −2c, c)
        if alpha.b != -2 * c || alpha.a % 2 != 0 {
            return Err(not_in_basis());
        }
        let k = alpha.a / 2;
        if !(0..i64::from(q)).contains(&k) {
            return Err(not_in_basis());
        }
        return Ok(Monomial::new(0, -c - k, 0, k));
    }
    if line_point(LineId::new(p, q, 0), c)? == alpha {
        return Ok(if c >= 0 { Monomial::new(c, 0, 0, 0) } else { Monomial::new(0, -c, 0, 0) });
    }
    let params = RingParams::finite(p, q)?;
    let (below, step) = if c >= 0 {
        (f_basis(p - 1, q, alpha - Grading::OMEGA)?, Monomial::C_OMEGA)
    } else {
        (f_basis(p, q - 1, alpha - Grading::CHI_OMEGA)?, Monomial::C_CHI_OMEGA)
    };
    let pushed = normalize::<i64>(&RawExpr::monomial(below.times(&step)), &params)?;
    pushed.as_monomial().ok_or_else(|| {
        Error::Internal(format!("push-forward of {below} to ({p},{q}) is not a basis monomial: {pushed}"))
    })
}

/// The basis element of `X_{p,q}` at grading `α ∈ D_{p,q}`.
pub fn basis_monomial<T: Coeff>(params: &RingParams, alpha: Grading) -> Result<Element<T>> {
    let (p, q) = params.require_finite()?;
    if !d_slice(p, q, alpha.c)?.contains(&alpha) {
        return Err(Error::GradingNotInBasis(alpha));
    }
    let mono = f_basis(p, q, alpha)?;
    if mono.grading() != alpha {
        return Err(Error::Internal(format!("basis recursion produced {mono} at {alpha}")));
    }
    normalize(&RawExpr::monomial(mono), params)
}

/// The basis of the plane `nω + RO(G)`, in line order.
pub fn basis_slice<T: Coeff>(params: &RingParams, n: i64) -> Result<Vec<(Grading, Element<T>)>> {
    let (p, q) = params.require_finite()?;
    d_slice(p, q, n)?.into_iter().map(|g| Ok((g, basis_monomial(params, g)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono_at(p: u32, q: u32, g: Grading) -> Monomial {
        basis_monomial::<i64>(&RingParams::finite(p, q).unwrap(), g).unwrap().as_monomial().unwrap()
    }

    #[test]
    fn x12_examples() {
        assert_eq!(mono_at(1, 2, Grading::new(0, 2, 0)), Monomial::new(0, 1, 1, 0));
        assert_eq!(mono_at(1, 2, Grading::new(0, -2, 2)), Monomial::new(0, -1, 1, 0));
        for (p, q) in [(1, 1), (3, 2), (0, 4), (5, 0)] {
            assert_eq!(mono_at(p, q, Grading::ZERO), Monomial::ONE);
        }
    }

    #[test]
    fn x12_slices() {
        let params = RingParams::finite(1, 2).unwrap();
        let monos = |n| -> Vec<Monomial> {
            basis_slice::<i64>(&params, n).unwrap().into_iter().map(|(_, e)| e.as_monomial().unwrap()).collect()
        };
        assert_eq!(monos(-2), vec![Monomial::new(0, 2, 0, 0), Monomial::new(0, 1, 0, 1), Monomial::new(0, 0, 0, 2)]);
        assert_eq!(monos(1), vec![Monomial::new(1, 0, 0, 0), Monomial::new(0, 0, 1, 0), Monomial::new(0, -1, 1, 1)]);
        let fixed = RingParams::finite(1, 0).unwrap();
        for n in -4..=4 {
            let slice = basis_slice::<i64>(&fixed, n).unwrap();
            assert_eq!(slice.len(), 1);
            assert_eq!(slice[0].1.as_monomial(), Some(Monomial::new(n, 0, 0, 0)));
        }
    }

    #[test]
    fn rejects_non_basis_gradings() {
        let params = RingParams::finite(1, 2).unwrap();
        assert_eq!(
            basis_monomial::<i64>(&params, Grading::new(1, 0, 0)),
            Err(Error::GradingNotInBasis(Grading::new(1, 0, 0)))
        );
    }

    #[test]
    fn slices_are_free_bookkeeping() {
        for total in 1..=6u32 {
            for p in 0..=total {
                let q = total - p;
                let params = RingParams::finite(p, q).unwrap();
                for n in -10..=10 {
                    let slice = basis_slice::<i64>(&params, n).unwrap();
                    let gradings: Vec<_> = slice.iter().map(|(g, _)| *g).collect();
                    assert_eq!(gradings, d_slice(p, q, n).unwrap());
                    for (g, e) in &slice {
                        let m = e.as_monomial().expect("basis element is a monomial");
                        assert_eq!(m.grading(), *g);
                    }
                }
            }
        }
    }
}
