//! Graded elements of the cohomology of `X_{p,q} = P(C^p ⊕ M^q)`.
//!
//! Elements are finite scalar combinations of monomials
//! `c_{ω−2}^a c_{χω−2}^b c_ω^m c_{χω}^n`, where a negative `a` or `b` encodes
//! one of the infinitely divisible classes. [`normalize`] rewrites any
//! legitimate formal combination into the canonical basis; [`basis_monomial`]
//! produces basis elements independently, by the push-forward recursion.

mod basis;
mod element;
mod fixed;
mod format;
mod monomial;
mod parse;
mod rules;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::Extended;
use crate::scalar::CoefficientMode;

pub use basis::{basis_monomial, basis_slice};
pub use element::{mul, Element, RawExpr};
pub use fixed::{fixed_ring_normalize, FixedRingElement, FixedSide};
pub use format::ElementJsonError;
pub use monomial::Monomial;
pub use parse::parse_expr;
pub use rules::{
    check_legitimate, normalize, normalize_graded, normalize_randomized, reduce_monomial, Rule, RULE_PRIORITY,
};

/// The ambient space and coefficient system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingParams {
    pub p: Extended,
    pub q: Extended,
    pub mode: CoefficientMode,
}

impl RingParams {
    pub fn new(p: Extended, q: Extended, mode: CoefficientMode) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::EmptySpace);
        }
        Ok(RingParams { p, q, mode })
    }

    /// Finite `(p, q)` with Burnside coefficients.
    pub fn finite(p: u32, q: u32) -> Result<Self> {
        Self::new(p.into(), q.into(), CoefficientMode::Burnside)
    }

    /// The classifying space `B = X_{∞,∞}`.
    pub fn classifying() -> Self {
        RingParams { p: Extended::Infinite, q: Extended::Infinite, mode: CoefficientMode::Burnside }
    }

    pub fn with_mode(self, mode: CoefficientMode) -> Self {
        RingParams { mode, ..self }
    }

    /// `(p, q)` when both are finite.
    pub fn finite_pq(&self) -> Option<(u32, u32)> {
        match (self.p, self.q) {
            (Extended::Finite(p), Extended::Finite(q)) => Some((p, q)),
            _ => None,
        }
    }

    pub fn require_finite(&self) -> Result<(u32, u32)> {
        self.finite_pq().ok_or(Error::InfiniteIndex)
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{{{},{}}}", self.p, self.q)?;
        if self.mode == CoefficientMode::ConstantZ {
            f.write_str(" (constant Z)")?;
        }
        Ok(())
    }
}
