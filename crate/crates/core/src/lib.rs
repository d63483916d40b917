//! Equivariant cohomology of the projective spaces `X_{p,q} = P(C^p ⊕ M^q)`
//! for the group of order two, graded by `RO(Π B)`.
//!
//! * [`grading`] — the lattice of gradings, the lines `L_i^{[p,q]}` and the
//!   slices `D_{p,q}` where basis elements live.
//! * [`scalar`] — the coefficient fragment `Z[e, ξ, κ]` and its unit group.
//! * [`ring`] — normal forms, multiplication, basis construction, parsing.
//! * [`maps`] — restriction, push-forward, the fixed-point map `η`, and
//!   Lewis's presentation.
//! * [`verify`] — finite-window checks of the structural lemmas.
//!
//! Everything in [`ring`] and [`maps`] is generic over the integer coefficient
//! type; the aliases below fix it to `i64` or to arbitrary precision.

pub mod error;
pub mod grading;
pub mod maps;
pub mod ring;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use grading::{Extended, Grading, LatticeFn, LineId};
pub use ring::{mul, normalize, parse_expr, Element, FixedRingElement, FixedSide, Monomial, RawExpr, RingParams};
pub use scalar::{Coeff, CoefficientMode, Scalar, UnitBasis, UnitTag};

/// Arbitrary-precision integers.
pub use num_bigint::BigInt;

pub type Scalar64 = Scalar<i64>;
pub type Element64 = Element<i64>;
pub type RawExpr64 = RawExpr<i64>;
pub type FixedElement64 = FixedRingElement<i64>;

pub type BigScalar = Scalar<BigInt>;
pub type BigElement = Element<BigInt>;
pub type BigRawExpr = RawExpr<BigInt>;
