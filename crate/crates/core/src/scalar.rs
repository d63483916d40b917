//! The coefficient fragment `Z[e, ξ, κ]` and the unit group of `H⁰_G(B₊)`.
//!
//! Scalars are polynomials in `e` (grading Λ) and `ξ` (grading 2Λ − 2) plus a
//! lone `κ` term, reduced by `κξ = 0`, `κ² = 2κ` and `eⁿκ = 2eⁿ` for `n > 0`.
//! Two consequences shape the normal form: `κ` never multiplies a nonconstant
//! monomial, and `2eⁱξʲ = κeⁱξʲ = 0` whenever `i, j ≥ 1`, so those
//! coefficients live in Z/2.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::grading::Grading;

/// Integer types usable as coefficients.
pub trait Coeff:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

pub(crate) fn int<T: Coeff>(k: i64) -> T {
    T::from_i64(k).expect("small integer fits every coefficient type")
}

/// Which coefficient Mackey functor the ring is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum CoefficientMode {
    /// The Burnside ring Mackey functor.
    #[default]
    Burnside,
    /// The constant Mackey functor `Z`: `κ = 0` and `e` is 2-torsion.
    ConstantZ,
}

impl std::str::FromStr for CoefficientMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "burnside" => Ok(CoefficientMode::Burnside),
            "constz" => Ok(CoefficientMode::ConstantZ),
            other => Err(format!("unknown coefficient mode `{other}` (expected burnside or constz)")),
        }
    }
}

/// Grading of `eⁱξʲ`.
pub fn scalar_grading(i: u32, j: u32) -> Grading {
    let (i, j) = (i64::from(i), i64::from(j));
    Grading::new(-2 * j, i + 2 * j, 0)
}

/// An element of the coefficient fragment, kept in normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar<T: Coeff> {
    /// `(i, j) ↦` coefficient of `eⁱξʲ`.
    poly: BTreeMap<(u32, u32), T>,
    kappa: T,
}

impl<T: Coeff> Scalar<T> {
    pub fn zero() -> Self {
        Scalar { poly: BTreeMap::new(), kappa: T::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(T::one())
    }

    pub fn from_int(c: T) -> Self {
        Self::term(0, 0, c)
    }

    /// `c·eⁱξʲ`, reduced in Burnside mode.
    pub fn term(i: u32, j: u32, c: T) -> Self {
        let mut s = Scalar { poly: BTreeMap::new(), kappa: T::zero() };
        s.poly.insert((i, j), c);
        s.reduced(CoefficientMode::Burnside)
    }

    pub fn e_pow(i: u32) -> Self {
        Self::term(i, 0, T::one())
    }

    pub fn xi_pow(j: u32) -> Self {
        Self::term(0, j, T::one())
    }

    pub fn kappa() -> Self {
        Scalar { poly: BTreeMap::new(), kappa: T::one() }
    }

    /// `1 − κ`.
    pub fn one_minus_kappa() -> Self {
        Self::one().sub(&Self::kappa())
    }

    /// Builds a scalar from raw parts and reduces it.
    pub fn from_parts(poly: impl IntoIterator<Item = ((u32, u32), T)>, kappa: T, mode: CoefficientMode) -> Self {
        let mut s = Scalar { poly: BTreeMap::new(), kappa };
        for (k, c) in poly {
            let slot = s.poly.entry(k).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        }
        s.reduced(mode)
    }

    pub fn poly(&self) -> &BTreeMap<(u32, u32), T> {
        &self.poly
    }

    pub fn kappa_coeff(&self) -> &T {
        &self.kappa
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.kappa.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.kappa.is_zero() && self.poly.len() == 1 && self.poly.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms (counting `κ`).
    pub fn term_count(&self) -> usize {
        self.poly.len() + usize::from(!self.kappa.is_zero())
    }

    /// Applies the torsion reductions of `mode` and drops zero entries.
    pub fn reduced(mut self, mode: CoefficientMode) -> Self {
        let two: T = int(2);
        if mode == CoefficientMode::ConstantZ {
            self.kappa = T::zero();
        }
        self.poly = std::mem::take(&mut self.poly)
            .into_iter()
            .filter_map(|((i, j), c)| {
                let torsion = match mode {
                    CoefficientMode::Burnside => i >= 1 && j >= 1,
                    CoefficientMode::ConstantZ => i >= 1,
                };
                let c = if torsion { c.mod_floor(&two) } else { c };
                (!c.is_zero()).then_some(((i, j), c))
            })
            .collect();
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.poly {
            let slot = out.poly.entry(*k).or_insert_with(T::zero);
            *slot = slot.clone() + c.clone();
        }
        out.kappa = out.kappa + other.kappa.clone();
        out.reduced(CoefficientMode::Burnside)
    }

    pub fn neg(&self) -> Self {
        Scalar { poly: self.poly.iter().map(|(k, c)| (*k, -c.clone())).collect(), kappa: -self.kappa.clone() }
            .reduced(CoefficientMode::Burnside)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        Scalar {
            poly: self.poly.iter().map(|(k, v)| (*k, v.clone() * c.clone())).collect(),
            kappa: self.kappa.clone() * c.clone(),
        }
        .reduced(CoefficientMode::Burnside)
    }

    /// Ring product in normal form.
    pub fn mul(&self, other: &Self, mode: CoefficientMode) -> Self {
        let (x, y) = match mode {
            CoefficientMode::Burnside => (self.clone(), other.clone()),
            CoefficientMode::ConstantZ => (self.to_constz(), other.to_constz()),
        };
        let two: T = int(2);
        let mut poly: BTreeMap<(u32, u32), T> = BTreeMap::new();
        let mut bump = |k: (u32, u32), c: T| {
            let slot = poly.entry(k).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        };
        for (&(i1, j1), c1) in &x.poly {
            for (&(i2, j2), c2) in &y.poly {
                bump((i1 + i2, j1 + j2), c1.clone() * c2.clone());
            }
        }
        let mut kappa = x.kappa.clone() * y.kappa.clone() * two.clone();
        // κ against a polynomial term: κ·1 = κ, κ·eⁱ = 2eⁱ, κ·(anything with ξ) = 0.
        for (k, poly_side) in [(&x.kappa, &y.poly), (&y.kappa, &x.poly)] {
            if k.is_zero() {
                continue;
            }
            for (&(i, j), c) in poly_side {
                if j > 0 {
                    continue;
                }
                if i == 0 {
                    kappa = kappa + k.clone() * c.clone();
                } else {
                    bump((i, 0), two.clone() * k.clone() * c.clone());
                }
            }
        }
        Scalar { poly, kappa }.reduced(mode)
    }

    pub fn pow(&self, k: u32, mode: CoefficientMode) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self, mode))
    }

    /// Image in the constant-Z coefficients.
    pub fn to_constz(&self) -> Self {
        self.clone().reduced(CoefficientMode::ConstantZ)
    }

    /// Grading if the scalar is homogeneous and nonzero.
    pub fn grading(&self) -> Option<Grading> {
        let parts = self.homogeneous_parts();
        match parts.as_slice() {
            [(g, _)] => Some(*g),
            _ => None,
        }
    }

    /// Splits the scalar by grading. `κ` and constants share grading 0.
    pub fn homogeneous_parts(&self) -> Vec<(Grading, Scalar<T>)> {
        let mut parts: BTreeMap<Grading, Scalar<T>> = BTreeMap::new();
        for (&(i, j), c) in &self.poly {
            parts.entry(scalar_grading(i, j)).or_insert_with(Scalar::zero).poly.insert((i, j), c.clone());
        }
        if !self.kappa.is_zero() {
            parts.entry(Grading::ZERO).or_insert_with(Scalar::zero).kappa = self.kappa.clone();
        }
        parts.into_iter().collect()
    }

    /// Terms in display order: by `(j, i)`, then `κ`.
    fn display_terms(&self) -> Vec<(T, String)> {
        let mut keys: Vec<_> = self.poly.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (j, i));
        let mut out: Vec<(T, String)> =
            keys.into_iter().map(|(i, j)| (self.poly[&(i, j)].clone(), monomial_text(i, j))).collect();
        if !self.kappa.is_zero() {
            out.push((self.kappa.clone(), "kappa".to_string()));
        }
        out
    }

    /// LaTeX rendering.
    pub fn to_latex(&self) -> String {
        join_signed(self.display_terms().into_iter().map(|(c, m)| (c, latex_monomial(&m))), "")
    }
}

fn monomial_text(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("e".to_string()),
        _ => parts.push(format!("e^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("xi".to_string()),
        _ => parts.push(format!("xi^{j}")),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn latex_monomial(text: &str) -> String {
    if text == "1" {
        return text.to_string();
    }
    text.split('*')
        .map(|f| {
            let (base, exp) = f.split_once('^').map_or((f, None), |(b, e)| (b, Some(e)));
            let base = match base {
                "xi" => "\\xi",
                "kappa" => "\\kappa",
                other => other,
            };
            match exp {
                Some(e) => format!("{base}^{{{e}}}"),
                None => base.to_string(),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Joins `(coefficient, monomial)` pairs as `a + 2*b - c`, with `sep`
/// between coefficient and monomial.
fn join_signed<T: Coeff>(terms: impl Iterator<Item = (T, String)>, sep: &str) -> String {
    let mut out = String::new();
    for (idx, (c, m)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m == "1" {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&format!("{abs}{sep}{m}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<T: Coeff> Display for Scalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_signed(self.display_terms().into_iter(), "*"))
    }
}

impl<T: Coeff> Debug for Scalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// Product of two scalars; free-function form of [`Scalar::mul`].
pub fn scalar_mul<T: Coeff>(x: &Scalar<T>, y: &Scalar<T>, mode: CoefficientMode) -> Scalar<T> {
    x.mul(y, mode)
}

/// Image of a Burnside scalar in the constant-Z coefficients.
pub fn to_constz<T: Coeff>(x: &Scalar<T>) -> Scalar<T> {
    x.to_constz()
}

/// The non-sign part of a unit in `H⁰_G(B₊)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnitBasis {
    One,
    /// `1 − κ`
    OneMinusKappa,
    /// `1 − ε`
    OneMinusEps,
    /// `1 − κ + ε = (1 − κ)(1 − ε)`
    OneMinusKappaPlusEps,
}

impl UnitBasis {
    pub const ALL: [UnitBasis; 4] =
        [UnitBasis::One, UnitBasis::OneMinusKappa, UnitBasis::OneMinusEps, UnitBasis::OneMinusKappaPlusEps];

    /// Coordinates `(x, y, z)` of `x + yκ + zε`.
    fn coords(self) -> (i64, i64, i64) {
        match self {
            UnitBasis::One => (1, 0, 0),
            UnitBasis::OneMinusKappa => (1, -1, 0),
            UnitBasis::OneMinusEps => (1, 0, -1),
            UnitBasis::OneMinusKappaPlusEps => (1, -1, 1),
        }
    }
}

/// A unit `±u` with `u ∈ {1, 1−κ, 1−ε, 1−κ+ε}`.
///
/// These carry the sign and unit prefactors of push-forwards, which involve
/// `ε` and so cannot be written as [`Scalar`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitTag {
    pub negative: bool,
    pub basis: UnitBasis,
}

impl UnitTag {
    pub const ONE: UnitTag = UnitTag { negative: false, basis: UnitBasis::One };

    pub const fn new(negative: bool, basis: UnitBasis) -> Self {
        UnitTag { negative, basis }
    }

    pub fn all() -> impl Iterator<Item = UnitTag> {
        [false, true].into_iter().flat_map(|neg| UnitBasis::ALL.into_iter().map(move |b| UnitTag::new(neg, b)))
    }

    /// Group multiplication, computed in `Z[κ, ε]/(κ² − 2κ, ε² − 2ε, κε − 2ε)`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: UnitTag) -> UnitTag {
        let (a1, b1, c1) = self.basis.coords();
        let (a2, b2, c2) = other.basis.coords();
        let x = a1 * a2;
        let y = a1 * b2 + a2 * b1 + 2 * b1 * b2;
        let z = a1 * c2 + a2 * c1 + 2 * (b1 * c2 + c1 * b2 + c1 * c2);
        let basis = UnitBasis::ALL
            .into_iter()
            .find(|b| b.coords() == (x, y, z) || b.coords() == (-x, -y, -z))
            .expect("unit group is closed");
        let flip = basis.coords() != (x, y, z);
        UnitTag { negative: self.negative ^ other.negative ^ flip, basis }
    }

    pub fn pow(self, k: u64) -> UnitTag {
        (0..k % 2).fold(UnitTag::ONE, |acc, _| acc.mul(self))
    }
}

impl fmt::Display for UnitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match self.basis {
            UnitBasis::One => "1",
            UnitBasis::OneMinusKappa => "(1-kappa)",
            UnitBasis::OneMinusEps => "(1-eps)",
            UnitBasis::OneMinusKappaPlusEps => "(1-kappa)(1-eps)",
        };
        if self.negative {
            write!(f, "-{body}")
        } else {
            f.write_str(body)
        }
    }
}

/// Free-function form of [`UnitTag::mul`].
pub fn unit_mul(u: UnitTag, v: UnitTag) -> UnitTag {
    u.mul(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = Scalar<i64>;
    const B: CoefficientMode = CoefficientMode::Burnside;
    const Z: CoefficientMode = CoefficientMode::ConstantZ;

    #[test]
    fn relation_examples() {
        assert!(S::kappa().mul(&S::xi_pow(1), B).is_zero());
        assert_eq!(S::e_pow(2).mul(&S::kappa(), B), S::term(2, 0, 2));
        assert_eq!(S::kappa().mul(&S::kappa(), B), S::kappa().scale(&2));
        assert_eq!(S::one_minus_kappa().mul(&S::e_pow(2), B), S::e_pow(2).neg());
        assert_eq!(S::one_minus_kappa().mul(&S::one_minus_kappa(), B), S::one());
        assert_eq!(S::one_minus_kappa().mul(&S::xi_pow(1), B), S::xi_pow(1));
    }

    #[test]
    fn mixed_terms_are_two_torsion() {
        assert!(S::term(1, 1, 2).is_zero());
        assert_eq!(S::term(3, 2, 5), S::term(3, 2, 1));
        assert_eq!(S::term(3, 2, -1), S::term(3, 2, 1));
        // 2eξ = κeξ = 0
        let e_xi = S::term(1, 1, 1);
        assert!(S::kappa().mul(&e_xi, B).is_zero());
    }

    #[test]
    fn constz_quotient() {
        assert!(S::kappa().to_constz().is_zero());
        assert!(S::term(2, 0, 2).to_constz().is_zero());
        assert_eq!(S::xi_pow(1).to_constz(), S::xi_pow(1));
        assert_eq!(S::term(0, 3, 4).to_constz(), S::term(0, 3, 4));
        assert_eq!(S::e_pow(1).mul(&S::e_pow(1), Z).scale(&2).to_constz(), S::zero());
    }

    #[test]
    fn gradings() {
        assert_eq!(scalar_grading(1, 0), Grading::new(0, 1, 0));
        assert_eq!(scalar_grading(0, 1), Grading::new(-2, 2, 0));
        assert_eq!(scalar_grading(0, 0), Grading::ZERO);
        assert_eq!(S::kappa().grading(), Some(Grading::ZERO));
        assert_eq!(S::one_minus_kappa().grading(), Some(Grading::ZERO));
        assert_eq!(S::e_pow(1).add(&S::one()).grading(), None);
    }

    #[test]
    fn text_form() {
        assert_eq!(S::zero().to_string(), "0");
        assert_eq!(S::one_minus_kappa().to_string(), "1 - kappa");
        assert_eq!(S::term(2, 1, 1).add(&S::term(0, 1, -3)).to_string(), "-3*xi + e^2*xi");
        assert_eq!(S::e_pow(2).to_latex(), "e^{2}");
        assert_eq!(S::xi_pow(1).add(&S::kappa()).to_latex(), "\\xi + \\kappa");
    }

    #[test]
    fn unit_group() {
        use UnitBasis::*;
        let u = |b| UnitTag::new(false, b);
        assert_eq!(u(OneMinusKappa).mul(u(OneMinusEps)), u(OneMinusKappaPlusEps));
        assert_eq!(u(OneMinusEps).mul(u(OneMinusKappaPlusEps)), u(OneMinusKappa));
        let all: Vec<_> = UnitTag::all().collect();
        assert_eq!(all.len(), 8);
        for &x in &all {
            assert_eq!(x.mul(x), UnitTag::ONE, "{x}");
            for &y in &all {
                assert_eq!(x.mul(y), y.mul(x));
                assert!(all.contains(&x.mul(y)));
            }
        }
        assert_eq!(UnitTag::new(true, OneMinusKappaPlusEps).to_string(), "-(1-kappa)(1-eps)");
    }
}
