use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::scalar::{Coeff, CoefficientMode, Scalar};

use super::monomial::Monomial;
use super::rules::normalize_graded;
use super::RingParams;

fn accumulate<T: Coeff>(map: &mut BTreeMap<Monomial, Scalar<T>>, mono: Monomial, s: &Scalar<T>) {
    let slot = map.entry(mono).or_insert_with(Scalar::zero);
    *slot = slot.add(s);
    if slot.is_zero() {
        map.remove(&mono);
    }
}

/// A formal scalar combination of exponent vectors, before any relation has
/// been applied. Produced by the parser and consumed by the normalizer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RawExpr<T: Coeff> {
    terms: BTreeMap<Monomial, Scalar<T>>,
}

impl<T: Coeff> Default for RawExpr<T> {
    fn default() -> Self {
        RawExpr { terms: BTreeMap::new() }
    }
}

impl<T: Coeff> RawExpr<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::term(Scalar::one(), mono)
    }

    pub fn scalar(s: Scalar<T>) -> Self {
        Self::term(s, Monomial::ONE)
    }

    pub fn term(s: Scalar<T>, mono: Monomial) -> Self {
        let mut out = Self::zero();
        accumulate(&mut out.terms, mono, &s);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar<T>, Monomial)>) -> Self {
        let mut out = Self::zero();
        for (s, mono) in terms {
            accumulate(&mut out.terms, mono, &s);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar<T>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mono, s) in &other.terms {
            accumulate(&mut out.terms, *mono, s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        RawExpr { terms: self.terms.iter().map(|(m, s)| (*m, s.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Formal product: exponent vectors add, scalars multiply.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, s1) in &self.terms {
            for (m2, s2) in &other.terms {
                accumulate(&mut out.terms, m1.times(m2), &s1.mul(s2, CoefficientMode::Burnside));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Whether any coefficient mentions `κ`.
    pub fn mentions_kappa(&self) -> bool {
        self.terms.values().any(|s| !s.kappa_coeff().is_zero())
    }
}

impl<T: Coeff> fmt::Display for RawExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::terms_text(self.terms.iter()))
    }
}

/// A homogeneous element in normal form: canonical monomials with nonzero
/// scalar coefficients, all of total grading `grading`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<T: Coeff> {
    terms: BTreeMap<Monomial, Scalar<T>>,
    grading: Grading,
}

impl<T: Coeff> Element<T> {
    pub fn zero(grading: Grading) -> Self {
        Element { terms: BTreeMap::new(), grading }
    }

    /// Assembles an element from terms already known to be canonical.
    pub(crate) fn from_canonical(grading: Grading, terms: BTreeMap<Monomial, Scalar<T>>) -> Self {
        Element { terms, grading }
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar<T>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&Scalar<T>> {
        self.terms.get(mono)
    }

    /// The monomial of a one-term element with unit coefficient.
    pub fn as_monomial(&self) -> Option<Monomial> {
        match self.terms.iter().next() {
            Some((m, s)) if self.terms.len() == 1 && s.is_one() => Some(*m),
            _ => None,
        }
    }

    pub fn to_raw(&self) -> RawExpr<T> {
        RawExpr::from_terms(self.terms.iter().map(|(m, s)| (s.clone(), *m)))
    }

    fn compatible(&self, other: &Self) -> Result<Grading> {
        if self.is_zero() {
            Ok(other.grading)
        } else if other.is_zero() || self.grading == other.grading {
            Ok(self.grading)
        } else {
            Err(Error::Inhomogeneous(self.grading, other.grading))
        }
    }

    /// Sum of two elements of the same grading (zero is compatible with any
    /// grading).
    pub fn add(&self, other: &Self, mode: CoefficientMode) -> Result<Self> {
        let grading = self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (mono, s) in &other.terms {
            accumulate(&mut terms, *mono, s);
        }
        Ok(Element::from_canonical(grading, reduce_all(terms, mode)))
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(m, s)| (*m, s.neg())).collect(), grading: self.grading }
    }

    pub fn sub(&self, other: &Self, mode: CoefficientMode) -> Result<Self> {
        self.add(&other.neg(), mode)
    }

    /// Multiplies by a homogeneous scalar.
    pub fn scale(&self, s: &Scalar<T>, mode: CoefficientMode) -> Result<Self> {
        let shift = if s.is_zero() {
            Grading::ZERO
        } else {
            s.grading().ok_or_else(|| Error::Hypothesis(format!("scalar {s} is not homogeneous")))?
        };
        let terms = self.terms.iter().map(|(m, c)| (*m, c.mul(s, mode))).filter(|(_, c)| !c.is_zero()).collect();
        Ok(Element { terms, grading: self.grading + shift })
    }
}

fn reduce_all<T: Coeff>(terms: BTreeMap<Monomial, Scalar<T>>, mode: CoefficientMode) -> BTreeMap<Monomial, Scalar<T>> {
    terms.into_iter().map(|(m, s)| (m, s.reduced(mode))).filter(|(_, s)| !s.is_zero()).collect()
}

impl<T: Coeff> fmt::Display for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::terms_text(self.terms.iter()))
    }
}

/// Product in normal form.
pub fn mul<T: Coeff>(x: &Element<T>, y: &Element<T>, params: &RingParams) -> Result<Element<T>> {
    let grading = x.grading + y.grading;
    let parts = normalize_graded(&x.to_raw().mul(&y.to_raw()), params)?;
    match parts.len() {
        0 => Ok(Element::zero(grading)),
        1 => Ok(parts.into_iter().next().expect("one part")),
        _ => Err(Error::Internal(format!("product of homogeneous elements split into {} gradings", parts.len()))),
    }
}
