use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grading::Grading;

/// Exponent vector `(a, b, m, n)` of `c_{ω−2}^a c_{χω−2}^b c_ω^m c_{χω}^n`.
///
/// `m` and `n` are never negative. A negative `a` (resp. `b`) denotes a
/// divisible class and is only meaningful when `n ≥ q` (resp. `m ≥ p`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub a: i64,
    pub b: i64,
    pub m: i64,
    pub n: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, m: 0, n: 0 };
    pub const C_OMEGA_MINUS_2: Monomial = Monomial { a: 1, b: 0, m: 0, n: 0 };
    pub const C_CHI_OMEGA_MINUS_2: Monomial = Monomial { a: 0, b: 1, m: 0, n: 0 };
    pub const C_OMEGA: Monomial = Monomial { a: 0, b: 0, m: 1, n: 0 };
    pub const C_CHI_OMEGA: Monomial = Monomial { a: 0, b: 0, m: 0, n: 1 };

    /// # Panics
    /// If `m` or `n` is negative.
    pub fn new(a: i64, b: i64, m: i64, n: i64) -> Self {
        assert!(m >= 0 && n >= 0, "Euler class exponents must be non-negative");
        Monomial { a, b, m, n }
    }

    pub fn grading(&self) -> Grading {
        self.a * Grading::OMEGA_MINUS_2
            + self.b * Grading::CHI_OMEGA_MINUS_2
            + self.m * Grading::OMEGA
            + self.n * Grading::CHI_OMEGA
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.a + other.a, self.b + other.b, self.m + other.m, self.n + other.n)
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    fn order_key(&self) -> (i64, i64, i64, i64) {
        (self.m + self.n, self.m, self.a, self.b)
    }
}

/// Monomials are ordered by Euler-class degree `m + n` first, which is the
/// order in which the terms of an element are printed.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [("cwm2", self.a), ("cxwm2", self.b), ("cw", self.m), ("cxw", self.n)]
            .into_iter()
            .filter(|&(_, k)| k != 0)
            .map(|(name, k)| if k == 1 { name.to_string() } else { format!("{name}^{k}") })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_gradings() {
        assert_eq!(Monomial::C_OMEGA_MINUS_2.grading(), Grading::OMEGA_MINUS_2);
        assert_eq!(Monomial::C_CHI_OMEGA_MINUS_2.grading(), Grading::CHI_OMEGA_MINUS_2);
        assert_eq!(Monomial::C_OMEGA.grading(), Grading::OMEGA);
        assert_eq!(Monomial::C_CHI_OMEGA.grading(), Grading::CHI_OMEGA);
        // relation (3): c_{χω−2} c_{ω−2} sits in the grading of ξ
        assert_eq!(Monomial::new(1, 1, 0, 0).grading(), Grading::new(-2, 2, 0));
    }

    #[test]
    fn text() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(Monomial::new(0, -1, 1, 0).to_string(), "cxwm2^-1*cw");
        assert_eq!(Monomial::new(2, 0, 0, 3).to_string(), "cwm2^2*cxw^3");
    }

    #[test]
    fn ordering_puts_low_degree_first() {
        assert!(Monomial::new(0, 1, 1, 0) < Monomial::new(0, 0, 1, 1));
        assert!(Monomial::ONE < Monomial::new(0, 1, 1, 0));
    }
}
