//! The grading lattice Z³ and the combinatorial sets that index basis
//! generators.
//!
//! A grading `(a, b, c)` stands for the virtual representation
//! `a·R + b·Λ + c·ω`. Everything in this module is a pure function of its
//! arguments; infinite sets (the lines `E_i`, `F_j`, `G_{i,j}`, `L_i`) are
//! handled through their intersections with the planes `P_n = {c = n}`.

use std::cmp::{max, min};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the grading lattice Z³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Grading {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Grading {
    pub const ZERO: Grading = Grading::new(0, 0, 0);
    /// The trivial representation.
    pub const R: Grading = Grading::new(1, 0, 0);
    /// The sign representation.
    pub const LAMBDA: Grading = Grading::new(0, 1, 0);
    /// The complex sign representation, `2Λ`.
    pub const M: Grading = Grading::new(0, 2, 0);
    pub const OMEGA: Grading = Grading::new(0, 0, 1);
    /// `χω = −ω + 2 + M`.
    pub const CHI_OMEGA: Grading = Grading::new(2, 2, -1);
    pub const OMEGA_MINUS_2: Grading = Grading::new(-2, 0, 1);
    pub const CHI_OMEGA_MINUS_2: Grading = Grading::new(0, 2, -1);

    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Grading { a, b, c }
    }

    pub fn decompose(self) -> PlaneDecomposition {
        PlaneDecomposition { n: self.c, alpha1: self.a, alpha2: self.b }
    }

    /// Virtual dimension `|α|` of the RO(G)-part.
    pub fn total_degree(self) -> i64 {
        self.a + self.b
    }

    /// Virtual dimension `α^G` of the fixed points of the RO(G)-part.
    pub fn fixed_degree(self) -> i64 {
        self.a
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl Add for Grading {
    type Output = Grading;
    fn add(self, o: Grading) -> Grading {
        Grading::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl AddAssign for Grading {
    fn add_assign(&mut self, o: Grading) {
        *self = *self + o;
    }
}

impl Sub for Grading {
    type Output = Grading;
    fn sub(self, o: Grading) -> Grading {
        Grading::new(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for Grading {
    type Output = Grading;
    fn neg(self) -> Grading {
        Grading::new(-self.a, -self.b, -self.c)
    }
}

impl Mul<Grading> for i64 {
    type Output = Grading;
    fn mul(self, g: Grading) -> Grading {
        Grading::new(self * g.a, self * g.b, self * g.c)
    }
}

/// A grading split as `nω + α` with `α = α₁·R + α₂·Λ ∈ RO(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlaneDecomposition {
    pub n: i64,
    pub alpha1: i64,
    pub alpha2: i64,
}

impl PlaneDecomposition {
    pub fn reconstruct(self) -> Grading {
        Grading::new(self.alpha1, self.alpha2, self.n)
    }

    pub fn total_degree(self) -> i64 {
        self.alpha1 + self.alpha2
    }

    pub fn fixed_degree(self) -> i64 {
        self.alpha1
    }
}

/// An element of `{0, 1, 2, …, ∞}`, used for the indices p and q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Extended {
    Finite(u32),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<i64> {
        match self {
            Extended::Finite(k) => Some(i64::from(k)),
            Extended::Infinite => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Extended::Finite(0)
    }

    /// `k >= self`, where nothing finite reaches ∞.
    pub fn le_int(self, k: i64) -> bool {
        matches!(self.finite(), Some(v) if k >= v)
    }

    /// `k > self`.
    pub fn lt_int(self, k: i64) -> bool {
        matches!(self.finite(), Some(v) if k > v)
    }
}

impl From<u32> for Extended {
    fn from(k: u32) -> Self {
        Extended::Finite(k)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(k) => write!(f, "{k}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Extended {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Extended::Infinite),
            t => t
                .parse::<u32>()
                .map(Extended::Finite)
                .map_err(|_| format!("expected a non-negative integer or `inf`, got `{t}`")),
        }
    }
}

/// Identifies the line `L_i^{[p,q]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineId {
    pub p: Extended,
    pub q: Extended,
    pub i: usize,
}

impl LineId {
    pub fn new(p: u32, q: u32, i: usize) -> Self {
        LineId { p: p.into(), q: q.into(), i }
    }
}

/// `E_i ∩ P_n`.
pub fn e_point(i: u32, n: i64) -> Grading {
    Grading::new(-2 * (n - i64::from(i)), 0, n)
}

/// `F_j ∩ P_n`.
pub fn f_point(j: u32, n: i64) -> Grading {
    Grading::new(2 * i64::from(j), -2 * n, n)
}

/// `G_{i,j} ∩ P_n`, with `G_{i,0} = E_{i−1}` and `G_{0,j} = F_{j−1}`.
pub fn g_point(i: u32, j: u32, n: i64) -> Result<Grading> {
    match (i, j) {
        (0, 0) => Err(Error::ZeroIndex),
        (i, 0) => Ok(e_point(i - 1, n)),
        (0, j) => Ok(f_point(j - 1, n)),
        (i, j) => {
            let (i, j) = (i64::from(i), i64::from(j));
            if n <= i - j {
                Ok(Grading::new(2 * (i - n - 1), 2 * j, n))
            } else {
                Ok(Grading::new(2 * (j - 1), 2 * (i - n), n))
            }
        }
    }
}

fn finite_pq(p: Extended, q: Extended) -> Result<(i64, i64)> {
    match (p.finite(), q.finite()) {
        (Some(p), Some(q)) => Ok((p, q)),
        _ => Err(Error::InfiniteIndex),
    }
}

/// Chooses the elementary set `G_{i',j'}` that carries `L_i^{[p,q]}` in the
/// plane `P_n`.
///
/// A line is a chain of pieces of `G`-sets glued along consecutive planes; the
/// three regimes below correspond to `i < min(p,q)`, the middle band, and the
/// last `min(p,q)` lines. Adjacent pieces agree on the shared plane, so the
/// first matching piece is taken.
fn governing_g(p: i64, q: i64, i: i64, n: i64) -> (i64, i64) {
    let small = min(p, q);
    let big = max(p, q);
    if i < small {
        if n <= -i {
            return (0, i + 1);
        }
        for j in (1..=i).rev() {
            if n <= i - 2 * j + 2 {
                return (i + 1 - j, j);
            }
        }
        (i + 1, 0)
    } else if i < big - 1 {
        let mu = min(p, i + 1);
        if n <= 2 * mu - i - 2 * small {
            return (mu - small, i + 1 - mu + small);
        }
        for j in (1..small).rev() {
            if n <= 2 * mu - i - 2 * j {
                return (mu - j, i + 1 - mu + j);
            }
        }
        (mu, i + 1 - mu)
    } else {
        let nu = p + q - i - 1;
        if n <= p - q - nu + 1 {
            return (p - nu, q);
        }
        for j in (1..nu).rev() {
            if n <= p - q + nu - 2 * j + 1 {
                return (p - j, q - nu + j);
            }
        }
        (p, q - nu)
    }
}

/// `L_i^{[p,q]} ∩ P_n`.
pub fn line_point(id: LineId, n: i64) -> Result<Grading> {
    let (p, q) = finite_pq(id.p, id.q)?;
    let len = (p + q) as usize;
    if p + q == 0 {
        return Err(Error::EmptySpace);
    }
    if id.i >= len {
        return Err(Error::LineIndexOutOfRange { index: id.i, len });
    }
    let (gi, gj) = governing_g(p, q, id.i as i64, n);
    g_point(gi as u32, gj as u32, n)
}

/// The basis gradings `D_{p,q} ∩ P_n`, ordered by line index.
pub fn d_slice(p: u32, q: u32, n: i64) -> Result<Vec<Grading>> {
    if p + q == 0 {
        return Err(Error::EmptySpace);
    }
    (0..(p + q) as usize).map(|i| line_point(LineId::new(p, q, i), n)).collect()
}

/// `D_{p,q} ∩ P_n` computed straight from the recursive definition
/// `D_{p,q} = (D_{p,q−1} ∩ H⁺_{p−q}) ∪ (D_{p−1,q} ∩ H⁻_{p−q}) ∪ G_{p,q}`.
pub fn d_slice_recursive(p: u32, q: u32, n: i64) -> Result<BTreeSet<Grading>> {
    if p + q == 0 {
        return Err(Error::EmptySpace);
    }
    if q == 0 {
        return Ok((0..p).map(|i| e_point(i, n)).collect());
    }
    if p == 0 {
        return Ok((0..q).map(|j| f_point(j, n)).collect());
    }
    let mut out = BTreeSet::new();
    out.insert(g_point(p, q, n)?);
    let pivot = i64::from(p) - i64::from(q);
    if n >= pivot {
        out.extend(d_slice_recursive(p, q - 1, n)?);
    }
    if n <= pivot {
        out.extend(d_slice_recursive(p - 1, q, n)?);
    }
    Ok(out)
}

/// Membership test `α ∈ D_{p,q}`.
pub fn in_d(p: u32, q: u32, alpha: Grading) -> Result<bool> {
    Ok(d_slice(p, q, alpha.c)?.contains(&alpha))
}

/// A function `Z → Z²` of the kind compared by the order relations: one of
/// the elementary sets or a line, read off plane by plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeFn {
    E(u32),
    F(u32),
    G(u32, u32),
    Line(LineId),
}

impl LatticeFn {
    pub fn eval(&self, n: i64) -> Result<Grading> {
        match *self {
            LatticeFn::E(i) => Ok(e_point(i, n)),
            LatticeFn::F(j) => Ok(f_point(j, n)),
            LatticeFn::G(i, j) => g_point(i, j, n),
            LatticeFn::Line(id) => line_point(id, n),
        }
    }
}

fn leq_at(f: Grading, g: Grading, strict: bool) -> bool {
    let first = if strict { f.a <= g.a - 2 } else { f.a == g.a || f.a <= g.a - 2 };
    first && f.a + f.b <= g.a + g.b - 2
}

/// The relation `f ≤ g` evaluated at a single plane.
pub fn rel_leq_at(f: &LatticeFn, g: &LatticeFn, n: i64) -> Result<bool> {
    Ok(leq_at(f.eval(n)?, g.eval(n)?, false))
}

/// The relation `f < g` evaluated at a single plane.
pub fn rel_lt_at(f: &LatticeFn, g: &LatticeFn, n: i64) -> Result<bool> {
    Ok(leq_at(f.eval(n)?, g.eval(n)?, true))
}

/// `f ≤ g` on every plane of `window`. The relation is not reflexive.
pub fn rel_leq(f: &LatticeFn, g: &LatticeFn, window: std::ops::RangeInclusive<i64>) -> Result<bool> {
    for n in window {
        if !rel_leq_at(f, g, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f < g` on every plane of `window`.
pub fn rel_lt(f: &LatticeFn, g: &LatticeFn, window: std::ops::RangeInclusive<i64>) -> Result<bool> {
    for n in window {
        if !rel_lt_at(f, g, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The coarse cone `−α₂ ≤ α₁ ≤ 0, α₂ ≥ 0` or `0 ≤ α₁ ≤ −α₂, α₂ ≤ 0`
/// bounding the RO(G)-gradings where the cohomology of a point can live.
pub fn in_coefficient_cone(alpha1: i64, alpha2: i64) -> bool {
    (alpha2 >= 0 && -alpha2 <= alpha1 && alpha1 <= 0) || (alpha2 <= 0 && 0 <= alpha1 && alpha1 <= -alpha2)
}

/// Whether `H_G^α(S⁰)` can be nonzero for `α = α₁·R + α₂·Λ`.
///
/// This is the exact support of the Burnside-coefficient cohomology of a
/// point, which is strictly smaller than [`in_coefficient_cone`]: the
/// positive cone is populated only on the axis `α₁ = 0`, the antidiagonal
/// `α₁ = −α₂` and at even `α₁`, and the negative cone only on `α₁ = 0`, the
/// diagonal `α₁ = −α₂` and at odd `α₁ ≥ 3`. In particular `(1,−2)` lies on
/// the cone's boundary but carries nothing.
pub fn may_be_nonzero(alpha1: i64, alpha2: i64) -> bool {
    if alpha2 >= 0 {
        alpha1 == 0 || alpha1 == -alpha2 || (alpha1 % 2 == 0 && -alpha2 <= alpha1 && alpha1 <= 0)
    } else {
        let c = -alpha2;
        alpha1 == 0 || alpha1 == c || (alpha1 % 2 != 0 && 3 <= alpha1 && alpha1 <= c)
    }
}
