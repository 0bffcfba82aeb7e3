//! Bivariate Laurent polynomials over GF(2).
//!
//! A [`PatternPoly`] is stored as its support: the set of monomials whose
//! coefficient is 1. Addition is symmetric difference of supports and
//! multiplication is convolution with coefficients folded mod 2. The same
//! value doubles as a pattern, i.e. the set of lit cells `(i, j)` on a grid.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("exponent overflow")]
    ExponentOverflow,
}

/// The monomial `x^i y^j`. Exponents may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub i: i32,
    pub j: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0 };

    pub const fn new(i: i32, j: i32) -> Self {
        Monomial { i, j }
    }

    pub fn checked_mul(self, other: Monomial) -> Result<Monomial, PolyError> {
        Ok(Monomial {
            i: self.i.checked_add(other.i).ok_or(PolyError::ExponentOverflow)?,
            j: self.j.checked_add(other.j).ok_or(PolyError::ExponentOverflow)?,
        })
    }

    /// True when both exponents are nonnegative.
    pub fn is_polynomial(self) -> bool {
        self.i >= 0 && self.j >= 0
    }

    fn diagonal_key(self) -> (i64, i32, i32) {
        (i64::from(self.i) + i64::from(self.j), self.j, self.i)
    }
}

/// Monomials sort in antidiagonal order: by total degree, then by the power
/// of `y`. On nonnegative exponents this is `1, x, y, x^2, xy, y^2, ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.diagonal_key().cmp(&other.diagonal_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: char, e: i32) -> fmt::Result {
            if e == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{e}")
            }
        }
        match (self.i, self.j) {
            (0, 0) => f.write_str("1"),
            (i, 0) => var(f, 'x', i),
            (0, j) => var(f, 'y', j),
            (i, j) => {
                var(f, 'x', i)?;
                f.write_str("*")?;
                var(f, 'y', j)
            }
        }
    }
}

/// A polynomial over GF(2) in `x`, `y` (and their inverses), held as its
/// support set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PatternPoly {
    support: BTreeSet<Monomial>,
}

impl PatternPoly {
    pub fn zero() -> Self {
        PatternPoly::default()
    }

    pub fn one() -> Self {
        PatternPoly::monomial(0, 0)
    }

    pub fn monomial(i: i32, j: i32) -> Self {
        let mut support = BTreeSet::new();
        support.insert(Monomial::new(i, j));
        PatternPoly { support }
    }

    /// Builds a polynomial from a list of exponent pairs. Repeated pairs
    /// cancel in pairs, as coefficients live in GF(2).
    pub fn from_pairs<I: IntoIterator<Item = (i32, i32)>>(pairs: I) -> Self {
        pairs.into_iter().map(|(i, j)| Monomial::new(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.support.contains(&m)
    }

    /// Monomials in antidiagonal order.
    pub fn iter(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.support.iter().copied()
    }

    pub fn support(&self) -> &BTreeSet<Monomial> {
        &self.support
    }

    /// Adds `m` with coefficient 1, cancelling it if already present.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.support.remove(&m) {
            self.support.insert(m);
        }
    }

    pub fn has_constant_term(&self) -> bool {
        self.contains(Monomial::ONE)
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.iter().all(Monomial::is_polynomial)
    }

    /// GF(2) sum: symmetric difference of supports.
    pub fn add(&self, other: &PatternPoly) -> PatternPoly {
        PatternPoly {
            support: self
                .support
                .symmetric_difference(&other.support)
                .copied()
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &PatternPoly) -> Result<PatternPoly, PolyError> {
        let mut out = PatternPoly::zero();
        for a in self.iter() {
            for b in other.iter() {
                out.toggle(a.checked_mul(b)?);
            }
        }
        Ok(out)
    }

    /// GF(2) product.
    ///
    /// Panics if an exponent leaves the `i32` range; see [`Self::checked_mul`].
    pub fn mul(&self, other: &PatternPoly) -> PatternPoly {
        self.checked_mul(other).expect("exponent overflow in polynomial product")
    }

    pub fn checked_shift(&self, dx: i32, dy: i32) -> Result<PatternPoly, PolyError> {
        let by = Monomial::new(dx, dy);
        let support = self
            .iter()
            .map(|m| m.checked_mul(by))
            .collect::<Result<BTreeSet<_>, _>>()?;
        Ok(PatternPoly { support })
    }

    /// Multiplies by `x^dx y^dy`.
    ///
    /// Panics on exponent overflow; see [`Self::checked_shift`].
    pub fn shift(&self, dx: i32, dy: i32) -> PatternPoly {
        self.checked_shift(dx, dy).expect("exponent overflow in shift")
    }

    /// Keeps the monomials inside the window's rectangle `[0, m] x [0, n]`.
    pub fn truncate(&self, w: &Window) -> PatternPoly {
        PatternPoly {
            support: self.iter().filter(|&m| w.contains(m)).collect(),
        }
    }

    pub fn min_i(&self) -> Option<i32> {
        self.iter().map(|m| m.i).min()
    }

    pub fn max_i(&self) -> Option<i32> {
        self.iter().map(|m| m.i).max()
    }

    pub fn min_j(&self) -> Option<i32> {
        self.iter().map(|m| m.j).min()
    }

    pub fn max_j(&self) -> Option<i32> {
        self.iter().map(|m| m.j).max()
    }
}

impl FromIterator<Monomial> for PatternPoly {
    fn from_iter<T: IntoIterator<Item = Monomial>>(iter: T) -> Self {
        let mut p = PatternPoly::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

impl<'a> std::ops::Add<&'a PatternPoly> for &'a PatternPoly {
    type Output = PatternPoly;

    fn add(self, rhs: &'a PatternPoly) -> PatternPoly {
        PatternPoly::add(self, rhs)
    }
}

impl std::ops::Add for PatternPoly {
    type Output = PatternPoly;

    fn add(self, rhs: PatternPoly) -> PatternPoly {
        PatternPoly::add(&self, &rhs)
    }
}

impl std::ops::AddAssign<&PatternPoly> for PatternPoly {
    fn add_assign(&mut self, rhs: &PatternPoly) {
        for m in rhs.iter() {
            self.toggle(m);
        }
    }
}

/// Canonical text: terms in antidiagonal order joined by `+`, e.g.
/// `1+x+x*y^2`. The zero polynomial prints as `0`.
impl fmt::Display for PatternPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, m) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// How a pattern expression is evaluated on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WindowMode {
    /// Formal power series clipped to the rectangle.
    #[default]
    Window,
    /// Exponents wrap around the torus of the grid's dimensions.
    Wrap,
}

/// The visible grid. `m` and `n` are inclusive maximum exponents, so the grid
/// has `(m + 1) x (n + 1)` cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub m: u32,
    pub n: u32,
    pub mode: WindowMode,
}

impl Window {
    pub const fn new(m: u32, n: u32) -> Self {
        Window {
            m,
            n,
            mode: WindowMode::Window,
        }
    }

    pub const fn with_mode(self, mode: WindowMode) -> Self {
        Window { mode, ..self }
    }

    pub fn width(&self) -> usize {
        self.m as usize + 1
    }

    pub fn height(&self) -> usize {
        self.n as usize + 1
    }

    pub fn cells(&self) -> usize {
        self.width() * self.height()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.i >= 0 && m.j >= 0 && (m.i as i64) <= self.m as i64 && (m.j as i64) <= self.n as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(pairs: &[(i32, i32)]) -> PatternPoly {
        PatternPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn add_cancels_shared_terms() {
        assert_eq!(p(&[(0, 0), (1, 0)]).add(&p(&[(1, 0), (0, 1)])), p(&[(0, 0), (0, 1)]));
        let axis = PatternPoly::from_pairs((0..=4).map(|i| (i, 0)));
        let diag = PatternPoly::from_pairs((0..=3).map(|k| (k, k)));
        let expected = p(&[(1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(&axis + &diag, expected);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[(1, 0)]).mul(&p(&[(0, 1)])), p(&[(1, 1)]));
        let one_x = p(&[(0, 0), (1, 0)]);
        assert_eq!(one_x.mul(&one_x), p(&[(0, 0), (2, 0)]));
        let a = p(&[(0, 0), (1, 0), (0, 1)]);
        let b = p(&[(0, 0), (2, 0), (0, 2)]);
        // Nine distinct products, none cancel.
        let expected = p(&[(0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (3, 0), (1, 2), (2, 1), (0, 3)]);
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn shift_and_truncate() {
        let diag = PatternPoly::from_pairs((0..=3).map(|k| (k, k)));
        assert_eq!(diag.shift(2, 0), PatternPoly::from_pairs((0..=3).map(|k| (k + 2, k))));
        assert_eq!(diag.shift(0, 0), diag);
        assert_eq!(diag.shift(3, 1).shift(-3, -1), diag);

        let w = Window::new(4, 3);
        assert_eq!(p(&[(0, 0), (5, 0), (4, 1)]).truncate(&w), p(&[(0, 0), (4, 1)]));
        assert_eq!(p(&[(-1, 1), (1, 1)]).truncate(&w), p(&[(1, 1)]));
    }

    #[test]
    fn overflow_is_reported() {
        let big = PatternPoly::monomial(i32::MAX, 0);
        assert_eq!(big.checked_shift(1, 0), Err(PolyError::ExponentOverflow));
        assert_eq!(big.checked_mul(&big), Err(PolyError::ExponentOverflow));
        let edge = PatternPoly::monomial(1024, -1024);
        assert_eq!(edge.mul(&edge), PatternPoly::monomial(2048, -2048));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(p(&[(1, 2), (0, 0), (1, 0)]).to_string(), "1+x+x*y^2");
        assert_eq!(p(&[(4, 0), (-1, 1)]).to_string(), "x^-1*y+x^4");
        assert_eq!(PatternPoly::zero().to_string(), "0");
        assert_eq!(p(&[(0, 3), (2, 1), (3, 0)]).to_string(), "x^3+x^2*y+y^3");
    }

    #[test]
    fn addition_group_exhaustive_3x3() {
        // All 512 polynomials supported on [0,2]^2, pairwise on a sample.
        let cells: Vec<(i32, i32)> = (0..3).flat_map(|j| (0..3).map(move |i| (i, j))).collect();
        let all: Vec<PatternPoly> = (0u32..512)
            .map(|bits| {
                PatternPoly::from_pairs(
                    cells.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &c)| c),
                )
            })
            .collect();
        let zero = PatternPoly::zero();
        for a in &all {
            assert!(a.add(a).is_zero());
            assert_eq!(a.add(&zero), *a);
            for b in all.iter().step_by(7) {
                assert_eq!(a.add(b), b.add(a));
            }
        }
    }

    fn arb_poly(lo: i32, hi: i32) -> impl Strategy<Value = PatternPoly> {
        proptest::collection::vec((lo..=hi, lo..=hi), 0..12).prop_map(PatternPoly::from_pairs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(0, 3), b in arb_poly(0, 3), c in arb_poly(0, 3)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        }

        #[test]
        fn shift_is_monomial_product(a in arb_poly(-8, 8), dx in 0i32..10, dy in 0i32..10) {
            prop_assert_eq!(a.shift(dx, dy), a.mul(&PatternPoly::monomial(dx, dy)));
            prop_assert_eq!(a.shift(dx, dy).len(), a.len());
        }

        #[test]
        fn truncate_idempotent_and_monotone(a in arb_poly(-3, 9), m in 0u32..8, n in 0u32..8) {
            let w = Window::new(m, n);
            let t = a.truncate(&w);
            prop_assert_eq!(t.truncate(&w), t.clone());
            prop_assert!(t.support().is_subset(a.support()));
        }
    }
}
