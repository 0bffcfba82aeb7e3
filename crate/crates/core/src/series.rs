//! Reciprocals `1/q(x, y)` as formal Laurent series over GF(2), clipped to a
//! window.
//!
//! A denominator is admissible when it has a constant term and every other
//! monomial `x^a y^b` is positive in the lexicographic order that compares
//! the `y` exponent first: `b > 0`, or `b = 0` and `a > 0`. Such a `q` has a
//! unique inverse `c` with `c_{0,0} = 1`, obtained row by row from
//!
//! ```text
//! c_{i,j} = sum over non-constant (a, b) in q of c_{i-a, j-b}
//! ```
//!
//! Rows are filled in increasing `j`, each row in increasing `i`.

use std::fmt;

use thiserror::Error;

use crate::poly::{PatternPoly, Window};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator {0} has no constant term")]
    MissingConstant(String),
    #[error("denominator {denominator} has a non-positive term {term}: every non-constant term needs a positive y exponent, or zero y exponent and positive x exponent")]
    NonPositiveTerm { denominator: String, term: String },
    #[error("working region of {0} cells is too large")]
    RegionTooLarge(u64),
}

/// Cap on the number of coefficients computed for a single term.
pub const MAX_REGION_CELLS: u64 = 1 << 26;

/// `numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalTerm {
    pub numerator: PatternPoly,
    pub denominator: PatternPoly,
}

impl RationalTerm {
    pub fn new(numerator: PatternPoly, denominator: PatternPoly) -> Self {
        RationalTerm {
            numerator,
            denominator,
        }
    }

    pub fn reciprocal(denominator: PatternPoly) -> Self {
        RationalTerm::new(PatternPoly::one(), denominator)
    }
}

impl fmt::Display for RationalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

pub fn check_admissible(q: &PatternPoly) -> Result<(), SeriesError> {
    if !q.has_constant_term() {
        return Err(SeriesError::MissingConstant(q.to_string()));
    }
    if let Some(bad) = q.iter().find(|m| !(m.j > 0 || (m.j == 0 && m.i >= 0))) {
        return Err(SeriesError::NonPositiveTerm {
            denominator: q.to_string(),
            term: bad.to_string(),
        });
    }
    Ok(())
}

/// Exact coefficients of `1/q` on `[i_lo, i_hi] x [0, j_hi]`.
struct SeriesBlock {
    i_lo: i64,
    width: usize,
    rows: Vec<Vec<bool>>,
}

impl SeriesBlock {
    fn get(&self, i: i64, j: i64) -> bool {
        if j < 0 || j as usize >= self.rows.len() {
            return false;
        }
        let k = i - self.i_lo;
        k >= 0 && (k as usize) < self.width && self.rows[j as usize][k as usize]
    }
}

/// Computes `1/q` on a region widened so that `[i_lo, i_hi] x [0, j_hi]` is
/// exact.
///
/// A term `(a, b)` with `b > 0` and `a < 0` pulls coefficients leftward by
/// `|a|` per row climbed. Coefficients of row `j` vanish left of
/// `-spread * j`, and a wrong (truncated) value right of the computed range
/// contaminates at most `spread` further columns per row, where `spread` is
/// the largest `|a|` over terms with `b > 0`.
fn series_block(q: &PatternPoly, i_lo: i64, i_hi: i64, j_hi: i64) -> Result<SeriesBlock, SeriesError> {
    check_admissible(q)?;
    let rows_needed = (j_hi + 1).max(0) as usize;
    let spread = q
        .iter()
        .filter(|m| m.j > 0)
        .map(|m| i64::from(m.i).abs())
        .max()
        .unwrap_or(0);
    let margin = spread * (j_hi.max(0) + 1);
    let lo = i_lo.min(0) - margin;
    let hi = i_hi.max(0) + margin;
    let width = (hi - lo + 1) as usize;
    let cells = width as u64 * rows_needed as u64;
    if cells > MAX_REGION_CELLS {
        return Err(SeriesError::RegionTooLarge(cells));
    }
    let taps: Vec<(i64, i64)> = q
        .iter()
        .filter(|m| !(m.i == 0 && m.j == 0))
        .map(|m| (i64::from(m.i), i64::from(m.j)))
        .collect();
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(rows_needed);
    for j in 0..rows_needed as i64 {
        let mut row = vec![false; width];
        for k in 0..width {
            let i = lo + k as i64;
            let mut c = i == 0 && j == 0;
            for &(a, b) in &taps {
                let (si, sj) = (i - a, j - b);
                if sj < 0 {
                    continue;
                }
                let sk = si - lo;
                if sk < 0 || sk >= width as i64 {
                    continue;
                }
                let src = if sj == j {
                    row[sk as usize]
                } else {
                    rows[sj as usize][sk as usize]
                };
                c ^= src;
            }
            row[k] = c;
        }
        rows.push(row);
    }
    Ok(SeriesBlock {
        i_lo: lo,
        width,
        rows,
    })
}

/// `1/q` clipped to the window rectangle.
pub fn reciprocal(q: &PatternPoly, w: &Window) -> Result<PatternPoly, SeriesError> {
    eval_term(&RationalTerm::reciprocal(q.clone()), w)
}

/// `numerator * (1/denominator)` clipped to the window rectangle.
pub fn eval_term(t: &RationalTerm, w: &Window) -> Result<PatternPoly, SeriesError> {
    check_admissible(&t.denominator)?;
    if t.numerator.is_zero() {
        return Ok(PatternPoly::zero());
    }
    let (m, n) = (i64::from(w.m), i64::from(w.n));
    let num: Vec<(i64, i64)> = t
        .numerator
        .iter()
        .map(|mo| (i64::from(mo.i), i64::from(mo.j)))
        .collect();
    let ni_min = num.iter().map(|p| p.0).min().unwrap_or(0);
    let ni_max = num.iter().map(|p| p.0).max().unwrap_or(0);
    let nj_min = num.iter().map(|p| p.1).min().unwrap_or(0);
    let block = series_block(&t.denominator, -ni_max, m - ni_min, n - nj_min)?;
    let mut out = PatternPoly::zero();
    for y in 0..=n {
        for x in 0..=m {
            let bit = num
                .iter()
                .fold(false, |acc, &(a, b)| acc ^ block.get(x - a, y - b));
            if bit {
                out.toggle(crate::poly::Monomial::new(x as i32, y as i32));
            }
        }
    }
    Ok(out)
}

/// GF(2) sum of the clipped terms.
pub fn eval_sum(terms: &[RationalTerm], w: &Window) -> Result<PatternPoly, SeriesError> {
    terms.iter().try_fold(PatternPoly::zero(), |acc, t| {
        Ok(acc.add(&eval_term(t, w)?))
    })
}
