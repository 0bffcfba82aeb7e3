use super::{DslError, PatternExpr};
use crate::poly::{PatternPoly, Window, WindowMode};
use crate::ring::{self, RingSpec};
use crate::series::{self, RationalTerm};

/// The torus matching a window's grid: `(m + 1, n + 1)`.
pub fn wrap_ring(w: &Window) -> RingSpec {
    RingSpec::new(w.m + 1, w.n + 1).expect("grid dimensions are positive")
}

pub fn evaluate(e: &PatternExpr, w: &Window) -> Result<PatternPoly, DslError> {
    match w.mode {
        WindowMode::Window => evaluate_window(e, w),
        WindowMode::Wrap => evaluate_wrap(e, w),
    }
}

fn evaluate_window(e: &PatternExpr, w: &Window) -> Result<PatternPoly, DslError> {
    let mut acc = PatternPoly::zero();
    for (index, t) in e.terms.iter().enumerate() {
        let part = match &t.denominator {
            None => t.numerator.truncate(w),
            Some(den) => {
                let term = RationalTerm::new(t.numerator.clone(), den.clone());
                series::eval_term(&term, w).map_err(|source| DslError::Inadmissible {
                    index,
                    term: t.to_string(),
                    source,
                })?
            }
        };
        acc += &part;
    }
    Ok(acc)
}

fn evaluate_wrap(e: &PatternExpr, w: &Window) -> Result<PatternPoly, DslError> {
    let spec = wrap_ring(w);
    let mut acc = spec.zero();
    for (index, t) in e.terms.iter().enumerate() {
        let num = ring::reduce(&t.numerator, spec);
        let part = match &t.denominator {
            None => num,
            Some(den) => {
                let inv = ring::inverse(&ring::reduce(den, spec), spec).ok_or_else(|| {
                    DslError::NotInvertible {
                        index,
                        term: t.to_string(),
                        m: spec.m(),
                        n: spec.n(),
                    }
                })?;
                ring::ring_mul(&num, &inv, spec)
            }
        };
        acc = ring::ring_add(&acc, &part);
    }
    Ok(acc.into_residue())
}
