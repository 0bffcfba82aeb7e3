//! A small language for pattern expressions: flat sums of fractions over
//! GF(2)[x, y], e.g. `1/(1+x) + x^2/(1+y) + 1/(1+x+x*y^2)`.
//!
//! `-` is accepted as a synonym for `+`, `*` may be left out between atoms
//! (`xy^2`), and exponents may be negative (`x^-1*y`). Only one level of
//! division is allowed.
//!
//! Evaluation runs in one of two modes. In window mode each fraction is
//! expanded as a Laurent series and clipped to the grid. In wrap mode the grid
//! is a torus: exponents reduce modulo the grid dimensions and division is by
//! the ring inverse, so any denominator that is a unit of
//! `GF(2)[x, y] / (x^(m+1) - 1, y^(n+1) - 1)` is allowed.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::poly::PatternPoly;
use crate::series::SeriesError;

pub use eval::{evaluate, wrap_ring};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("unknown character {ch:?} at offset {offset}")]
    UnknownChar { ch: char, offset: usize },
    #[error("syntax error at offset {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        found: String,
        expected: &'static str,
    },
    #[error("nested division at offset {offset}: only a single top-level '/' per term is allowed")]
    NestedDivision { offset: usize },
    #[error("zero denominator at offset {offset}")]
    ZeroDenominator { offset: usize },
    #[error("exponent out of range at offset {offset}")]
    ExponentRange { offset: usize },
    #[error("term {index} ({term}): {source}")]
    Inadmissible {
        index: usize,
        term: String,
        source: SeriesError,
    },
    #[error("term {index} ({term}): denominator is not invertible modulo x^{m} - 1, y^{n} - 1")]
    NotInvertible {
        index: usize,
        term: String,
        m: u32,
        n: u32,
    },
}

/// One summand `numerator / denominator`; a missing denominator means 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub numerator: PatternPoly,
    pub denominator: Option<PatternPoly>,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.len() > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        match &self.denominator {
            Some(den) => write!(f, "/({den})"),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternExpr {
    pub terms: Vec<Term>,
}

impl PatternExpr {
    pub fn concat(mut self, other: PatternExpr) -> PatternExpr {
        self.terms.extend(other.terms);
        self
    }
}

/// Canonical text; parsing it back yields an equal expression.
impl fmt::Display for PatternExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PatternExpr {
    type Err = DslError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
