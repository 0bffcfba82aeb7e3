//! Recursive descent over the token stream.
//!
//! ```text
//! expr   := term { ('+' | '-') term }
//! term   := factor [ '/' factor ]
//! factor := atom { ['*'] atom }
//! atom   := '0' | '1' | var | '(' expr ')'
//! var    := ('x' | 'y') [ '^' signedInt ]
//! ```
//!
//! A parenthesised `expr` inside an atom must be division free.

use super::lexer::{tokenize, Token, TokenKind};
use super::{DslError, PatternExpr, Term};
use crate::poly::PatternPoly;

pub fn parse(text: &str) -> Result<PatternExpr, DslError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let terms = p.expr()?;
    p.expect_end()?;
    Ok(PatternExpr { terms })
}

/// Parses a division-free expression into a single polynomial.
pub fn parse_poly(text: &str) -> Result<PatternPoly, DslError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let poly = p.poly_expr()?;
    p.expect_end()?;
    Ok(poly)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<TokenKind> {
        self.tokens.get(self.pos).map(|t| t.kind)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).copied();
        self.pos += 1;
        t
    }

    fn unexpected(&self, expected: &'static str) -> DslError {
        match self.tokens.get(self.pos) {
            Some(t) => DslError::Syntax {
                offset: t.offset,
                found: t.kind.to_string(),
                expected,
            },
            None => DslError::Syntax {
                offset: self.end,
                found: "end of input".to_string(),
                expected,
            },
        }
    }

    fn expect_end(&self) -> Result<(), DslError> {
        match self.peek() {
            None => Ok(()),
            Some(TokenKind::Slash) => Err(DslError::NestedDivision { offset: self.offset() }),
            Some(_) => Err(self.unexpected("'+', '-' or end of input")),
        }
    }

    fn expr(&mut self) -> Result<Vec<Term>, DslError> {
        let mut terms = vec![self.term()?];
        while matches!(self.peek(), Some(TokenKind::Plus | TokenKind::Minus)) {
            self.bump();
            terms.push(self.term()?);
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term, DslError> {
        let numerator = self.factor()?;
        let denominator = if self.peek() == Some(TokenKind::Slash) {
            self.bump();
            let at = self.offset();
            let den = self.factor()?;
            if den.is_zero() {
                return Err(DslError::ZeroDenominator { offset: at });
            }
            if self.peek() == Some(TokenKind::Slash) {
                return Err(DslError::NestedDivision { offset: self.offset() });
            }
            Some(den)
        } else {
            None
        };
        Ok(Term {
            numerator,
            denominator,
        })
    }

    fn poly_expr(&mut self) -> Result<PatternPoly, DslError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(TokenKind::Plus | TokenKind::Minus) => {
                    self.bump();
                    acc += &self.factor()?;
                }
                Some(TokenKind::Slash) => {
                    return Err(DslError::NestedDivision { offset: self.offset() })
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PatternPoly, DslError> {
        let at = self.offset();
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(TokenKind::Star) => {
                    self.bump();
                }
                Some(TokenKind::Int(_) | TokenKind::X | TokenKind::Y | TokenKind::LParen) => {}
                _ => return Ok(acc),
            }
            let rhs = self.atom()?;
            acc = acc
                .checked_mul(&rhs)
                .map_err(|_| DslError::ExponentRange { offset: at })?;
        }
    }

    fn atom(&mut self) -> Result<PatternPoly, DslError> {
        let Some(tok) = self.tokens.get(self.pos).copied() else {
            return Err(self.unexpected("'1', 'x', 'y' or '('"));
        };
        match tok.kind {
            TokenKind::Int(1) => {
                self.bump();
                Ok(PatternPoly::one())
            }
            TokenKind::Int(0) => {
                self.bump();
                Ok(PatternPoly::zero())
            }
            TokenKind::X | TokenKind::Y => {
                self.bump();
                let e = self.exponent()?;
                Ok(match tok.kind {
                    TokenKind::X => PatternPoly::monomial(e, 0),
                    _ => PatternPoly::monomial(0, e),
                })
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.poly_expr()?;
                if self.peek() != Some(TokenKind::RParen) {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("'1', 'x', 'y' or '('")),
        }
    }

    fn exponent(&mut self) -> Result<i32, DslError> {
        if self.peek() != Some(TokenKind::Caret) {
            return Ok(1);
        }
        self.bump();
        match self.tokens.get(self.pos).copied() {
            Some(Token {
                kind: TokenKind::Int(v),
                offset,
            }) => {
                self.bump();
                i32::try_from(v).map_err(|_| DslError::ExponentRange { offset })
            }
            _ => Err(self.unexpected("an integer exponent")),
        }
    }
}
