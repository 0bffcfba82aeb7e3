use std::fmt;

use super::DslError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    /// An integer literal. After `^` it may carry a sign.
    Int(i64),
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::X => f.write_str("x"),
            TokenKind::Y => f.write_str("y"),
            TokenKind::Plus => f.write_str("+"),
            TokenKind::Minus => f.write_str("-"),
            TokenKind::Star => f.write_str("*"),
            TokenKind::Slash => f.write_str("/"),
            TokenKind::Caret => f.write_str("^"),
            TokenKind::LParen => f.write_str("("),
            TokenKind::RParen => f.write_str(")"),
            TokenKind::Int(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// 0-based character offset into the source.
    pub offset: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens: Vec<Token> = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        let start = pos;
        let after_caret = matches!(tokens.last(), Some(Token { kind: TokenKind::Caret, .. }));
        let kind = match c {
            c if c.is_whitespace() => {
                pos += 1;
                continue;
            }
            'x' | 'X' => TokenKind::X,
            'y' | 'Y' => TokenKind::Y,
            '+' => TokenKind::Plus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '-' if after_caret && chars.get(pos + 1).is_some_and(char::is_ascii_digit) => {
                pos += 1;
                let value = read_int(&chars, &mut pos, start)?;
                tokens.push(Token {
                    kind: TokenKind::Int(-value),
                    offset: start,
                });
                continue;
            }
            '-' => TokenKind::Minus,
            c if c.is_ascii_digit() => {
                let value = read_int(&chars, &mut pos, start)?;
                tokens.push(Token {
                    kind: TokenKind::Int(value),
                    offset: start,
                });
                continue;
            }
            other => return Err(DslError::UnknownChar { ch: other, offset: start }),
        };
        tokens.push(Token { kind, offset: start });
        pos += 1;
    }
    Ok(tokens)
}

fn read_int(chars: &[char], pos: &mut usize, start: usize) -> Result<i64, DslError> {
    let mut value: i64 = 0;
    while let Some(d) = chars.get(*pos).and_then(|c| c.to_digit(10)) {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(i64::from(d)))
            .ok_or(DslError::ExponentRange { offset: start })?;
        *pos += 1;
    }
    Ok(value)
}
