//! One-dimensional generator sequences: prime-reciprocal d-sequences and the
//! series expansion of `1/q(x)` for a univariate `q` (the shift-register
//! sequence of `q`).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poly::PatternPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("polynomial has no constant term")]
    MissingConstant,
    #[error("polynomial {0} is not univariate in x with nonnegative exponents")]
    NotUnivariate(String),
    #[error("invalid bit character {ch:?} at offset {offset}")]
    InvalidBit { ch: char, offset: usize },
}

/// A finite run of bits, optionally tagged with the period of the infinite
/// sequence it was cut from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSeq {
    bits: Vec<bool>,
    period_hint: Option<usize>,
}

impl BitSeq {
    pub fn new(bits: Vec<bool>) -> Self {
        BitSeq {
            bits,
            period_hint: None,
        }
    }

    pub fn with_period_hint(mut self, period: Option<usize>) -> Self {
        self.period_hint = period;
        self
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    pub fn period_hint(&self) -> Option<usize> {
        self.period_hint
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Smallest `t >= 1` with `bits[k] == bits[k + t]` wherever both exist.
    /// Returns 0 for the empty sequence.
    pub fn period(&self) -> usize {
        let s = &self.bits;
        if s.is_empty() {
            return 0;
        }
        // Prefix function: the longest proper border gives the shortest period.
        let mut border = vec![0usize; s.len()];
        for q in 1..s.len() {
            let mut k = border[q - 1];
            while k > 0 && s[q] != s[k] {
                k = border[k - 1];
            }
            if s[q] == s[k] {
                k += 1;
            }
            border[q] = k;
        }
        s.len() - border[s.len() - 1]
    }

    /// True if `other` is a cyclic rotation of `self`.
    pub fn is_rotation_of(&self, other: &BitSeq) -> bool {
        let n = self.len();
        n == other.len()
            && (n == 0
                || (0..n).any(|r| (0..n).all(|k| self.bits[(k + r) % n] == other.bits[k])))
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitSeq {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(offset, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(SeqError::InvalidBit { ch, offset }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitSeq::new)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Multiplicative order of 2 modulo the odd prime `p`.
pub fn order_of_two(p: u64) -> u64 {
    let mut r = 2 % p;
    let mut k = 1;
    while r != 1 {
        r = mul_mod(r, 2, p);
        k += 1;
    }
    k
}

/// Binary expansion of `1/p`: bit `k` is `(2^(k+1) mod p) mod 2`.
pub fn dseq(p: u64, count: usize) -> Result<BitSeq, SeqError> {
    if p < 3 || !is_prime(p) {
        return Err(SeqError::NotOddPrime(p));
    }
    if count == 0 {
        return Err(SeqError::ZeroCount);
    }
    let mut r = 1u64;
    let bits = (0..count)
        .map(|_| {
            r = mul_mod(r, 2, p);
            r % 2 == 1
        })
        .collect();
    Ok(BitSeq::new(bits).with_period_hint(Some(order_of_two(p) as usize)))
}

/// Largest degree for which the true period is found by walking the state.
const MAX_STATE_DEGREE: usize = 24;

/// Coefficients of the formal series `1/q(x)`, starting at `c_0 = 1`.
pub fn poly_reciprocal_seq(q: &PatternPoly, count: usize) -> Result<BitSeq, SeqError> {
    if count == 0 {
        return Err(SeqError::ZeroCount);
    }
    if q.iter().any(|m| m.j != 0 || m.i < 0) {
        return Err(SeqError::NotUnivariate(q.to_string()));
    }
    if !q.has_constant_term() {
        return Err(SeqError::MissingConstant);
    }
    let taps: Vec<usize> = q.iter().filter(|m| m.i > 0).map(|m| m.i as usize).collect();
    let mut bits = Vec::with_capacity(count);
    for k in 0..count {
        let c = if k == 0 {
            true
        } else {
            taps.iter().filter(|&&a| a <= k).fold(false, |acc, &a| acc ^ bits[k - a])
        };
        bits.push(c);
    }
    let degree = taps.iter().copied().max().unwrap_or(0);
    Ok(BitSeq::new(bits).with_period_hint(state_period(&taps, degree)))
}

/// Period of the recurrence `c_k = sum c_{k-a}` started from `c_0 = 1`.
///
/// With a constant term present the recurrence is invertible, so the state
/// sequence is purely periodic and the initial state recurs.
fn state_period(taps: &[usize], degree: usize) -> Option<usize> {
    // 1/1 = 1 is a single pulse, not a periodic sequence.
    if degree == 0 || degree > MAX_STATE_DEGREE {
        return None;
    }
    // State: the last `degree` coefficients, bit t = c_{k-1-t}. Before c_0 all
    // earlier coefficients are zero, and c_0 = 1 is the first output.
    let step = |state: u64| {
        let next = taps
            .iter()
            .fold(0u64, |acc, &a| acc ^ (state >> (a - 1) & 1));
        ((state << 1) | next) & ((1u64 << degree) - 1)
    };
    let start = 1u64; // c_0 = 1, earlier zero
    let mut state = step(start);
    let mut period = 1usize;
    while state != start {
        state = step(state);
        period += 1;
    }
    Some(period)
}
