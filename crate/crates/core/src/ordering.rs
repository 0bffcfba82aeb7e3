//! Enumeration orders for monomials with nonnegative exponents, and the
//! polynomial <-> bit sequence codec they induce.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poly::{Monomial, PatternPoly};
use crate::seq::BitSeq;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("monomial {0} has a negative exponent")]
    NegativeExponent(Monomial),
    #[error("length {length} cannot hold term index {index}")]
    LengthTooSmall { length: usize, index: u64 },
    #[error("unknown ordering `{0}` (expected diagonal, boustrophedon or meander)")]
    UnknownOrdering(String),
}

/// A bijection between the naturals and the monomials `x^i y^j`, `i, j >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrdering {
    /// Antidiagonals `d = i + j` in turn, each walked from `x^d` to `y^d`.
    Diagonal,
    /// Antidiagonals walked in alternating directions: towards `y^d` for odd
    /// `d`, towards `x^d` for even `d`.
    Boustrophedon,
    /// Square shells `s = max(i, j)`. Odd shells run `(s,0) -> (s,s) -> (0,s)`,
    /// even shells run `(0,s) -> (s,s) -> (s,0)`.
    Meander,
}

impl TermOrdering {
    pub const ALL: [TermOrdering; 3] = [
        TermOrdering::Diagonal,
        TermOrdering::Boustrophedon,
        TermOrdering::Meander,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TermOrdering::Diagonal => "diagonal",
            TermOrdering::Boustrophedon => "boustrophedon",
            TermOrdering::Meander => "meander",
        }
    }

    pub fn monomial_at(self, k: u64) -> Monomial {
        match self {
            TermOrdering::Diagonal | TermOrdering::Boustrophedon => {
                let d = triangular_root(k);
                let offset = k - d * (d + 1) / 2;
                let j = if self == TermOrdering::Boustrophedon && d.is_multiple_of(2) {
                    d - offset
                } else {
                    offset
                };
                Monomial::new((d - j) as i32, j as i32)
            }
            TermOrdering::Meander => {
                let s = k.isqrt();
                let offset = k - s * s;
                // First leg has s + 1 cells, the second leg s cells.
                let (first, second) = if offset <= s {
                    (s, offset)
                } else {
                    (2 * s - offset, s)
                };
                if s % 2 == 1 {
                    Monomial::new(first as i32, second as i32)
                } else {
                    Monomial::new(second as i32, first as i32)
                }
            }
        }
    }

    pub fn index_of(self, m: Monomial) -> Result<u64, OrderingError> {
        if !m.is_polynomial() {
            return Err(OrderingError::NegativeExponent(m));
        }
        let (i, j) = (m.i as u64, m.j as u64);
        Ok(match self {
            TermOrdering::Diagonal => diagonal_index(i, j),
            TermOrdering::Boustrophedon => {
                let d = i + j;
                let offset = if d % 2 == 0 { i } else { j };
                d * (d + 1) / 2 + offset
            }
            TermOrdering::Meander => {
                let s = i.max(j);
                // `lead` is the coordinate fixed at `s` along the first leg.
                let (lead, trail) = if s % 2 == 1 { (i, j) } else { (j, i) };
                let offset = if lead == s { trail } else { 2 * s - lead };
                s * s + offset
            }
        })
    }

    /// Bit `k` is set iff `monomial_at(k)` is in the support. Without an
    /// explicit length, trailing zeros are dropped.
    pub fn encode(self, p: &PatternPoly, length: Option<usize>) -> Result<BitSeq, OrderingError> {
        let indices = p
            .iter()
            .map(|m| self.index_of(m))
            .collect::<Result<Vec<_>, _>>()?;
        let needed = indices.iter().max().map_or(0, |&k| k + 1);
        let len = match length {
            Some(l) if (l as u64) < needed => {
                return Err(OrderingError::LengthTooSmall {
                    length: l,
                    index: needed - 1,
                })
            }
            Some(l) => l,
            None => needed as usize,
        };
        let mut bits = vec![false; len];
        for k in indices {
            bits[k as usize] = true;
        }
        Ok(BitSeq::new(bits))
    }

    pub fn decode(self, s: &BitSeq) -> PatternPoly {
        s.bits()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(k, _)| self.monomial_at(k as u64))
            .collect()
    }
}

/// `(i + j)(i + j + 1) / 2 + j`, the Cantor pairing.
pub fn diagonal_index(i: u64, j: u64) -> u64 {
    let d = i + j;
    d * (d + 1) / 2 + j
}

/// Largest `d` with `d (d + 1) / 2 <= k`.
fn triangular_root(k: u64) -> u64 {
    let mut d = ((8 * k as u128 + 1).isqrt() as u64 - 1) / 2;
    while d * (d + 1) / 2 > k {
        d -= 1;
    }
    while (d + 1) * (d + 2) / 2 <= k {
        d += 1;
    }
    d
}

impl fmt::Display for TermOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrdering {
    type Err = OrderingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TermOrdering::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| OrderingError::UnknownOrdering(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use TermOrdering::*;

    fn mono(i: i32, j: i32) -> Monomial {
        Monomial::new(i, j)
    }

    fn listing(o: TermOrdering, count: u64) -> Vec<(i32, i32)> {
        (0..count).map(|k| o.monomial_at(k)).map(|m| (m.i, m.j)).collect()
    }

    #[test]
    fn diagonal_listing() {
        assert_eq!(
            listing(Diagonal, 11),
            [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3), (4, 0)]
        );
        assert_eq!(Diagonal.monomial_at(4), mono(1, 1));
        assert_eq!(Diagonal.monomial_at(7), mono(2, 1));
        assert_eq!(Diagonal.index_of(mono(0, 0)), Ok(0));
        assert_eq!(Diagonal.index_of(mono(0, 3)), Ok(9));
        assert_eq!(Diagonal.index_of(mono(2, 1)), Ok(7));
    }

    #[test]
    fn boustrophedon_listing() {
        assert_eq!(
            listing(Boustrophedon, 15),
            [
                (0, 0), (1, 0), (0, 1), (0, 2), (1, 1), (2, 0), (3, 0), (2, 1),
                (1, 2), (0, 3), (0, 4), (1, 3), (2, 2), (3, 1), (4, 0)
            ]
        );
        assert_eq!(Boustrophedon.monomial_at(3), mono(0, 2));
    }

    #[test]
    fn meander_listing() {
        // 1, x, xy, y, y^2, xy^2, x^2y^2, x^2y, x^2, x^3, x^3y, x^3y^2, x^3y^3, ...
        assert_eq!(
            listing(Meander, 13),
            [
                (0, 0), (1, 0), (1, 1), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1),
                (2, 0), (3, 0), (3, 1), (3, 2), (3, 3)
            ]
        );
        assert_eq!(Meander.monomial_at(2), mono(1, 1));
    }

    #[test]
    fn negative_exponent_rejected() {
        assert_eq!(
            Diagonal.index_of(mono(-1, 0)),
            Err(OrderingError::NegativeExponent(mono(-1, 0)))
        );
    }

    #[test]
    fn codec_examples() {
        let p = PatternPoly::from_pairs([(1, 0), (0, 1), (1, 1), (1, 2), (0, 3)]);
        assert_eq!(Diagonal.encode(&p, None).unwrap().to_string(), "0110100011");
        assert_eq!(Diagonal.encode(&PatternPoly::one(), None).unwrap().to_string(), "1");
        assert!(Diagonal.encode(&PatternPoly::zero(), None).unwrap().is_empty());
        assert_eq!(Diagonal.encode(&p, Some(12)).unwrap().to_string(), "011010001100");
        assert_eq!(
            Diagonal.encode(&p, Some(9)),
            Err(OrderingError::LengthTooSmall { length: 9, index: 9 })
        );

        let s: BitSeq = "0110100011".parse().unwrap();
        assert_eq!(Diagonal.decode(&s), p);
        for o in TermOrdering::ALL {
            assert_eq!(o.decode(&"1".parse().unwrap()), PatternPoly::one());
        }
        assert_eq!(Diagonal.decode(&"0001".parse().unwrap()), PatternPoly::monomial(2, 0));
    }

    #[test]
    fn inverse_on_first_ten_thousand() {
        for o in TermOrdering::ALL {
            for k in 0..10_000u64 {
                assert_eq!(o.index_of(o.monomial_at(k)), Ok(k), "{o} at {k}");
            }
        }
    }

    #[test]
    fn diagonal_closed_form_matches_enumeration() {
        let mut k = 0u64;
        for d in 0..=100i32 {
            for j in 0..=d {
                assert_eq!(diagonal_index((d - j) as u64, j as u64), k);
                assert_eq!(Diagonal.monomial_at(k), mono(d - j, j));
                k += 1;
            }
        }
    }

    #[test]
    fn shells_and_antidiagonals_are_contiguous() {
        for o in [Diagonal, Boustrophedon] {
            let degrees: Vec<i32> = (0..500).map(|k| {
                let m = o.monomial_at(k);
                m.i + m.j
            }).collect();
            assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
        }
        let shells: Vec<i32> = (0..500).map(|k| {
            let m = Meander.monomial_at(k);
            m.i.max(m.j)
        }).collect();
        assert!(shells.windows(2).all(|w| w[0] <= w[1]));
        // Consecutive meander cells are grid neighbours.
        for k in 0..2_000 {
            let (a, b) = (Meander.monomial_at(k), Meander.monomial_at(k + 1));
            assert_eq!((a.i - b.i).abs() + (a.j - b.j).abs(), 1);
        }
    }

    proptest! {
        #[test]
        fn encode_decode_round_trip(
            pairs in proptest::collection::vec((0i32..20, 0i32..20), 0..30),
            pad in 0usize..5,
        ) {
            let p = PatternPoly::from_pairs(pairs);
            for o in TermOrdering::ALL {
                let s = o.encode(&p, None).unwrap();
                prop_assert_eq!(o.decode(&s), p.clone());
                let padded = o.encode(&p, Some(s.len() + pad)).unwrap();
                prop_assert_eq!(o.decode(&padded), p.clone());
            }
        }
    }
}
