//! The finite ring `GF(2)[x, y] / (x^m - 1, y^n - 1)`.
//!
//! Exponents wrap around an `m x n` torus, so `x^m = y^n = 1`. The monomials
//! form a group isomorphic to `Z_m x Z_n`; sums of monomials are general ring
//! elements, many of them zero divisors.
//!
//! Elements are [`PatternPoly`] residues at the API boundary. Arithmetic runs
//! on a dense bit vector indexed by `i + m * j`.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::ordering::TermOrdering;
use crate::poly::{Monomial, PatternPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring moduli must be positive, got ({m}, {n})")]
    ZeroModulus { m: u32, n: u32 },
    #[error("the zero element has no order")]
    ZeroElement,
    #[error("ring ({m}, {n}) too large: m*n = {size} exceeds {limit}")]
    TooLarge { m: u32, n: u32, size: u64, limit: u64 },
}

/// Largest `m * n` for which [`mul_table`] will tabulate.
pub const MUL_TABLE_LIMIT: u64 = 64;
/// Largest `m * n` for which [`enumerate_nonzero`] will list elements.
pub const ENUMERATE_LIMIT: u64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    m: u32,
    n: u32,
}

impl RingSpec {
    pub fn new(m: u32, n: u32) -> Result<Self, RingError> {
        if m == 0 || n == 0 {
            return Err(RingError::ZeroModulus { m, n });
        }
        Ok(RingSpec { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `m * n`, the dimension of the ring as a GF(2) vector space.
    pub fn dim(&self) -> usize {
        self.m as usize * self.n as usize
    }

    /// The `m * n` monomials `x^i y^j`, `i < m`, `j < n`, in antidiagonal order.
    pub fn basis(&self) -> Vec<Monomial> {
        let mut basis: Vec<Monomial> = (0..self.n as i32)
            .flat_map(|j| (0..self.m as i32).map(move |i| Monomial::new(i, j)))
            .collect();
        basis.sort_by_key(|&m| TermOrdering::Diagonal.index_of(m).expect("nonnegative"));
        basis
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            residue: PatternPoly::one(),
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            residue: PatternPoly::zero(),
        }
    }

    fn index(&self, m: Monomial) -> usize {
        let i = m.i.rem_euclid(self.m as i32) as usize;
        let j = m.j.rem_euclid(self.n as i32) as usize;
        i + self.m as usize * j
    }

    fn monomial(&self, index: usize) -> Monomial {
        let m = self.m as usize;
        Monomial::new((index % m) as i32, (index / m) as i32)
    }

    fn dense(&self, a: &RingElement) -> Dense {
        let mut d = Dense::zero(self.dim());
        for mono in a.residue.iter() {
            d.flip(self.index(mono));
        }
        d
    }

    fn element(&self, d: &Dense) -> RingElement {
        RingElement {
            residue: d.ones().map(|k| self.monomial(k)).collect(),
        }
    }

    fn dense_mul(&self, a: &Dense, b: &Dense) -> Dense {
        let (m, n) = (self.m as usize, self.n as usize);
        let mut out = Dense::zero(self.dim());
        let b_ones: Vec<(usize, usize)> = b.ones().map(|k| (k % m, k / m)).collect();
        for ka in a.ones() {
            let (ia, ja) = (ka % m, ka / m);
            for &(ib, jb) in &b_ones {
                out.flip((ia + ib) % m + m * ((ja + jb) % n));
            }
        }
        out
    }

    /// Column `c` is `a * e_c`: the matrix of multiplication by `a`.
    fn mul_matrix(&self, a: &Dense) -> Vec<Dense> {
        let (m, n, dim) = (self.m as usize, self.n as usize, self.dim());
        let a_ones: Vec<(usize, usize)> = a.ones().map(|k| (k % m, k / m)).collect();
        let mut rows = vec![Dense::zero(dim); dim];
        for c in 0..dim {
            let (ic, jc) = (c % m, c / m);
            for &(ia, ja) in &a_ones {
                rows[(ia + ic) % m + m * ((ja + jc) % n)].flip(c);
            }
        }
        rows
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod x^{} mod y^{}", self.m, self.n)
    }
}

/// A residue with every exponent already reduced into `[0, m) x [0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    residue: PatternPoly,
}

impl RingElement {
    pub fn residue(&self) -> &PatternPoly {
        &self.residue
    }

    pub fn into_residue(self) -> PatternPoly {
        self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.residue == PatternPoly::one()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.residue.fmt(f)
    }
}

/// Folds every exponent into range; colliding monomials cancel in pairs.
pub fn reduce(a: &PatternPoly, spec: RingSpec) -> RingElement {
    spec.element(&spec.dense(&RingElement { residue: a.clone() }))
}

pub fn ring_add(a: &RingElement, b: &RingElement) -> RingElement {
    RingElement {
        residue: a.residue.add(&b.residue),
    }
}

pub fn ring_mul(a: &RingElement, b: &RingElement, spec: RingSpec) -> RingElement {
    spec.element(&spec.dense_mul(&spec.dense(a), &spec.dense(b)))
}

pub fn ring_pow(a: &RingElement, mut k: u64, spec: RingSpec) -> RingElement {
    let mut base = spec.dense(a);
    let mut acc = spec.dense(&spec.one());
    while k > 0 {
        if k & 1 == 1 {
            acc = spec.dense_mul(&acc, &base);
        }
        base = spec.dense_mul(&base, &base);
        k >>= 1;
    }
    spec.element(&acc)
}

/// Multiplication table over the monomial basis in antidiagonal order.
/// Row `g`, column `h` holds `g * h`.
pub fn mul_table(spec: RingSpec) -> Result<Vec<Vec<RingElement>>, RingError> {
    guard(spec, MUL_TABLE_LIMIT)?;
    let basis: Vec<RingElement> = spec
        .basis()
        .into_iter()
        .map(|m| RingElement {
            residue: PatternPoly::monomial(m.i, m.j),
        })
        .collect();
    Ok(basis
        .iter()
        .map(|g| basis.iter().map(|h| ring_mul(g, h, spec)).collect())
        .collect())
}

fn guard(spec: RingSpec, limit: u64) -> Result<(), RingError> {
    let size = spec.dim() as u64;
    if size > limit {
        return Err(RingError::TooLarge {
            m: spec.m,
            n: spec.n,
            size,
            limit,
        });
    }
    Ok(())
}

/// The order of a nonzero element.
///
/// For a unit this is the multiplicative order, the least `k >= 1` with
/// `a^k = 1`. For a non-unit it is the index of the first repeat in the power
/// sequence `a, a^2, a^3, ...`: the least `k >= 2` with `a^k = a^t` for some
/// `t < k`. When `a` lies on its own cycle, as every non-unit does if `m` and
/// `n` are odd, this is the least `k >= 2` with `a^k = a`.
pub fn order(a: &RingElement, spec: RingSpec) -> Result<u64, RingError> {
    if a.is_zero() {
        return Err(RingError::ZeroElement);
    }
    let base = spec.dense(a);
    if is_invertible(a, spec) {
        let one = spec.dense(&spec.one());
        let mut power = base.clone();
        let mut k = 1u64;
        while power != one {
            power = spec.dense_mul(&power, &base);
            k += 1;
        }
        return Ok(k);
    }
    let mut seen = HashSet::new();
    let mut power = base.clone();
    let mut k = 1u64;
    loop {
        if !seen.insert(power.clone()) {
            return Ok(k);
        }
        power = spec.dense_mul(&power, &base);
        k += 1;
    }
}

pub fn is_invertible(a: &RingElement, spec: RingSpec) -> bool {
    let solved = solve(spec.mul_matrix(&spec.dense(a)), spec.dim());
    solved.rank == spec.dim()
}

/// The `b` with `a * b = 1`, if one exists.
pub fn inverse(a: &RingElement, spec: RingSpec) -> Option<RingElement> {
    let mut rhs = Dense::zero(spec.dim());
    rhs.flip(spec.index(Monomial::ONE));
    let solved = solve(spec.mul_matrix(&spec.dense(a)), spec.dim());
    if solved.rank < spec.dim() {
        return None;
    }
    Some(spec.element(&solved.apply_inverse(&rhs)))
}

/// A nonzero `b` with `a * b = 0`, present exactly when `a` is not a unit.
pub fn annihilator(a: &RingElement, spec: RingSpec) -> Option<RingElement> {
    let solved = solve(spec.mul_matrix(&spec.dense(a)), spec.dim());
    solved.null_vector().map(|d| spec.element(&d))
}

/// All nonzero elements, counting up in binary over the antidiagonal basis:
/// element `k` contains `basis[t]` iff bit `t` of `k` is set.
pub fn enumerate_nonzero(spec: RingSpec) -> Result<Vec<RingElement>, RingError> {
    guard(spec, ENUMERATE_LIMIT)?;
    let basis = spec.basis();
    let count = 1u64 << spec.dim();
    Ok((1..count)
        .map(|k| RingElement {
            residue: basis
                .iter()
                .enumerate()
                .filter(|(t, _)| k >> t & 1 == 1)
                .map(|(_, &m)| m)
                .collect(),
        })
        .collect())
}

/// Bit vector over GF(2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Dense {
    words: Vec<u64>,
}

impl Dense {
    fn zero(len: usize) -> Self {
        Dense {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn get(&self, k: usize) -> bool {
        self.words[k / 64] >> (k % 64) & 1 == 1
    }

    fn flip(&mut self, k: usize) {
        self.words[k / 64] ^= 1 << (k % 64);
    }

    fn xor_assign(&mut self, other: &Dense) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

/// Gauss-Jordan elimination of a square GF(2) matrix, keeping the row
/// operations so the system can be solved for any right-hand side.
struct Solved {
    dim: usize,
    rank: usize,
    reduced: Vec<Dense>,
    /// `ops * original = reduced`.
    ops: Vec<Dense>,
    pivots: Vec<usize>,
}

fn solve(mut rows: Vec<Dense>, dim: usize) -> Solved {
    let mut ops: Vec<Dense> = (0..dim)
        .map(|r| {
            let mut d = Dense::zero(dim);
            d.flip(r);
            d
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..dim {
        let Some(p) = (rank..dim).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        ops.swap(rank, p);
        for r in 0..dim {
            if r != rank && rows[r].get(col) {
                let (pivot_row, pivot_ops) = (rows[rank].clone(), ops[rank].clone());
                rows[r].xor_assign(&pivot_row);
                ops[r].xor_assign(&pivot_ops);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    Solved {
        dim,
        rank,
        reduced: rows,
        ops,
        pivots,
    }
}

impl Solved {
    /// `x` with `M x = rhs`, valid when the matrix has full rank.
    fn apply_inverse(&self, rhs: &Dense) -> Dense {
        let mut x = Dense::zero(self.dim);
        for (r, &col) in self.pivots.iter().enumerate() {
            let bit = self.ops[r].ones().filter(|&k| rhs.get(k)).count() % 2 == 1;
            if bit {
                x.flip(col);
            }
        }
        x
    }

    /// A nonzero vector in the kernel, if the matrix is singular.
    fn null_vector(&self) -> Option<Dense> {
        let free = (0..self.dim).find(|c| !self.pivots.contains(c))?;
        let mut x = Dense::zero(self.dim);
        x.flip(free);
        for (r, &col) in self.pivots.iter().enumerate() {
            if self.reduced[r].get(free) {
                x.flip(col);
            }
        }
        Some(x)
    }
}
