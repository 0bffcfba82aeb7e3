//! Folding a bit sequence into a rectangular array and back.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::seq::BitSeq;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error("sequence has {len} bits but a {rows}x{cols} array needs {}", rows * cols)]
    LengthMismatch { len: usize, rows: usize, cols: usize },
    #[error("rows and cols must be coprime for the diagonal scheme (gcd({rows}, {cols}) = {gcd})")]
    NotCoprime { rows: usize, cols: usize, gcd: usize },
    #[error("array dimensions must be positive")]
    EmptyDimension,
    #[error("unknown scheme `{0}` (expected diagonal, row-major or col-major)")]
    UnknownScheme(String),
    #[error("ragged grid: row {row} has {found} cells, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("invalid grid character {0:?}")]
    InvalidCell(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FoldScheme {
    /// Term `k` (1-based) goes to `((k-1) mod rows, (k-1) mod cols)`: walk
    /// down the main diagonal, wrapping to the opposite edge.
    Diagonal,
    RowMajor,
    ColMajor,
}

impl FoldScheme {
    pub const ALL: [FoldScheme; 3] = [FoldScheme::Diagonal, FoldScheme::RowMajor, FoldScheme::ColMajor];

    pub fn name(self) -> &'static str {
        match self {
            FoldScheme::Diagonal => "diagonal",
            FoldScheme::RowMajor => "row-major",
            FoldScheme::ColMajor => "col-major",
        }
    }

    /// Cell receiving the 0-based term `k`.
    fn position(self, k: usize, rows: usize, cols: usize) -> (usize, usize) {
        match self {
            FoldScheme::Diagonal => (k % rows, k % cols),
            FoldScheme::RowMajor => (k / cols, k % cols),
            FoldScheme::ColMajor => (k % rows, k / rows),
        }
    }

    fn check(self, rows: usize, cols: usize) -> Result<(), FoldError> {
        if rows == 0 || cols == 0 {
            return Err(FoldError::EmptyDimension);
        }
        if self == FoldScheme::Diagonal {
            let g = gcd(rows, cols);
            if g != 1 {
                return Err(FoldError::NotCoprime { rows, cols, gcd: g });
            }
        }
        Ok(())
    }
}

impl fmt::Display for FoldScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FoldScheme {
    type Err = FoldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "diagonal" => Ok(FoldScheme::Diagonal),
            "row-major" | "row_major" | "rows" => Ok(FoldScheme::RowMajor),
            "col-major" | "col_major" | "cols" => Ok(FoldScheme::ColMajor),
            _ => Err(FoldError::UnknownScheme(s.to_string())),
        }
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A `rows x cols` array of bits, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitGrid {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl BitGrid {
    pub fn from_rows(rows: Vec<Vec<bool>>) -> Result<Self, FoldError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(FoldError::EmptyDimension);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(FoldError::Ragged {
                    row,
                    found: r.len(),
                    expected: cols,
                });
            }
        }
        Ok(BitGrid {
            rows: rows.len(),
            cols,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }
}

impl fmt::Display for BitGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for &b in self.row(r) {
                f.write_str(if b { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl FromStr for BitGrid {
    type Err = FoldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.trim()
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(FoldError::InvalidCell(other)),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        BitGrid::from_rows(rows)
    }
}

pub fn fold(s: &BitSeq, rows: usize, cols: usize, scheme: FoldScheme) -> Result<BitGrid, FoldError> {
    scheme.check(rows, cols)?;
    if s.len() != rows * cols {
        return Err(FoldError::LengthMismatch {
            len: s.len(),
            rows,
            cols,
        });
    }
    let mut cells = vec![false; rows * cols];
    for (k, &b) in s.bits().iter().enumerate() {
        let (r, c) = scheme.position(k, rows, cols);
        cells[r * cols + c] = b;
    }
    Ok(BitGrid { rows, cols, cells })
}

pub fn unfold(g: &BitGrid, scheme: FoldScheme) -> Result<BitSeq, FoldError> {
    scheme.check(g.rows, g.cols)?;
    let bits = (0..g.rows * g.cols)
        .map(|k| {
            let (r, c) = scheme.position(k, g.rows, g.cols);
            g.get(r, c)
        })
        .collect();
    Ok(BitSeq::new(bits))
}
