//! Reference computations that share no code with the library.

/// 2-adic valuation of `n!` (Legendre): `n - popcount(n)`.
fn v2_factorial(n: u64) -> u64 {
    n - u64::from(n.count_ones())
}

/// Parity of the binomial coefficient `C(n, k)`, from factorial valuations.
pub fn binomial_is_odd(n: u64, k: u64) -> bool {
    if k > n {
        return false;
    }
    v2_factorial(n) == v2_factorial(k) + v2_factorial(n - k)
}

/// Naive schoolbook product of two bit grids (cell `[j][i]` = coefficient of
/// `x^i y^j`) over GF(2).
pub fn grid_product(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let rows = a.len() + b.len() - 1;
    let cols = a[0].len() + b[0].len() - 1;
    let mut out = vec![vec![false; cols]; rows];
    for (ja, ra) in a.iter().enumerate() {
        for (ia, &ca) in ra.iter().enumerate() {
            if !ca {
                continue;
            }
            for (jb, rb) in b.iter().enumerate() {
                for (ib, &cb) in rb.iter().enumerate() {
                    if cb {
                        out[ja + jb][ia + ib] ^= true;
                    }
                }
            }
        }
    }
    out
}

/// Parities of Pascal's triangle rows 0..=7, written out by hand.
pub const PASCAL_ROWS_MOD2: [&str; 8] = [
    "1", "11", "101", "1111", "10001", "110011", "1010101", "11111111",
];
