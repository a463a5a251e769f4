//! Exact nullspaces by fraction-free elimination.
//!
//! Rows are scaled to integer vectors up front. Elimination then only uses
//! cross-multiplication (`row_i <- p * row_i - a * row_p`) followed by
//! division of each touched row by its content, which is always exact. The
//! only rational divisions happen once at the end, when pivots are
//! normalised to 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
}

impl IntMatrix {
    /// Clears the denominators of each rational row separately.
    pub fn from_rational_rows(rows: &[Vec<Rational>], cols: usize) -> Self {
        let rows = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged matrix");
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect()
            })
            .collect();
        IntMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Reduces in place to a row-echelon form in which every pivot column is
    /// zero outside its pivot row. Zero rows are dropped. Returns the pivot
    /// columns, one per remaining row.
    pub fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(found) = (rank..self.rows.len()).find(|&i| !self.rows[i][col].is_zero()) else {
                continue;
            };
            self.rows.swap(rank, found);
            let pivot_row = std::mem::take(&mut self.rows[rank]);
            let pivot = pivot_row[col].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = &*x * &pivot - &factor * y;
                }
                make_primitive(row);
            }
            self.rows[rank] = pivot_row;
            pivots.push(col);
            rank += 1;
        }
        self.rows.truncate(rank);
        pivots
    }

    /// Basis of `{v : M v = 0}` in reduced row-echelon form with unit pivots.
    pub fn nullspace(mut self) -> Vec<Vec<Rational>> {
        let cols = self.cols;
        let pivots = self.reduce();
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let basis: Vec<Vec<Rational>> = (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); cols];
                v[free] = Rational::one();
                for (row, &pc) in self.rows.iter().zip(&pivots) {
                    v[pc] = -Rational::new(row[free].clone(), row[pc].clone());
                }
                v
            })
            .collect();
        canonical_basis(&basis, cols)
    }
}

fn make_primitive(row: &mut [BigInt]) {
    let content = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if content > BigInt::one() {
        for x in row.iter_mut() {
            *x = &*x / &content;
        }
    }
}

/// Row-reduces a spanning set to its unique reduced row-echelon form with
/// pivots equal to 1. Zero and dependent rows disappear.
pub fn canonical_basis(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = IntMatrix::from_rational_rows(rows, cols);
    let pivots = m.reduce();
    m.rows
        .iter()
        .zip(pivots)
        .map(|(row, pc)| {
            let pivot = &row[pc];
            row.iter()
                .map(|x| Rational::new(x.clone(), pivot.clone()))
                .collect()
        })
        .collect()
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut m = IntMatrix::from_rational_rows(rows, cols);
    m.reduce().len()
}

/// Arithmetic modulo the prime `2^61 - 1`, used to rule out non-trivial
/// nullspaces cheaply: reduction mod a prime can only lower the rank, so full
/// column rank mod `P` implies full column rank over the rationals.
pub mod modular {
    use num_bigint::BigInt;
    use num_traits::{ToPrimitive, Zero};

    use crate::rational::Rational;

    pub const P: u64 = (1 << 61) - 1;

    fn mul(a: u64, b: u64) -> u64 {
        ((u128::from(a) * u128::from(b)) % u128::from(P)) as u64
    }

    fn pow(mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn reduce_int(n: &BigInt) -> u64 {
        let r = n % BigInt::from(P);
        let r = if r < BigInt::zero() { r + BigInt::from(P) } else { r };
        r.to_u64().expect("reduced below P")
    }

    /// `q mod P`, or `None` when the denominator is divisible by `P`.
    pub fn reduce(q: &Rational) -> Option<u64> {
        let d = reduce_int(q.denom());
        (d != 0).then(|| mul(reduce_int(q.numer()), inv(d)))
    }

    pub fn sub(a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + P - b }
    }

    /// Whether the `rows x cols` matrix has rank `cols` over `Z/P`.
    pub fn full_column_rank(mut rows: Vec<Vec<u64>>, cols: usize) -> bool {
        let mut rank = 0;
        for col in 0..cols {
            let Some(found) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
                return false;
            };
            rows.swap(rank, found);
            let pivot_inv = inv(rows[rank][col]);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            for row in tail.iter_mut() {
                if row[col] == 0 {
                    continue;
                }
                let f = mul(row[col], pivot_inv);
                for k in col..cols {
                    row[k] = sub(row[k], mul(f, pivot_row[k]));
                }
            }
            rank += 1;
        }
        true
    }
}
