//! Exact rational linear algebra over small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Matrix = Vec<Vec<BigRational>>;

pub fn from_i64_rows(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

/// Reduces `m` in place to row echelon form with exact pivots and returns its rank.
pub fn rank(mut m: Matrix) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for j in c..cols {
                let delta = &f * &m[r][j];
                m[i][j] -= delta;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Gauss-Jordan inverse of a square matrix; `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let pivot = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..2 * n {
                let delta = &f * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A rational matrix stored as an integer matrix over a common positive
/// denominator, for fast exact products with integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledMatrix {
    pub numerators: Vec<Vec<i128>>,
    pub denominator: i128,
}

impl ScaledMatrix {
    /// Returns `None` if the common form does not fit in `i128`.
    pub fn from_rational(m: &Matrix) -> Option<Self> {
        let mut den = BigInt::one();
        for x in m.iter().flatten() {
            den = den.lcm(x.denom());
        }
        let numerators = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x.numer() * (&den / x.denom())).to_i128())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ScaledMatrix {
            numerators,
            denominator: den.abs().to_i128()?,
        })
    }

    /// Row vector times matrix, as a numerator vector over `self.denominator`.
    pub fn left_mul(&self, v: &[i64]) -> Vec<i128> {
        let cols = self.numerators.first().map_or(0, Vec::len);
        let mut out = vec![0i128; cols];
        for (&vi, row) in v.iter().zip(&self.numerators) {
            if vi == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(row) {
                *o += vi as i128 * x;
            }
        }
        out
    }
}
