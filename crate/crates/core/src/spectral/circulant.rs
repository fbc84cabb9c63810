//! Integer polynomials in the cyclic shift `C` on `2t` coordinates.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::spectral::dft::half_len;

/// `sum_p a_p C^p` with `(C v)(i) = v(i + 1)`, indices taken mod the length.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CirculantSpec {
    coefficients: BTreeMap<i64, i64>,
}

impl CirculantSpec {
    pub fn new<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut coefficients = BTreeMap::new();
        for (p, a) in terms {
            *coefficients.entry(p).or_insert(0) += a;
        }
        coefficients.retain(|_, a| *a != 0);
        CirculantSpec { coefficients }
    }

    pub fn identity() -> Self {
        CirculantSpec::new([(0, 1)])
    }

    /// `2I - C^{-2} - C^2`.
    pub fn second_shift_laplacian() -> Self {
        CirculantSpec::new([(0, 2), (-2, -1), (2, -1)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coefficients.iter().map(|(&p, &a)| (p, a))
    }

    /// `(sum_p a_p C^p) v^T`, computed by index shifts.
    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        let n = 2 * half_len(v.len())? as i64;
        Ok((0..n)
            .map(|i| {
                self.coefficients
                    .iter()
                    .map(|(&p, &a)| a * v[(i + p).rem_euclid(n) as usize])
                    .sum()
            })
            .collect())
    }

    /// Dense `n x n` matrix; coinciding powers (such as `C^2 = C^{-2}` at
    /// `n = 4`) accumulate into the same entry.
    pub fn to_matrix(&self, n: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (&p, &a) in &self.coefficients {
                row[(i as i64 + p).rem_euclid(n as i64) as usize] += a;
            }
        }
        m
    }

    /// First row of [`CirculantSpec::to_matrix`].
    pub fn first_row(&self, n: usize) -> Vec<i64> {
        self.to_matrix(n).swap_remove(0)
    }

    /// `v A v^T` in exact integers.
    pub fn quadratic_form(&self, v: &[i64]) -> Result<i64> {
        Ok(self.apply(v)?.iter().zip(v).map(|(a, b)| a * b).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn shifts_and_identity() {
        let z = [0, 1, 2, 1];
        assert_eq!(
            CirculantSpec::new([(1, 1)]).apply(&z).unwrap(),
            vec![1, 2, 1, 0]
        );
        assert_eq!(CirculantSpec::identity().apply(&z).unwrap(), z.to_vec());
        assert_eq!(
            CirculantSpec::second_shift_laplacian().apply(&z).unwrap(),
            vec![-4, 0, 4, 0]
        );
        assert_eq!(
            CirculantSpec::identity().apply(&[1, 2, 3]),
            Err(Error::BadLength(3))
        );
    }

    #[test]
    fn first_rows() {
        let b = CirculantSpec::second_shift_laplacian();
        assert_eq!(b.first_row(4), vec![2, 0, -2, 0]);
        assert_eq!(b.first_row(6), vec![2, 0, -1, 0, -1, 0]);
        assert_eq!(b.first_row(8), vec![2, 0, -1, 0, 0, 0, -1, 0]);
    }

    #[test]
    fn matrix_agrees_with_apply() {
        let spec = CirculantSpec::new([(0, 6), (-1, -4), (1, -4), (-2, 1), (2, 1)]);
        let z = [0, 1, 2, 3, 2, 1];
        let m = spec.to_matrix(6);
        let by_matrix: Vec<i64> = m
            .iter()
            .map(|r| r.iter().zip(&z).map(|(a, b)| a * b).sum())
            .collect();
        assert_eq!(by_matrix, spec.apply(&z).unwrap());
        assert_eq!(
            CirculantSpec::second_shift_laplacian().quadratic_form(&[0, 1, 2, 1]),
            Ok(8)
        );
    }

    #[test]
    fn zero_terms_dropped() {
        let s = CirculantSpec::new([(1, 2), (1, -2), (0, 1)]);
        assert_eq!(s.terms().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
