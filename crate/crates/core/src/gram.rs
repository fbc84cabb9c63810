//! Gram matrix of a cycle's vertex sequence and the distance formula it gives.

use serde::Serialize;

use crate::committee::indicator_vector;
use crate::cycle::SymmetricCycle;
use crate::error::Result;
use crate::tope::Tope;

/// `G[i][j] = <R^i, R^j>` over the `2t` cycle vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    pub fn new(cycle: &SymmetricCycle) -> Self {
        let vs = cycle.vertices();
        let entries = vs
            .iter()
            .map(|a| vs.iter().map(|b| a.inner_product(b).unwrap()).collect())
            .collect();
        GramMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `u G v^T` for 0/1 row vectors.
    pub fn bilinear(&self, u: &[u8], v: &[u8]) -> i64 {
        let mut acc = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj != 0 {
                    acc += self.entries[i][j];
                }
            }
        }
        acc
    }

    /// Symmetric, constant diagonal `t`, and `-t` on antipodal pairs.
    pub fn check_invariants(&self) -> bool {
        let n = self.size();
        let t = (n / 2) as i64;
        (0..n).all(|i| {
            self.entries[i][i] == t
                && self.entries[i][(i + n / 2) % n] == -t
                && (0..n).all(|j| self.entries[i][j] == self.entries[j][i])
        })
    }
}

/// `d(T', T'') = (t - q(T'') G q(T')^T) / 2`.
pub fn distance_via_gram(
    a: &Tope,
    b: &Tope,
    cycle: &SymmetricCycle,
    gram: &GramMatrix,
) -> Result<usize> {
    let qa = indicator_vector(a, cycle)?;
    let qb = indicator_vector(b, cycle)?;
    Ok(distance_from_indicators(&qa, &qb, gram))
}

/// [`distance_via_gram`] on precomputed indicator vectors.
pub fn distance_from_indicators(qa: &[u8], qb: &[u8], gram: &GramMatrix) -> usize {
    let t = (gram.size() / 2) as i64;
    ((t - gram.bilinear(qb, qa)) / 2) as usize
}
