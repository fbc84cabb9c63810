//! Critical committees and tope decompositions over a symmetric cycle.

use num_integer::Integer;
use serde::Serialize;

use crate::cycle::SymmetricCycle;
use crate::error::{check_len, Error, Result};
use crate::tope::{sign_sum, Tope};

/// A subset of cycle vertices whose entrywise sum is a given tope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Committee {
    pub members: Vec<Tope>,
    /// Cycle positions in `0..2t`, ascending.
    pub positions: Vec<usize>,
    pub cardinality: usize,
}

impl Committee {
    fn from_positions(cycle: &SymmetricCycle, mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        let members = positions.iter().map(|&j| cycle.vertex(j).clone()).collect();
        Committee {
            cardinality: positions.len(),
            members,
            positions,
        }
    }

    fn certify(&self, target: &Tope) -> Result<()> {
        let sum = sign_sum(target.len(), &self.members);
        let expected = target.to_i64();
        if sum != expected {
            return Err(Error::CertificateFailure { sum, expected });
        }
        Ok(())
    }
}

/// Minimal elements of the cycle's vertex set in the tope poset based at
/// `base`.
///
/// Computed twice, as poset minima and as strict local minima of the rank
/// sequence along the cycle; the two must agree, and the members must sum
/// to `base`.
pub fn min_elements(cycle: &SymmetricCycle, base: &Tope) -> Result<Committee> {
    check_len(cycle.t(), base.len())?;
    let n = 2 * cycle.t();
    let vs = cycle.vertices();
    let mut poset = Vec::new();
    for j in 0..n {
        let mut minimal = true;
        for i in 0..n {
            if i != j && vs[i].poset_leq(&vs[j], base)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            poset.push(j);
        }
    }
    let ranks: Vec<usize> = vs.iter().map(|v| v.rank(base)).collect::<Result<_>>()?;
    let local: Vec<usize> = (0..n)
        .filter(|&j| ranks[j] < ranks[(j + n - 1) % n] && ranks[j] < ranks[(j + 1) % n])
        .collect();
    if poset != local {
        return Err(Error::MinimaMismatch { poset, local });
    }
    let committee = Committee::from_positions(cycle, poset);
    committee.certify(base)?;
    Ok(committee)
}

/// Exact coordinates of `tope` in the basis `R^0, .., R^{t-1}`, required to
/// lie in `{-1, 0, 1}`.
pub fn basis_coefficients(tope: &Tope, cycle: &SymmetricCycle) -> Result<Vec<i64>> {
    vector_coefficients(&tope.to_i64(), cycle)
}

/// [`basis_coefficients`] for an arbitrary integer vector.
pub fn vector_coefficients(v: &[i64], cycle: &SymmetricCycle) -> Result<Vec<i64>> {
    check_len(cycle.t(), v.len())?;
    let inv = cycle.basis_inverse();
    let den = inv.denominator;
    inv.left_mul(v)
        .into_iter()
        .enumerate()
        .map(|(position, num)| {
            if num == 0 {
                Ok(0)
            } else if num == den {
                Ok(1)
            } else if num == -den {
                Ok(-1)
            } else {
                let g = num.gcd(&den);
                let value = if den / g == 1 {
                    format!("{}", num / g)
                } else {
                    format!("{}/{}", num / g, den / g)
                };
                Err(Error::NonTernaryCoefficient { position, value })
            }
        })
        .collect()
}

/// The inclusion-minimal set `Q(T, R)` of cycle vertices summing to `tope`.
pub fn decompose_tope(tope: &Tope, cycle: &SymmetricCycle) -> Result<Committee> {
    let t = cycle.t();
    let coeffs = basis_coefficients(tope, cycle)?;
    let positions = coeffs
        .iter()
        .enumerate()
        .filter_map(|(j, &c)| match c {
            1 => Some(j),
            -1 => Some(j + t),
            _ => None,
        })
        .collect();
    let q = Committee::from_positions(cycle, positions);
    q.certify(tope)?;
    Ok(q)
}

/// `q_j = 1` iff `R^j` belongs to `Q(T, R)`.
pub fn indicator_vector(tope: &Tope, cycle: &SymmetricCycle) -> Result<Vec<u8>> {
    let q = decompose_tope(tope, cycle)?;
    let mut v = vec![0u8; 2 * cycle.t()];
    for j in q.positions {
        v[j] = 1;
    }
    Ok(v)
}
