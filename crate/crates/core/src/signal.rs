//! Distance vectors of symmetric cycles, viewed as period-`2t` signals.

use serde::Serialize;

use crate::cycle::SymmetricCycle;
use crate::error::{check_len, Error, Result};
use crate::tope::Tope;

/// `z(j) = d(T, R^j)` for `j` in `0..2t`, extended periodically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceVector {
    t: usize,
    values: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<Tope>,
}

impl DistanceVector {
    /// Wraps raw values after checking `z(k) + z(k+t) = t` and unit steps.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        if n == 0 || n % 2 == 1 {
            return Err(Error::BadLength(n));
        }
        let t = n / 2;
        for k in 0..t {
            if values[k] < 0 || values[k] + values[k + t] != t as i64 {
                return Err(Error::InvalidDistanceVector(format!(
                    "z({k}) + z({}) = {} + {} != {t}",
                    k + t,
                    values[k],
                    values[k + t]
                )));
            }
        }
        for j in 0..n {
            if (values[(j + 1) % n] - values[j]).abs() != 1 {
                return Err(Error::InvalidDistanceVector(format!(
                    "step {j} -> {} is not a unit step",
                    (j + 1) % n
                )));
            }
        }
        Ok(DistanceVector {
            t,
            values,
            base: None,
        })
    }

    #[cfg(test)]
    pub(crate) fn unchecked(values: Vec<i64>) -> Self {
        DistanceVector {
            t: values.len() / 2,
            values,
            base: None,
        }
    }

    /// Distances from `base` to each cycle vertex.
    pub fn from_cycle(cycle: &SymmetricCycle, base: &Tope) -> Result<Self> {
        check_len(cycle.t(), base.len())?;
        let values = cycle
            .vertices()
            .iter()
            .map(|r| base.distance(r).map(|d| d as i64))
            .collect::<Result<Vec<_>>>()?;
        let mut z = DistanceVector::new(values)?;
        z.base = Some(base.clone());
        Ok(z)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn base(&self) -> Option<&Tope> {
        self.base.as_ref()
    }

    /// `z(j)` for any integer `j`.
    pub fn at(&self, j: i64) -> i64 {
        signal_value(&self.values, j)
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn norm_squared(&self) -> i64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// `z C^j`, i.e. `n -> z(n - j)`.
    pub fn shifted(&self, j: i64) -> Vec<i64> {
        (0..2 * self.t as i64).map(|n| self.at(n - j)).collect()
    }
}

/// Periodic read of a finite signal: `v(j mod len)` with a nonnegative modulus.
pub fn signal_value(v: &[i64], j: i64) -> i64 {
    v[j.rem_euclid(v.len() as i64) as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_reads() {
        let v = [0, 1, 2, 1];
        assert_eq!(signal_value(&v, 5), 1);
        assert_eq!(signal_value(&v, -1), 1);
        assert_eq!(signal_value(&v, 4), 0);
        assert_eq!(signal_value(&v, -8), 0);
    }

    #[test]
    fn invariants_enforced() {
        assert!(DistanceVector::new(vec![0, 1, 2, 1]).is_ok());
        assert_eq!(DistanceVector::new(vec![0, 1, 2]), Err(Error::BadLength(3)));
        assert!(matches!(
            DistanceVector::new(vec![0, 1, 1, 1]),
            Err(Error::InvalidDistanceVector(_))
        ));
        assert!(matches!(
            DistanceVector::new(vec![0, 2, 2, 0]),
            Err(Error::InvalidDistanceVector(_))
        ));
    }

    #[test]
    fn from_cycles() {
        let plus: Tope = "+++".parse().unwrap();
        let c = SymmetricCycle::from_flips(&plus, &[1, 2, 3]).unwrap();
        let z = DistanceVector::from_cycle(&c, &plus).unwrap();
        assert_eq!(z.values(), &[0, 1, 2, 3, 2, 1]);
        assert_eq!(z.sum(), 9);

        let hex = SymmetricCycle::from_vertices(
            ["-++", "-+-", "++-", "+--", "+-+", "--+"]
                .iter()
                .map(|s| s.parse().unwrap())
                .collect(),
        )
        .unwrap();
        let z = DistanceVector::from_cycle(&hex, &plus).unwrap();
        assert_eq!(z.values(), &[1, 2, 1, 2, 1, 2]);
        let z = DistanceVector::from_cycle(&hex, &"---".parse().unwrap()).unwrap();
        assert_eq!(z.values(), &[2, 1, 2, 1, 2, 1]);
        assert_eq!(z.shifted(1), vec![1, 2, 1, 2, 1, 2]);
    }
}
