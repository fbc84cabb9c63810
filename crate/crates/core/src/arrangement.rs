//! Realizable oriented matroids from exact rational vector arrangements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::feasibility::is_feasible;
use crate::tope::Tope;
use crate::tope_set::TopeSet;

/// Largest ground set accepted by [`Arrangement::topes`].
pub const MAX_ARRANGEMENT_SIZE: usize = 14;

/// `t` nonzero, pairwise non-parallel vectors in `Q^d` with a nonempty open
/// positive cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    d: usize,
    vectors: Vec<Vec<BigRational>>,
}

impl Arrangement {
    pub fn new(d: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        if vectors.is_empty() || d == 0 {
            return Err(Error::EmptyInput);
        }
        for v in &vectors {
            if v.len() != d {
                return Err(Error::LengthMismatch {
                    expected: d,
                    found: v.len(),
                });
            }
        }
        if let Some(i) = vectors.iter().position(|v| v.iter().all(Zero::is_zero)) {
            return Err(Error::Loop(i + 1));
        }
        for i in 0..vectors.len() {
            for j in i + 1..vectors.len() {
                if parallel(&vectors[i], &vectors[j]) {
                    return Err(Error::NotSimple(i + 1, j + 1));
                }
            }
        }
        if !is_feasible(&vectors) {
            return Err(Error::NotAcyclic);
        }
        Ok(Arrangement { d, vectors })
    }

    pub fn from_integers(d: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        Arrangement::new(
            d,
            vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn t(&self) -> usize {
        self.vectors.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    /// Is the region `{x : sigma_i <v_i, x> > 0}` nonempty?
    pub fn is_tope(&self, sigma: &Tope) -> Result<bool> {
        crate::error::check_len(self.t(), sigma.len())?;
        Ok(is_feasible(&self.signed_rows(sigma.signs())))
    }

    fn signed_rows(&self, signs: &[i8]) -> Vec<Vec<BigRational>> {
        signs
            .iter()
            .zip(&self.vectors)
            .map(|(&s, v)| {
                if s > 0 {
                    v.clone()
                } else {
                    v.iter().map(|x| -x).collect()
                }
            })
            .collect()
    }

    /// Every sign vector whose open region is nonempty.
    ///
    /// Candidates are explored as a binary tree over element signs; a prefix
    /// whose subsystem is already infeasible is not extended, which removes no
    /// feasible sign vector.
    pub fn topes(&self) -> Result<TopeSet> {
        let t = self.t();
        if t > MAX_ARRANGEMENT_SIZE {
            return Err(Error::TooLarge(t, MAX_ARRANGEMENT_SIZE));
        }
        let mut found = Vec::new();
        let mut prefix = Vec::with_capacity(t);
        self.extend(&mut prefix, &mut found);
        TopeSet::new(found.into_iter().map(Tope::from_signs_unchecked))
    }

    fn extend(&self, prefix: &mut Vec<i8>, found: &mut Vec<Vec<i8>>) {
        if prefix.len() == self.t() {
            found.push(prefix.clone());
            return;
        }
        for s in [1i8, -1] {
            prefix.push(s);
            if is_feasible(&self.signed_rows(prefix)) {
                self.extend(prefix, found);
            }
            prefix.pop();
        }
    }

    /// A random integer arrangement of `t` vectors in dimension `d`, with
    /// coordinates in `[-bound, bound]`, reoriented to be acyclic. Retries
    /// until the vectors are simple and span at least two dimensions.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, t: usize, d: usize, bound: i64) -> Self {
        assert!(t >= 1 && d >= 2 && bound >= 1);
        loop {
            let witness: Vec<i64> = (0..d).map(|_| rng.gen_range(-bound..=bound)).collect();
            let mut rows = Vec::with_capacity(t);
            for _ in 0..t {
                let v: Vec<i64> = (0..d).map(|_| rng.gen_range(-bound..=bound)).collect();
                let dot: i64 = v.iter().zip(&witness).map(|(a, b)| a * b).sum();
                if dot == 0 {
                    break;
                }
                rows.push(if dot > 0 {
                    v
                } else {
                    v.iter().map(|x| -x).collect()
                });
            }
            if rows.len() < t {
                continue;
            }
            if let Ok(a) = Arrangement::from_integers(d, &rows) {
                return a;
            }
        }
    }
}

fn parallel(a: &[BigRational], b: &[BigRational]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}
