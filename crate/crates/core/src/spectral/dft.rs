//! Naive discrete Fourier transform on `l^2(Z_{2t})`.
//!
//! Kernel `e^{-pi i k j / t}`; the inverse uses the conjugate kernel scaled by
//! `1/(2t)`. Every kernel value is computed from its reduced angle, never by
//! accumulating powers of a root of unity.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// `2t` transform coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    t: usize,
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        let t = half_len(values.len())?;
        Ok(Spectrum { t, values })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn magnitudes_squared(&self) -> Vec<f64> {
        self.values.iter().map(|c| c.norm_sqr()).collect()
    }

    /// `sum_k |s(k)|^2`.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|c| c.norm_sqr()).sum()
    }
}

impl std::ops::Index<usize> for Spectrum {
    type Output = Complex64;

    fn index(&self, k: usize) -> &Complex64 {
        &self.values[k]
    }
}

pub(crate) fn half_len(n: usize) -> Result<usize> {
    if n == 0 || n % 2 == 1 {
        Err(Error::BadLength(n))
    } else {
        Ok(n / 2)
    }
}

/// `e^{sign * pi i k j / t}` with `k j` reduced mod `2t` first.
pub fn kernel(k: usize, j: usize, t: usize, sign: f64) -> Complex64 {
    let n = 2 * t;
    let r = (k % n) * (j % n) % n;
    Complex64::from_polar(1.0, sign * PI * r as f64 / t as f64)
}

/// `e^{sign * pi i r / t}` for `r` in `0..2t`, each from its own angle.
fn roots(t: usize, sign: f64) -> Vec<Complex64> {
    (0..2 * t)
        .map(|r| Complex64::from_polar(1.0, sign * PI * r as f64 / t as f64))
        .collect()
}

/// `sin^2(pi k / t)`.
pub fn sin2(k: usize, t: usize) -> f64 {
    let s = (PI * (k % (2 * t)) as f64 / t as f64).sin();
    s * s
}

/// `cos(pi k / t)`.
pub fn cos(k: usize, t: usize) -> f64 {
    (PI * (k % (2 * t)) as f64 / t as f64).cos()
}

pub fn to_complex(v: &[i64]) -> Vec<Complex64> {
    v.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect()
}

/// `s(k) = sum_j v(j) e^{-pi i k j / t}`.
pub fn dft(v: &[Complex64]) -> Result<Spectrum> {
    let t = half_len(v.len())?;
    let n = 2 * t;
    let w = roots(t, -1.0);
    let values = (0..n)
        .map(|k| v.iter().enumerate().map(|(j, x)| x * w[k * j % n]).sum())
        .collect();
    Ok(Spectrum { t, values })
}

pub fn dft_int(v: &[i64]) -> Result<Spectrum> {
    dft(&to_complex(v))
}

/// `v(j) = (1/2t) sum_k s(k) e^{pi i k j / t}`.
pub fn idft(s: &[Complex64]) -> Result<Vec<Complex64>> {
    let t = half_len(s.len())?;
    let n = 2 * t;
    let scale = 1.0 / n as f64;
    let w = roots(t, 1.0);
    Ok((0..n)
        .map(|j| {
            s.iter()
                .enumerate()
                .map(|(k, x)| x * w[k * j % n])
                .sum::<Complex64>()
                * scale
        })
        .collect())
}

/// The `2t x 2t` Fourier matrix `W[m][n] = e^{-pi i m n / t}`.
pub fn fourier_matrix(t: usize) -> Vec<Vec<Complex64>> {
    (0..2 * t)
        .map(|m| (0..2 * t).map(|n| kernel(m, n, t, -1.0)).collect())
        .collect()
}

/// `W^{-1} = conj(W) / 2t`.
pub fn inverse_fourier_matrix(t: usize) -> Vec<Vec<Complex64>> {
    let scale = 1.0 / (2 * t) as f64;
    (0..2 * t)
        .map(|m| (0..2 * t).map(|n| kernel(m, n, t, 1.0) * scale).collect())
        .collect()
}
