//! Joint analysis of two distance vectors through their difference
//! `e = z'' - z'` and sum `m = z'' + z'`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{check_len, Result};
use crate::signal::DistanceVector;
use crate::spectral::cardinality::{committee_card_quadratic, QuadraticVariant};
use crate::spectral::dft::{dft_int, kernel, sin2, Spectrum};
use crate::spectral::identities::{IdentityReport, Tolerances};

#[derive(Debug, Clone, Serialize)]
pub struct TwoCycleReport {
    pub t: usize,
    pub e: Vec<i64>,
    pub m: Vec<i64>,
    pub e_spectrum: Spectrum,
    pub m_spectrum: Spectrum,
    /// Exact committee sizes of the two cycles.
    pub cardinalities: (usize, usize),
    /// `2t - (1/4t) sum_{odd k<t} (|e^(k)|^2 + |m^(k)|^2) sin^2(pi k/t)`.
    pub combined_spectral: f64,
    pub checks: Vec<IdentityReport>,
}

impl TwoCycleReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn two_cycle_analysis(
    first: &DistanceVector,
    second: &DistanceVector,
    tol: &Tolerances,
) -> Result<TwoCycleReport> {
    check_len(first.values().len(), second.values().len())?;
    let t = first.t();
    let n = 2 * t;
    let tf = t as f64;
    let spectral_tol = tol.spectrum * tf * tf;
    let (a, b) = (first.values(), second.values());
    let e: Vec<i64> = b.iter().zip(a).map(|(y, x)| y - x).collect();
    let m: Vec<i64> = b.iter().zip(a).map(|(y, x)| y + x).collect();
    let e_hat = dft_int(&e)?;
    let m_hat = dft_int(&m)?;
    let mut checks = Vec::new();

    let antisym = (0..t).all(|j| e[j] + e[j + t] == 0);
    let sym = (0..t).all(|j| m[j] + m[j + t] == 2 * t as i64);
    checks.push(IdentityReport::exact("e-antipodal", antisym as i64, 1));
    checks.push(IdentityReport::exact("m-antipodal", sym as i64, 1));

    let e_even = (0..n)
        .step_by(2)
        .map(|k| e_hat[k].norm())
        .fold(0.0, f64::max);
    checks.push(IdentityReport::residual(
        "e-even-components-vanish",
        e_even,
        spectral_tol,
    ));

    let m_zero = (m_hat[0] - Complex64::new(2.0 * tf * tf, 0.0)).norm();
    checks.push(IdentityReport::residual(
        "m-zero-component",
        m_zero,
        spectral_tol,
    ));
    let m_even = (2..n)
        .step_by(2)
        .map(|k| m_hat[k].norm())
        .fold(0.0, f64::max);
    checks.push(IdentityReport::residual(
        "m-even-components-vanish",
        m_even,
        spectral_tol,
    ));

    // odd components from the first half only
    let mut e_gap = 0.0f64;
    let mut m_gap = 0.0f64;
    for k in (1..n).step_by(2) {
        let e_partial: Complex64 = (0..t).map(|j| e[j] as f64 * kernel(k, j, t, -1.0)).sum();
        let m_partial: Complex64 = (0..t).map(|j| m[j] as f64 * kernel(k, j, t, -1.0)).sum();
        let denom = Complex64::new(1.0, 0.0) - kernel(k, 1, t, -1.0);
        e_gap = e_gap.max((2.0 * e_partial - e_hat[k]).norm());
        m_gap = m_gap.max((2.0 * (-2.0 * tf / denom + m_partial) - m_hat[k]).norm());
    }
    checks.push(IdentityReport::residual(
        "e-odd-closed-form",
        e_gap,
        spectral_tol,
    ));
    checks.push(IdentityReport::residual(
        "m-odd-closed-form",
        m_gap,
        spectral_tol,
    ));

    if t % 2 == 1 {
        let alt = |v: &[i64]| -> f64 {
            (0..t)
                .map(|j| if j % 2 == 0 { v[j] } else { -v[j] })
                .sum::<i64>() as f64
        };
        let e_t = 2.0 * alt(&e);
        let m_t = 2.0 * (-tf + alt(&m));
        checks.push(IdentityReport::residual(
            "e-middle-component",
            (e_hat[t] - Complex64::new(e_t, 0.0)).norm(),
            spectral_tol,
        ));
        checks.push(IdentityReport::residual(
            "m-middle-component",
            (m_hat[t] - Complex64::new(m_t, 0.0)).norm(),
            spectral_tol,
        ));
    }

    let c1 = committee_card_quadratic(first, QuadraticVariant::CentralDifferenceForm)?;
    let c2 = committee_card_quadratic(second, QuadraticVariant::CentralDifferenceForm)?;
    let weighted: f64 = (1..t)
        .step_by(2)
        .map(|k| (e_hat[k].norm_sqr() + m_hat[k].norm_sqr()) * sin2(k, t))
        .sum();
    let combined = 2.0 * tf - weighted / (4.0 * tf);
    checks.push(
        IdentityReport::approx(
            "combined-cardinality",
            combined,
            (c1 + c2) as f64,
            tol.identity,
        )
        .with_exact(c1 + c2),
    );

    Ok(TwoCycleReport {
        t,
        e,
        m,
        e_spectrum: e_hat,
        m_spectrum: m_hat,
        cardinalities: (c1, c2),
        combined_spectral: combined,
        checks,
    })
}
