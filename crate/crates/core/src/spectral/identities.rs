//! Structural identities of distance vectors and their spectra, each checked
//! against an independent evaluation and reported with its residual.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::signal::DistanceVector;
use crate::spectral::cardinality::{committee_card_quadratic, QuadraticVariant};
use crate::spectral::circulant::CirculantSpec;
use crate::spectral::dft::{
    dft, dft_int, fourier_matrix, idft, inverse_fourier_matrix, kernel, sin2, to_complex, Spectrum,
};

/// Absolute tolerance for scalar identities.
pub const DEFAULT_IDENTITY_TOLERANCE: f64 = 1e-6;
/// Componentwise spectrum tolerance, multiplied by `t^2`.
pub const DEFAULT_SPECTRUM_TOLERANCE: f64 = 1e-9;
/// Entrywise tolerance for matrix factorizations.
pub const DEFAULT_MATRIX_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub identity: f64,
    pub spectrum: f64,
    pub matrix: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            identity: DEFAULT_IDENTITY_TOLERANCE,
            spectrum: DEFAULT_SPECTRUM_TOLERANCE,
            matrix: DEFAULT_MATRIX_TOLERANCE,
        }
    }
}

/// Outcome of one identity check. `pass` iff `residual <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    /// Exact value (integer or `p/q`) where one exists.
    pub exact: Option<String>,
    pub float: Option<f64>,
    pub reference: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityReport {
    /// Compares a floating-point value against a reference.
    pub fn approx(name: impl Into<String>, value: f64, reference: f64, tolerance: f64) -> Self {
        let residual = (value - reference).abs();
        IdentityReport {
            name: name.into(),
            exact: None,
            float: Some(value),
            reference,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }

    /// Exact integer comparison; the tolerance is zero.
    pub fn exact(name: impl Into<String>, value: i64, reference: i64) -> Self {
        let residual = (value - reference).abs() as f64;
        IdentityReport {
            name: name.into(),
            exact: Some(value.to_string()),
            float: None,
            reference: reference as f64,
            residual,
            tolerance: 0.0,
            pass: value == reference,
        }
    }

    /// A residual that must stay below `tolerance`; the reference is zero.
    pub fn residual(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        IdentityReport {
            name: name.into(),
            exact: None,
            float: Some(residual),
            reference: 0.0,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }

    pub fn with_exact(mut self, exact: impl ToString) -> Self {
        self.exact = Some(exact.to_string());
        self
    }
}

/// The DFT of a distance vector from its first half only:
/// `t^2` at `k = 0`, `0` at other even `k`, and
/// `2(-t / (1 - e^{-pi i k/t}) + sum_{j<t} z(j) e^{-pi i k j/t})` at odd `k`.
/// For odd `t` the component `k = t` is the real number
/// `-t + 2 sum_{j<t} (-1)^j z(j)`.
pub fn spectrum_closed_form(z: &DistanceVector) -> Spectrum {
    let t = z.t();
    let tf = t as f64;
    let v = z.values();
    let values = (0..2 * t)
        .map(|k| {
            if k == 0 {
                Complex64::new(tf * tf, 0.0)
            } else if k % 2 == 0 {
                Complex64::new(0.0, 0.0)
            } else if t % 2 == 1 && k == t {
                let alt: i64 = (0..t).map(|j| if j % 2 == 0 { v[j] } else { -v[j] }).sum();
                Complex64::new(-tf + 2.0 * alt as f64, 0.0)
            } else {
                // 1 - e^{-pi i k/t} vanishes only for even k
                let denom = Complex64::new(1.0, 0.0) - kernel(k, 1, t, -1.0);
                let partial: Complex64 = (0..t).map(|j| v[j] as f64 * kernel(k, j, t, -1.0)).sum();
                2.0 * (-tf / denom + partial)
            }
        })
        .collect();
    Spectrum::new(values).expect("closed form has length 2t")
}

/// Builds `b`, the first row of `2I - C^{-2} - C^2`, and checks
/// `b^(k) = 4 sin^2(pi k/t)` for every `k`.
pub fn verify_b_spectrum(t: usize, tolerance: f64) -> IdentityReport {
    let b = CirculantSpec::second_shift_laplacian().first_row(2 * t);
    let hat = dft_int(&b).expect("even length");
    let residual = (0..2 * t)
        .map(|k| (hat[k] - Complex64::new(4.0 * sin2(k, t), 0.0)).norm())
        .fold(0.0, f64::max);
    IdentityReport::residual(format!("b-spectrum t={t}"), residual, tolerance)
}

/// Max entrywise residual of `2I - C^{-2} - C^2 = W^{-1} 4 diag(sin^2(pi k/t)) W`.
pub fn diagonalization_residual(t: usize) -> f64 {
    let n = 2 * t;
    let lhs = CirculantSpec::second_shift_laplacian().to_matrix(n);
    let w = fourier_matrix(t);
    let wi = inverse_fourier_matrix(t);
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let rhs: Complex64 = (0..n).map(|k| wi[i][k] * 4.0 * sin2(k, t) * w[k][j]).sum();
            worst = worst.max((rhs - Complex64::new(lhs[i][j] as f64, 0.0)).norm());
        }
    }
    worst
}

/// `t - (1/2) z_check diag(sin^2(pi k/t)) z_hat^T` with `z_check = z W^{-1}`.
pub fn inverse_dft_form(z: &DistanceVector) -> Complex64 {
    let t = z.t();
    let zc = to_complex(z.values());
    let hat = dft(&zc).expect("even length");
    let check: Vec<Complex64> = idft(&zc).expect("even length");
    let s: Complex64 = (0..2 * t).map(|k| check[k] * sin2(k, t) * hat[k]).sum();
    Complex64::new(t as f64, 0.0) - 0.5 * s
}

/// Checks the circulant factorization for `t`, and, when `z` is supplied,
/// that the inverse-DFT form of the cardinality matches the exact one.
pub fn verify_diagonalization(
    t: usize,
    z: Option<&DistanceVector>,
    tol: &Tolerances,
) -> Result<Vec<IdentityReport>> {
    let mut out = vec![IdentityReport::residual(
        format!("diagonalization t={t}"),
        diagonalization_residual(t),
        tol.matrix,
    )];
    if let Some(z) = z {
        let exact = committee_card_quadratic(z, QuadraticVariant::CentralDifferenceForm)?;
        let v = inverse_dft_form(z);
        let mut r = IdentityReport::approx("inverse-dft-form", v.re, exact as f64, tol.identity)
            .with_exact(exact);
        r.residual = r.residual.max(v.im.abs());
        r.pass = r.residual <= r.tolerance;
        out.push(r);
    }
    Ok(out)
}

/// `z . iota^T = t^2` and `z (I - C) z^T = t`, in exact integers.
pub fn basic_sums(z: &DistanceVector) -> Result<Vec<IdentityReport>> {
    let t = z.t() as i64;
    let form = CirculantSpec::new([(0, 1), (1, -1)]).quadratic_form(z.values())?;
    Ok(vec![
        IdentityReport::exact("component-sum", z.sum(), t * t),
        IdentityReport::exact("first-difference-form", form, t),
    ])
}

/// `|(z C^j)^(k)| = |z^(k)|` for `1 <= k <= 2t - 1`.
pub fn translation_invariance(z: &DistanceVector, j: i64, tolerance: f64) -> IdentityReport {
    let base = dft_int(z.values()).expect("even length");
    let shifted = dft_int(&z.shifted(j)).expect("even length");
    let residual = (1..2 * z.t())
        .map(|k| (base[k].norm() - shifted[k].norm()).abs())
        .fold(0.0, f64::max);
    IdentityReport::residual(format!("translation-invariance j={j}"), residual, tolerance)
}

/// Spectrum identities of one distance vector: `z^(0) = t^2`, vanishing even
/// components, conjugate symmetry, Plancherel, the closed form, the inverse
/// round trip and the `1/2t`-conjugate form of the inverse transform.
pub fn spectrum_checks(z: &DistanceVector, tol: &Tolerances) -> Vec<IdentityReport> {
    let t = z.t();
    let n = 2 * t;
    let tf = t as f64;
    let spectral_tol = tol.spectrum * tf * tf;
    let zc = to_complex(z.values());
    let hat = dft(&zc).expect("even length");

    let mut out = vec![IdentityReport::approx(
        "zero-component",
        hat[0].re,
        tf * tf,
        spectral_tol,
    )];
    out[0].residual = (hat[0] - Complex64::new(tf * tf, 0.0)).norm();
    out[0].pass = out[0].residual <= spectral_tol;

    let even = (2..n).step_by(2).map(|k| hat[k].norm()).fold(0.0, f64::max);
    out.push(IdentityReport::residual(
        "even-components-vanish",
        even,
        spectral_tol,
    ));

    let conj = (1..n)
        .map(|k| (hat[k] - hat[n - k].conj()).norm())
        .fold(0.0, f64::max);
    out.push(IdentityReport::residual(
        "conjugate-symmetry",
        conj,
        spectral_tol,
    ));

    let energy = hat.energy();
    let reference = (n as i64 * z.norm_squared()) as f64;
    out.push(IdentityReport::approx(
        "plancherel",
        energy,
        reference,
        tol.identity * reference.max(1.0),
    ));

    let closed = spectrum_closed_form(z);
    let gap = (0..n)
        .map(|k| (closed[k] - hat[k]).norm())
        .fold(0.0, f64::max);
    let mut closed_report = IdentityReport::residual("closed-form-spectrum", gap, spectral_tol);
    if t % 2 == 1 && closed[t].im != 0.0 {
        closed_report.pass = false;
    }
    out.push(closed_report);

    let back = idft(hat.values()).expect("even length");
    let round_trip = back
        .iter()
        .zip(&zc)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    out.push(IdentityReport::residual(
        "inverse-round-trip",
        round_trip,
        tol.identity,
    ));

    let check = idft(&zc).expect("even length");
    let scale = 1.0 / n as f64;
    let conj_gap = (0..n)
        .map(|k| (check[k] - hat[k].conj() * scale).norm())
        .fold(0.0, f64::max);
    out.push(IdentityReport::residual(
        "inverse-is-scaled-conjugate",
        conj_gap,
        tol.identity,
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> DistanceVector {
        DistanceVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let s = spectrum_closed_form(&z(&[0, 1, 2, 1]));
        for (k, want) in [4.0, -2.0, 0.0, -2.0].into_iter().enumerate() {
            assert!((s[k] - Complex64::new(want, 0.0)).norm() < 1e-12);
        }
        let s = spectrum_closed_form(&z(&[1, 2, 1, 2, 1, 2]));
        assert_eq!(s[3], Complex64::new(-3.0, 0.0));
        assert_eq!(s[0], Complex64::new(9.0, 0.0));
    }

    #[test]
    fn b_spectra() {
        assert_eq!(
            CirculantSpec::second_shift_laplacian().first_row(4),
            vec![2, 0, -2, 0]
        );
        let hat = dft_int(&[2, 0, -2, 0]).unwrap();
        for (k, want) in [0.0, 4.0, 0.0, 4.0].into_iter().enumerate() {
            assert!((hat[k] - Complex64::new(want, 0.0)).norm() < 1e-12);
        }
        for t in 2..=8 {
            assert!(verify_b_spectrum(t, 1e-12).pass, "t={t}");
        }
        let hat = dft_int(&CirculantSpec::second_shift_laplacian().first_row(6)).unwrap();
        assert!(hat[0].norm() < 1e-12);
        let hat = dft_int(&CirculantSpec::second_shift_laplacian().first_row(8)).unwrap();
        assert!((hat[2].re - 4.0).abs() < 1e-12);
    }

    #[test]
    fn diagonalization() {
        assert!(diagonalization_residual(2) < 1e-12);
        assert!(diagonalization_residual(3) < 1e-12);
        let reports =
            verify_diagonalization(2, Some(&z(&[0, 1, 2, 1])), &Tolerances::default()).unwrap();
        assert!(reports.iter().all(|r| r.pass), "{reports:?}");
        assert!((reports[1].float.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn basic_sum_examples() {
        let r = basic_sums(&z(&[0, 1, 2, 1])).unwrap();
        assert_eq!(r[0].exact.as_deref(), Some("4"));
        let r = basic_sums(&z(&[1, 2, 1, 2, 1, 2])).unwrap();
        assert_eq!(r[1].exact.as_deref(), Some("3"));
        let r = basic_sums(&z(&[0, 1, 2, 3, 2, 1])).unwrap();
        assert_eq!(r[0].exact.as_deref(), Some("9"));
        assert!(r.iter().all(|x| x.pass));
    }

    #[test]
    fn translations() {
        let v = z(&[0, 1, 2, 1]);
        let r = translation_invariance(&v, 0, 0.0);
        assert!(r.pass && r.residual == 0.0);
        assert!(translation_invariance(&v, 1, 1e-12).pass);
        let r = translation_invariance(&v, 4, 0.0);
        assert!(r.pass && r.residual == 0.0);
        let mags: Vec<f64> = dft_int(&v.shifted(1))
            .unwrap()
            .values()
            .iter()
            .map(|c| c.norm())
            .collect();
        for (m, want) in mags.iter().zip([4.0, 2.0, 0.0, 2.0]) {
            assert!((m - want).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_check_suite() {
        for v in [
            vec![0, 1, 2, 1],
            vec![1, 2, 1, 2, 1, 2],
            vec![0, 1, 2, 3, 2, 1],
        ] {
            let r = spectrum_checks(&z(&v), &Tolerances::default());
            assert!(r.iter().all(|x| x.pass), "{r:?}");
        }
    }
}
