//! Committee cardinality from a distance vector, by exact quadratic forms and
//! by the magnitudes of its DFT.
//!
//! Every formula here returns the number of minimal cycle vertices in the
//! tope poset based at the distance vector's reference tope. The exact
//! variants are the source of truth; the spectral ones must round to them.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::signal::DistanceVector;
use crate::spectral::circulant::CirculantSpec;
use crate::spectral::dft::{cos, dft_int, sin2, Spectrum};

/// Exact integer formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadraticVariant {
    /// `t - z(2I - C^{-2} - C^2)z^T / 8`
    CentralDifferenceForm,
    /// `z(6I - 4C^{-1} - 4C + C^{-2} + C^2)z^T / 8`
    SecondDifferenceForm,
    /// `t/2 + z(2I - 2C^{-1} - 2C + C^{-2} + C^2)z^T / 8`
    HalfOffsetForm,
    /// `3t/4 - z(C^{-1} + C - C^{-2} - C^2)z^T / 8`
    ThreeQuarterOffsetForm,
    /// `t - sum_j |z(j+1) - z(j-1)| / 4`
    NeighbourAbsolute,
    /// `t - sum_j (z(j+1) - z(j-1))^2 / 8`
    NeighbourSquare,
    /// `t - sum_j (z(j)^2 - z(j-1) z(j+1)) / 4`
    NeighbourProduct,
    /// `sum_j (z(j-1) + z(j+1) - 2 z(j))^2 / 8`
    NeighbourSecondDifference,
}

impl QuadraticVariant {
    pub const ALL: [QuadraticVariant; 8] = [
        QuadraticVariant::CentralDifferenceForm,
        QuadraticVariant::SecondDifferenceForm,
        QuadraticVariant::HalfOffsetForm,
        QuadraticVariant::ThreeQuarterOffsetForm,
        QuadraticVariant::NeighbourAbsolute,
        QuadraticVariant::NeighbourSquare,
        QuadraticVariant::NeighbourProduct,
        QuadraticVariant::NeighbourSecondDifference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuadraticVariant::CentralDifferenceForm => "central-difference-form",
            QuadraticVariant::SecondDifferenceForm => "second-difference-form",
            QuadraticVariant::HalfOffsetForm => "half-offset-form",
            QuadraticVariant::ThreeQuarterOffsetForm => "three-quarter-offset-form",
            QuadraticVariant::NeighbourAbsolute => "neighbour-absolute",
            QuadraticVariant::NeighbourSquare => "neighbour-square",
            QuadraticVariant::NeighbourProduct => "neighbour-product",
            QuadraticVariant::NeighbourSecondDifference => "neighbour-second-difference",
        }
    }
}

/// Floating-point formulas on `|z^(k)|^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectralVariant {
    /// `t - (1/4t) sum_{all k} |z^(k)|^2 sin^2(pi k/t)`
    FullSine,
    /// `t - |z|^2/2 + (1/4t) sum_{all k} |z^(k)|^2 cos^2(pi k/t)`
    FullCosine,
    /// `t - (1/2t) sum_{odd k < t} |z^(k)|^2 sin^2(pi k/t)`
    OddSine,
    /// `(1/4t) sum |z^(k)|^2 (cos^2 - 2 cos + 1)`
    CosineSecondDifference,
    /// `t/2 + (1/4t) sum |z^(k)|^2 (cos^2 - cos)`
    CosineHalfOffset,
    /// `3t/4 + (1/8t) sum |z^(k)|^2 (2 cos^2 - cos - 1)`
    CosineThreeQuarterOffset,
}

impl SpectralVariant {
    pub const ALL: [SpectralVariant; 6] = [
        SpectralVariant::FullSine,
        SpectralVariant::FullCosine,
        SpectralVariant::OddSine,
        SpectralVariant::CosineSecondDifference,
        SpectralVariant::CosineHalfOffset,
        SpectralVariant::CosineThreeQuarterOffset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpectralVariant::FullSine => "full-sine",
            SpectralVariant::FullCosine => "full-cosine",
            SpectralVariant::OddSine => "odd-sine",
            SpectralVariant::CosineSecondDifference => "cosine-second-difference",
            SpectralVariant::CosineHalfOffset => "cosine-half-offset",
            SpectralVariant::CosineThreeQuarterOffset => "cosine-three-quarter-offset",
        }
    }
}

macro_rules! named_enum_impls {
    ($ty:ty) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                <$ty>::ALL
                    .into_iter()
                    .find(|v| v.name() == s)
                    .ok_or_else(|| format!("unknown variant {s:?}"))
            }
        }

        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(self.name())
            }
        }
    };
}

named_enum_impls!(QuadraticVariant);
named_enum_impls!(SpectralVariant);

/// Evaluates an exact formula; the result must be a nonnegative integer.
pub fn committee_card_quadratic(z: &DistanceVector, variant: QuadraticVariant) -> Result<usize> {
    let value = quadratic_value(z, variant)?;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerResult(format!("{variant} = {value}")));
    }
    Ok(value.to_integer() as usize)
}

/// The rational value of a formula before the integrality check.
pub fn quadratic_value(z: &DistanceVector, variant: QuadraticVariant) -> Result<Ratio<i64>> {
    use QuadraticVariant::*;
    let t = Ratio::from_integer(z.t() as i64);
    let v = z.values();
    let r = |n: i64, d: i64| Ratio::new(n, d);
    let form = |terms: &[(i64, i64)]| -> Result<Ratio<i64>> {
        let q = CirculantSpec::new(terms.iter().copied()).quadratic_form(v)?;
        Ok(Ratio::new(q, 8))
    };
    let neighbour_sum = |f: &dyn Fn(i64, i64, i64) -> i64| -> i64 {
        (0..v.len() as i64)
            .map(|j| f(z.at(j - 1), z.at(j), z.at(j + 1)))
            .sum()
    };
    Ok(match variant {
        CentralDifferenceForm => t - form(&[(0, 2), (-2, -1), (2, -1)])?,
        SecondDifferenceForm => form(&[(0, 6), (-1, -4), (1, -4), (-2, 1), (2, 1)])?,
        HalfOffsetForm => t / 2 + form(&[(0, 2), (-1, -2), (1, -2), (-2, 1), (2, 1)])?,
        ThreeQuarterOffsetForm => t * r(3, 4) - form(&[(-1, 1), (1, 1), (-2, -1), (2, -1)])?,
        NeighbourAbsolute => t - r(neighbour_sum(&|a, _, c| (c - a).abs()), 4),
        NeighbourSquare => t - r(neighbour_sum(&|a, _, c| (c - a) * (c - a)), 8),
        NeighbourProduct => t - r(neighbour_sum(&|a, b, c| b * b - a * c), 4),
        NeighbourSecondDifference => r(neighbour_sum(&|a, b, c| (a + c - 2 * b).pow(2)), 8),
    })
}

/// Evaluates a spectral formula from the naive DFT of `z`.
pub fn committee_card_spectral(z: &DistanceVector, variant: SpectralVariant) -> Result<f64> {
    let spectrum = dft_int(z.values())?;
    Ok(spectral_value(&spectrum, z.norm_squared(), variant))
}

/// Evaluates a spectral formula on a precomputed spectrum; `norm_squared` is
/// `|z|^2`, used only by [`SpectralVariant::FullCosine`].
pub fn spectral_value(spectrum: &Spectrum, norm_squared: i64, variant: SpectralVariant) -> f64 {
    use SpectralVariant::*;
    let t = spectrum.t();
    let tf = t as f64;
    let mags = spectrum.magnitudes_squared();
    let weighted =
        |w: &dyn Fn(usize) -> f64| -> f64 { mags.iter().enumerate().map(|(k, m)| m * w(k)).sum() };
    match variant {
        FullSine => tf - weighted(&|k| sin2(k, t)) / (4.0 * tf),
        FullCosine => {
            tf - norm_squared as f64 / 2.0 + weighted(&|k| cos(k, t).powi(2)) / (4.0 * tf)
        }
        OddSine => {
            let s: f64 = (1..t).step_by(2).map(|k| mags[k] * sin2(k, t)).sum();
            tf - s / (2.0 * tf)
        }
        CosineSecondDifference => {
            weighted(&|k| {
                let c = cos(k, t);
                c * c - 2.0 * c + 1.0
            }) / (4.0 * tf)
        }
        CosineHalfOffset => {
            tf / 2.0
                + weighted(&|k| {
                    let c = cos(k, t);
                    c * c - c
                }) / (4.0 * tf)
        }
        CosineThreeQuarterOffset => {
            0.75 * tf
                + weighted(&|k| {
                    let c = cos(k, t);
                    2.0 * c * c - c - 1.0
                }) / (8.0 * tf)
        }
    }
}

/// `|Q(T, R)|` from the odd low-frequency magnitudes of `z_{T,R}`.
pub fn decomposition_card_spectral(z_tope: &DistanceVector) -> Result<f64> {
    committee_card_spectral(z_tope, SpectralVariant::OddSine)
}
