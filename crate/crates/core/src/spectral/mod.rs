//! DFT machinery and the cardinality identities it supports.

pub mod cardinality;
pub mod circulant;
pub mod dft;
pub mod identities;
pub mod two_cycle;

pub use cardinality::{
    committee_card_quadratic, committee_card_spectral, decomposition_card_spectral,
    QuadraticVariant, SpectralVariant,
};
pub use circulant::CirculantSpec;
pub use dft::{dft, dft_int, idft, Spectrum};
pub use identities::{
    basic_sums, spectrum_checks, spectrum_closed_form, translation_invariance, verify_b_spectrum,
    verify_diagonalization, IdentityReport, Tolerances,
};
pub use two_cycle::{two_cycle_analysis, TwoCycleReport};
