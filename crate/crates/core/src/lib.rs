//! Topes of oriented matroids, their symmetric cycles and critical
//! committees, and the spectral identities of distance signals.

pub mod arrangement;
pub mod campaign;
pub mod committee;
pub mod cycle;
pub mod enumerator;
pub mod error;
pub mod feasibility;
pub mod gram;
pub mod io;
pub mod linalg;
pub mod signal;
pub mod spectral;
pub mod tope;
pub mod tope_set;

pub use arrangement::Arrangement;
pub use campaign::{run_campaign, run_campaign_with_cycles, CampaignConfig, CampaignReport};
pub use committee::{basis_coefficients, decompose_tope, min_elements, Committee};
pub use cycle::{find_symmetric_cycles, validate_cycle, SymmetricCycle};
pub use enumerator::{distance_enumerator, halfspace_form, halfspace_sum, HalfExpPoly, Halfspace};
pub use error::{Error, Result};
pub use gram::GramMatrix;
pub use signal::DistanceVector;
pub use tope::Tope;
pub use tope_set::{Check, TopeSet, ValidationReport};
