//! Floating-point numerics for the gauge spectral triple.

pub mod bott;
pub mod chern;
pub mod clifford;
pub mod decay;
pub mod dixmier;
pub mod index;
mod pairing;

pub use bott::{
    bott_closed_form, bott_closed_form_grid, bott_constructive, bott_projector,
    constructive_deviation, ProjectorGrid, M2,
};
pub use chern::{chern_integral, chern_number};
pub use clifford::{clifford_defect, dirac_symbol, gamma_matrices, CliffordRep, IntMatrix};
pub use decay::kasparov_remainder_decay;
pub use dixmier::{default_n_list, dixmier_constant, dixmier_estimate, DixmierEstimate, DixmierSample};
pub use index::{index_report, truncated_index, IndexReport};
pub use pairing::{bott_conjugate, constant_projector, lambda_n_pairing, pairing_report, PairingReport};
