//! Exact arithmetic in the dense subalgebra `A_c = span{s_μ s_ν*}` and the
//! graded module over its core.

mod element;
mod json;
mod module;
pub mod path_space;
pub mod random;
mod scalar;
pub mod suite;

pub use element::AlgebraElement;
pub use json::TermRecord;
pub use module::{
    dirac_apply, finite_rank_apply, finite_rank_range, inner_product_f, pairing_tau,
    spinor_dim, tau_tilde_rank_one, theta_apply, ModuleElement,
};
pub use scalar::{format_rational, parse_rational, rat, GaussianRational, GaussianRationalRecord};
