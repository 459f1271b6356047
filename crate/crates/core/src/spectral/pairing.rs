//! The pairing of the Bott class with the spectral triple of `Λ_n`.

use serde::Serialize;

use super::bott::{bott_closed_form, constructive_deviation, M2};
use super::chern::{chern_integral, chern_number};
use super::index::truncated_index;
use crate::error::SpectralError;
use crate::ktheory::lambda_n_core_multiplicity;

/// Entrywise conjugate of the Bott family; reverses orientation.
pub fn bott_conjugate(phi: f64, theta: f64) -> M2 {
    bott_closed_form(phi, theta).map(|z| z.conj())
}

pub fn constant_projector(m: M2) -> impl Fn(f64, f64) -> M2 {
    move |_, _| m
}

/// Each torus summand contributes `-1` times the Bott Chern number.
const SUMMAND_SIGN: i64 = -1;

/// `(core multiplicity) · (-1) · chern(Bott)` on a `grid × grid` quadrature.
pub fn lambda_n_pairing(n: usize, grid: usize) -> Result<i64, SpectralError> {
    if n == 0 {
        return Err(SpectralError::InvalidArgument("n must be positive".into()));
    }
    let chern = chern_number(&bott_closed_form, grid)?;
    Ok(lambda_n_core_multiplicity(n) as i64 * SUMMAND_SIGN * chern)
}

#[derive(Debug, Clone, Serialize)]
pub struct PairingReport {
    pub n: usize,
    pub core_multiplicity: usize,
    pub chern: i64,
    /// `(grid, integral)` at the cross-check grid sizes.
    pub chern_integrals: Vec<(usize, f64)>,
    pub chern_stable: bool,
    /// Truncated Toeplitz index of the Bott family, when requested.
    pub index: Option<i64>,
    /// Gap between the closed-form and constructive Bott projectors.
    pub constructive_deviation: f64,
    pub pairing: i64,
}

pub fn pairing_report(n: usize, grid: usize, with_index: bool) -> Result<PairingReport, SpectralError> {
    let pairing = lambda_n_pairing(n, grid)?;
    let chern = chern_number(&bott_closed_form, grid)?;
    let mut chern_integrals = Vec::new();
    let mut chern_stable = true;
    for g in [32, 64, 128] {
        let value = chern_integral(&bott_closed_form, g);
        chern_stable &= (value - chern as f64).abs() < 1e-6;
        chern_integrals.push((g, value));
    }
    let index = if with_index {
        Some(truncated_index(&bott_closed_form, 8)?)
    } else {
        None
    };
    Ok(PairingReport {
        n,
        core_multiplicity: lambda_n_core_multiplicity(n),
        chern,
        chern_integrals,
        chern_stable,
        index,
        constructive_deviation: constructive_deviation(grid, grid),
        pairing,
    })
}
