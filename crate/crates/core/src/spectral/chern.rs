//! First Chern number of a projector family on `T²`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::bott::M2;
use crate::error::SpectralError;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

const STEP: f64 = 1e-5;

/// `(1/2πi) ∬ tr(P [∂_θP, ∂_φP]) dφ dθ`, Gauss–Legendre in `φ` (the family
/// may have a derivative jump across `φ = 0`) and the periodic trapezoid
/// rule in `θ`, with central differences.
pub fn chern_integral(p: &dyn Fn(f64, f64) -> M2, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let mut total = Complex64::new(0.0, 0.0);
    for (xi, wi) in x.iter().zip(&w) {
        let phi = (xi + 1.0) * PI;
        for j in 0..n {
            let theta = TAU * j as f64 / n as f64;
            let d_phi = (p(phi + STEP, theta) - p(phi - STEP, theta)) / Complex64::new(2.0 * STEP, 0.0);
            let d_theta = (p(phi, theta + STEP) - p(phi, theta - STEP)) / Complex64::new(2.0 * STEP, 0.0);
            let comm = d_theta * d_phi - d_phi * d_theta;
            total += (p(phi, theta) * comm).trace() * (wi * PI * TAU / n as f64);
        }
    }
    (total / Complex64::new(0.0, TAU)).re
}

/// The rounded Chern number, if the integral is within `1e-6` of an integer.
pub fn chern_number(p: &dyn Fn(f64, f64) -> M2, n: usize) -> Result<i64, SpectralError> {
    if n < 4 {
        return Err(SpectralError::InvalidArgument("grid size must be at least 4".into()));
    }
    let value = chern_integral(p, n);
    let rounded = value.round();
    if (value - rounded).abs() >= 1e-6 {
        return Err(SpectralError::NotQuantized { value });
    }
    Ok(rounded as i64)
}
