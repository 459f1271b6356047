//! Logarithmic divergence of `Σ (1 + |n|²)^{-k/2}` over `Z^k` and the torus
//! Dixmier constant.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::SpectralError;

/// `Γ(k/2)` for a positive integer `k`.
fn gamma_half(k: usize) -> f64 {
    let mut g = if k % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut x = if k % 2 == 0 { 1.0 } else { 0.5 };
    while x < k as f64 / 2.0 - 0.25 {
        g *= x;
        x += 1.0;
    }
    g
}

/// `vol(S^{k-1}) = 2π^{k/2} / Γ(k/2)`.
pub fn sphere_volume(k: usize) -> f64 {
    2.0 * PI.powf(k as f64 / 2.0) / gamma_half(k)
}

/// `C_k = 2^{[k/2]} vol(S^{k-1}) / k`.
pub fn dixmier_constant(k: usize) -> f64 {
    (1u64 << (k / 2)) as f64 * sphere_volume(k) / k as f64
}

#[derive(Debug, Clone, Serialize)]
pub struct DixmierSample {
    #[serde(rename = "N")]
    pub n: u32,
    pub eigencount: u64,
    pub raw_sum: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DixmierEstimate {
    pub k: usize,
    pub samples: Vec<DixmierSample>,
    #[serde(rename = "fitted")]
    pub slope: f64,
    pub intercept: f64,
    #[serde(rename = "C_k")]
    pub c_k: f64,
    pub rel_err: f64,
    /// Largest fit residual relative to the spread of `raw_sum`.
    pub residual: f64,
}

/// Number of lattice points in `Z^k` at each squared radius `0..=nmax²`.
pub fn lattice_shells(k: usize, nmax: u32) -> Vec<u64> {
    let r2max = (nmax as u64).pow(2);
    let mut counts = vec![0u64; r2max as usize + 1];
    fn walk(dim: usize, acc: u64, nmax: i64, r2max: u64, counts: &mut [u64]) {
        if dim == 0 {
            counts[acc as usize] += 1;
            return;
        }
        for x in -nmax..=nmax {
            let next = acc + (x * x) as u64;
            if next <= r2max {
                walk(dim - 1, next, nmax, r2max, counts);
            }
        }
    }
    walk(k, 0, nmax as i64, r2max, &mut counts);
    counts
}

/// Least squares `y ≈ a x + b`; fails when the largest residual exceeds
/// `threshold` times the spread of `y`.
pub fn fit_log_slope(x: &[f64], y: &[f64], threshold: f64) -> Result<(f64, f64, f64), SpectralError> {
    let m = x.len() as f64;
    if x.len() < 2 {
        return Err(SpectralError::InvalidArgument("need at least two sample points".into()));
    }
    let (sx, sy) = (x.iter().sum::<f64>() / m, y.iter().sum::<f64>() / m);
    let sxx: f64 = x.iter().map(|a| (a - sx).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - sx) * (b - sy)).sum();
    let a = sxy / sxx;
    let b = sy - a * sx;
    let spread = y.iter().cloned().fold(f64::MIN, f64::max) - y.iter().cloned().fold(f64::MAX, f64::min);
    let worst = x
        .iter()
        .zip(y)
        .map(|(u, v)| (v - a * u - b).abs())
        .fold(0.0, f64::max);
    let residual = if spread > 0.0 { worst / spread } else { worst };
    if !residual.is_finite() || residual > threshold {
        return Err(SpectralError::DivergenceDetected { residual });
    }
    Ok((a, b, residual))
}

/// Eight roughly geometric sample radii from `nmax/8` to `nmax`.
pub fn default_n_list(nmax: u32) -> Vec<u32> {
    let lo = (nmax / 8).max(2) as f64;
    let hi = nmax.max(3) as f64;
    let mut out: Vec<u32> = (0..8)
        .map(|i| (lo * (hi / lo).powf(i as f64 / 7.0)).round() as u32)
        .collect();
    out.dedup();
    out
}

pub fn dixmier_estimate(k: usize, n_list: &[u32]) -> Result<DixmierEstimate, SpectralError> {
    if k == 0 || n_list.is_empty() || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SpectralError::InvalidArgument(
            "k must be positive and N_list strictly increasing".into(),
        ));
    }
    let nmax = *n_list.last().unwrap();
    let shells = lattice_shells(k, nmax);
    let mult = (1u64 << (k / 2)) as f64;
    let mut count = 0u64;
    let mut sum = 0.0;
    let mut cum = Vec::with_capacity(shells.len());
    for (r2, &c) in shells.iter().enumerate() {
        count += c;
        sum += c as f64 * (1.0 + r2 as f64).powf(-(k as f64) / 2.0);
        cum.push((count, sum));
    }
    let samples: Vec<DixmierSample> = n_list
        .iter()
        .map(|&n| {
            let (c, s) = cum[(n as usize).pow(2)];
            DixmierSample {
                n,
                eigencount: c * mult as u64,
                raw_sum: mult * s,
            }
        })
        .collect();
    let x: Vec<f64> = samples.iter().map(|s| (s.eigencount as f64).ln()).collect();
    let y: Vec<f64> = samples.iter().map(|s| s.raw_sum).collect();
    let (slope, intercept, residual) = fit_log_slope(&x, &y, 0.05)?;
    let c_k = dixmier_constant(k);
    Ok(DixmierEstimate {
        k,
        samples,
        slope,
        intercept,
        c_k,
        rel_err: (slope - c_k).abs() / c_k,
        residual,
    })
}
