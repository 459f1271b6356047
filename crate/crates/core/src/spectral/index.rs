//! Index of the Toeplitz compression `P D_+ P` of `D_+ = ∂_φ + i∂_θ` on a
//! truncated Fourier basis.

use faer::{Mat, MatRef, Side};
use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use super::bott::M2;
use crate::error::SpectralError;

const KERNEL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct IndexReport {
    pub n_modes: usize,
    pub kernel: usize,
    pub cokernel: usize,
    pub index: i64,
    pub range_rank: usize,
}

/// Fourier coefficients `P̂[a][b]` (indices mod `size`) of each entry.
fn fourier_coefficients(p: &dyn Fn(f64, f64) -> M2, size: usize) -> [Vec<Complex64>; 4] {
    let tau = std::f64::consts::TAU;
    let mut planner = FftPlanner::<f64>::new();
    let fft = planner.plan_fft_forward(size);
    let mut out: [Vec<Complex64>; 4] = Default::default();
    for o in out.iter_mut() {
        *o = vec![Complex64::new(0.0, 0.0); size * size];
    }
    for i in 0..size {
        for j in 0..size {
            let m = p(tau * i as f64 / size as f64, tau * j as f64 / size as f64);
            for (e, (r, c)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                out[e][i * size + j] = m[(r, c)];
            }
        }
    }
    let norm = 1.0 / (size * size) as f64;
    for grid in out.iter_mut() {
        for row in grid.chunks_mut(size) {
            fft.process(row);
        }
        let mut col = vec![Complex64::new(0.0, 0.0); size];
        for j in 0..size {
            for i in 0..size {
                col[i] = grid[i * size + j];
            }
            fft.process(&mut col);
            for i in 0..size {
                grid[i * size + j] = col[i] * norm;
            }
        }
    }
    out
}

/// Kernel and cokernel of the compression at truncation `|n_i| ≤ n_modes`,
/// counting only null vectors concentrated on `max|n_i| ≤ n_modes/2`.
pub fn index_report(p: &dyn Fn(f64, f64) -> M2, n_modes: usize) -> IndexReport {
    let nm = n_modes as i64;
    let modes: Vec<(i64, i64)> = (-nm..=nm).flat_map(|a| (-nm..=nm).map(move |b| (a, b))).collect();
    let size = (4 * n_modes + 8).max(64);
    let coef = fourier_coefficients(p, size);
    let dim = 2 * modes.len();
    let wrap = |x: i64| x.rem_euclid(size as i64) as usize;

    let mut ph = Mat::<Complex64>::zeros(dim, dim);
    for (r, &(a, b)) in modes.iter().enumerate() {
        for (c, &(x, y)) in modes.iter().enumerate() {
            let idx = wrap(a - x) * size + wrap(b - y);
            for (e, (s, t)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                ph[(2 * r + s, 2 * c + t)] = coef[e][idx];
            }
        }
    }
    let eig = ph
        .self_adjoint_eigen(Side::Lower)
        .expect("hermitian eigensolver converges");
    let values = eig.S().column_vector();
    let keep: Vec<usize> = (0..dim).filter(|&i| values[i].re > 0.5).collect();
    if keep.is_empty() {
        return IndexReport {
            n_modes,
            kernel: 0,
            cokernel: 0,
            index: 0,
            range_rank: 0,
        };
    }
    let vecs = eig.U();
    let v = Mat::<Complex64>::from_fn(dim, keep.len(), |r, c| vecs[(r, keep[c])]);
    let symbol: Vec<Complex64> = modes
        .iter()
        .flat_map(|&(a, b)| {
            let z = Complex64::new(-(b as f64), a as f64);
            [z, z]
        })
        .collect();
    let dv = Mat::<Complex64>::from_fn(dim, keep.len(), |r, c| symbol[r] * v[(r, c)]);
    let a = v.adjoint() * &dv;

    let inner: Vec<bool> = modes
        .iter()
        .flat_map(|&(x, y)| {
            let on = 2 * x.abs().max(y.abs()) <= nm;
            [on, on]
        })
        .collect();
    // weight of `V w` on the inner modes, `w` being column `col` of `m`
    let bulk = |m: MatRef<'_, Complex64>, col: usize| -> bool {
        let mut mass = 0.0;
        for (r, &on) in inner.iter().enumerate() {
            if on {
                let x: Complex64 = (0..keep.len()).map(|j| v[(r, j)] * m[(j, col)]).sum();
                mass += x.norm_sqr();
            }
        }
        mass > 0.5
    };

    let svd = a.svd().expect("SVD converges");
    let sigma = svd.S().column_vector();
    let (mut kernel, mut cokernel) = (0, 0);
    for i in 0..keep.len() {
        if sigma[i].re >= KERNEL_TOL {
            continue;
        }
        if bulk(svd.V(), i) {
            kernel += 1;
        }
        if bulk(svd.U(), i) {
            cokernel += 1;
        }
    }
    IndexReport {
        n_modes,
        kernel,
        cokernel,
        index: kernel as i64 - cokernel as i64,
        range_rank: keep.len(),
    }
}

/// `dim ker - dim coker` of the compression, required to agree at
/// `n_modes` and `n_modes + 4`.
pub fn truncated_index(p: &dyn Fn(f64, f64) -> M2, n_modes: usize) -> Result<i64, SpectralError> {
    if n_modes < 8 {
        return Err(SpectralError::InvalidArgument("N_modes must be at least 8".into()));
    }
    let first = index_report(p, n_modes);
    let second = index_report(p, n_modes + 4);
    if first.index != second.index {
        return Err(SpectralError::UnstableKernel(vec![
            (first.n_modes, first.index),
            (second.n_modes, second.index),
        ]));
    }
    Ok(first.index)
}
