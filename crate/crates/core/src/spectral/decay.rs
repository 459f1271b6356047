//! Decay of the commutator remainder `f_{μ,ν}(n)`.

use crate::degree::DegreeDiff;
use crate::error::SpectralError;

/// `f(n) = ((1 + |D + n|²)^{1/2} - (1 + |n|²)^{1/2}) (1 + |n|²)^{-1/2}`.
pub fn remainder(d: &[i64], n: &[i64]) -> f64 {
    let base: f64 = 1.0 + n.iter().map(|&x| (x * x) as f64).sum::<f64>();
    let shifted: f64 = 1.0 + d.iter().zip(n).map(|(&a, &b)| ((a + b) * (a + b)) as f64).sum::<f64>();
    (shifted.sqrt() - base.sqrt()) / base.sqrt()
}

const MAX_POINTS: f64 = 5e7;

/// `max |f_{μ,ν}(n)|` over lattice points with `N ≤ |n| ≤ 2N`, where
/// `D = d(μ) - d(ν)` is given as `mu_deg - nu_deg`.
pub fn kasparov_remainder_decay(mu_deg: &DegreeDiff, nu_deg: &DegreeDiff, n: u32) -> Result<f64, SpectralError> {
    if mu_deg.rank() != nu_deg.rank() {
        return Err(SpectralError::InvalidArgument("degree ranks differ".into()));
    }
    let d = mu_deg - nu_deg;
    let k = d.rank();
    let hi = 2 * n as i64;
    if ((2 * hi + 1) as f64).powi(k as i32) > MAX_POINTS {
        return Err(SpectralError::InvalidArgument("shell too large to enumerate".into()));
    }
    let (lo2, hi2) = ((n as i64).pow(2), hi * hi);
    let mut best: f64 = 0.0;
    let mut point = vec![-hi; k];
    loop {
        let r2: i64 = point.iter().map(|x| x * x).sum();
        if (lo2..=hi2).contains(&r2) {
            best = best.max(remainder(d.coords(), &point).abs());
        }
        // odometer over [-2N, 2N]^k
        let mut i = 0;
        while i < k {
            point[i] += 1;
            if point[i] <= hi {
                break;
            }
            point[i] = -hi;
            i += 1;
        }
        if i == k {
            return Ok(best);
        }
    }
}
