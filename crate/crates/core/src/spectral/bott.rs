//! The Bott projector on `T²`, in closed form and from its defining
//! conjugation.

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::SpectralError;

pub type M2 = Matrix2<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Closed-form entries of `P(φ, θ)`.
pub fn bott_closed_form(phi: f64, theta: f64) -> M2 {
    let s = (phi / 2.0).sin();
    let ct = (theta / 2.0).cos();
    let a = s * s * ct * ct;
    let im = 0.5 * phi.sin() * ct * ct;
    let re = -0.5 * s * theta.sin();
    M2::new(c(1.0 - a, 0.0), c(re, im), c(re, -im), c(a, 0.0))
}

/// `Y* diag(1,0) Y` with `Y = exp(iφK(θ)/4) exp(iS/4)`,
/// `K = [[0, z], [z̄, 0]]`, `S = [[0, 1], [1, 0]]`, `z = e^{iθ}`.
pub fn bott_constructive(phi: f64, theta: f64) -> M2 {
    let z = Complex64::from_polar(1.0, theta);
    let k = M2::new(c(0.0, 0.0), z, z.conj(), c(0.0, 0.0));
    let s = M2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0));
    // both square to the identity, so exp(itX) = cos t + i sin t X
    let exp = |x: &M2, t: f64| M2::identity().scale(t.cos()) + x * c(0.0, t.sin());
    let y = exp(&k, phi / 4.0) * exp(&s, 0.25);
    let e11 = M2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0));
    y.adjoint() * e11 * y
}

pub fn max_entry(m: &M2) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max(|P - P*|, |P² - P|)`.
pub fn projector_defect(p: &M2) -> f64 {
    max_entry(&(p - p.adjoint())).max(max_entry(&(p * p - p)))
}

/// Samples of a projector family on the periodic grid
/// `φ_i = 2πi/n_φ`, `θ_j = 2πj/n_θ`, row-major in `φ`.
#[derive(Debug, Clone)]
pub struct ProjectorGrid {
    pub n_phi: usize,
    pub n_theta: usize,
    pub values: Vec<M2>,
}

impl ProjectorGrid {
    pub fn sample(f: impl Fn(f64, f64) -> M2, n_phi: usize, n_theta: usize) -> Self {
        let tau = std::f64::consts::TAU;
        let mut values = Vec::with_capacity(n_phi * n_theta);
        for i in 0..n_phi {
            for j in 0..n_theta {
                values.push(f(tau * i as f64 / n_phi as f64, tau * j as f64 / n_theta as f64));
            }
        }
        ProjectorGrid { n_phi, n_theta, values }
    }

    pub fn at(&self, i: usize, j: usize) -> &M2 {
        &self.values[i * self.n_theta + j]
    }

    pub fn max_defect(&self) -> f64 {
        self.values.iter().map(projector_defect).fold(0.0, f64::max)
    }
}

fn check_grid(n_phi: usize, n_theta: usize) -> Result<(), SpectralError> {
    if n_phi < 4 || n_theta < 4 {
        return Err(SpectralError::InvalidArgument("grid sizes must be at least 4".into()));
    }
    Ok(())
}

/// The closed form on the grid, checked to be a projector pointwise.
pub fn bott_closed_form_grid(n_phi: usize, n_theta: usize) -> Result<ProjectorGrid, SpectralError> {
    check_grid(n_phi, n_theta)?;
    let grid = ProjectorGrid::sample(bott_closed_form, n_phi, n_theta);
    let defect = grid.max_defect();
    if defect > 1e-12 {
        return Err(SpectralError::ProjectorMismatch { deviation: defect });
    }
    Ok(grid)
}

/// Largest entrywise gap between the closed form and the constructive form
/// over the grid.
pub fn constructive_deviation(n_phi: usize, n_theta: usize) -> f64 {
    let closed = ProjectorGrid::sample(bott_closed_form, n_phi, n_theta);
    let built = ProjectorGrid::sample(bott_constructive, n_phi, n_theta);
    closed
        .values
        .iter()
        .zip(&built.values)
        .map(|(a, b)| max_entry(&(a - b)))
        .fold(0.0, f64::max)
}

/// The closed form on the grid, required to agree with the constructive
/// form to `1e-10`.
pub fn bott_projector(n_phi: usize, n_theta: usize) -> Result<ProjectorGrid, SpectralError> {
    let grid = bott_closed_form_grid(n_phi, n_theta)?;
    let deviation = constructive_deviation(n_phi, n_theta);
    if deviation > 1e-10 {
        return Err(SpectralError::ProjectorMismatch { deviation });
    }
    Ok(grid)
}
