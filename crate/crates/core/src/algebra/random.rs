use rand::Rng;

use super::element::AlgebraElement;
use super::module::{spinor_dim, ModuleElement};
use super::scalar::{rat, GaussianRational};
use crate::degree::Degree;
use crate::graph::{KGraph, Path};

fn random_degree<R: Rng>(rng: &mut R, cap: &Degree) -> Degree {
    Degree::new(
        cap.coords()
            .iter()
            .map(|&c| rng.random_range(0..=c))
            .collect(),
    )
}

/// A random generator pair `(μ, ν)` with `d(μ), d(ν) ≤ cap`.
pub fn random_pair<R: Rng>(g: &KGraph, rng: &mut R, cap: &Degree) -> (Path, Path) {
    loop {
        let v = rng.random_range(0..g.num_vertices());
        let mus = g.paths_with_range(v, &random_degree(rng, cap)).unwrap();
        if mus.is_empty() {
            continue;
        }
        let mu = mus[rng.random_range(0..mus.len())].clone();
        let nus = g
            .paths_with_source(mu.source(), &random_degree(rng, cap))
            .unwrap();
        if nus.is_empty() {
            continue;
        }
        let nu = nus[rng.random_range(0..nus.len())].clone();
        return (mu, nu);
    }
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> GaussianRational {
    loop {
        let den = rng.random_range(1..=3);
        let z = GaussianRational::new(
            rat(rng.random_range(-3..=3), den),
            rat(rng.random_range(-3..=3), den),
        );
        if !z.is_zero() {
            return z;
        }
    }
}

/// A random element with up to `terms` generators of degree at most `cap`.
pub fn random_element<'g, R: Rng>(g: &'g KGraph, rng: &mut R, terms: usize, cap: &Degree) -> AlgebraElement<'g> {
    let mut a = AlgebraElement::zero(g);
    for _ in 0..terms {
        let (mu, nu) = random_pair(g, rng, cap);
        a = a
            .add(&AlgebraElement::term(g, mu, nu, random_scalar(rng)))
            .unwrap();
    }
    a
}

pub fn random_module_element<'g, R: Rng>(
    g: &'g KGraph,
    rng: &mut R,
    terms: usize,
    cap: &Degree,
) -> ModuleElement<'g> {
    let comps = (0..spinor_dim(g.k()))
        .map(|_| random_element(g, rng, terms, cap))
        .collect();
    ModuleElement::new(g, comps).unwrap()
}
