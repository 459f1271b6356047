//! The boundary-path representation of a finite acyclic k-graph.
//!
//! A boundary path here is any path whose source receives no edges at all.
//! `S_μ δ_x = δ_{μx}` and `S_ν* δ_x = δ_{x'}` when `x = νx'`. For finite
//! acyclic graphs this representation is faithful, which makes it an
//! independent check on symbolic equality.

use std::collections::BTreeMap;

use super::element::AlgebraElement;
use super::scalar::GaussianRational;
use crate::graph::{KGraph, Path};

pub type Vector = BTreeMap<Path, GaussianRational>;

pub fn boundary_paths(g: &KGraph) -> Vec<Path> {
    assert!(g.is_acyclic(), "path-space oracle needs an acyclic graph");
    let is_source = |v| (0..g.k()).all(|i| g.in_edges(v, i).is_empty());
    let cap = crate::degree::Degree::splat(g.k(), g.num_vertices() as u32);
    let mut out = Vec::new();
    for n in cap.box_below() {
        for p in g.paths_of_degree(&n).expect("valid degree") {
            if is_source(p.source()) {
                out.push(p);
            }
        }
    }
    out
}

pub fn apply(a: &AlgebraElement<'_>, x: &Path) -> Vector {
    let g = a.graph();
    let zero = g.degree_zero();
    let mut out = Vector::new();
    for ((mu, nu), c) in a.terms() {
        if nu.range() != x.range() || !nu.degree().le(x.degree()) {
            continue;
        }
        if g.factor(x, &zero, nu.degree()).unwrap() != *nu {
            continue;
        }
        let rest = g.factor(x, nu.degree(), x.degree()).unwrap();
        let y = g.compose(mu, &rest).expect("sources agree");
        let entry = out.entry(y.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            out.remove(&y);
        }
    }
    out
}

/// Whether `a` and `b` act identically on every basis vector.
pub fn represented_equal(a: &AlgebraElement<'_>, b: &AlgebraElement<'_>, basis: &[Path]) -> bool {
    basis.iter().all(|x| apply(a, x) == apply(b, x))
}
