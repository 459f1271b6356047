//! End groups, torus ranks and K-theory ranks for graphs whose vertices all
//! reach ends.

mod lambda_n;
pub mod lattice;

use std::collections::BTreeMap;

use serde::Serialize;

pub use lambda_n::{lambda_n_core_classes, lambda_n_core_multiplicity, lambda_n_unit_checks};
pub use lattice::hermite_normal_form;

use crate::degree::Degree;
use crate::error::KTheoryError;
use crate::graph::{KGraph, VertexId};
use crate::trace::{check_sufficient_condition, end_classes, find_ends, EndDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndGroup {
    pub generators: Vec<Vec<i64>>,
    pub hermite_basis: Vec<Vec<i64>>,
    pub rank: usize,
}

fn collect_differences(end: &EndDescriptor, k: usize, side: u32) -> Vec<Vec<i64>> {
    let dirs = end.infinite_directions();
    let mut first: BTreeMap<VertexId, Vec<i64>> = BTreeMap::new();
    let mut out = Vec::new();
    let mut cube = vec![0u32; k];
    for &d in &dirs {
        cube[d] = side;
    }
    for p in Degree::new(cube).box_below() {
        let w = end.walk(&p).expect("infinite directions never stop");
        let coords: Vec<i64> = p.coords().iter().map(|&c| c as i64).collect();
        match first.get(&w) {
            Some(p0) => out.push(coords.iter().zip(p0).map(|(a, b)| a - b).collect()),
            None => {
                first.insert(w, coords);
            }
        }
    }
    out
}

/// `G = {p - q : x(p) = x(q)}`, from differences over the box `[0, 2m]` in the
/// unbounded directions (`m = |image|`), confirmed on `[0, 4m]`.
pub fn end_group(end: &EndDescriptor, k: usize) -> Result<EndGroup, KTheoryError> {
    let m = end.image.len() as u32;
    let gens = collect_differences(end, k, 2 * m);
    let basis = hermite_normal_form(&gens, k);
    let wider = hermite_normal_form(&collect_differences(end, k, 4 * m), k);
    if wider != basis {
        return Err(KTheoryError::UnsaturatedLattice);
    }
    Ok(EndGroup {
        rank: basis.len(),
        generators: gens,
        hermite_basis: basis,
    })
}

pub fn torus_rank(group: &EndGroup) -> usize {
    group.hermite_basis.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndClassSummary {
    pub rep: String,
    pub rank: usize,
    pub group_basis: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KTheorySummary {
    pub classes: Vec<EndClassSummary>,
    #[serde(rename = "K0_rank")]
    pub k0_rank: u64,
    #[serde(rename = "K1_rank")]
    pub k1_rank: u64,
    pub morita: String,
    pub torus_dimensions: Vec<usize>,
}

/// Ranks of `⊕_v K_*(C(T^{l_v}))`.
pub fn k_ranks(ranks: &[usize]) -> (u64, u64) {
    let mut k0 = 0;
    let mut k1 = 0;
    for &l in ranks {
        if l == 0 {
            k0 += 1;
        } else {
            k0 += 1 << (l - 1);
            k1 += 1 << (l - 1);
        }
    }
    (k0, k1)
}

pub fn morita_description(ranks: &[usize]) -> String {
    ranks
        .iter()
        .map(|&l| match l {
            0 => "K".to_string(),
            _ => format!("K⊗C(T^{l})"),
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

pub fn k_theory(g: &KGraph) -> Result<KTheorySummary, KTheoryError> {
    check_sufficient_condition(g, None)?;
    let ends = find_ends(g);
    let classes = end_classes(&ends);
    let mut out = Vec::new();
    for members in &classes {
        let rep = &ends[members[0]];
        let group = end_group(rep, g.k())?;
        out.push(EndClassSummary {
            rep: g.vertex_name(rep.rep).to_string(),
            rank: group.rank,
            group_basis: group.hermite_basis,
        });
    }
    let ranks: Vec<usize> = out.iter().map(|c| c.rank).collect();
    let (k0, k1) = k_ranks(&ranks);
    Ok(KTheorySummary {
        classes: out,
        k0_rank: k0,
        k1_rank: k1,
        morita: morita_description(&ranks),
        torus_dimensions: ranks,
    })
}
