use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::format_rational;
use crate::degree::Degree;
use crate::error::TraceError;
use crate::graph::{KGraph, VertexId};

/// A function `g: Λ⁰ → Q⁺`, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphTrace {
    values: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceCheck {
    /// `g(v) = Σ_{e ∈ vΛ^{e_i}} g(s(e))` wherever `vΛ^{e_i} ≠ ∅`.
    EdgeLevel,
    /// `g(v) = Σ_{λ ∈ vΛ^{≤n}} g(s(λ))` for every `n` up to the bound.
    FullUpTo(Degree),
}

impl GraphTrace {
    pub fn new(values: Vec<BigRational>) -> Self {
        GraphTrace { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        GraphTrace::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn constant(g: &KGraph, value: BigRational) -> Self {
        GraphTrace::new(vec![value; g.num_vertices()])
    }

    pub fn from_named(g: &KGraph, named: &BTreeMap<String, BigRational>) -> Result<Self, TraceError> {
        g.vertices()
            .map(|v| {
                let name = g.vertex_name(v);
                named
                    .get(name)
                    .cloned()
                    .ok_or_else(|| TraceError::MissingVertexValue(name.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(GraphTrace::new)
    }

    pub fn value(&self, v: VertexId) -> &BigRational {
        &self.values[v]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn is_faithful(&self) -> bool {
        self.values.iter().all(|v| v.is_positive())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GraphTrace::new(self.values.iter().map(|v| v * c).collect())
    }

    /// `g(v) - Σ_{λ ∈ vΛ^{≤n}} g(s(λ))`.
    pub fn defect(&self, g: &KGraph, v: VertexId, n: &Degree) -> BigRational {
        let sum = g
            .lambda_le(v, n)
            .expect("valid vertex")
            .iter()
            .fold(BigRational::zero(), |acc, l| acc + &self.values[l.source()]);
        &self.values[v] - sum
    }

    pub fn satisfies(&self, g: &KGraph, mode: &TraceCheck) -> bool {
        if self.values.len() != g.num_vertices() || self.values.iter().any(|v| v.is_negative()) {
            return false;
        }
        match mode {
            TraceCheck::EdgeLevel => g.vertices().all(|v| {
                (0..g.k()).all(|i| {
                    let edges = g.in_edges(v, i);
                    edges.is_empty()
                        || edges
                            .iter()
                            .fold(BigRational::zero(), |acc, &e| acc + &self.values[g.edge(e).source])
                            == self.values[v]
                })
            }),
            TraceCheck::FullUpTo(bound) => bound
                .box_below()
                .iter()
                .all(|n| g.vertices().all(|v| self.defect(g, v, n).is_zero())),
        }
    }

    /// Edge-level validity, as a message on failure.
    pub fn check(&self, g: &KGraph) -> Result<(), String> {
        if self.values.len() != g.num_vertices() {
            return Err(format!(
                "{} values for {} vertices",
                self.values.len(),
                g.num_vertices()
            ));
        }
        if self.satisfies(g, &TraceCheck::EdgeLevel) {
            Ok(())
        } else {
            Err("invariance equation fails at edge level".into())
        }
    }

    pub fn to_named(&self, g: &KGraph) -> BTreeMap<String, String> {
        g.vertices()
            .map(|v| (g.vertex_name(v).to_string(), format_rational(&self.values[v])))
            .collect()
    }
}

/// Checks a named assignment against the graph-trace equations.
pub fn is_graph_trace(
    g: &KGraph,
    values: &BTreeMap<String, BigRational>,
    mode: &TraceCheck,
) -> Result<bool, TraceError> {
    Ok(GraphTrace::from_named(g, values)?.satisfies(g, mode))
}
