//! Finite k-graphs presented by a colored skeleton and a factorisation regime.
//!
//! Conventions follow the categorical order: a path `λ = e f` has `r(λ) = r(e)`
//! and `s(λ) = s(f)`, so an edge's range is its head on the *left*.

mod builders;
mod enumerate;
mod json;
mod path;

use std::collections::{BTreeMap, HashMap, HashSet};

pub use builders::{
    build_cycle, build_figure2, build_lambda_n, build_omega, build_two_regime_example,
    disjoint_union, GraphBuilder, RegimeChoice,
};
pub use json::SkeletonFile;
pub use path::Path;

use crate::degree::Degree;
use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    /// 0-based color index.
    pub color: usize,
    pub range: VertexId,
    pub source: VertexId,
}

#[derive(Debug, Clone)]
pub struct Skeleton {
    k: usize,
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
}

impl Skeleton {
    /// Edges are `(name, color (1-based), range, source)`.
    pub fn new<V, E>(k: usize, vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, usize, String, String)>,
    {
        if k == 0 {
            return Err(GraphError::ZeroRank);
        }
        let mut vertex_names = Vec::new();
        let mut vertex_index = HashMap::new();
        for v in vertices {
            let v = v.into();
            if vertex_index.insert(v.clone(), vertex_names.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
            vertex_names.push(v);
        }
        let mut out_edges = Vec::new();
        let mut edge_index = HashMap::new();
        for (name, color, range, source) in edges {
            if color == 0 || color > k {
                return Err(GraphError::BadColor { edge: name, color, k });
            }
            let r = *vertex_index
                .get(&range)
                .ok_or_else(|| GraphError::UnknownVertex(range.clone()))?;
            let s = *vertex_index
                .get(&source)
                .ok_or_else(|| GraphError::UnknownVertex(source.clone()))?;
            if edge_index.insert(name.clone(), out_edges.len()).is_some() {
                return Err(GraphError::DuplicateEdge(name));
            }
            out_edges.push(Edge {
                name,
                color: color - 1,
                range: r,
                source: s,
            });
        }
        Ok(Skeleton {
            k,
            vertex_names,
            edges: out_edges,
            vertex_index,
            edge_index,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, GraphError> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownEdge(name.to_string()))
    }
}

/// A commuting square `outer[0] outer[1] = inner[0] inner[1]`, by edge name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    pub outer: [String; 2],
    pub inner: [String; 2],
}

impl Square {
    pub fn new(outer: [&str; 2], inner: [&str; 2]) -> Self {
        Square {
            outer: outer.map(String::from),
            inner: inner.map(String::from),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactorizationRegime {
    pub squares: Vec<Square>,
}

impl FactorizationRegime {
    pub fn new(squares: Vec<Square>) -> Self {
        FactorizationRegime { squares }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GraphFlags {
    pub locally_convex: bool,
    pub no_sinks: bool,
    pub no_sources: bool,
    pub locally_finite: bool,
}

#[derive(Debug, Clone)]
pub struct KGraph {
    skeleton: Skeleton,
    regime: FactorizationRegime,
    swap: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    /// `in_edges[v][i]`: edges of color `i` with range `v`.
    in_edges: Vec<Vec<Vec<EdgeId>>>,
    /// `out_edges[v][i]`: edges of color `i` with source `v`.
    out_edges: Vec<Vec<Vec<EdgeId>>>,
    flags: GraphFlags,
    truncation_vertices: Vec<VertexId>,
}

impl KGraph {
    pub fn validate(skeleton: Skeleton, regime: FactorizationRegime) -> Result<Self, GraphError> {
        let k = skeleton.k;
        let nv = skeleton.num_vertices();
        let mut in_edges = vec![vec![Vec::new(); k]; nv];
        let mut out_edges = vec![vec![Vec::new(); k]; nv];
        for (id, e) in skeleton.edges.iter().enumerate() {
            in_edges[e.range][e.color].push(id);
            out_edges[e.source][e.color].push(id);
        }

        let name = |e: EdgeId| skeleton.edges[e].name.clone();
        let mut swap = HashMap::new();
        for sq in &regime.squares {
            let a = skeleton.edge_id(&sq.outer[0])?;
            let b = skeleton.edge_id(&sq.outer[1])?;
            let c = skeleton.edge_id(&sq.inner[0])?;
            let d = skeleton.edge_id(&sq.inner[1])?;
            let ed = &skeleton.edges;
            let ok = ed[a].source == ed[b].range
                && ed[c].source == ed[d].range
                && ed[a].color != ed[b].color
                && ed[c].color == ed[b].color
                && ed[d].color == ed[a].color
                && ed[a].range == ed[c].range
                && ed[b].source == ed[d].source;
            if !ok {
                return Err(GraphError::MismatchedEndpoints {
                    outer: (name(a), name(b)),
                    inner: (name(c), name(d)),
                });
            }
            for (key, val) in [((a, b), (c, d)), ((c, d), (a, b))] {
                if swap.insert(key, val).is_some() {
                    return Err(GraphError::DuplicateSquare(name(key.0), name(key.1)));
                }
            }
        }

        for (x, ex) in skeleton.edges.iter().enumerate() {
            for c in 0..k {
                if c == ex.color {
                    continue;
                }
                for &y in &in_edges[ex.source][c] {
                    if !swap.contains_key(&(x, y)) {
                        return Err(GraphError::MissingSquare(name(x), name(y)));
                    }
                }
            }
        }

        let mut g = KGraph {
            skeleton,
            regime,
            swap,
            in_edges,
            out_edges,
            flags: GraphFlags {
                locally_convex: false,
                no_sinks: false,
                no_sources: false,
                locally_finite: true,
            },
            truncation_vertices: Vec::new(),
        };
        if k >= 3 {
            g.check_associativity()?;
        }
        g.flags = g.compute_flags();
        Ok(g)
    }

    fn check_associativity(&self) -> Result<(), GraphError> {
        let k = self.k();
        for (x, ex) in self.skeleton.edges.iter().enumerate() {
            for c1 in 0..k {
                if c1 == ex.color {
                    continue;
                }
                for &y in &self.in_edges[ex.source][c1] {
                    for c2 in 0..k {
                        if c2 == ex.color || c2 == c1 {
                            continue;
                        }
                        for &z in &self.in_edges[self.edge(y).source][c2] {
                            let mut left = [x, y, z];
                            let mut right = [x, y, z];
                            for i in [0, 1, 0] {
                                self.swap_at(&mut left, i);
                            }
                            for i in [1, 0, 1] {
                                self.swap_at(&mut right, i);
                            }
                            if left != right {
                                return Err(GraphError::AssociativityFailure(
                                    self.edge(x).name.clone(),
                                    self.edge(y).name.clone(),
                                    self.edge(z).name.clone(),
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_flags(&self) -> GraphFlags {
        let k = self.k();
        let nv = self.num_vertices();
        let no_sources = (0..nv).all(|v| (0..k).all(|i| !self.in_edges[v][i].is_empty()));
        let no_sinks = (0..nv).all(|v| (0..k).all(|i| !self.out_edges[v][i].is_empty()));
        let locally_convex = self.skeleton.edges.iter().all(|e| {
            (0..k).all(|j| {
                j == e.color
                    || self.in_edges[e.range][j].is_empty()
                    || !self.in_edges[e.source][j].is_empty()
            })
        });
        GraphFlags {
            locally_convex,
            no_sinks,
            no_sources,
            locally_finite: true,
        }
    }

    /// Applies the factorisation rule to positions `i, i+1` of a word.
    pub(crate) fn swap_at(&self, word: &mut [EdgeId], i: usize) {
        let (a, b) = self.swap[&(word[i], word[i + 1])];
        word[i] = a;
        word[i + 1] = b;
    }

    pub fn k(&self) -> usize {
        self.skeleton.k
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn regime(&self) -> &FactorizationRegime {
        &self.regime
    }

    pub fn flags(&self) -> GraphFlags {
        self.flags
    }

    pub fn num_vertices(&self) -> usize {
        self.skeleton.num_vertices()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.skeleton.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.skeleton.edges[e]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        self.skeleton.vertex_name(v)
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, GraphError> {
        self.skeleton.vertex_id(name)
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, GraphError> {
        self.skeleton.edge_id(name)
    }

    /// Edges of color `i` (0-based) with range `v`.
    pub fn in_edges(&self, v: VertexId, i: usize) -> &[EdgeId] {
        &self.in_edges[v][i]
    }

    /// Edges of color `i` (0-based) with source `v`.
    pub fn out_edges(&self, v: VertexId, i: usize) -> &[EdgeId] {
        &self.out_edges[v][i]
    }

    pub fn truncation_vertices(&self) -> &[VertexId] {
        &self.truncation_vertices
    }

    pub(crate) fn set_truncation_vertices(&mut self, vs: Vec<VertexId>) {
        self.truncation_vertices = vs;
    }

    /// True if no directed cycle exists in the skeleton.
    pub fn is_acyclic(&self) -> bool {
        let nv = self.num_vertices();
        let mut indeg = vec![0usize; nv];
        for e in &self.skeleton.edges {
            indeg[e.range] += 1;
        }
        let mut stack: Vec<_> = (0..nv).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for i in 0..self.k() {
                for &e in &self.out_edges[v][i] {
                    let r = self.edge(e).range;
                    indeg[r] -= 1;
                    if indeg[r] == 0 {
                        stack.push(r);
                    }
                }
            }
        }
        seen == nv
    }

    /// Vertex ids reachable backwards (towards sources) from `v`, including `v`.
    pub fn descendants(&self, v: VertexId) -> HashSet<VertexId> {
        let mut seen = HashSet::from([v]);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for i in 0..self.k() {
                for &e in &self.in_edges[u][i] {
                    let s = self.edge(e).source;
                    if seen.insert(s) {
                        stack.push(s);
                    }
                }
            }
        }
        seen
    }

    /// Summary counts for reporting.
    pub fn summary(&self) -> BTreeMap<&'static str, usize> {
        BTreeMap::from([
            ("k", self.k()),
            ("vertices", self.num_vertices()),
            ("edges", self.num_edges()),
            ("squares", self.regime.squares.len()),
        ])
    }

    pub fn degree_zero(&self) -> Degree {
        Degree::zero(self.k())
    }
}
