use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;

use super::graph_trace::GraphTrace;
use crate::degree::Degree;
use crate::error::TraceError;
use crate::graph::{KGraph, VertexId};

/// The end through a vertex, described by its successor dynamics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndDescriptor {
    pub rep: VertexId,
    /// Every vertex the end passes through.
    pub image: BTreeSet<VertexId>,
    /// `successors[i][w]`: source of the unique `i`-edge into `w`, if any.
    pub successors: Vec<BTreeMap<VertexId, Option<VertexId>>>,
    /// `Some(b)` when direction `i` stops after `b` steps, `None` if unbounded.
    pub finite_bounds: Vec<Option<u32>>,
}

impl EndDescriptor {
    pub fn sigma(&self, i: usize, w: VertexId) -> Option<VertexId> {
        self.successors[i].get(&w).copied().flatten()
    }

    /// `x(p)`, or `None` if `p` leaves the domain of the end.
    pub fn walk(&self, p: &Degree) -> Option<VertexId> {
        let mut w = self.rep;
        for i in 0..p.rank() {
            for _ in 0..p.get(i) {
                w = self.sigma(i, w)?;
            }
        }
        Some(w)
    }

    pub fn infinite_directions(&self) -> Vec<usize> {
        (0..self.finite_bounds.len())
            .filter(|&i| self.finite_bounds[i].is_none())
            .collect()
    }
}

/// Vertices with at most one in-edge of each color whose successors stay in
/// the set: the greatest such set, by fixed-point iteration.
pub fn end_vertices(g: &KGraph) -> BTreeSet<VertexId> {
    let mut set: BTreeSet<VertexId> = g
        .vertices()
        .filter(|&v| (0..g.k()).all(|i| g.in_edges(v, i).len() <= 1))
        .collect();
    loop {
        let drop: Vec<_> = set
            .iter()
            .copied()
            .filter(|&v| {
                (0..g.k()).any(|i| {
                    g.in_edges(v, i)
                        .iter()
                        .any(|&e| !set.contains(&g.edge(e).source))
                })
            })
            .collect();
        if drop.is_empty() {
            return set;
        }
        for v in drop {
            set.remove(&v);
        }
    }
}

fn successor(g: &KGraph, v: VertexId, i: usize) -> Option<VertexId> {
    g.in_edges(v, i).first().map(|&e| g.edge(e).source)
}

/// `|vΛ^{≤n}| = 1` for every `n ≤ bound`.
pub fn is_end_vertex_bruteforce(g: &KGraph, v: VertexId, bound: &Degree) -> bool {
    bound
        .box_below()
        .iter()
        .all(|n| g.lambda_le(v, n).map(|s| s.len() == 1).unwrap_or(false))
}

/// Ends of a finite graph, one descriptor per distinct image.
pub fn find_ends(g: &KGraph) -> Vec<EndDescriptor> {
    let set = end_vertices(g);
    let k = g.k();
    let mut seen_images: BTreeSet<BTreeSet<VertexId>> = BTreeSet::new();
    let mut out = Vec::new();
    for &v in &set {
        let mut image = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            for i in 0..k {
                if let Some(u) = successor(g, w, i) {
                    if image.insert(u) {
                        stack.push(u);
                    }
                }
            }
        }
        if !seen_images.insert(image.clone()) {
            continue;
        }
        let successors = (0..k)
            .map(|i| image.iter().map(|&w| (w, successor(g, w, i))).collect())
            .collect();
        let finite_bounds = (0..k)
            .map(|i| {
                let mut w = v;
                let mut steps = 0u32;
                let mut visited = BTreeSet::from([v]);
                loop {
                    match successor(g, w, i) {
                        None => return Some(steps),
                        Some(u) => {
                            if !visited.insert(u) {
                                return None;
                            }
                            w = u;
                            steps += 1;
                        }
                    }
                }
            })
            .collect();
        out.push(EndDescriptor {
            rep: v,
            image,
            successors,
            finite_bounds,
        });
    }
    out
}

/// Union-find on intersecting images. Returns, per class, the indices of its
/// descriptors; the first index is the class representative.
pub fn end_classes(ends: &[EndDescriptor]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..ends.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut i = i;
        while p[i] != r {
            let next = p[i];
            p[i] = r;
            i = next;
        }
        r
    }
    for a in 0..ends.len() {
        for b in a + 1..ends.len() {
            if !ends[a].image.is_disjoint(&ends[b].image) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[rb.max(ra)] = ra.min(rb);
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..ends.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }
    classes.into_values().collect()
}

/// The class index of every end vertex.
pub fn class_of_vertex(ends: &[EndDescriptor], classes: &[Vec<usize>]) -> BTreeMap<VertexId, usize> {
    let mut out = BTreeMap::new();
    for (c, members) in classes.iter().enumerate() {
        for &d in members {
            for &w in &ends[d].image {
                out.insert(w, c);
            }
        }
    }
    out
}

/// For each vertex, the smallest (by total degree) `n_v ≤ bound` such that
/// every `λ ∈ vΛ^{≤n_v}` ends on an end.
pub fn check_sufficient_condition(
    g: &KGraph,
    bound: Option<&Degree>,
) -> Result<BTreeMap<VertexId, Degree>, TraceError> {
    if !g.flags().locally_convex {
        return Err(TraceError::NotLocallyConvex);
    }
    let ends = end_vertices(g);
    let default = Degree::splat(g.k(), g.num_vertices() as u32 + 1);
    let bound = bound.unwrap_or(&default);
    let mut degrees = bound.box_below();
    degrees.sort_by_key(|d| d.total());
    let mut out = BTreeMap::new();
    let mut failed = Vec::new();
    for v in g.vertices() {
        let hit = degrees.iter().find(|n| {
            g.lambda_le(v, n)
                .expect("valid vertex")
                .iter()
                .all(|l| ends.contains(&l.source()))
        });
        match hit {
            Some(n) => {
                out.insert(v, n.clone());
            }
            None => failed.push(g.vertex_name(v).to_string()),
        }
    }
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(TraceError::SufficientConditionUnmet(failed))
    }
}

fn formula(
    g: &KGraph,
    v: VertexId,
    n: &Degree,
    class_of: &BTreeMap<VertexId, usize>,
    weights: &BTreeMap<usize, BigRational>,
) -> Result<BigRational, TraceError> {
    let mut acc = BigRational::zero();
    for lam in g.lambda_le(v, n).expect("valid vertex") {
        let class = *class_of.get(&lam.source()).ok_or_else(|| {
            TraceError::SufficientConditionUnmet(vec![g.vertex_name(v).to_string()])
        })?;
        acc += weights
            .get(&class)
            .ok_or(TraceError::MissingEndWeight(class))?;
    }
    Ok(acc)
}

/// `g(v) = Σ_{λ ∈ vΛ^{≤n_v}} g([x_{s(λ)}])`, with weights per end class
/// (class indices as returned by [`end_classes`]). The value is recomputed at
/// `n_v + e_i` for every `i` and must not change.
pub fn trace_from_end_assignment(
    g: &KGraph,
    n_map: &BTreeMap<VertexId, Degree>,
    weights: &BTreeMap<usize, BigRational>,
) -> Result<GraphTrace, TraceError> {
    let ends = find_ends(g);
    let classes = end_classes(&ends);
    let class_of = class_of_vertex(&ends, &classes);
    let mut values = Vec::with_capacity(g.num_vertices());
    for v in g.vertices() {
        let n = n_map
            .get(&v)
            .ok_or_else(|| TraceError::SufficientConditionUnmet(vec![g.vertex_name(v).to_string()]))?;
        let val = formula(g, v, n, &class_of, weights)?;
        for i in 0..g.k() {
            let bumped = n + &Degree::unit(g.k(), i);
            if formula(g, v, &bumped, &class_of, weights)? != val {
                return Err(TraceError::LevelDependence(g.vertex_name(v).to_string()));
            }
        }
        values.push(val);
    }
    Ok(GraphTrace::new(values))
}
