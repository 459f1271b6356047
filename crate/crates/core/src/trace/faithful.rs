use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::graph_trace::GraphTrace;
use super::lp::{feasible_point, maximize, LpOutcome, Q};
use super::obstruction::{detect_loop_with_entrance, LoopWitness};
use crate::algebra::format_rational;
use crate::error::TraceError;
use crate::graph::{KGraph, VertexId};

/// The homogeneous system `g(v) - Σ_{e ∈ vΛ^{e_i}} g(s(e)) = 0`, one row per
/// `(v, i)` with `vΛ^{e_i} ≠ ∅`.
#[derive(Debug, Clone)]
pub struct InvarianceSystem {
    pub rows: Vec<(VertexId, usize)>,
    pub matrix: Vec<Vec<Q>>,
}

impl InvarianceSystem {
    pub fn new(g: &KGraph) -> Self {
        let nv = g.num_vertices();
        let mut rows = Vec::new();
        let mut matrix = Vec::new();
        for v in g.vertices() {
            for i in 0..g.k() {
                let edges = g.in_edges(v, i);
                if edges.is_empty() {
                    continue;
                }
                let mut row = vec![Q::zero(); nv];
                row[v] += Q::one();
                for &e in edges {
                    row[g.edge(e).source] -= Q::one();
                }
                rows.push((v, i));
                matrix.push(row);
            }
        }
        InvarianceSystem { rows, matrix }
    }

    /// `yᵀA`, a linear functional on vertex weights.
    pub fn combine(&self, y: &[Q], nv: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); nv];
        for (row, yr) in self.matrix.iter().zip(y) {
            if yr.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(row) {
                *o += yr * a;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "claim")]
pub enum CertificateClaim {
    /// `yᵀA ≥ e_v`, so every nonnegative solution has `g(v) = 0`.
    ForcedZero { vertex: VertexId },
    /// `yᵀA ≤ -1`, so no nonnegative solution has `Σ g = 1`.
    Normalization,
}

/// Multipliers on the rows of [`InvarianceSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub claim: CertificateClaim,
    pub multipliers: Vec<Q>,
}

impl FarkasCertificate {
    /// Re-derives the claim from the multipliers alone.
    pub fn replay(&self, g: &KGraph) -> bool {
        let sys = InvarianceSystem::new(g);
        if sys.rows.len() != self.multipliers.len() {
            return false;
        }
        let f = sys.combine(&self.multipliers, g.num_vertices());
        match &self.claim {
            CertificateClaim::ForcedZero { vertex } => f.iter().enumerate().all(|(u, c)| {
                let need = if u == *vertex { Q::one() } else { Q::zero() };
                *c >= need
            }),
            CertificateClaim::Normalization => f.iter().all(|c| *c <= -Q::one()),
        }
    }

    pub fn to_json(&self, g: &KGraph) -> serde_json::Value {
        let sys = InvarianceSystem::new(g);
        let rows: Vec<_> = sys
            .rows
            .iter()
            .zip(&self.multipliers)
            .filter(|(_, y)| !y.is_zero())
            .map(|((v, i), y)| {
                serde_json::json!({"vertex": g.vertex_name(*v), "color": i + 1, "multiplier": format_rational(y)})
            })
            .collect();
        let claim = match &self.claim {
            CertificateClaim::ForcedZero { vertex } => {
                serde_json::json!({"forced_zero": g.vertex_name(*vertex)})
            }
            CertificateClaim::Normalization => serde_json::json!("normalization"),
        };
        serde_json::json!({"claim": claim, "rows": rows})
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    LoopWithEntrance(LoopWitness),
    LinearInfeasibility(FarkasCertificate),
    ForcedZeroVertex {
        vertices: Vec<VertexId>,
        certificates: Vec<FarkasCertificate>,
    },
}

impl Obstruction {
    pub fn kind(&self) -> &'static str {
        match self {
            Obstruction::LoopWithEntrance(_) => "LoopWithEntrance",
            Obstruction::LinearInfeasibility(_) => "LinearInfeasibility",
            Obstruction::ForcedZeroVertex { .. } => "ForcedZeroVertex",
        }
    }

    pub fn replay(&self, g: &KGraph) -> bool {
        match self {
            Obstruction::LoopWithEntrance(w) => w.replay(g),
            Obstruction::LinearInfeasibility(c) => c.replay(g),
            Obstruction::ForcedZeroVertex { certificates, .. } => {
                certificates.iter().all(|c| c.replay(g))
            }
        }
    }

    pub fn to_json(&self, g: &KGraph) -> serde_json::Value {
        match self {
            Obstruction::LoopWithEntrance(w) => serde_json::json!({
                "kind": self.kind(),
                "loop": g.path_label(&w.cycle),
                "entrance": g.edge(w.entrance).name,
            }),
            Obstruction::LinearInfeasibility(c) => serde_json::json!({
                "kind": self.kind(),
                "certificate": c.to_json(g),
            }),
            Obstruction::ForcedZeroVertex {
                vertices,
                certificates,
            } => serde_json::json!({
                "kind": self.kind(),
                "vertices": vertices.iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>(),
                "certificates": certificates.iter().map(|c| c.to_json(g)).collect::<Vec<_>>(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceOutcome {
    Faithful(GraphTrace),
    Obstructed(Vec<Obstruction>),
}

fn unit(i: usize, n: usize) -> Vec<Q> {
    let mut r = vec![Q::zero(); n];
    r[i] = Q::one();
    r
}

/// The largest `g(v)` over nonnegative solutions with `g ≤ 1` at `v`.
pub fn max_vertex_value(g: &KGraph, sys: &InvarianceSystem, v: VertexId) -> Q {
    let nv = g.num_vertices();
    let width = nv + 1;
    let mut a: Vec<Vec<Q>> = sys
        .matrix
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(Q::zero());
            r
        })
        .collect();
    let mut cap = unit(v, width);
    cap[nv] = Q::one();
    a.push(cap);
    let mut b = vec![Q::zero(); sys.rows.len()];
    b.push(Q::one());
    match maximize(&a, &b, &unit(v, width)) {
        LpOutcome::Optimal { value, .. } => value,
        other => unreachable!("bounded feasible program returned {other:?}"),
    }
}

/// Solves `yᵀA - w = e_v`, `w ≥ 0` with `y` free.
pub fn forced_zero_certificate(g: &KGraph, sys: &InvarianceSystem, v: VertexId) -> Option<FarkasCertificate> {
    let nv = g.num_vertices();
    let r = sys.rows.len();
    let width = 2 * r + nv;
    let mut a = Vec::with_capacity(nv);
    for u in 0..nv {
        let mut row = vec![Q::zero(); width];
        for (j, arow) in sys.matrix.iter().enumerate() {
            row[j] = arow[u].clone();
            row[r + j] = -arow[u].clone();
        }
        row[2 * r + u] = -Q::one();
        a.push(row);
    }
    let b = unit(v, nv);
    let x = feasible_point(&a, &b, width)?;
    let y = (0..r).map(|j| &x[j] - &x[r + j]).collect();
    Some(FarkasCertificate {
        claim: CertificateClaim::ForcedZero { vertex: v },
        multipliers: y,
    })
}

/// Maximises the smallest vertex value over normalised solutions of the
/// invariance system. A positive optimum yields a faithful trace; otherwise
/// the vertices forced to zero are reported with certificates.
pub fn find_faithful_graph_trace(g: &KGraph) -> Result<TraceOutcome, TraceError> {
    if !g.flags().locally_convex {
        return Err(TraceError::NotLocallyConvex);
    }
    let nv = g.num_vertices();
    let sys = InvarianceSystem::new(g);
    // columns: g_0..g_{nv-1}, t, s_0..s_{nv-1}
    let width = 2 * nv + 1;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for row in &sys.matrix {
        let mut r = row.clone();
        r.resize(width, Q::zero());
        a.push(r);
        b.push(Q::zero());
    }
    let mut norm = vec![Q::one(); nv];
    norm.resize(width, Q::zero());
    a.push(norm);
    b.push(Q::one());
    for v in 0..nv {
        let mut r = vec![Q::zero(); width];
        r[v] = Q::one();
        r[nv] = -Q::one();
        r[nv + 1 + v] = -Q::one();
        a.push(r);
        b.push(Q::zero());
    }
    let c = unit(nv, width);
    match maximize(&a, &b, &c) {
        LpOutcome::Optimal { x, value } if value.is_positive() => {
            Ok(TraceOutcome::Faithful(GraphTrace::new(x[..nv].to_vec())))
        }
        LpOutcome::Optimal { .. } => Ok(TraceOutcome::Obstructed(diagnose(g, &sys, false))),
        LpOutcome::Infeasible => Ok(TraceOutcome::Obstructed(diagnose(g, &sys, true))),
        LpOutcome::Unbounded => unreachable!("t is bounded by the normalisation"),
    }
}

fn diagnose(g: &KGraph, sys: &InvarianceSystem, infeasible: bool) -> Vec<Obstruction> {
    let mut out = Vec::new();
    if let Some(w) = detect_loop_with_entrance(g, None) {
        out.push(Obstruction::LoopWithEntrance(w));
    }
    let mut vertices = Vec::new();
    let mut certificates = Vec::new();
    for v in g.vertices() {
        if max_vertex_value(g, sys, v).is_zero() {
            let cert = forced_zero_certificate(g, sys, v)
                .expect("a forced zero always has a dual certificate");
            vertices.push(v);
            certificates.push(cert);
        }
    }
    if infeasible {
        // Summing the per-vertex certificates gives yᵀA ≤ -1.
        let mut y = vec![Q::zero(); sys.rows.len()];
        for c in &certificates {
            for (acc, m) in y.iter_mut().zip(&c.multipliers) {
                *acc -= m;
            }
        }
        out.push(Obstruction::LinearInfeasibility(FarkasCertificate {
            claim: CertificateClaim::Normalization,
            multipliers: y,
        }));
    }
    if !vertices.is_empty() {
        out.push(Obstruction::ForcedZeroVertex {
            vertices,
            certificates,
        });
    }
    out
}

pub fn forced_zero_vertices(outcome: &TraceOutcome) -> Vec<VertexId> {
    match outcome {
        TraceOutcome::Faithful(_) => Vec::new(),
        TraceOutcome::Obstructed(obs) => obs
            .iter()
            .flat_map(|o| match o {
                Obstruction::ForcedZeroVertex { vertices, .. } => vertices.clone(),
                _ => Vec::new(),
            })
            .collect(),
    }
}
