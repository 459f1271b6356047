use super::{FactorizationRegime, KGraph, Skeleton, Square};
use crate::degree::Degree;
use crate::error::GraphError;

/// Incremental construction by name.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    k: usize,
    vertices: Vec<String>,
    edges: Vec<(String, usize, String, String)>,
    squares: Vec<Square>,
    truncation: Vec<String>,
}

impl GraphBuilder {
    pub fn new(k: usize) -> Self {
        GraphBuilder {
            k,
            ..Default::default()
        }
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> &mut Self {
        self.vertices.push(name.into());
        self
    }

    /// `color` is 1-based.
    pub fn edge(
        &mut self,
        name: impl Into<String>,
        color: usize,
        range: impl Into<String>,
        source: impl Into<String>,
    ) -> &mut Self {
        self.edges
            .push((name.into(), color, range.into(), source.into()));
        self
    }

    /// Records `a b = c d`.
    pub fn square(&mut self, a: &str, b: &str, c: &str, d: &str) -> &mut Self {
        self.squares.push(Square::new([a, b], [c, d]));
        self
    }

    pub fn truncation(&mut self, v: impl Into<String>) -> &mut Self {
        self.truncation.push(v.into());
        self
    }

    pub fn build(&self) -> Result<KGraph, GraphError> {
        let sk = Skeleton::new(self.k, self.vertices.clone(), self.edges.clone())?;
        let mut g = KGraph::validate(sk, FactorizationRegime::new(self.squares.clone()))?;
        let tv = self
            .truncation
            .iter()
            .map(|v| g.vertex_id(v))
            .collect::<Result<Vec<_>, _>>()?;
        g.set_truncation_vertices(tv);
        Ok(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeChoice {
    A,
    B,
}

fn omega_name(p: &Degree) -> String {
    p.to_string()
}

/// `Ω_{k,m}`: vertices `p ≤ m`, one edge of color `i` from `p + e_i` to `p`.
pub fn build_omega(k: usize, m: &Degree) -> Result<KGraph, GraphError> {
    if m.rank() != k {
        return Err(GraphError::RankMismatch {
            expected: k,
            got: m.rank(),
        });
    }
    let mut b = GraphBuilder::new(k);
    let pts = m.box_below();
    for p in &pts {
        b.vertex(omega_name(p));
    }
    let ename = |i: usize, p: &Degree| format!("c{}@{}", i + 1, p);
    for p in &pts {
        for i in 0..k {
            let q = p + &Degree::unit(k, i);
            if q.le(m) {
                b.edge(ename(i, p), i + 1, omega_name(p), omega_name(&q));
            }
        }
    }
    for p in &pts {
        for i in 0..k {
            for j in i + 1..k {
                let pi = p + &Degree::unit(k, i);
                let pj = p + &Degree::unit(k, j);
                let pij = &pi + &Degree::unit(k, j);
                if pij.le(m) {
                    b.square(&ename(j, p), &ename(i, &pj), &ename(i, p), &ename(j, &pi));
                }
            }
        }
    }
    b.build()
}

/// The 2-graph on a cycle of `n` vertices with a solid edge `e_i` and a dashed
/// edge `f_i` into each `v_i`, plus a tail of `tail_len` further cells hanging
/// off `v_n` on the range side. The last tail vertex is a sink and is recorded
/// as the truncation vertex.
pub fn build_lambda_n(n: usize, tail_len: usize) -> Result<KGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::Parse("Λ_n needs n ≥ 1".into()));
    }
    let mut b = GraphBuilder::new(2);
    let total = n + tail_len;
    for i in 1..=total {
        b.vertex(format!("v{i}"));
    }
    let prev = |i: usize| if i == 1 { n } else { i - 1 };
    for i in 1..=total {
        let s = format!("v{}", prev(i));
        b.edge(format!("e{i}"), 1, format!("v{i}"), s.clone());
        b.edge(format!("f{i}"), 2, format!("v{i}"), s);
    }
    for i in 1..=total {
        let p = prev(i);
        b.square(
            &format!("e{i}"),
            &format!("f{p}"),
            &format!("f{i}"),
            &format!("e{p}"),
        );
    }
    if tail_len > 0 {
        b.truncation(format!("v{total}"));
    }
    b.build()
}

fn ladder_vertex(i: usize, width: usize) -> String {
    match i {
        0 => "v".into(),
        _ if i == width => "cap".into(),
        1 => "w".into(),
        _ => format!("w{i}"),
    }
}

/// A finite version of the ladder whose vertices each receive two solid edges
/// and one dashed edge. Cell `i` joins `x_{i+1}` to `x_i` by solid `e_i`, `f_i`
/// and dashed `g_i`. The ladder ends at `cap`, which carries solid loops `a`,
/// `b` and a dashed loop `h` so that every vertex keeps the same local shape.
pub fn build_figure2(choice: RegimeChoice, width: usize) -> Result<KGraph, GraphError> {
    if width < 1 {
        return Err(GraphError::Parse("ladder width must be at least 1".into()));
    }
    let mut b = GraphBuilder::new(2);
    for i in 0..=width {
        b.vertex(ladder_vertex(i, width));
    }
    for i in 0..width {
        let (r, s) = (ladder_vertex(i, width), ladder_vertex(i + 1, width));
        b.edge(format!("e{i}"), 1, r.clone(), s.clone());
        b.edge(format!("f{i}"), 1, r.clone(), s.clone());
        b.edge(format!("g{i}"), 2, r, s);
    }
    b.edge("a", 1, "cap", "cap");
    b.edge("b", 1, "cap", "cap");
    b.edge("h", 2, "cap", "cap");

    let (same, cross) = match choice {
        RegimeChoice::A => (true, false),
        RegimeChoice::B => (false, true),
    };
    let pick = |first: &str, second: &str, keep: bool| -> (String, String) {
        if keep {
            (first.to_string(), second.to_string())
        } else {
            (second.to_string(), first.to_string())
        }
    };
    debug_assert_ne!(same, cross);
    for i in 0..width {
        let g = format!("g{i}");
        if i + 1 < width {
            let j = i + 1;
            let gj = format!("g{j}");
            let (te, tf) = pick(&format!("e{j}"), &format!("f{j}"), same);
            b.square(&format!("e{i}"), &gj, &g, &te);
            b.square(&format!("f{i}"), &gj, &g, &tf);
        } else {
            let (ta, tb) = pick("a", "b", same);
            b.square(&format!("e{i}"), "h", &g, &ta);
            b.square(&format!("f{i}"), "h", &g, &tb);
        }
    }
    let (ta, tb) = pick("a", "b", same);
    b.square("a", "h", "h", &ta);
    b.square("b", "h", "h", &tb);
    b.build()
}

/// Two vertices `u`, `v`; solid `e`, `k` from `u` to `v` and `g` from `v` to
/// `u`; dashed loops `f` at `u` and `h` at `v`. Regime A pairs `ef = he`,
/// `kf = hk`; regime B pairs `ef = hk`, `kf = he`. Both use `gh = fg`.
pub fn build_two_regime_example(choice: RegimeChoice) -> Result<KGraph, GraphError> {
    let mut b = GraphBuilder::new(2);
    b.vertex("u").vertex("v");
    b.edge("e", 1, "v", "u")
        .edge("k", 1, "v", "u")
        .edge("g", 1, "u", "v")
        .edge("f", 2, "u", "u")
        .edge("h", 2, "v", "v");
    match choice {
        RegimeChoice::A => b.square("e", "f", "h", "e").square("k", "f", "h", "k"),
        RegimeChoice::B => b.square("e", "f", "h", "k").square("k", "f", "h", "e"),
    };
    b.square("g", "h", "f", "g");
    b.build()
}

/// A single cycle of `n` color-1 edges in a graph of rank `k`.
pub fn build_cycle(k: usize, n: usize) -> Result<KGraph, GraphError> {
    let mut b = GraphBuilder::new(k);
    for i in 0..n {
        b.vertex(format!("c{i}"));
    }
    for i in 0..n {
        b.edge(format!("a{i}"), 1, format!("c{i}"), format!("c{}", (i + 1) % n));
    }
    b.build()
}

/// Disjoint union; names are prefixed with `l.` and `r.`.
pub fn disjoint_union(left: &KGraph, right: &KGraph) -> Result<KGraph, GraphError> {
    if left.k() != right.k() {
        return Err(GraphError::RankMismatch {
            expected: left.k(),
            got: right.k(),
        });
    }
    let mut b = GraphBuilder::new(left.k());
    for (tag, g) in [("l.", left), ("r.", right)] {
        for v in g.vertices() {
            b.vertex(format!("{tag}{}", g.vertex_name(v)));
        }
        for e in g.skeleton().edges() {
            b.edge(
                format!("{tag}{}", e.name),
                e.color + 1,
                format!("{tag}{}", g.vertex_name(e.range)),
                format!("{tag}{}", g.vertex_name(e.source)),
            );
        }
        for sq in &g.regime().squares {
            b.square(
                &format!("{tag}{}", sq.outer[0]),
                &format!("{tag}{}", sq.outer[1]),
                &format!("{tag}{}", sq.inner[0]),
                &format!("{tag}{}", sq.inner[1]),
            );
        }
        for &t in g.truncation_vertices() {
            b.truncation(format!("{tag}{}", g.vertex_name(t)));
        }
    }
    b.build()
}
