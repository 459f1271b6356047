use std::collections::BTreeSet;

use crate::algebra::AlgebraElement;
use crate::degree::Degree;
use crate::error::AlgebraError;
use crate::graph::{build_lambda_n, KGraph, Path, VertexId};

/// Vertices joined by some `s_μ s_ν*` with `d(μ) = d(ν)`, i.e. the blocks of
/// the core. Degrees are searched up to `(|Λ⁰|, …)`.
pub fn lambda_n_core_classes(g: &KGraph) -> Vec<BTreeSet<VertexId>> {
    let nv = g.num_vertices();
    let mut parent: Vec<usize> = (0..nv).collect();
    fn root(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let bound = Degree::splat(g.k(), nv as u32);
    for u in g.vertices() {
        for d in bound.box_below() {
            let ranges: Vec<_> = g
                .paths_with_source(u, &d)
                .expect("valid vertex")
                .iter()
                .map(Path::range)
                .collect();
            for w in ranges.windows(2) {
                let (a, b) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<BTreeSet<VertexId>> = Vec::new();
    let mut index = std::collections::BTreeMap::new();
    for v in 0..nv {
        let r = root(&mut parent, v);
        let slot = *index.entry(r).or_insert_with(|| {
            out.push(BTreeSet::new());
            out.len() - 1
        });
        out[slot].insert(v);
    }
    out
}

/// Number of matrix-unit families in the core of `Λ_n`, computed on a
/// truncation with a tail. The blocks must be the residues of the vertex
/// index mod `n` along the solid edges.
pub fn lambda_n_core_multiplicity(n: usize) -> usize {
    let g = build_lambda_n(n, 2).expect("valid parameters");
    let classes = lambda_n_core_classes(&g);
    for class in &classes {
        let residues: BTreeSet<usize> = class
            .iter()
            .map(|&v| {
                let idx: usize = g.vertex_name(v)[1..].parse().expect("vertex names are v<i>");
                idx % n
            })
            .collect();
        assert_eq!(residues.len(), 1, "core block mixes residues mod n");
    }
    classes.len()
}

fn solid_path_into(g: &KGraph, v: VertexId, len: usize) -> Path {
    if len == 0 {
        return g.vertex_path(v);
    }
    let mut word = Vec::with_capacity(len);
    let mut w = v;
    for _ in 0..len {
        let e = g.in_edges(w, 0)[0];
        word.push(e);
        w = g.edge(e).source;
    }
    g.path_from_edges(&word).expect("composable by construction")
}

/// Exact matrix-unit relations on `build_lambda_n(n, tail)`:
/// `E_{i,j} = s_{λ}` for the solid path `λ` from `v_j` to `v_i` (`i > j`),
/// `E_{j,i} = E_{i,j}*`, `E_{i,i} = p_{v_i}`, checked for
/// `E_{i,j} E_{j',l} = δ_{j,j'} E_{i,l}`; and core units
/// `θ_{i,j} = s_μ s_ν*` (solid, equal length, common source) for vertices in the
/// same residue class, checked for `θ_{i,j} θ_{j',l} = δ_{j,j'} θ_{i,l}`.
pub fn lambda_n_unit_checks(n: usize, tail: usize) -> Result<bool, AlgebraError> {
    let g = build_lambda_n(n, tail)?;
    let total = n + tail;
    let v = |i: usize| g.vertex_id(&format!("v{i}")).expect("named vertex");

    let unit = |i: usize, j: usize| -> AlgebraElement<'_> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => AlgebraElement::p(&g, v(i)),
            Greater => AlgebraElement::s(&g, &solid_path_into(&g, v(i), i - j)),
            Less => AlgebraElement::s(&g, &solid_path_into(&g, v(j), j - i)).adjoint(),
        }
    };
    for i in 1..=total {
        for j in 1..=total {
            for jp in 1..=total {
                for l in 1..=total {
                    let prod = unit(i, j).star_mult(&unit(jp, l))?;
                    let want = if j == jp {
                        unit(i, l)
                    } else {
                        AlgebraElement::zero(&g)
                    };
                    if !prod.equals(&want)? {
                        return Ok(false);
                    }
                }
            }
        }
    }

    // Long enough that every solid path has entered the cycle.
    let len = total + n;
    let theta = |i: usize, j: usize| -> AlgebraElement<'_> {
        let mu = solid_path_into(&g, v(i), len);
        let nu = solid_path_into(&g, v(j), len);
        AlgebraElement::generator(&g, mu, nu)
    };
    for i in 1..=total {
        for j in (1..=total).filter(|j| j % n == i % n) {
            if i == j && !theta(i, i).equals(&AlgebraElement::p(&g, v(i)))? {
                return Ok(false);
            }
            for jp in (1..=total).filter(|jp| jp % n == i % n) {
                for l in (1..=total).filter(|l| l % n == i % n) {
                    let prod = theta(i, j).star_mult(&theta(jp, l))?;
                    let want = if j == jp {
                        theta(i, l)
                    } else {
                        AlgebraElement::zero(&g)
                    };
                    if !prod.equals(&want)? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
