use crate::degree::Degree;
use crate::error::TraceError;
use crate::graph::{EdgeId, KGraph, Path};

/// A cycle `λ` (`r(λ) = s(λ)`) and an edge `e` of color `i` into `r(λ)` with
/// `e ≠ λ(0, e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopWitness {
    pub cycle: Path,
    pub entrance: EdgeId,
}

impl LoopWitness {
    pub fn replay(&self, g: &KGraph) -> bool {
        let e = g.edge(self.entrance);
        let unit = Degree::unit(g.k(), e.color);
        if self.cycle.range() != self.cycle.source()
            || e.range != self.cycle.range()
            || !unit.le(self.cycle.degree())
        {
            return false;
        }
        let first = g
            .factor(&self.cycle, &g.degree_zero(), &unit)
            .expect("degree checked");
        first.edges() != [self.entrance]
    }
}

/// Searches cycles of degree at most `bound` (default `(|Λ⁰|, …, |Λ⁰|)`).
pub fn detect_loop_with_entrance(g: &KGraph, bound: Option<&Degree>) -> Option<LoopWitness> {
    let default = Degree::splat(g.k(), g.num_vertices() as u32);
    let bound = bound.unwrap_or(&default);
    let mut degrees = bound.box_below();
    degrees.sort_by_key(|d| d.total());
    for n in degrees.into_iter().filter(|d| !d.is_zero()) {
        for v in g.vertices() {
            for lam in g.paths_with_range(v, &n).ok()? {
                if lam.source() != v {
                    continue;
                }
                for i in (0..g.k()).filter(|&i| n.get(i) > 0) {
                    let unit = Degree::unit(g.k(), i);
                    let first = g.factor(&lam, &g.degree_zero(), &unit).ok()?;
                    if let Some(&e) = g.in_edges(v, i).iter().find(|&&e| first.edges() != [e]) {
                        return Some(LoopWitness {
                            cycle: lam,
                            entrance: e,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Whether `μα = νβ` for some `α, β` (minimal common extensions suffice).
pub fn have_common_extension(g: &KGraph, mu: &Path, nu: &Path) -> Result<bool, TraceError> {
    if mu.range() != nu.range() {
        return Err(TraceError::RangeMismatch);
    }
    Ok(!g.min_common_extensions(mu, nu).is_empty())
}

/// `|vΛ^{≤(j,…,j)}|` for `j = 1..=depth`: sizes of orthogonal families of
/// growing degree. Growth suggests, but does not prove, an infinite family.
pub fn orthogonal_family_growth(g: &KGraph, v: usize, depth: u32) -> Vec<usize> {
    (1..=depth)
        .map(|j| {
            g.lambda_le(v, &Degree::splat(g.k(), j))
                .map(|s| s.len())
                .unwrap_or(0)
        })
        .collect()
}
