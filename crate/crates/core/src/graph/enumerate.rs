use super::{KGraph, Path, VertexId};
use crate::degree::Degree;
use crate::error::GraphError;

impl KGraph {
    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(format!("#{v}")))
        }
    }

    fn check_rank(&self, n: &Degree) -> Result<(), GraphError> {
        if n.rank() == self.k() {
            Ok(())
        } else {
            Err(GraphError::RankMismatch {
                expected: self.k(),
                got: n.rank(),
            })
        }
    }

    /// `vΛ^n`, in normal form.
    pub fn paths_with_range(&self, v: VertexId, n: &Degree) -> Result<Vec<Path>, GraphError> {
        self.check_vertex(v)?;
        self.check_rank(n)?;
        let mut partial = vec![(v, Vec::new())];
        for c in 0..self.k() {
            for _ in 0..n.get(c) {
                let mut next = Vec::new();
                for (u, word) in &partial {
                    for &e in self.in_edges(*u, c) {
                        let mut w = word.clone();
                        w.push(e);
                        next.push((self.edge(e).source, w));
                    }
                }
                partial = next;
            }
        }
        Ok(partial
            .into_iter()
            .map(|(s, w)| Path::from_sorted(v, s, n.clone(), w))
            .collect())
    }

    /// `Λ^n v`, in normal form.
    pub fn paths_with_source(&self, v: VertexId, n: &Degree) -> Result<Vec<Path>, GraphError> {
        self.check_vertex(v)?;
        self.check_rank(n)?;
        let mut partial = vec![(v, Vec::new())];
        for c in (0..self.k()).rev() {
            for _ in 0..n.get(c) {
                let mut next = Vec::new();
                for (u, rev_word) in &partial {
                    for &e in self.out_edges(*u, c) {
                        let mut w = rev_word.clone();
                        w.push(e);
                        next.push((self.edge(e).range, w));
                    }
                }
                partial = next;
            }
        }
        Ok(partial
            .into_iter()
            .map(|(r, mut w)| {
                w.reverse();
                Path::from_sorted(r, v, n.clone(), w)
            })
            .collect())
    }

    /// `Λ^n`, all paths of degree `n`.
    pub fn paths_of_degree(&self, n: &Degree) -> Result<Vec<Path>, GraphError> {
        let mut out = Vec::new();
        for v in self.vertices() {
            out.extend(self.paths_with_range(v, n)?);
        }
        Ok(out)
    }

    /// `vΛ^{≤n}` by the edge-level criterion.
    pub fn lambda_le(&self, v: VertexId, n: &Degree) -> Result<Vec<Path>, GraphError> {
        let mut out = Vec::new();
        for m in n.box_below() {
            for p in self.paths_with_range(v, &m)? {
                let maximal = (0..self.k())
                    .all(|i| m.get(i) == n.get(i) || self.in_edges(p.source(), i).is_empty());
                if maximal {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }

    /// `vΛ^{≤n}` straight from the definition: `λ` qualifies when no nonzero
    /// `p ≤ n - d(λ)` has `s(λ)Λ^p` nonempty.
    pub fn lambda_le_bruteforce(&self, v: VertexId, n: &Degree) -> Result<Vec<Path>, GraphError> {
        let mut out = Vec::new();
        for m in n.box_below() {
            let room = n.checked_sub(&m).unwrap();
            for p in self.paths_with_range(v, &m)? {
                let mut extendable = false;
                for q in room.box_below() {
                    if !q.is_zero() && !self.paths_with_range(p.source(), &q)?.is_empty() {
                        extendable = true;
                        break;
                    }
                }
                if !extendable {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }

    /// `Λ^min(μ, ν)`: pairs `(σ, ρ)` with `μσ = νρ` of degree `d(μ) ∨ d(ν)`.
    pub fn min_common_extensions(&self, mu: &Path, nu: &Path) -> Vec<(Path, Path)> {
        if mu.range() != nu.range() {
            return Vec::new();
        }
        let top = mu.degree().join(nu.degree());
        let sigma_deg = top.checked_sub(mu.degree()).unwrap();
        let zero = self.degree_zero();
        let mut out = Vec::new();
        for sigma in self
            .paths_with_range(mu.source(), &sigma_deg)
            .expect("valid vertex and rank")
        {
            let lam = self.compose(mu, &sigma).expect("composable by construction");
            if self.factor(&lam, &zero, nu.degree()).unwrap() == *nu {
                let rho = self.factor(&lam, nu.degree(), &top).unwrap();
                out.push((sigma, rho));
            }
        }
        out
    }
}
