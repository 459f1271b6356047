use std::fmt;

use super::{EdgeId, KGraph, VertexId};
use crate::degree::Degree;
use crate::error::GraphError;

/// A morphism in normal form: edges sorted into color blocks, color 1 nearest
/// the range.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    range: VertexId,
    source: VertexId,
    degree: Degree,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub(crate) fn from_sorted(
        range: VertexId,
        source: VertexId,
        degree: Degree,
        edges: Vec<EdgeId>,
    ) -> Self {
        Path {
            range,
            source,
            degree,
            edges,
        }
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            write!(f, "v{}", self.range)
        } else {
            write!(f, "{:?}", self.edges)
        }
    }
}

impl KGraph {
    pub fn vertex_path(&self, v: VertexId) -> Path {
        Path::from_sorted(v, v, Degree::zero(self.k()), Vec::new())
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        let ed = self.edge(e);
        Path::from_sorted(ed.range, ed.source, Degree::unit(self.k(), ed.color), vec![e])
    }

    /// Builds a path from an arbitrary composable edge word.
    pub fn path_from_edges(&self, word: &[EdgeId]) -> Result<Path, GraphError> {
        if word.is_empty() {
            return Err(GraphError::NotComposable);
        }
        for w in word.windows(2) {
            if self.edge(w[0]).source != self.edge(w[1]).range {
                return Err(GraphError::NotComposable);
            }
        }
        Ok(self.normalize(word.to_vec()))
    }

    pub fn path_from_names(&self, names: &[&str]) -> Result<Path, GraphError> {
        let ids = names
            .iter()
            .map(|n| self.edge_id(n))
            .collect::<Result<Vec<_>, _>>()?;
        self.path_from_edges(&ids)
    }

    fn normalize(&self, mut word: Vec<EdgeId>) -> Path {
        let mut colors: Vec<usize> = word.iter().map(|&e| self.edge(e).color).collect();
        colors.sort_unstable();
        self.rewrite_to_colors(&mut word, &colors);
        let range = self.edge(word[0]).range;
        let source = self.edge(*word.last().unwrap()).source;
        let mut degree = vec![0u32; self.k()];
        for &c in &colors {
            degree[c] += 1;
        }
        Path::from_sorted(range, source, Degree::new(degree), word)
    }

    /// Rewrites `word` by commuting squares until its color sequence equals
    /// `target` (which must be a permutation of the word's colors).
    fn rewrite_to_colors(&self, word: &mut [EdgeId], target: &[usize]) {
        for p in 0..word.len() {
            if self.edge(word[p]).color == target[p] {
                continue;
            }
            let q = (p + 1..word.len())
                .find(|&q| self.edge(word[q]).color == target[p])
                .expect("target is a permutation of the word's colors");
            for r in (p..q).rev() {
                self.swap_at(word, r);
            }
        }
    }

    pub fn compose(&self, lambda: &Path, mu: &Path) -> Result<Path, GraphError> {
        if lambda.source != mu.range {
            return Err(GraphError::NotComposable);
        }
        if lambda.is_vertex() {
            return Ok(mu.clone());
        }
        if mu.is_vertex() {
            return Ok(lambda.clone());
        }
        let mut word = lambda.edges.clone();
        word.extend_from_slice(&mu.edges);
        Ok(self.normalize(word))
    }

    /// The segment `λ(m, n)`.
    pub fn factor(&self, lambda: &Path, m: &Degree, n: &Degree) -> Result<Path, GraphError> {
        let k = self.k();
        if m.rank() != k || n.rank() != k {
            return Err(GraphError::RankMismatch {
                expected: k,
                got: m.rank().min(n.rank()),
            });
        }
        if !(m.le(n) && n.le(&lambda.degree)) {
            return Err(GraphError::DegreeOutOfRange);
        }
        let mid = n.checked_sub(m).unwrap();
        let tail = lambda.degree.checked_sub(n).unwrap();
        let mut target = Vec::with_capacity(lambda.edges.len());
        for d in [m, &mid, &tail] {
            for i in 0..k {
                target.extend(std::iter::repeat_n(i, d.get(i) as usize));
            }
        }
        let mut word = lambda.edges.clone();
        self.rewrite_to_colors(&mut word, &target);
        let lo = m.total() as usize;
        let hi = n.total() as usize;
        let range = if lo == 0 {
            lambda.range
        } else {
            self.edge(word[lo - 1]).source
        };
        if lo == hi {
            return Ok(self.vertex_path(range));
        }
        let source = self.edge(word[hi - 1]).source;
        Ok(Path::from_sorted(range, source, mid, word[lo..hi].to_vec()))
    }

    /// Human-readable edge names of a path.
    pub fn path_label(&self, p: &Path) -> String {
        if p.is_vertex() {
            return self.vertex_name(p.range).to_string();
        }
        p.edges
            .iter()
            .map(|&e| self.edge(e).name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}
