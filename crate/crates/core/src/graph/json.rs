use serde::{Deserialize, Serialize};

use super::{FactorizationRegime, KGraph, Skeleton, Square};
use crate::error::GraphError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub color: usize,
    pub range: String,
    pub source: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SquareRecord {
    pub outer: [String; 2],
    pub inner: [String; 2],
}

/// On-disk skeleton plus factorisation rules.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SkeletonFile {
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default)]
    pub squares: Vec<SquareRecord>,
}

impl SkeletonFile {
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serialises")
    }

    pub fn into_graph(self) -> Result<KGraph, GraphError> {
        let edges = self
            .edges
            .into_iter()
            .map(|e| (e.id, e.color, e.range, e.source));
        let sk = Skeleton::new(self.k, self.vertices, edges)?;
        let squares = self
            .squares
            .into_iter()
            .map(|s| Square {
                outer: s.outer,
                inner: s.inner,
            })
            .collect();
        KGraph::validate(sk, FactorizationRegime::new(squares))
    }

    pub fn from_graph(g: &KGraph) -> Self {
        SkeletonFile {
            k: g.k(),
            vertices: g.vertices().map(|v| g.vertex_name(v).to_string()).collect(),
            edges: g
                .skeleton()
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.name.clone(),
                    color: e.color + 1,
                    range: g.vertex_name(e.range).to_string(),
                    source: g.vertex_name(e.source).to_string(),
                })
                .collect(),
            squares: g
                .regime()
                .squares
                .iter()
                .map(|s| SquareRecord {
                    outer: s.outer.clone(),
                    inner: s.inner.clone(),
                })
                .collect(),
        }
    }
}
