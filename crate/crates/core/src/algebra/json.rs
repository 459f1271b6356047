use serde::{Deserialize, Serialize};

use super::element::AlgebraElement;
use super::scalar::{format_rational, parse_rational, GaussianRational};
use crate::error::AlgebraError;
use crate::graph::{KGraph, Path};

/// One term `c · s_μ s_ν*`. `vertex` is only needed when both paths are
/// vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermRecord {
    pub mu: Vec<String>,
    pub nu: Vec<String>,
    pub re: String,
    pub im: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
}

fn path_names(g: &KGraph, p: &Path) -> Vec<String> {
    p.edges().iter().map(|&e| g.edge(e).name.clone()).collect()
}

fn parse_path(g: &KGraph, names: &[String], vertex: Option<usize>) -> Result<Path, AlgebraError> {
    if names.is_empty() {
        let v = vertex.ok_or_else(|| AlgebraError::Parse("vertex term needs `vertex`".into()))?;
        return Ok(g.vertex_path(v));
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(g.path_from_names(&refs)?)
}

impl<'g> AlgebraElement<'g> {
    pub fn to_records(&self) -> Vec<TermRecord> {
        let g = self.graph();
        self.terms()
            .iter()
            .map(|((mu, nu), c)| TermRecord {
                mu: path_names(g, mu),
                nu: path_names(g, nu),
                re: format_rational(&c.re),
                im: format_rational(&c.im),
                vertex: (mu.is_vertex() && nu.is_vertex())
                    .then(|| g.vertex_name(mu.source()).to_string()),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_records()).expect("plain data serialises")
    }

    pub fn from_records(g: &'g KGraph, records: &[TermRecord]) -> Result<Self, AlgebraError> {
        let mut a = AlgebraElement::zero(g);
        for r in records {
            let vertex = r.vertex.as_deref().map(|v| g.vertex_id(v)).transpose()?;
            let nu_first = parse_path(g, &r.nu, vertex).ok();
            let mu_first = parse_path(g, &r.mu, vertex).ok();
            let mu = match (&mu_first, &nu_first) {
                (Some(m), _) => m.clone(),
                (None, Some(n)) => parse_path(g, &r.mu, Some(n.source()))?,
                (None, None) => parse_path(g, &r.mu, vertex)?,
            };
            let nu = match nu_first {
                Some(n) => n,
                None => parse_path(g, &r.nu, Some(mu.source()))?,
            };
            if mu.source() != nu.source() {
                return Err(AlgebraError::Parse("term with s(μ) ≠ s(ν)".into()));
            }
            let bad = || AlgebraError::Parse(format!("bad rational in {:?}", r));
            let c = GaussianRational::new(
                parse_rational(&r.re).ok_or_else(bad)?,
                parse_rational(&r.im).ok_or_else(bad)?,
            );
            a = a.add(&AlgebraElement::term(g, mu, nu, c))?;
        }
        Ok(a)
    }

    pub fn from_json(g: &'g KGraph, text: &str) -> Result<Self, AlgebraError> {
        let records: Vec<TermRecord> =
            serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        Self::from_records(g, &records)
    }
}
