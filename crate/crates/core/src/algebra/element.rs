use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::scalar::GaussianRational;
use crate::degree::{Degree, DegreeDiff};
use crate::error::AlgebraError;
use crate::graph::{KGraph, Path, VertexId};
use crate::trace::GraphTrace;

/// A finite combination `Σ c_{μ,ν} s_μ s_ν*` with `s(μ) = s(ν)`.
#[derive(Clone)]
pub struct AlgebraElement<'g> {
    graph: &'g KGraph,
    terms: BTreeMap<(Path, Path), GaussianRational>,
}

impl PartialEq for AlgebraElement<'_> {
    /// Equality of the stored term maps; use [`AlgebraElement::equals`] for
    /// equality in the algebra.
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph) && self.terms == other.terms
    }
}

impl<'g> AlgebraElement<'g> {
    pub fn zero(graph: &'g KGraph) -> Self {
        AlgebraElement {
            graph,
            terms: BTreeMap::new(),
        }
    }

    /// `c · s_μ s_ν*`; zero when the sources differ.
    pub fn term(graph: &'g KGraph, mu: Path, nu: Path, c: GaussianRational) -> Self {
        let mut a = Self::zero(graph);
        a.push(mu, nu, c);
        a
    }

    pub fn generator(graph: &'g KGraph, mu: Path, nu: Path) -> Self {
        Self::term(graph, mu, nu, GaussianRational::one())
    }

    pub fn s(graph: &'g KGraph, mu: &Path) -> Self {
        let v = graph.vertex_path(mu.source());
        Self::generator(graph, mu.clone(), v)
    }

    pub fn p(graph: &'g KGraph, v: VertexId) -> Self {
        let vp = graph.vertex_path(v);
        Self::generator(graph, vp.clone(), vp)
    }

    pub fn graph(&self) -> &'g KGraph {
        self.graph
    }

    pub fn terms(&self) -> &BTreeMap<(Path, Path), GaussianRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn push(&mut self, mu: Path, nu: Path, c: GaussianRational) {
        if c.is_zero() || mu.source() != nu.source() {
            return;
        }
        let key = (mu, nu);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn same_graph(&self, other: &Self) -> Result<(), AlgebraError> {
        if std::ptr::eq(self.graph, other.graph) {
            Ok(())
        } else {
            Err(AlgebraError::GraphMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_graph(other)?;
        let mut out = self.clone();
        for ((m, n), c) in &other.terms {
            out.push(m.clone(), n.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(&GaussianRational::from_ints(-1, 0)))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.graph);
        for ((m, n), d) in &self.terms {
            out.push(m.clone(), n.clone(), c * d);
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.graph);
        for ((m, n), c) in &self.terms {
            out.push(n.clone(), m.clone(), c.conj());
        }
        out
    }

    /// Product via `s_ν* s_α = Σ_{(σ,ρ) ∈ Λ^min(ν,α)} s_σ s_ρ*`.
    pub fn star_mult(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_graph(other)?;
        let g = self.graph;
        let mut out = Self::zero(g);
        let mut cache: BTreeMap<(&Path, &Path), Vec<(Path, Path)>> = BTreeMap::new();
        for ((mu, nu), c) in &self.terms {
            for ((alpha, beta), d) in &other.terms {
                if nu.range() != alpha.range() {
                    continue;
                }
                let ext = cache
                    .entry((nu, alpha))
                    .or_insert_with(|| g.min_common_extensions(nu, alpha));
                if ext.is_empty() {
                    continue;
                }
                let cd = c * d;
                for (sigma, rho) in ext.iter() {
                    let left = g.compose(mu, sigma)?;
                    let right = g.compose(beta, rho)?;
                    out.push(left, right, cd.clone());
                }
            }
        }
        Ok(out)
    }

    /// Rewrites each `s_μ s_ν*` as `Σ_{λ ∈ s(μ)Λ^{≤level}} s_{μλ} s_{νλ}*`.
    pub fn ck4_expand(&self, level: &Degree) -> Self {
        let mut out = Self::zero(self.graph);
        for ((mu, nu), c) in &self.terms {
            self.expand_term(&mut out, mu, nu, c, level);
        }
        out
    }

    fn expand_term(&self, out: &mut Self, mu: &Path, nu: &Path, c: &GaussianRational, level: &Degree) {
        let g = self.graph;
        if level.is_zero() {
            out.push(mu.clone(), nu.clone(), c.clone());
            return;
        }
        for lam in g.lambda_le(mu.source(), level).expect("valid vertex") {
            out.push(
                g.compose(mu, &lam).expect("composable"),
                g.compose(nu, &lam).expect("composable"),
                c.clone(),
            );
        }
    }

    /// Canonical form: within each graded component `D`, every term is
    /// expanded so that `μ ∈ Λ^{≤M}` where `M` is the componentwise maximum of
    /// the `d(μ)` in that component. On a locally convex graph the resulting
    /// pairs are linearly independent, so equal elements have equal forms.
    pub fn canonical(&self) -> Self {
        let mut tops: BTreeMap<DegreeDiff, Degree> = BTreeMap::new();
        for (mu, nu) in self.terms.keys() {
            let d = mu.degree().diff(nu.degree());
            tops.entry(d)
                .and_modify(|m| *m = m.join(mu.degree()))
                .or_insert_with(|| mu.degree().clone());
        }
        let mut out = Self::zero(self.graph);
        for ((mu, nu), c) in &self.terms {
            let top = &tops[&mu.degree().diff(nu.degree())];
            let level = top.checked_sub(mu.degree()).unwrap();
            self.expand_term(&mut out, mu, nu, c, &level);
        }
        out
    }

    /// Equality in `C*(Λ)`.
    pub fn equals(&self, other: &Self) -> Result<bool, AlgebraError> {
        Ok(self.sub(other)?.canonical().is_empty())
    }

    pub fn is_zero_element(&self) -> bool {
        self.canonical().is_empty()
    }

    /// `Φ_n`: the terms with `d(μ) - d(ν) = n`.
    pub fn graded_part(&self, n: &DegreeDiff) -> Self {
        let mut out = Self::zero(self.graph);
        for ((mu, nu), c) in &self.terms {
            if &mu.degree().diff(nu.degree()) == n {
                out.push(mu.clone(), nu.clone(), c.clone());
            }
        }
        out
    }

    /// `Φ`, the gauge-invariant part.
    pub fn gauge_expectation(&self) -> Self {
        self.graded_part(&DegreeDiff::zero(self.graph.k()))
    }

    /// The graded components present among the terms.
    pub fn degree_support(&self) -> Vec<DegreeDiff> {
        let mut out: Vec<_> = self
            .terms
            .keys()
            .map(|(m, n)| m.degree().diff(n.degree()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `Ψ`: keeps the terms `μ = ν` of the canonical form.
    pub fn diagonal_expectation(&self) -> Self {
        let mut out = Self::zero(self.graph);
        for ((mu, nu), c) in self.canonical().terms {
            if mu == nu {
                out.push(mu, nu, c);
            }
        }
        out
    }

    /// `τ_g(s_μ s_ν*) = δ_{μ,ν} g(s(μ))`, extended linearly.
    pub fn tau_g(&self, g: &GraphTrace) -> Result<GaussianRational, AlgebraError> {
        g.check(self.graph).map_err(AlgebraError::NotAGraphTrace)?;
        Ok(self.tau_g_unchecked(g))
    }

    pub(crate) fn tau_g_unchecked(&self, g: &GraphTrace) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for ((mu, nu), c) in &self.terms {
            if mu == nu {
                acc += &c.scale_real(g.value(mu.source()));
            }
        }
        acc
    }

    /// The coefficient sum `Σ |c|²` of the terms, a cheap nonnegativity probe.
    pub fn coefficient_mass(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c.norm_sq())
    }
}

impl fmt::Debug for AlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((m, n), c)| {
                format!(
                    "({}) s[{}] s[{}]*",
                    c,
                    self.graph.path_label(m),
                    self.graph.path_label(n)
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
