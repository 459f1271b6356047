//! The right pre-Hilbert `F`-module `X_c = C^{2^{[k/2]}} ⊗ A_c`.

use num_rational::BigRational;

use super::element::AlgebraElement;
use super::scalar::GaussianRational;
use crate::degree::{Degree, DegreeDiff};
use crate::error::AlgebraError;
use crate::graph::{KGraph, Path, VertexId};
use crate::spectral::clifford::CliffordRep;
use crate::trace::GraphTrace;

pub fn spinor_dim(k: usize) -> usize {
    1 << (k / 2)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleElement<'g> {
    components: Vec<AlgebraElement<'g>>,
}

impl<'g> ModuleElement<'g> {
    pub fn new(graph: &'g KGraph, components: Vec<AlgebraElement<'g>>) -> Result<Self, AlgebraError> {
        let expected = spinor_dim(graph.k());
        if components.len() != expected {
            return Err(AlgebraError::SpinorMismatch {
                expected,
                got: components.len(),
            });
        }
        if components.iter().any(|c| !std::ptr::eq(c.graph(), graph)) {
            return Err(AlgebraError::GraphMismatch);
        }
        Ok(ModuleElement { components })
    }

    pub fn zero(graph: &'g KGraph) -> Self {
        ModuleElement {
            components: vec![AlgebraElement::zero(graph); spinor_dim(graph.k())],
        }
    }

    /// `a` placed in spinor slot `j`.
    pub fn basis(a: AlgebraElement<'g>, j: usize) -> Self {
        let mut x = Self::zero(a.graph());
        x.components[j] = a;
        x
    }

    pub fn graph(&self) -> &'g KGraph {
        self.components[0].graph()
    }

    pub fn components(&self) -> &[AlgebraElement<'g>] {
        &self.components
    }

    fn same_graph(&self, other: &Self) -> Result<(), AlgebraError> {
        if std::ptr::eq(self.graph(), other.graph()) {
            Ok(())
        } else {
            Err(AlgebraError::GraphMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_graph(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_, _>>()?;
        Ok(ModuleElement { components })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(&GaussianRational::from_ints(-1, 0)))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        ModuleElement {
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Right action `x · a`.
    pub fn right_mul(&self, a: &AlgebraElement<'g>) -> Result<Self, AlgebraError> {
        let components = self
            .components
            .iter()
            .map(|x| x.star_mult(a))
            .collect::<Result<_, _>>()?;
        Ok(ModuleElement { components })
    }

    /// Left action `a · x`, componentwise.
    pub fn left_mul(&self, a: &AlgebraElement<'g>) -> Result<Self, AlgebraError> {
        let components = self
            .components
            .iter()
            .map(|x| a.star_mult(x))
            .collect::<Result<_, _>>()?;
        Ok(ModuleElement { components })
    }

    pub fn graded_part(&self, n: &DegreeDiff) -> Self {
        ModuleElement {
            components: self.components.iter().map(|a| a.graded_part(n)).collect(),
        }
    }

    pub fn equals(&self, other: &Self) -> Result<bool, AlgebraError> {
        for (a, b) in self.components.iter().zip(&other.components) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_element(&self) -> bool {
        self.components.iter().all(|a| a.is_zero_element())
    }

    pub fn degree_support(&self) -> Vec<DegreeDiff> {
        let mut out: Vec<_> = self
            .components
            .iter()
            .flat_map(|a| a.degree_support())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// `(x|y)_R = Σ_j Φ(x_j* y_j)`.
pub fn inner_product_f<'g>(
    x: &ModuleElement<'g>,
    y: &ModuleElement<'g>,
) -> Result<AlgebraElement<'g>, AlgebraError> {
    x.same_graph(y)?;
    let mut acc = AlgebraElement::zero(x.graph());
    for (a, b) in x.components.iter().zip(&y.components) {
        acc = acc.add(&a.adjoint().star_mult(b)?.gauge_expectation())?;
    }
    Ok(acc)
}

/// `Θ_{x,y} z = x (y|z)_R`.
pub fn theta_apply<'g>(
    x: &ModuleElement<'g>,
    y: &ModuleElement<'g>,
    z: &ModuleElement<'g>,
) -> Result<ModuleElement<'g>, AlgebraError> {
    x.same_graph(z)?;
    x.right_mul(&inner_product_f(y, z)?)
}

/// `D x = Σ_n γ(i n) Φ_n x`, acting on the spinor index.
pub fn dirac_apply<'g>(x: &ModuleElement<'g>, rep: &CliffordRep) -> Result<ModuleElement<'g>, AlgebraError> {
    let g = x.graph();
    let dim = spinor_dim(g.k());
    if rep.k != g.k() {
        return Err(AlgebraError::SpinorMismatch {
            expected: dim,
            got: rep.dim(),
        });
    }
    let mut out = ModuleElement::zero(g);
    for (jp, comp) in x.components.iter().enumerate() {
        for ((mu, nu), c) in comp.terms() {
            let n = mu.degree().diff(nu.degree());
            if n.is_zero() {
                continue;
            }
            for j in 0..dim {
                let mut entry = num_complex::Complex::new(0i64, 0i64);
                for (l, gamma) in rep.gammas.iter().enumerate() {
                    entry += gamma.get(j, jp) * n.coords()[l];
                }
                // multiply by i
                let phase = GaussianRational::from_ints(-entry.im, entry.re);
                if phase.is_zero() {
                    continue;
                }
                out.components[j].push(mu.clone(), nu.clone(), &phase * c);
            }
        }
    }
    Ok(out)
}

/// `T_{v,n1,n2} = Σ (1/|Λ^{n2} s(β)|) Θ_{s_α s_β*, s_α s_β*}` over
/// `α ∈ vΛ^{n1}`, `β ∈ Λ^{n2}`, `s(α) = s(β)`, applied to `z`; the graded
/// component it picks out is `n1 - n2`.
pub fn finite_rank_apply<'g>(
    v: VertexId,
    n1: &Degree,
    n2: &Degree,
    z: &ModuleElement<'g>,
) -> Result<ModuleElement<'g>, AlgebraError> {
    let g = z.graph();
    let dim = spinor_dim(g.k());
    let mut out = ModuleElement::zero(g);
    for alpha in g.paths_with_range(v, n1)? {
        let betas: Vec<Path> = g
            .paths_of_degree(n2)?
            .into_iter()
            .filter(|b| b.source() == alpha.source())
            .collect();
        if betas.is_empty() {
            continue;
        }
        let weight = GaussianRational::ratio(1, betas.len() as i64);
        for beta in betas {
            let w = AlgebraElement::generator(g, alpha.clone(), beta);
            for j in 0..dim {
                let x = ModuleElement::basis(w.clone(), j);
                out = out.add(&theta_apply(&x, &x, z)?.scale(&weight))?;
            }
        }
    }
    Ok(out)
}

/// `Σ_{α ∈ vΛ^{n1}, Λ^{n2} s(α) ≠ ∅} s_α s_α*`, the range projection of the
/// finite-rank operator above.
pub fn finite_rank_range<'g>(g: &'g KGraph, v: VertexId, n1: &Degree, n2: &Degree) -> Result<AlgebraElement<'g>, AlgebraError> {
    let mut q = AlgebraElement::zero(g);
    for alpha in g.paths_with_range(v, n1)? {
        if !g.paths_with_source(alpha.source(), n2)?.is_empty() {
            q = q.add(&AlgebraElement::generator(g, alpha.clone(), alpha))?;
        }
    }
    Ok(q)
}

/// All paths of a finite acyclic graph, or those with degree `≤ bound`.
fn all_paths(g: &KGraph, bound: Option<&Degree>) -> Result<Vec<Path>, AlgebraError> {
    let cap = match bound {
        Some(b) => b.clone(),
        None if g.is_acyclic() => Degree::splat(g.k(), g.num_vertices() as u32),
        None => return Err(AlgebraError::NotFinitelySummable),
    };
    let mut out = Vec::new();
    for n in cap.box_below() {
        out.extend(g.paths_of_degree(&n)?);
    }
    Ok(out)
}

/// `Σ_{(α,β) ∈ Λ ×_s^min Λ} ω_{α,β}(Θ_{x,y})` with
/// `ω_{α,β}(T) = |Λ^{d(β)} s(α)|^{-1} Σ_j ⟨e_j ⊗ s_α s_β*, T (e_j ⊗ s_α s_β*)⟩`.
/// Needs a finite acyclic graph unless `bound` truncates the pair set.
pub fn tau_tilde_rank_one<'g>(
    x: &ModuleElement<'g>,
    y: &ModuleElement<'g>,
    trace: &GraphTrace,
    bound: Option<&Degree>,
) -> Result<GaussianRational, AlgebraError> {
    let g = x.graph();
    trace.check(g).map_err(AlgebraError::NotAGraphTrace)?;
    let paths = all_paths(g, bound)?;
    let dim = spinor_dim(g.k());
    let mut acc = GaussianRational::zero();
    for alpha in &paths {
        for beta in &paths {
            if alpha.source() != beta.source() || !alpha.degree().meet(beta.degree()).is_zero() {
                continue;
            }
            let count = g.paths_with_source(alpha.source(), beta.degree())?.len();
            let weight = BigRational::new(1.into(), (count as i64).into());
            let w = AlgebraElement::generator(g, alpha.clone(), beta.clone());
            for j in 0..dim {
                let e = ModuleElement::basis(w.clone(), j);
                let te = theta_apply(x, y, &e)?;
                let val = inner_product_f(&e, &te)?.tau_g_unchecked(trace);
                acc += &val.scale_real(&weight);
            }
        }
    }
    Ok(acc)
}

/// `⟨y, x⟩ = τ_g((y|x)_R)`, the expected value of the rank-one trace.
pub fn pairing_tau<'g>(
    x: &ModuleElement<'g>,
    y: &ModuleElement<'g>,
    trace: &GraphTrace,
) -> Result<GaussianRational, AlgebraError> {
    inner_product_f(y, x)?.tau_g(trace)
}
