//! Exhaustive and randomised identity checks over one graph, shared by the
//! command line and the test suites.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::element::AlgebraElement;
use super::module::{
    finite_rank_apply, finite_rank_range, pairing_tau, tau_tilde_rank_one, ModuleElement,
};
use super::path_space::{self, Vector};
use super::random::{random_element, random_module_element};
use super::scalar::{rat, GaussianRational};
use crate::degree::Degree;
use crate::error::AlgebraError;
use crate::graph::{KGraph, Path};
use crate::trace::{find_faithful_graph_trace, GraphTrace, TraceOutcome};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub degree_cap: Degree,
    /// Random pairs per randomised check.
    pub samples: usize,
    pub seed: u64,
    /// Degree cap for the terms of random elements.
    pub random_cap: Degree,
    pub random_terms: usize,
}

impl SuiteConfig {
    pub fn new(k: usize) -> Self {
        SuiteConfig {
            degree_cap: Degree::splat(k, 2),
            samples: 100,
            seed: 7,
            random_cap: Degree::splat(k, 1),
            random_terms: 3,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    /// `"faithful"` or `"zero"` when no faithful trace exists.
    pub trace_kind: String,
    pub checks: BTreeMap<String, Tally>,
    /// First few failing cases, for diagnosis.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0)
    }

    pub fn passed(&self, name: &str) -> usize {
        self.checks.get(name).map_or(0, |t| t.passed)
    }

    fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.checks.entry(name.to_string()).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(format!("{name}: {}", detail()));
            }
        }
    }
}

/// All paths of degree `≤ cap`.
pub fn paths_up_to(g: &KGraph, cap: &Degree) -> Vec<Path> {
    let mut out = Vec::new();
    for n in cap.box_below() {
        out.extend(g.paths_of_degree(&n).expect("rank checked"));
    }
    out
}

/// Generator pairs `(μ, ν)` with `s(μ) = s(ν)` and both degrees `≤ cap`.
pub fn generators(g: &KGraph, cap: &Degree) -> Vec<(Path, Path)> {
    let paths = paths_up_to(g, cap);
    let mut by_source: BTreeMap<usize, Vec<&Path>> = BTreeMap::new();
    for p in &paths {
        by_source.entry(p.source()).or_default().push(p);
    }
    let mut out = Vec::new();
    for group in by_source.values() {
        for mu in group {
            for nu in group {
                out.push(((*mu).clone(), (*nu).clone()));
            }
        }
    }
    out
}

/// A faithful trace if one exists, otherwise the zero trace.
pub fn suite_trace(g: &KGraph) -> (GraphTrace, bool) {
    match find_faithful_graph_trace(g) {
        Ok(TraceOutcome::Faithful(t)) => (t, true),
        _ => (GraphTrace::constant(g, rat(0, 1)), false),
    }
}

fn minimal_splits(cap: &Degree) -> Vec<(Degree, Degree)> {
    let boxes = cap.box_below();
    let mut out = Vec::new();
    for a in &boxes {
        for b in &boxes {
            if a.meet(b).is_zero() {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn apply_vec(a: &AlgebraElement<'_>, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (x, c) in v {
        for (y, d) in path_space::apply(a, x) {
            let e = out.entry(y.clone()).or_default();
            *e += &(c * &d);
            if e.is_zero() {
                out.remove(&y);
            }
        }
    }
    out
}

pub fn run_ck_checks(g: &KGraph, cfg: &SuiteConfig, report: &mut SuiteReport) -> Result<(), AlgebraError> {
    let cap = &cfg.degree_cap;
    let paths = paths_up_to(g, cap);

    for u in g.vertices() {
        for v in g.vertices() {
            let prod = AlgebraElement::p(g, u).star_mult(&AlgebraElement::p(g, v))?;
            let want = if u == v { AlgebraElement::p(g, v) } else { AlgebraElement::zero(g) };
            report.record("CK1", prod.equals(&want)?, || format!("p_{u} p_{v}"));
        }
    }
    for lam in &paths {
        for mu in paths.iter().filter(|m| m.range() == lam.source()) {
            let prod = AlgebraElement::s(g, lam).star_mult(&AlgebraElement::s(g, mu))?;
            let want = AlgebraElement::s(g, &g.compose(lam, mu)?);
            report.record("CK2", prod.equals(&want)?, || {
                format!("{} · {}", g.path_label(lam), g.path_label(mu))
            });
        }
        let prod = AlgebraElement::s(g, lam).adjoint().star_mult(&AlgebraElement::s(g, lam))?;
        report.record("CK3", prod.equals(&AlgebraElement::p(g, lam.source()))?, || {
            g.path_label(lam)
        });
    }
    for v in g.vertices() {
        for n in cap.box_below() {
            let mut sum = AlgebraElement::zero(g);
            for lam in g.lambda_le(v, &n)? {
                sum = sum.add(&AlgebraElement::generator(g, lam.clone(), lam))?;
            }
            let p = AlgebraElement::p(g, v);
            report.record("CK4", p.equals(&sum)? && p.ck4_expand(&n) == sum, || {
                format!("{} at {n}", g.vertex_name(v))
            });
        }
    }
    Ok(())
}

pub fn run_expectation_checks(g: &KGraph, cfg: &SuiteConfig, report: &mut SuiteReport) -> Result<(), AlgebraError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut samples: Vec<AlgebraElement<'_>> = generators(g, &cfg.degree_cap)
        .into_iter()
        .map(|(m, n)| AlgebraElement::generator(g, m, n))
        .collect();
    for _ in 0..cfg.samples {
        samples.push(random_element(g, &mut rng, cfg.random_terms, &cfg.random_cap));
    }
    for a in &samples {
        let phi = a.gauge_expectation();
        let psi = a.diagonal_expectation();
        let support = a.degree_support();
        let mut ok = true;
        for n in &support {
            for m in &support {
                let twice = a.graded_part(m).graded_part(n);
                let want = if n == m { a.graded_part(n) } else { AlgebraElement::zero(g) };
                ok &= twice.equals(&want)?;
            }
        }
        report.record("PhiGraded", ok, || format!("{a:?}"));
        report.record("PhiIdempotent", phi.gauge_expectation().equals(&phi)?, || format!("{a:?}"));
        report.record(
            "PhiStar",
            a.adjoint().gauge_expectation().equals(&phi.adjoint())?,
            || format!("{a:?}"),
        );
        report.record("PsiIdempotent", psi.diagonal_expectation().equals(&psi)?, || format!("{a:?}"));
        report.record(
            "PsiStar",
            a.adjoint().diagonal_expectation().equals(&psi.adjoint())?,
            || format!("{a:?}"),
        );
        report.record("PsiPhi", phi.diagonal_expectation().equals(&psi)?, || format!("{a:?}"));
    }
    Ok(())
}

pub fn run_trace_checks(
    g: &KGraph,
    trace: &GraphTrace,
    faithful: bool,
    cfg: &SuiteConfig,
    report: &mut SuiteReport,
) -> Result<(), AlgebraError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    for _ in 0..cfg.samples {
        let a = random_element(g, &mut rng, cfg.random_terms, &cfg.random_cap);
        let b = random_element(g, &mut rng, cfg.random_terms, &cfg.random_cap);
        let ab = a.star_mult(&b)?.tau_g(trace)?;
        let ba = b.star_mult(&a)?.tau_g(trace)?;
        report.record("TraceProperty", ab == ba, || format!("{a:?} | {b:?}: {ab} vs {ba}"));

        let t = a.tau_g(trace)?;
        report.record("TraceGauge", a.gauge_expectation().tau_g(trace)? == t, || format!("{a:?}"));
        report.record("TraceCanonical", a.canonical().tau_g(trace)? == t, || format!("{a:?}"));
        if faithful && !a.is_zero_element() {
            let pos = a.adjoint().star_mult(&a)?.tau_g(trace)?;
            report.record("TracePositive", pos.is_positive_real(), || format!("{a:?}: {pos}"));
        }
    }
    Ok(())
}

/// `T_{v,n1,n2} = QΦ_n` on every generator, and `T = p_v Φ_n` whenever the
/// range projection `Q` is `p_v`.
pub fn run_finite_rank_checks(g: &KGraph, cfg: &SuiteConfig, report: &mut SuiteReport) -> Result<(), AlgebraError> {
    let gens = generators(g, &cfg.degree_cap);
    for v in g.vertices() {
        for (n1, n2) in minimal_splits(&cfg.degree_cap) {
            let n = n1.diff(&n2);
            let q = finite_rank_range(g, v, &n1, &n2)?;
            let pv = AlgebraElement::p(g, v);
            let q_is_pv = q.equals(&pv)?;
            for (mu, nu) in &gens {
                let z = ModuleElement::basis(AlgebraElement::generator(g, mu.clone(), nu.clone()), 0);
                let tz = finite_rank_apply(v, &n1, &n2, &z)?;
                let phz = z.graded_part(&n);
                report.record("FiniteRankQ", tz.equals(&phz.left_mul(&q)?)?, || {
                    format!("v={} n1={n1} n2={n2} z={}|{}", g.vertex_name(v), g.path_label(mu), g.path_label(nu))
                });
                if q_is_pv {
                    report.record("FiniteRankPv", tz.equals(&phz.left_mul(&pv)?)?, || {
                        format!("v={} n1={n1} n2={n2}", g.vertex_name(v))
                    });
                }
            }
        }
    }
    Ok(())
}

/// Path-space oracle: products and equality agree with the boundary-path
/// representation. Finite acyclic graphs only.
pub fn run_path_space_checks(g: &KGraph, cfg: &SuiteConfig, report: &mut SuiteReport) -> Result<(), AlgebraError> {
    if !g.is_acyclic() {
        return Ok(());
    }
    let basis = path_space::boundary_paths(g);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xba515);
    for _ in 0..cfg.samples {
        let a = random_element(g, &mut rng, cfg.random_terms, &cfg.random_cap);
        let b = random_element(g, &mut rng, cfg.random_terms, &cfg.random_cap);
        let ab = a.star_mult(&b)?;
        let ok = basis.iter().all(|x| {
            let unit: Vector = BTreeMap::from([(x.clone(), GaussianRational::one())]);
            path_space::apply(&ab, x) == apply_vec(&a, &apply_vec(&b, &unit))
        });
        report.record("OracleProduct", ok, || format!("{a:?} | {b:?}"));
        let sym = a.equals(&b)?;
        report.record("OracleEquality", sym == path_space::represented_equal(&a, &b, &basis), || {
            format!("{a:?} | {b:?}")
        });
        let expanded = a.ck4_expand(&cfg.random_cap);
        report.record(
            "OracleExpansion",
            a.equals(&expanded)? && path_space::represented_equal(&a, &expanded, &basis),
            || format!("{a:?}"),
        );
    }
    Ok(())
}

/// `Σ ω_{α,β}(Θ_{x,y}) = τ_g(y* x)` on random module elements. Finite
/// acyclic graphs only.
pub fn run_tau_tilde_checks(
    g: &KGraph,
    trace: &GraphTrace,
    cfg: &SuiteConfig,
    report: &mut SuiteReport,
) -> Result<(), AlgebraError> {
    if !g.is_acyclic() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7a0);
    for _ in 0..cfg.samples {
        let x = random_module_element(g, &mut rng, 2, &cfg.random_cap);
        let y = random_module_element(g, &mut rng, 2, &cfg.random_cap);
        let lhs = tau_tilde_rank_one(&x, &y, trace, None)?;
        let rhs = pairing_tau(&x, &y, trace)?;
        report.record("TauTilde", lhs == rhs, || format!("{lhs} vs {rhs}"));
    }
    Ok(())
}

/// Every suite, on one graph.
pub fn run_suite(g: &KGraph, cfg: &SuiteConfig) -> Result<SuiteReport, AlgebraError> {
    let (trace, faithful) = suite_trace(g);
    let mut report = SuiteReport {
        trace_kind: if faithful { "faithful" } else { "zero" }.to_string(),
        ..Default::default()
    };
    run_ck_checks(g, cfg, &mut report)?;
    run_expectation_checks(g, cfg, &mut report)?;
    run_trace_checks(g, &trace, faithful, cfg, &mut report)?;
    run_finite_rank_checks(g, cfg, &mut report)?;
    run_path_space_checks(g, cfg, &mut report)?;
    run_tau_tilde_checks(g, &trace, cfg, &mut report)?;
    Ok(report)
}
