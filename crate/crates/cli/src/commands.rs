use std::collections::BTreeMap;

use kgraph_core::algebra::suite::{run_suite, SuiteConfig};
use kgraph_core::ktheory::k_theory;
use kgraph_core::spectral::{default_n_list, dixmier_estimate, pairing_report};
use kgraph_core::trace::{
    check_sufficient_condition, end_classes, find_ends, find_faithful_graph_trace, TraceCheck,
    TraceOutcome,
};
use kgraph_core::{Degree, KGraph};
use serde_json::{json, Value};

use crate::CliError;

pub struct Outcome {
    pub report: Value,
    pub summary: String,
    /// A checked property failed.
    pub violation: bool,
}

impl Outcome {
    fn ok(report: Value, summary: String) -> Self {
        Outcome {
            report,
            summary,
            violation: false,
        }
    }
}

pub fn validate(g: &KGraph) -> Outcome {
    let flags = g.flags();
    let summary = format!(
        "{} vertices, {} edges, rank {}; locally convex: {}",
        g.num_vertices(),
        g.num_edges(),
        g.k(),
        flags.locally_convex
    );
    Outcome::ok(
        json!({
            "k": g.k(),
            "vertices": g.num_vertices(),
            "edges": g.num_edges(),
            "squares": g.regime().squares.len(),
            "flags": flags,
        }),
        summary,
    )
}

pub fn trace(g: &KGraph, full_check: Option<u32>) -> Result<Outcome, CliError> {
    let outcome = find_faithful_graph_trace(g)?;
    Ok(match outcome {
        TraceOutcome::Faithful(t) => {
            let mut violation = t.check(g).is_err();
            let mut report = json!({"faithful_trace": t.to_named(g), "obstructions": []});
            if let Some(n) = full_check {
                let passed = t.satisfies(g, &TraceCheck::FullUpTo(Degree::splat(g.k(), n)));
                report["full_check"] = json!({"level": n, "passed": passed});
                violation |= !passed;
            }
            Outcome {
                summary: format!("faithful graph trace found on {} vertices", g.num_vertices()),
                report,
                violation,
            }
        }
        TraceOutcome::Obstructed(obs) => {
            let replayed = obs.iter().all(|o| o.replay(g));
            let kinds: Vec<&str> = obs.iter().map(|o| o.kind()).collect();
            Outcome {
                summary: format!("no faithful graph trace: {}", kinds.join(", ")),
                report: json!({
                    "faithful_trace": null,
                    "obstructions": obs.iter().map(|o| o.to_json(g)).collect::<Vec<_>>(),
                    "certificates_replay": replayed,
                }),
                violation: !replayed,
            }
        }
    })
}

pub fn ends(g: &KGraph) -> Outcome {
    let ends = find_ends(g);
    let classes = end_classes(&ends);
    let name = |v: usize| g.vertex_name(v).to_string();
    let descriptors: Vec<Value> = ends
        .iter()
        .map(|e| {
            json!({
                "rep": name(e.rep),
                "image": e.image.iter().map(|&v| name(v)).collect::<Vec<_>>(),
                "infinite_directions": e.infinite_directions().iter().map(|i| i + 1).collect::<Vec<_>>(),
            })
        })
        .collect();
    let sufficient = match check_sufficient_condition(g, None) {
        Ok(map) => {
            let named: BTreeMap<String, Vec<u32>> =
                map.iter().map(|(&v, d)| (name(v), d.coords().to_vec())).collect();
            json!({"holds": true, "levels": named})
        }
        Err(e) => json!({"holds": false, "reason": e.to_string()}),
    };
    Outcome::ok(
        json!({"ends": descriptors, "classes": classes, "sufficient_condition": sufficient}),
        format!("{} ends in {} classes", ends.len(), classes.len()),
    )
}

pub fn ktheory(g: &KGraph) -> Result<Outcome, CliError> {
    let summary = k_theory(g)?;
    let line = format!(
        "K0 rank {}, K1 rank {}; {}",
        summary.k0_rank, summary.k1_rank, summary.morita
    );
    Ok(Outcome::ok(serde_json::to_value(&summary).expect("plain data"), line))
}

pub fn algebra_check(g: &KGraph, degree_cap: Option<u32>, samples: usize, seed: u64) -> Result<Outcome, CliError> {
    let mut cfg = SuiteConfig::new(g.k());
    if let Some(d) = degree_cap {
        cfg.degree_cap = Degree::splat(g.k(), d);
    }
    cfg.samples = samples;
    cfg.seed = seed;
    let report = run_suite(g, &cfg)?;
    let mut lines = Vec::new();
    for (name, t) in &report.checks {
        lines.push(format!("{name}: {} passed, {} failed", t.passed, t.failed));
    }
    Ok(Outcome {
        violation: !report.all_passed(),
        summary: lines.join("\n"),
        report: serde_json::to_value(&report).expect("plain data"),
    })
}

pub fn dixmier(k: usize, nmax: u32) -> Result<Outcome, CliError> {
    let est = dixmier_estimate(k, &default_n_list(nmax))?;
    Ok(Outcome::ok(
        serde_json::to_value(&est).expect("plain data"),
        format!("k={k}: fitted {:.5} against C_k = {:.5} (rel. err {:.2e})", est.slope, est.c_k, est.rel_err),
    ))
}

pub fn pair(example: &str, n: usize, grid: usize, with_index: bool) -> Result<Outcome, CliError> {
    if example != "lambda_n" {
        return Err(CliError::Usage(format!("unknown example `{example}`")));
    }
    let report = pairing_report(n, grid, with_index)?;
    let index_ok = report.index.is_none_or(|i| i == report.chern);
    Ok(Outcome {
        summary: format!(
            "pairing {} = {} x (-1) x chern {}",
            report.pairing, report.core_multiplicity, report.chern
        ),
        violation: !report.chern_stable || !index_ok,
        report: serde_json::to_value(&report).expect("plain data"),
    })
}
