//! Acceptance gate: one pass/fail line per criterion, with timings.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use kgraph_core::algebra::suite::{run_suite, run_tau_tilde_checks, suite_trace, SuiteConfig, SuiteReport};
use kgraph_core::ktheory::{end_group, k_theory};
use kgraph_core::spectral::{
    bott_closed_form, chern_integral, default_n_list, dixmier_estimate, kasparov_remainder_decay,
};
use kgraph_core::trace::{
    check_sufficient_condition, end_classes, find_ends, find_faithful_graph_trace,
    trace_from_end_assignment, TraceCheck, TraceOutcome,
};
use kgraph_core::{build_figure2, build_lambda_n, build_omega, Degree, DegreeDiff, KGraph, RegimeChoice};
use num_rational::BigRational;
use serde_json::Value;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

fn kgraph(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_kgraph"))
        .args(args)
        .output()
        .expect("binary runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

fn corpus() -> Vec<(&'static str, KGraph)> {
    vec![
        ("Omega_2(1,1)", build_omega(2, &Degree::new(vec![1, 1])).unwrap()),
        ("Omega_2(2,1)", build_omega(2, &Degree::new(vec![2, 1])).unwrap()),
        ("Omega_3(1,1,1)", build_omega(3, &Degree::new(vec![1, 1, 1])).unwrap()),
        ("Lambda_3 tail 2", build_lambda_n(3, 2).unwrap()),
        ("Figure-2 truncation", build_figure2(RegimeChoice::A, 2).unwrap()),
    ]
}

fn figure2_obstruction() -> Verdict {
    let (code, out) = kgraph(&["trace", "--builder", "figure2:A"]);
    let forced_w = out["obstructions"].as_array().is_some_and(|obs| {
        obs.iter().any(|o| {
            o["kind"] == "ForcedZeroVertex"
                && o["vertices"].as_array().is_some_and(|v| v.iter().any(|x| x == "w"))
        })
    });
    let ok = code == 0 && out["faithful_trace"].is_null() && forced_w && out["certificates_replay"] == true;
    verdict(ok, format!("exit {code}, faithful_trace null: {}, w forced to zero: {forced_w}", out["faithful_trace"].is_null()))
}

fn lambda_n_trace_and_k_theory() -> Verdict {
    let mut bad = Vec::new();
    for n in [1, 2, 3, 5] {
        for tail in [0, 2] {
            let g = build_lambda_n(n, tail).unwrap();
            let constant = match find_faithful_graph_trace(&g).unwrap() {
                TraceOutcome::Faithful(t) => {
                    let cycle: Vec<_> = (1..=n).map(|i| g.vertex_id(&format!("v{i}")).unwrap()).collect();
                    cycle.iter().all(|&v| t.value(v) == t.value(cycle[0]))
                }
                TraceOutcome::Obstructed(_) => false,
            };
            let kt = k_theory(&g).unwrap();
            let ok = constant
                && kt.classes.len() == 1
                && kt.classes[0].rank == 2
                && kt.k0_rank == 2
                && kt.k1_rank == 2;
            if !ok {
                bad.push(format!("n={n} tail={tail}"));
            }
        }
    }
    verdict(bad.is_empty(), if bad.is_empty() { "8 graphs: trace constant on cycle, K0 = K1 = Z^2".into() } else { format!("failed: {bad:?}") })
}

fn pairing_quantization() -> Verdict {
    let mut pairings = Vec::new();
    let mut ok = true;
    for n in 1..=5 {
        let (code, out) = kgraph(&["pair", "--example", "lambda_n", "--n", &n.to_string()]);
        let p = out["pairing"].as_i64();
        ok &= code == 0 && p == Some(-n) && out["chern_stable"] == true && out["index"] == out["chern"];
        pairings.push(p);
    }
    let bott = |phi: f64, theta: f64| bott_closed_form(phi, theta);
    let grid: Vec<f64> = [32, 64, 128].iter().map(|&m| chern_integral(&bott, m)).collect();
    let quantized = (grid[1] - grid[1].round()).abs() < 1e-6;
    let stable = grid.iter().all(|c| (c - grid[1]).abs() < 1e-6);
    ok &= quantized && stable;
    verdict(ok, format!("pairings {pairings:?}; chern at 32/64/128 = {grid:.9?}"))
}

fn dixmier_constants() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, nmax) in [(1, 2000), (2, 300), (3, 60)] {
        match dixmier_estimate(k, &default_n_list(nmax)) {
            Ok(e) => {
                ok &= e.rel_err < 0.02;
                parts.push(format!("k={k}: {:.4} vs {:.4} ({:.1e})", e.slope, e.c_k, e.rel_err));
            }
            Err(err) => {
                ok = false;
                parts.push(format!("k={k}: {err}"));
            }
        }
    }
    verdict(ok, parts.join("; "))
}

fn ck_suite() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g) in corpus() {
        let mut cfg = SuiteConfig::new(g.k());
        cfg.degree_cap = Degree::splat(g.k(), 2);
        cfg.samples = 100;
        let report = run_suite(&g, &cfg).unwrap();
        let required = ["CK1", "CK2", "CK3", "CK4", "PhiGraded", "PhiIdempotent", "PsiPhi", "FiniteRankQ"];
        let present = required.iter().all(|c| report.passed(c) > 0);
        let pairs = report.passed("TraceProperty");
        let good = report.all_passed() && present && pairs >= 100;
        ok &= good;
        let checked: usize = report.checks.values().map(|t| t.passed + t.failed).sum();
        parts.push(format!("{name}: {checked} checks, {pairs} trace pairs{}", if good { "" } else { " FAILED" }));
    }
    verdict(ok, parts.join("; "))
}

fn tau_tilde() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.is_acyclic()) {
        let mut cfg = SuiteConfig::new(g.k());
        cfg.samples = 50;
        let mut report = SuiteReport::default();
        let (trace, _) = suite_trace(&g);
        run_tau_tilde_checks(&g, &trace, &cfg, &mut report).unwrap();
        let t = report.checks.get("TauTilde").cloned().unwrap_or_default();
        ok &= t.failed == 0 && t.passed >= 50;
        parts.push(format!("{name}: {}/{}", t.passed, t.passed + t.failed));
    }
    verdict(ok, parts.join("; "))
}

fn oracle_equivalences() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g) in corpus() {
        let mut mismatches = 0;
        for n in Degree::splat(g.k(), 3).box_below() {
            for v in g.vertices() {
                let mut fast = g.lambda_le(v, &n).unwrap();
                let mut slow = g.lambda_le_bruteforce(v, &n).unwrap();
                fast.sort();
                slow.sort();
                mismatches += usize::from(fast != slow);
            }
        }
        let ends = find_ends(&g);
        let groups_stable = ends.iter().all(|e| end_group(e, g.k()).is_ok());
        let end_trace = match check_sufficient_condition(&g, None) {
            Ok(n_map) => {
                let weights: BTreeMap<usize, BigRational> = (0..end_classes(&ends).len())
                    .map(|c| (c, BigRational::from_integer(1.into())))
                    .collect();
                let t = trace_from_end_assignment(&g, &n_map, &weights).unwrap();
                let full = t.satisfies(&g, &TraceCheck::FullUpTo(Degree::splat(g.k(), 2)));
                let proportional = match find_faithful_graph_trace(&g).unwrap() {
                    TraceOutcome::Faithful(lp) => g
                        .vertices()
                        .all(|v| t.value(v) * lp.value(0) == lp.value(v) * t.value(0)),
                    TraceOutcome::Obstructed(_) => false,
                };
                if full && proportional { "end trace ok" } else { "end trace FAILED" }
            }
            Err(_) => "no ends, end trace n/a",
        };
        let good = mismatches == 0 && groups_stable && end_trace != "end trace FAILED";
        ok &= good;
        parts.push(format!("{name}: lambda_le mismatches {mismatches}, {} end groups stable: {groups_stable}, {end_trace}", ends.len()));
    }
    verdict(ok, parts.join("; "))
}

fn decay() -> Verdict {
    let diffs = [
        (vec![1, 0], vec![0, 0]),
        (vec![0, 2], vec![1, 0]),
        (vec![3, 0], vec![0, 1]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (mu, nu) in diffs {
        let (mu, nu) = (DegreeDiff::new(mu), DegreeDiff::new(nu));
        let vals: Vec<f64> = [100, 200, 400]
            .iter()
            .map(|&n| kasparov_remainder_decay(&mu, &nu, n).unwrap())
            .collect();
        ok &= vals.windows(2).all(|w| w[1] < w[0]);
        parts.push(vals.iter().map(|v| format!("{v:.3e}")).collect::<Vec<_>>().join(" > "));
    }
    verdict(ok, parts.join("; "))
}

#[test]
fn acceptance() {
    let criteria: [(&str, u64, fn() -> Verdict); 8] = [
        ("1 figure-2 obstruction", 1, figure2_obstruction),
        ("2 lambda_n trace and K-theory", 5, lambda_n_trace_and_k_theory),
        ("3 pairing quantization", 30, pairing_quantization),
        ("4 dixmier constants", 60, dixmier_constants),
        ("5 symbolic CK suite", 120, ck_suite),
        ("6 tau-tilde on rank-ones", 30, tau_tilde),
        ("7 oracle equivalences", 60, oracle_equivalences),
        ("8 remainder decay", 1, decay),
    ];
    let mut failed = Vec::new();
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let pass = v.passed && in_time;
        println!(
            "[{}] {name} ({:.2}s / {budget}s): {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            v.detail
        );
        if !pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
