use kgraph_core::algebra::suite::{generators, run_suite, SuiteConfig};
use kgraph_core::algebra::{
    dirac_apply, finite_rank_apply, finite_rank_range, inner_product_f, pairing_tau, rat,
    spinor_dim, tau_tilde_rank_one, theta_apply, AlgebraElement, GaussianRational, ModuleElement,
};
use kgraph_core::algebra::path_space::{boundary_paths, represented_equal};
use kgraph_core::algebra::random::{random_element, random_module_element};
use kgraph_core::spectral::gamma_matrices;
use kgraph_core::trace::GraphTrace;
use kgraph_core::{
    build_cycle, build_figure2, build_lambda_n, build_omega, AlgebraError, Degree, KGraph,
    RegimeChoice,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn deg(v: &[u32]) -> Degree {
    Degree::new(v.to_vec())
}

fn path<'a>(g: &KGraph, names: &[&str]) -> kgraph_core::Path {
    g.path_from_names(names).unwrap()
}

/// The Ω path with the given endpoints; paths in Ω are determined by them.
fn omega_path(g: &KGraph, from: &[u32], to: &[u32]) -> kgraph_core::Path {
    let r = g.vertex_id(&deg(from).to_string()).unwrap();
    let d = Degree::new(to.iter().zip(from).map(|(a, b)| a - b).collect());
    let ps = g.paths_with_range(r, &d).unwrap();
    assert_eq!(ps.len(), 1);
    ps.into_iter().next().unwrap()
}

#[test]
fn omega_product_example() {
    let g = build_omega(2, &deg(&[1, 1])).unwrap();
    let mu = omega_path(&g, &[0, 0], &[1, 0]);
    let nu = omega_path(&g, &[0, 0], &[0, 1]);
    let prod = AlgebraElement::s(&g, &mu).adjoint().star_mult(&AlgebraElement::s(&g, &nu)).unwrap();
    let alpha = omega_path(&g, &[1, 0], &[1, 1]);
    let beta = omega_path(&g, &[0, 1], &[1, 1]);
    assert_eq!(prod, AlgebraElement::generator(&g, alpha, beta));
}

#[test]
fn ck3_and_vertex_projections() {
    let g = build_lambda_n(3, 2).unwrap();
    let lam = path(&g, &["e2", "f1"]);
    let s = AlgebraElement::s(&g, &lam);
    assert!(s.adjoint().star_mult(&s).unwrap().equals(&AlgebraElement::p(&g, lam.source())).unwrap());

    let a = AlgebraElement::generator(&g, lam.clone(), g.path_from_names(&["f3", "f2"]).unwrap());
    for u in g.vertices() {
        let want = if u == lam.range() { a.clone() } else { AlgebraElement::zero(&g) };
        assert!(AlgebraElement::p(&g, u).star_mult(&a).unwrap().equals(&want).unwrap());
    }
}

#[test]
fn adjoint_rules() {
    let g = build_omega(2, &deg(&[1, 1])).unwrap();
    let mu = omega_path(&g, &[0, 0], &[1, 0]);
    let nu = omega_path(&g, &[0, 1], &[1, 1]);
    let nu = g.compose(&omega_path(&g, &[0, 0], &[0, 1]), &nu).unwrap();
    let mu = g.compose(&mu, &omega_path(&g, &[1, 0], &[1, 1])).unwrap();
    let a = AlgebraElement::term(&g, mu.clone(), nu.clone(), GaussianRational::i());
    let want = AlgebraElement::term(&g, nu, mu, GaussianRational::from_ints(0, -1));
    assert_eq!(a.adjoint(), want);
    assert_eq!(a.adjoint().adjoint(), a);
    let p = AlgebraElement::p(&g, 0);
    assert_eq!(p.adjoint(), p);
}

#[test]
fn figure2_relations() {
    let g = build_figure2(RegimeChoice::A, 2).unwrap();
    let v = g.vertex_id("v").unwrap();
    let s = |n: &str| AlgebraElement::s(&g, &path(&g, &[n]));
    let gg = s("g0").star_mult(&s("g0").adjoint()).unwrap();
    let ee = s("e0").star_mult(&s("e0").adjoint()).unwrap();
    let ff = s("f0").star_mult(&s("f0").adjoint()).unwrap();
    let rhs = ee.add(&ff).unwrap();
    assert!(gg.equals(&rhs).unwrap());
    assert!(gg.equals(&AlgebraElement::p(&g, v)).unwrap());

    let pv = AlgebraElement::p(&g, v);
    assert_eq!(pv.ck4_expand(&deg(&[1, 0])).len(), 2);
    assert_eq!(pv.ck4_expand(&deg(&[0, 1])).len(), 1);
    assert_eq!(pv.ck4_expand(&deg(&[0, 0])), pv);
    assert!(!gg.equals(&gg.add(&ee).unwrap()).unwrap());
}

#[test]
fn graded_parts() {
    let g = build_lambda_n(2, 1).unwrap();
    let mu = path(&g, &["e2", "f1"]);
    let nu = path(&g, &["e1"]);
    let a = AlgebraElement::generator(&g, mu.clone(), nu.clone());
    let n = mu.degree().diff(nu.degree());
    assert_eq!(a.graded_part(&n), a);
    assert!(a.gauge_expectation().is_empty());
    let p = AlgebraElement::p(&g, 0);
    assert!(p.graded_part(&n).is_empty());

    // Ψ kills off-diagonal terms of degree zero
    let x = path(&g, &["e1"]);
    let y = path(&g, &["f1"]);
    let b = AlgebraElement::generator(&g, x.clone(), y);
    assert!(b.diagonal_expectation().is_zero_element());
    let c = AlgebraElement::generator(&g, x.clone(), x);
    assert!(c.diagonal_expectation().equals(&c).unwrap());
}

#[test]
fn suite_on_small_graphs() {
    let corpus = [
        build_omega(2, &deg(&[1, 1])).unwrap(),
        build_lambda_n(2, 1).unwrap(),
        build_figure2(RegimeChoice::B, 1).unwrap(),
    ];
    for g in &corpus {
        let mut cfg = SuiteConfig::new(g.k());
        cfg.degree_cap = Degree::splat(g.k(), 1);
        cfg.samples = 25;
        let report = run_suite(g, &cfg).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures);
        assert!(report.passed("CK4") > 0 && report.passed("FiniteRankQ") > 0);
    }
}

#[test]
fn finite_rank_split_independence() {
    let g = build_lambda_n(3, 0).unwrap();
    let v = g.vertex_id("v2").unwrap();
    let gens = generators(&g, &deg(&[2, 1]));
    let splits = [(deg(&[1, 0]), deg(&[0, 0])), (deg(&[2, 1]), deg(&[1, 1])), (deg(&[1, 1]), deg(&[0, 1]))];
    for (n1, n2) in &splits {
        assert!(finite_rank_range(&g, v, n1, n2).unwrap().equals(&AlgebraElement::p(&g, v)).unwrap());
    }
    for (mu, nu) in gens {
        let z = ModuleElement::basis(AlgebraElement::generator(&g, mu, nu), 1);
        let first = finite_rank_apply(v, &splits[0].0, &splits[0].1, &z).unwrap();
        for (n1, n2) in &splits[1..] {
            assert!(finite_rank_apply(v, n1, n2, &z).unwrap().equals(&first).unwrap());
        }
    }
}

#[test]
fn path_space_oracle_agrees_on_omega() {
    let g = build_omega(2, &deg(&[2, 1])).unwrap();
    let basis = boundary_paths(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let a = random_element(&g, &mut rng, 3, &deg(&[1, 1]));
        let b = a.ck4_expand(&deg(&[1, 0]));
        assert!(a.equals(&b).unwrap());
        assert!(represented_equal(&a, &b, &basis));
        let c = b.add(&random_element(&g, &mut rng, 1, &deg(&[1, 1]))).unwrap();
        assert_eq!(a.equals(&c).unwrap(), represented_equal(&a, &c, &basis));
    }
}

#[test]
fn module_inner_product() {
    let g = build_omega(2, &deg(&[2, 1])).unwrap();
    let lam = omega_path(&g, &[0, 0], &[1, 1]);
    let x = ModuleElement::basis(AlgebraElement::s(&g, &lam), 1);
    let xx = inner_product_f(&x, &x).unwrap();
    assert!(xx.equals(&AlgebraElement::p(&g, lam.source())).unwrap());
    assert!(theta_apply(&x, &x, &x).unwrap().equals(&x).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cap = deg(&[1, 1]);
    for _ in 0..20 {
        let x = random_module_element(&g, &mut rng, 3, &cap);
        let y = random_module_element(&g, &mut rng, 3, &cap);
        let xy = inner_product_f(&x, &y).unwrap();
        assert!(xy.adjoint().equals(&inner_product_f(&y, &x).unwrap()).unwrap());
        let xx = inner_product_f(&x, &x).unwrap();
        assert_eq!(xx.is_zero_element(), x.is_zero_element());
    }
    assert!(inner_product_f(&ModuleElement::zero(&g), &x).unwrap().is_zero_element());
    assert!(matches!(
        ModuleElement::new(&g, vec![AlgebraElement::zero(&g)]),
        Err(AlgebraError::SpinorMismatch { expected: 2, got: 1 })
    ));
}

#[test]
fn dirac_squares_to_the_degree_norm() {
    for k in [1usize, 2, 3] {
        let m = Degree::splat(k, 2);
        let g = build_omega(k, &m).unwrap();
        let rep = gamma_matrices(k);
        let gens = generators(&g, &Degree::splat(k, 1));
        for (mu, nu) in gens.iter().take(60) {
            let n = mu.degree().diff(nu.degree());
            for j in 0..spinor_dim(k) {
                let x = ModuleElement::basis(AlgebraElement::generator(&g, mu.clone(), nu.clone()), j);
                let dx = dirac_apply(&x, &rep).unwrap();
                if n.is_zero() {
                    assert!(dx.is_zero_element());
                }
                let ddx = dirac_apply(&dx, &rep).unwrap();
                let want = x.scale(&GaussianRational::from_ints(n.norm_sq(), 0));
                assert!(ddx.equals(&want).unwrap());
            }
        }
    }
}

#[test]
fn dirac_rank_one_phase() {
    let g = build_cycle(1, 1).unwrap();
    let a = path(&g, &["a0", "a0", "a0"]);
    let x = ModuleElement::basis(AlgebraElement::generator(&g, a, g.vertex_path(0)), 0);
    let dx = dirac_apply(&x, &gamma_matrices(1)).unwrap();
    // γ¹ = -i, so i·3·γ¹ = 3
    assert!(dx.equals(&x.scale(&GaussianRational::from_ints(3, 0))).unwrap());
}

#[test]
fn tau_tilde_matches_the_pairing() {
    let g = build_omega(2, &deg(&[1, 1])).unwrap();
    let t = GraphTrace::constant(&g, rat(1, 1));
    let lam = omega_path(&g, &[0, 0], &[1, 0]);
    let x = ModuleElement::basis(AlgebraElement::s(&g, &lam), 0);
    let v = tau_tilde_rank_one(&x, &x, &t, None).unwrap();
    assert_eq!(v, GaussianRational::real(t.value(lam.source()).clone()));

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let x = random_module_element(&g, &mut rng, 2, &deg(&[1, 1]));
        let y = random_module_element(&g, &mut rng, 2, &deg(&[1, 1]));
        assert_eq!(
            tau_tilde_rank_one(&x, &y, &t, None).unwrap(),
            pairing_tau(&x, &y, &t).unwrap()
        );
    }
    // orthogonal supports pair to zero
    let a = ModuleElement::basis(AlgebraElement::p(&g, 0), 0);
    let b = ModuleElement::basis(AlgebraElement::p(&g, 3), 0);
    assert!(tau_tilde_rank_one(&a, &b, &t, None).unwrap().is_zero());

    let c = build_cycle(2, 3).unwrap();
    let x = ModuleElement::basis(AlgebraElement::p(&c, 0), 0);
    let tc = GraphTrace::constant(&c, rat(1, 1));
    assert!(matches!(
        tau_tilde_rank_one(&x, &x, &tc, None),
        Err(AlgebraError::NotFinitelySummable)
    ));
    assert!(tau_tilde_rank_one(&x, &x, &tc, Some(&deg(&[1, 0]))).is_ok());
}

#[test]
fn tau_rejects_non_traces() {
    let g = build_figure2(RegimeChoice::A, 2).unwrap();
    let w = g.vertex_id("w").unwrap();
    let one = GraphTrace::constant(&g, rat(1, 1));
    assert!(matches!(
        AlgebraElement::p(&g, w).tau_g(&one),
        Err(AlgebraError::NotAGraphTrace(_))
    ));
    let zero = GraphTrace::constant(&g, rat(0, 1));
    assert!(AlgebraElement::p(&g, w).tau_g(&zero).unwrap().is_zero());
}

#[test]
fn json_round_trip() {
    let g = build_lambda_n(2, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let a = random_element(&g, &mut rng, 4, &deg(&[1, 1]));
        let text = a.to_json();
        assert_eq!(AlgebraElement::from_json(&g, &text).unwrap(), a);
    }
    let p = AlgebraElement::p(&g, 2);
    assert_eq!(AlgebraElement::from_json(&g, &p.to_json()).unwrap(), p);
    assert!(AlgebraElement::from_json(&g, "[{\"mu\":[\"zz\"],\"nu\":[],\"re\":\"1\",\"im\":\"0\"}]").is_err());
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn trace_property_on_lambda_n(seed in any::<u64>()) {
            let g = build_lambda_n(3, 2).unwrap();
            let t = GraphTrace::constant(&g, rat(1, 1));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_element(&g, &mut rng, 3, &deg(&[1, 1]));
            let b = random_element(&g, &mut rng, 3, &deg(&[1, 1]));
            prop_assert_eq!(a.star_mult(&b).unwrap().tau_g(&t).unwrap(), b.star_mult(&a).unwrap().tau_g(&t).unwrap());
            if !a.is_zero_element() {
                prop_assert!(a.adjoint().star_mult(&a).unwrap().tau_g(&t).unwrap().is_positive_real());
            }
        }

        #[test]
        fn product_is_associative(seed in any::<u64>()) {
            let g = build_omega(2, &deg(&[2, 1])).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cap = deg(&[1, 1]);
            let a = random_element(&g, &mut rng, 2, &cap);
            let b = random_element(&g, &mut rng, 2, &cap);
            let c = random_element(&g, &mut rng, 2, &cap);
            let left = a.star_mult(&b).unwrap().star_mult(&c).unwrap();
            let right = a.star_mult(&b.star_mult(&c).unwrap()).unwrap();
            prop_assert!(left.equals(&right).unwrap());
            prop_assert!(a.star_mult(&b).unwrap().adjoint().equals(&b.adjoint().star_mult(&a.adjoint()).unwrap()).unwrap());
        }

        #[test]
        fn expectations_are_idempotent(seed in any::<u64>()) {
            let g = build_figure2(RegimeChoice::A, 2).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_element(&g, &mut rng, 4, &deg(&[1, 1]));
            let phi = a.gauge_expectation();
            let psi = a.diagonal_expectation();
            prop_assert!(phi.gauge_expectation().equals(&phi).unwrap());
            prop_assert!(psi.diagonal_expectation().equals(&psi).unwrap());
            prop_assert!(phi.diagonal_expectation().equals(&psi).unwrap());
            prop_assert!(a.canonical().equals(&a).unwrap());
        }
    }
}
