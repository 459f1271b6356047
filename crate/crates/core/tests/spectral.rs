use std::f64::consts::PI;

use kgraph_core::spectral::clifford::GaussInt;
use kgraph_core::spectral::dixmier::fit_log_slope;
use kgraph_core::spectral::{
    bott_closed_form, bott_conjugate, bott_projector, chern_integral, chern_number,
    clifford_defect, constant_projector, constructive_deviation, default_n_list, dirac_symbol,
    dixmier_estimate, gamma_matrices, index_report, kasparov_remainder_decay, lambda_n_pairing,
    pairing_report, truncated_index, IntMatrix, M2,
};
use kgraph_core::{DegreeDiff, SpectralError};
use num_complex::Complex64;

fn diag(a: f64, b: f64) -> M2 {
    M2::new(Complex64::new(a, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(b, 0.0))
}

#[test]
fn clifford_identities_for_every_rank() {
    for k in 1..=6 {
        assert!(clifford_defect(&gamma_matrices(k)) < 1e-12);
    }
    let two = gamma_matrices(2);
    assert_eq!(two.omega.mul(&two.omega), IntMatrix::identity(2));
    assert_eq!(gamma_matrices(3).omega, IntMatrix::identity(2));
}

#[test]
fn graded_dirac_blocks_are_scalar() {
    for k in 1..=3 {
        let rep = gamma_matrices(k);
        let range: Vec<i64> = (-2..=2).collect();
        let mut n = vec![-2i64; k];
        loop {
            let s = dirac_symbol(&rep, &n);
            let norm: i64 = n.iter().map(|x| x * x).sum();
            assert_eq!(s.mul(&s), IntMatrix::identity(rep.dim()).scale(GaussInt::new(norm, 0)));
            let mut i = 0;
            while i < k {
                if n[i] < *range.last().unwrap() {
                    n[i] += 1;
                    break;
                }
                n[i] = range[0];
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
}

#[test]
fn dixmier_constants() {
    for (k, nmax) in [(1usize, 2000u32), (2, 300), (3, 60)] {
        let est = dixmier_estimate(k, &default_n_list(nmax)).unwrap();
        assert!(est.rel_err < 0.02, "k={k}: {} vs {}", est.slope, est.c_k);
        assert!(est.samples.windows(2).all(|w| w[0].raw_sum < w[1].raw_sum));
        let m = 1u64 << (k / 2);
        assert!(est.samples.iter().all(|s| s.eigencount % m == 0));
    }
    assert!((dixmier_estimate(2, &[5, 10]).unwrap().c_k - 2.0 * PI).abs() < 1e-12);
    // a coarser sample sits further from the limit
    let coarse = dixmier_estimate(3, &default_n_list(16)).unwrap();
    let fine = dixmier_estimate(3, &default_n_list(60)).unwrap();
    assert!(fine.rel_err < coarse.rel_err);
}

#[test]
fn dixmier_rejects_bad_input() {
    assert!(matches!(dixmier_estimate(2, &[10, 5]), Err(SpectralError::InvalidArgument(_))));
    // quadratic growth is not logarithmic
    let x: Vec<f64> = (1..10).map(|i| i as f64).collect();
    let y: Vec<f64> = x.iter().map(|v| v.exp()).collect();
    assert!(matches!(fit_log_slope(&x, &y, 0.05), Err(SpectralError::DivergenceDetected { .. })));
}

#[test]
fn bott_projector_properties() {
    let p = bott_closed_form(0.0, 2.0);
    assert!((p - diag(1.0, 0.0)).iter().all(|z| z.norm() < 1e-15));
    for (a, b) in [(0.4, 1.0), (3.0, 2.2), (5.5, 6.0)] {
        let p = bott_closed_form(a, b);
        assert!(((p[(0, 0)] + p[(1, 1)]).re - 1.0).abs() < 1e-12);
        assert!((p * p - p).iter().all(|z| z.norm() < 1e-12));
    }
}

#[test]
fn constructive_bott_form_disagrees_with_the_closed_form() {
    // The conjugation Y* diag(1,0) Y with Y = exp(iφK/4) exp(iS/4) is not the
    // displayed closed form; the check reports the gap.
    let gap = constructive_deviation(16, 16);
    assert!(gap > 0.1);
    assert!(matches!(bott_projector(16, 16), Err(SpectralError::ProjectorMismatch { .. })));
}

#[test]
fn chern_numbers() {
    for g in [32, 64, 128] {
        assert_eq!(chern_number(&bott_closed_form, g).unwrap(), 1);
        assert_eq!(chern_number(&bott_conjugate, g).unwrap(), -1);
    }
    assert_eq!(chern_number(&constant_projector(diag(1.0, 0.0)), 32).unwrap(), 0);
    assert!((chern_integral(&bott_closed_form, 64) - 1.0).abs() < 1e-6);
    assert!(matches!(
        chern_number(&bott_closed_form, 4),
        Err(SpectralError::NotQuantized { .. })
    ));
}

#[test]
fn truncated_index_matches_chern() {
    assert_eq!(truncated_index(&bott_closed_form, 8).unwrap(), 1);
    assert_eq!(index_report(&bott_conjugate, 8).index, -1);
    assert_eq!(truncated_index(&constant_projector(diag(1.0, 1.0)), 8).unwrap(), 0);
    assert_eq!(index_report(&constant_projector(diag(0.0, 0.0)), 8).index, 0);
    assert!(matches!(
        truncated_index(&bott_closed_form, 4),
        Err(SpectralError::InvalidArgument(_))
    ));
}

#[test]
fn lambda_n_pairings() {
    for n in 1..=5 {
        assert_eq!(lambda_n_pairing(n, 64).unwrap(), -(n as i64));
    }
    assert_ne!(lambda_n_pairing(2, 64).unwrap(), lambda_n_pairing(3, 64).unwrap());
    let report = pairing_report(3, 64, false).unwrap();
    assert!(report.chern_stable);
    assert_eq!((report.chern, report.core_multiplicity, report.pairing), (1, 3, -3));
}

#[test]
fn remainder_decay() {
    let zero = DegreeDiff::new(vec![0]);
    let one = DegreeDiff::new(vec![1]);
    assert!(kasparov_remainder_decay(&one, &zero, 100).unwrap() < 0.02);
    for d in [vec![1i64, 0], vec![2, -1], vec![0, 3]] {
        let mu = DegreeDiff::new(d);
        let nu = DegreeDiff::zero(2);
        let shells: Vec<f64> = [100, 200, 400]
            .iter()
            .map(|&n| kasparov_remainder_decay(&mu, &nu, n).unwrap())
            .collect();
        assert!(shells.windows(2).all(|w| w[1] < w[0]), "{shells:?}");
        assert_eq!(kasparov_remainder_decay(&mu, &mu, 50).unwrap(), 0.0);
    }
}
