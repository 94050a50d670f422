mod common;

use common::{random_complex, random_hermitian, real, rng};
use numrad::linalg::{herm_eig, Complex64, ComplexMatrix};
use numrad::oracle::sweep_radius;
use numrad::radius::{
    dual_numerical_radius, dual_numerical_radius_solve, numerical_radius, numerical_radius_solve,
    omega, Certificate, NormOptions,
};
use numrad::sdp::SolveOptions;
use numrad::Error;
use proptest::prelude::*;

fn r(c: &ComplexMatrix) -> f64 {
    numerical_radius(c, &NormOptions::default()).unwrap().value
}

fn rdual(c: &ComplexMatrix) -> f64 {
    dual_numerical_radius(c, &NormOptions::default())
        .unwrap()
        .value
}

fn random_unitary(seed: u64, n: usize) -> ComplexMatrix {
    herm_eig(&random_hermitian(&mut rng(seed), n))
        .unwrap()
        .vectors
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn absolute_homogeneity(seed in any::<u64>(), n in 2usize..=4, re in -3.0..3.0f64, im in -3.0..3.0f64) {
        let c = random_complex(&mut rng(seed), n, n);
        let alpha = Complex64::new(re, im);
        let scaled = c.scale(alpha);
        let (a, b) = (r(&c), r(&scaled));
        prop_assert!((b - alpha.norm() * a).abs() <= 1e-8 * b.max(1.0));
        let (a, b) = (rdual(&c), rdual(&scaled));
        prop_assert!((b - alpha.norm() * a).abs() <= 1e-8 * b.max(1.0));
    }

    #[test]
    fn unitary_similarity_invariance(seed in any::<u64>(), n in 2usize..=4) {
        let c = random_complex(&mut rng(seed), n, n);
        let u = random_unitary(seed ^ 0x5eed, n);
        let rotated = u.matmul(&c).matmul(&u.adjoint());
        prop_assert!((r(&c) - r(&rotated)).abs() <= 1e-7);
    }

    #[test]
    fn transpose_invariance(seed in any::<u64>(), n in 2usize..=5) {
        let c = random_complex(&mut rng(seed), n, n);
        prop_assert!((r(&c) - r(&c.transpose())).abs() <= 1e-7);
    }

    #[test]
    fn hermitian_specialization(seed in any::<u64>(), n in 1usize..=5) {
        let h = random_hermitian(&mut rng(seed), n);
        let eig = h.eig().unwrap().values;
        let spectral = eig.iter().map(|l| l.abs()).fold(0.0, f64::max);
        let trace_norm: f64 = eig.iter().map(|l| l.abs()).sum();
        prop_assert!((r(h.as_matrix()) - spectral).abs() <= 1e-6);
        prop_assert!((rdual(h.as_matrix()) - trace_norm).abs() <= 1e-6);
    }
}

#[test]
fn radius_dual_is_feasible_for_the_dual_norm() {
    let mut g = rng(11);
    for n in 2..=5 {
        let c = random_complex(&mut g, n, n);
        let sol = numerical_radius_solve(&c, &SolveOptions::default()).unwrap();
        let f = &sol.dual_witness;
        let pairing = f.adjoint().matmul(&c).trace().re;
        assert!((pairing - sol.result.value).abs() <= 1e-7);
        assert!(rdual(f) <= 1.0 + 1e-6, "r∨(F) = {}", rdual(f));
    }
}

#[test]
fn dual_radius_witness_lies_in_the_radius_ball() {
    let mut g = rng(12);
    for n in 2..=5 {
        let c = random_complex(&mut g, n, n);
        let sol = dual_numerical_radius_solve(&c, &SolveOptions::default()).unwrap();
        let e = &sol.dual_witness;
        assert!(sweep_radius(e, 1e-9).unwrap().value <= 1.0 + 1e-6);
        let pairing = e.adjoint().matmul(&c).trace().re;
        assert!((pairing - sol.result.value).abs() <= 1e-6);
    }
}

#[test]
fn certificates_agree_with_values() {
    let opts = NormOptions {
        certificate: true,
        ..NormOptions::default()
    };
    let mut g = rng(13);
    for n in 2..=5 {
        let c = random_complex(&mut g, n, n);
        let rr = numerical_radius(&c, &opts).unwrap();
        let w = rr.certificate.as_ref().unwrap();
        assert!(matches!(w, Certificate::RadiusWitness { .. }));
        assert!((w.value(&c) - rr.value).abs() <= 2e-7);

        let rd = dual_numerical_radius(&c, &opts).unwrap();
        let d = rd.certificate.as_ref().unwrap();
        assert!((d.value(&c) - rd.value).abs() <= 1e-6);
        let err = d.reconstruct(n).unwrap().sub(&c).frobenius_norm();
        assert!(err <= 1e-6 * c.frobenius_norm().max(1.0));
    }
}

#[test]
fn spec_anchor_values() {
    let nil = real(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
    assert!((r(&nil) - 0.5).abs() < 1e-7);
    assert!((rdual(&nil) - 2.0).abs() < 1e-6);
    assert!((r(&real(&[vec![1.0, 0.0], vec![0.0, -1.0]])) - 1.0).abs() < 1e-7);
    assert!((rdual(&real(&[vec![2.0, 0.0], vec![0.0, -3.0]])) - 5.0).abs() < 1e-6);
    assert!((rdual(&ComplexMatrix::identity(2)) - 2.0).abs() < 1e-6);
    assert_eq!(omega(&ComplexMatrix::identity(2)), 3);
}

#[test]
fn one_by_one_is_absolute_value() {
    let c = ComplexMatrix::new(1, 1, vec![Complex64::new(3.0, -4.0)]).unwrap();
    assert!((r(&c) - 5.0).abs() < 1e-7);
    assert!((rdual(&c) - 5.0).abs() < 1e-6);
}

#[test]
fn rejects_non_square_input() {
    let c = ComplexMatrix::zeros(3, 2);
    assert!(matches!(
        numerical_radius(&c, &NormOptions::default()),
        Err(Error::NotSquare { rows: 3, cols: 2 })
    ));
}
