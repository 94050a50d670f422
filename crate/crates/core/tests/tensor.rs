mod common;

use common::{random_tensor, rng};
use numrad::linalg::{norms, Complex64, ComplexMatrix};
use numrad::radius::NormOptions;
use numrad::tensor::{
    symmetrize_dual_witness, tensor_nuclear, tensor_spectral, tensor_spectral_sweep,
    trilinear_eval, Tensor2,
};
use rand::Rng;

fn spectral(t: &Tensor2) -> f64 {
    tensor_spectral(t, &NormOptions::default()).unwrap().value
}

fn nuclear(t: &Tensor2) -> f64 {
    tensor_nuclear(t, &NormOptions::default()).unwrap().value
}

fn slice_matrix(t: &Tensor2, k: usize) -> ComplexMatrix {
    let (m, n) = t.dims();
    ComplexMatrix::from_fn(m, n, |i, j| t.get(k, i, j).into())
}

fn unit(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    let v: Vec<f64> = (0..len).map(|_| rng.random_range(-1.0..1.0)).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter().map(|x| x / norm).collect()
}

#[test]
fn frobenius_pairing_bound() {
    let mut g = rng(31);
    for k in 0..8 {
        let t = random_tensor(&mut g, 1 + k % 3, 1 + k % 4);
        let fro2 = t.frobenius_norm().powi(2);
        assert!(fro2 <= spectral(&t) * nuclear(&t) * (1.0 + 1e-6));
    }
}

#[test]
fn sdp_agrees_with_sweep() {
    let mut g = rng(32);
    for k in 0..10 {
        let t = random_tensor(&mut g, 1 + k % 4, 1 + (k / 2) % 4);
        let sweep = tensor_spectral_sweep(&t, 1e-7).unwrap();
        assert!((spectral(&t) - sweep).abs() <= 1e-6);
    }
}

#[test]
fn rank_one_tensors_are_exact() {
    let mut g = rng(33);
    for (m, n) in [(2, 2), (2, 3), (3, 4)] {
        let (x, y, z) = (unit(&mut g, 2), unit(&mut g, m), unit(&mut g, n));
        let s = g.random_range(0.5..3.0);
        let slice = |k: usize| (0..m * n).map(|p| s * x[k] * y[p / n] * z[p % n]).collect();
        let t = Tensor2::new(m, n, slice(0), slice(1)).unwrap();
        assert!((spectral(&t) - s).abs() <= 1e-7);
        assert!((nuclear(&t) - s).abs() <= 1e-7);
        assert!((trilinear_eval(&t, &x, &y, &z).unwrap() - s).abs() <= 1e-12);
    }
}

#[test]
fn single_slice_reduces_to_matrix_norms() {
    let mut g = rng(34);
    for (m, n) in [(1, 3), (2, 2), (3, 2)] {
        let t = random_tensor(&mut g, m, n);
        let t = Tensor2::new(m, n, t.slice(0).to_vec(), vec![0.0; m * n]).unwrap();
        let nm = norms(&slice_matrix(&t, 0)).unwrap();
        assert!((spectral(&t) - nm.op).abs() <= 1e-6);
        assert!((nuclear(&t) - nm.nuclear).abs() <= 1e-6);
        assert!((tensor_spectral_sweep(&t, 1e-9).unwrap() - nm.op).abs() <= 1e-9);
    }
}

#[test]
fn nuclear_is_at_most_sum_of_slice_norms() {
    let mut g = rng(35);
    for k in 0..6 {
        let t = random_tensor(&mut g, 2 + k % 2, 2 + k % 3);
        let bound = norms(&slice_matrix(&t, 0)).unwrap().nuclear
            + norms(&slice_matrix(&t, 1)).unwrap().nuclear;
        assert!(nuclear(&t) <= bound + 1e-6);
    }
}

#[test]
fn rotation_tensor_anchors() {
    let t = Tensor2::from_slices(
        &[vec![1.0, 0.0], vec![0.0, 1.0]],
        &[vec![0.0, -1.0], vec![1.0, 0.0]],
    )
    .unwrap();
    assert!((spectral(&t) - 1.0).abs() <= 1e-6);
    assert!((nuclear(&t) - 4.0).abs() <= 1e-5);
    assert_eq!(
        trilinear_eval(&t, &[1.0, 0.0], &[1.0, 0.0], &[1.0, 0.0]).unwrap(),
        1.0
    );
    assert_eq!(
        trilinear_eval(&t, &[0.0, 0.0], &[1.0, 0.0], &[1.0, 0.0]).unwrap(),
        0.0
    );
}

#[test]
fn symmetrization_fixed_point_and_diagonal_blocks() {
    let u = ComplexMatrix::new(
        1,
        2,
        vec![Complex64::new(0.5, -1.0), Complex64::new(2.0, 0.25)],
    )
    .unwrap();
    let e = ComplexMatrix::from_fn(3, 3, |i, j| match (i, j) {
        (0, j) if j > 0 => u[(0, j - 1)],
        (i, 0) if i > 0 => u[(0, i - 1)],
        _ => Complex64::new(0.0, 0.0),
    });
    assert_eq!(symmetrize_dual_witness(&e, 1, 2).unwrap(), e);

    let diag = ComplexMatrix::from_fn(3, 3, |i, j| {
        if (i == 0) == (j == 0) {
            Complex64::new(1.0 + i as f64, j as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    assert!(symmetrize_dual_witness(&diag, 1, 2).unwrap().is_zero());
    assert!(symmetrize_dual_witness(&diag, 2, 2).is_err());
}
