#![allow(dead_code)]

use numrad::linalg::{Complex64, ComplexMatrix, HermitianMatrix};
use numrad::tensor::Tensor2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in `[-1, 1] + i[-1, 1]`.
pub fn random_complex(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
    })
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> HermitianMatrix {
    random_complex(rng, n, n).hermitian_part()
}

pub fn random_tensor(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Tensor2 {
    let mut slice = || (0..m * n).map(|_| rng.random_range(-1.0..=1.0)).collect();
    let f1 = slice();
    let f2 = slice();
    Tensor2::new(m, n, f1, f2).unwrap()
}

/// The fixed 50-matrix suite: sizes cycle through 2..=6.
pub fn suite() -> Vec<ComplexMatrix> {
    let mut r = rng(20_240_501);
    (0..50)
        .map(|k| random_complex(&mut r, 2 + k % 5, 2 + k % 5))
        .collect()
}

pub fn real(rows: &[Vec<f64>]) -> ComplexMatrix {
    ComplexMatrix::from_real_rows(rows).unwrap()
}
