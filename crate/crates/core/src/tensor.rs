//! Spectral and nuclear norms of real `2 × m × n` tensors, computed from the
//! numerical radius of a complex symmetric `(m+n) × (m+n)` assembly.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::oracle::maximize_periodic;
use crate::radius::{
    dual_numerical_radius_solve, numerical_radius_solve, NormOptions, NormResult, Quantity,
};

/// Real `2 × m × n` tensor stored as two row-major `m × n` slices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tensor2 {
    m: usize,
    n: usize,
    slices: [Vec<f64>; 2],
}

impl Tensor2 {
    pub fn new(m: usize, n: usize, f1: Vec<f64>, f2: Vec<f64>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidProblem(
                "tensor dimensions must be positive".into(),
            ));
        }
        for (k, f) in [&f1, &f2].into_iter().enumerate() {
            if f.len() != m * n {
                return Err(Error::DimensionMismatch(format!(
                    "slice {} has {} entries, expected {}",
                    k + 1,
                    f.len(),
                    m * n
                )));
            }
            if let Some(p) = f.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite {
                    row: p / n,
                    col: p % n,
                });
            }
        }
        Ok(Self {
            m,
            n,
            slices: [f1, f2],
        })
    }

    /// From two slices given as rows.
    pub fn from_slices(f1: &[Vec<f64>], f2: &[Vec<f64>]) -> Result<Self> {
        let m = f1.len();
        let n = f1.first().map_or(0, Vec::len);
        if f2.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "slices have {m} and {} rows",
                f2.len()
            )));
        }
        let flatten = |f: &[Vec<f64>]| -> Result<Vec<f64>> {
            if let Some(row) = f.iter().find(|r| r.len() != n) {
                return Err(Error::DimensionMismatch(format!(
                    "ragged slice: row of length {} in a slice of width {n}",
                    row.len()
                )));
            }
            Ok(f.concat())
        };
        Self::new(m, n, flatten(f1)?, flatten(f2)?)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Entry `T[k][i][j]` with `k ∈ {0, 1}`.
    pub fn get(&self, k: usize, i: usize, j: usize) -> f64 {
        self.slices[k][i * self.n + j]
    }

    pub fn slice(&self, k: usize) -> &[f64] {
        &self.slices[k]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.slices
            .iter()
            .flatten()
            .map(|v| v * v)
            .sum::<f64>()
            .sqrt()
    }

    /// `cos θ F₁ + sin θ F₂` as a complex matrix with zero imaginary part.
    fn combination(&self, theta: f64) -> ComplexMatrix {
        let (c, s) = (theta.cos(), theta.sin());
        ComplexMatrix::from_fn(self.m, self.n, |i, j| {
            (c * self.get(0, i, j) + s * self.get(1, i, j)).into()
        })
    }
}

/// `S(F₁) + iS(F₂) = [0, F₁ + iF₂; F₁ᵀ + iF₂ᵀ, 0]`, a complex symmetric matrix.
pub fn assemble_c(t: &Tensor2) -> ComplexMatrix {
    let (m, n) = t.dims();
    ComplexMatrix::from_fn(m + n, m + n, |i, j| {
        if i < m && j >= m {
            Complex64::new(t.get(0, i, j - m), t.get(1, i, j - m))
        } else if i >= m && j < m {
            Complex64::new(t.get(0, j, i - m), t.get(1, j, i - m))
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Spectral norm, equal to the numerical radius of the assembly.
pub fn tensor_spectral(t: &Tensor2, opts: &NormOptions) -> Result<NormResult> {
    let c = assemble_c(t);
    let mut result = if c.is_zero() {
        zero(Quantity::TensorSpectral)
    } else {
        numerical_radius_solve(&c, &opts.solver)?.result
    };
    result.quantity = Quantity::TensorSpectral;
    Ok(result)
}

/// Nuclear norm, half the dual numerical radius of the assembly.
pub fn tensor_nuclear(t: &Tensor2, opts: &NormOptions) -> Result<NormResult> {
    let c = assemble_c(t);
    if c.is_zero() {
        return Ok(zero(Quantity::TensorNuclear));
    }
    let mut result = dual_numerical_radius_solve(&c, &opts.solver)?.result;
    result.quantity = Quantity::TensorNuclear;
    result.value /= 2.0;
    result.gap /= 2.0;
    Ok(result)
}

fn zero(quantity: Quantity) -> NormResult {
    NormResult {
        quantity,
        value: 0.0,
        gap: 0.0,
        iterations: 0,
        status: crate::sdp::SolveStatus::Optimal,
        certificate: None,
    }
}

/// `max_θ σ₁(cos θ F₁ + sin θ F₂)`, computed without the SDP.
pub fn tensor_spectral_sweep(t: &Tensor2, eps: f64) -> Result<f64> {
    let lipschitz = t.frobenius_norm();
    if lipschitz == 0.0 {
        return Ok(0.0);
    }
    let (_, value) = maximize_periodic(
        |theta| Ok(crate::linalg::norms(&t.combination(theta))?.op),
        std::f64::consts::PI,
        lipschitz,
        eps,
    )?;
    Ok(value)
}

/// `Σ T[k][i][j] xₖ yᵢ zⱼ`.
pub fn trilinear_eval(t: &Tensor2, x: &[f64], y: &[f64], z: &[f64]) -> Result<f64> {
    let (m, n) = t.dims();
    if x.len() != 2 || y.len() != m || z.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected vectors of length (2, {m}, {n}), got ({}, {}, {})",
            x.len(),
            y.len(),
            z.len()
        )));
    }
    let mut total = 0.0;
    for (k, xk) in x.iter().enumerate() {
        for (i, yi) in y.iter().enumerate() {
            for (j, zj) in z.iter().enumerate() {
                total += t.get(k, i, j) * xk * yi * zj;
            }
        }
    }
    Ok(total)
}

/// Clears the diagonal blocks of an `(m+n)`-square witness and replaces it by
/// `(G + Gᵀ) / 2`. On an assembly `C`, `Re tr(C D*) = Re tr(C E*)` and the
/// result keeps the complex symmetric shape of the assembly.
pub fn symmetrize_dual_witness(e: &ComplexMatrix, m: usize, n: usize) -> Result<ComplexMatrix> {
    let dim = m + n;
    if e.rows() != dim || e.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "witness must be {dim}x{dim}, got {}x{}",
            e.rows(),
            e.cols()
        )));
    }
    let off = |i: usize, j: usize| {
        if (i < m) != (j < m) {
            e[(i, j)]
        } else {
            Complex64::new(0.0, 0.0)
        }
    };
    Ok(ComplexMatrix::from_fn(dim, dim, |i, j| {
        0.5 * (off(i, j) + off(j, i))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> NormOptions {
        NormOptions::default()
    }

    #[test]
    fn assembly_examples() {
        let t = Tensor2::from_slices(&[vec![1.0]], &[vec![0.0]]).unwrap();
        let want = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(assemble_c(&t), want);

        let t = Tensor2::from_slices(&[vec![0.0]], &[vec![1.0]]).unwrap();
        let c = assemble_c(&t);
        assert_eq!(c[(0, 1)], Complex64::new(0.0, 1.0));
        assert_eq!(c[(1, 0)], Complex64::new(0.0, 1.0));
        assert_eq!(c, c.transpose());
    }

    #[test]
    fn one_by_one_norms() {
        let t = Tensor2::from_slices(&[vec![1.0]], &[vec![0.0]]).unwrap();
        assert!((tensor_spectral(&t, &opts()).unwrap().value - 1.0).abs() < 1e-7);
        assert!((tensor_nuclear(&t, &opts()).unwrap().value - 1.0).abs() < 1e-6);

        let t = Tensor2::from_slices(&[vec![0.6]], &[vec![0.8]]).unwrap();
        assert!((tensor_spectral(&t, &opts()).unwrap().value - 1.0).abs() < 1e-7);
        assert!((tensor_spectral_sweep(&t, 1e-9).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn identity_and_rotation_slices() {
        let t = Tensor2::from_slices(
            &[vec![1.0, 0.0], vec![0.0, 1.0]],
            &[vec![0.0, -1.0], vec![1.0, 0.0]],
        )
        .unwrap();
        let spectral = tensor_spectral(&t, &opts()).unwrap().value;
        let sweep = tensor_spectral_sweep(&t, 1e-9).unwrap();
        assert!((spectral - sweep).abs() < 1e-7);
        assert!((sweep - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_tensor() {
        let t = Tensor2::new(2, 3, vec![0.0; 6], vec![0.0; 6]).unwrap();
        assert_eq!(tensor_spectral(&t, &opts()).unwrap().value, 0.0);
        assert_eq!(tensor_nuclear(&t, &opts()).unwrap().value, 0.0);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Tensor2::new(2, 2, vec![0.0; 4], vec![0.0; 3]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            Tensor2::from_slices(
                &[vec![1.0, 2.0], vec![3.0]],
                &[vec![0.0, 0.0], vec![0.0, 0.0]]
            ),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            Tensor2::new(1, 1, vec![f64::NAN], vec![0.0]),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn trilinear_form() {
        let t = Tensor2::from_slices(&[vec![1.0, 2.0]], &[vec![3.0, 4.0]]).unwrap();
        let v = trilinear_eval(&t, &[1.0, 1.0], &[1.0], &[1.0, 0.0]).unwrap();
        assert_eq!(v, 4.0);
        assert!(trilinear_eval(&t, &[1.0], &[1.0], &[1.0, 0.0]).is_err());
    }

    #[test]
    fn symmetrized_witness_keeps_pairing() {
        let t = Tensor2::from_slices(&[vec![1.0, 0.5]], &[vec![-0.3, 2.0]]).unwrap();
        let c = assemble_c(&t);
        let e = ComplexMatrix::from_fn(3, 3, |i, j| {
            Complex64::new(i as f64 - j as f64, (i * j) as f64)
        });
        let d = symmetrize_dual_witness(&e, 1, 2).unwrap();
        let lhs = c.matmul(&d.adjoint()).trace().re;
        let rhs = c.matmul(&e.adjoint()).trace().re;
        assert!((lhs - rhs).abs() < 1e-12);
        assert_eq!(d, d.transpose());
    }
}
