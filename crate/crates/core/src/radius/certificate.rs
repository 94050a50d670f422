use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{herm_eig, svd, vec_norm, ComplexMatrix, HermitianMatrix};
use crate::oracle::{sweep_radius, DEFAULT_SWEEP_EPS};

/// Relative PSD slack accepted for `[X, Y; Y*, X]`.
const PSD_TOL: f64 = 1e-8;
/// Eigenvalues of `X` below this fraction of the largest count as kernel.
const KERNEL_TOL: f64 = 1e-13;
const KERNEL_MASS_TOL: f64 = 1e-8;
/// Terms lighter than this fraction of `tr X` are dropped.
const WEIGHT_TOL: f64 = 1e-12;
/// Eigenvalue gap below which the Hermitian part is treated as degenerate.
const CLUSTER_TOL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// Unit vector `x` with `Re(e^{-iθ} x*Cx)` attaining the radius.
    RadiusWitness { theta: f64, x: Vec<Complex64> },
    /// `Y = Σ pⱼ e^{iθⱼ} vⱼvⱼ*` with `Σ pⱼ = tr X`.
    ExtremeDecomposition { terms: Vec<ExtremeTerm> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremeTerm {
    pub weight: f64,
    /// In `[0, 2π)`.
    pub phase: f64,
    /// Unit vector.
    pub vector: Vec<Complex64>,
}

impl Certificate {
    /// Value certified: `Re(e^{-iθ} x*Cx)` for a witness, `Σ pⱼ` for a
    /// decomposition.
    pub fn value(&self, c: &ComplexMatrix) -> f64 {
        match self {
            Certificate::RadiusWitness { theta, x } => {
                (Complex64::from_polar(1.0, -theta) * c.quadratic_form(x)).re
            }
            Certificate::ExtremeDecomposition { terms } => terms.iter().map(|t| t.weight).sum(),
        }
    }

    /// `Σ pⱼ e^{iθⱼ} vⱼvⱼ*`, or `None` for a witness.
    pub fn reconstruct(&self, n: usize) -> Option<ComplexMatrix> {
        let Certificate::ExtremeDecomposition { terms } = self else {
            return None;
        };
        let mut out = ComplexMatrix::zeros(n, n);
        for t in terms {
            let coef = Complex64::from_polar(t.weight, t.phase);
            for i in 0..n {
                let vi = t.vector[i] * coef;
                for j in 0..n {
                    out[(i, j)] += vi * t.vector[j].conj();
                }
            }
        }
        Some(out)
    }
}

/// Writes `Y` as a nonnegative combination of rank-one extreme points
/// `e^{iθ} vv*`, with total weight `tr X`, given `[X, Y; Y*, X] ⪰ 0`.
pub fn extreme_decomposition(x: &HermitianMatrix, y: &ComplexMatrix) -> Result<Certificate> {
    let n = x.dim();
    if y.rows() != n || y.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "off-diagonal block must be {n}x{n}, got {}x{}",
            y.rows(),
            y.cols()
        )));
    }
    let block = ComplexMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => x[(i, j)],
        (true, false) => y[(i, j - n)],
        (false, true) => y[(j, i - n)].conj(),
        (false, false) => x[(i - n, j - n)],
    });
    let block = HermitianMatrix::from_matrix(&block);
    let min_eig = block.lambda_min()?;
    if min_eig < -PSD_TOL * block.frobenius_norm().max(1.0) {
        return Err(Error::NotFeasible { min_eig });
    }
    let trace = x.trace();
    if trace.is_nan() || trace <= 0.0 {
        return Err(Error::NotFeasible { min_eig: trace });
    }

    let ex = x.eig()?;
    let d_max = ex.values[0];
    let rank = ex
        .values
        .iter()
        .take_while(|&&d| d > KERNEL_TOL * d_max)
        .count();
    let u = &ex.vectors;
    let y_rot = u.adjoint().matmul(y).matmul(u);
    let mass = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i >= rank || j >= rank)
        .map(|(i, j)| y_rot[(i, j)].norm_sqr())
        .sum::<f64>()
        .sqrt();
    if mass > KERNEL_MASS_TOL * y.frobenius_norm().max(1.0) {
        return Err(Error::InconsistentKernel { mass });
    }

    let sqrt_d: Vec<f64> = ex.values[..rank].iter().map(|d| d.sqrt()).collect();
    let contraction =
        ComplexMatrix::from_fn(rank, rank, |i, j| y_rot[(i, j)] / (sqrt_d[i] * sqrt_d[j]));
    let s = svd(&contraction)?;

    let mut terms = Vec::new();
    for sign in [1.0, -1.0] {
        let unitary = dilation(&s.singular_values, &s.u, &s.v, sign);
        let (phases, q) = unitary_eig(&unitary)?;
        for (k, &theta) in phases.iter().enumerate() {
            let scaled: Vec<Complex64> = (0..rank).map(|i| q[(i, k)] * sqrt_d[i]).collect();
            let full: Vec<Complex64> = (0..n)
                .map(|r| (0..rank).map(|i| u[(r, i)] * scaled[i]).sum())
                .collect();
            let len = vec_norm(&full);
            let weight = 0.5 * len * len;
            if weight < WEIGHT_TOL * trace {
                continue;
            }
            terms.push(ExtremeTerm {
                weight,
                phase: theta.rem_euclid(std::f64::consts::TAU),
                vector: full.iter().map(|z| z / len).collect(),
            });
        }
    }
    Ok(Certificate::ExtremeDecomposition { terms })
}

/// `Σ (cⱼ ± i sⱼ) uⱼvⱼ*` with `sⱼ = √(1 - cⱼ²)`: a unitary whose average with
/// its partner is the contraction `Σ cⱼ uⱼvⱼ*`.
fn dilation(sv: &[f64], u: &ComplexMatrix, v: &ComplexMatrix, sign: f64) -> ComplexMatrix {
    let n = u.rows();
    let mut out = ComplexMatrix::zeros(n, n);
    for (k, &c) in sv.iter().enumerate() {
        let c = c.min(1.0);
        let coef = Complex64::new(c, sign * (1.0 - c * c).max(0.0).sqrt());
        for i in 0..n {
            let ui = u[(i, k)] * coef;
            for j in 0..n {
                out[(i, j)] += ui * v[(j, k)].conj();
            }
        }
    }
    out
}

/// Eigen-decomposition of a unitary: phases and an orthonormal eigenbasis.
///
/// Diagonalizes the Hermitian part, then the skew part inside each cluster of
/// equal Hermitian eigenvalues, where the two commute.
fn unitary_eig(w: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = w.rows();
    let herm = w.hermitian_part();
    let skew = w.skew_hermitian_part();
    let e = herm_eig(&herm)?;
    let mut q = e.vectors.clone();

    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && e.values[end - 1] - e.values[end] <= CLUSTER_TOL {
            end += 1;
        }
        if end - start > 1 {
            let block = q.block(0, start, n, end - start);
            let inner = block.adjoint().matmul(skew.as_matrix()).matmul(&block);
            let rot = herm_eig(&HermitianMatrix::from_matrix(&inner))?;
            let rotated = block.matmul(&rot.vectors);
            for j in 0..(end - start) {
                for i in 0..n {
                    q[(i, start + j)] = rotated[(i, j)];
                }
            }
        }
        start = end;
    }

    let phases = (0..n)
        .map(|k| w.quadratic_form(&q.column(k)).arg())
        .collect();
    Ok((phases, q))
}

/// Angle `θ` and unit vector `x` with `Re(e^{-iθ} x*Cx)` equal to the sweep
/// value of the numerical radius.
pub fn radius_witness(c: &ComplexMatrix) -> Result<Certificate> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        });
    }
    if c.is_zero() {
        return Err(Error::InvalidProblem(
            "witness requested for the zero matrix".into(),
        ));
    }
    let sweep = sweep_radius(c, DEFAULT_SWEEP_EPS)?;
    let theta = sweep.theta.rem_euclid(std::f64::consts::TAU);
    let m = c
        .hermitian_part()
        .scale(theta.cos())
        .add_scaled(theta.sin(), &c.skew_hermitian_part());
    let x = herm_eig(&m)?.vector(0);
    Ok(Certificate::RadiusWitness { theta, x })
}
