use super::{Complex64, ComplexMatrix, HermitianMatrix, RealSymmetricMatrix, ONE, ZERO};
use crate::error::{Error, Result};

/// Stopping rule for the cyclic Jacobi sweeps.
#[derive(Clone, Copy, Debug)]
pub struct EigOptions {
    /// Converged once the off-diagonal Frobenius mass is at most `rel_tol * ‖A‖_F`.
    pub rel_tol: f64,
    pub max_sweeps: usize,
}

impl Default for EigOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-13,
            max_sweeps: 64,
        }
    }
}

/// Eigenpairs of a Hermitian matrix, values sorted in descending order.
#[derive(Clone, Debug)]
pub struct EigDecomposition {
    pub values: Vec<f64>,
    /// Unitary; column `i` pairs with `values[i]`.
    pub vectors: ComplexMatrix,
}

impl EigDecomposition {
    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        self.vectors.column(i)
    }

    /// Rebuilds `V Λ V*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lam) in self.values.iter().enumerate() {
            for i in 0..n {
                let vik = self.vectors[(i, k)] * lam;
                for j in 0..n {
                    out[(i, j)] += vik * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }
}

pub fn herm_eig(a: &HermitianMatrix) -> Result<EigDecomposition> {
    herm_eig_with(a, EigOptions::default())
}

/// Cyclic complex Jacobi.
pub fn herm_eig_with(a: &HermitianMatrix, opts: EigOptions) -> Result<EigDecomposition> {
    let n = a.dim();
    let mut m: Vec<Complex64> = a.as_matrix().data().to_vec();
    let mut v = vec![ZERO; n * n];
    for i in 0..n {
        v[i * n + i] = ONE;
    }
    let scale = a.frobenius_norm();
    let target = opts.rel_tol * scale;

    let off = |m: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut residual = off(&m);
    let mut sweeps = 0;
    while residual > target {
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { dim: n, residual });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                let g = apq.norm();
                if g == 0.0 {
                    continue;
                }
                let app = m[p * n + p].re;
                let aqq = m[q * n + q].re;
                let phase = apq / g;
                let theta = (aqq - app) / (2.0 * g);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let ph_c = phase.conj();

                // columns: A <- A J
                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = akp * c - akq * ph_c * s;
                    m[k * n + q] = akp * s + akq * ph_c * c;
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * c - vkq * ph_c * s;
                    v[k * n + q] = vkp * s + vkq * ph_c * c;
                }
                // rows: A <- J* A
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = apk * c - aqk * phase * s;
                    m[q * n + k] = apk * s + aqk * phase * c;
                }
                m[p * n + q] = ZERO;
                m[q * n + p] = ZERO;
                m[p * n + p] = Complex64::new(app - t * g, 0.0);
                m[q * n + q] = Complex64::new(aqq + t * g, 0.0);
            }
        }
        residual = off(&m);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].re.total_cmp(&m[i * n + i].re));
    let values = order.iter().map(|&i| m[i * n + i].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| v[i * n + order[k]]);
    Ok(EigDecomposition { values, vectors })
}

/// Eigenpairs of a real symmetric matrix, values descending.
#[derive(Clone, Debug)]
pub struct SymEig {
    pub values: Vec<f64>,
    /// Row-major orthogonal matrix; column `i` pairs with `values[i]`.
    pub vectors: Vec<f64>,
}

/// Cyclic real Jacobi, same stopping rule as [`herm_eig`].
pub fn sym_eig(a: &RealSymmetricMatrix) -> Result<SymEig> {
    sym_eig_raw(a.dim(), a.data(), EigOptions::default())
}

pub(crate) fn sym_eig_raw(n: usize, a: &[f64], opts: EigOptions) -> Result<SymEig> {
    let mut m = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = m.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = opts.rel_tol * scale;
    let off = |m: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j] * m[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut residual = off(&m);
    let mut sweeps = 0;
    while residual > target {
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { dim: n, residual });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                m[p * n + p] = app - t * apq;
                m[q * n + q] = aqq + t * apq;
            }
        }
        residual = off(&m);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].total_cmp(&m[i * n + i]));
    let values = order.iter().map(|&i| m[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for i in 0..n {
        for (k, &o) in order.iter().enumerate() {
            vectors[i * n + k] = v[i * n + o];
        }
    }
    Ok(SymEig { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::s_embed;

    fn real(rows: &[Vec<f64>]) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn diagonal_input_is_returned_sorted() {
        let a = HermitianMatrix::from_real_diag(&[1.0, -1.0]);
        let e = herm_eig(&a).unwrap();
        assert_eq!(e.values, vec![1.0, -1.0]);
        assert_eq!(e.vectors, ComplexMatrix::identity(2));
    }

    #[test]
    fn swap_matrix_has_plus_minus_one() {
        let a = HermitianMatrix::from_matrix(&real(&[vec![0.0, 1.0], vec![1.0, 0.0]]));
        let e = herm_eig(&a).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] + 1.0).abs() < 1e-14);
        assert!(e.reconstruct().sub(a.as_matrix()).frobenius_norm() < 1e-14);
    }

    #[test]
    fn s_embedding_spectrum_is_plus_minus_singular_values() {
        let c = real(&[vec![0.0, 2.0], vec![0.0, 0.0]]);
        let e = herm_eig(&s_embed(&c)).unwrap();
        let want = [2.0, 0.0, 0.0, -2.0];
        for (got, want) in e.values.iter().zip(want) {
            assert!((got - want).abs() < 1e-14, "{:?}", e.values);
        }
    }

    #[test]
    fn complex_entries_are_diagonalized() {
        let i = Complex64::new(0.0, 1.0);
        let a = ComplexMatrix::new(
            3,
            3,
            vec![
                Complex64::new(2.0, 0.0),
                i,
                Complex64::new(0.5, -0.25),
                -i,
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, 0.3),
                Complex64::new(0.5, 0.25),
                Complex64::new(0.0, -0.3),
                Complex64::new(0.7, 0.0),
            ],
        )
        .unwrap();
        let h = HermitianMatrix::from_matrix(&a);
        let e = herm_eig(&h).unwrap();
        assert!(e.reconstruct().sub(h.as_matrix()).frobenius_norm() < 1e-13);
        let vtv = e.vectors.adjoint().matmul(&e.vectors);
        assert!(vtv.sub(&ComplexMatrix::identity(3)).frobenius_norm() < 1e-13);
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn exhausted_sweep_cap_reports_dimension() {
        let a = HermitianMatrix::from_matrix(&real(&[vec![0.0, 1.0], vec![1.0, 0.0]]));
        let err = herm_eig_with(
            &a,
            EigOptions {
                rel_tol: 1e-13,
                max_sweeps: 0,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoConvergence { dim: 2, .. }));
    }

    #[test]
    fn real_jacobi_matches_known_spectrum() {
        let a = RealSymmetricMatrix::new(3, vec![2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0])
            .unwrap();
        let e = sym_eig(&a).unwrap();
        let r2 = 2f64.sqrt();
        let want = [2.0 + r2, 2.0, 2.0 - r2];
        for (g, w) in e.values.iter().zip(want) {
            assert!((g - w).abs() < 1e-13);
        }
    }
}
