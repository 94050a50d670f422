use super::{herm_eig, s_embed, vec_dot, vec_norm, Complex64, ComplexMatrix, ONE, ZERO};
use crate::error::Result;

/// Singular values below this fraction of `σ₁` get completed singular vectors.
const SMALL_SINGULAR: f64 = 1e-9;

/// Thin SVD `A = Σ σᵢ uᵢ vᵢ*` with `min(m, n)` terms.
#[derive(Clone, Debug)]
pub struct SvdDecomposition {
    /// Descending and nonnegative.
    pub singular_values: Vec<f64>,
    /// `m × p`, orthonormal columns.
    pub u: ComplexMatrix,
    /// `n × p`, orthonormal columns.
    pub v: ComplexMatrix,
}

impl SvdDecomposition {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let (m, n) = (self.u.rows(), self.v.rows());
        let mut out = ComplexMatrix::zeros(m, n);
        for (k, &s) in self.singular_values.iter().enumerate() {
            for i in 0..m {
                let uik = self.u[(i, k)] * s;
                for j in 0..n {
                    out[(i, j)] += uik * self.v[(j, k)].conj();
                }
            }
        }
        out
    }
}

/// SVD read off the spectrum of `S(A)`: the top `min(m, n)` eigenpairs of
/// `[0, A; A*, 0]` are `(σᵢ, (uᵢ; vᵢ)/√2)`.
pub fn svd(a: &ComplexMatrix) -> Result<SvdDecomposition> {
    let (m, n) = (a.rows(), a.cols());
    let p = m.min(n);
    let e = herm_eig(&s_embed(a))?;
    let sigma_max = e.values[0].max(0.0);
    let cutoff = SMALL_SINGULAR * sigma_max;

    let mut singular_values = Vec::with_capacity(p);
    let mut us: Vec<Vec<Complex64>> = Vec::with_capacity(p);
    let mut vs: Vec<Vec<Complex64>> = Vec::with_capacity(p);
    let mut good = 0;
    for k in 0..p {
        let lam = e.values[k].max(0.0);
        singular_values.push(lam);
        if lam > cutoff && lam > 0.0 {
            let w = e.vector(k);
            let mut u = w[..m].to_vec();
            let mut v = w[m..].to_vec();
            normalize(&mut u);
            normalize(&mut v);
            us.push(u);
            vs.push(v);
            good += 1;
        }
    }
    complete_basis(&mut us, m, p);
    complete_basis(&mut vs, n, p);
    debug_assert!(good <= p);

    Ok(SvdDecomposition {
        singular_values,
        u: ComplexMatrix::from_columns(&us),
        v: ComplexMatrix::from_columns(&vs),
    })
}

fn normalize(x: &mut [Complex64]) {
    let nrm = vec_norm(x);
    if nrm > 0.0 {
        for z in x.iter_mut() {
            *z /= nrm;
        }
    }
}

/// Extends orthonormal `basis` in `C^dim` to `target` vectors using
/// Gram-Schmidt (applied twice) on the standard basis.
pub(crate) fn complete_basis(basis: &mut Vec<Vec<Complex64>>, dim: usize, target: usize) {
    let mut e = 0;
    while basis.len() < target && e < dim {
        let mut cand = vec![ZERO; dim];
        cand[e] = ONE;
        e += 1;
        for _ in 0..2 {
            for b in basis.iter() {
                let proj = vec_dot(b, &cand);
                for (c, bi) in cand.iter_mut().zip(b) {
                    *c -= proj * bi;
                }
            }
        }
        let nrm = vec_norm(&cand);
        if nrm > 1e-6 {
            for c in cand.iter_mut() {
                *c /= nrm;
            }
            basis.push(cand);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[Vec<f64>]) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn identity_has_unit_singular_values() {
        let s = svd(&ComplexMatrix::identity(3)).unwrap();
        for sv in &s.singular_values {
            assert!((sv - 1.0).abs() < 1e-14);
        }
        assert!(
            s.reconstruct()
                .sub(&ComplexMatrix::identity(3))
                .frobenius_norm()
                < 1e-13
        );
    }

    #[test]
    fn diagonal_is_sorted() {
        let a = real(&[vec![3.0, 0.0], vec![0.0, 4.0]]);
        let s = svd(&a).unwrap();
        assert!((s.singular_values[0] - 4.0).abs() < 1e-14);
        assert!((s.singular_values[1] - 3.0).abs() < 1e-14);
        assert!(s.reconstruct().sub(&a).frobenius_norm() < 1e-13);
    }

    #[test]
    fn rank_deficient_gets_orthonormal_completion() {
        let a = real(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
        let s = svd(&a).unwrap();
        assert!((s.singular_values[0] - 1.0).abs() < 1e-14);
        assert!(s.singular_values[1].abs() < 1e-14);
        let utu = s.u.adjoint().matmul(&s.u);
        let vtv = s.v.adjoint().matmul(&s.v);
        assert!(utu.sub(&ComplexMatrix::identity(2)).frobenius_norm() < 1e-13);
        assert!(vtv.sub(&ComplexMatrix::identity(2)).frobenius_norm() < 1e-13);
        assert!(s.reconstruct().sub(&a).frobenius_norm() < 1e-13);
    }

    #[test]
    fn rectangular_shapes() {
        let a = real(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]);
        let s = svd(&a).unwrap();
        assert_eq!(s.singular_values.len(), 2);
        assert_eq!((s.u.rows(), s.u.cols()), (2, 2));
        assert_eq!((s.v.rows(), s.v.cols()), (3, 2));
        assert!(s.reconstruct().sub(&a).frobenius_norm() < 1e-12);
    }
}
