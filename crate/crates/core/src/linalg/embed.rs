use super::{Complex64, ComplexMatrix, HermitianMatrix, RealSymmetricMatrix};

/// `S(F) = [0, F; F*, 0]`, Hermitian of order `m + n` for `F` of shape `m×n`.
pub fn s_embed(f: &ComplexMatrix) -> HermitianMatrix {
    let (m, n) = (f.rows(), f.cols());
    let mut s = ComplexMatrix::zeros(m + n, m + n);
    for i in 0..m {
        for j in 0..n {
            s[(i, m + j)] = f[(i, j)];
            s[(m + j, i)] = f[(i, j)].conj();
        }
    }
    HermitianMatrix::from_matrix(&s)
}

/// Maps `A = X + iY` to the real symmetric `[X, -Y; Y, X]`.
///
/// The map preserves (semi)definiteness, doubles every eigenvalue's
/// multiplicity, and satisfies `tr(AZ) = ½ tr(ÂẐ)`.
pub fn real_embed(a: &HermitianMatrix) -> RealSymmetricMatrix {
    let n = a.dim();
    let big = 2 * n;
    let mut data = vec![0.0; big * big];
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            data[i * big + j] = z.re;
            data[(n + i) * big + (n + j)] = z.re;
            data[i * big + (n + j)] = -z.im;
            data[(n + i) * big + j] = z.im;
        }
    }
    RealSymmetricMatrix::from_raw(big, data)
}

/// Pulls a real symmetric `[P, Q; R, S]` of order `2n` back to the Hermitian
/// `W = (P + S) + i(R - Q)`, chosen so that `tr(AW) = tr(ÂẐ)` for every
/// Hermitian `A`.
///
/// On an embedded matrix this returns twice the original; it is the adjoint
/// of [`real_embed`] and is what recovers complex dual variables from the
/// real solver.
pub fn complex_from_embedded(z: &RealSymmetricMatrix) -> HermitianMatrix {
    let big = z.dim();
    assert!(big.is_multiple_of(2), "embedded dimension must be even");
    let n = big / 2;
    let w = ComplexMatrix::from_fn(n, n, |i, j| {
        let p = z[(i, j)];
        let q = z[(i, n + j)];
        let r = z[(n + i, j)];
        let s = z[(n + i, n + j)];
        Complex64::new(p + s, r - q)
    });
    HermitianMatrix::from_matrix(&w)
}
