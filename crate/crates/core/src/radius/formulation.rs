use super::omega;
use crate::error::{Error, Result};
use crate::linalg::{
    complex_from_embedded, real_embed, s_embed, Complex64, ComplexMatrix, HermitianMatrix,
};
use crate::sdp::{solve, SdpProblem, SdpSolution, SolveOptions};

/// SDP over complex Hermitian blocks:
/// `min costᵀs  s.t.  x0 + Σ sᵢ basisᵢ ⪰ 0`.
///
/// Solved through the real embedding; the complex dual is recovered from the
/// real one and satisfies `tr(basisᵢ W) = costᵢ`.
#[derive(Clone, Debug)]
pub struct HermitianSdp {
    pub x0: HermitianMatrix,
    pub basis: Vec<HermitianMatrix>,
    pub cost: Vec<f64>,
    /// Strictly feasible point.
    pub start: Vec<f64>,
}

impl HermitianSdp {
    pub fn dim(&self) -> usize {
        self.x0.dim()
    }

    pub fn slack(&self, s: &[f64]) -> HermitianMatrix {
        self.basis
            .iter()
            .zip(s)
            .fold(self.x0.clone(), |acc, (b, &si)| acc.add_scaled(si, b))
    }

    pub fn to_real(&self) -> Result<SdpProblem> {
        if self.basis.iter().any(|b| b.dim() != self.dim()) {
            return Err(Error::DimensionMismatch(
                "basis blocks must match the constant block".into(),
            ));
        }
        let basis = self.basis.iter().map(real_embed).collect();
        SdpProblem::new(real_embed(&self.x0), basis, self.cost.clone())?
            .with_start(self.start.clone())
    }

    /// Solves and returns the solution together with the complex dual `W`.
    pub fn solve(&self, opts: &SolveOptions) -> Result<(SdpSolution, HermitianMatrix)> {
        let sol = solve(&self.to_real()?, opts)?;
        let w = complex_from_embedded(&sol.z_star);
        Ok((sol, w))
    }
}

/// Real coordinates of `n×n` Hermitian matrices: `Eᵢᵢ`, then `Eᵢⱼ + Eⱼᵢ`,
/// then `i(Eᵢⱼ - Eⱼᵢ)` for `i < j`.
pub(crate) fn hermitian_basis(n: usize) -> Vec<HermitianMatrix> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut d = vec![0.0; n];
        d[i] = 1.0;
        out.push(HermitianMatrix::from_real_diag(&d));
    }
    for (i, j) in upper_pairs(n) {
        out.push(pair_matrix(n, i, j, Complex64::new(1.0, 0.0)));
    }
    for (i, j) in upper_pairs(n) {
        out.push(pair_matrix(n, i, j, Complex64::new(0.0, 1.0)));
    }
    out
}

/// Inverse of the coordinates in [`hermitian_basis`].
pub(crate) fn hermitian_from_params(n: usize, params: &[f64]) -> HermitianMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = params[i].into();
    }
    let pairs = upper_pairs(n);
    let off = pairs.len();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let z = Complex64::new(params[n + k], params[n + off + k]);
        m[(i, j)] = z;
        m[(j, i)] = z.conj();
    }
    HermitianMatrix::from_matrix(&m)
}

fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect()
}

fn pair_matrix(n: usize, i: usize, j: usize, z: Complex64) -> HermitianMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    m[(i, j)] = z;
    m[(j, i)] = z.conj();
    HermitianMatrix::from_matrix(&m)
}

fn block_diag(a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    let (p, q) = (a.dim(), b.dim());
    let m = ComplexMatrix::from_fn(p + q, p + q, |i, j| match (i < p, j < p) {
        (true, true) => a[(i, j)],
        (false, false) => b[(i - p, j - p)],
        _ => Complex64::new(0.0, 0.0),
    });
    HermitianMatrix::from_matrix(&m)
}

/// Variables `(c, Z)`; slack `[cI + Z, C; C*, cI - Z]`.
pub(super) fn numerical_radius(c: &ComplexMatrix) -> HermitianSdp {
    let n = c.rows();
    let mut basis = vec![HermitianMatrix::identity(2 * n)];
    basis.extend(
        hermitian_basis(n)
            .iter()
            .map(|h| block_diag(h, &h.scale(-1.0))),
    );
    let k = basis.len();
    let mut cost = vec![0.0; k];
    cost[0] = 1.0;
    let mut start = vec![0.0; k];
    start[0] = 3.0 * omega(c) as f64;
    HermitianSdp {
        x0: s_embed(c),
        basis,
        cost,
        start,
    }
}

/// Variable `X`; slack `[X, C; C*, X]`.
pub(super) fn dual_numerical_radius(c: &ComplexMatrix) -> HermitianSdp {
    let n = c.rows();
    let hb = hermitian_basis(n);
    let cost = hb.iter().map(HermitianMatrix::trace).collect();
    let basis = hb.iter().map(|h| block_diag(h, h)).collect();
    let mut start = vec![0.0; n * n];
    start[..n].fill(2.0 * omega(c) as f64);
    HermitianSdp {
        x0: s_embed(c),
        basis,
        cost,
        start,
    }
}

/// Variable `a`; slack `aI + S(C)`.
pub(super) fn op_norm(c: &ComplexMatrix) -> HermitianSdp {
    let dim = c.rows() + c.cols();
    HermitianSdp {
        x0: s_embed(c),
        basis: vec![HermitianMatrix::identity(dim)],
        cost: vec![1.0],
        start: vec![2.0 * omega(c) as f64],
    }
}

/// Variables `X` (all `m²` coordinates) and `Y` (all but its last diagonal
/// entry, which is fixed by `tr X = tr Y`); slack `[X, C; C*, Y]`.
pub(super) fn nuclear_norm(c: &ComplexMatrix) -> HermitianSdp {
    let (m, n) = (c.rows(), c.cols());
    let zm = HermitianMatrix::zeros(m);
    let mut last = vec![0.0; n];
    last[n - 1] = 1.0;
    let e_last = HermitianMatrix::from_real_diag(&last);

    let mut basis = Vec::new();
    let mut cost = Vec::new();
    for h in hermitian_basis(m) {
        let t = h.trace();
        cost.push(t);
        basis.push(block_diag(&h, &e_last.scale(t)));
    }
    let hn = hermitian_basis(n);
    for (idx, h) in hn.iter().enumerate() {
        if idx == n - 1 {
            continue;
        }
        let block = if idx < n {
            h.add_scaled(-1.0, &e_last)
        } else {
            h.clone()
        };
        basis.push(block_diag(&zm, &block));
        cost.push(0.0);
    }

    let p = m.max(n) as f64;
    let w = omega(c) as f64;
    let a = 2.0 * w * p / m as f64;
    let b = 2.0 * w * p / n as f64;
    let mut start = vec![0.0; basis.len()];
    start[..m].fill(a);
    let y0 = m * m;
    start[y0..y0 + n - 1].fill(b);
    HermitianSdp {
        x0: s_embed(c),
        basis,
        cost,
        start,
    }
}
