//! Primal-dual interior-point solver for semidefinite programs in the form
//!
//! ```text
//!   minimize    cᵀs
//!   subject to  X₀ + Σ sᵢXᵢ ⪰ 0
//! ```
//!
//! with dual
//!
//! ```text
//!   maximize    -tr(X₀Z)
//!   subject to  tr(XᵢZ) = cᵢ,  Z ⪰ 0.
//! ```
//!
//! The iteration is a Mehrotra predictor-corrector on the HKM search
//! direction. The primal iterate always satisfies the affine constraint
//! exactly (the slack is recomputed from `s`), so a strictly feasible primal
//! start is required; the dual may start infeasible, although every problem
//! built in this crate gets a feasible one from [`SdpProblem`]'s projection.

use crate::error::{Error, Result};
use crate::linalg::dense;
use crate::linalg::eig::{sym_eig_raw, EigOptions};
use crate::linalg::RealSymmetricMatrix;

/// Fraction of the distance to the cone boundary taken by each step.
const STEP_FRACTION: f64 = 0.98;
const GRAM_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    /// Target for `gap / (1 + |primal|)`.
    pub eps_gap: f64,
    /// Target for `‖c - A*(Z)‖ / (1 + ‖c‖)` and the cone-membership slack.
    pub eps_feas: f64,
    pub max_iter: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            eps_gap: 1e-9,
            eps_feas: 1e-8,
            max_iter: 500,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SolveStatus {
    Optimal,
    IterationCap,
    NumericalFailure,
}

#[derive(Clone, Debug)]
pub struct SdpSolution {
    pub s_star: Vec<f64>,
    pub z_star: RealSymmetricMatrix,
    pub primal_value: f64,
    pub dual_value: f64,
    /// `primal_value - dual_value`.
    pub gap: f64,
    /// `‖c - A*(Z)‖`.
    pub dual_residual: f64,
    pub iterations: usize,
    pub status: SolveStatus,
}

impl SdpSolution {
    pub fn relative_gap(&self) -> f64 {
        self.gap / (1.0 + self.primal_value.abs())
    }
}

/// Symmetric matrix kept as its nonzero entries (both triangles).
#[derive(Clone, Debug)]
struct Sparse {
    entries: Vec<(usize, usize, f64)>,
}

impl Sparse {
    fn from_dense(m: &RealSymmetricMatrix) -> Self {
        let n = m.dim();
        let entries = m
            .data()
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(k, &v)| (k / n, k % n, v))
            .collect();
        Self { entries }
    }

    /// `tr(X A)` for a general dense `A`.
    fn trace_with(&self, n: usize, a: &[f64]) -> f64 {
        self.entries.iter().map(|&(r, c, v)| v * a[c * n + r]).sum()
    }

    fn axpy(&self, n: usize, alpha: f64, out: &mut [f64]) {
        for &(r, c, v) in &self.entries {
            out[r * n + c] += alpha * v;
        }
    }

    /// Frobenius inner product of two sparse matrices.
    fn dot(&self, other: &Self) -> f64 {
        let (mut i, mut j, mut s) = (0, 0, 0.0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            let ka = (a[i].0, a[i].1);
            let kb = (b[j].0, b[j].1);
            match ka.cmp(&kb) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    s += a[i].2 * b[j].2;
                    i += 1;
                    j += 1;
                }
            }
        }
        s
    }
}

/// Standard-form SDP data.
#[derive(Clone, Debug)]
pub struct SdpProblem {
    x0: RealSymmetricMatrix,
    basis: Vec<RealSymmetricMatrix>,
    cost: Vec<f64>,
    start: Option<Vec<f64>>,
    sparse: Vec<Sparse>,
    x0_sparse: Sparse,
}

impl SdpProblem {
    /// Validates dimensions and linear independence of the basis.
    ///
    /// Independence is measured on the trace-inner-product Gram matrix after
    /// normalizing each `Xᵢ`: every Cholesky pivot (the squared sine of the
    /// angle between `Xᵢ` and the span of its predecessors) must exceed 1e-10.
    pub fn new(
        x0: RealSymmetricMatrix,
        basis: Vec<RealSymmetricMatrix>,
        cost: Vec<f64>,
    ) -> Result<Self> {
        let n = x0.dim();
        if basis.is_empty() {
            return Err(Error::InvalidProblem("basis must not be empty".into()));
        }
        if basis.len() != cost.len() {
            return Err(Error::InvalidProblem(format!(
                "{} basis matrices but {} cost entries",
                basis.len(),
                cost.len()
            )));
        }
        if let Some(i) = basis.iter().position(|b| b.dim() != n) {
            return Err(Error::InvalidProblem(format!(
                "basis matrix {i} has dimension {}, expected {n}",
                basis[i].dim()
            )));
        }
        if let Some(i) = cost.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidProblem(format!(
                "cost entry {i} is not finite"
            )));
        }
        let sparse: Vec<Sparse> = basis.iter().map(Sparse::from_dense).collect();
        let k = basis.len();
        let mut gram = gram_matrix(&sparse);
        let norms: Vec<f64> = (0..k).map(|i| gram[i * k + i].sqrt()).collect();
        if let Some(i) = norms.iter().position(|&x| x == 0.0) {
            return Err(Error::InvalidProblem(format!("basis matrix {i} is zero")));
        }
        for i in 0..k {
            for j in 0..k {
                gram[i * k + j] /= norms[i] * norms[j];
            }
        }
        if let Some(i) = first_small_pivot(k, &gram, GRAM_TOL) {
            return Err(Error::InvalidProblem(format!(
                "basis matrix {i} is linearly dependent on its predecessors"
            )));
        }
        let x0_sparse = Sparse::from_dense(&x0);
        Ok(Self {
            x0,
            basis,
            cost,
            start: None,
            sparse,
            x0_sparse,
        })
    }

    /// Attaches a strictly feasible start; rejects points outside the open cone.
    pub fn with_start(mut self, s: Vec<f64>) -> Result<Self> {
        if s.len() != self.k() {
            return Err(Error::InvalidProblem(format!(
                "start has length {}, expected {}",
                s.len(),
                self.k()
            )));
        }
        let lam = check_slater(&self, &s)?;
        if lam.is_nan() || lam <= 0.0 {
            return Err(Error::InvalidProblem(format!(
                "start is not strictly feasible (min eigenvalue {lam:e})"
            )));
        }
        self.start = Some(s);
        Ok(self)
    }

    pub fn cone_dim(&self) -> usize {
        self.x0.dim()
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn x0(&self) -> &RealSymmetricMatrix {
        &self.x0
    }

    pub fn basis(&self) -> &[RealSymmetricMatrix] {
        &self.basis
    }

    pub fn cost(&self) -> &[f64] {
        &self.cost
    }

    pub fn start(&self) -> Option<&[f64]> {
        self.start.as_deref()
    }

    /// `X₀ + Σ sᵢXᵢ`.
    pub fn affine(&self, s: &[f64]) -> RealSymmetricMatrix {
        RealSymmetricMatrix::from_raw(self.cone_dim(), self.affine_raw(s))
    }

    fn affine_raw(&self, s: &[f64]) -> Vec<f64> {
        let n = self.cone_dim();
        let mut out = self.x0.data().to_vec();
        for (si, xi) in s.iter().zip(&self.sparse) {
            xi.axpy(n, *si, &mut out);
        }
        out
    }

    /// `(tr(XᵢZ))ᵢ`.
    pub fn adjoint_map(&self, z: &RealSymmetricMatrix) -> Vec<f64> {
        let n = self.cone_dim();
        self.sparse
            .iter()
            .map(|x| x.trace_with(n, z.data()))
            .collect()
    }

    pub fn primal_objective(&self, s: &[f64]) -> f64 {
        self.cost.iter().zip(s).map(|(c, s)| c * s).sum()
    }

    pub fn dual_objective(&self, z: &RealSymmetricMatrix) -> f64 {
        -self.x0_sparse.trace_with(self.cone_dim(), z.data())
    }
}

/// `λ_min(X₀ + Σ sᵢXᵢ)`; positive means `s` is strictly feasible.
pub fn check_slater(p: &SdpProblem, s: &[f64]) -> Result<f64> {
    assert_eq!(s.len(), p.k(), "point has wrong length");
    let n = p.cone_dim();
    let e = sym_eig_raw(n, &p.affine_raw(s), EigOptions::default())?;
    Ok(*e.values.last().expect("dim >= 1"))
}

pub fn solve(p: &SdpProblem, opts: &SolveOptions) -> Result<SdpSolution> {
    let start = match p.start() {
        Some(s) => s.to_vec(),
        None => phase_one(p)?,
    };
    Solver::new(p, start, *opts)?.run(None)
}

fn gram_matrix(sparse: &[Sparse]) -> Vec<f64> {
    let k = sparse.len();
    let mut g = vec![0.0; k * k];
    for i in 0..k {
        for j in 0..=i {
            let v = sparse[i].dot(&sparse[j]);
            g[i * k + j] = v;
            g[j * k + i] = v;
        }
    }
    g
}

/// Index of the first Cholesky pivot at or below `tol`, if any.
fn first_small_pivot(k: usize, a: &[f64], tol: f64) -> Option<usize> {
    let mut l = vec![0.0; k * k];
    for j in 0..k {
        let mut d = a[j * k + j];
        for m in 0..j {
            d -= l[j * k + m] * l[j * k + m];
        }
        if d.is_nan() || d <= tol {
            return Some(j);
        }
        let d = d.sqrt();
        l[j * k + j] = d;
        for i in (j + 1)..k {
            let mut s = a[i * k + j];
            for m in 0..j {
                s -= l[i * k + m] * l[j * k + m];
            }
            l[i * k + j] = s / d;
        }
    }
    None
}

/// Solves the Gram system `G y = b` (basis independence makes `G` SPD).
fn gram_solve(p: &SdpProblem, b: &[f64]) -> Option<Vec<f64>> {
    let k = p.k();
    let g = gram_matrix(&p.sparse);
    let l = dense::cholesky(k, &g)?;
    let mut y = b.to_vec();
    dense::chol_solve(k, &l, &mut y);
    Some(y)
}

fn combine(p: &SdpProblem, y: &[f64]) -> Vec<f64> {
    let n = p.cone_dim();
    let mut out = vec![0.0; n * n];
    for (yi, xi) in y.iter().zip(&p.sparse) {
        xi.axpy(n, *yi, &mut out);
    }
    out
}

fn min_eig(n: usize, a: &[f64]) -> Result<f64> {
    let e = sym_eig_raw(n, a, EigOptions::default())?;
    Ok(*e.values.last().expect("dim >= 1"))
}

/// Dual start: the least-norm solution of `tr(XᵢZ) = cᵢ`, pushed into the
/// interior along `I - P(I)` when possible, otherwise a scaled identity.
fn dual_start(p: &SdpProblem) -> Result<Vec<f64>> {
    let n = p.cone_dim();
    let ident = RealSymmetricMatrix::identity(n);
    if let Some(y) = gram_solve(p, p.cost()) {
        let zc = combine(p, &y);
        let lam_c = min_eig(n, &zc)?;
        let scale = zc.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-300);
        if lam_c > 1e-6 * scale {
            return Ok(zc);
        }
        // I minus its projection onto span{Xᵢ} is orthogonal to every Xᵢ.
        if let Some(w) = gram_solve(p, &p.adjoint_map(&ident)) {
            let pi = combine(p, &w);
            let mut r = ident.data().to_vec();
            for (ri, pii) in r.iter_mut().zip(&pi) {
                *ri -= pii;
            }
            let lam_r = min_eig(n, &r)?;
            if lam_r > 1e-8 {
                let t = (1.0 + scale - lam_c) / lam_r;
                return Ok(zc.iter().zip(&r).map(|(a, b)| a + t * b).collect());
            }
        }
    }
    let c_scale = p
        .cost()
        .iter()
        .zip(&p.basis)
        .map(|(c, x)| (1.0 + c.abs()) / (1.0 + x.frobenius_norm()))
        .fold(1.0, f64::max);
    Ok(ident.scale(c_scale).data().to_vec())
}

/// Big-M style phase I: drive `t` negative in `X₀ + Σ sᵢXᵢ + tI ⪰ 0`.
fn phase_one(p: &SdpProblem) -> Result<Vec<f64>> {
    let n = p.cone_dim();
    let k = p.k();
    let lam0 = min_eig(n, p.x0().data())?;
    if lam0 > 0.0 {
        return Ok(vec![0.0; k]);
    }
    let t0 = 1.0 - lam0;

    // identity inside the span: move along it directly
    let ident = RealSymmetricMatrix::identity(n);
    if let Some(w) = gram_solve(p, &p.adjoint_map(&ident)) {
        let pi = combine(p, &w);
        let resid = pi
            .iter()
            .zip(ident.data())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        if resid <= 1e-9 * (n as f64).sqrt() {
            let s: Vec<f64> = w.iter().map(|wi| wi * t0).collect();
            if check_slater(p, &s)? > 0.0 {
                return Ok(s);
            }
        }
    }

    let big = n + 1;
    let pad = |m: &RealSymmetricMatrix, corner: f64| {
        let mut d = vec![0.0; big * big];
        for i in 0..n {
            for j in 0..n {
                d[i * big + j] = m[(i, j)];
            }
        }
        d[n * big + n] = corner;
        RealSymmetricMatrix::from_raw(big, d)
    };
    let bound = 1.0 + lam0.abs();
    let x0 = pad(p.x0(), bound);
    let mut basis: Vec<RealSymmetricMatrix> = p.basis().iter().map(|b| pad(b, 0.0)).collect();
    basis.push(pad(&ident, 1.0));
    let mut cost = vec![0.0; k];
    cost.push(1.0);
    let mut start = vec![0.0; k];
    start.push(t0);
    let aux = SdpProblem::new(x0, basis, cost)
        .map_err(|_| Error::MissingStart)?
        .with_start(start)
        .map_err(|_| Error::MissingStart)?;
    let margin = 1e-6 * (1.0 + lam0.abs());
    let stop = move |s: &[f64]| s[k] < -margin;
    let sol = Solver::new(&aux, aux.start().unwrap().to_vec(), SolveOptions::default())?
        .run(Some(&stop))?;
    if sol.s_star[k] < 0.0 {
        let s = sol.s_star[..k].to_vec();
        if check_slater(p, &s)? > 0.0 {
            return Ok(s);
        }
    }
    Err(Error::MissingStart)
}

type StopHook<'h> = &'h dyn Fn(&[f64]) -> bool;

struct Solver<'a> {
    p: &'a SdpProblem,
    opts: SolveOptions,
    n: usize,
    k: usize,
    s: Vec<f64>,
    z: Vec<f64>,
    c_norm: f64,
}

struct Direction {
    ds: Vec<f64>,
    d_slack: Vec<f64>,
    dz: Vec<f64>,
}

impl<'a> Solver<'a> {
    fn new(p: &'a SdpProblem, s: Vec<f64>, opts: SolveOptions) -> Result<Self> {
        let z = dual_start(p)?;
        let c_norm = p.cost().iter().map(|c| c * c).sum::<f64>().sqrt();
        Ok(Self {
            p,
            opts,
            n: p.cone_dim(),
            k: p.k(),
            s,
            z,
            c_norm,
        })
    }

    fn solution(&self, iterations: usize, status: SolveStatus) -> SdpSolution {
        let z = RealSymmetricMatrix::from_raw(self.n, self.z.clone());
        let primal_value = self.p.primal_objective(&self.s);
        let dual_value = self.p.dual_objective(&z);
        let dual_residual = self.dual_residual();
        SdpSolution {
            s_star: self.s.clone(),
            z_star: z,
            primal_value,
            dual_value,
            gap: primal_value - dual_value,
            dual_residual,
            iterations,
            status,
        }
    }

    fn dual_residual(&self) -> f64 {
        let n = self.n;
        self.p
            .sparse
            .iter()
            .zip(self.p.cost())
            .map(|(x, c)| {
                let r = c - x.trace_with(n, &self.z);
                r * r
            })
            .sum::<f64>()
            .sqrt()
    }

    fn run(mut self, stop: Option<StopHook>) -> Result<SdpSolution> {
        let n = self.n;
        let nf = n as f64;
        let mut stalled = 0;
        for iter in 0..self.opts.max_iter {
            if let Some(stop) = stop {
                if stop(&self.s) {
                    return Ok(self.solution(iter, SolveStatus::Optimal));
                }
            }
            let slack = self.p.affine_raw(&self.s);
            let Some(l_slack) = dense::cholesky(n, &slack) else {
                if iter == 0 {
                    return Err(Error::NumericalFailure(
                        "primal start is not positive definite".into(),
                    ));
                }
                return Ok(self.solution(iter, SolveStatus::NumericalFailure));
            };
            let Some(l_z) = dense::cholesky(n, &self.z) else {
                return Ok(self.solution(iter, SolveStatus::NumericalFailure));
            };
            let slack_inv = dense::chol_inverse(n, &l_slack);

            let primal = self.p.primal_objective(&self.s);
            let dual = -self.p.x0_sparse.trace_with(n, &self.z);
            let comp: f64 = slack.iter().zip(&self.z).map(|(a, b)| a * b).sum();
            let rel = (primal - dual).abs().max(comp) / (1.0 + primal.abs());
            let feas = self.dual_residual() / (1.0 + self.c_norm);
            if rel <= self.opts.eps_gap && feas <= self.opts.eps_feas {
                return Ok(self.solution(iter, SolveStatus::Optimal));
            }
            let mu = comp / nf;

            let Some(schur) = self.schur_factor(&slack_inv) else {
                return Ok(self.solution(iter, SolveStatus::NumericalFailure));
            };

            // predictor
            let aff = self.direction(&schur, &slack_inv, 0.0, None);
            let ap_aff = max_step(n, &l_slack, &aff.d_slack)?.min(1.0);
            let ad_aff = max_step(n, &l_z, &aff.dz)?.min(1.0);
            let comp_aff: f64 = slack
                .iter()
                .zip(&aff.d_slack)
                .zip(self.z.iter().zip(&aff.dz))
                .map(|((s, ds), (z, dz))| (s + ap_aff * ds) * (z + ad_aff * dz))
                .sum();
            let sigma = ((comp_aff / nf) / mu).clamp(0.0, 1.0).powi(3);

            // corrector
            let second = dense::matmul(n, &dense::matmul(n, &aff.dz, &aff.d_slack), &slack_inv);
            let dir = self.direction(&schur, &slack_inv, sigma * mu, Some(&second));
            let ap = (STEP_FRACTION * max_step(n, &l_slack, &dir.d_slack)?).min(1.0);
            let ad = (STEP_FRACTION * max_step(n, &l_z, &dir.dz)?).min(1.0);

            for (s, d) in self.s.iter_mut().zip(&dir.ds) {
                *s += ap * d;
            }
            for (z, d) in self.z.iter_mut().zip(&dir.dz) {
                *z += ad * d;
            }
            dense::symmetrize(n, &mut self.z);

            if ap < 1e-10 && ad < 1e-10 {
                stalled += 1;
                if stalled >= 5 {
                    return Ok(self.solution(iter + 1, SolveStatus::NumericalFailure));
                }
            } else {
                stalled = 0;
            }
        }
        Ok(self.solution(self.opts.max_iter, SolveStatus::IterationCap))
    }

    /// Factors `Mᵢⱼ = tr(Xᵢ Z Xⱼ S⁻¹)`, regularizing on failure.
    fn schur_factor(&self, slack_inv: &[f64]) -> Option<SchurFactor> {
        let (n, k) = (self.n, self.k);
        let mut m = vec![0.0; k * k];
        let mut g = vec![0.0; n * n];
        for (j, xj) in self.p.sparse.iter().enumerate() {
            if xj.entries.len() <= n {
                g.iter_mut().for_each(|x| *x = 0.0);
                for &(r, c, w) in &xj.entries {
                    for a in 0..n {
                        let zar = self.z[a * n + r] * w;
                        if zar == 0.0 {
                            continue;
                        }
                        let row_g = &mut g[a * n..(a + 1) * n];
                        let row_s = &slack_inv[c * n..(c + 1) * n];
                        for (gb, sb) in row_g.iter_mut().zip(row_s) {
                            *gb += zar * sb;
                        }
                    }
                }
            } else {
                let xd = self.p.basis[j].data();
                g = dense::matmul(n, &dense::matmul(n, &self.z, xd), slack_inv);
            }
            for (i, xi) in self.p.sparse.iter().enumerate() {
                m[i * k + j] = xi.trace_with(n, &g);
            }
        }
        dense::symmetrize(k, &mut m);

        let max_diag = (0..k).map(|i| m[i * k + i]).fold(0.0, f64::max);
        if let Some(l) = dense::cholesky(k, &m) {
            return Some(SchurFactor { m, l });
        }
        let mut reg = 1e-12;
        while reg <= 1e-6 * 1.0001 {
            let mut mr = m.clone();
            for i in 0..k {
                mr[i * k + i] += reg * max_diag;
            }
            if let Some(l) = dense::cholesky(k, &mr) {
                return Some(SchurFactor { m, l });
            }
            reg *= 10.0;
        }
        None
    }

    /// HKM direction targeting `Z S = target·I`, with an optional
    /// second-order term `ΔZ_aff ΔS_aff S⁻¹`.
    fn direction(
        &self,
        schur: &SchurFactor,
        slack_inv: &[f64],
        target: f64,
        second: Option<&[f64]>,
    ) -> Direction {
        let (n, k) = (self.n, self.k);
        let mut rhs: Vec<f64> = self
            .p
            .sparse
            .iter()
            .zip(self.p.cost())
            .map(|(x, c)| {
                let mut r = target * x.trace_with(n, slack_inv) - c;
                if let Some(sec) = second {
                    r -= x.trace_with(n, sec);
                }
                r
            })
            .collect();
        let ds = schur.solve(k, &mut rhs);

        let mut d_slack = vec![0.0; n * n];
        for (d, x) in ds.iter().zip(&self.p.sparse) {
            x.axpy(n, *d, &mut d_slack);
        }
        // dZ = target S⁻¹ - Z - sym(Z dS S⁻¹) - sym(second)
        let zds = dense::matmul(n, &dense::matmul(n, &self.z, &d_slack), slack_inv);
        let mut dz = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut v = target * slack_inv[i * n + j]
                    - self.z[i * n + j]
                    - 0.5 * (zds[i * n + j] + zds[j * n + i]);
                if let Some(sec) = second {
                    v -= 0.5 * (sec[i * n + j] + sec[j * n + i]);
                }
                dz[i * n + j] = v;
            }
        }
        Direction { ds, d_slack, dz }
    }
}

struct SchurFactor {
    m: Vec<f64>,
    l: Vec<f64>,
}

impl SchurFactor {
    /// Solves with the (possibly regularized) factor plus two refinement
    /// passes against the unregularized matrix.
    fn solve(&self, k: usize, rhs: &mut [f64]) -> Vec<f64> {
        let b = rhs.to_vec();
        let mut x = b.clone();
        dense::chol_solve(k, &self.l, &mut x);
        for _ in 0..2 {
            let mut r: Vec<f64> = (0..k)
                .map(|i| b[i] - (0..k).map(|j| self.m[i * k + j] * x[j]).sum::<f64>())
                .collect();
            dense::chol_solve(k, &self.l, &mut r);
            for (xi, ri) in x.iter_mut().zip(&r) {
                *xi += ri;
            }
        }
        x
    }
}

/// Largest `α` with `X + α dX ⪰ 0`, given the Cholesky factor of `X ≻ 0`;
/// `f64::INFINITY` when `dX` points into the cone.
fn max_step(n: usize, l: &[f64], dx: &[f64]) -> Result<f64> {
    let l_inv = dense::lower_inverse(n, l);
    let m = dense::congruence(n, &l_inv, dx);
    let lam = min_eig(n, &m)?;
    Ok(if lam >= 0.0 {
        f64::INFINITY
    } else {
        -1.0 / lam
    })
}
