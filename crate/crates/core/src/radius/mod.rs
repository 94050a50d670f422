//! SDP formulations of the numerical radius, its dual norm, and the operator
//! and nuclear norms.
//!
//! Each formulation is written over complex Hermitian blocks, embedded into a
//! real symmetric cone with [`real_embed`](crate::linalg::real_embed), solved,
//! and mapped back. Every formulation comes with an explicit strictly feasible
//! start built from `ω(C) = ⌈‖C‖_F⌉ + 1`.

mod certificate;
mod formulation;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{norms, ComplexMatrix, HermitianMatrix};
use crate::sdp::{SdpSolution, SolveOptions, SolveStatus};

pub use certificate::{extreme_decomposition, radius_witness, Certificate, ExtremeTerm};
pub use formulation::HermitianSdp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    NumericalRadius,
    DualNumericalRadius,
    OperatorNorm,
    NuclearNorm,
    TensorSpectral,
    TensorNuclear,
}

impl Quantity {
    /// Short name used on the command line and in JSON output.
    pub fn short_name(self) -> &'static str {
        match self {
            Quantity::NumericalRadius => "r",
            Quantity::DualNumericalRadius => "rdual",
            Quantity::OperatorNorm => "opnorm",
            Quantity::NuclearNorm => "nuclear",
            Quantity::TensorSpectral => "tensor_spectral",
            Quantity::TensorNuclear => "tensor_nuclear",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NormOptions {
    pub solver: SolveOptions,
    /// Attach a certificate to the result.
    pub certificate: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormResult {
    pub quantity: Quantity,
    pub value: f64,
    pub gap: f64,
    pub iterations: usize,
    pub status: SolveStatus,
    pub certificate: Option<Certificate>,
}

impl NormResult {
    fn zero(quantity: Quantity, certificate: Option<Certificate>) -> Self {
        Self {
            quantity,
            value: 0.0,
            gap: 0.0,
            iterations: 0,
            status: SolveStatus::Optimal,
            certificate,
        }
    }

    pub fn converged(&self) -> bool {
        self.status == SolveStatus::Optimal
    }
}

/// Everything an SDP-backed norm computation produces.
#[derive(Clone, Debug)]
pub struct NormSolution {
    pub result: NormResult,
    /// Optimal Hermitian variable: `Z` for `r`, `X` for `r∨`, the full
    /// `[X, C; C*, Y]` block for the nuclear norm, `aI` for the operator norm.
    pub primal_block: HermitianMatrix,
    /// `F` with `Re tr(F*C) = value` whose dual norm is at most one: `r∨(F) ≤ 1`
    /// for `r`, `r(F) ≤ 1` for `r∨`, `‖F‖∨ ≤ 1` for `‖C‖`, `‖F‖ ≤ 1` for `‖C‖∨`.
    pub dual_witness: ComplexMatrix,
    pub sdp: SdpSolution,
}

/// `⌈‖C‖_F⌉ + 1`, which lies in `[‖C‖_F + 1, ‖C‖_F + 2]`.
pub fn omega(c: &ComplexMatrix) -> u64 {
    c.frobenius_norm().ceil() as u64 + 1
}

fn require_square(c: &ComplexMatrix) -> Result<()> {
    if c.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        })
    }
}

pub fn numerical_radius(c: &ComplexMatrix, opts: &NormOptions) -> Result<NormResult> {
    require_square(c)?;
    if c.is_zero() {
        return Ok(NormResult::zero(Quantity::NumericalRadius, None));
    }
    let mut sol = numerical_radius_solve(c, &opts.solver)?;
    if opts.certificate {
        sol.result.certificate = Some(radius_witness(c)?);
    }
    Ok(sol.result)
}

/// `min c  s.t.  [cI + Z, C; C*, cI - Z] ⪰ 0`, started at `c = 3ω(C)`, `Z = 0`.
pub fn numerical_radius_solve(c: &ComplexMatrix, opts: &SolveOptions) -> Result<NormSolution> {
    require_square(c)?;
    let f = formulation::numerical_radius(c);
    let n = c.rows();
    let (sol, w) = f.solve(opts)?;
    let z = formulation::hermitian_from_params(n, &sol.s_star[1..]);
    Ok(NormSolution {
        result: result_from(Quantity::NumericalRadius, &sol, 1.0),
        primal_block: z,
        dual_witness: off_diagonal_witness(&w, n, n),
        sdp: sol,
    })
}

pub fn dual_numerical_radius(c: &ComplexMatrix, opts: &NormOptions) -> Result<NormResult> {
    require_square(c)?;
    if c.is_zero() {
        let cert = opts
            .certificate
            .then(|| Certificate::ExtremeDecomposition { terms: Vec::new() });
        return Ok(NormResult::zero(Quantity::DualNumericalRadius, cert));
    }
    let mut sol = dual_numerical_radius_solve(c, &opts.solver)?;
    if opts.certificate {
        sol.result.certificate = Some(extreme_decomposition(&sol.primal_block, c)?);
    }
    Ok(sol.result)
}

/// `min tr X  s.t.  [X, C; C*, X] ⪰ 0`, started at `X = 2ω(C) I`.
pub fn dual_numerical_radius_solve(c: &ComplexMatrix, opts: &SolveOptions) -> Result<NormSolution> {
    require_square(c)?;
    let n = c.rows();
    let f = formulation::dual_numerical_radius(c);
    let (sol, w) = f.solve(opts)?;
    let x = formulation::hermitian_from_params(n, &sol.s_star);
    Ok(NormSolution {
        result: result_from(Quantity::DualNumericalRadius, &sol, 1.0),
        primal_block: x,
        dual_witness: off_diagonal_witness(&w, n, n),
        sdp: sol,
    })
}

pub fn op_norm_sdp(c: &ComplexMatrix, opts: &NormOptions) -> Result<NormResult> {
    if c.is_zero() {
        return Ok(NormResult::zero(Quantity::OperatorNorm, None));
    }
    Ok(op_norm_solve(c, &opts.solver)?.result)
}

/// `min a  s.t.  aI + S(C) ⪰ 0`, started at `a = 2ω(C)`.
pub fn op_norm_solve(c: &ComplexMatrix, opts: &SolveOptions) -> Result<NormSolution> {
    let (m, n) = (c.rows(), c.cols());
    let f = formulation::op_norm(c);
    let (sol, w) = f.solve(opts)?;
    Ok(NormSolution {
        result: result_from(Quantity::OperatorNorm, &sol, 1.0),
        primal_block: HermitianMatrix::identity(m + n).scale(sol.s_star[0]),
        dual_witness: off_diagonal_witness(&w, m, n),
        sdp: sol,
    })
}

pub fn nuclear_norm_sdp(c: &ComplexMatrix, opts: &NormOptions) -> Result<NormResult> {
    if c.is_zero() {
        return Ok(NormResult::zero(Quantity::NuclearNorm, None));
    }
    Ok(nuclear_norm_solve(c, &opts.solver)?.result)
}

/// `min tr X  s.t.  [X, C; C*, Y] ⪰ 0, tr X = tr Y`.
pub fn nuclear_norm_solve(c: &ComplexMatrix, opts: &SolveOptions) -> Result<NormSolution> {
    let (m, n) = (c.rows(), c.cols());
    let f = formulation::nuclear_norm(c);
    let (sol, w) = f.solve(opts)?;
    let block = f.slack(&sol.s_star);
    Ok(NormSolution {
        result: result_from(Quantity::NuclearNorm, &sol, 1.0),
        primal_block: block,
        dual_witness: off_diagonal_witness(&w, m, n),
        sdp: sol,
    })
}

/// Operator and nuclear norms straight from the SVD.
pub fn svd_norms(c: &ComplexMatrix) -> Result<(f64, f64)> {
    let n = norms(c)?;
    Ok((n.op, n.nuclear))
}

pub(crate) fn result_from(quantity: Quantity, sol: &SdpSolution, scale: f64) -> NormResult {
    NormResult {
        quantity,
        value: (sol.primal_value * scale).max(0.0),
        gap: sol.gap * scale,
        iterations: sol.iterations,
        status: sol.status,
        certificate: None,
    }
}

/// `-2 W₁₂` from a complex dual `W = [W₁₁, W₁₂; W₂₁, W₂₂]` with blocks `m`, `n`.
fn off_diagonal_witness(w: &HermitianMatrix, m: usize, n: usize) -> ComplexMatrix {
    w.as_matrix().block(0, m, m, n).scale((-2.0).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Complex64;

    fn real(rows: &[Vec<f64>]) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(rows).unwrap()
    }

    fn opts() -> NormOptions {
        NormOptions::default()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&ComplexMatrix::zeros(2, 2)), 1);
        assert_eq!(omega(&ComplexMatrix::identity(2)), 3);
        assert_eq!(omega(&real(&[vec![3.0, 0.0], vec![0.0, 4.0]])), 6);
    }

    #[test]
    fn radius_anchor_values() {
        let cases = [
            (real(&[vec![1.0, 0.0], vec![0.0, -1.0]]), 1.0),
            (real(&[vec![0.0, 1.0], vec![0.0, 0.0]]), 0.5),
            (ComplexMatrix::identity(3), 1.0),
        ];
        for (c, want) in cases {
            let r = numerical_radius(&c, &opts()).unwrap();
            assert!(r.converged());
            assert!((r.value - want).abs() < 1e-7, "{} vs {want}", r.value);
        }
    }

    #[test]
    fn dual_radius_anchor_values() {
        let cases = [
            (ComplexMatrix::identity(2), 2.0),
            (real(&[vec![0.0, 1.0], vec![0.0, 0.0]]), 2.0),
            (real(&[vec![2.0, 0.0], vec![0.0, -3.0]]), 5.0),
        ];
        for (c, want) in cases {
            let r = dual_numerical_radius(&c, &opts()).unwrap();
            assert!(r.converged());
            assert!((r.value - want).abs() < 1e-6, "{} vs {want}", r.value);
        }
    }

    #[test]
    fn op_and_nuclear_anchor_values() {
        let d = real(&[vec![3.0, 0.0], vec![0.0, 4.0]]);
        assert!((op_norm_sdp(&d, &opts()).unwrap().value - 4.0).abs() < 1e-7);
        assert_eq!(
            op_norm_sdp(&ComplexMatrix::zeros(2, 2), &opts())
                .unwrap()
                .value,
            0.0
        );
        let j2 = real(&[vec![0.0, 2.0], vec![0.0, 0.0]]);
        assert!((op_norm_sdp(&j2, &opts()).unwrap().value - 2.0).abs() < 1e-7);

        assert!((nuclear_norm_sdp(&d, &opts()).unwrap().value - 7.0).abs() < 1e-6);
        let swap = real(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!((nuclear_norm_sdp(&swap, &opts()).unwrap().value - 2.0).abs() < 1e-6);
        let u = [Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        let v = [Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)];
        let rank_one = ComplexMatrix::from_fn(2, 2, |i, j| u[i] * v[j].conj());
        assert!((nuclear_norm_sdp(&rank_one, &opts()).unwrap().value - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rectangular_norms() {
        let c = real(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]);
        let (op, nuc) = svd_norms(&c).unwrap();
        let a = op_norm_sdp(&c, &opts()).unwrap().value;
        let b = nuclear_norm_sdp(&c, &opts()).unwrap().value;
        assert!((a - op).abs() < 1e-6 * op);
        assert!((b - nuc).abs() < 1e-6 * nuc);
    }

    #[test]
    fn non_square_is_rejected() {
        let c = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            numerical_radius(&c, &opts()),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(
            dual_numerical_radius(&c, &opts()),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn zero_matrix_short_circuits() {
        let z = ComplexMatrix::zeros(3, 3);
        let o = NormOptions {
            certificate: true,
            ..opts()
        };
        let r = numerical_radius(&z, &o).unwrap();
        assert_eq!((r.value, r.iterations), (0.0, 0));
        let d = dual_numerical_radius(&z, &o).unwrap();
        assert_eq!(d.value, 0.0);
        assert_eq!(
            d.certificate,
            Some(Certificate::ExtremeDecomposition { terms: Vec::new() })
        );
    }

    #[test]
    fn dual_witnesses_pair_with_values() {
        let c = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(0.3, -0.2),
                Complex64::new(1.0, 0.5),
                Complex64::new(-0.4, 0.1),
                Complex64::new(0.2, 0.7),
            ],
        )
        .unwrap();
        let s = SolveOptions::default();
        for sol in [
            numerical_radius_solve(&c, &s).unwrap(),
            dual_numerical_radius_solve(&c, &s).unwrap(),
            op_norm_solve(&c, &s).unwrap(),
            nuclear_norm_solve(&c, &s).unwrap(),
        ] {
            let pairing = sol.dual_witness.adjoint().matmul(&c).trace().re;
            assert!(
                (pairing - sol.result.value).abs() < 1e-7,
                "{:?}: {pairing} vs {}",
                sol.result.quantity,
                sol.result.value
            );
        }
    }
}
