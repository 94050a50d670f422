//! Using the SDP solver directly.
//!
//! The first problem is real: the largest eigenvalue of a symmetric matrix
//! as `min t  s.t.  tI - A ⪰ 0`. The second is complex, written over
//! Hermitian blocks: the smallest `t` with `[t, z; z̄, t] - [1, i; -i, 1] ⪰ 0`.
//!
//! cargo run --example custom_sdp

use numrad::linalg::{Complex64, ComplexMatrix, HermitianMatrix, RealSymmetricMatrix};
use numrad::radius::HermitianSdp;
use numrad::sdp::{solve, SdpProblem, SolveOptions};

fn main() -> numrad::Result<()> {
    let a = RealSymmetricMatrix::new(3, vec![2.0, 1.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0, 4.0])?;
    let p = SdpProblem::new(
        a.scale(-1.0),
        vec![RealSymmetricMatrix::identity(3)],
        vec![1.0],
    )?
    .with_start(vec![10.0])?;
    let sol = solve(&p, &SolveOptions::default())?;
    let lambda_max = a.eig()?.values[0];
    println!(
        "λ_max by SDP {:.10} vs eigensolver {lambda_max:.10} ({} iterations)",
        sol.primal_value, sol.iterations
    );

    // Variables t (identity) and the real and imaginary parts of z.
    let off = |z: Complex64| {
        HermitianMatrix::from_matrix(
            &ComplexMatrix::new(2, 2, vec![0.0.into(), z, z.conj(), 0.0.into()]).unwrap(),
        )
    };
    let target = HermitianMatrix::from_matrix(&ComplexMatrix::new(
        2,
        2,
        vec![1.0.into(), Complex64::i(), -Complex64::i(), 1.0.into()],
    )?);
    let problem = HermitianSdp {
        x0: target.scale(-1.0),
        basis: vec![
            HermitianMatrix::identity(2),
            off(Complex64::new(1.0, 0.0)),
            off(Complex64::i()),
        ],
        cost: vec![1.0, 0.0, 0.0],
        start: vec![5.0, 0.0, 0.0],
    };
    let (sol, w) = problem.solve(&SolveOptions::default())?;
    println!(
        "complex problem: t = {:.10}, z = {:.6} + {:.6}i",
        sol.primal_value, sol.s_star[1], sol.s_star[2]
    );
    println!("dual trace {:.10} (the cost on t)", w.trace());
    Ok(())
}
