//! Operator and nuclear norms from their SDP formulations, compared with the
//! values read off the singular value decomposition. Works for rectangular
//! matrices.
//!
//! cargo run --example matrix_norms_sdp

use numrad::linalg::{norms, Complex64, ComplexMatrix};
use numrad::radius::{nuclear_norm_solve, op_norm_solve};
use numrad::sdp::SolveOptions;

fn main() -> numrad::Result<()> {
    let c = ComplexMatrix::from_fn(2, 4, |i, j| {
        Complex64::new((i + 2 * j) as f64 - 3.0, (i as f64 - j as f64) * 0.5)
    });
    let svd = norms(&c)?;
    let opts = SolveOptions::default();

    let op = op_norm_solve(&c, &opts)?;
    let nuc = nuclear_norm_solve(&c, &opts)?;
    println!(
        "operator norm: sdp {:.10}  svd {:.10}",
        op.result.value, svd.op
    );
    println!(
        "nuclear norm:  sdp {:.10}  svd {:.10}",
        nuc.result.value, svd.nuclear
    );

    // Each dual witness F pairs with C to the computed value.
    for (name, sol) in [("operator", &op), ("nuclear", &nuc)] {
        let pairing = sol.dual_witness.adjoint().matmul(&c).trace().re;
        let dual = norms(&sol.dual_witness)?;
        println!(
            "{name}: Re tr(F*C) = {pairing:.10}, ‖F‖ = {:.6}, ‖F‖∨ = {:.6}",
            dual.op, dual.nuclear
        );
    }
    Ok(())
}
