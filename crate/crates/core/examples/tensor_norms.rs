//! Spectral and nuclear norms of real 2×m×n tensors, the sweep oracle, and the
//! symmetrized dual witness that certifies the nuclear norm.
//!
//! cargo run --example tensor_norms

use numrad::oracle::sweep_radius;
use numrad::radius::{dual_numerical_radius_solve, NormOptions};
use numrad::sdp::SolveOptions;
use numrad::tensor::{
    assemble_c, symmetrize_dual_witness, tensor_nuclear, tensor_spectral, tensor_spectral_sweep,
    Tensor2,
};

fn main() -> numrad::Result<()> {
    // cos θ F₁ + sin θ F₂ is a rotation for every θ.
    let rotation = Tensor2::from_slices(
        &[vec![1.0, 0.0], vec![0.0, 1.0]],
        &[vec![0.0, -1.0], vec![1.0, 0.0]],
    )?;
    let general = Tensor2::from_slices(
        &[vec![1.0, 0.5, 0.0], vec![-0.3, 0.0, 2.0]],
        &[vec![0.0, 1.0, -1.0], vec![0.7, 0.2, 0.0]],
    )?;

    let opts = NormOptions::default();
    for (name, t) in [("rotation", &rotation), ("general", &general)] {
        let spectral = tensor_spectral(t, &opts)?.value;
        let nuclear = tensor_nuclear(t, &opts)?.value;
        let sweep = tensor_spectral_sweep(t, 1e-9)?;
        println!("{name}: spectral {spectral:.8} (sweep {sweep:.8}), nuclear {nuclear:.8}");
        println!(
            "  ‖T‖_F² = {:.8} ≤ spectral · nuclear = {:.8}",
            t.frobenius_norm().powi(2),
            spectral * nuclear
        );
    }

    let (m, n) = general.dims();
    let c = assemble_c(&general);
    let sol = dual_numerical_radius_solve(&c, &SolveOptions::default())?;
    let d = symmetrize_dual_witness(&sol.dual_witness, m, n)?;
    println!(
        "symmetrized witness: r(D) = {:.8}, Re tr(C D*) = {:.8}, r∨(C) = {:.8}",
        sweep_radius(&d, 1e-9)?.value,
        c.matmul(&d.adjoint()).trace().re,
        sol.result.value
    );
    Ok(())
}
