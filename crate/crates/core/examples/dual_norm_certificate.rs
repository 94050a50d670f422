//! Dual numerical radius with its certificate: the matrix written as a
//! weighted sum of rank-one extreme points e^{iθ} vv*.
//!
//! cargo run --example dual_norm_certificate

use numrad::linalg::ComplexMatrix;
use numrad::radius::{dual_numerical_radius, Certificate, NormOptions};

fn main() -> numrad::Result<()> {
    let c = ComplexMatrix::from_real_rows(&[
        vec![0.0, 1.0, 0.0],
        vec![0.0, 0.0, 2.0],
        vec![-1.0, 0.0, 0.5],
    ])?;
    let opts = NormOptions {
        certificate: true,
        ..NormOptions::default()
    };
    let result = dual_numerical_radius(&c, &opts)?;
    println!(
        "r∨(C) = {:.10} after {} iterations",
        result.value, result.iterations
    );

    let cert = result.certificate.expect("certificate was requested");
    if let Certificate::ExtremeDecomposition { terms } = &cert {
        for (k, t) in terms.iter().enumerate() {
            println!("  term {k}: weight {:.6}, phase {:.6}", t.weight, t.phase);
        }
        println!("{} terms, total weight {:.10}", terms.len(), cert.value(&c));
    }
    let residual = cert.reconstruct(c.rows()).unwrap().sub(&c).frobenius_norm();
    println!("reconstruction residual {residual:.2e}");
    Ok(())
}
