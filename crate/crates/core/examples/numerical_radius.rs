//! Numerical radius of a few matrices, with a maximizing witness vector and
//! the angular sweep as an independent check.
//!
//! cargo run --example numerical_radius

use numrad::linalg::{Complex64, ComplexMatrix};
use numrad::oracle::sweep_radius;
use numrad::radius::{numerical_radius, Certificate, NormOptions};

fn main() -> numrad::Result<()> {
    let shift = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]])?;
    let rotation = ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]])?;
    let mixed = ComplexMatrix::new(
        3,
        3,
        vec![
            Complex64::new(1.0, 0.5),
            Complex64::new(0.0, 2.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.3, 0.0),
            Complex64::new(-0.5, -0.5),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.5, 0.0),
            Complex64::new(0.2, -0.7),
        ],
    )?;

    let opts = NormOptions {
        certificate: true,
        ..NormOptions::default()
    };
    for (name, c) in [
        ("shift", &shift),
        ("rotation", &rotation),
        ("mixed", &mixed),
    ] {
        let r = numerical_radius(c, &opts)?;
        let sweep = sweep_radius(c, 1e-9)?;
        println!(
            "{name}: r = {:.10} ({} iterations, gap {:.1e})",
            r.value, r.iterations, r.gap
        );
        println!(
            "  sweep value {:.10} at θ = {:.6}",
            sweep.value, sweep.theta
        );
        if let Some(cert @ Certificate::RadiusWitness { theta, .. }) = &r.certificate {
            println!("  witness at θ = {theta:.6} attains {:.10}", cert.value(c));
        }
    }
    Ok(())
}
