//! Cross-checks every SDP value on a seeded random matrix against its
//! independent oracle and prints the report as JSON.
//!
//! cargo run --example crosscheck -- [seed]

use numrad::linalg::{Complex64, ComplexMatrix};
use numrad::oracle::{crosscheck, CrosscheckOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> numrad::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = ComplexMatrix::from_fn(4, 4, |_, _| {
        Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
    });
    let report = crosscheck(
        &c,
        &CrosscheckOptions {
            seed,
            ..CrosscheckOptions::default()
        },
    )?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    if !report.all_passed {
        std::process::exit(1);
    }
    Ok(())
}
