mod common;

use common::{random_complex, random_hermitian, rng};
use numrad::linalg::{Complex64, ComplexMatrix};
use numrad::oracle::{crosscheck, disk_max, dual_lower_bound, sweep_radius, CrosscheckOptions};
use numrad::radius::{dual_numerical_radius, numerical_radius, NormOptions};

#[test]
fn sweep_brackets_the_sdp_value() {
    let mut g = rng(21);
    let eps = 1e-7;
    for n in 2..=6 {
        let c = random_complex(&mut g, n, n);
        let sdp = numerical_radius(&c, &NormOptions::default()).unwrap().value;
        let sweep = sweep_radius(&c, eps).unwrap().value;
        assert!(sweep <= sdp + 1e-6);
        assert!(sweep >= sdp - eps - 1e-6);
    }
}

#[test]
fn lower_bound_never_exceeds_dual_radius() {
    let mut g = rng(22);
    for (k, n) in (2..=4).enumerate() {
        let c = random_complex(&mut g, n, n);
        let upper = dual_numerical_radius(&c, &NormOptions::default())
            .unwrap()
            .value;
        let lower = dual_lower_bound(&c, 32, k as u64).unwrap();
        assert!(lower <= upper + 1e-6, "{lower} > {upper}");
        assert!(lower > 0.0);
    }
}

#[test]
fn disk_max_matches_sweep() {
    let mut g = rng(23);
    for n in 1..=4 {
        let a = random_hermitian(&mut g, n);
        let b = random_hermitian(&mut g, n);
        let c = ComplexMatrix::from_fn(n, n, |i, j| a[(i, j)] + Complex64::i() * b[(i, j)]);
        let sweep = sweep_radius(&c, 1e-9).unwrap().value;
        let disk = disk_max(&a, &b, 1e-9).unwrap();
        assert!(sweep >= 0.0);
        assert!((disk - sweep).abs() <= 1e-9);
    }
}

#[test]
fn crosscheck_report_serializes() {
    let c = random_complex(&mut rng(24), 3, 3);
    let report = crosscheck(
        &c,
        &CrosscheckOptions {
            trials: 8,
            ..CrosscheckOptions::default()
        },
    )
    .unwrap();
    assert!(report.all_passed, "{report:?}");
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["all_passed"], true);
    assert!(json["values"]["r_sdp"].as_f64().unwrap() > 0.0);
}
