use numrad::linalg::RealSymmetricMatrix;
use numrad::sdp::{solve, SdpProblem, SolveOptions, SolveStatus};

/// `min a  s.t.  aI + S ⪰ 0` for a fixed symmetric `S`, optimum `-λ_min(S)`.
fn shifted_eigenvalue(cost: f64) -> SdpProblem {
    let s =
        RealSymmetricMatrix::new(3, vec![2.0, -1.0, 0.5, -1.0, 0.0, 1.5, 0.5, 1.5, -1.0]).unwrap();
    SdpProblem::new(s, vec![RealSymmetricMatrix::identity(3)], vec![cost])
        .unwrap()
        .with_start(vec![10.0])
        .unwrap()
}

#[test]
fn reaches_minimum_eigenvalue_bound() {
    let p = shifted_eigenvalue(1.0);
    let sol = solve(&p, &SolveOptions::default()).unwrap();
    let want = -p.x0().lambda_min().unwrap();
    assert_eq!(sol.status, SolveStatus::Optimal);
    assert!((sol.primal_value - want).abs() < 1e-8);
    assert!(sol.relative_gap() <= 1e-9);
}

#[test]
fn weak_duality_holds_at_every_iterate() {
    let p = shifted_eigenvalue(1.0);
    let full = solve(&p, &SolveOptions::default()).unwrap();
    for k in 0..=full.iterations {
        let opts = SolveOptions {
            max_iter: k,
            ..SolveOptions::default()
        };
        let sol = solve(&p, &opts).unwrap();
        assert!(
            sol.primal_value >= sol.dual_value - opts.eps_feas,
            "iterate {k}: {} < {}",
            sol.primal_value,
            sol.dual_value
        );
    }
}

#[test]
fn cost_scaling_scales_the_value() {
    let base = solve(&shifted_eigenvalue(1.0), &SolveOptions::default()).unwrap();
    for alpha in [0.25, 3.0, 40.0] {
        let scaled = solve(&shifted_eigenvalue(alpha), &SolveOptions::default()).unwrap();
        let want = alpha * base.primal_value;
        assert!((scaled.primal_value - want).abs() <= 1e-8 * want.abs().max(1.0));
    }
}

#[test]
fn identical_inputs_give_identical_runs() {
    let p = shifted_eigenvalue(1.0);
    let a = solve(&p, &SolveOptions::default()).unwrap();
    let b = solve(&p, &SolveOptions::default()).unwrap();
    assert_eq!(a.s_star, b.s_star);
    assert_eq!(a.z_star.data(), b.z_star.data());
    assert_eq!(a.iterations, b.iterations);
}

#[test]
fn iteration_cap_is_reported() {
    let p = shifted_eigenvalue(1.0);
    let sol = solve(
        &p,
        &SolveOptions {
            max_iter: 1,
            ..SolveOptions::default()
        },
    )
    .unwrap();
    assert_eq!(sol.status, SolveStatus::IterationCap);
    assert_eq!(sol.iterations, 1);
}
