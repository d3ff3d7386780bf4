//! FEM discretization and the two obstacle solvers.

use bilap::minimizer::{coefficients_from_contact, energy_closed_form};
use bilap::solver::{
    assemble, cross_validate, qp_oracle, theta, PenalizationConfig, RadialGrid,
};
use bilap::PI2;
use proptest::prelude::*;

/// Analytic oracle: `u = (1−r²)²` has `Δu = −16 + 24r²` and
/// `‖Δu‖² = 2π² ∫ (−16+24r²)² r³ dr = 16π²`.
#[test]
fn fem_energy_matches_analytic_oracle() {
    let grid = RadialGrid::graded(256, 2.5).unwrap();
    let de = assemble(&grid).unwrap();
    let u = grid.interpolate(
        |r| (1.0 - r * r) * (1.0 - r * r),
        |r| -4.0 * r * (1.0 - r * r),
    );
    let e = de.a.quadratic_form(&u);
    assert!(
        (e / (16.0 * PI2) - 1.0).abs() < 1e-8,
        "FEM energy {e} vs 16π² = {}",
        16.0 * PI2
    );
}

#[test]
fn fem_energy_converges_with_refinement() {
    // quartic interpolation error shrinks with N; the discrete energy of the
    // obstacle minimizer decreases monotonically toward the closed form
    let exact = energy_closed_form(0.5, 0.25).unwrap();
    let m = coefficients_from_contact(0.5, 0.25).unwrap();
    let mut prev = f64::MAX;
    for &n in &[64usize, 128, 256] {
        let grid = RadialGrid::graded(n, 2.5).unwrap();
        let qp = qp_oracle(0.5, m.d, &grid).unwrap();
        let err = (qp.energy / exact - 1.0).abs();
        assert!(err < prev, "error not shrinking at N = {n}: {err}");
        prev = err;
    }
    assert!(prev < 1e-6);
}

#[test]
fn qp_oracle_first_order_conditions() {
    let grid = RadialGrid::graded(512, 2.5).unwrap();
    let m = coefficients_from_contact(0.5, 0.25).unwrap();
    let qp = qp_oracle(0.5, m.d, &grid).unwrap();
    assert!(qp.kkt_residual < 1e-10, "KKT residual {}", qp.kkt_residual);
    assert!(qp.feasibility_gap < 1e-9, "gap {}", qp.feasibility_gap);
    let exact = energy_closed_form(0.5, 0.25).unwrap();
    assert!((qp.energy / exact - 1.0).abs() < 1e-2);
}

#[test]
fn cross_validation_against_closed_form() {
    let grid = RadialGrid::graded(512, 2.5).unwrap();
    let cfg = PenalizationConfig::default();
    let cv = cross_validate(0.5, 0.25, &grid, &cfg).unwrap();
    assert!(cv.qp_energy_rel_err < 1e-2, "QP energy {}", cv.qp_energy_rel_err);
    assert!(cv.contact_err_cells <= 4.0, "contact off by {}", cv.contact_err_cells);
    assert!(cv.sup_err < 1e-4, "profile sup err {}", cv.sup_err);
    // the penalization scheme relaxes the constraint from below: its limit
    // is infeasible for this obstacle and its energy sits under the
    // constrained minimum (reported honestly; see the solver docs)
    assert!(cv.pen.feasibility_gap > 0.0);
    assert!(cv.pen.energy <= cv.qp.energy);
    assert!(!cv.pen.trace.is_empty());
}

#[test]
fn penalization_trace_follows_schedule() {
    let grid = RadialGrid::graded(128, 2.5).unwrap();
    let cfg = PenalizationConfig::default();
    let m = coefficients_from_contact(0.5, 0.25).unwrap();
    let res = bilap::solver::solve_penalized(0.5, m.d, &grid, &cfg).unwrap();
    // every scheduled ε appears, in order, with the final stage converged
    let mut seen = Vec::new();
    for t in &res.trace {
        if seen.last() != Some(&t.eps) {
            seen.push(t.eps);
        }
    }
    assert_eq!(seen, cfg.eps_schedule, "stages {seen:?}");
    assert!(res.iterations > 0);
}

#[test]
fn graded_grid_clusters_at_origin() {
    let grid = RadialGrid::graded(64, 2.5).unwrap();
    assert_eq!(grid.nodes[0], 0.0);
    assert_eq!(*grid.nodes.last().unwrap(), 1.0);
    let first = grid.nodes[1] - grid.nodes[0];
    let last = grid.nodes[64] - grid.nodes[63];
    assert!(first < last / 10.0, "no grading: {first} vs {last}");
    assert!(grid.nodes.windows(2).all(|w| w[1] > w[0]));
}

proptest! {
    /// θ_ε is the piecewise-linear switch: range, monotonicity, endpoints.
    #[test]
    fn theta_properties(t in -2.0f64..2.0, s in -2.0f64..2.0, eps in 1e-6f64..1.0) {
        let v = theta(t, eps);
        prop_assert!((0.0..=1.0).contains(&v));
        if t <= 0.0 { prop_assert_eq!(v, 1.0); }
        if t >= eps { prop_assert_eq!(v, 0.0); }
        if s < t { prop_assert!(theta(s, eps) >= v); }
        // Lipschitz with constant 1/ε
        prop_assert!((theta(s, eps) - v).abs() <= (s - t).abs() / eps + 1e-15);
    }
}
