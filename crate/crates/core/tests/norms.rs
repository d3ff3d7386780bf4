//! Norm evaluators against closed forms and a brute-force pair oracle.

use bilap::norms::{holder_seminorm, lip_seminorm, norms, sup_argmax, sup_norm};
use bilap::profile::{RadialProfile, SegmentKind};
use bilap::quad::QuadratureScheme;
use bilap::PI2;

fn bump2() -> RadialProfile {
    RadialProfile::single(1.0, SegmentKind::Polynomial { coeffs: vec![1.0, 0.0, -2.0, 0.0, 1.0] })
}

/// `r²(1−r²)²` peaks at r = 1/√3 with value 4/27.
fn ring() -> RadialProfile {
    RadialProfile::single(
        1.0,
        SegmentKind::Polynomial { coeffs: vec![0.0, 0.0, 1.0, 0.0, -2.0, 0.0, 1.0] },
    )
}

#[test]
fn sup_norm_closed_forms() {
    assert!((sup_norm(&bump2()) - 1.0).abs() < 1e-12);
    assert!((sup_norm(&ring()) - 4.0 / 27.0).abs() < 1e-12);
    // argmax is grid-resolution only (no golden refinement on the location)
    assert!((sup_argmax(&ring()) - 1.0 / 3.0f64.sqrt()).abs() < 5e-3);
}

/// `(1−r²)²` has derivative `−4r(1−r²)`, whose |·| peaks at r = 1/√3
/// with value 8/(3√3).
#[test]
fn lip_seminorm_closed_form() {
    let exact = 8.0 / (3.0 * 3.0f64.sqrt());
    assert!((lip_seminorm(&bump2()) / exact - 1.0).abs() < 1e-10);
}

/// Exhaustive dense-pair oracle (no refinement, many more points): the
/// production evaluator must agree to the oracle's own grid resolution.
#[test]
fn holder_seminorm_matches_brute_force_oracle() {
    let profiles = [("bump2", bump2()), ("ring", ring())];
    for (name, p) in &profiles {
        for &alpha in &[0.3, 0.5, 0.8] {
            let fast = holder_seminorm(p, alpha).unwrap();
            let n = 1500usize;
            let rs: Vec<f64> = (0..=n).map(|i| p.r_max * i as f64 / n as f64).collect();
            let vs: Vec<f64> = rs.iter().map(|&r| p.eval(r)).collect();
            let mut brute = 0.0f64;
            for i in 0..rs.len() {
                for j in (i + 1)..rs.len() {
                    let q = (vs[i] - vs[j]).abs() / (rs[j] - rs[i]).powf(alpha);
                    brute = brute.max(q);
                }
            }
            // refinement can only beat the oracle grid, never fall under it
            assert!(fast >= brute * (1.0 - 1e-12), "{name}@α={alpha}: {fast} < {brute}");
            assert!(fast <= brute * (1.0 + 1e-3), "{name}@α={alpha}: {fast} ≫ {brute}");
        }
    }
}

#[test]
fn holder_interpolates_sup_and_lip() {
    // ‖u‖_{Ċα} ≤ (2‖u‖_∞)^{1−α} |u|_{Lip}^α on a profile supported in [0,1]
    let p = bump2();
    let sup = sup_norm(&p);
    let lip = lip_seminorm(&p);
    for &alpha in &[0.2, 0.5, 0.9] {
        let h = holder_seminorm(&p, alpha).unwrap();
        let bound = (2.0 * sup).powf(1.0 - alpha) * lip.powf(alpha);
        assert!(h <= bound * (1.0 + 1e-9), "interpolation at α = {alpha}: {h} vs {bound}");
    }
}

#[test]
fn holder_alpha_one_is_lipschitz() {
    let p = ring();
    let h = holder_seminorm(&p, 1.0).unwrap();
    assert_eq!(h, lip_seminorm(&p));
    assert!(holder_seminorm(&p, 0.0).is_err());
    assert!(holder_seminorm(&p, 1.5).is_err());
}

/// `‖(1−r²)²‖²_{L²(B)} = 2π² ∫₀¹ (1−r²)⁴ r³ dr = 2π²/60 = π²/30`, and
/// `‖Δu‖² = 16π²` (same oracle as the FEM test).
#[test]
fn norm_report_closed_forms() {
    let q = QuadratureScheme::default();
    let rep = norms(&bump2(), 0.5, &q).unwrap();
    assert!((rep.l2_ball.powi(2) / (PI2 / 30.0) - 1.0).abs() < 1e-10);
    assert!((rep.lap_l2.powi(2) / (16.0 * PI2) - 1.0).abs() < 1e-10);
    let n = rep.n_alpha.unwrap();
    assert!((n - rep.holder_seminorm / rep.lap_l2).abs() < 1e-14);
}
