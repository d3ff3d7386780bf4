//! Acceptance suite: one test per criterion, one printed pass/fail line per
//! clause, tolerances pinned in the source.
//!
//! Two clauses are known-red and are asserted exactly as stated rather than
//! weakened: the double-log quotient of the extremal family at ε = 10⁻⁸ is
//! still ~66% above the sharp constant (the approach to the limit is
//! logarithmically slow in ε, see `loglog_limit_estimate` for the
//! structure-aware estimator that does pinch), and the penalization solver's
//! ε-schedule limit is infeasible for the power-law obstacle at this
//! resolution, so its energy and feasibility-gap clauses fail while the QP
//! oracle passes every check. Run `cargo test --test acceptance` to see the
//! per-clause breakdown.

use bilap::dyadic::{self, verify_ll_estimate, DecomposeConfig, FROZEN_CONSTANTS};
use bilap::extremal::{loglog_quotient, sharpness_term};
use bilap::global::{build_phi_mu, rescale_check, verify_global_log, verify_low_high_split};
use bilap::minimizer::{
    self, coefficients_from_contact, d_of_x, det_a, energy_closed_form, g_of_x, h_of_y,
    matching_matrix, matching_residuals, minimizer_profile, EnergyCurves, GridSpec,
};
use bilap::profile::{RadialProfile, SegmentKind};
use bilap::quad::{weighted_l2_norm_sq, QuadratureScheme};
use bilap::solver::{cross_validate, theta, PenalizationConfig, RadialGrid};
use bilap::{sharp_constant, PI2};

/// Collects named clauses, prints one line each, and fails the test if any
/// clause failed.
struct Criterion {
    id: u32,
    failures: usize,
}

impl Criterion {
    fn new(id: u32) -> Self {
        Criterion { id, failures: 0 }
    }

    fn clause(&mut self, pass: bool, name: &str, detail: String) {
        println!(
            "criterion {} [{}] {name}: {detail}",
            self.id,
            if pass { "pass" } else { "FAIL" }
        );
        if !pass {
            self.failures += 1;
        }
    }

    fn finish(self) {
        assert_eq!(self.failures, 0, "criterion {}: {} clause(s) failed", self.id, self.failures);
    }
}

/// Deterministic xorshift for the random (α, r₀) draws of criterion 3.
struct Rng(u64);
impl Rng {
    fn next(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next()
    }
}

/// Sharp-constant pinch: grid certificate from above (exact inequality
/// direction) and the extremal-family quotient from below.
///
/// Known red: at ε = 10⁻⁸ the quotient is ≈ 1.66·8π²α for every α tested —
/// the family converges like 1/log(1/ε) and 10⁻⁸ is far from the limit. The
/// clause is asserted as stated and fails.
#[test]
fn criterion_1_sharp_constant_pinch() {
    let mut c = Criterion::new(1);
    let grid = GridSpec::default();
    for &alpha in &[0.3, 0.5, 0.7] {
        let bound = sharp_constant(alpha);
        let res = minimizer::scan_constants(alpha, None, &grid).unwrap();
        c.clause(
            res.infimum_estimate >= bound,
            "grid certificate",
            format!("α = {alpha}: min F_C = {} ≥ {bound} (exact direction)", res.infimum_estimate),
        );
        let q = loglog_quotient(1e-8, alpha, 1.0).unwrap().quotient;
        c.clause(
            q <= 1.05 * bound,
            "quotient within 5% from above",
            format!("α = {alpha}: quotient {q} vs 1.05·{bound} = {}", 1.05 * bound),
        );
    }
    let v = sharp_constant(0.5);
    c.clause(
        (v - 39.4784).abs() < 1e-3,
        "pinched value at α = 0.5",
        format!("4π² = {v} vs 39.4784"),
    );
    c.finish();
}

/// Failure at the sharp constant: H_n dips below 8π²α with u_n(0) = 1 and
/// u_n feasible, approaching the constant monotonically.
#[test]
fn criterion_2_failure_at_sharp_constant() {
    let mut c = Criterion::new(2);
    let bound = sharp_constant(0.5);
    let mut prev = f64::MIN;
    let mut monotone = true;
    let mut below = false;
    for &n in &[100u64, 1_000, 10_000, 100_000, 1_000_000] {
        let t = sharpness_term(0.5, n).unwrap();
        c.clause(
            (t.u_n.eval(0.0) - 1.0).abs() < 1e-9,
            "normalization",
            format!("u_{n}(0) = {}", t.u_n.eval(0.0)),
        );
        c.clause(
            t.u_n.is_h20_admissible(1e-9),
            "feasibility",
            format!("u_{n} ∈ H²₀ within 1e-9"),
        );
        below |= t.h_n < bound;
        monotone &= t.h_n >= prev - 1e-6 * prev.abs();
        prev = t.h_n;
    }
    c.clause(below, "existence below the sharp constant", format!("H_n < {bound} for some n ≤ 1e6"));
    c.clause(monotone, "monotone approach", format!("H_n increasing within 1e-6 rel, last = {prev}"));
    c.finish();
}

/// Closed-form integrity at 50 random (α, r₀) pairs plus the frozen
/// determinant value.
#[test]
fn criterion_3_closed_form_integrity() {
    let mut c = Criterion::new(3);
    c.clause(
        (det_a(0.5) + 144.0).abs() < 1e-12,
        "frozen determinant",
        format!("det A(1/2) = {} vs −144", det_a(0.5)),
    );
    let mut rng = Rng(0x9e3779b97f4a7c15);
    let (mut worst_match, mut worst_bdry, mut worst_det) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..50 {
        let alpha = rng.in_range(0.05, 0.95);
        let r0 = rng.in_range(0.05, 0.95);
        let m = coefficients_from_contact(alpha, r0 * r0).unwrap();
        let res = matching_residuals(&m);
        for r in res {
            worst_match = worst_match.max(r.abs());
        }
        let u = minimizer_profile(&m).unwrap();
        let (bv, bd) = u.boundary_residual();
        worst_bdry = worst_bdry.max(bv.abs()).max(bd.abs());
        let mm = matching_matrix(r0);
        let direct = mm[0][0] * mm[1][1] - mm[0][1] * mm[1][0];
        worst_det = worst_det.max((direct / det_a(r0) - 1.0).abs());
    }
    c.clause(worst_match < 1e-9, "C² matching residuals", format!("worst {worst_match} < 1e-9"));
    c.clause(worst_bdry < 1e-10, "boundary residuals", format!("worst {worst_bdry} < 1e-10"));
    c.clause(worst_det < 1e-12, "determinant closed form", format!("worst rel {worst_det} < 1e-12"));
    c.finish();
}

/// Energy identity `‖Δu*‖² = D(x)²g(x)` on the (α, x) lattice down to
/// x = 10⁻⁴.
#[test]
fn criterion_4_energy_identity() {
    let mut c = Criterion::new(4);
    let q = QuadratureScheme::default();
    let mut worst = (0.0f64, 0.0, 0.0);
    for &alpha in &[0.2, 0.5, 0.8] {
        for &x in &[1e-4, 1e-3, 1e-2, 0.1, 0.25, 0.5, 0.75, 0.9] {
            let m = coefficients_from_contact(alpha, x).unwrap();
            let u = minimizer_profile(&m).unwrap();
            let e_quad = weighted_l2_norm_sq(&u.laplacian().unwrap(), &q).unwrap();
            let rel = (e_quad / energy_closed_form(alpha, x).unwrap() - 1.0).abs();
            if rel > worst.0 {
                worst = (rel, alpha, x);
            }
        }
    }
    c.clause(
        worst.0 < 1e-6,
        "lattice identity",
        format!("worst rel {} < 1e-6 at (α, x) = ({}, {})", worst.0, worst.1, worst.2),
    );
    c.finish();
}

/// Asymptotic ratio tests at three scales, each with monotone-improving
/// deviation, and D(1 − 10⁻⁴) = 1 ± 10⁻².
#[test]
fn criterion_5_asymptotics() {
    let mut c = Criterion::new(5);
    for &alpha in &[0.3, 0.5, 0.7] {
        let curves = EnergyCurves::new(alpha).unwrap();
        let bound = sharp_constant(alpha);
        let improving = |devs: &[f64]| devs.windows(2).all(|w| w[1] < w[0]);
        let devs = |f: &dyn Fn(f64) -> f64, xs: &[f64]| -> Vec<f64> {
            xs.iter().map(|&x| (f(x) - 1.0).abs()).collect()
        };
        let xs = [1e-4, 1e-6, 1e-8];
        let g_dev = devs(
            &|x| {
                g_of_x(alpha, x).unwrap()
                    / (PI2 * alpha * alpha * (alpha + 2.0) * (alpha + 2.0) * x.powf(alpha)
                        * (1.0 / x).ln())
            },
            &xs,
        );
        c.clause(improving(&g_dev), "g ratio", format!("α = {alpha}: deviations {g_dev:?}"));
        let d_dev = devs(
            &|x| {
                d_of_x(alpha, x).unwrap() * alpha * (2.0 + alpha) * x.powf(alpha / 2.0)
                    * (1.0 / x).ln()
                    / 4.0
            },
            &xs,
        );
        c.clause(improving(&d_dev), "D ratio", format!("α = {alpha}: deviations {d_dev:?}"));
        let f_dev = devs(&|x| curves.f(x, 100.0).unwrap() / bound, &xs);
        c.clause(improving(&f_dev), "F → 8π²α", format!("α = {alpha}: deviations {f_dev:?}"));
        let h_dev = devs(&|y| h_of_y(alpha, -y) / (4.0 * y * y), &[1e-2, 1e-3, 1e-4]);
        c.clause(improving(&h_dev), "h(y)/4y²", format!("α = {alpha}: deviations {h_dev:?}"));
        let d1 = d_of_x(alpha, 1.0 - 1e-4).unwrap();
        c.clause((d1 - 1.0).abs() < 1e-2, "D near x = 1", format!("α = {alpha}: D = {d1}"));
    }
    c.finish();
}

/// Solver cross-validation at N = 1024.
///
/// Known red: the penalization scheme converges to an infeasible limit for
/// the power-law obstacle (final gap ≈ 0.16, energy ≈ 53% of the constrained
/// minimum), so the three penalization clauses fail as stated. The QP oracle
/// side passes every check.
#[test]
fn criterion_6_solver_cross_validation() {
    let mut c = Criterion::new(6);
    let grid = RadialGrid::graded(1024, 2.5).unwrap();
    let cfg = PenalizationConfig::default();
    let cv = cross_validate(0.5, 0.25, &grid, &cfg).unwrap();
    c.clause(
        cv.solver_agreement < 5e-3,
        "penalization/QP energy agreement within 0.5%",
        format!("rel diff {}", cv.solver_agreement),
    );
    c.clause(
        cv.qp_energy_rel_err < 1e-2,
        "QP vs D²g within 1%",
        format!("rel err {}", cv.qp_energy_rel_err),
    );
    c.clause(
        cv.pen_energy_rel_err < 1e-2,
        "penalization vs D²g within 1%",
        format!("rel err {}", cv.pen_energy_rel_err),
    );
    c.clause(
        cv.contact_err_cells <= 4.0,
        "contact radius within 2 cells of √x",
        format!("{} half-cells", cv.contact_err_cells),
    );
    c.clause(
        cv.pen.feasibility_gap < 1e-3,
        "feasibility gap → 0 along the ε-schedule",
        format!("gap after the final ε stage: {}", cv.pen.feasibility_gap),
    );
    let mut theta_ok = true;
    for &eps in &[1e-2, 1e-4] {
        theta_ok &= theta(-1.0, eps) == 1.0 && theta(2.0 * eps, eps) == 0.0;
        theta_ok &= (theta(eps / 2.0, eps) - 0.5).abs() < 1e-12;
    }
    c.clause(theta_ok, "θ_ε switch properties", "endpoints and midpoint".into());
    c.finish();
}

/// Littlewood-Paley machinery with the calibration/validation split: the
/// frozen constants must hold on profiles they were never fitted to.
#[test]
fn criterion_7_littlewood_paley() {
    let mut c = Criterion::new(7);
    let cuts = dyadic::build_cutoffs(14);
    let res = cuts
        .partition_residual_inhomogeneous()
        .max(cuts.partition_residual_homogeneous());
    c.clause(res < 1e-10, "partition of unity", format!("residual {res} < 1e-10"));

    let cfg = DecomposeConfig::default();
    let mut worst_rec = (0.0f64, String::new());
    let mut worst_planch = (0.0f64, String::new());
    for (name, p) in dyadic::validation_corpus() {
        let d = dyadic::decompose(&p, &cfg).unwrap();
        let rec = d.reconstruction().unwrap();
        let err = (0..=400)
            .map(|i| {
                let r = p.r_max * i as f64 / 400.0;
                (rec.eval(r) - p.eval(r)).abs()
            })
            .fold(0.0f64, f64::max);
        if err > worst_rec.0 {
            worst_rec = (err, name.to_string());
        }
        let f = dyadic::radial_fourier_forward(&p, &dyadic::TransformGrid::default()).unwrap();
        let spatial = weighted_l2_norm_sq(&p, &QuadratureScheme::default()).unwrap();
        let perr = (f.l2_sq() / spatial - 1.0).abs();
        if perr > worst_planch.0 {
            worst_planch = (perr, name.to_string());
        }
    }
    c.clause(
        worst_rec.0 < 1e-4,
        "reconstruction",
        format!("worst {} < 1e-4 ({})", worst_rec.0, worst_rec.1),
    );
    c.clause(
        worst_planch.0 < 1e-6,
        "Plancherel",
        format!("worst rel {} < 1e-6 ({})", worst_planch.0, worst_planch.1),
    );

    let k = FROZEN_CONSTANTS;
    let mut split_ok = true;
    let mut chain_ok = true;
    for (name, p) in dyadic::validation_corpus() {
        for &alpha in &[0.3, 0.5, 0.8] {
            let r = verify_ll_estimate(&p, alpha, &cfg).unwrap();
            let ok = r.low_term <= k.c_low * r.l2
                && r.mid_sum <= k.c_mid * (r.m as f64).sqrt() * r.lap
                && r.tail_sum <= r.tail_bound
                && r.split_ratio <= k.c_split
                && r.prop_ratio <= k.c_prop;
            if !ok {
                println!("criterion 7        split chain broke on {name} at α = {alpha}");
            }
            split_ok &= ok;
            let lam = 2.0 / sharp_constant(alpha);
            let lh = verify_low_high_split(&p, alpha, lam, 100.0, &cfg).unwrap();
            chain_ok &= lh.low_ratio <= k.c_low
                && lh.h1_ratio <= bilap::global::C_H1
                && lh.lhs <= lh.rhs;
        }
    }
    c.clause(split_ok, "split estimate with frozen constants", "validation corpus".into());
    c.clause(chain_ok, "final corollary with frozen constants", "validation corpus".into());
    c.finish();
}

/// Global estimates: scaling invariance, cutoff constraints, the printed
/// cross-term bounds and the cutoff-localized inequality.
#[test]
fn criterion_8_global_estimates() {
    let mut c = Criterion::new(8);
    let alpha = 0.5;
    let lam = 2.0 / sharp_constant(alpha);
    let m = coefficients_from_contact(alpha, 0.25).unwrap();
    let u = minimizer_profile(&m).unwrap();
    let mut worst_scale = 0.0f64;
    for &r_scale in &[1.0, 2.0, 10.0] {
        let rep = rescale_check(&u, r_scale, alpha, lam, 100.0).unwrap();
        worst_scale = worst_scale.max(rep.n_invariance.abs());
    }
    c.clause(worst_scale < 1e-8, "scaling invariance", format!("worst {worst_scale} < 1e-8"));

    let cut = build_phi_mu(0.5).unwrap();
    c.clause(
        cut.grad_max <= 1.0 && cut.lap_max <= 1.0,
        "cutoff constraints",
        format!("|∇φ| {} ≤ 1, |Δφ| {} ≤ 1", cut.grad_max, cut.lap_max),
    );

    // tail-crossing profile so the cross terms are genuinely nonzero
    let s = 1.0 / 36.0;
    let wide = RadialProfile::single(
        6.0,
        SegmentKind::Polynomial {
            coeffs: vec![1.0, 0.0, -3.0 * s, 0.0, 3.0 * s * s, 0.0, -s * s * s],
        },
    );
    let mut cross_ok = true;
    let mut ineq_ok = true;
    for &mu in &[0.25, 0.5, 1.0] {
        let g = verify_global_log(&wide, alpha, lam, mu, 100.0).unwrap();
        cross_ok &= g.cross_i.abs() <= g.bound_i
            && g.cross_ii.abs() <= g.bound_ii
            && g.cross_iii.abs() <= g.bound_iii;
        ineq_ok &= g.lhs <= g.rhs;
    }
    c.clause(cross_ok, "cross-term bounds (I)-(III)", "μ ∈ {0.25, 0.5, 1}".into());
    c.clause(ineq_ok, "localized inequality", "μ ∈ {0.25, 0.5, 1}".into());

    let cfg = DecomposeConfig::default();
    let mut corpus_ok = true;
    for (_, p) in dyadic::calibration_corpus().into_iter().chain(dyadic::validation_corpus()) {
        for &mu in &[0.25, 0.5, 1.0] {
            let g = verify_global_log(&p, alpha, lam, mu, 100.0).unwrap();
            corpus_ok &= g.lhs <= g.rhs
                && g.cross_i.abs() <= g.bound_i
                && g.cross_ii.abs() <= g.bound_ii
                && g.cross_iii.abs() <= g.bound_iii;
        }
        let lh = verify_low_high_split(&p, alpha, lam, 100.0, &cfg).unwrap();
        corpus_ok &= lh.lhs <= lh.rhs;
    }
    c.clause(corpus_ok, "corpus-wide inequality", "both corpora, μ ∈ {0.25, 0.5, 1}".into());
    c.finish();
}

/// Full `report-all` suite: exits 0, finishes well under 10 minutes, and two
/// runs produce byte-identical artifacts.
#[test]
fn criterion_9_report_all_deterministic() {
    let mut c = Criterion::new(9);
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let t0 = std::time::Instant::now();
    for dir in [&a, &b] {
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_bilap"))
            .args(["report-all", "--format", "svg", "--out"])
            .arg(dir.path())
            .status()
            .unwrap();
        c.clause(status.code() == Some(0), "exit code", format!("{:?}", status.code()));
    }
    let elapsed = t0.elapsed().as_secs_f64();
    c.clause(elapsed < 600.0, "wall time", format!("{elapsed:.1}s for two runs < 600s"));

    fn walk(root: &std::path::Path, base: &std::path::Path, out: &mut Vec<std::path::PathBuf>) {
        for e in std::fs::read_dir(root).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                walk(&p, base, out);
            } else {
                out.push(p.strip_prefix(base).unwrap().to_path_buf());
            }
        }
    }
    let mut files = Vec::new();
    walk(a.path(), a.path(), &mut files);
    files.sort();
    let mut identical = !files.is_empty();
    for rel in &files {
        let left = std::fs::read(a.path().join(rel)).unwrap();
        let right = std::fs::read(b.path().join(rel)).unwrap_or_default();
        if left != right {
            println!("criterion 9        {} differs between runs", rel.display());
            identical = false;
        }
    }
    c.clause(
        identical,
        "determinism",
        format!("{} artifacts byte-identical across runs", files.len()),
    );
    c.finish();
}
