//! Sup, L², H¹ and Hölder/Lipschitz norms of radial profiles, and the ratio
//! `N_α(u) = ‖u‖_{Ċα} / ‖Δu‖_{L²}`.
//!
//! For radial functions the Hölder sup over pairs of points of R⁴ reduces to
//! radius pairs: for collinear x, y one has |x−y| = ||x|−|y||, and any other
//! pair has |x−y| ≥ ||x|−|y||, so collinear pairs are extremal.

use crate::error::{Error, Result};
use crate::profile::RadialProfile;
use crate::quad::{grad_l2_norm_sq, weighted_l2_norm_sq, QuadratureScheme};

/// Aggregate of every norm used by the estimates.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct NormReport {
    pub sup_norm: f64,
    pub l2_ball: f64,
    pub grad_l2: f64,
    pub lap_l2: f64,
    pub lip_seminorm: f64,
    pub holder_seminorm: f64,
    /// `‖u‖_{Ċα}/‖Δu‖_{L²}`; `None` when `lap_l2 = 0`.
    pub n_alpha: Option<f64>,
}

/// Candidate radii: breakpoints, endpoints, dense uniform and log-graded
/// samples (the Hölder sup of obstacle-type profiles sits at or near r = 0,
/// but this is not assumed).
fn sample_grid(p: &RadialProfile, per_segment: usize) -> Vec<f64> {
    let mut rs = vec![0.0, p.r_max];
    rs.extend(p.breakpoints());
    for s in &p.segments {
        let n = per_segment;
        for i in 1..n {
            rs.push(s.lo + (s.hi - s.lo) * i as f64 / n as f64);
        }
        // log grading toward the left end of the segment
        let base = if s.lo == 0.0 { p.r_max * 1e-12 } else { s.lo };
        let top = (s.hi - s.lo).min(s.hi);
        if top > base * 4.0 {
            let octaves = (top / base).log2();
            let m = (octaves * 2.0).ceil() as usize;
            for k in 0..=m {
                let r = s.lo + base * (top / base).powf(k as f64 / m as f64);
                if r < s.hi {
                    rs.push(r);
                }
            }
        }
    }
    rs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    rs.dedup_by(|a, b| (*a - *b).abs() < 1e-300);
    rs
}

fn golden_max(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    const PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - PHI * (hi - lo);
    let mut x2 = lo + PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..60 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Sup of |p| (grid scan plus golden-section refinement).
pub fn sup_norm(p: &RadialProfile) -> f64 {
    let rs = sample_grid(p, 256);
    let mut best = (0usize, 0.0f64);
    for (i, &r) in rs.iter().enumerate() {
        let v = p.eval(r).abs();
        if v > best.1 {
            best = (i, v);
        }
    }
    let lo = if best.0 == 0 { rs[0] } else { rs[best.0 - 1] };
    let hi = if best.0 + 1 == rs.len() { rs[best.0] } else { rs[best.0 + 1] };
    let (_, v) = golden_max(lo, hi, |r| p.eval(r).abs());
    v.max(best.1)
}

/// Radius where the sup of |p| is attained.
pub fn sup_argmax(p: &RadialProfile) -> f64 {
    let rs = sample_grid(p, 256);
    let mut best = (0.0f64, -1.0f64);
    for &r in &rs {
        let v = p.eval(r).abs();
        if v > best.1 {
            best = (r, v);
        }
    }
    best.0
}

/// Lipschitz seminorm: sup of |p'|.
pub fn lip_seminorm(p: &RadialProfile) -> f64 {
    let rs = sample_grid(p, 256);
    let mut best = (0usize, 0.0f64);
    for (i, &r) in rs.iter().enumerate() {
        if r == 0.0 {
            continue; // p' may be singular only in a integrable sense; golden pass covers r→0
        }
        let v = p.deriv(r).abs();
        if v.is_finite() && v > best.1 {
            best = (i, v);
        }
    }
    let lo = if best.0 == 0 { rs[0] } else { rs[best.0 - 1] };
    let hi = if best.0 + 1 == rs.len() { rs[best.0] } else { rs[best.0 + 1] };
    let (_, v) = golden_max(lo.max(1e-300), hi, |r| {
        let d = p.deriv(r).abs();
        if d.is_finite() {
            d
        } else {
            0.0
        }
    });
    v.max(best.1)
}

/// Hölder seminorm `sup_{r≠s} |p(r)−p(s)|/|r−s|^α` over radius pairs,
/// coarse all-pairs scan then golden-section refinement of each coordinate.
///
/// `α = 1` returns the Lipschitz seminorm.
pub fn holder_seminorm(p: &RadialProfile, alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) || alpha == 0.0 {
        return Err(Error::Domain(format!("holder exponent {alpha} outside (0,1]")));
    }
    if alpha == 1.0 {
        return Ok(lip_seminorm(p));
    }
    let rs = sample_grid(p, 128);
    let vs: Vec<f64> = rs.iter().map(|&r| p.eval(r)).collect();
    if vs.iter().any(|v| !v.is_finite()) {
        return Err(Error::Divergence("unbounded profile".into()));
    }
    let mut best = (0usize, 0usize, 0.0f64);
    for i in 0..rs.len() {
        for j in (i + 1)..rs.len() {
            let ratio = (vs[i] - vs[j]).abs() / (rs[j] - rs[i]).powf(alpha);
            if ratio > best.2 {
                best = (i, j, ratio);
            }
        }
    }
    // refine each endpoint within its grid neighborhood, alternating
    let (mut ri, mut rj, mut val) = (rs[best.0], rs[best.1], best.2);
    let nb = |k: usize| {
        (
            if k == 0 { rs[0] } else { rs[k - 1] },
            if k + 1 == rs.len() { rs[k] } else { rs[k + 1] },
        )
    };
    let (ilo, ihi) = nb(best.0);
    let (jlo, jhi) = nb(best.1);
    for _ in 0..4 {
        let rj_c = rj;
        let (x, v) = golden_max(ilo, ihi.min(rj_c), |r| {
            if (rj_c - r).abs() < 1e-300 {
                return 0.0;
            }
            (p.eval(r) - p.eval(rj_c)).abs() / (rj_c - r).abs().powf(alpha)
        });
        if v > val {
            val = v;
            ri = x;
        }
        let ri_c = ri;
        let (y, v) = golden_max(jlo.max(ri_c), jhi, |r| {
            if (r - ri_c).abs() < 1e-300 {
                return 0.0;
            }
            (p.eval(r) - p.eval(ri_c)).abs() / (r - ri_c).abs().powf(alpha)
        });
        if v > val {
            val = v;
            rj = y;
        }
    }
    Ok(val)
}

/// Fills a complete [`NormReport`].
pub fn norms(p: &RadialProfile, alpha: f64, q: &QuadratureScheme) -> Result<NormReport> {
    let sup = sup_norm(p);
    let l2 = weighted_l2_norm_sq(p, q)?.max(0.0).sqrt();
    let grad = grad_l2_norm_sq(p, q)?.max(0.0).sqrt();
    let lap_p = p.laplacian()?;
    let lap = weighted_l2_norm_sq(&lap_p, q)?.max(0.0).sqrt();
    let lip = lip_seminorm(p);
    let holder = holder_seminorm(p, alpha)?;
    let n_alpha = if lap > 0.0 { Some(holder / lap) } else { None };
    Ok(NormReport {
        sup_norm: sup,
        l2_ball: l2,
        grad_l2: grad,
        lap_l2: lap,
        lip_seminorm: lip,
        holder_seminorm: holder,
        n_alpha,
    })
}
