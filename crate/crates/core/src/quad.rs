//! Weighted integrals `2π² ∫ f g r³ dr` over balls of R⁴.
//!
//! Closed-form segments are integrated analytically (the primitive of
//! `r^a log^p r` is explicit), which is what makes energies of profiles with
//! an `r^{α−2}` singularity at the origin exact. Sampled segments and scalar
//! closures fall back to Gauss–Legendre panels, log-graded toward a singular
//! left endpoint (geometric ratio 0.5).

use crate::error::{Error, Result};
use crate::profile::{RadialProfile, SegmentKind, Term};

/// Panel quadrature controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureScheme {
    /// Gauss–Legendre points per panel.
    pub order: usize,
    /// Panels per octave for log-graded subdivisions and per unit length for
    /// uniform ones.
    pub panels_per_octave: usize,
    /// Geometric grading ratio toward a singular endpoint.
    pub grading_ratio: f64,
}

impl Default for QuadratureScheme {
    fn default() -> Self {
        QuadratureScheme { order: 12, panels_per_octave: 4, grading_ratio: 0.5 }
    }
}

impl QuadratureScheme {
    /// Doubles the panel density (used by self-consistency checks).
    pub fn refined(&self) -> Self {
        QuadratureScheme { panels_per_octave: 2 * self.panels_per_octave, ..*self }
    }
}

/// Gauss–Legendre nodes/weights on `[0, 1]`, computed by Newton iteration.
pub fn gauss_01(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Initial guess (Chebyshev-like) on [-1, 1].
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // Legendre P_n and derivative by recurrence.
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0, x);
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((x + 1.0) / 2.0, w / 2.0));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// Kahan-compensated accumulator.
#[derive(Default, Clone, Copy)]
pub struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    pub fn add(&mut self, v: f64) {
        let y = v - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// `∫₀^X r^a log^p r dr` for `a > −1` (zero lower limit is proper).
fn primitive_at(a: f64, p: u8, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if (a + 1.0).abs() < 1e-13 {
        // ∫ r^{-1} log^p r dr = log^{p+1} r / (p+1); only valid with a
        // positive lower limit — callers guard.
        return x.ln().powi(p as i32 + 1) / (p as f64 + 1.0);
    }
    let mut v = x.powf(a + 1.0) / (a + 1.0);
    if p == 0 {
        return v;
    }
    // I(a,p) = X^{a+1} log^p X/(a+1) − p/(a+1)·I(a,p−1)
    let mut acc = v * x.ln().powi(p as i32);
    let mut sign = -(p as f64) / (a + 1.0);
    let mut q = p as i32 - 1;
    while q >= 0 {
        v = x.powf(a + 1.0) / (a + 1.0) * x.ln().powi(q);
        acc += sign * v;
        sign *= -(q as f64) / (a + 1.0);
        q -= 1;
    }
    acc
}

fn primitive(a: f64, p: u8, lo: f64, hi: f64) -> f64 {
    primitive_at(a, p, hi) - primitive_at(a, p, lo)
}

/// Log-graded panel boundaries on `[lo, hi]`.
fn panels(lo: f64, hi: f64, q: &QuadratureScheme) -> Vec<f64> {
    let mut cuts = vec![lo];
    if lo > 0.0 && hi / lo > 4.0 {
        let octaves = (hi / lo).log2().ceil() as usize;
        let n = (octaves * q.panels_per_octave).max(2);
        for k in 1..n {
            cuts.push(lo * (hi / lo).powf(k as f64 / n as f64));
        }
    } else {
        let n = (q.panels_per_octave.max(2) as f64 * (hi - lo).max(1.0)).ceil() as usize;
        let n = n.max(4);
        for k in 1..n {
            cuts.push(lo + (hi - lo) * k as f64 / n as f64);
        }
    }
    cuts.push(hi);
    cuts
}

/// `∫_{lo}^{hi} f(r) dr` by Gauss panels (no weight).
pub fn integrate_fn(f: impl Fn(f64) -> f64, lo: f64, hi: f64, q: &QuadratureScheme) -> f64 {
    let gauss = gauss_01(q.order);
    let cuts = panels(lo, hi, q);
    let mut acc = Kahan::default();
    for w in cuts.windows(2) {
        let h = w[1] - w[0];
        for &(t, gw) in &gauss {
            acc.add(gw * h * f(w[0] + h * t));
        }
    }
    acc.value()
}

/// `2π² ∫₀^R f(r) r³ dr` for a scalar closure, with panels split at `cuts`.
pub fn ball_integral_fn(
    f: impl Fn(f64) -> f64,
    r_max: f64,
    extra_cuts: &[f64],
    q: &QuadratureScheme,
) -> f64 {
    let gauss = gauss_01(q.order);
    let mut cuts: Vec<f64> = vec![0.0, r_max];
    cuts.extend(extra_cuts.iter().copied().filter(|&c| c > 0.0 && c < r_max));
    // grade the first decade toward 0
    let mut g = r_max.min(1.0);
    for _ in 0..40 {
        g *= q.grading_ratio;
        if g < 1e-14 * r_max {
            break;
        }
        cuts.push(g);
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-300);
    let mut acc = Kahan::default();
    for w in cuts.windows(2) {
        for p in panels(w[0], w[1], q).windows(2) {
            let h = p[1] - p[0];
            for &(t, gw) in &gauss {
                let r = p[0] + h * t;
                acc.add(gw * h * f(r) * r * r * r);
            }
        }
    }
    2.0 * crate::PI2 * acc.value()
}

/// Term-list product integral `∫_{lo}^{hi} (Σ a)(Σ b) r³ dr`, exact.
fn analytic_product(a: &[Term], b: &[Term], lo: f64, hi: f64) -> Result<f64> {
    let mut acc = Kahan::default();
    for ta in a {
        for tb in b {
            let coef = ta.coef * tb.coef;
            if coef == 0.0 {
                continue;
            }
            let e = ta.exp + tb.exp + 3.0;
            let p = ta.logp + tb.logp;
            if lo == 0.0 && e <= -1.0 + 1e-13 {
                return Err(Error::Divergence(format!(
                    "non-integrable singularity r^{} log^{} at 0",
                    e - 3.0,
                    p
                )));
            }
            acc.add(coef * primitive(e, p, lo, hi));
        }
    }
    Ok(acc.value())
}

fn numeric_product(
    a: &RadialProfile,
    b: &RadialProfile,
    lo: f64,
    hi: f64,
    q: &QuadratureScheme,
) -> f64 {
    let gauss = gauss_01(q.order);
    let mut acc = Kahan::default();
    for p in panels(lo.max(1e-300), hi, q).windows(2) {
        let h = p[1] - p[0];
        for &(t, gw) in &gauss {
            let r = p[0] + h * t;
            acc.add(gw * h * a.eval(r) * b.eval(r) * r * r * r);
        }
    }
    acc.value()
}

/// Cut list shared by two profiles: breakpoints plus sampled-segment nodes.
fn shared_cuts(a: &RadialProfile, b: &RadialProfile) -> Vec<f64> {
    let mut cuts = vec![0.0, a.r_max];
    for p in [a, b] {
        cuts.extend(p.breakpoints());
        for s in &p.segments {
            if let SegmentKind::Sampled { rs, .. } = &s.kind {
                cuts.extend(rs.iter().copied());
            }
        }
    }
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup_by(|x, y| (*x - *y).abs() < 1e-15);
    cuts
}

/// `2π² ∫₀^R a(r) b(r) r³ dr`; analytic wherever both factors are closed-form.
pub fn ball_inner(a: &RadialProfile, b: &RadialProfile, q: &QuadratureScheme) -> Result<f64> {
    if (a.r_max - b.r_max).abs() > 1e-12 {
        return Err(Error::Inconsistent("profiles on different domains".into()));
    }
    let cuts = shared_cuts(a, b);
    let mut acc = Kahan::default();
    for w in cuts.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        let (sa, sb) = (seg_kind(a, mid), seg_kind(b, mid));
        match (sa.terms(), sb.terms()) {
            (Some(ta), Some(tb)) => acc.add(analytic_product(&ta, &tb, w[0], w[1])?),
            _ => acc.add(numeric_product(a, b, w[0], w[1], q)),
        }
    }
    Ok(2.0 * crate::PI2 * acc.value())
}

fn seg_kind<'a>(p: &'a RadialProfile, r: f64) -> &'a SegmentKind {
    for s in &p.segments {
        if r <= s.hi {
            return &s.kind;
        }
    }
    &p.segments.last().unwrap().kind
}

/// `‖p‖²_{L²(B)} = 2π² ∫ p² r³ dr`.
pub fn weighted_l2_norm_sq(p: &RadialProfile, q: &QuadratureScheme) -> Result<f64> {
    ball_inner(p, p, q)
}

/// `‖∇p‖²_{L²(B)} = 2π² ∫ p'² r³ dr` (closed forms differentiated exactly;
/// sampled segments use the Hermite derivative).
pub fn grad_l2_norm_sq(p: &RadialProfile, q: &QuadratureScheme) -> Result<f64> {
    let dp = derivative_profile(p)?;
    ball_inner(&dp, &dp, q)
}

/// Exact segment-wise derivative profile (sampled segments become sampled
/// derivative data evaluated through the Hermite interpolant).
pub fn derivative_profile(p: &RadialProfile) -> Result<RadialProfile> {
    let mut segments = Vec::new();
    for s in &p.segments {
        let kind = match s.kind.terms() {
            Some(terms) => {
                let d: Vec<Term> = terms.iter().flat_map(|t| t.deriv()).collect();
                SegmentKind::General { terms: d }
            }
            None => {
                // Piecewise-cubic Hermite derivative: sample densely.
                let n = 4 * match &s.kind {
                    SegmentKind::Sampled { rs, .. } => rs.len(),
                    _ => unreachable!(),
                };
                let rs: Vec<f64> = (0..=n)
                    .map(|i| s.lo + (s.hi - s.lo) * i as f64 / n as f64)
                    .collect();
                let vs: Vec<f64> = rs.iter().map(|&r| s.kind.deriv(r)).collect();
                let ds: Vec<f64> = rs
                    .iter()
                    .map(|&r| {
                        let h = (s.hi - s.lo) / (8.0 * n as f64);
                        (s.kind.deriv((r + h).min(s.hi)) - s.kind.deriv((r - h).max(s.lo)))
                            / ((r + h).min(s.hi) - (r - h).max(s.lo))
                    })
                    .collect();
                SegmentKind::Sampled { rs, vs, ds }
            }
        };
        segments.push(crate::profile::Segment { lo: s.lo, hi: s.hi, kind });
    }
    RadialProfile::new(p.r_max, segments)
}
