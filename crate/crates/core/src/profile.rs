//! Piecewise representation of radial functions on `[0, R]`.
//!
//! A [`RadialProfile`] is an ordered list of segments tiling `[0, R]`. Each
//! segment is either one of the closed forms used by the analysis (powers,
//! the biharmonic-log branch, polynomials, general power-log sums) or a
//! sampled cubic-Hermite interpolant. Closed-form segments admit exact
//! differentiation; the R⁴ radial Laplacian `f'' + (3/r) f'` maps closed
//! forms to closed forms.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// One `coef · r^exp · (log r)^logp` term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coef: f64,
    pub exp: f64,
    pub logp: u8,
}

impl Term {
    pub fn new(coef: f64, exp: f64, logp: u8) -> Self {
        Term { coef, exp, logp }
    }

    pub fn eval(&self, r: f64) -> f64 {
        if self.coef == 0.0 {
            return 0.0;
        }
        if r == 0.0 {
            // limit as r -> 0+
            return if self.exp > 0.0 {
                0.0
            } else if self.exp == 0.0 && self.logp == 0 {
                self.coef
            } else {
                f64::NAN
            };
        }
        let mut v = self.coef * r.powf(self.exp);
        for _ in 0..self.logp {
            v *= r.ln();
        }
        v
    }

    /// d/dr of the term, as terms.
    pub fn deriv(&self) -> Vec<Term> {
        let mut out = Vec::new();
        if self.exp != 0.0 {
            out.push(Term::new(self.coef * self.exp, self.exp - 1.0, self.logp));
        }
        if self.logp > 0 {
            out.push(Term::new(
                self.coef * self.logp as f64,
                self.exp - 1.0,
                self.logp - 1,
            ));
        }
        out
    }

    /// R⁴ radial Laplacian of the term:
    /// `Δ(c r^β log^p r) = c r^{β−2} [β(β+2) log^p r + p(2β+2) log^{p−1} r + p(p−1) log^{p−2} r]`.
    pub fn laplacian(&self) -> Vec<Term> {
        let (c, b, p) = (self.coef, self.exp, self.logp);
        let mut out = Vec::new();
        let push = |out: &mut Vec<Term>, coef: f64, logp: i32| {
            if coef != 0.0 && logp >= 0 {
                out.push(Term::new(coef, b - 2.0, logp as u8));
            }
        };
        push(&mut out, c * b * (b + 2.0), p as i32);
        push(&mut out, c * p as f64 * (2.0 * b + 2.0), p as i32 - 1);
        push(&mut out, c * (p as f64) * (p as f64 - 1.0), p as i32 - 2);
        out
    }
}

/// Closed-form or sampled content of one segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "kebab-case")]
pub enum SegmentKind {
    /// `c0 + c1 · r^exp` (the obstacle `1 − D r^α` and its Laplacian live here).
    Power { c0: f64, c1: f64, exp: f64 },
    /// `b(r²−1) + c(1/r²−1) + 2(c−b) log r` — the biharmonic branch.
    BiharmonicLog { b: f64, c: f64 },
    /// `Σ coeffs[k] r^k`.
    Polynomial { coeffs: Vec<f64> },
    /// General sum of `coef · r^exp · log^p r` terms.
    General { terms: Vec<Term> },
    /// Cubic-Hermite samples (values and first derivatives at nodes).
    Sampled {
        rs: Vec<f64>,
        vs: Vec<f64>,
        ds: Vec<f64>,
    },
}

impl SegmentKind {
    /// Closed-form term expansion, if the kind is not sampled.
    pub fn terms(&self) -> Option<Vec<Term>> {
        match self {
            SegmentKind::Power { c0, c1, exp } => Some(vec![
                Term::new(*c0, 0.0, 0),
                Term::new(*c1, *exp, 0),
            ]),
            SegmentKind::BiharmonicLog { b, c } => Some(vec![
                Term::new(*b, 2.0, 0),
                Term::new(*c, -2.0, 0),
                Term::new(-b - c, 0.0, 0),
                Term::new(2.0 * (c - b), 0.0, 1),
            ]),
            SegmentKind::Polynomial { coeffs } => Some(
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| Term::new(c, k as f64, 0))
                    .collect(),
            ),
            SegmentKind::General { terms } => Some(terms.clone()),
            SegmentKind::Sampled { .. } => None,
        }
    }

    pub fn eval(&self, r: f64) -> f64 {
        match self {
            SegmentKind::Power { c0, c1, exp } => {
                c0 + c1 * if r == 0.0 && *exp > 0.0 { 0.0 } else { r.powf(*exp) }
            }
            SegmentKind::BiharmonicLog { b, c } => {
                b * (r * r - 1.0) + c * (1.0 / (r * r) - 1.0) + 2.0 * (c - b) * r.ln()
            }
            SegmentKind::Polynomial { coeffs } => {
                coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c)
            }
            SegmentKind::General { terms } => terms.iter().map(|t| t.eval(r)).sum(),
            SegmentKind::Sampled { rs, vs, ds } => hermite_eval(rs, vs, ds, r).0,
        }
    }

    pub fn deriv(&self, r: f64) -> f64 {
        match self {
            SegmentKind::Power { c1, exp, .. } => c1 * exp * r.powf(exp - 1.0),
            SegmentKind::BiharmonicLog { b, c } => {
                2.0 * b * r - 2.0 * c / (r * r * r) + 2.0 * (c - b) / r
            }
            SegmentKind::Polynomial { coeffs } => coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64 * r.powi(k as i32 - 1))
                .sum(),
            SegmentKind::General { terms } => terms
                .iter()
                .flat_map(|t| t.deriv())
                .map(|t| t.eval(r))
                .sum(),
            SegmentKind::Sampled { rs, vs, ds } => hermite_eval(rs, vs, ds, r).1,
        }
    }
}

/// Cubic Hermite evaluation on sorted nodes; returns (value, derivative).
fn hermite_eval(rs: &[f64], vs: &[f64], ds: &[f64], r: f64) -> (f64, f64) {
    let n = rs.len();
    if n == 1 {
        return (vs[0], ds[0]);
    }
    let i = match rs.binary_search_by(|a| a.partial_cmp(&r).unwrap()) {
        Ok(i) => i.min(n - 2),
        Err(i) => i.clamp(1, n - 1) - 1,
    };
    let h = rs[i + 1] - rs[i];
    let t = (r - rs[i]) / h;
    let (t2, t3) = (t * t, t * t * t);
    let v = vs[i] * (1.0 - 3.0 * t2 + 2.0 * t3)
        + ds[i] * h * (t - 2.0 * t2 + t3)
        + vs[i + 1] * (3.0 * t2 - 2.0 * t3)
        + ds[i + 1] * h * (t3 - t2);
    let d = (vs[i] * (-6.0 * t + 6.0 * t2)
        + ds[i] * h * (1.0 - 4.0 * t + 3.0 * t2)
        + vs[i + 1] * (6.0 * t - 6.0 * t2)
        + ds[i + 1] * h * (3.0 * t2 - 2.0 * t))
        / h;
    (v, d)
}

/// One piece of a profile on `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    #[serde(flatten)]
    pub kind: SegmentKind,
}

/// A radial function on `[0, R]` as ordered piecewise segments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialProfile {
    #[serde(rename = "R")]
    pub r_max: f64,
    pub segments: Vec<Segment>,
}

impl RadialProfile {
    /// Builds a profile after checking that segments tile `[0, R]`.
    pub fn new(r_max: f64, segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::Inconsistent("profile has no segments".into()));
        }
        if segments[0].lo != 0.0 {
            return Err(Error::Inconsistent("first segment must start at 0".into()));
        }
        for w in segments.windows(2) {
            if (w[0].hi - w[1].lo).abs() > 1e-14 {
                return Err(Error::Inconsistent(format!(
                    "gap/overlap between segments at r = {}",
                    w[0].hi
                )));
            }
        }
        let last = segments.last().unwrap();
        if (last.hi - r_max).abs() > 1e-14 {
            return Err(Error::Inconsistent("segments do not reach R".into()));
        }
        Ok(RadialProfile { r_max, segments })
    }

    /// Single-segment constructor.
    pub fn single(r_max: f64, kind: SegmentKind) -> Self {
        RadialProfile {
            r_max,
            segments: vec![Segment { lo: 0.0, hi: r_max, kind }],
        }
    }

    /// Constant profile.
    pub fn constant(r_max: f64, value: f64) -> Self {
        Self::single(r_max, SegmentKind::Polynomial { coeffs: vec![value] })
    }

    fn segment_at(&self, r: f64) -> &Segment {
        // Shared breakpoints resolve to the left segment (one-sided limits are
        // available through eval_side).
        for s in &self.segments {
            if r <= s.hi {
                return s;
            }
        }
        self.segments.last().unwrap()
    }

    pub fn eval(&self, r: f64) -> f64 {
        if r > self.r_max {
            return 0.0;
        }
        self.segment_at(r).kind.eval(r)
    }

    pub fn deriv(&self, r: f64) -> f64 {
        if r > self.r_max {
            return 0.0;
        }
        self.segment_at(r).kind.deriv(r)
    }

    /// One-sided evaluation at a breakpoint: `side = -1` evaluates the segment
    /// ending at `r`, `side = +1` the one starting there.
    pub fn eval_side(&self, r: f64, side: i32) -> f64 {
        if side < 0 {
            for s in &self.segments {
                if r <= s.hi {
                    return s.kind.eval(r);
                }
            }
        } else {
            for s in self.segments.iter().rev() {
                if r >= s.lo {
                    return s.kind.eval(r);
                }
            }
        }
        self.eval(r)
    }

    /// Interior breakpoints (segment junctions).
    pub fn breakpoints(&self) -> Vec<f64> {
        self.segments[..self.segments.len() - 1]
            .iter()
            .map(|s| s.hi)
            .collect()
    }

    /// Largest two-sided mismatch of values across interior breakpoints.
    pub fn continuity_residual(&self) -> f64 {
        self.breakpoints()
            .iter()
            .map(|&r| (self.eval_side(r, -1) - self.eval_side(r, 1)).abs())
            .fold(0.0, f64::max)
    }

    /// `(|u(R)|, |u'(R)|)` — residuals of the clamped boundary conditions.
    pub fn boundary_residual(&self) -> (f64, f64) {
        let r = self.r_max;
        (self.eval(r).abs(), self.deriv(r).abs())
    }

    /// Whether value and slope vanish at `R` within `tol` (H²₀-admissibility).
    pub fn is_h20_admissible(&self, tol: f64) -> bool {
        let (v, d) = self.boundary_residual();
        v <= tol && d <= tol
    }

    /// Segment-by-segment R⁴ radial Laplacian `f'' + (3/r) f'`.
    ///
    /// Closed-form kinds map to closed forms; sampled segments are rejected.
    pub fn laplacian(&self) -> Result<RadialProfile> {
        let mut segments = Vec::with_capacity(self.segments.len());
        for s in &self.segments {
            let terms = s.kind.terms().ok_or_else(|| {
                Error::Unsupported("laplacian of a sampled segment".into())
            })?;
            let lap: Vec<Term> = terms.iter().flat_map(|t| t.laplacian()).collect();
            segments.push(Segment {
                lo: s.lo,
                hi: s.hi,
                kind: simplify(lap),
            });
        }
        Ok(RadialProfile { r_max: self.r_max, segments })
    }

    /// Exact dilation `r ↦ p(k·r)` on closed forms (domain shrinks to `R/k`).
    pub fn dilate(&self, k: f64) -> Result<RadialProfile> {
        let lnk = k.ln();
        let mut segments = Vec::with_capacity(self.segments.len());
        for s in &self.segments {
            let terms = s.kind.terms().ok_or_else(|| {
                Error::Unsupported("dilation of a sampled segment".into())
            })?;
            // c (kr)^e (log k + log r)^p expanded binomially.
            let mut out = Vec::new();
            for t in &terms {
                let scale = t.coef * k.powf(t.exp);
                let p = t.logp as i64;
                for q in 0..=p {
                    let binom = (1..=p).product::<i64>() as f64
                        / ((1..=q).product::<i64>() as f64
                            * (1..=(p - q)).product::<i64>() as f64);
                    out.push(Term::new(
                        scale * binom * lnk.powi((p - q) as i32),
                        t.exp,
                        q as u8,
                    ));
                }
            }
            segments.push(Segment {
                lo: s.lo / k,
                hi: s.hi / k,
                kind: simplify(out),
            });
        }
        RadialProfile::new(self.r_max / k, segments)
    }

    /// Linear combination `a·p + b·q` of two closed-form profiles sharing a
    /// common refinement of breakpoints.
    pub fn linear_combination(a: f64, p: &RadialProfile, b: f64, q: &RadialProfile) -> Result<RadialProfile> {
        if (p.r_max - q.r_max).abs() > 1e-14 {
            return Err(Error::Inconsistent("profiles have different domains".into()));
        }
        let mut cuts: Vec<f64> = p
            .breakpoints()
            .into_iter()
            .chain(q.breakpoints())
            .chain([0.0, p.r_max])
            .collect();
        cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        cuts.dedup_by(|x, y| (*x - *y).abs() < 1e-15);
        let mut segments = Vec::new();
        for w in cuts.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let tp = p
                .segment_at(mid)
                .kind
                .terms()
                .ok_or_else(|| Error::Unsupported("combination of sampled segments".into()))?;
            let tq = q
                .segment_at(mid)
                .kind
                .terms()
                .ok_or_else(|| Error::Unsupported("combination of sampled segments".into()))?;
            let mut terms: Vec<Term> = tp.iter().map(|t| Term::new(a * t.coef, t.exp, t.logp)).collect();
            terms.extend(tq.iter().map(|t| Term::new(b * t.coef, t.exp, t.logp)));
            segments.push(Segment { lo: w[0], hi: w[1], kind: simplify(terms) });
        }
        RadialProfile::new(p.r_max, segments)
    }

    /// JSON serialization in the `{R, segments: [{lo, hi, kind, params}]}` schema.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Inconsistent(format!("bad profile JSON: {e}")))
    }
}

/// Merges equal-(exp, logp) terms and drops zeros; collapses to `General`.
fn simplify(mut terms: Vec<Term>) -> SegmentKind {
    terms.sort_by(|a, b| {
        a.exp
            .partial_cmp(&b.exp)
            .unwrap()
            .then(a.logp.cmp(&b.logp))
    });
    let mut merged: Vec<Term> = Vec::new();
    for t in terms {
        if let Some(last) = merged.last_mut() {
            if last.exp == t.exp && last.logp == t.logp {
                last.coef += t.coef;
                continue;
            }
        }
        merged.push(t);
    }
    merged.retain(|t| t.coef != 0.0);
    if merged.is_empty() {
        merged.push(Term::new(0.0, 0.0, 0));
    }
    SegmentKind::General { terms: merged }
}

/// The obstacle `ψ(r) = 1 − D r^α` on `[0, 1]`.
pub fn obstacle(d: f64, alpha: f64) -> RadialProfile {
    RadialProfile::single(1.0, SegmentKind::Power { c0: 1.0, c1: -d, exp: alpha })
}
