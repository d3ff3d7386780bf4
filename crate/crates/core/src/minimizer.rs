//! Closed-form minimizer of `‖Δu‖²` over the obstacle set
//! `K_D = {u ∈ H²₀,rad(B) : u(r) ≥ 1 − D r^α}`, its energy curves, and the
//! scans that certify the sharp constant `8π²α`.
//!
//! The minimizer is the obstacle on `[0, r₀]` and biharmonic on `(r₀, 1]`:
//!
//! ```text
//! u*(r) = 1 − D r^α                                   r ≤ r₀
//! u*(r) = b(r²−1) + c(1/r²−1) + 2(c−b) log r          r₀ < r ≤ 1
//! ```
//!
//! with C² matching at `r₀` and clamped conditions at 1. Writing `x = r₀²`,
//! the matching system determines
//!
//! ```text
//! b = (αD/4) x^{α/2}/(1−x) (α + 2/(1−x))
//! c = (αD/4) x^{α/2+1}/(x−1) (α − 2 + 2/(1−x))
//! D(x) = 4(x−1)² / (x^{α/2} E(x)),
//! E(x) = 4(x−1)² − 2α²(x−1)² + 2α(x²−1) + α(α(x²−1) − 2(x²+1)) log x
//! ```
//!
//! and the energy identity `‖Δu*‖² = D(x)² g(x)` with the bracketed density
//! `g`. `E` and `g` are evaluated by series near `x = 1` where the closed
//! forms are 0/0.

use crate::error::{Error, Result};
use crate::profile::{RadialProfile, Segment, SegmentKind};
use crate::PI2;
use serde::Serialize;

/// Parameters of the closed-form minimizer at contact abscissa `x = r₀²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinimizerClosedForm {
    pub alpha: f64,
    pub x: f64,
    pub r0: f64,
    pub d: f64,
    pub b: f64,
    pub c: f64,
}

/// `E(x)`, the bracket in the denominator of `D(x)`; series in `y = x−1`
/// below `|y| < 10⁻²` (the closed form is a 0/0 cancellation there).
pub fn energy_bracket(alpha: f64, x: f64) -> f64 {
    let y = x - 1.0;
    if y.abs() < 1e-2 {
        // E(y) = 4y² + Σ_{k≥3} E_k y^k,
        // E_k = P0(−1)^{k+1}/k + P1(−1)^k/(k−1) + P2(−1)^{k+1}/(k−2)
        let (p0, p1, p2) = (
            -4.0 * alpha,
            2.0 * alpha * (alpha - 2.0),
            alpha * (alpha - 2.0),
        );
        let mut s = 4.0 * y * y;
        let mut yk = y * y * y;
        for k in 3..60 {
            let kf = k as f64;
            let sgn = if k % 2 == 0 { -1.0 } else { 1.0 };
            let ek = p0 * sgn / kf - p1 * sgn / (kf - 1.0) + p2 * sgn / (kf - 2.0);
            s += ek * yk;
            if (ek * yk).abs() < 1e-18 * s.abs() {
                break;
            }
            yk *= y;
        }
        return s;
    }
    4.0 * y * y - 2.0 * alpha * alpha * y * y
        + 2.0 * alpha * (x * x - 1.0)
        + alpha * (alpha * (x * x - 1.0) - 2.0 * (x * x + 1.0)) * x.ln()
}

/// Obstacle amplitude `D(x)`.
pub fn d_of_x(alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(0.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("x = {x} outside (0,1)")));
    }
    let e = x.powf(alpha / 2.0) * energy_bracket(alpha, x);
    if e.abs() < 1e-30 {
        return Err(Error::DegenerateContact(format!(
            "D(x) denominator vanishes at x = {x}"
        )));
    }
    Ok(4.0 * (x - 1.0) * (x - 1.0) / e)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::Domain(format!("alpha = {alpha} outside (0,1)")));
    }
    Ok(())
}

/// Energy density `g(x)` in `‖Δu*‖² = D(x)² g(x)`; series in `w = 1−x`
/// above `x > 0.9`.
pub fn g_of_x(alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(0.0 < x && x <= 1.0) {
        return Err(Error::Domain(format!("x = {x} outside (0,1]")));
    }
    let a = alpha;
    if x > 0.9 {
        let w = 1.0 - x;
        // g = π² x^α [α(α+2)² + α²(c₋₁/w + Σ_{k≥0} c_k w^k)] with
        // P(w) = 4 + 2(α−2)w − (α−2)w², c_k from P² and the cubic Q.
        let (a1, a2) = (2.0 * (a - 2.0), -(a - 2.0));
        let p = [
            16.0,
            8.0 * a1,
            a1 * a1 + 8.0 * a2,
            2.0 * a1 * a2,
            a2 * a2,
        ];
        let q = [
            -8.0,
            12.0 - 8.0 * a,
            -2.0 * (a - 2.0) * (a - 2.0),
            a * (a - 4.0),
        ];
        let coef = |k: i32| -> f64 {
            let mut s = 0.0;
            for (i, &pi) in p.iter().enumerate() {
                let j = k + 4 - i as i32;
                if j >= 1 {
                    s += pi / j as f64;
                }
            }
            if (0..=3).contains(&(k + 3)) {
                s += 2.0 * q[(k + 3) as usize];
            }
            s
        };
        if w == 0.0 {
            return Err(Error::Domain("g diverges at x = 1 exactly".into()));
        }
        let inner0 = coef(-1) / w;
        let mut term = 0.0;
        let mut wk = 1.0;
        for k in 0..200 {
            let ck = coef(k);
            term += ck * wk;
            if k > 6 && (ck * wk).abs() < 1e-18 * (inner0.abs() + term.abs()) {
                break;
            }
            wk *= w;
        }
        return Ok(PI2 * x.powf(a) * (a * (a + 2.0) * (a + 2.0) + a * a * (inner0 + term)));
    }
    let om = 1.0 - x;
    Ok(PI2
        * x.powf(a)
        * (a * (a + 2.0) * (a + 2.0)
            - a * a * x.ln() * {
                let t = a + 2.0 - (a - 2.0) * x * x;
                t * t / (om * om * om * om)
            }
            + 2.0 * a * a / (om * om * om)
                * (a + 2.0 - a * x)
                * ((a - 4.0) * x * x + 2.0 * x - a - 2.0)))
}

/// `h(y) = 4y² + α(2−αy)(y−log(y+1)) − α((α−2)y+2)(−y+(y+1)log(1+y))`, the
/// `x → 1` expansion variable (`y = x−1`); `h(y)/(4y²) → 1`.
pub fn h_of_y(alpha: f64, y: f64) -> f64 {
    let l = y.ln_1p();
    4.0 * y * y + alpha * (2.0 - alpha * y) * (y - l)
        - alpha * ((alpha - 2.0) * y + 2.0) * (-y + (y + 1.0) * l)
}

/// Closed-form determinant of the 2×2 matching matrix,
/// `det(A) = −(8/r₀⁵)(r₀²−1)²`.
pub fn det_a(r0: f64) -> f64 {
    let s = r0 * r0 - 1.0;
    -8.0 / r0.powi(5) * s * s
}

/// The printed matrix `A` of the first-/second-derivative matching equations.
pub fn matching_matrix(r0: f64) -> [[f64; 2]; 2] {
    [
        [
            2.0 * (r0 - 1.0 / r0),
            2.0 / r0 * (1.0 - 1.0 / (r0 * r0)),
        ],
        [
            2.0 * (1.0 + 1.0 / (r0 * r0)),
            2.0 / (r0 * r0) * (3.0 / (r0 * r0) - 1.0),
        ],
    ]
}

/// Coefficients `(b, c, D)` from the printed closed forms.
pub fn coefficients_from_contact(alpha: f64, x: f64) -> Result<MinimizerClosedForm> {
    let d = d_of_x(alpha, x)?;
    let r0 = x.sqrt();
    let omx = 1.0 - x;
    let b = alpha * d / 4.0 * x.powf(alpha / 2.0) / omx * (alpha + 2.0 / omx);
    let c = alpha * d / 4.0 * x.powf(alpha / 2.0 + 1.0) / (x - 1.0) * (alpha - 2.0 + 2.0 / omx);
    Ok(MinimizerClosedForm { alpha, x, r0, d, b, c })
}

/// Independent 3×3 linear solve of the full C² matching system
/// (value, first and second derivative at `r₀`); unknowns `(b, c, D)`.
pub fn solve_matching_system(alpha: f64, r0: f64) -> Result<(f64, f64, f64)> {
    if !(0.0 < r0 && r0 < 1.0) {
        return Err(Error::Domain(format!("r0 = {r0} outside (0,1)")));
    }
    let a = alpha;
    let lr = r0.ln();
    #[rustfmt::skip]
    let mut m = [
        [r0 * r0 - 1.0 - 2.0 * lr, 1.0 / (r0 * r0) - 1.0 + 2.0 * lr, r0.powf(a),                         1.0],
        [2.0 * (r0 - 1.0 / r0),    2.0 / r0 * (1.0 - 1.0 / (r0 * r0)), a * r0.powf(a - 1.0),             0.0],
        [2.0 * (1.0 + 1.0 / (r0 * r0)), 2.0 / (r0 * r0) * (3.0 / (r0 * r0) - 1.0), a * (a - 1.0) * r0.powf(a - 2.0), 0.0],
    ];
    // Gaussian elimination with partial pivoting on the 3×4 augmented system.
    for col in 0..3 {
        let piv = (col..3)
            .max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())
            .unwrap();
        m.swap(col, piv);
        if m[col][col].abs() < 1e-300 {
            return Err(Error::DegenerateContact("singular matching system".into()));
        }
        for row in 0..3 {
            if row != col {
                let f = m[row][col] / m[col][col];
                for k in col..4 {
                    m[row][k] -= f * m[col][k];
                }
            }
        }
    }
    Ok((m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]))
}

/// Relative residuals of the three matching equations for `m`.
pub fn matching_residuals(m: &MinimizerClosedForm) -> [f64; 3] {
    let (a, r0, d, b, c) = (m.alpha, m.r0, m.d, m.b, m.c);
    let lr = r0.ln();
    let lhs = [
        1.0 - d * r0.powf(a),
        -a * d * r0.powf(a - 1.0),
        -a * (a - 1.0) * d * r0.powf(a - 2.0),
    ];
    let rhs = [
        (r0 * r0 - 1.0 - 2.0 * lr) * b + (1.0 / (r0 * r0) - 1.0 + 2.0 * lr) * c,
        2.0 * (r0 - 1.0 / r0) * b + 2.0 / r0 * (1.0 - 1.0 / (r0 * r0)) * c,
        2.0 * (1.0 + 1.0 / (r0 * r0)) * b + 2.0 / (r0 * r0) * (3.0 / (r0 * r0) - 1.0) * c,
    ];
    let mut out = [0.0; 3];
    for i in 0..3 {
        let scale = lhs[i].abs().max(rhs[i].abs()).max(1e-30);
        out[i] = (lhs[i] - rhs[i]).abs() / scale;
    }
    out
}

/// The two-piece minimizer profile; checks feasibility `u* ≥ ψ` on a dense
/// grid before returning.
pub fn minimizer_profile(m: &MinimizerClosedForm) -> Result<RadialProfile> {
    let p = RadialProfile::new(
        1.0,
        vec![
            Segment {
                lo: 0.0,
                hi: m.r0,
                kind: SegmentKind::Power { c0: 1.0, c1: -m.d, exp: m.alpha },
            },
            Segment {
                lo: m.r0,
                hi: 1.0,
                kind: SegmentKind::BiharmonicLog { b: m.b, c: m.c },
            },
        ],
    )?;
    // feasibility on a dense grid (log-graded + uniform)
    let mut worst: f64 = 0.0;
    for i in 0..=2000 {
        let r = i as f64 / 2000.0;
        if r <= m.r0 {
            continue;
        }
        let psi = 1.0 - m.d * r.powf(m.alpha);
        worst = worst.max(psi - p.eval(r));
    }
    if worst > 1e-9 {
        return Err(Error::Inconsistent(format!(
            "minimizer dips below the obstacle by {worst:.3e}"
        )));
    }
    Ok(p)
}

/// Closed-form energy `‖Δu*‖² = D(x)² g(x)`.
pub fn energy_closed_form(alpha: f64, x: f64) -> Result<f64> {
    Ok(d_of_x(alpha, x)?.powi(2) * g_of_x(alpha, x)?)
}

/// Callable energy curves for one `α`.
#[derive(Debug, Clone, Copy)]
pub struct EnergyCurves {
    pub alpha: f64,
}

impl EnergyCurves {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(EnergyCurves { alpha })
    }
    pub fn g(&self, x: f64) -> Result<f64> {
        g_of_x(self.alpha, x)
    }
    pub fn d(&self, x: f64) -> Result<f64> {
        d_of_x(self.alpha, x)
    }
    pub fn h(&self, y: f64) -> f64 {
        h_of_y(self.alpha, y)
    }
    /// `F_C(x) = D²g · log(e³ + C N √(log(2e + N)))`, `N = 1/√g`.
    pub fn f(&self, x: f64, c: f64) -> Result<f64> {
        let g = self.g(x)?;
        let d = self.d(x)?;
        let n = 1.0 / g.sqrt();
        let z = c * n * (2.0 * std::f64::consts::E + n).ln().sqrt();
        let log_arg = if z.is_finite() {
            ((std::f64::consts::E).powi(3) + z).ln()
        } else {
            c.ln() + (n * (2.0 * std::f64::consts::E + n).ln().sqrt()).ln()
        };
        Ok(d * d * g * log_arg)
    }
    /// `H_C(x) = D²g · log(C + 1/√g)`.
    pub fn h_curve(&self, x: f64, c: f64) -> Result<f64> {
        let g = self.g(x)?;
        let d = self.d(x)?;
        Ok(d * d * g * (c + 1.0 / g.sqrt()).ln())
    }
}

/// One row of a scan table.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ScanRow {
    pub x: f64,
    pub d: f64,
    pub g: f64,
    pub f: f64,
    pub h: Option<f64>,
}

/// Output of [`scan_constants`].
#[derive(Debug, Clone, Serialize)]
pub struct ScanResult {
    pub alpha: f64,
    pub lambda: Option<f64>,
    pub grid: Vec<ScanRow>,
    pub x_alpha: f64,
    pub y_alpha: f64,
    pub c_alpha: f64,
    pub x_lambda: Option<f64>,
    pub y_lambda: Option<f64>,
    pub c_lambda: Option<f64>,
    /// `min_x F_{C_α}(x)` over the grid.
    pub infimum_estimate: f64,
    /// Whether `D(x) − D_target` root multiplicity was observed anywhere on
    /// the grid (non-monotone `D`).
    pub d_non_monotone: bool,
}

/// Grid specification: `n` log-spaced points on `[x_min, x_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { x_min: 1e-10, x_max: 1.0 - 1e-13, n: 1200 }
    }
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                let t = i as f64 / (self.n - 1) as f64;
                self.x_min * (self.x_max / self.x_min).powf(t)
            })
            .collect()
    }
}

/// Scans `x ∈ (0,1]`, certifies `F_{C_α} ≥ 8π²α` on the grid and produces the
/// admissible constants `C_α` (and `C_λ` when `lambda` is given).
pub fn scan_constants(alpha: f64, lambda: Option<f64>, grid: &GridSpec) -> Result<ScanResult> {
    check_alpha(alpha)?;
    let bound = crate::sharp_constant(alpha);
    if let Some(l) = lambda {
        if l <= 1.0 / bound {
            return Err(Error::Domain(format!(
                "lambda = {l} must exceed 1/(8π²α) = {}",
                1.0 / bound
            )));
        }
    }
    let xs = grid.points();
    if xs.len() < 8 || xs[0] > 1e-2 {
        return Err(Error::ScanFailure(
            "grid must cover (0,1] logarithmically near 0".into(),
        ));
    }
    let curves = EnergyCurves::new(alpha)?;

    // The printed argument picks x_α so that F₁ ≥ 8π²α below it; numerically
    // F₁ dips under the bound as x → 0 (the convergence F₁ → 8π²α carries
    // −log log(1/x)/log(1/x) corrections), so the prefix can be empty. The
    // certificate that matters is grid-global: a C-ladder finds the smallest
    // power of ten with F_C ≥ 8π²α everywhere, and the printed formula — when
    // its prefix exists — only ever raises C.
    let f1: Vec<f64> = xs.iter().map(|&x| curves.f(x, 1.0)).collect::<Result<_>>()?;
    let mut prefix_end = None;
    for (i, &x) in xs.iter().enumerate() {
        if f1[i] >= bound {
            prefix_end = Some(x);
        } else {
            break;
        }
    }
    // diagnostic location: end of the F₁ prefix, or the argmin of F₁
    let x_alpha = prefix_end.unwrap_or_else(|| {
        let (mut xa, mut fmin) = (xs[0], f64::INFINITY);
        for (&x, &f) in xs.iter().zip(&f1) {
            if f < fmin {
                fmin = f;
                xa = x;
            }
        }
        xa
    });

    let y_alpha = xs
        .iter()
        .filter(|&&x| x >= x_alpha)
        .map(|&x| curves.g(x))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min);

    let mut c_work = None;
    for k in 0..=8 {
        let c = 10f64.powi(k);
        let ok = xs.iter().try_fold(true, |acc, &x| -> Result<bool> {
            Ok(acc && curves.f(x, c)? >= bound)
        })?;
        if ok {
            c_work = Some(c);
            break;
        }
    }
    let c_work = c_work.ok_or_else(|| {
        Error::ScanFailure("no C ≤ 1e8 certifies F_C ≥ 8π²α on the grid".into())
    })?;
    let c_alpha = if prefix_end.is_some() {
        let d_xa = curves.d(x_alpha)?;
        let printed =
            1.0 + (bound / (d_xa * d_xa * y_alpha)).min(700.0).exp() / y_alpha.sqrt();
        c_work.max(printed)
    } else {
        c_work
    };

    let (mut x_l, mut y_l, mut c_l) = (None, None, None);
    if let Some(l) = lambda {
        let mut xl_prefix = None;
        for &x in &xs {
            if l * curves.h_curve(x, 1.0)? >= 1.0 {
                xl_prefix = Some(x);
            } else {
                break;
            }
        }
        // same prefix caveat as for x_α above
        let xl = match xl_prefix {
            Some(x) => x,
            None => {
                let (mut xa, mut hmin) = (xs[0], f64::INFINITY);
                for &x in &xs {
                    let h = l * curves.h_curve(x, 1.0)?;
                    if h < hmin {
                        hmin = h;
                        xa = x;
                    }
                }
                xa
            }
        };
        let yl = xs
            .iter()
            .filter(|&&x| x >= xl)
            .map(|&x| curves.g(x))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        let mut cl_work = None;
        for k in 0..=8 {
            let c = 10f64.powi(k);
            let ok = xs.iter().try_fold(true, |acc, &x| -> Result<bool> {
                Ok(acc && l * curves.h_curve(x, c)? >= 1.0)
            })?;
            if ok {
                cl_work = Some(c);
                break;
            }
        }
        let cl_work = cl_work
            .ok_or_else(|| Error::ScanFailure("no C ≤ 1e8 certifies λH ≥ 1".into()))?;
        let cl = if xl_prefix.is_some() {
            let d_xl = curves.d(xl)?;
            cl_work.max(1.0 + (1.0 / (l * d_xl * d_xl * yl)).min(700.0).exp())
        } else {
            cl_work
        };
        x_l = Some(xl);
        y_l = Some(yl);
        c_l = Some(cl);
    }

    let mut rows = Vec::with_capacity(xs.len());
    let mut inf = f64::INFINITY;
    for &x in &xs {
        let f = curves.f(x, c_alpha)?;
        inf = inf.min(f);
        rows.push(ScanRow {
            x,
            d: curves.d(x)?,
            g: curves.g(x)?,
            f,
            h: c_l.map(|c| curves.h_curve(x, c)).transpose()?,
        });
    }

    // non-monotonicity probe for D on the grid
    let mut dir = 0i32;
    let mut non_monotone = false;
    for w in rows.windows(2) {
        let s = (w[1].d - w[0].d).signum() as i32;
        if s != 0 {
            if dir != 0 && s != dir {
                non_monotone = true;
            }
            dir = s;
        }
    }

    Ok(ScanResult {
        alpha,
        lambda,
        grid: rows,
        x_alpha,
        y_alpha,
        c_alpha,
        x_lambda: x_l,
        y_lambda: y_l,
        c_lambda: c_l,
        infimum_estimate: inf,
        d_non_monotone: non_monotone,
    })
}

/// Inverts `D(x) = D_target` by bracketing scan plus bisection; returns
/// `(x, multiple_roots_flag)` with the largest root.
pub fn contact_from_gap(alpha: f64, d_target: f64) -> Result<(f64, bool)> {
    check_alpha(alpha)?;
    if d_target <= 1.0 {
        return Err(Error::Domain(format!(
            "D_target = {d_target} must exceed 1 (D(1⁻) = 1)"
        )));
    }
    let grid = GridSpec { x_min: 1e-12, x_max: 1.0 - 1e-10, n: 4000 };
    let xs = grid.points();
    let fs: Vec<f64> = xs
        .iter()
        .map(|&x| Ok(d_of_x(alpha, x)? - d_target))
        .collect::<Result<_>>()?;
    let mut brackets = Vec::new();
    for i in 0..xs.len() - 1 {
        if fs[i] == 0.0 {
            brackets.push((xs[i], xs[i]));
        } else if fs[i] * fs[i + 1] < 0.0 {
            brackets.push((xs[i], xs[i + 1]));
        }
    }
    let multiple = brackets.len() > 1;
    let (mut lo, mut hi) = *brackets
        .last()
        .ok_or_else(|| Error::Bracket(format!("no sign change for D_target = {d_target}")))?;
    let flo = d_of_x(alpha, lo)? - d_target;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = d_of_x(alpha, mid)? - d_target;
        if fm == 0.0 || (hi - lo) < 1e-15 {
            lo = mid;
            break;
        }
        if fm * flo.signum() > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), multiple))
}
