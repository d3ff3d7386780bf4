//! Numerical machinery for sharp logarithmic and double-logarithmic L∞
//! inequalities for radial H² functions on the unit ball of R⁴.
//!
//! The library is organised around [`profile::RadialProfile`], a piecewise
//! closed-form (or sampled) radial function. On top of it sit:
//!
//! * [`quad`] — graded-panel quadrature of weighted norms `2π²∫ f² r³ dr`,
//! * [`norms`] — sup/L²/H¹ norms, Lipschitz and Hölder seminorms, `N_α`,
//! * [`minimizer`] — the closed-form minimizer of `‖Δu‖²` over the obstacle
//!   set `K_D = {u ∈ H²₀ radial : u ≥ 1 − D r^α}`, its energy curves and the
//!   scans certifying the sharp constant `8π²α`,
//! * [`extremal`] — the log-log extremal family `u_ε` and the sharpness
//!   sequence `u_n`,
//! * [`solver`] — a C¹ Hermite finite-element discretization of the obstacle
//!   problem with a primal active-set solver and the θ_ε-penalization scheme,
//! * [`dyadic`] — Littlewood-Paley analysis via the radial Fourier (Hankel)
//!   transform in R⁴,
//! * [`global`] — rescaling identities, the cutoff `φ_μ`, the `‖·‖_μ` norm
//!   and the global (whole-space) corollaries.
//!
//! All operations are pure functions of immutable inputs and safe to call
//! concurrently.

pub mod bessel;
pub mod dyadic;
pub mod error;
pub mod extremal;
pub mod global;
pub mod minimizer;
pub mod norms;
pub mod profile;
pub mod quad;
pub mod solver;

pub use error::{Error, Result};

/// π² as f64.
pub const PI2: f64 = 9.869604401089358;

/// The sharp constant 8π²α of the double-log inequality.
pub fn sharp_constant(alpha: f64) -> f64 {
    8.0 * PI2 * alpha
}
