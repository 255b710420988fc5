use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use crate::dispersion::{Branch, Branches};
use crate::error::{Error, Result};
use crate::quad::{fixed_panels, integrate, integrate_pieces, QuadratureSpec};
use crate::units::{aleph, ScaledParams};

/// Plasmonic correction factor and its three contributions.
///
/// Each field already carries the prefactor `−ℵ/2`, so
/// `total == evanescent_sum + propagating_integral + boundary_term`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EtaBreakdown {
    /// `−(ℵ/2) ∫₀^∞ Σ_a c_a √g_a(z) dz`.
    pub evanescent_sum: f64,
    /// `−(ℵ/2) ∫_{−z_+}^0 √g_+(z) dz`.
    pub propagating_integral: f64,
    /// `−(ℵ/2) · (−⅔ z_+^{3/2})`.
    pub boundary_term: f64,
    pub total: f64,
    /// Sum of the quadrature error estimates, after the prefactor.
    pub error_estimate: f64,
}

/// Tail of `∫_U^∞ 2u Σ_a c_a √g_a(u²) du` from `Σ c_a √g_a ≈ −Ω_p e^{−2u}/(4√2)`.
fn evanescent_tail(omega_p: f64, u: f64) -> f64 {
    -omega_p * (-2.0 * u).exp() * (2.0 * u + 1.0) / (8.0 * SQRT_2)
}

/// Smallest integer cut-off whose tail (with a safety factor of four on
/// the limiting shape) stays below a tenth of `abs_tol`.
fn truncation_point(omega_p: f64, abs_tol: f64) -> f64 {
    let half_aleph = 0.5 * aleph();
    let target = if abs_tol > 0.0 { 0.1 * abs_tol } else { 1e-16 };
    let mut u = 8.0;
    while u < 400.0 && 4.0 * half_aleph * evanescent_tail(omega_p, u).abs() > target {
        u += 1.0;
    }
    u
}

/// Raw evanescent integral `∫₀^∞ Σ_a c_a √g_a(z) dz`, in `u = √z`.
pub(crate) fn evanescent_raw(branches: &Branches, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let wp = branches.params().omega_p();
    let u_max = truncation_point(wp, spec.abs_tol);
    let mut points = vec![0.0, u_max];
    for p in [1.0, wp] {
        if p > 0.0 && p < u_max {
            points.push(p);
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();
    let mut failure = None;
    let r = integrate_pieces(
        |u| match branches.evanescent_weighted_sum(u * u) {
            Ok(v) => 2.0 * u * v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        },
        &points,
        spec,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let r = r?;
    Ok((r.value + evanescent_tail(wp, u_max), r.error_estimate))
}

/// Raw propagating integral `∫_{−z_+}^0 √g_+ dz = ∫₀^{√z_+} 2y √g_+(−y²) dy`.
fn propagating_raw(branches: &Branches, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let zp = branches.z_plus();
    let mut failure = None;
    let r = integrate(
        |y| {
            let z = (-y * y).max(-zp);
            match branches.g(Branch::Plus, z) {
                Ok(g) => 2.0 * y * g.sqrt(),
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        },
        0.0,
        zp.sqrt(),
        spec,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let r = r?;
    Ok((r.value, r.error_estimate))
}

/// Plasmonic correction factor `η_pl(Ω_p)` from the parametrized branches.
pub fn eta_plasmonic(params: ScaledParams, spec: &QuadratureSpec) -> Result<EtaBreakdown> {
    spec.validate()?;
    let branches = Branches::new(params)?;
    let pre = -0.5 * aleph();
    let (ev, ev_err) = evanescent_raw(&branches, spec)?;
    let (pr, pr_err) = propagating_raw(&branches, spec)?;
    let boundary = -(2.0 / 3.0) * branches.z_plus().powf(1.5);
    let evanescent_sum = pre * ev;
    let propagating_integral = pre * pr;
    let boundary_term = pre * boundary;
    Ok(EtaBreakdown {
        evanescent_sum,
        propagating_integral,
        boundary_term,
        total: evanescent_sum + propagating_integral + boundary_term,
        error_estimate: -pre * (ev_err + pr_err),
    })
}

/// Cut-off `K` used by default for [`eta_plasmonic_oracle`].
pub fn default_oracle_k_max(params: ScaledParams) -> f64 {
    40.0 + 2.0 * params.omega_p()
}

/// Panel count used by default for [`eta_plasmonic_oracle`].
pub fn default_oracle_grid() -> usize {
    400
}

/// `η_pl` by direct integration over the wavevector,
/// `−ℵ ∫₀^{K_max} K [Ω_+ + Ω_− − 2Ω_0] dK` plus the exponential tail.
///
/// The frequencies come from inverting each branch at every node, and the
/// integral is a fixed composite Gauss–Legendre rule with `grid` panels of
/// eight nodes. Nothing here goes through the `z`-space integrals.
pub fn eta_plasmonic_oracle(params: ScaledParams, k_max: f64, grid: usize) -> Result<f64> {
    if !(k_max > 0.0 && k_max.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "k_max",
            value: k_max,
            reason: "must be finite and strictly positive",
        });
    }
    let branches = Branches::new(params)?;
    let integral = fixed_panels(
        |k| {
            let mut sum = 0.0;
            for branch in Branch::ALL {
                sum += branch.weight() * branches.omega_of_k(branch, k)?;
            }
            Ok(k * sum)
        },
        0.0,
        k_max,
        grid,
        8,
    )?;
    let wp = params.omega_p();
    let tail = aleph() * wp * (-2.0 * k_max).exp() * (2.0 * k_max + 1.0) / (16.0 * SQRT_2);
    Ok(-aleph() * integral + tail)
}
