use std::f64::consts::{PI, SQRT_2};
use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::plasmonic::eta_plasmonic;
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadratureSpec};
use crate::units::{aleph, ScaledParams};

/// Short-distance slope `α` and its split into the two coupled branches.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaConstants {
    pub alpha: f64,
    pub alpha_plus: f64,
    pub alpha_minus: f64,
}

/// Large-distance amplitude `Γ` with its three parts
/// (`+` evanescent, `−` evanescent, `+` propagating).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaConstant {
    pub gamma: f64,
    pub parts: [f64; 3],
}

/// Third-order short-distance coefficients `η ≈ αΩ_p/2π + (a + b ln Ω_p) Ω_p³`.
///
/// `a` is fitted together with two subleading terms `c_half √Ω_p` and
/// `c_one Ω_p`; `b` is fixed at `ℵ/(4√2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShortDistanceFit {
    pub a: f64,
    pub b: f64,
    pub c_half: f64,
    pub c_one: f64,
    pub omega_p_samples: Vec<f64>,
    /// `(η_pl − αΩ_p/2π)/Ω_p³` at the samples.
    pub reduced: Vec<f64>,
    pub rms_residual: f64,
}

fn internal_spec() -> QuadratureSpec {
    QuadratureSpec {
        abs_tol: 1e-13,
        rel_tol: 1e-12,
        max_subdivisions: 4000,
    }
}

/// `√(1 + e^{−u}) − 1` and `√(1 − e^{−u}) − 1` without cancellation.
fn alpha_terms(u: f64) -> (f64, f64) {
    let e = (-u).exp();
    let plus = e / ((1.0 + e).sqrt() + 1.0);
    let minus = -e / ((-(-u).exp_m1()).sqrt() + 1.0);
    (plus, minus)
}

/// `α`, `α_+`, `α_−` at a caller-chosen tolerance.
pub fn alpha_constants_with(spec: &QuadratureSpec) -> Result<AlphaConstants> {
    let pre = -PI * aleph() / SQRT_2;
    let plus = integrate(|u| 2.0 * u * alpha_terms(u).0, 0.0, f64::INFINITY, spec)?;
    let minus = integrate(|u| 2.0 * u * alpha_terms(u).1, 0.0, f64::INFINITY, spec)?;
    let both = integrate(
        |u| {
            let (p, m) = alpha_terms(u);
            2.0 * u * (p + m)
        },
        0.0,
        f64::INFINITY,
        spec,
    )?;
    Ok(AlphaConstants {
        alpha: pre * both.value,
        alpha_plus: pre * plus.value,
        alpha_minus: pre * minus.value,
    })
}

/// `α ≈ 1.790`, `α_+ ≈ −12.225`, `α_− ≈ 14.015`, computed once.
///
/// # Panics
///
/// Only if the fixed, smooth defining integrals fail to converge, which
/// would indicate a broken build of the quadrature module.
pub fn alpha_constants() -> AlphaConstants {
    static CELL: OnceLock<AlphaConstants> = OnceLock::new();
    *CELL.get_or_init(|| alpha_constants_with(&internal_spec()).expect("alpha integrals converge"))
}

/// `b = ℵ / (4√2)`.
pub fn b_coefficient() -> f64 {
    aleph() / (4.0 * SQRT_2)
}

/// `(√coth(y/2) − 1, √tanh(y/2) − 1)` without cancellation.
fn gamma_terms(y: f64) -> (f64, f64) {
    let coth_m1 = 2.0 / y.exp_m1();
    let coth = 1.0 + coth_m1;
    let tanh_m1 = -2.0 / (y.exp() + 1.0);
    let tanh = 1.0 + tanh_m1;
    (coth_m1 / (coth.sqrt() + 1.0), tanh_m1 / (tanh.sqrt() + 1.0))
}

/// `Γ` and its parts at a caller-chosen tolerance. `g_plus_scale`
/// multiplies the `+` branch integrands; `1.0` is the physical value.
pub fn gamma_constant_with(spec: &QuadratureSpec, g_plus_scale: f64) -> Result<GammaConstant> {
    let al = aleph();
    let ev_plus = integrate(|y| y.powf(1.5) * gamma_terms(y).0, 0.0, f64::INFINITY, spec)?;
    let ev_minus = integrate(|y| y.powf(1.5) * gamma_terms(y).1, 0.0, f64::INFINITY, spec)?;
    let prop = integrate(
        |y| {
            let c = (0.5 * y).cos() / (0.5 * y).sin();
            y.powf(1.5) * c.max(0.0).sqrt()
        },
        0.0,
        PI,
        spec,
    )?;
    let parts = [
        g_plus_scale * al * ev_plus.value,
        al * ev_minus.value,
        g_plus_scale * al * prop.value,
    ];
    Ok(GammaConstant {
        gamma: parts.iter().sum(),
        parts,
    })
}

/// `Γ ≈ 29.75` and parts `(8.89, −7.23, 28.09)`, computed once.
///
/// # Panics
///
/// Only if the fixed defining integrals fail to converge.
pub fn gamma_constant() -> GammaConstant {
    static CELL: OnceLock<GammaConstant> = OnceLock::new();
    *CELL.get_or_init(|| {
        gamma_constant_with(&internal_spec(), 1.0).expect("gamma integrals converge")
    })
}

/// Fit of the third-order coefficient `a` over twelve log-spaced
/// `Ω_p ∈ [0.02, 0.2]`, with the given quadrature tolerance.
pub fn short_distance_fit_with(spec: &QuadratureSpec) -> Result<ShortDistanceFit> {
    let alpha = alpha_constants_with(&internal_spec())?.alpha;
    let b = b_coefficient();
    let n = 12;
    let (lo, hi) = (0.02f64.ln(), 0.2f64.ln());
    let mut omega_p_samples = Vec::with_capacity(n);
    let mut reduced = Vec::with_capacity(n);
    for i in 0..n {
        let wp = (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp();
        let eta = eta_plasmonic(ScaledParams::new(wp)?, spec)?.total;
        omega_p_samples.push(wp);
        reduced.push((eta - alpha * wp / (2.0 * PI)) / wp.powi(3));
    }
    let design = DMatrix::from_fn(n, 3, |i, j| {
        let wp = omega_p_samples[i];
        match j {
            0 => 1.0,
            1 => wp.sqrt(),
            _ => wp,
        }
    });
    let rhs = DVector::from_iterator(
        n,
        omega_p_samples
            .iter()
            .zip(&reduced)
            .map(|(wp, r)| r - b * wp.ln()),
    );
    let coeffs = design
        .clone()
        .svd(true, true)
        .solve(&rhs, 1e-14)
        .map_err(|_| Error::Domain {
            what: "least-squares fit of the short-distance coefficient",
            value: f64::NAN,
        })?;
    let resid = &design * &coeffs - &rhs;
    Ok(ShortDistanceFit {
        a: coeffs[0],
        b,
        c_half: coeffs[1],
        c_one: coeffs[2],
        omega_p_samples,
        reduced,
        rms_residual: (resid.norm_squared() / n as f64).sqrt(),
    })
}

/// The short-distance fit at tight tolerance, computed once.
///
/// # Panics
///
/// Only if the plasmonic integrals fail to converge at the fixed sample
/// points.
pub fn short_distance_fit() -> &'static ShortDistanceFit {
    static CELL: OnceLock<ShortDistanceFit> = OnceLock::new();
    CELL.get_or_init(|| {
        let spec = QuadratureSpec {
            abs_tol: 1e-14,
            rel_tol: 1e-12,
            max_subdivisions: 4000,
        };
        short_distance_fit_with(&spec).expect("short-distance integrals converge")
    })
}

/// `αΩ_p/2π + (a + b ln Ω_p) Ω_p³`; meant for `Ω_p ≲ 1`.
pub fn eta_short_distance(params: ScaledParams) -> f64 {
    let wp = params.omega_p();
    let fit = short_distance_fit();
    alpha_constants().alpha * wp / (2.0 * PI) + (fit.a + fit.b * wp.ln()) * wp.powi(3)
}

/// `−Γ √Ω_p`; meant for `Ω_p ≳ 10`.
pub fn eta_large_distance(params: ScaledParams) -> f64 {
    -gamma_constant().gamma * params.omega_p().sqrt()
}
