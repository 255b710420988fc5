use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::plasmonic::eta_plasmonic;
use crate::error::{Error, Result};
use crate::optics::reflection_imaginary_axis;
use crate::quad::{integrate, integrate_pieces, QuadratureSpec};
use crate::roots::{find_root, golden_section_max, RootSpec};
use crate::units::ScaledParams;

/// Total, plasmonic and photonic correction factors at one distance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyDecomposition {
    pub eta_plasmonic: f64,
    pub eta_total: f64,
    pub eta_photonic: f64,
    pub params: ScaledParams,
}

/// `Σ_μ ln(1 − r_μ² e^{−2κ})` at `Ω = iΞ`.
fn log_cavity_sum(xi: f64, kappa: f64, params: ScaledParams) -> f64 {
    let (te, tm) = reflection_imaginary_axis(xi, kappa, params);
    let decay = (-2.0 * kappa).exp();
    (-te * te * decay).ln_1p() + (-tm * tm * decay).ln_1p()
}

/// Total correction factor of the plasma model from the Lifshitz formula
/// at imaginary frequency:
/// `η = −(180/π⁴) ∫₀^∞ dΞ ∫_Ξ^∞ κ dκ Σ_μ ln D_μ(iΞ, K = √(κ² − Ξ²))`.
pub fn eta_total(params: ScaledParams, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let inner_spec = spec.scaled(0.1);
    let m = params.omega_p().min(1.0);
    let outer_points = [0.0, 0.1 * m, m, 1.0, 5.0, f64::INFINITY];
    let mut points: Vec<f64> = outer_points.to_vec();
    points.dedup();
    let mut failure: Option<Error> = None;
    let outer = integrate_pieces(
        |xi| {
            let inner = integrate(
                |t| {
                    let kappa = xi + t;
                    kappa * log_cavity_sum(xi, kappa, params)
                },
                0.0,
                f64::INFINITY,
                &inner_spec,
            );
            match inner {
                Ok(r) => r.value,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        },
        &points,
        spec,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(-180.0 / PI.powi(4) * outer?.value)
}

/// `η_pl`, `η` and `η_ph = η − η_pl` at one distance.
pub fn decompose(params: ScaledParams, spec: &QuadratureSpec) -> Result<EnergyDecomposition> {
    let eta_plasmonic = eta_plasmonic(params, spec)?.total;
    let eta_total = eta_total(params, spec)?;
    Ok(EnergyDecomposition {
        eta_plasmonic,
        eta_total,
        eta_photonic: eta_total - eta_plasmonic,
        params,
    })
}

fn eta_pl_at_ratio(ratio: f64, spec: &QuadratureSpec) -> Result<f64> {
    Ok(eta_plasmonic(ScaledParams::from_distance_ratio(ratio)?, spec)?.total)
}

/// Distance `L/λ_p` in `[lo, hi]` where `η_pl` changes sign.
pub fn plasmonic_sign_change(lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<f64> {
    let mut failure: Option<Error> = None;
    let root_spec = RootSpec::new(lo, hi)?.with_tol(1e-9)?;
    let x = find_root(
        |x| match eta_pl_at_ratio(x, spec) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        },
        &root_spec,
    );
    match failure {
        Some(e) => Err(e),
        None => x,
    }
}

/// Distance `L/λ_p` in `[lo, hi]` maximizing the plasmonic energy
/// `E_pl ∝ −η_pl / Ω_p³` at fixed `λ_p`.
pub fn plasmonic_energy_maximum(lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<f64> {
    golden_section_max(
        |x| {
            let wp = 2.0 * PI * x;
            Ok(-eta_pl_at_ratio(x, spec)? / wp.powi(3))
        },
        lo,
        hi,
        1e-6,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let spec = QuadratureSpec::default();
        for &(wp, eta) in &[
            (1.0, 0.204_391_3),
            (2.0 * PI, 0.604_079_5),
            (100.0, 0.961_397),
        ] {
            let v = eta_total(ScaledParams::new(wp).unwrap(), &spec).unwrap();
            assert!((v / eta - 1.0).abs() < 2e-6, "{wp}: {v} vs {eta}");
        }
    }

    #[test]
    fn photonic_is_the_remainder() {
        let d = decompose(ScaledParams::new(3.0).unwrap(), &QuadratureSpec::default()).unwrap();
        assert_eq!(d.eta_photonic, d.eta_total - d.eta_plasmonic);
        let resid = d.eta_plasmonic + d.eta_photonic - d.eta_total;
        assert!(resid.abs() <= 4.0 * f64::EPSILON * d.eta_plasmonic.abs().max(1.0));
    }
}
