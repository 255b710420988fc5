use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::plasmonic::{eta_plasmonic, evanescent_raw};
use crate::dispersion::{single_omega_squared, single_z_of_k, Branch, Branches};
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadratureSpec};
use crate::units::{aleph, ScaledParams};

/// Convention for which part of the `ω_+` branch counts as plasmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitScheme {
    /// Follow `ω_+` continuously into the propagating sector.
    Adiabatic,
    /// Cut `ω_+` at the light line, keep the evanescent segment above `K_c`
    /// and subtract `ω_0` only for `K ≥ K_c`.
    Bordag,
    /// Continue along the light line below `K_c`, subtract all of `ω_0`.
    LenacLightLine,
    /// Keep only the evanescent segment, subtract all of `ω_0`.
    LenacEvanescent,
}

impl SplitScheme {
    pub const ALL: [SplitScheme; 4] = [
        SplitScheme::Adiabatic,
        SplitScheme::Bordag,
        SplitScheme::LenacLightLine,
        SplitScheme::LenacEvanescent,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SplitScheme::Adiabatic => "adiabatic",
            SplitScheme::Bordag => "bordag",
            SplitScheme::LenacLightLine => "lenac-light",
            SplitScheme::LenacEvanescent => "lenac-evanescent",
        }
    }

    /// Caveat to print alongside results of this scheme, if any.
    pub fn warning(self) -> Option<&'static str> {
        match self {
            SplitScheme::LenacEvanescent => Some(
                "lenac-evanescent drops the light-line segment below K_c; its large-distance \
                 behaviour is not known to match published curves",
            ),
            _ => None,
        }
    }
}

impl std::fmt::Display for SplitScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SplitScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SplitScheme::ALL
            .into_iter()
            .find(|scheme| scheme.label() == s)
            .ok_or_else(|| format!("unknown scheme `{s}` (expected adiabatic, bordag, lenac-light or lenac-evanescent)"))
    }
}

/// Light-line crossing of `ω_+`: `K_c = Ω_p / √(1 + Ω_p/2)`.
pub fn bordag_cutoff(params: ScaledParams) -> f64 {
    let wp = params.omega_p();
    wp / (1.0 + 0.5 * wp).sqrt()
}

/// `Ω_0³(K) − K³`, from `Ω_0² − K² = −z_0(K)` without cancellation.
fn single_cube_excess(k: f64, params: ScaledParams) -> f64 {
    let w = single_omega_squared(k, params).sqrt();
    let d = -single_z_of_k(k, params);
    d * (w * w + w * k + k * k) / (w + k)
}

/// Correction factor under the chosen splitting of the plasmon branches.
pub fn eta_split(params: ScaledParams, scheme: SplitScheme, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    if scheme == SplitScheme::Adiabatic {
        return Ok(eta_plasmonic(params, spec)?.total);
    }
    let branches = Branches::new(params)?;
    let half = 0.5 * aleph();
    let eta_l = -half * evanescent_raw(&branches, spec)?.0;
    let k_c = bordag_cutoff(params);
    match scheme {
        SplitScheme::LenacLightLine => Ok(eta_l),
        SplitScheme::LenacEvanescent => Ok(eta_l + aleph() * k_c.powi(3) / 3.0),
        SplitScheme::Bordag => {
            let z_c = single_z_of_k(k_c, params);
            let mut failure: Option<Error> = None;
            let segment = integrate(
                |u| match branches.g(Branch::Single, u * u) {
                    Ok(g) => 2.0 * u * g.sqrt(),
                    Err(e) => {
                        failure.get_or_insert(e);
                        f64::NAN
                    }
                },
                0.0,
                z_c.sqrt(),
                spec,
            );
            if let Some(e) = failure {
                return Err(e);
            }
            let segment = segment?.value;
            Ok(eta_l - half * (segment + (2.0 / 3.0) * single_cube_excess(k_c, params)))
        }
        SplitScheme::Adiabatic => unreachable!("handled above"),
    }
}
