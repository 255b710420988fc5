//! Casimir energy correction factors `η = E / E_Cas`.
//!
//! - [`eta_plasmonic`]: plasmonic part from the `z`-parametrized branches,
//!   with [`eta_plasmonic_oracle`] as an independent `K`-space evaluation.
//! - [`alpha_constants`], [`short_distance_fit`], [`gamma_constant`]:
//!   asymptotic constants and the corresponding approximations.
//! - [`eta_split`]: alternative conventions for the `ω_+` branch.
//! - [`eta_total`] and [`decompose`]: the full Lifshitz energy at
//!   imaginary frequency and the photonic remainder.

mod asymptotics;
mod plasmonic;
mod split;
mod total;

pub use asymptotics::{
    alpha_constants, alpha_constants_with, b_coefficient, eta_large_distance, eta_short_distance,
    gamma_constant, gamma_constant_with, short_distance_fit, short_distance_fit_with,
    AlphaConstants, GammaConstant, ShortDistanceFit,
};
pub use plasmonic::{
    default_oracle_grid, default_oracle_k_max, eta_plasmonic, eta_plasmonic_oracle, EtaBreakdown,
};
pub use split::{bordag_cutoff, eta_split, SplitScheme};
pub use total::{
    decompose, eta_total, plasmonic_energy_maximum, plasmonic_sign_change, EnergyDecomposition,
};
