//! Constants, the scaled distance parameter and physical-unit wrappers.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced Planck constant (J s), CODATA 2018 exact value.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum (m / s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// `ℵ = 180 / π³`, the normalisation of the perfect-mirror Casimir energy.
pub fn aleph() -> f64 {
    180.0 / (PI * PI * PI)
}

/// The dimensionless plasma frequency `Ω_p = ω_p L / c`.
///
/// This is the only parameter the plasmonic quantities depend on. The
/// distance ratio `L / λ_p` is derived from it so that the two can never
/// disagree.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct ScaledParams {
    omega_p: f64,
}

impl ScaledParams {
    pub fn new(omega_p_scaled: f64) -> Result<Self> {
        if !(omega_p_scaled.is_finite() && omega_p_scaled > 0.0) {
            return Err(Error::InvalidParameter {
                name: "omega_p_scaled",
                value: omega_p_scaled,
                reason: "must be finite and strictly positive",
            });
        }
        Ok(Self {
            omega_p: omega_p_scaled,
        })
    }

    /// Build from `L / λ_p`.
    pub fn from_distance_ratio(distance_ratio: f64) -> Result<Self> {
        if !(distance_ratio.is_finite() && distance_ratio > 0.0) {
            return Err(Error::InvalidParameter {
                name: "distance_ratio",
                value: distance_ratio,
                reason: "must be finite and strictly positive",
            });
        }
        Self::new(2.0 * PI * distance_ratio)
    }

    #[inline]
    pub fn omega_p(&self) -> f64 {
        self.omega_p
    }

    /// `L / λ_p = Ω_p / 2π`.
    #[inline]
    pub fn distance_ratio(&self) -> f64 {
        self.omega_p / (2.0 * PI)
    }

    /// Asymptotic surface-plasmon frequency `Ω_sp = Ω_p / √2`.
    #[inline]
    pub fn omega_sp(&self) -> f64 {
        self.omega_p * std::f64::consts::FRAC_1_SQRT_2
    }
}

/// Mirror geometry and material in SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConfig {
    /// `λ_p = 2π c / ω_p` in metres.
    pub plasma_wavelength: f64,
    /// `L` in metres.
    pub mirror_separation: f64,
    /// `A` in square metres.
    pub mirror_area: f64,
}

impl PhysicalConfig {
    pub fn new(plasma_wavelength: f64, mirror_separation: f64, mirror_area: f64) -> Result<Self> {
        let cfg = Self {
            plasma_wavelength,
            mirror_separation,
            mirror_area,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("plasma_wavelength", self.plasma_wavelength),
            ("mirror_separation", self.mirror_separation),
            ("mirror_area", self.mirror_area),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be finite and strictly positive",
                });
            }
        }
        Ok(())
    }

    /// Plasma frequency `ω_p = 2π c / λ_p` in rad / s.
    pub fn plasma_frequency(&self) -> f64 {
        2.0 * PI * SPEED_OF_LIGHT / self.plasma_wavelength
    }
}

/// `Ω_p = 2π L / λ_p`.
pub fn scale(config: &PhysicalConfig) -> Result<ScaledParams> {
    config.validate()?;
    ScaledParams::new(2.0 * PI * config.mirror_separation / config.plasma_wavelength)
}

/// Casimir energy between perfect mirrors, `-ħ c A / (4π ℵ L³)`, in joules.
pub fn e_casimir_perfect(config: &PhysicalConfig) -> Result<f64> {
    config.validate()?;
    let l = config.mirror_separation;
    Ok(-HBAR * SPEED_OF_LIGHT * config.mirror_area / (4.0 * PI * aleph() * l * l * l))
}
