//! Plasma-model optics in scaled variables: dielectric function,
//! perpendicular wavevectors, Fresnel amplitudes and the cavity function
//! `D_μ = 1 − r_μ² e^{−2κ}`.
//!
//! Square roots follow the convention `Re κ > 0`, `Im κ < 0` for
//! `Im Ω > 0`, `Re Ω > 0`. The cut `Ω² > K²` on the real axis is resolved
//! as the limit from the upper half plane, so `Im κ = −sign(Re Ω)|κ|`
//! there. The continuation to `Re Ω < 0` keeps `Re κ > 0`, which is the
//! reflection symmetry `κ(−Ω*) = κ(Ω)*`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::ScaledParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarization {
    TE,
    TM,
}

impl Polarization {
    pub const ALL: [Polarization; 2] = [Polarization::TE, Polarization::TM];
}

/// Region of the real `(K, Ω)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    /// `K > Ω`: evanescent in the cavity and in the mirrors.
    Evanescent,
    /// `K < Ω < √(K² + Ω_p²)`: propagating in the cavity, total reflection.
    Cavity,
    /// `Ω² ≥ K² + Ω_p²`: propagating inside the metal as well.
    Bulk,
}

/// A frequency/wavevector pair `(Ω, K)` in scaled units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldPoint {
    pub omega_scaled: Complex64,
    pub k_scaled: f64,
}

impl FieldPoint {
    pub fn new(omega_scaled: Complex64, k_scaled: f64) -> Result<Self> {
        if !(k_scaled >= 0.0 && k_scaled.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "k_scaled",
                value: k_scaled,
                reason: "must be finite and nonnegative",
            });
        }
        if !(omega_scaled.re.is_finite() && omega_scaled.im.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "omega_scaled",
                value: omega_scaled.norm(),
                reason: "must be finite",
            });
        }
        Ok(Self {
            omega_scaled,
            k_scaled,
        })
    }

    /// Point at real frequency `Ω`.
    pub fn real(omega: f64, k: f64) -> Result<Self> {
        Self::new(Complex64::new(omega, 0.0), k)
    }

    /// Point at imaginary frequency `Ω = iΞ`.
    pub fn imaginary(xi: f64, k: f64) -> Result<Self> {
        Self::new(Complex64::new(0.0, xi), k)
    }

    /// Sector of a point on the real frequency axis, `None` off the axis.
    pub fn sector(&self, params: ScaledParams) -> Option<Sector> {
        if self.omega_scaled.im != 0.0 {
            return None;
        }
        let w = self.omega_scaled.re.abs();
        let k = self.k_scaled;
        let wp = params.omega_p();
        Some(if k > w {
            Sector::Evanescent
        } else if w * w < k * k + wp * wp {
            Sector::Cavity
        } else {
            Sector::Bulk
        })
    }
}

/// `ε(Ω) = 1 − Ω_p²/Ω²`.
pub fn epsilon(omega_scaled: Complex64, params: ScaledParams) -> Result<Complex64> {
    if omega_scaled == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain {
            what: "epsilon at zero frequency",
            value: 0.0,
        });
    }
    let wp = params.omega_p();
    Ok(1.0 - wp * wp / (omega_scaled * omega_scaled))
}

/// Real-frequency convenience wrapper around [`epsilon`].
pub fn epsilon_real(omega_scaled: f64, params: ScaledParams) -> Result<f64> {
    epsilon(Complex64::new(omega_scaled, 0.0), params).map(|e| e.re)
}

/// Square root of `w` on the sheet selected by the sign of `Re Ω`.
fn branch_sqrt(w: Complex64, re_omega: f64) -> Complex64 {
    if w.im == 0.0 {
        if w.re >= 0.0 {
            return Complex64::new(w.re.sqrt(), 0.0);
        }
        let m = (-w.re).sqrt();
        let im = if re_omega >= 0.0 { -m } else { m };
        return Complex64::new(0.0, im);
    }
    let s = w.sqrt();
    if s.re < 0.0 {
        -s
    } else {
        s
    }
}

/// `κ = √(K² − Ω²)`.
pub fn kappa(point: &FieldPoint) -> Complex64 {
    let w = point.omega_scaled;
    let k = point.k_scaled;
    branch_sqrt(k * k - w * w, w.re)
}

/// `κ_m = √(κ² + Ω_p²)`, evaluated from `K² − Ω² + Ω_p²` directly.
pub fn kappa_m(point: &FieldPoint, params: ScaledParams) -> Complex64 {
    let w = point.omega_scaled;
    let k = point.k_scaled;
    let wp = params.omega_p();
    branch_sqrt(k * k - w * w + wp * wp, w.re)
}

/// Outcome of a Fresnel amplitude evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Amplitude {
    Value(Complex64),
    /// The TM denominator `κ_m + εκ` vanishes: the point lies on the
    /// single-interface surface plasmon.
    Pole,
}

impl Amplitude {
    pub fn value(self) -> Option<Complex64> {
        match self {
            Amplitude::Value(v) => Some(v),
            Amplitude::Pole => None,
        }
    }

    pub fn is_pole(self) -> bool {
        matches!(self, Amplitude::Pole)
    }
}

const POLE_RELATIVE_THRESHOLD: f64 = 1e-12;

/// Fresnel reflection amplitude of a thick plasma mirror.
///
/// `r^TM` is evaluated after multiplying through by `Ω²`, which keeps it
/// finite down to `Ω = 0` where it tends to `−1`. The only point where
/// neither form is defined is `Ω = K = 0`.
pub fn reflection(
    point: &FieldPoint,
    pol: Polarization,
    params: ScaledParams,
) -> Result<Amplitude> {
    let k = kappa(point);
    let km = kappa_m(point, params);
    match pol {
        Polarization::TE => Ok(Amplitude::Value((k - km) / (k + km))),
        Polarization::TM => {
            let w2 = point.omega_scaled * point.omega_scaled;
            let wp2 = params.omega_p() * params.omega_p();
            let a = w2 * km;
            let b = (w2 - wp2) * k;
            let den = a + b;
            let scale = a.norm() + b.norm();
            if scale == 0.0 {
                return Err(Error::Domain {
                    what: "TM reflection at Omega = K = 0",
                    value: 0.0,
                });
            }
            if den.norm() <= POLE_RELATIVE_THRESHOLD * scale {
                return Ok(Amplitude::Pole);
            }
            Ok(Amplitude::Value((a - b) / den))
        }
    }
}

/// `D_μ = 1 − r_μ² e^{−2κ}`; a TM pole is passed through as
/// [`Amplitude::Pole`].
pub fn dispersion_d(
    point: &FieldPoint,
    pol: Polarization,
    params: ScaledParams,
) -> Result<Amplitude> {
    let r = match reflection(point, pol, params)? {
        Amplitude::Value(r) => r,
        Amplitude::Pole => return Ok(Amplitude::Pole),
    };
    let k = kappa(point);
    Ok(Amplitude::Value(1.0 - r * r * (-2.0 * k).exp()))
}

/// Real reflection amplitudes `(r^TE, r^TM)` at imaginary frequency
/// `Ω = iΞ`, where `κ = √(K² + Ξ²)` is passed in directly.
///
/// On this axis both amplitudes are real and lie in `(−1, 0]`.
pub fn reflection_imaginary_axis(xi: f64, kappa: f64, params: ScaledParams) -> (f64, f64) {
    let wp2 = params.omega_p() * params.omega_p();
    let km = (kappa * kappa + wp2).sqrt();
    let te = -wp2 / ((kappa + km) * (kappa + km));
    let xi2 = xi * xi;
    let a = xi2 * km;
    let b = (xi2 + wp2) * kappa;
    let tm = (a - b) / (a + b);
    (te, tm)
}
