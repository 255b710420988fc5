//! Surface-plasmon ("plasmonic") contribution to the Casimir energy between
//! two thick plasma-model mirrors.
//!
//! Everything is expressed in the dimensionless variables
//! `K = |k| L`, `Ω = ω L / c` and `Ω_p = ω_p L / c`; the single physical
//! parameter is [`ScaledParams`]. The crate is organised bottom-up:
//!
//! - [`units`]: constants, scaled/physical parameters, the perfect-mirror energy.
//! - [`quad`] and [`roots`]: the adaptive quadrature and bracketed root finders
//!   every other module leans on.
//! - [`optics`]: plasma dielectric function, perpendicular wavevectors,
//!   Fresnel amplitudes and the cavity dispersion function.
//! - [`dispersion`]: the parametrized plasmon branches, their inversion
//!   `Ω_a(K)`, and density-of-states differences.
//! - [`energy`]: plasmonic correction factor (closed form and oracle),
//!   asymptotic constants, alternative branch splittings and the total
//!   Lifshitz energy.

pub mod dispersion;
pub mod energy;
pub mod error;
pub mod optics;
pub mod quad;
pub mod roots;
pub mod units;

pub use dispersion::{Branch, Branches, DispersionSample, DosSample};
pub use energy::{EnergyDecomposition, EtaBreakdown, SplitScheme};
pub use error::{Error, Result};
pub use optics::{Amplitude, FieldPoint, Polarization, Sector};
pub use quad::{Integral, QuadratureSpec};
pub use roots::RootSpec;
pub use units::{aleph, PhysicalConfig, ScaledParams};
