//! Parametrized plasmon dispersion relations.
//!
//! Each branch is written as `Ω² = g_a(z)`, `K² = z + g_a(z)` with
//! `z = (κL)²`. With `s = √z`, `R = √(z + Ω_p²)` and
//! `T(z) = tanh(s/2)/s` (analytically continued to `tan(√−z/2)/√−z` for
//! `z < 0`):
//!
//! ```text
//! g_+(z) = Ω_p² / (1 + R T)
//! g_−(z) = Ω_p² zT / (zT + R)
//! g_0(z) = Ω_p² s / (s + R)
//! ```
//!
//! Only `g_+` continues to negative `z`, down to `−z_+` where `K = 0`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optics::{self, FieldPoint, Polarization};
use crate::roots::{find_root, RootSpec};
use crate::units::ScaledParams;

/// The two coupled plasmons and the isolated-interface plasmon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
    Single,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::Plus, Branch::Minus, Branch::Single];
    pub const COUPLED: [Branch; 2] = [Branch::Plus, Branch::Minus];

    /// Weight `c_a` of the branch in the plasmonic energy: `1, 1, −2`.
    pub fn weight(self) -> f64 {
        match self {
            Branch::Plus | Branch::Minus => 1.0,
            Branch::Single => -2.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
            Branch::Single => "single",
        }
    }
}

/// A point `(z, K, Ω)` on a branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DispersionSample {
    pub z: f64,
    pub k_scaled: f64,
    pub omega_scaled: f64,
    pub branch: Branch,
}

/// Density-of-states difference `δρ_a(Ω) = ρ_a(Ω) − ρ_0(Ω)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DosSample {
    pub omega_scaled: f64,
    pub delta_rho: f64,
    pub branch: Branch,
}

const SERIES_CUTOFF: f64 = 1e-3;

/// `T(z)`, with a Taylor series around the removable point `z = 0`.
fn t_fn(z: f64) -> f64 {
    if z.abs() < SERIES_CUTOFF {
        0.5 + z * (-1.0 / 24.0 + z * (1.0 / 240.0 + z * (-17.0 / 40320.0 + z * (31.0 / 725_760.0))))
    } else if z > 0.0 {
        let s = z.sqrt();
        (0.5 * s).tanh() / s
    } else {
        let s = (-z).sqrt();
        (0.5 * s).tan() / s
    }
}

fn t_prime(z: f64) -> f64 {
    if z.abs() < SERIES_CUTOFF {
        -1.0 / 24.0 + z * (1.0 / 120.0 + z * (-17.0 / 13440.0 + z * (124.0 / 725_760.0)))
    } else if z > 0.0 {
        let s = z.sqrt();
        let h = 0.5 * s;
        let sech = 1.0 / h.cosh();
        (h * sech * sech - h.tanh()) / (2.0 * s * s * s)
    } else {
        let s = (-z).sqrt();
        let h = 0.5 * s;
        let sec = 1.0 / h.cos();
        -(h * sec * sec - h.tan()) / (2.0 * s * s * s)
    }
}

/// Branch functions for one value of `Ω_p`, with `z_+` solved once.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Branches {
    params: ScaledParams,
    z_plus: f64,
}

impl Branches {
    pub fn new(params: ScaledParams) -> Result<Self> {
        Ok(Self {
            params,
            z_plus: solve_z_plus(params)?,
        })
    }

    pub fn params(&self) -> ScaledParams {
        self.params
    }

    pub fn z_plus(&self) -> f64 {
        self.z_plus
    }

    /// Smallest admissible `z` of a branch.
    pub fn z_min(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Plus => -self.z_plus,
            Branch::Minus | Branch::Single => 0.0,
        }
    }

    fn check_domain(&self, branch: Branch, z: f64) -> Result<()> {
        if !z.is_finite() || z < self.z_min(branch) {
            return Err(Error::Domain {
                what: match branch {
                    Branch::Plus => "g_plus requires z >= -z_plus",
                    Branch::Minus => "g_minus requires z >= 0",
                    Branch::Single => "g_single requires z >= 0",
                },
                value: z,
            });
        }
        Ok(())
    }

    /// `g_a(z)`.
    pub fn g(&self, branch: Branch, z: f64) -> Result<f64> {
        self.check_domain(branch, z)?;
        let wp2 = self.params.omega_p().powi(2);
        let r = (z + wp2).sqrt();
        Ok(match branch {
            Branch::Plus => wp2 / (1.0 + r * t_fn(z)),
            Branch::Minus => {
                let p = z * t_fn(z);
                wp2 * p / (p + r)
            }
            Branch::Single => {
                let s = z.sqrt();
                wp2 * s / (s + r)
            }
        })
    }

    /// `g_a′(z)`. The single-interface derivative diverges at `z = 0`,
    /// which is reported as a domain error.
    pub fn g_prime(&self, branch: Branch, z: f64) -> Result<f64> {
        self.check_domain(branch, z)?;
        let wp2 = self.params.omega_p().powi(2);
        let r = (z + wp2).sqrt();
        Ok(match branch {
            Branch::Plus => {
                let t = t_fn(z);
                let den = 1.0 + r * t;
                -wp2 * (t / (2.0 * r) + r * t_prime(z)) / (den * den)
            }
            Branch::Minus => {
                let t = t_fn(z);
                let p = z * t;
                let dp = t + z * t_prime(z);
                let den = p + r;
                wp2 * (dp * r - p / (2.0 * r)) / (den * den)
            }
            Branch::Single => {
                if z == 0.0 {
                    return Err(Error::Domain {
                        what: "g_single derivative diverges at z = 0",
                        value: z,
                    });
                }
                let s = z.sqrt();
                let den = s + r;
                wp2 * wp2 / (2.0 * s * r * den * den)
            }
        })
    }

    pub fn sample(&self, branch: Branch, z: f64) -> Result<DispersionSample> {
        let g = self.g(branch, z)?;
        let k2 = z + g;
        if k2 < 0.0 {
            // Only round-off at z = −z_+ can get here.
            if k2 > -1e-12 * g.max(1.0) {
                return Ok(DispersionSample {
                    z,
                    k_scaled: 0.0,
                    omega_scaled: g.sqrt(),
                    branch,
                });
            }
            return Err(Error::Domain {
                what: "sample requires z + g(z) >= 0",
                value: z,
            });
        }
        Ok(DispersionSample {
            z,
            k_scaled: k2.sqrt(),
            omega_scaled: g.sqrt(),
            branch,
        })
    }

    /// Parameter `z` of the branch point with wavevector `K`.
    pub fn z_of_k(&self, branch: Branch, k_scaled: f64) -> Result<f64> {
        if !(k_scaled >= 0.0 && k_scaled.is_finite()) {
            return Err(Error::Domain {
                what: "wavevector must be finite and nonnegative",
                value: k_scaled,
            });
        }
        let k2 = k_scaled * k_scaled;
        if branch == Branch::Single {
            return Ok(single_z_of_k(k_scaled, self.params));
        }
        let lo = self.z_min(branch);
        if k_scaled == 0.0 {
            return Ok(lo);
        }
        let wp2 = self.params.omega_p().powi(2);
        let hi = (4.0 * k2).max(10.0 * (1.0 + wp2));
        let spec = RootSpec::new(lo, hi)?.with_tol((1e-15 * k2).max(f64::MIN_POSITIVE))?;
        find_root(|z| z + self.g(branch, z).unwrap_or(f64::NAN) - k2, &spec)
    }

    /// `Ω_a(K)` on the branch.
    pub fn omega_of_k(&self, branch: Branch, k_scaled: f64) -> Result<f64> {
        if branch == Branch::Single {
            if !(k_scaled >= 0.0 && k_scaled.is_finite()) {
                return Err(Error::Domain {
                    what: "wavevector must be finite and nonnegative",
                    value: k_scaled,
                });
            }
            return Ok(single_omega_squared(k_scaled, self.params).sqrt());
        }
        if k_scaled == 0.0 {
            return Ok(match branch {
                Branch::Plus => self.z_plus.sqrt(),
                _ => 0.0,
            });
        }
        let z = self.z_of_k(branch, k_scaled)?;
        Ok(self.g(branch, z)?.sqrt())
    }

    /// `Σ_a c_a √g_a(z)` for `z ≥ 0`.
    ///
    /// For large `z` the three terms agree to `O(e^{−√z})` and their
    /// weighted sum is `O(e^{−2√z})`. There the sum is rearranged so that
    /// the small factor `1 − tanh(√z/2)` is carried explicitly.
    pub fn evanescent_weighted_sum(&self, z: f64) -> Result<f64> {
        if z.is_nan() || z < 0.0 {
            return Err(Error::Domain {
                what: "evanescent sum requires z >= 0",
                value: z,
            });
        }
        let gp = self.g(Branch::Plus, z)?;
        let gm = self.g(Branch::Minus, z)?;
        let g0 = self.g(Branch::Single, z)?;
        let s = z.sqrt();
        if s < 5.0 {
            return Ok(gp.sqrt() + gm.sqrt() - 2.0 * g0.sqrt());
        }
        let wp2 = self.params.omega_p().powi(2);
        let r = (z + wp2).sqrt();
        let st = (0.5 * s).tanh();
        let q = 2.0 / (1.0 + s.exp());
        let (sp, sm, s0) = (gp.sqrt(), gm.sqrt(), g0.sqrt());
        let a_plus = sp + s0;
        let a_minus = sm + s0;
        let c_plus = s + r * st;
        let c_minus = s * st + r;
        let gp_minus_gm = wp2 * s * r * q / (s + r) * (1.0 / c_plus + 1.0 / c_minus);
        let r_minus_s = wp2 / (r + s);
        let n = r_minus_s * q * a_minus - c_plus * gp_minus_gm / (sp + sm);
        Ok(wp2 * s * r * q * n / ((s + r) * c_plus * c_minus * a_plus * a_minus))
    }

    /// Mode density `ρ_a(Ω)` per unit area and unit scaled frequency.
    ///
    /// Sums `Ω (1 + g′)/(2π |g′|)` over every `z` with `g_a(z) = Ω²`; an
    /// empty sum means `Ω` lies in a gap of the branch.
    pub fn dos(&self, branch: Branch, omega_scaled: f64) -> Result<f64> {
        self.check_dos_frequency(omega_scaled)?;
        let target = omega_scaled * omega_scaled;
        let mut rho = 0.0;
        for z in self.level_crossings(branch, target)? {
            let gp = self.g_prime(branch, z)?;
            rho += omega_scaled * (1.0 + gp) / gp.abs();
        }
        Ok(rho / (2.0 * PI))
    }

    /// `δρ_a(Ω) = ρ_a(Ω) − ρ_0(Ω)` for a coupled branch.
    pub fn dos_delta(&self, branch: Branch, omega_scaled: f64) -> Result<DosSample> {
        if branch == Branch::Single {
            return Err(Error::Domain {
                what: "dos_delta is defined for the coupled branches only",
                value: omega_scaled,
            });
        }
        let rho_a = self.dos(branch, omega_scaled)?;
        let rho_0 = single_dos(omega_scaled, self.params)?;
        Ok(DosSample {
            omega_scaled,
            delta_rho: rho_a - rho_0,
            branch,
        })
    }

    fn check_dos_frequency(&self, omega: f64) -> Result<()> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::Domain {
                what: "density of states requires a positive frequency",
                value: omega,
            });
        }
        let wsp = self.params.omega_sp();
        if ((omega - wsp) / wsp).abs() < DOS_GUARD {
            return Err(Error::Domain {
                what: "density of states is not resolved at the surface-plasmon asymptote",
                value: omega,
            });
        }
        Ok(())
    }

    /// All `z` on the branch with `g_a(z) = target`.
    ///
    /// Scans in `v = sign(z)√|z|`, then follows the flat tail by doubling
    /// until `g_a` can no longer come back to `target`.
    fn level_crossings(&self, branch: Branch, target: f64) -> Result<Vec<f64>> {
        let z_of = |v: f64| v * v.abs();
        let h = |v: f64| self.g(branch, z_of(v)).map(|g| g - target);
        let v_lo = -(-self.z_min(branch)).sqrt();
        let wp = self.params.omega_p();
        let v_hi = 10f64.max(4.0 * wp);
        let mut roots = Vec::new();

        let push_root = |a: f64, b: f64, ha: f64, hb: f64, roots: &mut Vec<f64>| -> Result<()> {
            if ha == 0.0 {
                roots.push(z_of(a));
                return Ok(());
            }
            if ha.signum() == hb.signum() || hb == 0.0 {
                return Ok(());
            }
            let tol = (4.0 * f64::EPSILON * a.abs().max(b.abs())).max(f64::MIN_POSITIVE);
            let spec = RootSpec::new(a, b)?.with_tol(tol)?;
            let v = find_root(|v| h(v).unwrap_or(f64::NAN), &spec)?;
            roots.push(z_of(v));
            Ok(())
        };

        let n = 800;
        let mut a = v_lo;
        let mut ha = h(a)?;
        for i in 1..=n {
            let b = v_lo + (v_hi - v_lo) * i as f64 / n as f64;
            let hb = h(b)?;
            push_root(a, b, ha, hb, &mut roots)?;
            a = b;
            ha = hb;
        }

        let asymptote = 0.5 * wp * wp;
        let offset = target - asymptote;
        loop {
            let dev = ha + target - asymptote;
            let crossing_ahead = dev.signum() == offset.signum() && dev.abs() >= offset.abs();
            if !crossing_ahead || a > 1e15 {
                break;
            }
            let b = 2.0 * a;
            let hb = h(b)?;
            push_root(a, b, ha, hb, &mut roots)?;
            a = b;
            ha = hb;
        }
        if ha == 0.0 {
            roots.push(z_of(a));
        }
        Ok(roots)
    }

    /// TM cavity function in the evanescent sector from the product form
    /// `D_TE · (g_+ − Ω²)(g_− − Ω²) / (g_0 − Ω²)²` with `z = K² − Ω²`.
    pub fn tm_factorized(&self, omega_scaled: f64, k_scaled: f64) -> Result<f64> {
        if !(k_scaled > omega_scaled && omega_scaled >= 0.0) {
            return Err(Error::Domain {
                what: "factorized TM form requires the evanescent sector",
                value: omega_scaled,
            });
        }
        let z = (k_scaled - omega_scaled) * (k_scaled + omega_scaled);
        let w2 = omega_scaled * omega_scaled;
        let point = FieldPoint::real(omega_scaled, k_scaled)?;
        let d_te = optics::dispersion_d(&point, Polarization::TE, self.params)?
            .value()
            .map(|d| d.re)
            .ok_or(Error::Domain {
                what: "TE amplitude has no pole",
                value: omega_scaled,
            })?;
        let gp = self.g(Branch::Plus, z)? - w2;
        let gm = self.g(Branch::Minus, z)? - w2;
        let g0 = self.g(Branch::Single, z)? - w2;
        Ok(d_te * (gp / g0) * (gm / g0))
    }
}

/// Relative guard band around `Ω_sp` inside which densities are refused.
pub const DOS_GUARD: f64 = 1e-8;

/// `z_+`, the root of `√z = Ω_p cos(√z / 2)` in `[0, min(Ω_p², π²)]`.
pub fn solve_z_plus(params: ScaledParams) -> Result<f64> {
    let wp = params.omega_p();
    let s_hi = wp.min(PI);
    let spec = RootSpec::new(0.0, s_hi)?.with_tol((1e-15 * s_hi).max(f64::MIN_POSITIVE))?;
    let s = find_root(|s| s - wp * (0.5 * s).cos(), &spec)?;
    Ok(s * s)
}

/// `Ω_0²(K)` of the isolated interface, written without cancellation.
pub fn single_omega_squared(k_scaled: f64, params: ScaledParams) -> f64 {
    let wp2 = params.omega_p().powi(2);
    let k2 = k_scaled * k_scaled;
    let q = wp2.hypot(2.0 * k2);
    k2 * wp2 * (q + 2.0 * k2 + wp2) / ((wp2 + q) * (q + 2.0 * k2))
}

/// `z_0(K) = K² − Ω_0²(K) = 2K⁴ / (Ω_p² + √(Ω_p⁴ + 4K⁴))`.
pub fn single_z_of_k(k_scaled: f64, params: ScaledParams) -> f64 {
    let wp2 = params.omega_p().powi(2);
    let k2 = k_scaled * k_scaled;
    2.0 * k2 * k2 / (wp2 + wp2.hypot(2.0 * k2))
}

/// `ρ_0(Ω)`, zero above the asymptote `Ω_sp`.
pub fn single_dos(omega_scaled: f64, params: ScaledParams) -> Result<f64> {
    let wp2 = params.omega_p().powi(2);
    let w2 = omega_scaled * omega_scaled;
    if omega_scaled.is_nan() || omega_scaled <= 0.0 {
        return Err(Error::Domain {
            what: "density of states requires a positive frequency",
            value: omega_scaled,
        });
    }
    let wsp = params.omega_sp();
    if ((omega_scaled - wsp) / wsp).abs() < DOS_GUARD {
        return Err(Error::Domain {
            what: "density of states is not resolved at the surface-plasmon asymptote",
            value: omega_scaled,
        });
    }
    if omega_scaled > wsp {
        return Ok(0.0);
    }
    let gap = wp2 - 2.0 * w2;
    Ok(omega_scaled * (wp2 * wp2 - 2.0 * wp2 * w2 + 2.0 * w2 * w2) / (2.0 * PI * gap * gap))
}

pub fn g_eval(branch: Branch, z: f64, params: ScaledParams) -> Result<f64> {
    Branches::new(params)?.g(branch, z)
}

pub fn g_deriv(branch: Branch, z: f64, params: ScaledParams) -> Result<f64> {
    Branches::new(params)?.g_prime(branch, z)
}

pub fn sample(branch: Branch, z: f64, params: ScaledParams) -> Result<DispersionSample> {
    Branches::new(params)?.sample(branch, z)
}

pub fn omega_of_k(branch: Branch, k_scaled: f64, params: ScaledParams) -> Result<f64> {
    Branches::new(params)?.omega_of_k(branch, k_scaled)
}

pub fn dos_delta(branch: Branch, omega_scaled: f64, params: ScaledParams) -> Result<DosSample> {
    Branches::new(params)?.dos_delta(branch, omega_scaled)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(wp: f64) -> Branches {
        Branches::new(ScaledParams::new(wp).unwrap()).unwrap()
    }

    #[test]
    fn t_series_matches_closed_form_at_cutoff() {
        for z in [SERIES_CUTOFF * 0.999, -SERIES_CUTOFF * 0.999] {
            let s = z.abs().sqrt();
            let closed = if z > 0.0 {
                (0.5 * s).tanh() / s
            } else {
                (0.5 * s).tan() / s
            };
            assert!((t_fn(z) - closed).abs() < 1e-16);
        }
        for z in [SERIES_CUTOFF * 1.001, -SERIES_CUTOFF * 1.001] {
            let series = -1.0 / 24.0 + z * (1.0 / 120.0 + z * (-17.0 / 13440.0));
            assert!((t_prime(z) - series).abs() < 1e-11, "{z}");
        }
    }

    #[test]
    fn special_values() {
        let b = br(3.0);
        assert_eq!(b.g(Branch::Single, 0.0).unwrap(), 0.0);
        assert_eq!(b.g(Branch::Minus, 0.0).unwrap(), 0.0);
        assert!((b.g(Branch::Plus, 0.0).unwrap() - 9.0 / 2.5).abs() < 1e-14);
        for branch in Branch::ALL {
            let g = b.g(branch, 1e6).unwrap();
            assert!((g - 4.5).abs() < 1e-2, "{branch:?}: {g}");
        }
        assert!(b.g(Branch::Minus, -1e-3).is_err());
        assert!(b.g(Branch::Plus, -b.z_plus() * 1.0001).is_err());
        assert!(b.g_prime(Branch::Single, 0.0).is_err());
    }

    #[test]
    fn z_plus_closes_the_branch() {
        for wp in [0.01, 0.5, 2.0, 10.0, 1e3] {
            let b = br(wp);
            let s = b.sample(Branch::Plus, -b.z_plus()).unwrap();
            assert!(s.k_scaled < 1e-6 * wp.max(1.0), "{wp}: {}", s.k_scaled);
            assert!((s.omega_scaled - b.z_plus().sqrt()).abs() < 1e-12 * wp.max(1.0));
        }
        let s = br(1.0).sample(Branch::Minus, 0.0).unwrap();
        assert_eq!((s.k_scaled, s.omega_scaled), (0.0, 0.0));
    }

    #[test]
    fn derivatives_against_central_differences() {
        for wp in [0.3, 1.0, 7.0] {
            let b = br(wp);
            for &z in &[-0.5 * b.z_plus(), -1e-4, 1e-4, 2e-3, 0.3, 4.0, 40.0, 900.0] {
                for branch in Branch::ALL {
                    if z < b.z_min(branch) || (branch == Branch::Single && z < 1e-3) {
                        continue;
                    }
                    let h = 1e-5 * z.abs().max(1e-2);
                    let fd =
                        (b.g(branch, z + h).unwrap() - b.g(branch, z - h).unwrap()) / (2.0 * h);
                    let an = b.g_prime(branch, z).unwrap();
                    assert!(
                        (an - fd).abs() <= 1e-6 * (1.0 + an.abs()),
                        "{branch:?} z={z} {an} {fd}"
                    );
                }
            }
        }
    }

    #[test]
    fn omega_of_k_round_trip() {
        let b = br(2.0);
        for branch in Branch::ALL {
            for &k in &[0.01, 0.5, 1.0, 3.0, 12.0] {
                let w = b.omega_of_k(branch, k).unwrap();
                let z = b.z_of_k(branch, k).unwrap();
                let s = b.sample(branch, z).unwrap();
                assert!(
                    (s.k_scaled - k).abs() < 1e-11 * k.max(1.0),
                    "{branch:?} {k}"
                );
                assert!((s.omega_scaled - w).abs() < 1e-11);
            }
        }
        assert!((b.omega_of_k(Branch::Plus, 0.0).unwrap() - b.z_plus().sqrt()).abs() < 1e-15);
        assert_eq!(b.omega_of_k(Branch::Minus, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn single_closed_form_inverse() {
        let params = ScaledParams::new(1.5).unwrap();
        for &k in &[1e-3, 0.2, 1.0, 10.0, 1e3] {
            let w2 = single_omega_squared(k, params);
            let wp2 = 2.25;
            let k2_back = w2 * (wp2 - w2) / (wp2 - 2.0 * w2);
            assert!((k2_back / (k * k) - 1.0).abs() < 1e-9, "{k}");
        }
    }

    #[test]
    fn weighted_sum_matches_direct_sum_where_both_are_accurate() {
        let b = br(1.3);
        for &z in &[25.0, 30.0, 49.0, 100.0] {
            let direct = b.g(Branch::Plus, z).unwrap().sqrt()
                + b.g(Branch::Minus, z).unwrap().sqrt()
                - 2.0 * b.g(Branch::Single, z).unwrap().sqrt();
            let stable = b.evanescent_weighted_sum(z).unwrap();
            assert!((direct - stable).abs() < 1e-13, "{z}: {direct} {stable}");
        }
        // Deep tail: −Ω_p e^{−2√z}/(4√2).
        let z: f64 = 1e4;
        let tail = -1.3 * (-2.0 * z.sqrt()).exp() / (4.0 * 2f64.sqrt());
        let v = b.evanescent_weighted_sum(z).unwrap();
        assert!((v / tail - 1.0).abs() < 0.05, "{v} vs {tail}");
    }

    #[test]
    fn single_dos_matches_root_scan() {
        let b = br(3.0);
        for &w in &[0.1, 1.0, 2.0, 2.1] {
            let scan = b.dos(Branch::Single, w).unwrap();
            let closed = single_dos(w, b.params()).unwrap();
            assert!((scan / closed - 1.0).abs() < 1e-9, "{w}: {scan} {closed}");
        }
        assert_eq!(b.dos(Branch::Single, 2.2).unwrap(), 0.0);
        let wsp = b.params().omega_sp();
        assert!(b.dos(Branch::Minus, wsp * (1.0 + 1e-9)).is_err());
        assert!(b.dos_delta(Branch::Single, 1.0).is_err());
    }

    #[test]
    fn factorized_tm_matches_optics() {
        let b = br(1.1);
        for &(w, k) in &[(0.2, 0.5), (0.5, 2.0), (0.7, 0.71), (0.01, 4.0)] {
            let pt = FieldPoint::real(w, k).unwrap();
            let direct = optics::dispersion_d(&pt, Polarization::TM, b.params())
                .unwrap()
                .value()
                .unwrap();
            let product = b.tm_factorized(w, k).unwrap();
            assert!(
                (direct.re / product - 1.0).abs() < 1e-10,
                "{w} {k}: {} {}",
                direct.re,
                product
            );
        }
    }
}
