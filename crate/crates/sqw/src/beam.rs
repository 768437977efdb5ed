//! Physical beam parameters and their dimensionless reduction.
//!
//! All internal computation elsewhere in the crate is carried out in reduced
//! units: transverse lengths in waists `w0`, longitudinal distance in Rayleigh
//! ranges `z_R = p0 w0^2 / (2 hbar)`, and the linear-potential strength as the
//! dimensionless number `A = alpha m z_R^2 / (p0^2 w0)`. In these units the
//! paraxial equation reads
//!
//! ```text
//! i d/dzeta psi = [ -(1/4) (d^2/dx^2 + d^2/dy^2) + 2 A x ] psi
//! ```
//!
//! and the potential-induced features take the compact forms used throughout:
//! centroid drift `-A zeta^2 / 2`, tilt phase `-2 A zeta x`, and a cubic
//! global phase `-A^2 zeta^3 / 3`. SI quantities appear only at this module's
//! boundary.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SqwError};

/// Planck constant (J s), exact in the 2019 SI.
pub const H_PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant `h / (2 pi)` (J s), at full f64 precision so that
/// `lambda_deBroglie * p0 = h` holds to rounding.
pub const HBAR: f64 = H_PLANCK / (2.0 * std::f64::consts::PI);

/// Physical parameters of a paraxial matter-wave beam.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParticleBeam {
    /// Particle mass (kg).
    pub mass: f64,
    /// Central longitudinal momentum (kg m/s).
    pub p0: f64,
    /// Beam waist (m).
    pub w0: f64,
}

impl ParticleBeam {
    /// Validated constructor: all three parameters must be finite and positive.
    pub fn new(mass: f64, p0: f64, w0: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("p0", p0), ("w0", w0)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(SqwError::InvalidParameter(format!(
                    "beam {name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(Self { mass, p0, w0 })
    }

    /// Rayleigh range `z_R = p0 w0^2 / (2 hbar)` (m), recomputed on demand.
    pub fn rayleigh_range(&self) -> f64 {
        self.p0 * self.w0 * self.w0 / (2.0 * HBAR)
    }

    /// De Broglie wavelength `h / p0` (m).
    pub fn de_broglie_wavelength(&self) -> f64 {
        H_PLANCK / self.p0
    }

    /// Dimensionless propagation coordinate for a longitudinal distance z (m).
    pub fn zeta_of(&self, z: f64) -> f64 {
        z / self.rayleigh_range()
    }

    /// Longitudinal distance (m) for a dimensionless propagation coordinate.
    pub fn z_of(&self, zeta: f64) -> f64 {
        zeta * self.rayleigh_range()
    }

    /// Paraxial aspect ratio `z_R / w0`; also `p0 w0 / (2 hbar)`.
    pub fn zr_over_w0(&self) -> f64 {
        self.rayleigh_range() / self.w0
    }
}

/// Linear-potential strength along x, in SI and reduced form.
///
/// `a` is derived one-way from SI inputs; `alpha = 0` if and only if `a = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    /// Potential gradient alpha (J/m): `V(r) = alpha x`.
    pub alpha: f64,
    /// Reduced strength `A = alpha m z_R^2 / (p0^2 w0)`.
    pub a: f64,
}

impl PotentialSpec {
    /// The free case, `alpha = A = 0`.
    pub fn free() -> Self {
        Self { alpha: 0.0, a: 0.0 }
    }
}

/// Reduce a linear-potential strength to dimensionless form for a given beam.
pub fn nondimensionalize(beam: &ParticleBeam, alpha: f64) -> Result<PotentialSpec> {
    if !alpha.is_finite() {
        return Err(SqwError::InvalidParameter(format!(
            "potential strength alpha must be finite, got {alpha}"
        )));
    }
    let zr = beam.rayleigh_range();
    let a = alpha * beam.mass * zr * zr / (beam.p0 * beam.p0 * beam.w0);
    Ok(PotentialSpec { alpha, a })
}

/// Recover the SI potential strength (J/m) from a reduced strength.
pub fn alpha_from_reduced(beam: &ParticleBeam, a: f64) -> f64 {
    let zr = beam.rayleigh_range();
    a * beam.p0 * beam.p0 * beam.w0 / (beam.mass * zr * zr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neutron() -> ParticleBeam {
        // thermal neutron at 0.2 nm de Broglie wavelength, 10 um waist
        let p0 = H_PLANCK / 0.2e-9;
        ParticleBeam::new(1.675e-27, p0, 10e-6).unwrap()
    }

    #[test]
    fn rayleigh_range_unit_cancellation() {
        // p0 w0^2 = 2 hbar  =>  z_R = 1 m
        let w0 = 1e-3;
        let p0 = 2.0 * HBAR / (w0 * w0);
        let beam = ParticleBeam::new(1e-27, p0, w0).unwrap();
        assert!((beam.rayleigh_range() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rayleigh_range_quadratic_in_waist() {
        let b1 = ParticleBeam::new(1e-26, 1e-24, 5e-6).unwrap();
        let b2 = ParticleBeam::new(1e-26, 1e-24, 10e-6).unwrap();
        let ratio = b2.rayleigh_range() / b1.rayleigh_range();
        assert!((ratio - 4.0).abs() < 1e-12);
    }

    #[test]
    fn rayleigh_range_thermal_neutron() {
        // independently evaluated: p0 = h / 0.2nm = 3.313035075e-24 kg m/s,
        // z_R = p0 w0^2 / (2 hbar) = 1.57079632679489662 m
        let beam = neutron();
        assert!((beam.p0 - 3.313_035_075e-24).abs() / beam.p0 < 1e-12);
        let zr = beam.rayleigh_range();
        assert!((zr - 1.570_796_326_794_896_62).abs() / zr < 1e-12);
    }

    #[test]
    fn de_broglie_times_p0_is_h() {
        let beam = neutron();
        let prod = beam.de_broglie_wavelength() * beam.p0;
        assert!((prod - H_PLANCK).abs() / H_PLANCK < 1e-12);
    }

    #[test]
    fn nondimensionalize_zero_alpha() {
        let pot = nondimensionalize(&neutron(), 0.0).unwrap();
        assert_eq!(pot.a, 0.0);
        assert_eq!(pot.alpha, 0.0);
    }

    #[test]
    fn nondimensionalize_sign_follows_alpha() {
        let beam = neutron();
        assert!(nondimensionalize(&beam, 1e-30).unwrap().a > 0.0);
        assert!(nondimensionalize(&beam, -1e-30).unwrap().a < 0.0);
    }

    #[test]
    fn reduced_identities_match_si_exponents() {
        // The three reduced forms must reproduce the SI phase/shift exponents:
        //   tilt:     (alpha m z / (hbar p0)) x      = 2 A zeta x~
        //   cubic:    alpha^2 m^2 z^3 / (6 hbar p0^3) = A^2 zeta^3 / 3
        //   centroid: m alpha z^2 / (2 p0^2)          = (A zeta^2 / 2) w0
        let beam = ParticleBeam::new(2.3e-26, 7.7e-25, 3.1e-6).unwrap();
        let alpha = 4.2e-28;
        let pot = nondimensionalize(&beam, alpha).unwrap();
        let zr = beam.rayleigh_range();
        let zeta = 1.37;
        let z = zeta * zr;
        let x_tilde = 0.83;
        let x = x_tilde * beam.w0;

        let tilt_si = alpha * beam.mass * z / (HBAR * beam.p0) * x;
        let tilt_red = 2.0 * pot.a * zeta * x_tilde;
        assert!((tilt_si - tilt_red).abs() / tilt_red.abs() < 1e-12);

        let cubic_si = alpha * alpha * beam.mass * beam.mass * z.powi(3)
            / (6.0 * HBAR * beam.p0.powi(3));
        let cubic_red = pot.a * pot.a * zeta.powi(3) / 3.0;
        assert!((cubic_si - cubic_red).abs() / cubic_red.abs() < 1e-12);

        let shift_si = beam.mass * alpha * z * z / (2.0 * beam.p0 * beam.p0);
        let shift_red = pot.a * zeta * zeta / 2.0 * beam.w0;
        assert!((shift_si - shift_red).abs() / shift_red.abs() < 1e-12);
    }

    #[test]
    fn nondimensional_round_trip() {
        let beam = ParticleBeam::new(9.1e-31, 1.7e-24, 1.2e-7).unwrap();
        let alpha = -3.3e-22;
        let pot = nondimensionalize(&beam, alpha).unwrap();
        let back = alpha_from_reduced(&beam, pot.a);
        assert!((back - alpha).abs() / alpha.abs() < 1e-12);

        let z = 0.004_2;
        let zeta = beam.zeta_of(z);
        assert!((beam.z_of(zeta) - z).abs() / z < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(ParticleBeam::new(0.0, 1.0, 1.0).is_err());
        assert!(ParticleBeam::new(1.0, -1.0, 1.0).is_err());
        assert!(ParticleBeam::new(1.0, 1.0, f64::NAN).is_err());
    }
}
