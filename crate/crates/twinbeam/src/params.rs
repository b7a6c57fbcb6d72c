//! Physical parameters of a noisy twin beam and the derived Gaussian moments.

use serde::Serialize;

use crate::error::TwinBeamError;

/// Mean photon numbers characterizing a single-mode noisy twin beam:
/// `b_p` photon pairs per mode, plus `b_s` / `b_i` uncorrelated thermal
/// noise photons in the signal / idler mode.
///
/// Construction validates that all three values are finite and non-negative,
/// so holding a `TwinBeamParams` is proof of a physical parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwinBeamParams {
    b_p: f64,
    b_s: f64,
    b_i: f64,
}

impl TwinBeamParams {
    pub fn new(b_p: f64, b_s: f64, b_i: f64) -> Result<Self, TwinBeamError> {
        check_field("b_p", b_p)?;
        check_field("b_s", b_s)?;
        check_field("b_i", b_i)?;
        Ok(Self { b_p, b_s, b_i })
    }

    /// Mean photon-pair number per mode.
    pub fn b_p(&self) -> f64 {
        self.b_p
    }

    /// Mean signal-noise photon number per mode.
    pub fn b_s(&self) -> f64 {
        self.b_s
    }

    /// Mean idler-noise photon number per mode.
    pub fn b_i(&self) -> f64 {
        self.b_i
    }

    pub fn moments(&self) -> GaussianMoments {
        GaussianMoments::derive(self)
    }
}

fn check_field(name: &'static str, value: f64) -> Result<(), TwinBeamError> {
    if value.is_nan() || value.is_infinite() {
        return Err(TwinBeamError::InvalidParam {
            field: name,
            reason: "must be finite",
            value,
        });
    }
    if value < 0.0 {
        return Err(TwinBeamError::InvalidParam {
            field: name,
            reason: "must be \u{2265} 0",
            value,
        });
    }
    Ok(())
}

/// Moments of the Gaussian state of the twin beam.
///
/// The signal and idler occupations are `B1 = b_p + b_s` and
/// `B2 = b_p + b_i`; the anti-normal counterparts are `bt = B + 1`.  The
/// cross-correlation modulus obeys `d12^2 = b_p (b_p + 1)` independently of
/// the noise, and `kt = bt1 bt2 - d12^2` normalizes the density matrix.
/// The phase of the cross correlation never enters any derived quantity, so
/// only the modulus is kept and every matrix downstream stays real symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianMoments {
    b1: f64,
    b2: f64,
    bt1: f64,
    bt2: f64,
    d12: f64,
    kt: f64,
}

impl GaussianMoments {
    pub fn derive(params: &TwinBeamParams) -> Self {
        let b1 = params.b_p() + params.b_s();
        let b2 = params.b_p() + params.b_i();
        let bt1 = b1 + 1.0;
        let bt2 = b2 + 1.0;
        let d12 = (params.b_p() * (params.b_p() + 1.0)).sqrt();
        let kt = bt1 * bt2 - d12 * d12;
        Self {
            b1,
            b2,
            bt1,
            bt2,
            d12,
            kt,
        }
    }

    /// Signal mean photon number `B1`.
    pub fn b1(&self) -> f64 {
        self.b1
    }

    /// Idler mean photon number `B2`.
    pub fn b2(&self) -> f64 {
        self.b2
    }

    pub fn bt1(&self) -> f64 {
        self.bt1
    }

    pub fn bt2(&self) -> f64 {
        self.bt2
    }

    /// Modulus of the signal-idler cross correlation.
    pub fn d12(&self) -> f64 {
        self.d12
    }

    /// Normalization `bt1 bt2 - d12^2`; at least 1 for physical parameters.
    pub fn kt(&self) -> f64 {
        self.kt
    }
}

/// Validates a raw parameter triple, returning the checked value.
pub fn validate(b_p: f64, b_s: f64, b_i: f64) -> Result<TwinBeamParams, TwinBeamError> {
    TwinBeamParams::new(b_p, b_s, b_i)
}

/// Derives the Gaussian moments of a validated parameter set.
pub fn derive_moments(params: &TwinBeamParams) -> GaussianMoments {
    GaussianMoments::derive(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn accepts_in_range_values() {
        assert!(TwinBeamParams::new(0.0, 0.0, 0.0).is_ok());
        assert!(TwinBeamParams::new(1.0, 0.1, 0.3).is_ok());
    }

    #[test]
    fn rejects_negative_fields_naming_them() {
        let err = TwinBeamParams::new(-1.0, 0.0, 0.0).unwrap_err();
        assert!(err.to_string().contains("b_p must be \u{2265} 0"));
        let err = TwinBeamParams::new(0.0, -0.5, 0.0).unwrap_err();
        assert!(err.to_string().contains("b_s"));
        let err = TwinBeamParams::new(0.0, 0.0, -0.5).unwrap_err();
        assert!(err.to_string().contains("b_i"));
    }

    #[test]
    fn rejects_non_finite_fields() {
        assert!(TwinBeamParams::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(TwinBeamParams::new(0.0, f64::INFINITY, 0.0).is_err());
        assert!(TwinBeamParams::new(0.0, 0.0, f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn vacuum_moments() {
        let m = TwinBeamParams::new(0.0, 0.0, 0.0).unwrap().moments();
        assert_eq!(m.bt1(), 1.0);
        assert_eq!(m.bt2(), 1.0);
        assert_eq!(m.d12(), 0.0);
        assert_eq!(m.kt(), 1.0);
    }

    #[test]
    fn noiseless_unit_pair_moments() {
        let m = TwinBeamParams::new(1.0, 0.0, 0.0).unwrap().moments();
        assert_eq!(m.bt1(), 2.0);
        assert_eq!(m.bt2(), 2.0);
        assert_relative_eq!(m.d12(), 2.0_f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(m.kt(), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn noisy_moments() {
        let m = TwinBeamParams::new(2.0, 0.1, 0.3).unwrap().moments();
        assert_relative_eq!(m.bt1(), 3.1, max_relative = 1e-15);
        assert_relative_eq!(m.bt2(), 3.3, max_relative = 1e-15);
        assert_relative_eq!(m.d12(), 6.0_f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(m.kt(), 4.23, max_relative = 1e-12);
    }

    #[test]
    fn kt_identity_and_bounds_on_grid() {
        for &b_p in &[0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 8.0] {
            for &b_s in &[0.0, 0.1, 0.5, 1.0, 2.0] {
                for &b_i in &[0.0, 0.1, 0.5, 1.0, 2.0] {
                    let m = TwinBeamParams::new(b_p, b_s, b_i).unwrap().moments();
                    assert_eq!(m.kt(), m.bt1() * m.bt2() - m.d12() * m.d12());
                    assert!(m.kt() >= 1.0 - 1e-14);
                    assert!(m.bt1() >= 1.0 && m.bt2() >= 1.0 && m.d12() >= 0.0);
                    let resid = m.d12() * m.d12() - b_p * (b_p + 1.0);
                    assert!(resid.abs() <= 1e-13 * (1.0 + b_p * (b_p + 1.0)));
                }
            }
        }
    }

    #[test]
    fn kt_monotone_in_noise() {
        let grid = [0.0, 0.2, 0.5, 1.0, 2.0];
        for &b_p in &[0.0, 0.5, 2.0, 8.0] {
            for w in grid.windows(2) {
                let lo = TwinBeamParams::new(b_p, w[0], 0.3).unwrap().moments();
                let hi = TwinBeamParams::new(b_p, w[1], 0.3).unwrap().moments();
                assert!(hi.kt() >= lo.kt());
                let lo = TwinBeamParams::new(b_p, 0.3, w[0]).unwrap().moments();
                let hi = TwinBeamParams::new(b_p, 0.3, w[1]).unwrap().moments();
                assert!(hi.kt() >= lo.kt());
            }
        }
    }
}
