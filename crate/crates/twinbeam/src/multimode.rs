//! Quantities for beams of several identical paired modes and for
//! experimental three-component beams (paired + noise-signal + noise-idler
//! modes).

use serde::Serialize;

use crate::analytic::{
    entropy, negativity, nonclassical_depth, participation_ratio, thermal_entropy, Field,
};
use crate::error::TwinBeamError;
use crate::params::TwinBeamParams;

/// A beam of `m` independent, identical single-mode twin beams.
#[derive(Debug, Clone, Copy)]
pub struct MultimodeSpec {
    pub m: usize,
    pub params: TwinBeamParams,
}

impl MultimodeSpec {
    pub fn new(m: usize, params: TwinBeamParams) -> Result<Self, TwinBeamError> {
        if m < 1 {
            return Err(TwinBeamError::InvalidParam {
                field: "m",
                reason: "must be \u{2265} 1",
                value: m as f64,
            });
        }
        Ok(Self { m, params })
    }
}

/// Per-mode logarithmic quantities of a multimode beam, plus the aggregate
/// forms that scale with the mode count.
///
/// The trace norm and the participation ratios multiply across modes while
/// the entropies add, so per one mode the natural quantities are
/// `ln(1 + 2N)`, `ln R`, and `S`; the nonclassical depth does not depend on
/// the mode count at all.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PerModeQuantities {
    pub script_n: f64,
    pub script_r_s: f64,
    pub script_r_i: f64,
    pub script_s_s: f64,
    pub script_s_i: f64,
    pub tau: f64,
    pub m: usize,
    pub n_m_log: f64,
    pub r_m_s_log: f64,
    pub r_m_i_log: f64,
    pub s_m_s: f64,
    pub s_m_i: f64,
    /// `((1 + 2N)^m - 1)/2`: the value the negativity definition itself gives
    /// for the m-mode state.  The multiplicative headline quantity is the
    /// trace norm `(1 + 2N)^m`, whose logarithm is `m * script_n`.
    pub negativity_of_product: f64,
}

pub fn per_mode_quantities(spec: &MultimodeSpec) -> PerModeQuantities {
    let params = &spec.params;
    let n = negativity(params).value;
    let script_n = (1.0 + 2.0 * n).ln();
    let script_r_s = participation_ratio(params, Field::Signal).ln();
    let script_r_i = participation_ratio(params, Field::Idler).ln();
    let script_s_s = entropy(params, Field::Signal);
    let script_s_i = entropy(params, Field::Idler);
    let m = spec.m;
    PerModeQuantities {
        script_n,
        script_r_s,
        script_r_i,
        script_s_s,
        script_s_i,
        tau: nonclassical_depth(params),
        m,
        n_m_log: m as f64 * script_n,
        r_m_s_log: m as f64 * script_r_s,
        r_m_i_log: m as f64 * script_r_i,
        s_m_s: m as f64 * script_s_s,
        s_m_i: m as f64 * script_s_i,
        negativity_of_product: ((1.0 + 2.0 * n).powi(m as i32) - 1.0) / 2.0,
    }
}

/// Experimental three-component beam: `m_p` ideal paired modes with `b_p`
/// pairs each, plus `m_s` / `m_i` purely thermal noise modes in the signal /
/// idler arm with `b_s` / `b_i` photons each.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExperimentalBeamSpec {
    pub m_p: usize,
    pub m_s: usize,
    pub m_i: usize,
    pub b_p: f64,
    pub b_s: f64,
    pub b_i: f64,
}

impl ExperimentalBeamSpec {
    pub fn new(
        m_p: usize,
        m_s: usize,
        m_i: usize,
        b_p: f64,
        b_s: f64,
        b_i: f64,
    ) -> Result<Self, TwinBeamError> {
        if m_p + m_s + m_i == 0 {
            return Err(TwinBeamError::ZeroModeWeight);
        }
        for (field, value) in [("b_p", b_p), ("b_s", b_s), ("b_i", b_i)] {
            if !(value >= 0.0) || !value.is_finite() {
                return Err(TwinBeamError::InvalidParam {
                    field: match field {
                        "b_p" => "b_p",
                        "b_s" => "b_s",
                        _ => "b_i",
                    },
                    reason: "must be finite and \u{2265} 0",
                    value,
                });
            }
        }
        Ok(Self {
            m_p,
            m_s,
            m_i,
            b_p,
            b_s,
            b_i,
        })
    }

    fn paired_mode_tau(&self) -> f64 {
        // the paired component is ideal, so this is the noiseless depth
        (self.b_p * (self.b_p + 1.0)).sqrt() - self.b_p
    }
}

/// Multimode nonclassical depth in both conventions.
///
/// The thermal noise modes are classical (`tau <= 0`) and enter neither
/// form; the sum convention counts the added noise needed to conceal every
/// paired mode and is the default in reports.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TauExperimental {
    pub max_form: f64,
    pub sum_form: f64,
}

pub fn tau_experimental(spec: &ExperimentalBeamSpec) -> TauExperimental {
    let tau = spec.paired_mode_tau();
    TauExperimental {
        max_form: tau,
        sum_form: spec.m_p as f64 * tau,
    }
}

/// Nonclassical intensity depth of the experimental beam.
///
/// `tau_w = sqrt(beta^2 - gamma) - beta` with the mode-weighted intensity
/// moments `beta` and `gamma`; it is positive exactly when
/// `m_s b_s^2 + m_i b_i^2 < 2 m_p b_p`.  When `gamma` exceeds `beta^2` the
/// root has no real part and the value continues as `-beta`, which keeps
/// the sign equivalence intact.
pub fn tau_w(spec: &ExperimentalBeamSpec) -> f64 {
    let (m_p, m_s, m_i) = (spec.m_p as f64, spec.m_s as f64, spec.m_i as f64);
    let denom = m_s + m_i + 2.0 * m_p;
    let beta = (m_s * spec.b_s + m_i * spec.b_i + 2.0 * m_p * spec.b_p) / denom;
    let gamma = (m_s * spec.b_s * spec.b_s + m_i * spec.b_i * spec.b_i - 2.0 * m_p * spec.b_p)
        / denom;
    let disc = beta * beta - gamma;
    if disc > 0.0 {
        disc.sqrt() - beta
    } else {
        -beta
    }
}

/// Strong-nonclassicality criterion on the intensity moments.
pub fn intensity_criterion(spec: &ExperimentalBeamSpec) -> bool {
    spec.m_s as f64 * spec.b_s * spec.b_s + spec.m_i as f64 * spec.b_i * spec.b_i
        < 2.0 * spec.m_p as f64 * spec.b_p
}

/// Logarithmic participation ratios and entropies of the beam split into
/// its paired and noise components (both are additive over modes).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DimensionalitySplit {
    pub r_log_paired: f64,
    pub r_log_noise: f64,
    pub s_paired: f64,
    pub s_noise: f64,
}

pub fn dimensionality_split(spec: &ExperimentalBeamSpec) -> DimensionalitySplit {
    let (m_p, m_s, m_i) = (spec.m_p as f64, spec.m_s as f64, spec.m_i as f64);
    // single thermal or paired mode: R = 2 b + 1, S = thermal entropy
    DimensionalitySplit {
        r_log_paired: m_p * (2.0 * spec.b_p + 1.0).ln(),
        r_log_noise: m_s * (2.0 * spec.b_s + 1.0).ln() + m_i * (2.0 * spec.b_i + 1.0).ln(),
        s_paired: m_p * thermal_entropy(spec.b_p),
        s_noise: m_s * thermal_entropy(spec.b_s) + m_i * thermal_entropy(spec.b_i),
    }
}
