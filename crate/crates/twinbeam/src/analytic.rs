//! Closed-form entanglement, nonclassicality, and dimensionality measures.
//!
//! Everything here is pure arithmetic on the beam parameters; the matching
//! brute-force Fock-space routes live in [`crate::fock`].

use serde::Serialize;

use crate::error::TwinBeamError;
use crate::params::TwinBeamParams;

/// Which reduced (single-arm) state a quantity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Signal,
    Idler,
}

/// Negativity of the twin beam: the clamped value and the raw formula value.
///
/// The closed form evaluates to a negative number for separable beams; the
/// negativity proper is a sum of |negative eigenvalues| and is therefore 0
/// there, so `value = max(raw, 0)` while `raw` is kept for diagnostics.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Negativity {
    pub raw: f64,
    pub value: f64,
}

/// Negativity from the beam parameters.
pub fn negativity(params: &TwinBeamParams) -> Negativity {
    let (b_p, b_s, b_i) = (params.b_p(), params.b_s(), params.b_i());
    let root = ((b_s - b_i).powi(2) + 4.0 * b_p * (b_p + 1.0)).sqrt();
    let num = 2.0 * b_p - (b_s + b_i) * (4.0 * b_p + 1.0) - 4.0 * b_s * b_i + root;
    let den = 4.0 * (b_s + b_i) * (2.0 * b_p + 1.0) + 8.0 * b_s * b_i + 2.0;
    let raw = num / den;
    Negativity {
        raw,
        value: raw.max(0.0),
    }
}

/// Same quantity evaluated from the Gaussian moments (the block-eigenvalue
/// route); must agree with [`negativity`] to rounding error.
pub fn negativity_block_form(params: &TwinBeamParams) -> f64 {
    let m = params.moments();
    let (bt1, bt2, d12, kt) = (m.bt1(), m.bt2(), m.d12(), m.kt());
    let root = ((bt1 - bt2).powi(2) + 4.0 * d12 * d12).sqrt();
    let num = 3.0 * (bt1 + bt2) + root - 4.0 * kt - 2.0;
    let den = 4.0 * kt - 2.0 * (bt1 + bt2) + 1.0;
    0.5 * num / den
}

/// Eigenvalues of the elementary two-dimensional partial-transpose block,
/// exposed for the unnormalized product-spectrum diagnostic.
pub fn nu_pm(params: &TwinBeamParams) -> (f64, f64) {
    let m = params.moments();
    let root = ((m.bt2() - m.bt1()).powi(2) + 4.0 * m.d12() * m.d12()).sqrt();
    let nu_plus = 1.0 - (m.bt1() + m.bt2() - root) / (2.0 * m.kt());
    let nu_minus = 1.0 - (m.bt1() + m.bt2() + root) / (2.0 * m.kt());
    (nu_plus, nu_minus)
}

/// Strict entanglement criterion `b_p (1 - b_s - b_i) > b_s b_i`.
///
/// Points exactly on the boundary count as separable.
pub fn is_entangled(params: &TwinBeamParams) -> bool {
    let (b_p, b_s, b_i) = (params.b_p(), params.b_s(), params.b_i());
    b_p * (1.0 - (b_s + b_i)) > b_s * b_i
}

/// Smallest pair number that entangles a beam with the given noise, or
/// `None` when no pair number can (total noise of one photon or more).
pub fn b_p_threshold(b_s: f64, b_i: f64) -> Option<f64> {
    if b_s + b_i < 1.0 {
        Some(b_s * b_i / (1.0 - (b_s + b_i)))
    } else {
        None
    }
}

/// Nonclassical depth of the twin beam.
///
/// Negative values are reported as-is: |tau| of a classical beam measures how
/// many photon pairs it is away from the classical-quantum boundary.
pub fn nonclassical_depth(params: &TwinBeamParams) -> f64 {
    let (b_p, b_s, b_i) = (params.b_p(), params.b_s(), params.b_i());
    let root = ((b_s - b_i).powi(2) + 4.0 * b_p * (b_p + 1.0)).sqrt();
    0.5 * (root - 2.0 * b_p - b_s - b_i)
}

/// Maps the nonclassical depth to the negativity, `N = tau / (1 - 2 tau)`.
///
/// Rejects `tau >= 1/2`, where the map diverges (that value is only reached
/// by an infinitely intense beam).
pub fn negativity_from_tau(tau: f64) -> Result<f64, TwinBeamError> {
    if tau >= 0.5 {
        return Err(TwinBeamError::TauOutOfRange { tau });
    }
    Ok(tau / (1.0 - 2.0 * tau))
}

/// Inverse map, `tau = N / (1 + 2 N)` for `N >= 0`.
pub fn tau_from_negativity(n: f64) -> f64 {
    n / (1.0 + 2.0 * n)
}

/// Entanglement dimensionality `K_ent = 2 N + 1` (clamped negativity), the
/// trace norm of the partially transposed state; 1 for separable beams.
pub fn entanglement_dimensionality(params: &TwinBeamParams) -> f64 {
    2.0 * negativity(params).value + 1.0
}

/// Participation ratio of a reduced arm, `R = 2 (b_p + noise) + 1`.
pub fn participation_ratio(params: &TwinBeamParams, field: Field) -> f64 {
    2.0 * occupation(params, field) + 1.0
}

fn occupation(params: &TwinBeamParams, field: Field) -> f64 {
    match field {
        Field::Signal => params.b_p() + params.b_s(),
        Field::Idler => params.b_p() + params.b_i(),
    }
}

/// Schmidt coefficients of the noiseless twin beam, `c_j` for `j <= j_max`.
///
/// They follow the thermal photon-number statistics of either arm, so
/// `c_j = c_0 r^j` with `c_0 = 1/sqrt(b_p + 1)` and `r^2 = b_p/(b_p + 1)`.
pub fn schmidt_coefficients(b_p: f64, j_max: usize) -> Vec<f64> {
    assert!(b_p >= 0.0, "b_p must be \u{2265} 0");
    let c0 = 1.0 / (b_p + 1.0).sqrt();
    let ratio = (b_p / (b_p + 1.0)).sqrt();
    let mut out = Vec::with_capacity(j_max + 1);
    let mut c = c0;
    for _ in 0..=j_max {
        out.push(c);
        c *= ratio;
    }
    out
}

/// Entanglement dimensionality rescaled so that it coincides with the
/// participation ratio for noiseless beams.
pub fn modified_k_ent(params: &TwinBeamParams) -> f64 {
    let b_p = params.b_p();
    let scale = (2.0 * b_p + 1.0) / (2.0 * b_p + 1.0 + 2.0 * (b_p * (b_p + 1.0)).sqrt());
    scale * entanglement_dimensionality(params)
}

/// Fraction of the reduced-state degrees of freedom that carry entanglement,
/// `r_ent = 2 K_ent_mod / (R_s + R_i)`; equals 1 for noiseless beams.
pub fn r_ent(params: &TwinBeamParams) -> f64 {
    let r_s = participation_ratio(params, Field::Signal);
    let r_i = participation_ratio(params, Field::Idler);
    2.0 * modified_k_ent(params) / (r_s + r_i)
}

/// Entropy of a thermal state with mean occupation `t`, in nats.
pub fn thermal_entropy(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    (1.0 + t) * t.ln_1p() - t * t.ln()
}

/// von Neumann entropy of a reduced arm.
pub fn entropy(params: &TwinBeamParams, field: Field) -> f64 {
    thermal_entropy(occupation(params, field))
}

/// Entropy of a reduced arm expressed through its participation ratio:
/// `S = [(R+1) ln(R+1) - (R-1) ln(R-1)] / 2 - ln 2`.
///
/// The constant is `-ln 2`, which makes `S(1) = 0` for a pure state and
/// reproduces [`entropy`] identically through `R = 2 T + 1`.
pub fn entropy_from_r(r: f64) -> Result<f64, TwinBeamError> {
    if !(r >= 1.0) {
        return Err(TwinBeamError::ParticipationBelowOne { r });
    }
    let ln2 = 2.0_f64.ln();
    let upper = (r + 1.0) * (r + 1.0).ln();
    let lower = if r > 1.0 { (r - 1.0) * (r - 1.0).ln() } else { 0.0 };
    Ok(0.5 * (upper - lower) - ln2)
}

/// Every closed-form quantity of a single-mode twin beam in one record.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuantReport {
    pub negativity: f64,
    pub raw_negativity: f64,
    pub tau: f64,
    pub k_ent: f64,
    pub k_ent_mod: f64,
    pub r_s: f64,
    pub r_i: f64,
    pub r_ent: f64,
    pub s_s: f64,
    pub s_i: f64,
    pub entangled: bool,
}

impl QuantReport {
    pub fn compute(params: &TwinBeamParams) -> Self {
        let n = negativity(params);
        Self {
            negativity: n.value,
            raw_negativity: n.raw,
            tau: nonclassical_depth(params),
            k_ent: entanglement_dimensionality(params),
            k_ent_mod: modified_k_ent(params),
            r_s: participation_ratio(params, Field::Signal),
            r_i: participation_ratio(params, Field::Idler),
            r_ent: r_ent(params),
            s_s: entropy(params, Field::Signal),
            s_i: entropy(params, Field::Idler),
            entangled: is_entangled(params),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn p(b_p: f64, b_s: f64, b_i: f64) -> TwinBeamParams {
        TwinBeamParams::new(b_p, b_s, b_i).unwrap()
    }

    #[test]
    fn noiseless_negativity_is_closed_form() {
        let n = negativity(&p(1.0, 0.0, 0.0));
        assert_relative_eq!(n.value, 1.0 + 2.0_f64.sqrt(), max_relative = 1e-15);
        for &b_p in &[0.1, 0.5, 1.0, 2.0, 4.0, 10.0] {
            let n = negativity(&p(b_p, 0.0, 0.0));
            let expect = b_p + (b_p * (b_p + 1.0)).sqrt();
            assert_abs_diff_eq!(n.raw, expect, epsilon = 1e-12 * (1.0 + expect));
        }
    }

    #[test]
    fn no_pairs_means_no_negativity() {
        let n = negativity(&p(0.0, 0.5, 0.0));
        assert_eq!(n.raw, 0.0);
        assert_eq!(n.value, 0.0);
    }

    #[test]
    fn noisy_negativity_frozen_value() {
        // 7.0589795.../6.08, cross-checked against the Fock oracle elsewhere.
        let n = negativity(&p(2.0, 0.1, 0.1));
        assert_relative_eq!(n.value, 1.161_016_362_757_624_2, max_relative = 1e-13);
    }

    #[test]
    fn block_form_matches_direct_form() {
        assert_eq!(negativity_block_form(&p(0.0, 0.0, 0.0)), 0.0);
        assert_relative_eq!(
            negativity_block_form(&p(1.0, 0.0, 0.0)),
            1.0 + 2.0_f64.sqrt(),
            max_relative = 1e-13
        );
        for &b_p in &[0.0, 0.5, 1.0, 2.0, 4.0, 8.0] {
            for &b_s in &[0.0, 0.3, 1.0, 2.0] {
                for &b_i in &[0.0, 0.7, 1.5, 2.0] {
                    let raw = negativity(&p(b_p, b_s, b_i)).raw;
                    let blk = negativity_block_form(&p(b_p, b_s, b_i));
                    assert_abs_diff_eq!(blk, raw, epsilon = 1e-12 * (1.0 + raw.abs()));
                }
            }
        }
    }

    #[test]
    fn entanglement_condition() {
        // Total noise of one photon kills entanglement for any pair number.
        for &b_p in &[0.0, 0.1, 1.0, 100.0, 1e6] {
            assert!(!is_entangled(&p(b_p, 0.5, 0.5)));
        }
        assert_eq!(b_p_threshold(0.5, 0.5), None);
        assert_eq!(b_p_threshold(0.25, 0.25), Some(0.125));
        assert!(is_entangled(&p(0.2, 0.25, 0.25)));
        assert!(is_entangled(&p(0.1, 0.0, 0.0)));
        assert!(!is_entangled(&p(0.0, 0.0, 0.0)));
        // Exact boundary (dyadic values, no rounding): classified separable.
        assert!(!is_entangled(&p(0.125, 0.25, 0.25)));
    }

    #[test]
    fn nonclassical_depth_examples() {
        assert_relative_eq!(
            nonclassical_depth(&p(1.0, 0.0, 0.0)),
            2.0_f64.sqrt() - 1.0,
            max_relative = 1e-14
        );
        assert_eq!(nonclassical_depth(&p(0.0, 0.0, 0.0)), 0.0);
        assert_relative_eq!(
            nonclassical_depth(&p(2.0, 0.1, 0.1)),
            0.349_489_742_783_177_9,
            max_relative = 1e-14
        );
    }

    #[test]
    fn tau_stays_below_one_half() {
        assert!(nonclassical_depth(&p(1e6, 0.0, 0.0)) > 0.4999);
        // beyond ~1e8 pairs the true gap to 1/2 drops under the rounding of
        // the square root, so the strict inequality is only meaningful here
        for &b_p in &[0.0, 1.0, 10.0, 1e3, 1e6, 1e7] {
            for &noise in &[0.0, 0.5, 2.0] {
                assert!(nonclassical_depth(&p(b_p, noise, noise)) < 0.5);
            }
        }
    }

    #[test]
    fn tau_negativity_map() {
        assert_eq!(negativity_from_tau(0.0).unwrap(), 0.0);
        assert_relative_eq!(negativity_from_tau(0.25).unwrap(), 0.5, max_relative = 1e-15);
        assert!(negativity_from_tau(0.5).is_err());
        assert!(negativity_from_tau(0.7).is_err());

        let params = p(2.0, 0.1, 0.1);
        let tau = nonclassical_depth(&params);
        let n = negativity(&params).raw;
        assert_relative_eq!(negativity_from_tau(tau).unwrap(), n, max_relative = 1e-12);
        assert_relative_eq!(tau_from_negativity(n), tau, max_relative = 1e-12);
    }

    #[test]
    fn raw_negativity_equals_tau_map_on_grid() {
        // Holds on both sides of the boundary, including classical points.
        for &b_p in &[0.0, 2.0, 4.0, 6.0, 8.0] {
            for &b_s in &[0.0, 0.5, 1.0, 1.5, 2.0] {
                for &b_i in &[0.0, 0.5, 1.0, 1.5, 2.0] {
                    let params = p(b_p, b_s, b_i);
                    let raw = negativity(&params).raw;
                    let tau = nonclassical_depth(&params);
                    let mapped = negativity_from_tau(tau).unwrap();
                    assert_abs_diff_eq!(raw, mapped, epsilon = 1e-12 * (1.0 + raw.abs()));
                    // Same zero set for the two criteria.
                    assert_eq!(raw > 0.0, tau > 0.0);
                }
            }
        }
    }

    #[test]
    fn clamped_negativity_monotonicity() {
        let grid = [0.0, 0.2, 0.5, 1.0, 2.0, 4.0];
        for w in grid.windows(2) {
            for &b_s in &[0.0, 0.2, 0.8] {
                for &b_i in &[0.0, 0.4] {
                    let lo = negativity(&p(w[0], b_s, b_i)).value;
                    let hi = negativity(&p(w[1], b_s, b_i)).value;
                    assert!(hi >= lo, "N not non-decreasing in b_p");
                }
            }
        }
        for w in grid.windows(2) {
            for &b_p in &[0.1, 1.0, 4.0] {
                let lo = negativity(&p(b_p, w[0], 0.1)).value;
                let hi = negativity(&p(b_p, w[1], 0.1)).value;
                assert!(hi <= lo, "N not non-increasing in b_s");
                let lo = negativity(&p(b_p, 0.1, w[0])).value;
                let hi = negativity(&p(b_p, 0.1, w[1])).value;
                assert!(hi <= lo, "N not non-increasing in b_i");
            }
        }
    }

    #[test]
    fn dimensionality_examples() {
        assert_eq!(entanglement_dimensionality(&p(0.0, 1.0, 1.0)), 1.0);
        assert_relative_eq!(
            entanglement_dimensionality(&p(1.0, 0.0, 0.0)),
            3.0 + 2.0 * 2.0_f64.sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn noiseless_identities() {
        // K_ent = R_s + sqrt(R_s^2 - 1), modified K equals R, r_ent is 1.
        for i in 0..=100 {
            let b_p = i as f64 * 10.0 / 100.0;
            let params = p(b_p, 0.0, 0.0);
            let k = entanglement_dimensionality(&params);
            let r = participation_ratio(&params, Field::Signal);
            let expect = r + (r * r - 1.0).sqrt();
            assert_abs_diff_eq!(k, expect, epsilon = 1e-12 * (1.0 + k));
            assert_abs_diff_eq!(modified_k_ent(&params), r, epsilon = 1e-12 * (1.0 + r));
            assert_abs_diff_eq!(r_ent(&params), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn participation_examples() {
        assert_eq!(participation_ratio(&p(0.0, 0.0, 0.0), Field::Signal), 1.0);
        assert_eq!(participation_ratio(&p(1.0, 0.0, 0.0), Field::Signal), 3.0);
        assert_eq!(participation_ratio(&p(2.0, 0.5, 0.0), Field::Signal), 6.0);
        assert_eq!(participation_ratio(&p(2.0, 0.5, 0.0), Field::Idler), 5.0);
    }

    #[test]
    fn schmidt_coefficient_examples() {
        let c = schmidt_coefficients(0.0, 4);
        assert_eq!(c[0], 1.0);
        assert!(c[1..].iter().all(|&x| x == 0.0));

        let c = schmidt_coefficients(1.0, 2);
        assert_relative_eq!(c[0], 0.707_106_781_186_547_6, max_relative = 1e-14);
        assert_relative_eq!(c[1], 0.5, max_relative = 1e-14);
        assert_relative_eq!(c[2], 0.353_553_390_593_273_8, max_relative = 1e-14);
    }

    #[test]
    fn schmidt_norm_approaches_one_from_below() {
        let c = schmidt_coefficients(1.5, 200);
        let mut total = 0.0;
        let mut prev = 0.0;
        for &cj in &c {
            total += cj * cj;
            assert!(total >= prev);
            assert!(total <= 1.0 + 1e-12);
            prev = total;
        }
        assert!(total > 1.0 - 1e-12);
    }

    #[test]
    fn boundary_coefficient_ratio_tends_to_inverse_e() {
        // c_{K_ent-1} / c_{R_s-1} at j extended to real values.
        let ratio = |b_p: f64| {
            let q = b_p / (b_p + 1.0);
            let k = 2.0 * (b_p + (b_p * (b_p + 1.0)).sqrt()) + 1.0;
            let r = 2.0 * b_p + 1.0;
            (0.5 * (k - r) * q.ln()).exp()
        };
        let b_p = 1000.0_f64;
        let printed = (b_p / (1.0 + b_p)).powf(b_p + 1.0);
        assert_abs_diff_eq!(ratio(b_p), printed, epsilon = 1e-3);
        assert_abs_diff_eq!(ratio(b_p), (-1.0_f64).exp(), epsilon = 1e-3);
        assert_abs_diff_eq!(ratio(1e6), (-1.0_f64).exp(), epsilon = 1e-6);
    }

    #[test]
    fn modified_dimensionality_examples() {
        assert_relative_eq!(modified_k_ent(&p(1.0, 0.0, 0.0)), 3.0, max_relative = 1e-14);
        assert_relative_eq!(r_ent(&p(1.0, 0.0, 0.0)), 1.0, max_relative = 1e-14);
        assert_eq!(modified_k_ent(&p(0.0, 0.0, 0.0)), 1.0);
        assert_eq!(r_ent(&p(0.0, 0.0, 0.0)), 1.0);

        let params = p(1.0, 0.1, 0.1);
        assert_relative_eq!(
            negativity(&params).value,
            0.845_631_054_630_846,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            entanglement_dimensionality(&params),
            2.691_262_109_261_692,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            modified_k_ent(&params),
            1.385_242_734_442_984_7,
            max_relative = 1e-13
        );
        assert_eq!(participation_ratio(&params, Field::Signal), 3.2);
        assert_relative_eq!(r_ent(&params), 0.432_888_354_513_432_7, max_relative = 1e-13);
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(&p(0.0, 0.0, 0.0), Field::Signal), 0.0);
        assert_eq!(entropy_from_r(1.0).unwrap(), 0.0);
        assert_relative_eq!(
            entropy(&p(1.0, 0.0, 0.0), Field::Signal),
            2.0 * 2.0_f64.ln(),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            entropy_from_r(3.0).unwrap(),
            2.0 * 2.0_f64.ln(),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            entropy(&p(2.0, 0.1, 0.0), Field::Signal),
            1.949_278_121_690_719_3,
            max_relative = 1e-13
        );
        assert!(entropy_from_r(0.5).is_err());
        assert!(entropy_from_r(f64::NAN).is_err());
    }

    #[test]
    fn entropy_from_r_matches_direct_entropy() {
        for i in 0..=100 {
            let t = i as f64 * 10.0 / 100.0;
            let direct = thermal_entropy(t);
            let via_r = entropy_from_r(2.0 * t + 1.0).unwrap();
            assert_abs_diff_eq!(direct, via_r, epsilon = 1e-12);
        }
    }

    #[test]
    fn report_internal_consistency() {
        for &(b_p, b_s, b_i) in &[(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (2.0, 0.1, 0.7), (0.5, 0.9, 0.9)] {
            let r = QuantReport::compute(&p(b_p, b_s, b_i));
            assert_eq!(r.negativity, r.raw_negativity.max(0.0));
            assert_eq!(r.entangled, r.negativity > 0.0);
            assert_eq!(r.entangled, r.tau > 0.0);
            assert_relative_eq!(r.k_ent, 2.0 * r.negativity + 1.0, max_relative = 1e-15);
            assert!(r.r_ent > 0.0 && r.r_ent <= 1.0 + 1e-12);
        }
    }

    proptest! {
        #[test]
        fn tau_map_round_trips(tau in 0.0..0.49_f64) {
            let n = negativity_from_tau(tau).unwrap();
            let back = tau_from_negativity(n);
            prop_assert!((back - tau).abs() <= 1e-12 * (1.0 + tau));
        }

        #[test]
        fn report_is_finite_for_valid_params(
            b_p in 0.0..50.0_f64,
            b_s in 0.0..5.0_f64,
            b_i in 0.0..5.0_f64,
        ) {
            let r = QuantReport::compute(&p(b_p, b_s, b_i));
            prop_assert!(r.negativity.is_finite());
            prop_assert!(r.tau.is_finite() && r.tau < 0.5);
            prop_assert!(r.k_ent >= 1.0);
            prop_assert!(r.r_s >= 1.0 && r.r_i >= 1.0);
            prop_assert!(r.s_s >= 0.0 && r.s_i >= 0.0);
        }
    }
}
