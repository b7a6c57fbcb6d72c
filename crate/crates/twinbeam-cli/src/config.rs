//! Sweep configuration: the TOML schema and the flag-based equivalent.
//!
//! Parsing is strict; an unknown key is an error so a typo cannot silently
//! drop part of a sweep definition.

use anyhow::{bail, Context, Result};
use serde::Deserialize;

/// One axis of the sweep grid.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisRange {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl AxisRange {
    pub fn fixed(value: f64) -> Self {
        Self {
            start: value,
            stop: value,
            steps: 1,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        (0..self.steps)
            .map(|i| self.start + (i as f64 * (self.stop - self.start)) / (self.steps - 1) as f64)
            .collect()
    }

    fn validate(&self, name: &str) -> Result<()> {
        if self.steps < 1 {
            bail!("{name}: steps must be \u{2265} 1");
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            bail!("{name}: start and stop must be finite");
        }
        if self.start > self.stop {
            bail!("{name}: start must be \u{2264} stop");
        }
        Ok(())
    }
}

/// Quantities a sweep can emit per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKey {
    Negativity,
    Tau,
    KEnt,
    KEntMod,
    RS,
    RI,
    REnt,
    SS,
    SI,
    TauW,
}

impl OutputKey {
    pub fn name(&self) -> &'static str {
        match self {
            OutputKey::Negativity => "negativity",
            OutputKey::Tau => "tau",
            OutputKey::KEnt => "k_ent",
            OutputKey::KEntMod => "k_ent_mod",
            OutputKey::RS => "r_s",
            OutputKey::RI => "r_i",
            OutputKey::REnt => "r_ent",
            OutputKey::SS => "s_s",
            OutputKey::SI => "s_i",
            OutputKey::TauW => "tau_w",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "negativity" => OutputKey::Negativity,
            "tau" => OutputKey::Tau,
            "k_ent" => OutputKey::KEnt,
            "k_ent_mod" => OutputKey::KEntMod,
            "r_s" => OutputKey::RS,
            "r_i" => OutputKey::RI,
            "r_ent" => OutputKey::REnt,
            "s_s" => OutputKey::SS,
            "s_i" => OutputKey::SI,
            "tau_w" => OutputKey::TauW,
            other => bail!("unknown output key {other:?}"),
        })
    }

    /// Keys with a Fock-oracle counterpart gain `_numeric` / `_abs_err`
    /// columns when the oracle cross-check is on.
    pub fn oracle_checkable(&self) -> bool {
        matches!(
            self,
            OutputKey::Negativity
                | OutputKey::RS
                | OutputKey::RI
                | OutputKey::SS
                | OutputKey::SI
        )
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeCounts {
    pub m_p: usize,
    pub m_s: usize,
    pub m_i: usize,
}

fn default_eps_trunc() -> f64 {
    1e-12
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub b_p_values: Vec<f64>,
    pub b_s_range: AxisRange,
    pub b_i_range: AxisRange,
    pub outputs: Vec<OutputKey>,
    #[serde(default)]
    pub oracle: bool,
    #[serde(default = "default_eps_trunc")]
    pub eps_trunc: f64,
    #[serde(default)]
    pub mode_counts: Option<ModeCounts>,
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: SweepConfig = toml::from_str(text).context("malformed sweep config")?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.b_p_values.is_empty() {
            bail!("b_p_values must not be empty");
        }
        if self.outputs.is_empty() {
            bail!("outputs must not be empty");
        }
        self.b_s_range.validate("b_s_range")?;
        self.b_i_range.validate("b_i_range")?;
        if !(self.eps_trunc > 0.0 && self.eps_trunc < 1.0) {
            bail!("eps_trunc must lie in (0, 1)");
        }
        if self.outputs.contains(&OutputKey::TauW) && self.mode_counts.is_none() {
            bail!("output tau_w needs mode_counts = {{ m_p, m_s, m_i }}");
        }
        if let Some(mc) = &self.mode_counts {
            if mc.m_p + mc.m_s + mc.m_i == 0 {
                bail!("mode_counts must have at least one mode");
            }
        }
        Ok(())
    }
}
