//! Cartesian parameter sweeps with deterministic row order.

use std::io::Write;

use anyhow::Result;
use twinbeam::analytic::Field;
use twinbeam::fock::FockOracle;
use twinbeam::multimode::{self, ExperimentalBeamSpec};
use twinbeam::{QuantReport, TwinBeamParams};

use crate::config::{OutputKey, SweepConfig};
use crate::output::{fmt_g, write_csv_row};

/// Runs the sweep, writing CSV to `sink`.  Returns true when any oracle
/// build hit the truncation ceiling, in which case those rows are lower
/// bounds and the process exits with the truncated status.
pub fn run(config: &SweepConfig, sink: &mut dyn Write) -> Result<bool> {
    let mut header = vec!["b_p".to_string(), "b_s".to_string(), "b_i".to_string()];
    for key in &config.outputs {
        header.push(key.name().to_string());
        if config.oracle && key.oracle_checkable() {
            header.push(format!("{}_numeric", key.name()));
            header.push(format!("{}_abs_err", key.name()));
        }
    }
    write_csv_row(sink, &header)?;

    let needs_oracle =
        config.oracle && config.outputs.iter().any(|k| k.oracle_checkable());
    let mut capped = false;

    for &b_p in &config.b_p_values {
        for b_s in config.b_s_range.values() {
            for b_i in config.b_i_range.values() {
                let params = TwinBeamParams::new(b_p, b_s, b_i)?;
                let report = QuantReport::compute(&params);
                let oracle = if needs_oracle {
                    let o = FockOracle::build(&params, config.eps_trunc)?;
                    capped |= o.capped();
                    Some(o)
                } else {
                    None
                };

                let mut row = vec![fmt_g(b_p), fmt_g(b_s), fmt_g(b_i)];
                for key in &config.outputs {
                    let value = scalar_output(*key, &report, config, b_p, b_s, b_i)?;
                    row.push(fmt_g(value));
                    if config.oracle && key.oracle_checkable() {
                        let numeric = oracle_value(oracle.as_ref().unwrap(), *key)?;
                        row.push(fmt_g(numeric));
                        row.push(fmt_g((numeric - value).abs()));
                    }
                }
                write_csv_row(sink, &row)?;
            }
        }
    }
    Ok(capped)
}

fn scalar_output(
    key: OutputKey,
    report: &QuantReport,
    config: &SweepConfig,
    b_p: f64,
    b_s: f64,
    b_i: f64,
) -> Result<f64> {
    Ok(match key {
        OutputKey::Negativity => report.negativity,
        OutputKey::Tau => report.tau,
        OutputKey::KEnt => report.k_ent,
        OutputKey::KEntMod => report.k_ent_mod,
        OutputKey::RS => report.r_s,
        OutputKey::RI => report.r_i,
        OutputKey::REnt => report.r_ent,
        OutputKey::SS => report.s_s,
        OutputKey::SI => report.s_i,
        OutputKey::TauW => {
            let mc = config
                .mode_counts
                .expect("validated: tau_w has mode counts");
            multimode::tau_w(&ExperimentalBeamSpec::new(
                mc.m_p, mc.m_s, mc.m_i, b_p, b_s, b_i,
            )?)
        }
    })
}

fn oracle_value(oracle: &FockOracle, key: OutputKey) -> Result<f64> {
    Ok(match key {
        OutputKey::Negativity => oracle.negativity()?,
        OutputKey::RS => oracle.participation(Field::Signal)?,
        OutputKey::RI => oracle.participation(Field::Idler)?,
        OutputKey::SS => oracle.entropy(Field::Signal)?,
        OutputKey::SI => oracle.entropy(Field::Idler)?,
        _ => unreachable!("only checkable keys reach the oracle"),
    })
}
