//! Single-point analysis report in JSON.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use twinbeam::analytic::Field;
use twinbeam::fock::FockOracle;
use twinbeam::multimode::{per_mode_quantities, MultimodeSpec, PerModeQuantities};
use twinbeam::{QuantReport, TwinBeamParams};

#[derive(Serialize)]
struct ParamsSection {
    b_p: f64,
    b_s: f64,
    b_i: f64,
}

#[derive(Serialize)]
struct OracleSection {
    n_max: usize,
    eps_trunc: f64,
    negativity_numeric: f64,
    negativity_abs_err: f64,
    r_s_numeric: f64,
    r_s_abs_err: f64,
    r_i_numeric: f64,
    r_i_abs_err: f64,
    s_s_numeric: f64,
    s_s_abs_err: f64,
    s_i_numeric: f64,
    s_i_abs_err: f64,
    positivity_floor: f64,
    trace_deficit: f64,
}

#[derive(Serialize)]
struct AnalyzeReport {
    params: ParamsSection,
    report: QuantReport,
    per_mode: PerModeQuantities,
    oracle: Option<OracleSection>,
    truncated: bool,
}

pub struct AnalyzeOptions {
    pub oracle: bool,
    pub eps_trunc: f64,
    pub n_max_override: Option<usize>,
}

/// Writes the JSON report; returns true when the oracle truncation ceiling
/// bound (results are then lower bounds).
pub fn run(params: &TwinBeamParams, opts: &AnalyzeOptions, sink: &mut dyn Write) -> Result<bool> {
    let report = QuantReport::compute(params);
    let per_mode = per_mode_quantities(&MultimodeSpec::new(1, *params)?);

    let mut truncated = false;
    let oracle = if opts.oracle {
        let oracle = match opts.n_max_override {
            Some(n_max) => FockOracle::with_n_max(params, n_max, opts.eps_trunc)?,
            None => FockOracle::build(params, opts.eps_trunc)?,
        };
        truncated = oracle.capped();
        let negativity_numeric = oracle.negativity()?;
        let r_s_numeric = oracle.participation(Field::Signal)?;
        let r_i_numeric = oracle.participation(Field::Idler)?;
        let s_s_numeric = oracle.entropy(Field::Signal)?;
        let s_i_numeric = oracle.entropy(Field::Idler)?;
        Some(OracleSection {
            n_max: oracle.n_max(),
            eps_trunc: opts.eps_trunc,
            negativity_abs_err: (negativity_numeric - report.negativity).abs(),
            negativity_numeric,
            r_s_abs_err: (r_s_numeric - report.r_s).abs(),
            r_s_numeric,
            r_i_abs_err: (r_i_numeric - report.r_i).abs(),
            r_i_numeric,
            s_s_abs_err: (s_s_numeric - report.s_s).abs(),
            s_s_numeric,
            s_i_abs_err: (s_i_numeric - report.s_i).abs(),
            s_i_numeric,
            positivity_floor: oracle.positivity_floor()?,
            trace_deficit: oracle.rho().trace_deficit(),
        })
    } else {
        None
    };

    let out = AnalyzeReport {
        params: ParamsSection {
            b_p: params.b_p(),
            b_s: params.b_s(),
            b_i: params.b_i(),
        },
        report,
        per_mode,
        oracle,
        truncated,
    };
    serde_json::to_writer_pretty(&mut *sink, &out)?;
    writeln!(sink)?;
    Ok(truncated)
}
