//! Output plumbing: the CSV number format and the stdout-or-file sink.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};

/// Formats with 9 significant digits, plain decimal where readable and
/// scientific otherwise, trailing zeros trimmed.  CSV cells go through this
/// so that figure-grade files stay compact and byte-deterministic.
pub fn fmt_g(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    } else {
        format!("{:.8e}", x)
    }
}

/// Opens the output sink: a buffered file when `--out` was given, stdout
/// otherwise.
pub fn open_sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create output file {}", path.display()))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

pub fn write_csv_row(sink: &mut dyn Write, cells: &[String]) -> io::Result<()> {
    writeln!(sink, "{}", cells.join(","))
}
