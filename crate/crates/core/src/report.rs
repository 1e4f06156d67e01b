//! Text formatting shared by the command line and the CSV writer.

use std::io::{self, Write};

use crate::oracle::AccuracySample;

pub const CSV_HEADER: &str = "x,approx,reference,delta";

/// Shortest representation that parses back to the same double.
///
/// Integral values print without a fractional part, very large or small
/// magnitudes in exponent form, and non-finite values as `nan`, `inf`, `-inf`.
pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        return "nan".to_owned();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    let a = v.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Writes samples as CSV with a header row and `\n` line endings.
pub fn write_csv<W: Write>(out: &mut W, samples: &[AccuracySample]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for s in samples {
        writeln!(
            out,
            "{},{},{},{}",
            format_value(s.x),
            format_value(s.approx),
            format_value(s.reference),
            format_value(s.delta)
        )?;
    }
    Ok(())
}
