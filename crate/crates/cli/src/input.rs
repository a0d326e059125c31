//! Parsing of numeric command-line values at the working precision.

use zfr_core::scalar::parse_decimal;
use zfr_core::{Mp, Real, Scalar};

/// A height `T`, held as `log T` so that `e^54550` needs no overflow care.
#[derive(Debug, Clone, PartialEq)]
pub enum HeightArg {
    Log(Mp),
    Infinite,
}

/// A decimal, or a quotient `p/q` of decimals.
pub fn parse_real(s: &str) -> Result<Mp, String> {
    let bad = || format!("cannot parse {s:?} as a number");
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (Mp, Mp) = (parse_decimal(p).ok_or_else(bad)?, parse_decimal(q).ok_or_else(bad)?);
            if q == Mp::from_i64(0) {
                return Err(format!("{s:?} divides by zero"));
            }
            Ok(p / q)
        }
        None => parse_decimal(s).ok_or_else(bad),
    }
}

/// `eN` for `e^N`, a plain positive number, or `inf` / `∞`.
pub fn parse_height(s: &str) -> Result<HeightArg, String> {
    let s = s.trim();
    if matches!(s.to_ascii_lowercase().as_str(), "inf" | "infinity") || s == "∞" {
        return Ok(HeightArg::Infinite);
    }
    if let Some(rest) = s.strip_prefix('e').or_else(|| s.strip_prefix("e^")) {
        let rest = rest.strip_prefix('^').unwrap_or(rest);
        return parse_real(rest).map(HeightArg::Log).map_err(|_| format!("cannot parse height {s:?}"));
    }
    let t = parse_real(s).map_err(|_| format!("cannot parse height {s:?}; use a number, eN for e^N, or inf"))?;
    if !(t > Mp::from_i64(0)) {
        return Err(format!("height {s:?} must be positive"));
    }
    Ok(HeightArg::Log(t.ln()))
}
