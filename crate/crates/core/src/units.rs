//! Angular-frequency conventions and the literal grammar for config input.
//!
//! Every frequency-valued quantity in this crate is an *angular* frequency
//! in rad/s. The single most likely user unit error is feeding a cyclic
//! frequency where an angular one is expected, so cyclic units must be
//! written with an explicit `2pi*` marker:
//!
//! ```text
//! freq   := number             (rad/s)
//!         | number "rad/s"
//!         | "2pi*" number unit (cyclic, converted to angular)
//! unit   := "Hz" | "kHz" | "MHz" | "GHz"
//! number := float literal, e.g. 11, 1.2, 5e3
//! ```
//!
//! A bare Hz-family suffix without the `2pi*` marker is rejected.

use std::f64::consts::TAU;

pub fn angular_from_hz(f: f64) -> f64 {
    TAU * f
}

pub fn angular_from_khz(f: f64) -> f64 {
    TAU * 1e3 * f
}

pub fn angular_from_mhz(f: f64) -> f64 {
    TAU * 1e6 * f
}

pub fn angular_from_ghz(f: f64) -> f64 {
    TAU * 1e9 * f
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreqParseError {
    #[error("empty frequency literal")]
    Empty,
    #[error("malformed number at offset {offset}")]
    BadNumber { offset: usize },
    #[error("unknown unit suffix {found:?} at offset {offset}")]
    UnknownUnit { found: String, offset: usize },
    #[error("cyclic unit {unit:?} at offset {offset} requires the explicit 2pi* prefix")]
    UnitRequiresTwoPi { unit: String, offset: usize },
    #[error("2pi* prefix requires a cyclic unit suffix (Hz, kHz, MHz, GHz)")]
    TwoPiWithoutUnit,
}

/// Parse an angular-frequency literal. Returns rad/s.
pub fn parse_angular_frequency(text: &str) -> Result<f64, FreqParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(FreqParseError::Empty);
    }
    let (cyclic, rest, base) = match s.strip_prefix("2pi*") {
        Some(r) => (true, r, 4usize),
        None => (false, s, 0usize),
    };
    let num_len = float_prefix_len(rest);
    if num_len == 0 {
        return Err(FreqParseError::BadNumber { offset: base });
    }
    let value: f64 = rest[..num_len]
        .parse()
        .map_err(|_| FreqParseError::BadNumber { offset: base })?;
    let suffix = &rest[num_len..];
    let suffix_offset = base + num_len;
    match (cyclic, suffix) {
        (false, "") => Ok(value),
        (false, "rad/s") => Ok(value),
        (false, "Hz" | "kHz" | "MHz" | "GHz") => Err(FreqParseError::UnitRequiresTwoPi {
            unit: suffix.to_owned(),
            offset: suffix_offset,
        }),
        (true, "Hz") => Ok(angular_from_hz(value)),
        (true, "kHz") => Ok(angular_from_khz(value)),
        (true, "MHz") => Ok(angular_from_mhz(value)),
        (true, "GHz") => Ok(angular_from_ghz(value)),
        (true, "" | "rad/s") => Err(FreqParseError::TwoPiWithoutUnit),
        (_, other) => Err(FreqParseError::UnknownUnit {
            found: other.to_owned(),
            offset: suffix_offset,
        }),
    }
}

/// Length of the leading float literal: `[+-]? digits [. digits]? ([eE][+-]? digits)?`.
fn float_prefix_len(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    let int_start = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    let had_int = i > int_start;
    if i < b.len() && b[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if !had_int && i == frac_start {
            return 0; // lone sign or dot
        }
    } else if !had_int {
        return 0;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        let mark = i;
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        let exp_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i == exp_start {
            i = mark; // not an exponent after all
        }
    }
    i
}
