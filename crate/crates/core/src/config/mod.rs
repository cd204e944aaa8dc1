//! Run configuration: a flat INI-style text format with typed extraction.
//!
//! Grammar (line oriented):
//!
//! ```text
//! file    := line*
//! line    := ws* (comment | section | entry)? ws* EOL
//! comment := ("#" | ";") any*
//! section := "[" name "]"
//! entry   := key ws* "=" ws* value
//! name    := [A-Za-z_][A-Za-z0-9_-]*
//! key     := [A-Za-z_][A-Za-z0-9_]*
//! value   := any non-empty text, trimmed
//! ```
//!
//! Comments occupy whole lines (values may legitimately contain `#`).
//! Duplicate sections or keys are rejected; so are keys the toolkit does
//! not know, which catches typos before they silently change a run.
//!
//! Frequency-valued keys use the angular-frequency literal grammar from
//! [`crate::units`] (`34557.5`, `2pi*5.5kHz`, ...); plain-number keys are
//! ordinary float literals.

mod ini;
mod run;

pub use ini::{IniDocument, IniSection};
pub use run::{BraidConfig, PulseConfig, RunConfig};

use crate::units::FreqParseError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("missing section [{section}]")]
    MissingSection { section: &'static str },
    #[error("missing key {key:?} in section [{section}]")]
    MissingKey {
        section: &'static str,
        key: &'static str,
    },
    #[error("[{section}] {key}: {reason}")]
    InvalidValue {
        section: String,
        key: String,
        reason: String,
    },
    #[error("unknown section [{section}]")]
    UnknownSection { section: String },
    #[error("unknown key {key:?} in section [{section}]")]
    UnknownKey { section: String, key: String },
}

impl ConfigError {
    pub(crate) fn bad_value(
        section: &str,
        key: &str,
        reason: impl std::fmt::Display,
    ) -> ConfigError {
        ConfigError::InvalidValue {
            section: section.to_owned(),
            key: key.to_owned(),
            reason: reason.to_string(),
        }
    }
}

impl From<(String, String, FreqParseError)> for ConfigError {
    fn from((section, key, err): (String, String, FreqParseError)) -> Self {
        ConfigError::InvalidValue {
            section,
            key,
            reason: err.to_string(),
        }
    }
}
