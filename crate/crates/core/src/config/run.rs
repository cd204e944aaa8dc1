//! Typed extraction of the toolkit's run configuration.

use std::path::PathBuf;

use super::ini::{IniDocument, IniSection};
use super::ConfigError;
use crate::bdg::PhysicalParams;
use crate::readout::{PulseParams, ScatterParams};
use crate::units::parse_angular_frequency;

/// Pulse block: the resonant pulse plus the paired-atom detuning used by
/// the read-out command.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseConfig {
    pub resonant: PulseParams,
    pub detuning_paired: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BraidConfig {
    pub n_pairs: usize,
    pub script_path: PathBuf,
}

/// Full run configuration. The `[physical]` block is always required; the
/// others are per-command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub physical: PhysicalParams,
    pub pulse: Option<PulseConfig>,
    pub scatter: Option<ScatterParams>,
    pub braid: Option<BraidConfig>,
    pub output_dir: PathBuf,
    pub seed: u64,
}

const KNOWN_SECTIONS: &[(&str, &[&str])] = &[
    ("physical", &["mass", "mu", "delta0", "p_fermi", "xi"]),
    (
        "pulse",
        &["omega0", "rabi0", "t_f", "detuning", "detuning_paired"],
    ),
    ("scatter", &["gamma", "delta"]),
    ("braid", &["n", "script"]),
    ("run", &["output_dir", "seed"]),
];

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let doc = IniDocument::parse(text)?;
        reject_unknown(&doc)?;

        let physical = {
            let s = doc
                .section("physical")
                .ok_or(ConfigError::MissingSection {
                    section: "physical",
                })?;
            PhysicalParams::new(
                f64_key(s, "mass")?,
                f64_key(s, "mu")?,
                f64_key(s, "delta0")?,
                f64_key(s, "p_fermi")?,
                f64_key(s, "xi")?,
            )
            .map_err(|e| ConfigError::bad_value("physical", "*", e))?
        };

        let pulse = doc
            .section("pulse")
            .map(|s| -> Result<PulseConfig, ConfigError> {
                let bandwidth = freq_key(s, "omega0")?;
                let peak_rabi = freq_key(s, "rabi0")?;
                let t_f = f64_key(s, "t_f")?;
                let detuning = match s.get("detuning") {
                    Some(_) => freq_key(s, "detuning")?,
                    None => 0.0,
                };
                let resonant = PulseParams::new(bandwidth, peak_rabi, t_f, detuning)
                    .map_err(|e| ConfigError::bad_value("pulse", "*", e))?;
                let detuning_paired = match s.get("detuning_paired") {
                    Some(_) => Some(freq_key(s, "detuning_paired")?),
                    None => None,
                };
                Ok(PulseConfig {
                    resonant,
                    detuning_paired,
                })
            })
            .transpose()?;

        let scatter = doc
            .section("scatter")
            .map(|s| -> Result<ScatterParams, ConfigError> {
                ScatterParams::new(freq_key(s, "gamma")?, freq_key(s, "delta")?)
                    .map_err(|e| ConfigError::bad_value("scatter", "*", e))
            })
            .transpose()?;

        let braid = doc
            .section("braid")
            .map(|s| -> Result<BraidConfig, ConfigError> {
                let n_raw = s.get("n").ok_or(ConfigError::MissingKey {
                    section: "braid",
                    key: "n",
                })?;
                let n_pairs: usize = n_raw
                    .parse()
                    .map_err(|_| ConfigError::bad_value("braid", "n", "not an integer"))?;
                let script = s.get("script").ok_or(ConfigError::MissingKey {
                    section: "braid",
                    key: "script",
                })?;
                Ok(BraidConfig {
                    n_pairs,
                    script_path: PathBuf::from(script),
                })
            })
            .transpose()?;

        let (output_dir, seed) = match doc.section("run") {
            Some(s) => {
                let dir = s.get("output_dir").unwrap_or("mzm-out").to_owned();
                let seed = match s.get("seed") {
                    Some(raw) => raw
                        .parse::<u64>()
                        .map_err(|_| ConfigError::bad_value("run", "seed", "not a u64"))?,
                    None => 0,
                };
                (PathBuf::from(dir), seed)
            }
            None => (PathBuf::from("mzm-out"), 0),
        };

        Ok(RunConfig {
            physical,
            pulse,
            scatter,
            braid,
            output_dir,
            seed,
        })
    }
}

fn reject_unknown(doc: &IniDocument) -> Result<(), ConfigError> {
    for section in doc.sections() {
        let known = KNOWN_SECTIONS.iter().find(|(name, _)| *name == section.name);
        match known {
            None => {
                return Err(ConfigError::UnknownSection {
                    section: section.name.clone(),
                })
            }
            Some((_, keys)) => {
                for key in section.keys() {
                    if !keys.contains(&key) {
                        return Err(ConfigError::UnknownKey {
                            section: section.name.clone(),
                            key: key.to_owned(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn f64_key(section: &IniSection, key: &'static str) -> Result<f64, ConfigError> {
    let raw = section.get(key).ok_or(ConfigError::MissingKey {
        section: known_name(section),
        key,
    })?;
    raw.parse()
        .map_err(|_| ConfigError::bad_value(&section.name, key, "not a number"))
}

fn freq_key(section: &IniSection, key: &'static str) -> Result<f64, ConfigError> {
    let raw = section.get(key).ok_or(ConfigError::MissingKey {
        section: known_name(section),
        key,
    })?;
    parse_angular_frequency(raw)
        .map_err(|e| ConfigError::bad_value(&section.name, key, e))
}

fn known_name(section: &IniSection) -> &'static str {
    KNOWN_SECTIONS
        .iter()
        .map(|(name, _)| *name)
        .find(|name| *name == section.name)
        .unwrap_or("?")
}
