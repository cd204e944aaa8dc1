//! Register state: amplitudes over occupation bitstrings, measurement,
//! parity, sampling, and the JSON dump format.

use num_complex::Complex64;
use rand::Rng;

use super::{RegisterError, MAX_PAIRS};
use crate::jsonout::Json;

const BASIS_CONVENTION: &str =
    "little-endian occupation basis: bit i of the index is the occupation of mode c_{i+1}";

/// `n`-pair (2n-Majorana) register state: `2^n` complex amplitudes indexed
/// by occupation bitstrings. Immutable value object; braid application
/// returns a new register.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaRegister {
    n_pairs: usize,
    amps: Vec<Complex64>,
}

impl MajoranaRegister {
    /// All pairs in the `|0>` state (vortices created in pairs from the
    /// vacuum start here).
    pub fn vacuum(n: usize) -> Result<Self, RegisterError> {
        Self::basis_state(n, 0)
    }

    /// A single occupation bitstring.
    pub fn basis_state(n: usize, index: usize) -> Result<Self, RegisterError> {
        check_pairs(n)?;
        let dim = 1usize << n;
        if index >= dim {
            return Err(RegisterError::DimensionMismatch {
                len: index,
                expected: dim,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(MajoranaRegister { n_pairs: n, amps })
    }

    /// Wrap an amplitude vector; must have length `2^n` and unit norm
    /// within `1e-10`.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self, RegisterError> {
        check_pairs(n)?;
        let dim = 1usize << n;
        if amps.len() != dim {
            return Err(RegisterError::DimensionMismatch {
                len: amps.len(),
                expected: dim,
            });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(RegisterError::NotNormalized { norm });
        }
        Ok(MajoranaRegister { n_pairs: n, amps })
    }

    pub fn n_pairs(&self) -> usize {
        self.n_pairs
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|amplitude|^2` per occupation bitstring; sums to 1.
    pub fn measure_occupations(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Expectation of the total fermion parity `prod_i (1 - 2 n_i)`;
    /// braiding conserves it.
    pub fn parity(&self) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .map(|(b, a)| {
                let sign = if (b.count_ones()) % 2 == 0 { 1.0 } else { -1.0 };
                sign * a.norm_sqr()
            })
            .sum()
    }

    /// Draw `shots` occupation bitstrings; returns counts per basis index.
    pub fn sample_occupations<R: Rng + ?Sized>(&self, rng: &mut R, shots: usize) -> Vec<u64> {
        let probs = self.measure_occupations();
        let mut counts = vec![0u64; probs.len()];
        for _ in 0..shots {
            let mut u: f64 = rng.random();
            let mut drawn = probs.len() - 1;
            for (i, &p ) in probs.iter().enumerate() {
                if u < p {
                    drawn = i;
                    break;
                }
                u -= p;
            }
            counts[drawn] += 1;
        }
        counts
    }
}

fn check_pairs(n: usize) -> Result<(), RegisterError> {
    if n < 1 || n > MAX_PAIRS {
        return Err(RegisterError::PairCountOutOfRange { n });
    }
    Ok(())
}

/// Render a basis index as an occupation string, mode `c_1` leftmost:
/// `bitstring_label(2, 1) == "10"` (mode 1 occupied, mode 2 empty).
pub fn bitstring_label(n: usize, index: usize) -> String {
    (0..n)
        .map(|bit| if index >> bit & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// JSON dump: pair count, basis convention string, and `(re, im)` amplitude
/// pairs in index order.
pub fn register_to_json(state: &MajoranaRegister) -> String {
    let amps = state
        .amplitudes()
        .iter()
        .map(|a| Json::Arr(vec![Json::Num(a.re), Json::Num(a.im)]))
        .collect();
    let mut doc = Json::obj();
    doc.push("n_pairs", Json::Int(state.n_pairs() as i64))
        .push("basis", Json::Str(BASIS_CONVENTION.into()))
        .push("amplitudes", Json::Arr(amps));
    doc.render()
}

pub fn register_from_json(text: &str) -> Result<MajoranaRegister, RegisterError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| RegisterError::MalformedFile {
            reason: format!("JSON parse error: {e}"),
        })?;
    let n = value
        .get("n_pairs")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| RegisterError::MalformedFile {
            reason: "missing n_pairs".into(),
        })? as usize;
    let raw = value
        .get("amplitudes")
        .and_then(|v| v.as_array())
        .ok_or_else(|| RegisterError::MalformedFile {
            reason: "missing amplitudes array".into(),
        })?;
    let mut amps = Vec::with_capacity(raw.len());
    for entry in raw {
        let pair = entry.as_array().ok_or_else(|| RegisterError::MalformedFile {
            reason: "amplitude entry is not a [re, im] pair".into(),
        })?;
        if pair.len() != 2 {
            return Err(RegisterError::MalformedFile {
                reason: "amplitude entry is not a [re, im] pair".into(),
            });
        }
        let re = pair[0].as_f64().ok_or_else(|| RegisterError::MalformedFile {
            reason: "non-numeric amplitude".into(),
        })?;
        let im = pair[1].as_f64().ok_or_else(|| RegisterError::MalformedFile {
            reason: "non-numeric amplitude".into(),
        })?;
        amps.push(Complex64::new(re, im));
    }
    MajoranaRegister::from_amplitudes(n, amps)
}
