//! Exact representation of `2n` Majorana modes on the `2^n`-dimensional
//! occupation basis, with braid-group generators and measurement.
//!
//! Mode conventions (fixed; file formats depend on them):
//!
//! * Complex fermions pair neighboring Majoranas with the normalized form
//!   `c_k = (gamma_{2k-1} + i gamma_{2k}) / 2`, so `{c_k, c_k^dag} = 1` and
//!   `gamma^2 = 1`.
//! * Basis index bit `k-1` (little-endian) is the occupation of `c_k`.
//! * In that basis `gamma_{2k-1}` acts as a Jordan–Wigner `X` string and
//!   `gamma_{2k}` as the matching `Y` string.
//! * The braid generator at site `i` is `T_i = (1 + gamma_{i+1} gamma_i)/sqrt2
//!   = exp((pi/4) gamma_{i+1} gamma_i)`, which conjugates
//!   `gamma_i -> gamma_{i+1}` and `gamma_{i+1} -> -gamma_i`.
//!
//! States are dense amplitude vectors (capped at `n = 12` pairs); generators
//! act matrix-free since each touches at most two occupation bits. Operator
//! matrices materialize on demand for algebra checks.

mod braid_op;
mod linalg;
mod majorana;
mod state;

pub use braid_op::{apply_braid, braid_generator, conjugate_majorana, BraidGenerator};
pub use linalg::CMat;
pub use majorana::{build_majoranas, MajoranaOperator};
pub use state::{bitstring_label, register_from_json, register_to_json, MajoranaRegister};

/// Dense-representation bound: amplitudes stay desk-scale up to 2^12.
pub const MAX_PAIRS: usize = 12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RegisterError {
    #[error("pair count {n} outside 1..={MAX_PAIRS}")]
    PairCountOutOfRange { n: usize },
    #[error("majorana index {index} outside 1..={max} for {n} pairs")]
    MajoranaIndexOutOfRange { index: usize, max: usize, n: usize },
    #[error("braid site {site} outside 1..={max} for {n} pairs")]
    SiteOutOfRange { site: usize, max: usize, n: usize },
    #[error("amplitude vector has length {len}, expected {expected}")]
    DimensionMismatch { len: usize, expected: usize },
    #[error("state norm {norm} is not 1 within 1e-10")]
    NotNormalized { norm: f64 },
    #[error(
        "conjugated operator is not proportional to a single majorana (closest: {closest_index} \
         with deviation {deviation:e}); this indicates an implementation bug"
    )]
    NotASingleMajorana {
        closest_index: usize,
        deviation: f64,
    },
    #[error("malformed register file: {reason}")]
    MalformedFile { reason: String },
}
