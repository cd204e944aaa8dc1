//! Vortex-core zero-mode problem for the 2D spinless p-wave superfluid.
//!
//! The vortex is modeled with a hard core: the gap vanishes for `rho < xi`
//! and has constant amplitude outside. For `mu > 0` (weak pairing) the
//! zero-energy radial problem is
//!
//! ```text
//! inside:   chi'' + chi'/rho + 2 m mu chi = 0      -> chi = A J0(k_in rho)
//! outside:  chi'' + chi'/rho + kappa^2   chi = 0   (after peeling off
//!           exp(-Delta0 rho / v_F)),  kappa^2 = 2 m mu - (Delta0/v_F)^2
//! ```
//!
//! on the spinor `e^{i pi/4} (1, -i)^T`, so the full amplitudes are
//! `u = e^{i pi/4} chi` and `v = e^{-i pi/4} chi = u*` — the self-conjugate
//! (Majorana) structure. Matching value and slope at `rho = xi` fixes the
//! two exterior constants, and normalization fixes the overall amplitude.
//!
//! For `mu < 0` (strong pairing) both regions turn into modified Bessel
//! equations with one admissible solution each; value and slope matching
//! over-determine the single remaining ratio and the log-derivative mismatch
//! never crosses zero, so no zero mode exists there.

mod export;
mod params;
mod profile;
mod strong;
mod weak;

pub use export::{
    profile_from_csv, profile_from_json, profile_to_csv, profile_to_json, samples_from_csv,
};
pub use params::{GridSpec, PhysicalParams};
pub use profile::{majorana_condition_residual, ExteriorBranch, ProfileSample, ZeroModeProfile};
pub use strong::{
    scan_strong_pairing, strong_pairing_residual, strong_pairing_residual_bare, MismatchReport,
};
pub use weak::{weak_zero_mode, weak_zero_mode_with_amplitude};

use crate::numerics::NumericsError;
use crate::specfun::SpecFunError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BdgError {
    #[error("invalid physical parameters: {reason}")]
    InvalidParams { reason: String },
    #[error("operation requires {required}, got mu = {mu}")]
    WrongPhase { required: &'static str, mu: f64 },
    #[error("matching system is degenerate (|det| = {det:e} < 1e-14)")]
    DegenerateMatching { det: f64 },
    #[error("invalid sampling grid: {reason}")]
    InvalidGrid { reason: String },
    #[error("profile has no samples")]
    EmptySamples,
    #[error("parameters put the solution outside the representable range: {reason}")]
    UnrepresentableRegime { reason: String },
    #[error("invalid scan range [{lo}, {hi}] with {n_points} points: {reason}")]
    InvalidScanRange {
        lo: f64,
        hi: f64,
        n_points: usize,
        reason: &'static str,
    },
    #[error("special function evaluation failed: {0}")]
    SpecFun(#[from] SpecFunError),
    #[error("numerical routine failed: {0}")]
    Numerics(#[from] NumericsError),
    #[error("malformed profile file: {reason}")]
    MalformedFile { reason: String },
}

/// Order-of-magnitude estimate of the energy separating the core zero mode
/// from the first excited core state: `Delta0^2 / eps_F`.
pub fn minigap_estimate(params: &PhysicalParams) -> f64 {
    params.delta0() * params.delta0() / params.eps_fermi()
}
