//! Qubit read-out simulation: a Gaussian two-photon Raman pulse on an
//! effective two-level atom, resonant for an unpaired core atom and detuned
//! by twice the gap for paired atoms, plus the fluorescence scattering-ratio
//! estimate for the detection stage.
//!
//! Rabi convention: the drive enters the rotating-frame Hamiltonian as
//! `Omega/2` off-diagonal,
//!
//! ```text
//! H(t) = 1/2 [ -delta      Omega(t) ]      Omega(t) = Omega0 e^{-w0^2 t^2}
//!             [ Omega(t)   +delta   ],     t in [-t_f, t_f]
//! ```
//!
//! so a pulse of area `pi` transfers a resonant atom completely. All
//! frequencies are angular (rad/s); see [`crate::units`] for the input
//! grammar that keeps cyclic/angular conversions explicit.

mod pulse;
mod report;

pub use pulse::{
    closed_form_pulse_area, pulse_area, simulate_raman_pulse, simulate_raman_pulse_path,
    PulseParams, PulseResult,
};
pub use report::{
    readout_fidelity_report, report_to_json, scattering_ratio, timeseries_to_csv, FidelityReport,
    ScatterParams,
};

use crate::numerics::NumericsError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReadoutError {
    #[error("invalid pulse parameters: {reason}")]
    InvalidParams { reason: String },
    #[error("pulse parameter sets must differ only in detuning ({field} differs)")]
    MismatchedPulseShapes { field: &'static str },
    #[error("integrator failure: {0}")]
    Numerics(#[from] NumericsError),
}

#[cfg(test)]
mod tests;
