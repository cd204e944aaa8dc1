//! Gaussian Raman pulse dynamics on the effective two-level atom.

use num_complex::Complex64;

use super::ReadoutError;
use crate::numerics::{evolve_two_level, evolve_two_level_path, integrate, Tolerances};

/// Gaussian pulse definition. The drive is
/// `Omega(t) = peak_rabi * exp(-(bandwidth * t)^2)` over
/// `[-half_duration, +half_duration]`, detuned by `detuning` (zero for an
/// unpaired core atom, twice the pairing gap for paired atoms).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseParams {
    bandwidth: f64,
    peak_rabi: f64,
    half_duration: f64,
    detuning: f64,
}

impl PulseParams {
    pub fn new(
        bandwidth: f64,
        peak_rabi: f64,
        half_duration: f64,
        detuning: f64,
    ) -> Result<Self, ReadoutError> {
        let finite = [bandwidth, peak_rabi, half_duration, detuning]
            .iter()
            .all(|v| v.is_finite());
        if !finite || !(bandwidth > 0.0) || !(peak_rabi >= 0.0) || !(half_duration > 0.0) {
            return Err(ReadoutError::InvalidParams {
                reason: format!(
                    "need bandwidth > 0, peak_rabi >= 0, half_duration > 0, all finite \
                     (got {bandwidth}, {peak_rabi}, {half_duration}, {detuning})"
                ),
            });
        }
        Ok(PulseParams {
            bandwidth,
            peak_rabi,
            half_duration,
            detuning,
        })
    }

    /// Pulse bandwidth (the Gaussian width parameter), rad/s.
    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    /// Peak Rabi frequency, rad/s.
    pub fn peak_rabi(&self) -> f64 {
        self.peak_rabi
    }

    /// Pulse half-duration `t_f` (seconds); the pulse runs `[-t_f, t_f]`.
    pub fn half_duration(&self) -> f64 {
        self.half_duration
    }

    /// Two-photon detuning, rad/s.
    pub fn detuning(&self) -> f64 {
        self.detuning
    }

    /// Same envelope with a different detuning.
    pub fn with_detuning(&self, detuning: f64) -> Result<Self, ReadoutError> {
        Self::new(self.bandwidth, self.peak_rabi, self.half_duration, detuning)
    }

    /// Same pulse with the window stretched by `factor`; used to compare
    /// the truncated pulse against an effectively untruncated one.
    pub(super) fn with_window_factor(&self, factor: f64) -> Result<Self, ReadoutError> {
        Self::new(
            self.bandwidth,
            self.peak_rabi,
            self.half_duration * factor,
            self.detuning,
        )
    }

    /// Drive amplitude at time `t`.
    pub fn rabi_at(&self, t: f64) -> f64 {
        self.peak_rabi * (-(self.bandwidth * t).powi(2)).exp()
    }

    /// Soft usage warnings; a window much shorter than the inverse
    /// bandwidth truncates the pulse visibly.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.bandwidth * self.half_duration < 1.0 {
            out.push(format!(
                "bandwidth * half_duration = {:.3} < 1: the Gaussian is clipped hard at the window edge",
                self.bandwidth * self.half_duration
            ));
        }
        out
    }

    pub(super) fn same_envelope(&self, other: &PulseParams) -> Result<(), ReadoutError> {
        if self.bandwidth != other.bandwidth {
            return Err(ReadoutError::MismatchedPulseShapes { field: "bandwidth" });
        }
        if self.peak_rabi != other.peak_rabi {
            return Err(ReadoutError::MismatchedPulseShapes { field: "peak_rabi" });
        }
        if self.half_duration != other.half_duration {
            return Err(ReadoutError::MismatchedPulseShapes {
                field: "half_duration",
            });
        }
        Ok(())
    }
}

/// Transfer outcome of one pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseResult {
    /// `|excited amplitude|^2` at the end of the window.
    pub p_transfer: f64,
    pub final_state: [Complex64; 2],
    /// `int Omega dt` over the window, radians.
    pub pulse_area: f64,
}

fn hamiltonian(p: &PulseParams) -> impl Fn(f64) -> [[Complex64; 2]; 2] + '_ {
    move |t: f64| {
        let omega = 0.5 * p.rabi_at(t);
        let half_delta = 0.5 * p.detuning();
        [
            [Complex64::new(-half_delta, 0.0), Complex64::new(omega, 0.0)],
            [Complex64::new(omega, 0.0), Complex64::new(half_delta, 0.0)],
        ]
    }
}

/// Evolve `(1, 0)` through the pulse window.
pub fn simulate_raman_pulse(p: &PulseParams) -> Result<PulseResult, ReadoutError> {
    let tol = Tolerances::default();
    let start = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    let final_state = evolve_two_level(
        hamiltonian(p),
        start,
        -p.half_duration(),
        p.half_duration(),
        &tol,
    )?;
    Ok(PulseResult {
        p_transfer: final_state[1].norm_sqr(),
        final_state,
        pulse_area: pulse_area(p)?,
    })
}

/// The same evolution sampled at `n_samples + 1` uniform times, for
/// time-series export.
pub fn simulate_raman_pulse_path(
    p: &PulseParams,
    n_samples: usize,
) -> Result<Vec<(f64, [Complex64; 2])>, ReadoutError> {
    let tol = Tolerances::default();
    let start = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    Ok(evolve_two_level_path(
        hamiltonian(p),
        start,
        -p.half_duration(),
        p.half_duration(),
        n_samples,
        &tol,
    )?)
}

/// Pulse area by adaptive quadrature of the envelope.
pub fn pulse_area(p: &PulseParams) -> Result<f64, ReadoutError> {
    let tol = Tolerances::default();
    Ok(integrate(
        |t| p.rabi_at(t),
        -p.half_duration(),
        p.half_duration(),
        &tol,
    )?)
}

/// Closed form of the same area,
/// `(peak_rabi sqrt(pi) / bandwidth) * erf(bandwidth * t_f)`; the quadrature
/// route is cross-checked against this in tests.
pub fn closed_form_pulse_area(p: &PulseParams) -> f64 {
    p.peak_rabi() * std::f64::consts::PI.sqrt() / p.bandwidth()
        * crate::numerics::erf(p.bandwidth() * p.half_duration())
}
