//! Detection-stage estimate and the combined fidelity report.

use num_complex::Complex64;

use super::pulse::{simulate_raman_pulse, PulseParams};
use super::ReadoutError;
use crate::jsonout::{write_f64, Json};

/// Fluorescence-stage parameters: excited-state decay rate and the
/// effective detuning seen by paired atoms on the cycling transition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterParams {
    gamma: f64,
    delta_eff: f64,
}

impl ScatterParams {
    pub fn new(gamma: f64, delta_eff: f64) -> Result<Self, ReadoutError> {
        if !(gamma > 0.0) || !(delta_eff > 0.0) || !gamma.is_finite() || !delta_eff.is_finite() {
            return Err(ReadoutError::InvalidParams {
                reason: format!("need gamma > 0 and delta_eff > 0, got ({gamma}, {delta_eff})"),
            });
        }
        Ok(ScatterParams { gamma, delta_eff })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn delta_eff(&self) -> f64 {
        self.delta_eff
    }
}

/// Ratio of photons scattered by a paired atom to an unpaired one on the
/// cycling transition: `(Gamma / 2 delta)^2`.
pub fn scattering_ratio(s: &ScatterParams) -> f64 {
    let r = s.gamma() / (2.0 * s.delta_eff());
    r * r
}

/// Laser-geometry context carried with the report: beam waist and minimum
/// vortex spacing (micrometers). These constrain individual addressing of
/// the qubits but are not part of the two-level dynamics.
pub const BEAM_WAIST_UM: f64 = 1.5;
pub const MIN_VORTEX_SPACING_UM: f64 = 10.0;

/// Discrimination levels above this mark the read-out as usable.
const DISCRIMINATING_THRESHOLD: f64 = 100.0;

#[derive(Debug, Clone, PartialEq)]
pub struct FidelityReport {
    pub pulse_resonant: PulseParams,
    pub pulse_paired: PulseParams,
    pub scatter: ScatterParams,
    /// Transfer probability for the unpaired (resonant) atom.
    pub p_signal: f64,
    /// Spurious transfer probability for paired atoms over the stated window.
    pub p_false: f64,
    /// Same with the window stretched until the Gaussian has fully decayed,
    /// separating truncation effects from the detuning suppression itself.
    pub p_false_untruncated: f64,
    pub scatter_ratio: f64,
    /// `p_signal / max(p_false, scatter_ratio)`.
    pub discrimination: f64,
    pub discriminating: bool,
    pub pulse_area: f64,
    pub warnings: Vec<String>,
}

/// Run both pulses and combine with the scattering estimate.
///
/// The two parameter sets must describe the same pulse envelope and differ
/// only in detuning.
pub fn readout_fidelity_report(
    p_resonant: &PulseParams,
    p_paired: &PulseParams,
    s: &ScatterParams,
) -> Result<FidelityReport, ReadoutError> {
    p_resonant.same_envelope(p_paired)?;

    let resonant = simulate_raman_pulse(p_resonant)?;
    let paired = simulate_raman_pulse(p_paired)?;
    let untruncated = simulate_raman_pulse(&p_paired.with_window_factor(2.0)?)?;

    let scatter_ratio = scattering_ratio(s);
    let discrimination = resonant.p_transfer / paired.p_transfer.max(scatter_ratio);

    let mut warnings = p_resonant.warnings();
    warnings.extend(p_paired.warnings());
    warnings.dedup();

    Ok(FidelityReport {
        pulse_resonant: *p_resonant,
        pulse_paired: *p_paired,
        scatter: *s,
        p_signal: resonant.p_transfer,
        p_false: paired.p_transfer,
        p_false_untruncated: untruncated.p_transfer,
        scatter_ratio,
        discrimination,
        discriminating: discrimination >= DISCRIMINATING_THRESHOLD,
        pulse_area: resonant.pulse_area,
        warnings,
    })
}

fn pulse_json(p: &PulseParams) -> Json {
    let mut obj = Json::obj();
    obj.push("bandwidth", Json::Num(p.bandwidth()))
        .push("peak_rabi", Json::Num(p.peak_rabi()))
        .push("half_duration", Json::Num(p.half_duration()))
        .push("detuning", Json::Num(p.detuning()));
    obj
}

pub fn report_to_json(report: &FidelityReport) -> String {
    let mut scatter = Json::obj();
    scatter
        .push("gamma", Json::Num(report.scatter.gamma()))
        .push("delta_eff", Json::Num(report.scatter.delta_eff()));

    let mut geometry = Json::obj();
    geometry
        .push("beam_waist_um", Json::Num(BEAM_WAIST_UM))
        .push("min_vortex_spacing_um", Json::Num(MIN_VORTEX_SPACING_UM));

    let mut doc = Json::obj();
    doc.push("pulse_resonant", pulse_json(&report.pulse_resonant))
        .push("pulse_paired", pulse_json(&report.pulse_paired))
        .push("scatter", scatter)
        .push("p_signal", Json::Num(report.p_signal))
        .push("p_false", Json::Num(report.p_false))
        .push("p_false_untruncated", Json::Num(report.p_false_untruncated))
        .push("scatter_ratio", Json::Num(report.scatter_ratio))
        .push("discrimination", Json::Num(report.discrimination))
        .push("discriminating", Json::Bool(report.discriminating))
        .push("pulse_area", Json::Num(report.pulse_area))
        .push("laser_geometry", geometry)
        .push(
            "warnings",
            Json::Arr(
                report
                    .warnings
                    .iter()
                    .map(|w| Json::Str(w.clone()))
                    .collect(),
            ),
        );
    doc.render()
}

/// `t,re_c0,im_c0,re_c1,im_c1` rows for plotting Rabi dynamics.
pub fn timeseries_to_csv(path: &[(f64, [Complex64; 2])]) -> String {
    let mut out = String::with_capacity(path.len() * 110 + 32);
    out.push_str("t,re_c0,im_c0,re_c1,im_c1\n");
    for (t, state) in path {
        for (i, x) in [*t, state[0].re, state[0].im, state[1].re, state[1].im]
            .into_iter()
            .enumerate()
        {
            if i > 0 {
                out.push(',');
            }
            write_f64(&mut out, x);
        }
        out.push('\n');
    }
    out
}
