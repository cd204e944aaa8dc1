use super::*;
use crate::units::{angular_from_khz, angular_from_mhz};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The reference pulse in natural units (bandwidth = 1): peak Rabi 1.77,
/// window half-width 5, chosen so the area is a pi pulse.
fn reference_pulse(detuning: f64) -> PulseParams {
    PulseParams::new(1.0, 1.77, 5.0, detuning).unwrap()
}

#[test]
fn resonant_pulse_transfers_completely() {
    let result = simulate_raman_pulse(&reference_pulse(0.0)).unwrap();
    assert!(
        result.p_transfer >= 0.999,
        "resonant transfer {}",
        result.p_transfer
    );
    let norm = (result.final_state[0].norm_sqr() + result.final_state[1].norm_sqr()).sqrt();
    assert!((norm - 1.0).abs() < 1e-9, "norm drift {}", (norm - 1.0).abs());
    // resonant transfer equals sin^2(area/2) for a real envelope
    let expected = (0.5 * result.pulse_area).sin().powi(2);
    assert!((result.p_transfer - expected).abs() < 1e-7);
}

#[test]
fn paired_atom_transfer_is_strongly_suppressed() {
    // detuning = 4 bandwidths (two gap quanta with bandwidth = gap/2)
    let result = simulate_raman_pulse(&reference_pulse(4.0)).unwrap();
    // quoted to one significant figure as ~6e-6; enforce a factor of two
    assert!(
        result.p_transfer >= 3e-6 && result.p_transfer <= 1.2e-5,
        "paired transfer {}",
        result.p_transfer
    );
}

#[test]
fn pulse_area_is_a_pi_pulse() {
    let area = pulse_area(&reference_pulse(0.0)).unwrap();
    let closed = closed_form_pulse_area(&reference_pulse(0.0));
    assert!((area - closed).abs() < 1e-9 * closed.max(1.0));
    // 1.77 sqrt(pi) erf(5) = 3.1372..., within half a percent of pi
    assert!((area - 3.137243316).abs() < 1e-6);
    assert!((area - std::f64::consts::PI).abs() / std::f64::consts::PI < 5e-3);
}

#[test]
fn zero_drive_does_nothing() {
    let p = PulseParams::new(1.0, 0.0, 5.0, 0.0).unwrap();
    let result = simulate_raman_pulse(&p).unwrap();
    assert_eq!(result.p_transfer, 0.0);
    assert!(result.pulse_area.abs() < 1e-15);
}

#[test]
fn area_scales_linearly_and_vanishes_with_window() {
    let base = reference_pulse(0.0);
    let doubled = PulseParams::new(1.0, 2.0 * 1.77, 5.0, 0.0).unwrap();
    let a1 = pulse_area(&base).unwrap();
    let a2 = pulse_area(&doubled).unwrap();
    assert!((a2 - 2.0 * a1).abs() < 1e-9 * a2);
    let short = PulseParams::new(1.0, 1.77, 1e-9, 0.0).unwrap();
    assert!(pulse_area(&short).unwrap() < 1e-8);
}

#[test]
fn quadrature_and_closed_form_agree_across_random_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..25 {
        let bandwidth = 10f64.powf(rng.random_range(-2.0..4.0));
        let peak = rng.random_range(0.0..5.0) * bandwidth;
        let window = rng.random_range(0.3..8.0) / bandwidth;
        let p = PulseParams::new(bandwidth, peak, window, 0.0).unwrap();
        let quad = pulse_area(&p).unwrap();
        let closed = closed_form_pulse_area(&p);
        assert!(
            (quad - closed).abs() <= 1e-9 * closed.abs().max(1.0),
            "area mismatch {quad} vs {closed}"
        );
    }
}

#[test]
fn detuning_symmetry() {
    for detuning in [0.7, 2.0, 4.0] {
        let plus = simulate_raman_pulse(&reference_pulse(detuning)).unwrap();
        let minus = simulate_raman_pulse(&reference_pulse(-detuning)).unwrap();
        assert!(
            (plus.p_transfer - minus.p_transfer).abs() < 1e-9,
            "asymmetry at detuning {detuning}"
        );
    }
}

#[test]
fn monotone_suppression_with_detuning() {
    let p4 = simulate_raman_pulse(&reference_pulse(4.0)).unwrap().p_transfer;
    let p8 = simulate_raman_pulse(&reference_pulse(8.0)).unwrap().p_transfer;
    let p16 = simulate_raman_pulse(&reference_pulse(16.0))
        .unwrap()
        .p_transfer;
    assert!(p8 <= p4 + 1e-8);
    assert!(p16 <= p8 + 1e-8);
}

#[test]
fn scattering_ratio_values() {
    let s = ScatterParams::new(angular_from_mhz(1.2), angular_from_mhz(170.0)).unwrap();
    let ratio = scattering_ratio(&s);
    // exact arithmetic: (1.2 / 340)^2 (the 2 pi factors cancel)
    let exact = (1.2f64 / 340.0) * (1.2 / 340.0);
    assert!((ratio - exact).abs() < 1e-12 * exact);
    // 1.2e-5 to two significant figures
    assert!((ratio / 1e-5 * 10.0).round() / 10.0 == 1.2);

    let unity = ScatterParams::new(2.0, 1.0).unwrap();
    assert_eq!(scattering_ratio(&unity), 1.0);

    let s1 = ScatterParams::new(1.0, 50.0).unwrap();
    let s2 = ScatterParams::new(3.0, 50.0).unwrap();
    assert!((scattering_ratio(&s2) - 9.0 * scattering_ratio(&s1)).abs() < 1e-18);
}

#[test]
fn fidelity_report_with_reference_parameters() {
    // gap 2 pi x 11 kHz, bandwidth half the gap, peak Rabi 1.77 bandwidths,
    // window 5 inverse bandwidths, paired detuning = twice the gap
    let gap = angular_from_khz(11.0);
    let bandwidth = 0.5 * gap;
    let resonant = PulseParams::new(bandwidth, 1.77 * bandwidth, 5.0 / bandwidth, 0.0).unwrap();
    let paired = resonant.with_detuning(2.0 * gap).unwrap();
    let scatter = ScatterParams::new(angular_from_mhz(1.2), angular_from_mhz(170.0)).unwrap();

    let report = readout_fidelity_report(&resonant, &paired, &scatter).unwrap();
    assert!(report.p_signal >= 0.999);
    assert!(report.p_false >= 3e-6 && report.p_false <= 1.2e-5);
    assert!(report.discrimination >= 1e4, "{}", report.discrimination);
    assert!(report.discriminating);
    // truncation at 5 inverse bandwidths is already converged
    assert!((report.p_false - report.p_false_untruncated).abs() < 1e-9);
    assert!(report.warnings.is_empty());

    let json = report_to_json(&report);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["discriminating"], serde_json::json!(true));
    assert!(parsed["p_false"].as_f64().unwrap() > 0.0);
    assert_eq!(
        parsed["laser_geometry"]["beam_waist_um"].as_f64().unwrap(),
        1.5
    );
}

#[test]
fn zero_drive_report_is_non_discriminating() {
    let resonant = PulseParams::new(1.0, 0.0, 5.0, 0.0).unwrap();
    let paired = resonant.with_detuning(4.0).unwrap();
    let scatter = ScatterParams::new(1.0, 100.0).unwrap();
    let report = readout_fidelity_report(&resonant, &paired, &scatter).unwrap();
    assert_eq!(report.p_signal, 0.0);
    assert_eq!(report.discrimination, 0.0);
    assert!(!report.discriminating);
}

#[test]
fn indistinguishable_pulses_give_unit_discrimination() {
    let resonant = reference_pulse(0.0);
    let paired = resonant.with_detuning(0.0).unwrap();
    let scatter = ScatterParams::new(1.0, 1e6).unwrap();
    let report = readout_fidelity_report(&resonant, &paired, &scatter).unwrap();
    assert!((report.discrimination - 1.0).abs() < 1e-9);
    assert!(!report.discriminating);
}

#[test]
fn mismatched_envelopes_rejected() {
    let a = reference_pulse(0.0);
    let b = PulseParams::new(1.0, 1.77, 4.9, 4.0).unwrap();
    let s = ScatterParams::new(1.0, 100.0).unwrap();
    assert!(matches!(
        readout_fidelity_report(&a, &b, &s),
        Err(ReadoutError::MismatchedPulseShapes {
            field: "half_duration"
        })
    ));
}

#[test]
fn short_window_warns() {
    let p = PulseParams::new(1.0, 1.0, 0.5, 0.0).unwrap();
    assert_eq!(p.warnings().len(), 1);
    assert!(reference_pulse(0.0).warnings().is_empty());
}

#[test]
fn invalid_parameters_rejected() {
    assert!(PulseParams::new(0.0, 1.0, 1.0, 0.0).is_err());
    assert!(PulseParams::new(1.0, -0.1, 1.0, 0.0).is_err());
    assert!(PulseParams::new(1.0, 1.0, 0.0, 0.0).is_err());
    assert!(PulseParams::new(1.0, 1.0, 1.0, f64::NAN).is_err());
    assert!(ScatterParams::new(0.0, 1.0).is_err());
    assert!(ScatterParams::new(1.0, -2.0).is_err());
}

#[test]
fn timeseries_csv_shape() {
    let path = simulate_raman_pulse_path(&reference_pulse(0.0), 64).unwrap();
    assert_eq!(path.len(), 65);
    let csv = timeseries_to_csv(&path);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "t,re_c0,im_c0,re_c1,im_c1");
    assert_eq!(lines.count(), 65);
    // norm stays 1 along the whole trajectory
    for (_, state) in &path {
        let norm = (state[0].norm_sqr() + state[1].norm_sqr()).sqrt();
        assert!((norm - 1.0).abs() < 1e-9);
    }
}

#[test]
fn si_units_reproduce_natural_units() {
    // the same physics expressed in rad/s must give the same probabilities
    let natural = simulate_raman_pulse(&reference_pulse(4.0)).unwrap();
    let w0 = angular_from_khz(5.5);
    let si = PulseParams::new(w0, 1.77 * w0, 5.0 / w0, 4.0 * w0).unwrap();
    let si_result = simulate_raman_pulse(&si).unwrap();
    assert!(
        (natural.p_transfer - si_result.p_transfer).abs() < 1e-8,
        "{} vs {}",
        natural.p_transfer,
        si_result.p_transfer
    );
}
