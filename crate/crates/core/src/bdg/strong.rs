//! Strong-pairing phase: the log-derivative mismatch that never vanishes.
//!
//! For `mu < 0` both radial equations are modified Bessel equations. The
//! regular interior solution is `I0(k_in' rho)` and the bounded exterior one
//! is `K0(kappa' rho)` (times the gap envelope), with
//! `kappa' = sqrt(2 m |mu| + (Delta0/v_F)^2)`. Matching value and slope and
//! dividing leaves a single log-derivative equation; its residual is a sum
//! of strictly positive terms, so it has no root and no zero mode exists.

use super::params::PhysicalParams;
use super::BdgError;
use crate::specfun;

/// Scan summary over a strong-pairing `mu` range.
#[derive(Debug, Clone, PartialEq)]
pub struct MismatchReport {
    /// `(mu, residual)` rows in scan order.
    pub scan_points: Vec<(f64, f64)>,
    /// Strict sign alternations between consecutive residuals.
    pub sign_changes: usize,
    /// `kappa' = sqrt(2 m |mu| + (Delta0/v_F)^2)` at the lower range end.
    pub kappa_prime: f64,
    /// Smallest `|residual|` in the scan; bounded away from zero when no
    /// sign change occurs.
    pub min_abs_residual: f64,
}

/// Log-derivative mismatch at the core edge for `mu < 0`:
///
/// ```text
/// residual = d/drho ln I0(k_in' rho) - d/drho ln [K0(kappa' rho) e^{-r rho}]
///          = k_in' I1/I0 + kappa' K1/K0 + r        (at rho = xi)
/// ```
///
/// Every term is positive for positive arguments, which is the quantitative
/// form of the absence of a strong-pairing zero mode. The gap envelope
/// `e^{-r rho}` follows the same exterior construction as the weak phase;
/// see [`strong_pairing_residual_bare`] for the variant without it.
pub fn strong_pairing_residual(params: &PhysicalParams) -> Result<f64, BdgError> {
    let (interior, exterior_bare) = log_derivative_parts(params)?;
    Ok(interior + exterior_bare + params.gap_decay_rate())
}

/// Mismatch with the exterior taken as bare `K0(kappa' rho)` (no gap
/// envelope). Also strictly positive; comparing both variants shows the
/// non-existence conclusion does not hinge on the envelope convention.
pub fn strong_pairing_residual_bare(params: &PhysicalParams) -> Result<f64, BdgError> {
    let (interior, exterior_bare) = log_derivative_parts(params)?;
    Ok(interior + exterior_bare)
}

/// `(k_in' I1/I0 at xi, kappa' K1/K0 at xi)`, via scaled Bessel ratios so
/// large arguments stay representable.
fn log_derivative_parts(params: &PhysicalParams) -> Result<(f64, f64), BdgError> {
    if !(params.mu() < 0.0) {
        return Err(BdgError::WrongPhase {
            required: "mu < 0 (strong pairing)",
            mu: params.mu(),
        });
    }
    let xi = params.xi();
    let k_in = (2.0 * params.mass() * params.mu().abs()).sqrt();
    let kp = kappa_prime(params);

    let zi = k_in * xi;
    let interior = if zi < 1e-12 {
        // I1/I0 ~ z/2 for small argument
        k_in * 0.5 * zi
    } else {
        let i0 = specfun::bessel_i0_scaled(zi)?.value;
        let i1 = specfun::bessel_i1_scaled(zi)?.value;
        k_in * i1 / i0
    };

    let zo = kp * xi;
    let k0 = specfun::bessel_k0_scaled(zo)?.value;
    let k1 = specfun::bessel_k1_scaled(zo)?.value;
    let exterior = kp * k1 / k0;
    Ok((interior, exterior))
}

pub(super) fn kappa_prime(params: &PhysicalParams) -> f64 {
    let r = params.gap_decay_rate();
    (2.0 * params.mass() * params.mu().abs() + r * r).sqrt()
}

/// Evaluate the mismatch across `mu in [mu_lo, mu_hi]` (both negative).
///
/// A zero-width range produces a single scan point. `n_points` counts the
/// requested samples; duplicates collapse for the degenerate range.
pub fn scan_strong_pairing(
    params_template: &PhysicalParams,
    mu_lo: f64,
    mu_hi: f64,
    n_points: usize,
) -> Result<MismatchReport, BdgError> {
    if !mu_lo.is_finite() || !mu_hi.is_finite() || mu_lo > mu_hi {
        return Err(BdgError::InvalidScanRange {
            lo: mu_lo,
            hi: mu_hi,
            n_points,
            reason: "range must be finite with lo <= hi",
        });
    }
    if mu_hi >= 0.0 {
        return Err(BdgError::InvalidScanRange {
            lo: mu_lo,
            hi: mu_hi,
            n_points,
            reason: "range must lie strictly below zero",
        });
    }
    if n_points == 0 {
        return Err(BdgError::InvalidScanRange {
            lo: mu_lo,
            hi: mu_hi,
            n_points,
            reason: "need at least one point",
        });
    }

    let mus: Vec<f64> = if mu_lo == mu_hi || n_points == 1 {
        vec![mu_lo]
    } else {
        (0..n_points)
            .map(|i| mu_lo + (mu_hi - mu_lo) * i as f64 / (n_points - 1) as f64)
            .collect()
    };

    let mut scan_points = Vec::with_capacity(mus.len());
    for mu in mus {
        let p = params_template.with_mu(mu)?;
        let residual = strong_pairing_residual(&p)?;
        scan_points.push((mu, residual));
    }

    let sign_changes = scan_points
        .windows(2)
        .filter(|w| w[0].1 * w[1].1 < 0.0)
        .count();
    let min_abs_residual = scan_points
        .iter()
        .map(|&(_, r)| r.abs())
        .fold(f64::INFINITY, f64::min);
    let kappa_prime = kappa_prime(&params_template.with_mu(mu_lo)?);

    Ok(MismatchReport {
        scan_points,
        sign_changes,
        kappa_prime,
        min_abs_residual,
    })
}
