//! Weak-pairing zero-mode construction: match, normalize, sample.

use super::params::{GridSpec, PhysicalParams};
use super::profile::{interior_wavenumber, ExteriorBranch, ZeroModeProfile};
use super::BdgError;
use crate::numerics::{integrate, Tolerances};
use crate::specfun;

/// Largest dimensionless exponent the envelope bookkeeping is allowed to
/// reach; beyond this the `e^{r xi}`-referenced constants leave f64 range.
const MAX_EXPONENT: f64 = 200.0;

/// Solve the zero-energy bound state for `mu > 0`.
///
/// Interior amplitude starts at 1 and the final profile is rescaled to unit
/// norm, so the seed value cannot matter (see
/// [`weak_zero_mode_with_amplitude`] for the invariance knob).
pub fn weak_zero_mode(
    params: &PhysicalParams,
    grid: &GridSpec,
) -> Result<ZeroModeProfile, BdgError> {
    weak_zero_mode_with_amplitude(params, grid, 1.0)
}

/// Same as [`weak_zero_mode`] with an explicit pre-normalization interior
/// amplitude; the returned profile is independent of `initial_amplitude`
/// (normalization invariance), which tests exercise directly.
pub fn weak_zero_mode_with_amplitude(
    params: &PhysicalParams,
    grid: &GridSpec,
    initial_amplitude: f64,
) -> Result<ZeroModeProfile, BdgError> {
    if !(params.mu() > 0.0) {
        return Err(BdgError::WrongPhase {
            required: "mu > 0 (weak pairing)",
            mu: params.mu(),
        });
    }
    if !(initial_amplitude != 0.0 && initial_amplitude.is_finite()) {
        return Err(BdgError::InvalidParams {
            reason: format!("initial amplitude must be finite and nonzero, got {initial_amplitude}"),
        });
    }

    let xi = params.xi();
    let r = params.gap_decay_rate();
    if r * xi > MAX_EXPONENT {
        return Err(BdgError::UnrepresentableRegime {
            reason: format!("Delta0 xi / v_F = {} exceeds {MAX_EXPONENT}", r * xi),
        });
    }

    let branch = classify_branch(params)?;
    let k_in = interior_wavenumber(params);

    // interior value and slope at the core edge
    let chi_in = initial_amplitude * specfun::bessel_j0(k_in * xi)?.value;
    let dchi_in = -initial_amplitude * k_in * specfun::bessel_j1(k_in * xi)?.value;

    // branch basis and radial derivative at xi, in the e^{-r(rho-xi)} scaling
    let (f, df, g, dg) = basis_at_core_edge(branch, params)?;

    let det = f * dg - g * df;
    if det.abs() < 1e-14 {
        return Err(BdgError::DegenerateMatching { det });
    }
    let beta = (chi_in * dg - g * dchi_in) / det;
    let gamma = (f * dchi_in - chi_in * df) / det;

    let mut profile = ZeroModeProfile {
        params: *params,
        grid: *grid,
        branch,
        a: initial_amplitude,
        beta,
        gamma,
        samples: Vec::new(),
        norm: f64::NAN,
        decay_rate: f64::NAN,
    };

    // normalize: 2 pi int rho (|u|^2+|v|^2) = 4 pi int rho chi^2 = 1
    let total = norm_integral(&profile)?;
    if !(total > 0.0) || !total.is_finite() {
        return Err(BdgError::UnrepresentableRegime {
            reason: format!("norm integral evaluated to {total}"),
        });
    }
    let scale = 1.0 / total.sqrt();
    profile.a *= scale;
    profile.beta *= scale;
    profile.gamma *= scale;

    profile.norm = norm_integral(&profile)?;
    profile.decay_rate = profile.fit_decay_rate();
    profile.samples = profile.make_samples();
    Ok(profile)
}

/// Choose the exterior family from the sign of `kappa^2`, with a relative
/// dead band around zero (the marginal basis is the limit of both families).
fn classify_branch(params: &PhysicalParams) -> Result<ExteriorBranch, BdgError> {
    let k2 = params.kappa_squared();
    let r = params.gap_decay_rate();
    let scale = 2.0 * params.mass() * params.mu() + r * r;
    // J0/Y0 and K0 reject arguments below 1e-8, so the wavenumber must keep
    // kappa * xi clear of that cutoff as well
    let dead_band = (1e-15 * scale).max((1e-7 / params.xi()).powi(2));
    let branch = if k2 > dead_band {
        ExteriorBranch::Oscillatory { kappa: k2.sqrt() }
    } else if k2 < -dead_band {
        ExteriorBranch::Evanescent {
            kappa_tilde: (-k2).sqrt(),
        }
    } else {
        ExteriorBranch::Marginal
    };
    if let ExteriorBranch::Evanescent { kappa_tilde } = branch {
        if kappa_tilde * params.xi() > MAX_EXPONENT {
            return Err(BdgError::UnrepresentableRegime {
                reason: format!("kappa_tilde xi = {} exceeds {MAX_EXPONENT}", kappa_tilde * params.xi()),
            });
        }
    }
    Ok(branch)
}

/// `(F, F', G, G')` at `rho = xi` for the exterior functions
/// `F(rho) e^{-r(rho-xi)}`, `G(rho) e^{-r(rho-xi)}`.
fn basis_at_core_edge(
    branch: ExteriorBranch,
    params: &PhysicalParams,
) -> Result<(f64, f64, f64, f64), BdgError> {
    let xi = params.xi();
    let r = params.gap_decay_rate();
    match branch {
        ExteriorBranch::Oscillatory { kappa } => {
            let z = kappa * xi;
            let j0 = specfun::bessel_j0(z)?.value;
            let j1 = specfun::bessel_j1(z)?.value;
            let y0 = specfun::bessel_y0(z)?.value;
            let y1 = specfun::bessel_y1(z)?.value;
            Ok((
                j0,
                -kappa * j1 - r * j0,
                y0,
                -kappa * y1 - r * y0,
            ))
        }
        ExteriorBranch::Evanescent { kappa_tilde } => {
            let z = kappa_tilde * xi;
            let i0 = specfun::bessel_i0(z)?.value;
            let i1 = specfun::bessel_i1(z)?.value;
            let k0 = specfun::bessel_k0(z)?.value;
            let k1 = specfun::bessel_k1(z)?.value;
            Ok((
                i0,
                kappa_tilde * i1 - r * i0,
                k0,
                -kappa_tilde * k1 - r * k0,
            ))
        }
        ExteriorBranch::Marginal => Ok((1.0, -r, 0.0, 1.0 / xi)),
    }
}

/// `4 pi int_0^inf rho chi(rho)^2 drho`, split at the core edge.
fn norm_integral(profile: &ZeroModeProfile) -> Result<f64, BdgError> {
    let params = profile.params;
    let xi = params.xi();
    let tol = Tolerances::default();
    let k_in = interior_wavenumber(&params);
    let a = profile.a;
    let inner = integrate(
        |rho| {
            let j = specfun::bessel_j0(k_in * rho).map_or(f64::NAN, |v| v.value);
            let chi = a * j;
            rho * chi * chi
        },
        0.0,
        xi,
        &tol,
    )?;
    let outer = integrate(
        |rho| {
            let chi = profile.chi_exterior(rho);
            rho * chi * chi
        },
        xi,
        f64::INFINITY,
        &tol,
    )?;
    Ok(4.0 * std::f64::consts::PI * (inner + outer))
}
