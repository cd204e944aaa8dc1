//! Two-level Schrödinger propagation, `i dpsi/dt = H(t) psi`, with classical
//! RK4 and step-doubling error control.
//!
//! The per-step error budget is proportional to `h / (t1 - t0)` so the
//! accumulated error over the whole interval stays at the requested
//! tolerance; that is what keeps the norm drift per simulated pulse at the
//! `1e-10` level.

use num_complex::Complex64;

use super::{NumericsError, Tolerances};

pub type TwoLevelState = [Complex64; 2];
pub type TwoLevelHamiltonian = [[Complex64; 2]; 2];

const HERMITICITY_TOL: f64 = 1e-12;

fn norm(state: &TwoLevelState) -> f64 {
    (state[0].norm_sqr() + state[1].norm_sqr()).sqrt()
}

fn check_hermitian(h: &TwoLevelHamiltonian, t: f64) -> Result<(), NumericsError> {
    let scale = h
        .iter()
        .flatten()
        .map(|c| c.norm())
        .fold(0.0f64, f64::max)
        .max(1.0);
    let asymmetry = (h[0][1] - h[1][0].conj())
        .norm()
        .max(h[0][0].im.abs())
        .max(h[1][1].im.abs());
    if asymmetry > HERMITICITY_TOL * scale {
        return Err(NumericsError::NonHermitian { t, asymmetry });
    }
    Ok(())
}

fn rhs(h: &TwoLevelHamiltonian, y: &TwoLevelState) -> TwoLevelState {
    let minus_i = Complex64::new(0.0, -1.0);
    [
        minus_i * (h[0][0] * y[0] + h[0][1] * y[1]),
        minus_i * (h[1][0] * y[0] + h[1][1] * y[1]),
    ]
}

fn rk4_step<H>(hamiltonian: &H, t: f64, h: f64, y: &TwoLevelState) -> TwoLevelState
where
    H: Fn(f64) -> TwoLevelHamiltonian,
{
    let add = |a: &TwoLevelState, b: &TwoLevelState, s: f64| -> TwoLevelState {
        [a[0] + b[0] * s, a[1] + b[1] * s]
    };
    let h1 = hamiltonian(t);
    let k1 = rhs(&h1, y);
    let hm = hamiltonian(t + 0.5 * h);
    let k2 = rhs(&hm, &add(y, &k1, 0.5 * h));
    let k3 = rhs(&hm, &add(y, &k2, 0.5 * h));
    let h2 = hamiltonian(t + h);
    let k4 = rhs(&h2, &add(y, &k3, h));
    [
        y[0] + (k1[0] + (k2[0] + k3[0]) * 2.0 + k4[0]) * (h / 6.0),
        y[1] + (k1[1] + (k2[1] + k3[1]) * 2.0 + k4[1]) * (h / 6.0),
    ]
}

/// Propagate `state0` from `t0` to `t1` under the hermitian `hamiltonian`.
pub fn evolve_two_level<H>(
    hamiltonian: H,
    state0: TwoLevelState,
    t0: f64,
    t1: f64,
    tol: &Tolerances,
) -> Result<TwoLevelState, NumericsError>
where
    H: Fn(f64) -> TwoLevelHamiltonian,
{
    tol.validate()?;
    let n0 = norm(&state0);
    if (n0 - 1.0).abs() > 1e-9 {
        return Err(NumericsError::NotNormalized { norm: n0 });
    }
    if t0 == t1 {
        return Ok(state0);
    }

    let total = t1 - t0;
    let mut t = t0;
    let mut y = state0;
    let mut h = total / 64.0;
    let h_min = total.abs() * 1e-15;

    loop {
        let remaining = t1 - t;
        if remaining == 0.0 {
            return Ok(y);
        }
        if h.abs() > remaining.abs() {
            h = remaining;
        }
        check_hermitian(&hamiltonian(t), t)?;

        let big = rk4_step(&hamiltonian, t, h, &y);
        let half = rk4_step(&hamiltonian, t, 0.5 * h, &y);
        let fine = rk4_step(&hamiltonian, t + 0.5 * h, 0.5 * h, &half);
        let err = ((big[0] - fine[0]).norm_sqr() + (big[1] - fine[1]).norm_sqr()).sqrt() / 15.0;

        // error-per-unit-step keeps the accumulated error at tol overall
        let budget =
            (tol.abs_tol + tol.rel_tol * norm(&y)) * (h / total).abs().max(f64::MIN_POSITIVE);
        if err <= budget {
            // local extrapolation of the two half steps
            y = [
                fine[0] + (fine[0] - big[0]) / 15.0,
                fine[1] + (fine[1] - big[1]) / 15.0,
            ];
            t += h;
            if t == t1 || (t1 - t).abs() <= h_min {
                return Ok(y);
            }
        }
        let factor = if err > 0.0 {
            0.9 * (budget / err).powf(0.2)
        } else {
            5.0
        };
        h *= factor.clamp(0.2, 5.0);
        if h.abs() < h_min {
            return Err(NumericsError::StepUnderflow { t });
        }
    }
}

/// Like [`evolve_two_level`] but records the state at `n_samples + 1`
/// uniformly spaced times (including both endpoints).
pub fn evolve_two_level_path<H>(
    hamiltonian: H,
    state0: TwoLevelState,
    t0: f64,
    t1: f64,
    n_samples: usize,
    tol: &Tolerances,
) -> Result<Vec<(f64, TwoLevelState)>, NumericsError>
where
    H: Fn(f64) -> TwoLevelHamiltonian,
{
    let n = n_samples.max(1);
    let mut out = Vec::with_capacity(n + 1);
    out.push((t0, state0));
    let mut y = state0;
    for i in 1..=n {
        let ta = t0 + (t1 - t0) * (i - 1) as f64 / n as f64;
        let tb = t0 + (t1 - t0) * i as f64 / n as f64;
        y = evolve_two_level(&hamiltonian, y, ta, tb, tol)?;
        out.push((tb, y));
    }
    Ok(out)
}
