//! Adaptive Simpson quadrature with interval-halving error control.
//!
//! Semi-infinite integrals map the tail through `x = a + s/(1-s)` and
//! integrate `f(x(s))/(1-s)^2` over `s in [0, 1]`; the caller asserts the
//! integrand decays at least exponentially, which makes the mapped integrand
//! vanish at `s = 1`.

use super::{NumericsError, Tolerances};

/// Integrate `f` over `[a, b]`; `b` may be `f64::INFINITY`.
///
/// Returns `Q` with `|Q - integral| <= abs_tol + rel_tol * |Q|`, the error
/// estimated by interval-halving agreement.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: &Tolerances) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    tol.validate()?;
    if !a.is_finite() || b.is_nan() || b == f64::NEG_INFINITY {
        return Err(NumericsError::InvalidInterval { a, b });
    }
    if b.is_infinite() {
        let mapped = |s: f64| {
            if s >= 1.0 {
                0.0
            } else {
                let u = 1.0 - s;
                f(a + s / u) / (u * u)
            }
        };
        return integrate_finite(&mapped, 0.0, 1.0, tol);
    }
    integrate_finite(&f, a, b, tol)
}

fn integrate_finite<F>(f: &F, a: f64, b: f64, tol: &Tolerances) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    let eval = |x: f64| -> Result<f64, NumericsError> {
        let v = f(x);
        if v.is_nan() {
            return Err(NumericsError::NanEncountered { x });
        }
        Ok(v)
    };
    let fa = eval(a)?;
    let m = 0.5 * (a + b);
    let fm = eval(m)?;
    let fb = eval(b)?;
    let whole = simpson(fa, fm, fb, b - a);
    // local absolute budget; refreshed against the running magnitude
    let budget = tol.abs_tol + tol.rel_tol * whole.abs();
    let max_depth = tol.max_iterations.min(60);
    adapt(&eval, a, b, fa, fm, fb, whole, budget, max_depth)
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<E>(
    eval: &E,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    budget: f64,
    depth: u32,
) -> Result<f64, NumericsError>
where
    E: Fn(f64) -> Result<f64, NumericsError>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = eval(lm)?;
    let frm = eval(rm)?;
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let refined = left + right;
    let disagreement = refined - whole;
    if disagreement.abs() <= 15.0 * budget || m == a || m == b {
        return Ok(refined + disagreement / 15.0);
    }
    if depth == 0 {
        return Err(NumericsError::NonConvergence {
            context: "adaptive quadrature",
        });
    }
    let half = 0.5 * budget;
    let l = adapt(eval, a, m, fa, flm, fm, left, half, depth - 1)?;
    let r = adapt(eval, m, b, fm, frm, fb, right, half, depth - 1)?;
    Ok(l + r)
}
