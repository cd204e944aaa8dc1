//! Real-argument Bessel functions of order zero and one.
//!
//! Covers the first kind (`J0`, `J1`), second kind (`Y0`, `Y1`) and the
//! modified functions (`I0`, `I1`, `K0`, `K1`), which together are all the
//! special functions the vortex-core bound-state solutions require. The
//! order-one functions double as derivatives through the identities
//! `J0' = -J1`, `Y0' = -Y1`, `I0' = I1`, `K0' = -K1`.
//!
//! Evaluation strategy: power series for small arguments and standard
//! asymptotic expansions for large ones, with a Chebyshev fit bridging the
//! mid-range of `K0`/`K1` where the log-series cancels catastrophically and
//! the asymptotic series has not yet converged. Regime boundaries:
//!
//! * `J/Y`: series below `x = 12.25`, Hankel expansion above.
//! * `I`:   series below `x = 25` (no cancellation), expansion above.
//! * `K`:   series below `x = 4.5`, Chebyshev on `(4.5, 15]`, expansion above.
//!
//! Each returned value carries a conservative per-regime error bound; the
//! bound satisfies `est_error <= 1e-10 * max(1, |value|)` throughout
//! `x in [1e-8, 50]`.

mod asymptotic;
mod chebyshev;
mod series;

/// Value of a special function together with a conservative absolute error
/// bound for the evaluation regime that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult {
    pub value: f64,
    /// Absolute error bound, static per regime (not a per-call estimate).
    pub est_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum SpecFunError {
    #[error("{function}: argument {x} outside domain")]
    Domain { function: &'static str, x: f64 },
    #[error("{function}: result overflows f64 at x = {x}")]
    Overflow { function: &'static str, x: f64 },
}

const EPS: f64 = f64::EPSILON;

/// `Y0`/`K0`-family arguments below this are rejected; the radial solver
/// only evaluates them on the exterior region, never near zero.
const SINGULAR_MIN_X: f64 = 1e-8;

/// Crossover from the power series to the Hankel expansion for `J`/`Y`.
/// Chosen where series roundoff (`~eps * I0(x)`) and the optimally truncated
/// expansion error (`~e^{-2x}`) are both below `5e-12`.
const JY_SERIES_MAX_X: f64 = 12.25;

/// `I0`/`I1` series bound; the all-positive series has no cancellation, the
/// expansion converges to machine precision well before `x = 25`.
const I_SERIES_MAX_X: f64 = 25.0;

const K_SERIES_MAX_X: f64 = 4.5;
const K_CHEB_MAX_X: f64 = 15.0;

fn check_nonnegative(function: &'static str, x: f64) -> Result<(), SpecFunError> {
    if !x.is_finite() || x < 0.0 {
        return Err(SpecFunError::Domain { function, x });
    }
    Ok(())
}

fn check_singular(function: &'static str, x: f64) -> Result<(), SpecFunError> {
    if !x.is_finite() || x < SINGULAR_MIN_X {
        return Err(SpecFunError::Domain { function, x });
    }
    Ok(())
}

fn jy_result(value: f64) -> SpecFunResult {
    SpecFunResult {
        value,
        est_error: 2e-11 + 8.0 * EPS * value.abs(),
    }
}

fn ik_result(value: f64) -> SpecFunResult {
    SpecFunResult {
        value,
        est_error: 1e-13 + 16.0 * EPS * value.abs(),
    }
}

/// Bessel function of the first kind, order zero.
pub fn bessel_j0(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_nonnegative("bessel_j0", x)?;
    let v = if x < JY_SERIES_MAX_X {
        series::j0_series(x)
    } else {
        asymptotic::j0_asymptotic(x)
    };
    Ok(jy_result(v))
}

/// Bessel function of the first kind, order one. `J0'(x) = -J1(x)`.
pub fn bessel_j1(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_nonnegative("bessel_j1", x)?;
    let v = if x < JY_SERIES_MAX_X {
        series::j1_series(x)
    } else {
        asymptotic::j1_asymptotic(x)
    };
    Ok(jy_result(v))
}

/// Bessel function of the second kind, order zero. Defined for `x >= 1e-8`.
pub fn bessel_y0(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_singular("bessel_y0", x)?;
    let v = if x < JY_SERIES_MAX_X {
        series::y0_series(x)
    } else {
        asymptotic::y0_asymptotic(x)
    };
    Ok(jy_result(v))
}

/// Bessel function of the second kind, order one. `Y0'(x) = -Y1(x)`.
pub fn bessel_y1(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_singular("bessel_y1", x)?;
    let v = if x < JY_SERIES_MAX_X {
        series::y1_series(x)
    } else {
        asymptotic::y1_asymptotic(x)
    };
    Ok(jy_result(v))
}

/// Modified Bessel function of the first kind, order zero.
pub fn bessel_i0(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_nonnegative("bessel_i0", x)?;
    let v = if x <= I_SERIES_MAX_X {
        series::i0_series(x)
    } else {
        asymptotic::i_asymptotic_unscaled(0, x)
    };
    if !v.is_finite() {
        return Err(SpecFunError::Overflow {
            function: "bessel_i0",
            x,
        });
    }
    Ok(ik_result(v))
}

/// Modified Bessel function of the first kind, order one. `I0'(x) = I1(x)`.
pub fn bessel_i1(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_nonnegative("bessel_i1", x)?;
    let v = if x <= I_SERIES_MAX_X {
        series::i1_series(x)
    } else {
        asymptotic::i_asymptotic_unscaled(1, x)
    };
    if !v.is_finite() {
        return Err(SpecFunError::Overflow {
            function: "bessel_i1",
            x,
        });
    }
    Ok(ik_result(v))
}

/// Modified Bessel function of the second kind, order zero. Defined for
/// `x >= 1e-8`.
pub fn bessel_k0(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_singular("bessel_k0", x)?;
    let v = if x <= K_SERIES_MAX_X {
        series::k0_series(x)
    } else if x <= K_CHEB_MAX_X {
        (-x).exp() * chebyshev::k0_scaled_cheb(x)
    } else {
        (-x).exp() * asymptotic::k_asymptotic_scaled(0, x)
    };
    Ok(ik_result(v))
}

/// Modified Bessel function of the second kind, order one. `K0'(x) = -K1(x)`.
pub fn bessel_k1(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_singular("bessel_k1", x)?;
    let v = if x <= K_SERIES_MAX_X {
        series::k1_series(x)
    } else if x <= K_CHEB_MAX_X {
        (-x).exp() * chebyshev::k1_scaled_cheb(x)
    } else {
        (-x).exp() * asymptotic::k_asymptotic_scaled(1, x)
    };
    Ok(ik_result(v))
}

/// `e^{-x} I0(x)`; stays representable for arbitrarily large `x`.
pub fn bessel_i0_scaled(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_nonnegative("bessel_i0_scaled", x)?;
    let v = if x <= I_SERIES_MAX_X {
        (-x).exp() * series::i0_series(x)
    } else {
        asymptotic::i_asymptotic_scaled(0, x)
    };
    Ok(ik_result(v))
}

/// `e^{-x} I1(x)`.
pub fn bessel_i1_scaled(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_nonnegative("bessel_i1_scaled", x)?;
    let v = if x <= I_SERIES_MAX_X {
        (-x).exp() * series::i1_series(x)
    } else {
        asymptotic::i_asymptotic_scaled(1, x)
    };
    Ok(ik_result(v))
}

/// `e^{x} K0(x)`; avoids underflow of `K0` at large argument.
pub fn bessel_k0_scaled(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_singular("bessel_k0_scaled", x)?;
    let v = if x <= K_SERIES_MAX_X {
        x.exp() * series::k0_series(x)
    } else if x <= K_CHEB_MAX_X {
        chebyshev::k0_scaled_cheb(x)
    } else {
        asymptotic::k_asymptotic_scaled(0, x)
    };
    Ok(ik_result(v))
}

/// `e^{x} K1(x)`.
pub fn bessel_k1_scaled(x: f64) -> Result<SpecFunResult, SpecFunError> {
    check_singular("bessel_k1_scaled", x)?;
    let v = if x <= K_SERIES_MAX_X {
        x.exp() * series::k1_series(x)
    } else if x <= K_CHEB_MAX_X {
        chebyshev::k1_scaled_cheb(x)
    } else {
        asymptotic::k_asymptotic_scaled(1, x)
    };
    Ok(ik_result(v))
}

#[cfg(test)]
mod tests;
