//! Bracketed root finding: Brent's inverse-quadratic/secant/bisection
//! hybrid. Derivative-free, and the iterate never leaves the bracket.

use super::{NumericsError, Tolerances};

/// A sign-changing bracket `[lo, hi]` with the function values at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self, NumericsError> {
        if !(lo < hi) || !f_lo.is_finite() || !f_hi.is_finite() || !(f_lo * f_hi < 0.0) {
            return Err(NumericsError::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(RootBracket { lo, hi, f_lo, f_hi })
    }

    /// Evaluate `f` at both ends and build the bracket.
    pub fn from_fn<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Self, NumericsError> {
        Self::new(lo, hi, f(lo), f(hi))
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Find a root of `f` inside `bracket`.
///
/// Stops when `|f(x)| <= abs_tol` or the bracket width falls below
/// `abs_tol` plus floating-point resolution; bisection fallback guarantees
/// convergence within `max_iterations`.
pub fn find_root<F>(f: F, bracket: RootBracket, tol: &Tolerances) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    tol.validate()?;
    let mut a = bracket.lo;
    let mut b = bracket.hi;
    let mut fa = bracket.f_lo;
    let mut fb = bracket.f_hi;
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = b - a;

    for _ in 0..tol.max_iterations.max(100) {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol.abs_tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 || fb.abs() <= tol.abs_tol {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // secant / inverse quadratic step
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q0 = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q0 * (q0 - r) - (b - a) * (r - 1.0)),
                    (q0 - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 {
            d
        } else {
            tol1 * xm.signum()
        };
        fb = f(b);
        if fb.is_nan() {
            return Err(NumericsError::NanEncountered { x: b });
        }
    }
    Err(NumericsError::NonConvergence {
        context: "root finding",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_root() {
        let tol = Tolerances::default();
        let f = |x: f64| x - 2.0;
        let b = RootBracket::from_fn(f, 0.0, 5.0).unwrap();
        let r = find_root(f, b, &tol).unwrap();
        assert!((r - 2.0).abs() < 1e-10);
    }

    #[test]
    fn j0_first_zero() {
        let tol = Tolerances::default();
        let f = |x: f64| crate::specfun::bessel_j0(x).unwrap().value;
        let b = RootBracket::from_fn(f, 2.0, 3.0).unwrap();
        let r = find_root(f, b, &tol).unwrap();
        assert!(
            (r - 2.404825557695773).abs() < 1e-10,
            "J0 zero found at {r}"
        );
    }

    #[test]
    fn no_sign_change_rejected() {
        let f = |x: f64| x * x;
        assert!(matches!(
            RootBracket::from_fn(f, -1.0, 2.0),
            Err(NumericsError::InvalidBracket { .. })
        ));
    }

    #[test]
    fn result_stays_inside_bracket() {
        let tol = Tolerances::default();
        for k in 1..40 {
            let shift = k as f64 * 0.07;
            let f = move |x: f64| (x - shift).tanh() + 0.3 * (x - shift).powi(3);
            let b = RootBracket::from_fn(f, shift - 1.3, shift + 2.1).unwrap();
            let r = find_root(f, b, &tol).unwrap();
            assert!(r >= b.lo() && r <= b.hi());
            assert!((r - shift).abs() < 1e-8);
        }
    }
}
