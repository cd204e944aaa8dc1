//! Generic numerical utilities: adaptive quadrature on finite and
//! semi-infinite intervals, bracketed root finding, and an adaptive
//! Runge–Kutta integrator for two-level Schrödinger dynamics.

mod erf;
mod ode;
mod quad;
mod root;

pub use erf::erf;
pub use ode::{evolve_two_level, evolve_two_level_path};
pub use quad::integrate;
pub use root::{find_root, RootBracket};

/// Accuracy knobs shared by the adaptive routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iterations: u32,
}

impl Default for Tolerances {
    /// `1e-10` absolute and relative with 200 iterations, leaving headroom
    /// under the `1e-8`-level checks the solvers are held to.
    fn default() -> Self {
        Tolerances {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_iterations: 200,
        }
    }
}

impl Tolerances {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iterations: u32) -> Result<Self, NumericsError> {
        let t = Tolerances {
            abs_tol,
            rel_tol,
            max_iterations,
        };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn validate(&self) -> Result<(), NumericsError> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) || self.max_iterations < 1 {
            return Err(NumericsError::InvalidTolerances {
                abs_tol: self.abs_tol,
                rel_tol: self.rel_tol,
                max_iterations: self.max_iterations,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum NumericsError {
    #[error("invalid tolerances: abs {abs_tol}, rel {rel_tol}, max_iterations {max_iterations}")]
    InvalidTolerances {
        abs_tol: f64,
        rel_tol: f64,
        max_iterations: u32,
    },
    #[error("invalid root bracket [{lo}, {hi}] with f values ({f_lo}, {f_hi})")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("integrand returned a non-finite value at x = {x}")]
    NanEncountered { x: f64 },
    #[error("no convergence after the allowed refinement depth ({context})")]
    NonConvergence { context: &'static str },
    #[error("invalid integration endpoints [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
    #[error("step size underflow at t = {t} (problem too stiff for this integrator)")]
    StepUnderflow { t: f64 },
    #[error("hamiltonian is not hermitian at t = {t} (asymmetry {asymmetry:e})")]
    NonHermitian { t: f64, asymmetry: f64 },
    #[error("initial state norm {norm} is not 1")]
    NotNormalized { norm: f64 },
}
