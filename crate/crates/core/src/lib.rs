//! Desk-scale simulation toolkit for Majorana zero modes in a two-dimensional
//! `p_x + i p_y` superfluid.
//!
//! The crate covers four layers:
//!
//! * [`specfun`] — real-argument Bessel functions `J0/J1/Y0/Y1/I0/I1/K0/K1`,
//!   the only special functions the radial bound-state solutions need.
//! * [`numerics`] — adaptive quadrature (finite and semi-infinite), bracketed
//!   root finding, and an adaptive two-level Schrödinger integrator.
//! * [`bdg`] — the vortex-core Bogoliubov–de Gennes zero-mode problem: the
//!   matched, normalized bound state in the weak-pairing phase (`mu > 0`) and
//!   the log-derivative mismatch showing its absence for `mu < 0`.
//! * [`register`] + [`braid`] — exact `2n`-Majorana operators on a
//!   `2^n`-dimensional occupation basis, braid-group generators, state
//!   evolution and measurement, plus a tiny braid-word language.
//! * [`readout`] — Gaussian Raman-pulse transfer probabilities and the
//!   fluorescence scattering-ratio estimate for qubit read-out.
//! * [`config`] — INI-style run configuration and the angular-frequency
//!   literal grammar used by the CLI.

pub mod bdg;
pub mod braid;
pub mod config;
pub mod jsonout;
pub mod numerics;
pub mod readout;
pub mod register;
pub mod specfun;
pub mod units;
