//! Dispersion analysis of time-fractional linear wave equations.
//!
//! This crate computes the complex dispersion relations, phase velocities and
//! group velocities of two model equations in which the time derivative is
//! replaced by a Caputo derivative of order `alpha` in `(0, 1]`:
//!
//! * the kinematic wave equation `D_t^a u + c0 u_x = 0`, and
//! * the linearised Korteweg-de Vries equation
//!   `D_t^a u + c0 u_x + mu u_xxx = 0`.
//!
//! Both reduce, in Fourier space, to the symbol relation `(i w)^a = i kappa(k)`
//! with `kappa(k) = c0 k` resp. `c0 k - mu k^3`, whose `k`-parameterised branch
//! is `w(k) = i^(-1 + 1/a) kappa(k)^(1/a)`. The crate evaluates that branch in
//! closed form, provides the exact per-mode propagator `E_a(i kappa t^a)`
//! through a Mittag-Leffler evaluator, and evolves periodic initial data with
//! a pseudo-spectral one-shot scheme.
//!
//! The crate is `no_std`-compatible (it needs `alloc`); enable the `libm`
//! feature instead of `std` to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("fracwave requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod analysis;
mod dd;
pub mod dispersion;
pub mod fft;
mod float;
mod gamma;
pub mod ml;
pub mod policy;
pub mod solver;

pub use num_complex::Complex64;

pub use dispersion::{
    fractional_unit, group_velocity, omega_bar, phase_velocity, velocity_split, BranchMode,
    Branched, DispersionError, DispersionModel, FractionalOrder, NormalMode,
};
pub use ml::{mittag_leffler, propagator, MittagLeffler, MlError, MlParams, MlValue};
pub use policy::NumericPolicy;
pub use solver::{PeriodicGrid, SpectralState};
