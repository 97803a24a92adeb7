//! Numerical kernels for photon zero-point energy, charged-field vacuum
//! physics and two-slit photon diffraction.
//!
//! The crate is organised by physical topic:
//!
//! * [`specfun`]: quadrature, series summation, `sinc`, Bessel `J1` and the
//!   `1 - x/sinh x` kernel shared by everything else.
//! * [`blackbody`]: Planck occupation, zero-point energy and the
//!   `ω ↔ -ω` symmetrisation identity.
//! * [`vacuum`]: Landau levels, the renormalised vacuum energy in a magnetic
//!   field, magnetisation, and pair production in an electric field.
//! * [`maxwell`]: spin-1 matrices, the six-component Maxwell Hamiltonian,
//!   helicity states, velocity commutators and transversal state counting.
//! * [`twoslit`]: closed-form two-slit intensity and the brute-force
//!   density-matrix oracle that checks it.
//! * [`cli`]: the `zeropoint` command-line front end (CSV/JSON output).
//!
//! All physics routines work in dimensionless or natural units; unit
//! conversion happens only in [`cli`].

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod blackbody;
pub mod cli;
mod error;
pub mod maxwell;
pub mod specfun;
pub mod twoslit;
pub mod vacuum;

pub use error::{Error, Result};
pub use specfun::{QuadratureOptions, QuadratureResult, SeriesResult};
