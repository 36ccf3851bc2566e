//! Numerical laboratory for azimuthal shock formation in 2D homogeneous
//! compressible Euler flows.
//!
//! The library evolves the reduced Riemann-variable system (w, z, a) on the
//! periodic angle, its modulated self-similar counterpart (W, Z, A) with
//! dynamic blowup time/location/amplitude variables, the exact γ = 3 purely
//! azimuthal solution, and the closed-form steady self-similar Burgers
//! profile, together with monitor suites for the inequalities that certify
//! the blowup scenario.

pub mod blowup;
pub mod bootstrap;
pub mod config;
pub mod cubic;
pub mod datagen;
pub mod error;
pub mod gamma3;
pub mod grid;
pub mod interp;
pub mod physical;
pub mod pipeline;
pub mod profile;
pub mod selfsim;

pub use error::Error;
