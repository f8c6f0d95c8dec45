//! Link-level simulator for 60 GHz mobile-phone antenna arrays.
//!
//! The crate computes the *total array gain* of an 8-element phone array
//! (uniform linear or distributed) over multipath channels produced by an
//! image-method ray tracer, including phone rotation, human-torso shadowing
//! and finger shadowing:
//!
//! - [`geom`]: directions, Euler orientations and frame mappings
//! - [`swe`]: spherical wave expansion, Wigner-d rotation, reconstruction
//! - [`antenna`]: analytic patch elements, ULA/DA layouts, finger masks
//! - [`propagation`]: specular ray tracing, Fresnel reflection, XPR, PDP
//! - [`blockage`]: canonical human-torso shadowing model
//! - [`gain`]: channel vectors, MRC combining, gain statistics
//! - [`config`]: scenario files and run parameters
//!
//! Angles are radians internally; file formats and display use degrees.
//! Power quantities convert with `10 log10`, field amplitudes with `20 log10`.
//! All types are immutable after construction and all operations are pure;
//! randomness goes through the [`rng::rng_for`] stream contract.

pub mod antenna;
pub mod blockage;
pub mod config;
pub mod error;
pub mod gain;
pub mod geom;
pub mod mpc;
pub mod pattern;
pub mod propagation;
pub mod rng;
pub mod swe;
pub mod units;

pub use error::SimError;
pub use geom::{Direction, EulerOrientation};
pub use mpc::Mpc;
pub use pattern::{PolarimetricGain, RadiationPattern};
