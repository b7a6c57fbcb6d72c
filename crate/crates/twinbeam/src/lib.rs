//! Entanglement, nonclassicality, and dimensionality of noisy twin beams.
//!
//! A twin beam is parameterized by its mean photon-pair number and the mean
//! thermal noise photons in each arm.  This crate evaluates the negativity,
//! the nonclassical depth, participation ratios, entanglement
//! dimensionalities, and reduced-state entropies both in closed form
//! ([`analytic`]) and by brute force in a truncated Fock basis ([`fock`]),
//! plus the per-mode and three-component generalizations for multimode
//! beams ([`multimode`]).  The [`verify`] module runs the cross-checks
//! between the two routes.

pub mod analytic;
pub mod error;
pub mod fock;
pub mod multimode;
pub mod params;
pub mod verify;

pub use analytic::{Field, QuantReport};
pub use error::TwinBeamError;
pub use params::{GaussianMoments, TwinBeamParams};
