//! Exact spectral data for rationally-extended harmonic and radial
//! oscillators, their ladder algebras, and the 2D superintegrable systems
//! built from them.

pub mod error;
pub mod exactpoly;
pub mod extension;

pub use error::{Error, Result};
pub mod ladder;
pub mod super2d;
pub mod numverify;
