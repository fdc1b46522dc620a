//! Exact Waldschmidt constants of fat point schemes supported on at most
//! eight essentially distinct points of the projective plane.
//!
//! The divisor class group of the blowup is the lattice `I^{1,r}`
//! ([`lattice`]). The effective cone is generated by the negative curves of a
//! [`config::SurfaceConfig`] (plus `-K` at eight points), and the Waldschmidt
//! constant is the optimum of an exact rational linear program ([`cone`]),
//! returned together with a checkable certificate.

pub mod classes;
pub mod cli;
pub mod cone;
pub mod config;
pub mod dp4catalog;
pub mod error;
pub mod lattice;
pub mod monomial;

pub use error::{Error, Result};
pub use lattice::DivisorClass;
