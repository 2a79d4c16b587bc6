//! Exact rational arithmetic, truncated formal power series, and the
//! Euler-type series transformation machinery built on top of them.
//!
//! Everything in this crate is exact: the only scalar is an
//! arbitrary-precision rational, series are finite coefficient vectors,
//! and identity checking means coefficientwise equality of rationals.
//! The `identities` module holds a registry of transformation and
//! harmonic-number identities together with a verification engine that
//! checks each one over a parameter grid and emits machine-readable
//! reports; the `euler-series` binary is a thin CLI over it.

pub mod exactnum;
pub mod fps;
pub mod identities;
pub mod polyfamilies;
pub mod transforms;

pub use exactnum::Rat;
pub use fps::{Poly, Series};
