//! GF(2) polynomial algebra for studying trinomial multiples of
//! maximum-weight polynomials and the orthogonal arrays built from
//! shift-register sequences.
//!
//! * [`poly`]: dense bit-packed polynomials.
//! * [`maxweight`]: `x^m + ... + 1` with one interior term removed.
//! * [`classify`]: irreducibility, primitivity, period.
//! * [`divisibility`]: trinomial multiples and the exhaustive sweeps.
//! * [`lfsr`]: shift-register sequences.
//! * [`oa`]: orthogonal-array strength of window codes.
//! * [`cli`]: the `mwpoly` command line.

pub mod classify;
pub mod cli;
pub mod divisibility;
pub mod error;
pub mod factor;
pub mod lfsr;
pub mod maxweight;
pub mod oa;
pub mod poly;

pub use error::{Error, Result};
pub use maxweight::MaxWeightPoly;
pub use poly::Poly;
