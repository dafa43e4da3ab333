//! # epi-core
//!
//! Exact combinatorics and arbitrary-precision numerics for checking series
//! identities that tie e and π to Pascal's triangle and the Lucas triangle
//! through Fibonacci and Lucas polynomials.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: big-integer triangles, polynomials, sequences and the
//!   structural rewrites among them. Nothing in here rounds.
//! * [`numeric`]: fixed-point arbitrary-precision reals, constants and
//!   series summation with truncation bookkeeping.
//! * [`registry`]: the catalog of identities, each producing exact terms.
//! * [`verifier`]: runs registry entries at a requested precision and
//!   depth and turns the outcome into a [`verifier::VerificationReport`].

pub mod error;
pub mod exact;
pub mod numeric;
pub mod registry;
pub mod verifier;

pub use error::{Error, Result};
