//! Numerical semigroup invariants.
//!
//! Two independent routes to the same numbers:
//!
//! - [`semigroup`]: an exact oracle for any generator list. Apéry sets are
//!   computed by shortest paths on the residue graph, and the Frobenius
//!   number, genus, gaps and pseudo-Frobenius numbers are read off them.
//! - [`family`] and [`special`]: closed forms for the semigroups generated by
//!   `(a, 2a+d, 4a+3d, ..., 2^k a + (2^k-1) d)`, built on the change-making
//!   layer in [`coins`] (greedy presentations over `(1, 3, 7, ..., 2^k-1)`).
//!
//! All arithmetic is 128-bit and checked. Overflow is reported as
//! [`Error::Overflow`], never wrapped.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod coins;
mod error;
pub mod family;
pub mod semigroup;
pub mod special;

pub use error::{Error, Result};
pub use semigroup::{AperyTable, GeneratorSet, InvariantReport, Source};

/// Integer type used for semigroup elements and invariants.
pub type Int = i128;
