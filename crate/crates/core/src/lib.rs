//! Core algorithms for constructing and certifying binary self-dual codes of
//! length 72 built from group matrix rings, and for searching the 36-bit
//! candidate space with virus-optimization and genetic engines.
//!
//! The crate is `no_std` with `alloc`. The default `parallel` feature runs
//! enumeration and batch evaluation on rayon; results never depend on it.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod analysis;
pub mod bits;
pub mod enumerate;
mod error;
pub mod groupring;
pub mod matrix;
pub mod search;

pub use analysis::{CodeReport, EnumeratorFamily, SelfDualType};
pub use bits::BitVector;
pub use error::Error;
pub use groupring::{BlockPattern, CandidateVector, Construction, GroupCase};
pub use matrix::BitMatrix;
