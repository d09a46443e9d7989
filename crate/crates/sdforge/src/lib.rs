//! File formats, the hit catalog and the command-line front end on top of
//! [`sdforge_core`].

pub mod catalog;
pub mod cli;
mod error;
pub mod tables;

pub use error::Error;
