//! Group-matrix-ring constructions: a 36-bit candidate fixes twelve 3x3
//! blocks, and a group of order 12 arranges them into the 36x36 matrix
//! `tau_3(v)` that forms the right half of the generator `[I_36 | tau_3(v)]`.

mod blocks;
mod candidate;
mod groups;
mod layout;
mod registry;

pub use blocks::{build_blocks, circ, revcirc, BlockKind, BlockPattern, Blocks};
pub use candidate::CandidateVector;
pub use groups::GroupSpec;
pub use layout::{assemble, sigma3_cayley, BlockLayout, Cell};
pub use registry::{generator, lookup, registry, tau3, Construction, GroupCase};
