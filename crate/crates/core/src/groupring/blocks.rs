use core::fmt;

use super::CandidateVector;
use crate::matrix::BitMatrix;

/// Shape of one 3x3 coefficient block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BlockKind {
    /// Rows `(x,y,z), (z,x,y), (y,z,x)`: each row shifted right.
    Circ,
    /// Rows `(x,y,z), (y,z,x), (z,x,y)`: each row shifted left.
    RevCirc,
}

/// `circ(x, y, z)`.
pub fn circ(x: bool, y: bool, z: bool) -> BitMatrix {
    let row = |a, b, c| crate::BitVector::from_bits([a, b, c]);
    BitMatrix::from_rows(alloc::vec![row(x, y, z), row(z, x, y), row(y, z, x)], 3).expect("3x3 block")
}

/// `revcirc(x, y, z)`.
pub fn revcirc(x: bool, y: bool, z: bool) -> BitMatrix {
    let row = |a, b, c| crate::BitVector::from_bits([a, b, c]);
    BitMatrix::from_rows(alloc::vec![row(x, y, z), row(y, z, x), row(z, x, y)], 3).expect("3x3 block")
}

/// Which of the twelve blocks are circulant and which reverse circulant.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockPattern {
    pub name: &'static str,
    pub kinds: [BlockKind; 12],
}

use BlockKind::{Circ as C, RevCirc as R};

impl BlockPattern {
    pub const ALL_CIRC: BlockPattern = BlockPattern { name: "P-C", kinds: [C; 12] };
    pub const ALL_REVCIRC: BlockPattern = BlockPattern { name: "P-R", kinds: [R; 12] };
    pub const REVCIRC_THEN_CIRC: BlockPattern =
        BlockPattern { name: "P-RC", kinds: [R, R, R, R, R, R, C, C, C, C, C, C] };
    pub const CIRC_THEN_REVCIRC: BlockPattern =
        BlockPattern { name: "P-CR", kinds: [C, C, C, C, C, C, R, R, R, R, R, R] };
    pub const TRIPLES: BlockPattern = BlockPattern { name: "P-3ALT", kinds: [C, C, C, R, R, R, C, C, C, R, R, R] };
    pub const PAIRS_REVCIRC_FIRST: BlockPattern =
        BlockPattern { name: "P-2ALT-R", kinds: [R, R, C, C, R, R, C, C, R, R, C, C] };
    pub const ALTERNATING_REVCIRC_FIRST: BlockPattern =
        BlockPattern { name: "P-ALT-R", kinds: [R, C, R, C, R, C, R, C, R, C, R, C] };
    pub const ALTERNATING_CIRC_FIRST: BlockPattern =
        BlockPattern { name: "P-ALT-C", kinds: [C, R, C, R, C, R, C, R, C, R, C, R] };
    pub const PAIRS_CIRC_FIRST: BlockPattern =
        BlockPattern { name: "P-2ALT-C", kinds: [C, C, R, R, C, C, R, R, C, C, R, R] };

    pub const NAMED: [BlockPattern; 9] = [
        Self::ALL_CIRC,
        Self::ALL_REVCIRC,
        Self::REVCIRC_THEN_CIRC,
        Self::CIRC_THEN_REVCIRC,
        Self::TRIPLES,
        Self::PAIRS_REVCIRC_FIRST,
        Self::ALTERNATING_REVCIRC_FIRST,
        Self::ALTERNATING_CIRC_FIRST,
        Self::PAIRS_CIRC_FIRST,
    ];

    pub fn by_name(name: &str) -> Option<BlockPattern> {
        Self::NAMED.iter().copied().find(|p| p.name == name)
    }
}

impl fmt::Debug for BlockPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

/// The twelve coefficient blocks `A_1 .. A_12` (index 0 is `A_1`).
pub type Blocks = [BitMatrix; 12];

/// Block `A_i` is built from the triple `(a_{3i-2}, a_{3i-1}, a_{3i})`.
pub fn build_blocks(c: CandidateVector, pattern: &BlockPattern) -> Blocks {
    core::array::from_fn(|i| {
        let (x, y, z) = (c.a(3 * i + 1), c.a(3 * i + 2), c.a(3 * i + 3));
        match pattern.kinds[i] {
            BlockKind::Circ => circ(x, y, z),
            BlockKind::RevCirc => revcirc(x, y, z),
        }
    })
}
