//! The 28 registered generator-matrix constructions `[I_36 | tau_3(v)]`.

use core::fmt;

use super::{assemble, build_blocks, BlockLayout, BlockPattern, CandidateVector, GroupSpec};
use crate::matrix::BitMatrix;
use crate::Error;

/// Group of order 12 together with the element ordering / block arrangement in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupCase {
    D12Case1,
    D12Case2,
    C12Case1,
    C12Case2,
    C6xC2,
    C3xC4,
    A4,
    Dic12,
}

impl GroupCase {
    pub const ALL: [GroupCase; 8] = [
        GroupCase::D12Case1,
        GroupCase::D12Case2,
        GroupCase::C12Case1,
        GroupCase::C12Case2,
        GroupCase::C6xC2,
        GroupCase::C3xC4,
        GroupCase::A4,
        GroupCase::Dic12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupCase::D12Case1 => "D12-case1",
            GroupCase::D12Case2 => "D12-case2",
            GroupCase::C12Case1 => "C12-case1",
            GroupCase::C12Case2 => "C12-case2",
            GroupCase::C6xC2 => "C6xC2",
            GroupCase::C3xC4 => "C3xC4",
            GroupCase::A4 => "A4",
            GroupCase::Dic12 => "Dic12",
        }
    }

    pub fn group(self) -> GroupSpec {
        match self {
            GroupCase::D12Case1 => GroupSpec::dihedral_case1(),
            GroupCase::D12Case2 => GroupSpec::dihedral_case2(),
            GroupCase::C12Case1 => GroupSpec::cyclic_case1(),
            GroupCase::C12Case2 => GroupSpec::cyclic_case2(),
            GroupCase::C6xC2 => GroupSpec::c6_x_c2(),
            GroupCase::C3xC4 => GroupSpec::c3_x_c4(),
            GroupCase::A4 => GroupSpec::alternating(),
            GroupCase::Dic12 => GroupSpec::dicyclic(),
        }
    }

    /// `true` when the layout is taken from the Cayley table rather than
    /// written out block by block.
    pub fn uses_cayley_assembly(self) -> bool {
        matches!(self, GroupCase::A4)
    }

    /// The block arrangement used by `tau3`.
    pub fn layout(self) -> BlockLayout {
        match self {
            GroupCase::D12Case1 => BlockLayout::dihedral_case1(),
            GroupCase::D12Case2 => BlockLayout::dihedral_case2(),
            GroupCase::C12Case1 => BlockLayout::cyclic_case1(),
            GroupCase::C12Case2 => BlockLayout::cyclic_case2(),
            GroupCase::C6xC2 => BlockLayout::c6_x_c2(),
            GroupCase::C3xC4 => BlockLayout::c3_x_c4(),
            GroupCase::A4 => BlockLayout::from_cayley(&GroupSpec::alternating()),
            GroupCase::Dic12 => BlockLayout::dicyclic(),
        }
    }
}

impl fmt::Display for GroupCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One registered generator matrix: a group case and a block pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Construction {
    /// `G<i>.<j>` for the `j`-th matrix built over the `i`-th group case.
    pub id: &'static str,
    pub case: GroupCase,
    pub pattern: BlockPattern,
}

impl Construction {
    pub fn layout(&self) -> BlockLayout {
        self.case.layout()
    }

    pub fn tau3(&self, c: CandidateVector) -> BitMatrix {
        self.tau3_with(&self.layout(), c)
    }

    /// `tau3` with a precomputed layout (hot loops).
    pub fn tau3_with(&self, layout: &BlockLayout, c: CandidateVector) -> BitMatrix {
        assemble(layout, &build_blocks(c, &self.pattern))
    }

    pub fn generator(&self, c: CandidateVector) -> BitMatrix {
        BitMatrix::identity(36).hconcat(&self.tau3(c)).expect("36 + 36 columns")
    }
}

macro_rules! construction {
    ($id:literal, $case:ident, $pattern:ident) => {
        Construction { id: $id, case: GroupCase::$case, pattern: BlockPattern::$pattern }
    };
}

static REGISTRY: [Construction; 28] = [
    construction!("G1.1", D12Case1, CIRC_THEN_REVCIRC),
    construction!("G1.2", D12Case1, ALL_REVCIRC),
    construction!("G2.1", D12Case2, TRIPLES),
    construction!("G2.2", D12Case2, PAIRS_REVCIRC_FIRST),
    construction!("G2.3", D12Case2, REVCIRC_THEN_CIRC),
    construction!("G2.4", D12Case2, ALTERNATING_REVCIRC_FIRST),
    construction!("G2.5", D12Case2, ALTERNATING_CIRC_FIRST),
    construction!("G2.6", D12Case2, PAIRS_CIRC_FIRST),
    construction!("G3.1", C12Case1, ALL_CIRC),
    construction!("G3.2", C12Case1, ALL_REVCIRC),
    construction!("G3.3", C12Case1, REVCIRC_THEN_CIRC),
    construction!("G3.4", C12Case1, CIRC_THEN_REVCIRC),
    construction!("G4.1", C12Case2, TRIPLES),
    construction!("G4.2", C12Case2, ALL_REVCIRC),
    construction!("G4.3", C12Case2, ALL_CIRC),
    construction!("G5.1", C6xC2, CIRC_THEN_REVCIRC),
    construction!("G5.2", C6xC2, TRIPLES),
    construction!("G5.3", C6xC2, REVCIRC_THEN_CIRC),
    construction!("G6.1", C3xC4, ALTERNATING_CIRC_FIRST),
    construction!("G6.2", C3xC4, PAIRS_REVCIRC_FIRST),
    construction!("G7.1", A4, TRIPLES),
    construction!("G7.2", A4, PAIRS_CIRC_FIRST),
    construction!("G7.3", A4, ALTERNATING_CIRC_FIRST),
    construction!("G7.4", A4, PAIRS_REVCIRC_FIRST),
    construction!("G7.5", A4, REVCIRC_THEN_CIRC),
    construction!("G8.1", Dic12, ALL_REVCIRC),
    construction!("G8.2", Dic12, REVCIRC_THEN_CIRC),
    construction!("G8.3", Dic12, PAIRS_CIRC_FIRST),
];

/// All registered constructions in id order.
pub fn registry() -> &'static [Construction] {
    &REGISTRY
}

/// Finds a construction by id (`G2.1`; case-insensitive).
pub fn lookup(id: &str) -> Result<&'static Construction, Error> {
    REGISTRY.iter().find(|k| k.id.eq_ignore_ascii_case(id.trim())).ok_or_else(|| Error::UnknownConstruction(id.into()))
}

/// `tau_3(v)` for the construction `id`.
pub fn tau3(id: &str, c: CandidateVector) -> Result<BitMatrix, Error> {
    Ok(lookup(id)?.tau3(c))
}

/// `[I_36 | tau_3(v)]` for the construction `id`.
pub fn generator(id: &str, c: CandidateVector) -> Result<BitMatrix, Error> {
    Ok(lookup(id)?.generator(c))
}
