//! 12x12 arrangements of coefficient blocks.

use super::{Blocks, GroupSpec};
use crate::matrix::BitMatrix;

/// One grid position: which block `A_{block+1}` goes there, optionally transposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub block: u8,
    pub transposed: bool,
}

impl Cell {
    const fn plain(block: u8) -> Self {
        Self { block, transposed: false }
    }
}

/// Block-level description of a 36x36 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockLayout(pub [[Cell; 12]; 12]);

impl BlockLayout {
    /// The group matrix: cell `(i, j)` holds the coefficient of `g_i^-1 g_j`.
    pub fn from_cayley(g: &GroupSpec) -> Self {
        let mut grid = [[Cell::plain(0); 12]; 12];
        for (i, row) in grid.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = Cell::plain(g.mul(g.inv(i), j) as u8);
            }
        }
        Self(grid)
    }

    /// Builds a layout from a grid of `n x n` sub-layouts, each `12/n` cells wide.
    fn from_quadrants<const N: usize>(parts: [[Sub; N]; N]) -> Self {
        let w = 12 / N;
        let mut grid = [[Cell::plain(0); 12]; 12];
        for (bi, prow) in parts.iter().enumerate() {
            for (bj, part) in prow.iter().enumerate() {
                for i in 0..w {
                    for j in 0..w {
                        grid[bi * w + i][bj * w + j] = part.cell(i, j);
                    }
                }
            }
        }
        Self(grid)
    }

    /// The same grid with every transpose flag cleared.
    pub fn arrangement(&self) -> Self {
        let mut grid = self.0;
        for row in grid.iter_mut() {
            for cell in row.iter_mut() {
                cell.transposed = false;
            }
        }
        Self(grid)
    }

    /// Number of grid cells holding each block.
    pub fn block_usage(&self) -> [usize; 12] {
        let mut counts = [0; 12];
        for row in &self.0 {
            for c in row {
                counts[c.block as usize] += 1;
            }
        }
        counts
    }

    /// Each block appears exactly once in every block row and block column.
    pub fn is_group_matrix_shaped(&self) -> bool {
        (0..12).all(|i| {
            let mut row = 0u16;
            let mut col = 0u16;
            for j in 0..12 {
                row |= 1 << self.0[i][j].block;
                col |= 1 << self.0[j][i].block;
            }
            row == 0xfff && col == 0xfff
        })
    }

    /// `[[A, B], [B^T, A^T]]` with `A = CIRC(A_1..A_6)`, `B = CIRC(A_7..A_12)`
    /// and `^T` the full matrix transpose, so the lower blocks are transposed
    /// too. Its [`arrangement`](Self::arrangement) is the `D12` group matrix;
    /// the matrices agree whenever the blocks are symmetric (all `revcirc`).
    pub fn dihedral_case1() -> Self {
        let a = Sub::circ(&[0, 1, 2, 3, 4, 5]);
        let b = Sub::circ(&[6, 7, 8, 9, 10, 11]);
        Self::from_quadrants([[a, b], [b.transpose(), a.transpose()]])
    }

    /// `[[A, B], [B, A]]` with `A = CIRC(A_1..A_6)`, `B = REVCIRC(A_7..A_12)`.
    pub fn dihedral_case2() -> Self {
        let a = Sub::circ(&[0, 1, 2, 3, 4, 5]);
        let b = Sub::revcirc(&[6, 7, 8, 9, 10, 11]);
        Self::from_quadrants([[a, b], [b, a]])
    }

    /// `[[A, B], [B', A]]` with `B' = CIRC(A_12, A_7, .., A_11)`.
    pub fn cyclic_case1() -> Self {
        let a = Sub::circ(&[0, 1, 2, 3, 4, 5]);
        let b = Sub::circ(&[6, 7, 8, 9, 10, 11]);
        let b1 = Sub::circ(&[11, 6, 7, 8, 9, 10]);
        Self::from_quadrants([[a, b], [b1, a]])
    }

    /// 4x4 arrangement of 3-block circulants with right-rotated variants
    /// `X'` below the diagonal.
    pub fn cyclic_case2() -> Self {
        let a = Sub::circ(&[0, 1, 2]);
        let b = Sub::circ(&[3, 4, 5]);
        let c = Sub::circ(&[6, 7, 8]);
        let d = Sub::circ(&[9, 10, 11]);
        let b1 = Sub::circ(&[5, 3, 4]);
        let c1 = Sub::circ(&[8, 6, 7]);
        let d1 = Sub::circ(&[11, 9, 10]);
        Self::from_quadrants([[a, b, c, d], [d1, a, b, c], [c1, d1, a, b], [b1, c1, d1, a]])
    }

    /// `[[A, B], [B, A]]` with both halves `CIRC`.
    pub fn c6_x_c2() -> Self {
        let a = Sub::circ(&[0, 1, 2, 3, 4, 5]);
        let b = Sub::circ(&[6, 7, 8, 9, 10, 11]);
        Self::from_quadrants([[a, b], [b, a]])
    }

    /// Block circulant of the four 3-block circulants `A, B, C, D`.
    pub fn c3_x_c4() -> Self {
        let a = Sub::circ(&[0, 1, 2]);
        let b = Sub::circ(&[3, 4, 5]);
        let c = Sub::circ(&[6, 7, 8]);
        let d = Sub::circ(&[9, 10, 11]);
        Self::from_quadrants([[a, b, c, d], [d, a, b, c], [c, d, a, b], [b, c, d, a]])
    }

    /// `[[A, B], [C, A]]`, `B = REVCIRC(A_7..A_12)`, `C = REVCIRC(A_10, A_11, A_12, A_7, A_8, A_9)`.
    pub fn dicyclic() -> Self {
        let a = Sub::circ(&[0, 1, 2, 3, 4, 5]);
        let b = Sub::revcirc(&[6, 7, 8, 9, 10, 11]);
        let c = Sub::revcirc(&[9, 10, 11, 6, 7, 8]);
        Self::from_quadrants([[a, b], [c, a]])
    }

    /// The `A4` block matrix exactly as published (1-based block numbers).
    /// Its last two rows repeat blocks and are not a group matrix; it is kept
    /// for comparison only.
    pub fn alternating_as_printed() -> Self {
        const PRINTED: [[u8; 12]; 12] = [
            [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
            [3, 1, 2, 12, 10, 11, 6, 4, 5, 9, 7, 8],
            [2, 3, 1, 8, 9, 7, 11, 12, 10, 5, 6, 4],
            [4, 5, 6, 1, 2, 3, 10, 11, 12, 7, 8, 9],
            [12, 10, 11, 3, 1, 2, 9, 7, 8, 6, 4, 5],
            [8, 9, 7, 2, 3, 1, 5, 6, 4, 11, 12, 10],
            [7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6],
            [6, 4, 5, 9, 7, 8, 3, 1, 2, 12, 10, 11],
            [11, 12, 10, 5, 6, 4, 2, 3, 1, 8, 9, 7],
            [10, 11, 12, 7, 8, 9, 4, 5, 6, 1, 2, 3],
            [9, 7, 6, 6, 4, 5, 12, 10, 11, 3, 1, 2],
            [5, 6, 4, 10, 12, 10, 8, 9, 7, 2, 3, 1],
        ];
        let mut grid = [[Cell::plain(0); 12]; 12];
        for i in 0..12 {
            for j in 0..12 {
                grid[i][j] = Cell::plain(PRINTED[i][j] - 1);
            }
        }
        Self(grid)
    }
}

/// A square sub-arrangement: block (block-)circulant or reverse circulant.
#[derive(Clone, Copy)]
struct Sub {
    first_row: [u8; 6],
    n: usize,
    reverse: bool,
    transposed: bool,
}

impl Sub {
    fn new(first: &[u8], reverse: bool) -> Self {
        let mut first_row = [0; 6];
        first_row[..first.len()].copy_from_slice(first);
        Self { first_row, n: first.len(), reverse, transposed: false }
    }

    fn circ(first: &[u8]) -> Self {
        Self::new(first, false)
    }

    fn revcirc(first: &[u8]) -> Self {
        Self::new(first, true)
    }

    fn transpose(self) -> Self {
        Self { transposed: !self.transposed, ..self }
    }

    fn cell(&self, i: usize, j: usize) -> Cell {
        let (i, j) = if self.transposed { (j, i) } else { (i, j) };
        let k = if self.reverse { (i + j) % self.n } else { (j + self.n - i) % self.n };
        Cell { block: self.first_row[k], transposed: self.transposed }
    }
}

/// Places the blocks according to `layout`.
pub fn assemble(layout: &BlockLayout, blocks: &Blocks) -> BitMatrix {
    let transposed: [BitMatrix; 12] = core::array::from_fn(|i| blocks[i].transpose());
    let mut m = BitMatrix::zeros(36, 36);
    for (i, row) in layout.0.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let b = if cell.transposed { &transposed[cell.block as usize] } else { &blocks[cell.block as usize] };
            m.set_block(3 * i, 3 * j, b);
        }
    }
    m
}

/// `sigma_3(v)` from the Cayley table: block `(i, j)` is `A_{g_i^-1 g_j}`.
pub fn sigma3_cayley(g: &GroupSpec, blocks: &Blocks) -> BitMatrix {
    assemble(&BlockLayout::from_cayley(g), blocks)
}
