//! Dense GF(2) matrices with rows packed as [`BitVector`]s.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{BitVector, MAX_BITS};
use crate::Error;

/// Row-major GF(2) matrix with at most 128 columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    ncols: usize,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        assert!(ncols <= MAX_BITS, "BitMatrix width {ncols} exceeds {MAX_BITS}");
        Self { rows: alloc::vec![BitVector::zeros(ncols); nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from rows that must all have length `ncols`.
    pub fn from_rows(rows: Vec<BitVector>, ncols: usize) -> Result<Self, Error> {
        if ncols > MAX_BITS {
            return Err(Error::Contract(alloc::format!("width {ncols} exceeds {MAX_BITS}")));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
            return Err(Error::Contract(alloc::format!("row {i} has length {}, expected {ncols}", r.len())));
        }
        Ok(Self { rows, ncols })
    }

    /// Builds a matrix from nested `0`/`1` values; convenient in tests.
    pub fn from_u8_rows(rows: &[&[u8]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged rows");
                BitVector::from_bits(r.iter().map(|&b| b & 1 == 1))
            })
            .collect();
        Self { rows, ncols }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows() == self.ncols && self.rows.iter().enumerate().all(|(i, r)| r.weight() == 1 && r.get(i))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones_iter() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix, Error> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: (self.nrows(), self.ncols),
                right: (other.nrows(), other.ncols),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVector::zeros(other.ncols);
                for j in r.ones_iter() {
                    acc.xor_assign(&other.rows[j]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix { rows, ncols: other.ncols })
    }

    /// Entry-wise sum (XOR).
    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix, Error> {
        if self.nrows() != other.nrows() || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch {
                op: "add",
                left: (self.nrows(), self.ncols),
                right: (other.nrows(), other.ncols),
            });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.xor(b)).collect();
        Ok(BitMatrix { rows, ncols: self.ncols })
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &BitMatrix) -> Result<BitMatrix, Error> {
        if self.nrows() != other.nrows() || self.ncols + other.ncols > MAX_BITS {
            return Err(Error::DimensionMismatch {
                op: "hconcat",
                left: (self.nrows(), self.ncols),
                right: (other.nrows(), other.ncols),
            });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect();
        Ok(BitMatrix { rows, ncols: self.ncols + other.ncols })
    }

    /// Columns `start..start + width`.
    pub fn columns(&self, start: usize, width: usize) -> BitMatrix {
        assert!(start + width <= self.ncols, "column range out of bounds");
        let rows = self.rows.iter().map(|r| r.slice(start, width)).collect();
        BitMatrix { rows, ncols: width }
    }

    /// Copies `block` into this matrix with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &BitMatrix) {
        for i in 0..block.nrows() {
            for j in 0..block.ncols() {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    /// Rank, and the inverse when the matrix is square and of full rank.
    pub fn rank_inverse(&self) -> (usize, Option<BitMatrix>) {
        let n = self.nrows();
        let mut work = self.rows.clone();
        let square = n == self.ncols;
        let mut inv = if square { Some(BitMatrix::identity(n).rows) } else { None };
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(p) = (rank..n).find(|&r| work[r].get(col)) else {
                continue;
            };
            work.swap(rank, p);
            if let Some(inv) = inv.as_mut() {
                inv.swap(rank, p);
            }
            let pivot = work[rank];
            let pivot_inv = inv.as_ref().map(|v| v[rank]);
            for r in 0..n {
                if r != rank && work[r].get(col) {
                    work[r].xor_assign(&pivot);
                    if let (Some(inv), Some(pi)) = (inv.as_mut(), pivot_inv.as_ref()) {
                        inv[r].xor_assign(pi);
                    }
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        let inverse = match inv {
            Some(rows) if rank == n => Some(BitMatrix { rows, ncols: n }),
            _ => None,
        };
        (rank, inverse)
    }

    pub fn rank(&self) -> usize {
        self.rank_inverse().0
    }

    /// Row-reduces so that the columns in `pivot_cols` form an identity
    /// matrix (row `k` carries the pivot of `pivot_cols[k]`).
    ///
    /// Returns `Ok(None)` when the chosen columns are linearly dependent.
    pub fn systematic_form(&self, pivot_cols: &[usize]) -> Result<Option<BitMatrix>, Error> {
        if pivot_cols.len() != self.nrows() {
            return Err(Error::Contract(alloc::format!(
                "{} pivot columns for {} rows",
                pivot_cols.len(),
                self.nrows()
            )));
        }
        if let Some(&c) = pivot_cols.iter().find(|&&c| c >= self.ncols) {
            return Err(Error::Contract(alloc::format!("pivot column {c} out of range")));
        }
        let mut rows = self.rows.clone();
        for (k, &col) in pivot_cols.iter().enumerate() {
            let Some(p) = (k..rows.len()).find(|&r| rows[r].get(col)) else {
                return Ok(None);
            };
            rows.swap(k, p);
            let pivot = rows[k];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != k && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
        }
        Ok(Some(BitMatrix { rows, ncols: self.ncols }))
    }

    /// Parses rows of `0`/`1` characters; blank lines are skipped.
    pub fn parse(text: &str) -> Result<BitMatrix, Error> {
        let mut rows = Vec::new();
        let mut ncols = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut bits = Vec::with_capacity(line.len());
            for ch in line.chars() {
                match ch {
                    '0' => bits.push(false),
                    '1' => bits.push(true),
                    c if c.is_whitespace() => {}
                    c => {
                        return Err(Error::Contract(alloc::format!("line {}: unexpected character {c:?}", lineno + 1)))
                    }
                }
            }
            if bits.len() > MAX_BITS {
                return Err(Error::Contract(alloc::format!(
                    "line {}: {} columns exceed {MAX_BITS}",
                    lineno + 1,
                    bits.len()
                )));
            }
            match ncols {
                None => ncols = Some(bits.len()),
                Some(n) if n != bits.len() => {
                    return Err(Error::Contract(alloc::format!(
                        "line {}: {} columns, expected {n}",
                        lineno + 1,
                        bits.len()
                    )))
                }
                _ => {}
            }
            rows.push(BitVector::from_bits(bits));
        }
        Ok(BitMatrix { rows, ncols: ncols.unwrap_or(0) })
    }

    /// One line of `0`/`1` per row, newline-terminated.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.nrows() * (self.ncols + 1));
        for r in &self.rows {
            for b in r.iter() {
                s.push(if b { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.nrows(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        f.write_str("]")
    }
}
