//! Packed binary vectors of at most 128 bits.

use core::fmt;

/// Maximum supported vector length.
pub const MAX_BITS: usize = 128;

/// A binary vector of length `len <= 128`, stored in two 64-bit words.
///
/// Bit `i` lives in word `i / 64` at position `i % 64`. Bits at positions
/// `>= len` are always zero, so derived equality and hashing are exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitVector {
    words: [u64; 2],
    len: u8,
}

#[inline]
fn mask_for(len: usize) -> [u64; 2] {
    match len {
        0 => [0, 0],
        1..=63 => [(1u64 << len) - 1, 0],
        64 => [u64::MAX, 0],
        65..=127 => [u64::MAX, (1u64 << (len - 64)) - 1],
        _ => [u64::MAX, u64::MAX],
    }
}

impl BitVector {
    /// All-zero vector of the given length.
    ///
    /// Panics if `len > 128`.
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_BITS, "BitVector length {len} exceeds {MAX_BITS}");
        Self { words: [0, 0], len: len as u8 }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        v.words = mask_for(len);
        v
    }

    /// Builds a vector from raw words, clearing anything beyond `len`.
    pub fn from_words(words: [u64; 2], len: usize) -> Self {
        let mut v = Self::zeros(len);
        let m = mask_for(len);
        v.words = [words[0] & m[0], words[1] & m[1]];
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = [0u64; 2];
        let mut len = 0usize;
        for b in bits {
            assert!(len < MAX_BITS, "BitVector length exceeds {MAX_BITS}");
            if b {
                words[len / 64] |= 1 << (len % 64);
            }
            len += 1;
        }
        Self { words, len: len as u8 }
    }

    /// Standard basis vector `e_i` of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> [u64; 2] {
        self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len(), "bit index {i} out of range {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len(), "bit index {i} out of range {}", self.len);
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len(), "bit index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.words[0].count_ones() + self.words[1].count_ones()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words == [0, 0]
    }

    /// In-place XOR. Lengths must match.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        self.words[0] ^= other.words[0];
        self.words[1] ^= other.words[1];
    }

    #[inline]
    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut r = *self;
        r.xor_assign(other);
        r
    }

    #[inline]
    pub fn and(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.len, other.len);
        Self { words: [self.words[0] & other.words[0], self.words[1] & other.words[1]], len: self.len }
    }

    /// Standard inner product over GF(2).
    #[inline]
    pub fn dot(&self, other: &BitVector) -> bool {
        self.and(other).weight() & 1 == 1
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let total = self.len() + other.len();
        assert!(total <= MAX_BITS, "concatenated length {total} exceeds {MAX_BITS}");
        let mut out = *self;
        out.len = total as u8;
        for i in other.ones_iter() {
            out.set(self.len() + i, true);
        }
        out
    }

    /// Bits `start..start + len` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len(), "slice out of range");
        let mut out = BitVector::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                out.set(i, true);
            }
        }
        out
    }

    /// Indices of set bits in increasing order.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..2).flat_map(move |w| {
            let mut word = self.words[w];
            core::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let tz = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + tz)
                }
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_padding() {
        let v = BitVector::from_words([u64::MAX, u64::MAX], 72);
        assert_eq!(v.weight(), 72);
        assert_eq!(v, BitVector::ones(72));
        assert_eq!(BitVector::from_words([u64::MAX, 0], 36).words(), [(1 << 36) - 1, 0]);
    }

    #[test]
    fn concat_and_slice() {
        let a = BitVector::from_bits([true, false, true]);
        let b = BitVector::ones(70);
        let c = a.concat(&b);
        assert_eq!(c.len(), 73);
        assert_eq!(c.weight(), 72);
        assert_eq!(c.slice(0, 3), a);
        assert_eq!(c.slice(3, 70), b);
    }

    #[test]
    fn display_is_bitstring() {
        let v = BitVector::from_bits([false, true, true]);
        assert_eq!(alloc::format!("{v}"), "011");
    }

    proptest! {
        #[test]
        fn weight_bounded_and_xor_self_is_zero(w0 in any::<u64>(), w1 in any::<u64>(), len in 0usize..=128) {
            let v = BitVector::from_words([w0, w1], len);
            prop_assert!(v.weight() as usize <= len);
            prop_assert!(v.xor(&v).is_zero());
            prop_assert_eq!(v.ones_iter().count() as u32, v.weight());
        }
    }
}
