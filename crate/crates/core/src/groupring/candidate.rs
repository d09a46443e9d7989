use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// The 36 free bits `a_1 .. a_36` that determine every block of `tau_3(v)`.
///
/// Stored big-endian in a `u64`: `a_1` is bit 35, `a_36` is bit 0, so the
/// integer order is the lexicographic order of the bit string and the hex
/// form is 9 digits with `a_1` as the most significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "String", into = "String"))]
pub struct CandidateVector(u64);

impl CandidateVector {
    pub const BITS: usize = 36;
    pub const MASK: u64 = (1 << 36) - 1;

    pub fn new(bits: u64) -> Result<Self, Error> {
        if bits > Self::MASK {
            return Err(Error::InvalidCandidate(alloc::format!("{bits:#x} has more than 36 bits")));
        }
        Ok(Self(bits))
    }

    /// Keeps the low 36 bits.
    pub fn from_masked(bits: u64) -> Self {
        Self(bits & Self::MASK)
    }

    pub fn zero() -> Self {
        Self(0)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `a_i` for `i` in `1..=36`.
    pub fn a(self, i: usize) -> bool {
        assert!((1..=36).contains(&i), "candidate index a_{i} out of range");
        (self.0 >> (36 - i)) & 1 == 1
    }

    /// Parses a 36-character `0`/`1` string, `a_1` first. Separators
    /// `;`, `,` and whitespace are ignored so table groups can be passed directly.
    pub fn from_bit_string(s: &str) -> Result<Self, Error> {
        let mut bits = 0u64;
        let mut n = 0;
        for ch in s.chars() {
            let b = match ch {
                '0' => 0,
                '1' => 1,
                ';' | ',' => continue,
                c if c.is_whitespace() => continue,
                c => return Err(Error::InvalidCandidate(alloc::format!("unexpected character {c:?}"))),
            };
            n += 1;
            if n > 36 {
                break;
            }
            bits = (bits << 1) | b;
        }
        if n != 36 {
            return Err(Error::InvalidCandidate(alloc::format!("expected 36 bits, found {n}")));
        }
        Ok(Self(bits))
    }

    pub fn to_bit_string(self) -> String {
        (1..=36).map(|i| if self.a(i) { '1' } else { '0' }).collect()
    }

    /// 9 lowercase hex digits.
    pub fn to_hex(self) -> String {
        alloc::format!("{:09x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches("0x");
        if s.is_empty() || s.len() > 9 {
            return Err(Error::InvalidCandidate(alloc::format!("`{s}` is not 1..9 hex digits")));
        }
        let v = u64::from_str_radix(s, 16).map_err(|e| Error::InvalidCandidate(alloc::format!("`{s}`: {e}")))?;
        Self::new(v)
    }

    pub fn flip(self, i: usize) -> Self {
        assert!((1..=36).contains(&i));
        Self(self.0 ^ (1 << (36 - i)))
    }
}

impl fmt::Debug for CandidateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CandidateVector({})", self.to_hex())
    }
}

impl fmt::Display for CandidateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromStr for CandidateVector {
    type Err = Error;

    /// Accepts either 9 hex digits or a 36-bit `0`/`1` string.
    fn from_str(s: &str) -> Result<Self, Error> {
        let digits = s.chars().filter(|c| !matches!(c, ';' | ',') && !c.is_whitespace()).count();
        if digits == 36 {
            Self::from_bit_string(s)
        } else {
            Self::from_hex(s)
        }
    }
}

impl TryFrom<String> for CandidateVector {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        Self::from_hex(&s)
    }
}

impl From<CandidateVector> for String {
    fn from(c: CandidateVector) -> String {
        c.to_hex()
    }
}
