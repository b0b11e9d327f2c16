//! Fixed-length binary words.
//!
//! Bits are indexed `1..=len`, position 1 being the leftmost character of the
//! textual form. Internally the word is packed into a `u64` with position 1 in
//! the most significant of the `len` low bits, so numeric order on the packed
//! value coincides with lexicographic order on the text and the packed value
//! can be used directly as a dense index into `2^len` tables.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest supported word.
pub const MAX_LEN: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    /// Builds a word from its packed form; bits above `len` are rejected.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        if bits >> len != 0 {
            return Err(Error::WordTooLong(64 - bits.leading_zeros() as usize));
        }
        Ok(Self {
            bits,
            len: len as u8,
        })
    }

    pub(crate) fn from_bits_unchecked(bits: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&len) && bits >> len == 0);
        Self {
            bits,
            len: len as u8,
        }
    }

    /// The constant word `c^len`.
    pub fn constant(bit: bool, len: usize) -> Result<Self> {
        let bits = if bit { mask(len.min(MAX_LEN)) } else { 0 };
        Self::from_bits(bits, len)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Bit at 1-based position `i`.
    pub fn bit(&self, i: usize) -> Result<bool> {
        self.check_position(i)?;
        Ok(self.bit_unchecked(i))
    }

    pub(crate) fn bit_unchecked(&self, i: usize) -> bool {
        (self.bits >> (self.len() - i)) & 1 == 1
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            Err(Error::PositionOutOfRange {
                position: i,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `self + e_i`: complements the bit at position `i`.
    pub fn flip(&self, i: usize) -> Result<Self> {
        self.check_position(i)?;
        Ok(self.flip_unchecked(i))
    }

    pub(crate) fn flip_unchecked(&self, i: usize) -> Self {
        Self {
            bits: self.bits ^ (1 << (self.len() - i)),
            len: self.len,
        }
    }

    pub fn reverse(&self) -> Self {
        let bits = self.bits.reverse_bits() >> (64 - self.len());
        Self {
            bits,
            len: self.len,
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & mask(self.len()),
            len: self.len,
        }
    }

    pub fn hamming(&self, other: &Word) -> Result<usize> {
        self.same_len(other)?;
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    /// Ascending positions where the two words differ.
    pub fn differing_positions(&self, other: &Word) -> Result<Vec<usize>> {
        self.same_len(other)?;
        let n = self.len();
        let diff = self.bits ^ other.bits;
        Ok((1..=n).filter(|&i| (diff >> (n - i)) & 1 == 1).collect())
    }

    fn same_len(&self, other: &Word) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Does `factor` occur starting at 1-based `offset`?
    pub fn has_factor_at(&self, factor: &Word, offset: usize) -> bool {
        let (n, m) = (self.len(), factor.len());
        if offset == 0 || m > n || offset > n - m + 1 {
            return false;
        }
        (self.bits >> (n - m - (offset - 1))) & mask(m) == factor.bits
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        let (n, m) = (self.len(), factor.len());
        if m > n {
            return false;
        }
        let fm = mask(m);
        (0..=n - m).any(|shift| (self.bits >> shift) & fm == factor.bits)
    }

    /// All 1-based offsets at which `factor` occurs, ascending.
    pub fn factor_offsets(&self, factor: &Word) -> Vec<usize> {
        let (n, m) = (self.len(), factor.len());
        if m > n {
            return Vec::new();
        }
        (1..=n - m + 1)
            .filter(|&o| self.has_factor_at(factor, o))
            .collect()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        Ok(Self::from_bits_unchecked(
            (self.bits << other.len()) | other.bits,
            len,
        ))
    }

    /// Every word of length `len` in lexicographic order.
    pub fn all(len: usize) -> impl DoubleEndedIterator<Item = Word> {
        assert!(
            (1..=MAX_LEN).contains(&len),
            "word length {len} out of range"
        );
        (0..1u64 << len).map(move |bits| Word::from_bits_unchecked(bits, len))
    }
}

pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Ord for Word {
    /// Lexicographic on the text; shorter words sort first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut bits = 0u64;
        let mut len = 0usize;
        for (idx, c) in s.chars().enumerate() {
            let b = match c {
                '0' => 0,
                '1' => 1,
                found => {
                    return Err(Error::InvalidCharacter {
                        found,
                        position: idx + 1,
                    })
                }
            };
            len += 1;
            if len > MAX_LEN {
                return Err(Error::WordTooLong(s.chars().count()));
            }
            bits = (bits << 1) | b;
        }
        Ok(Self::from_bits_unchecked(bits, len))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        let s: String = (1..=n)
            .map(|i| if self.bit_unchecked(i) { '1' } else { '0' })
            .collect();
        f.pad(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<Word> for String {
    fn from(w: Word) -> Self {
        w.to_string()
    }
}

/// A forbidden factor `f`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Pattern(Word);

impl Pattern {
    pub fn new(word: Word) -> Self {
        Pattern(word)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reverse(&self) -> Self {
        Pattern(self.0.reverse())
    }

    pub fn complement(&self) -> Self {
        Pattern(self.0.complement())
    }

    /// `ff`.
    pub fn doubled(&self) -> Result<Self> {
        Ok(Pattern(self.0.concat(&self.0)?))
    }

    /// Value of `f_1`.
    pub fn first_bit(&self) -> bool {
        self.0.bit_unchecked(1)
    }

    /// Every pattern of length `len`, lexicographic order.
    pub fn all(len: usize) -> impl DoubleEndedIterator<Item = Pattern> {
        Word::all(len).map(Pattern)
    }

    /// Every pattern of length `1..=max_len`, shorter first.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Pattern> {
        (1..=max_len).flat_map(Pattern::all)
    }
}

impl From<Word> for Pattern {
    fn from(w: Word) -> Self {
        Pattern(w)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(Pattern)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.0)
    }
}

/// `u` contains `f` as |f| consecutive bits.
pub fn contains_factor(u: &Word, f: &Pattern) -> bool {
    u.contains_factor(f.word())
}

pub fn factor_offsets(u: &Word, f: &Pattern) -> Vec<usize> {
    u.factor_offsets(f.word())
}

pub fn hamming(a: &Word, b: &Word) -> Result<usize> {
    a.hamming(b)
}

pub fn differing_positions(a: &Word, b: &Word) -> Result<Vec<usize>> {
    a.differing_positions(b)
}
