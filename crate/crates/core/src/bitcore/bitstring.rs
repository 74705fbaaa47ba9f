//! Fixed-length bit strings packed into `u64` words.
//!
//! Bit position `k` (0-based) lives in word `k / 64` at bit `k % 64`, least significant bit
//! first. Externally, positions are reported 1-based so that the leftmost character of the
//! textual form is position 1. Padding bits beyond the length are always zero.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(len: usize) -> u64 {
    match len % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut s = BitString {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        s.mask_tail();
        s
    }

    /// Builds a string whose bit `k` (0-based) is `f(k)`.
    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut s = BitString::zeros(len);
        for k in 0..len {
            if f(k) {
                s.words[k / WORD_BITS] |= 1 << (k % WORD_BITS);
            }
        }
        s
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        BitString::from_fn(bits.len(), |k| bits[k])
    }

    /// Builds a string of `len` bits with ones exactly at the given 0-based offsets.
    ///
    /// Panics if an offset is out of range.
    pub fn from_offsets(len: usize, offsets: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitString::zeros(len);
        for k in offsets {
            assert!(k < len, "offset {k} out of range for length {len}");
            s.words[k / WORD_BITS] |= 1 << (k % WORD_BITS);
        }
        s
    }

    /// Builds a string from packed words. Bits beyond `len` are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut s = BitString { len, words };
        s.mask_tail();
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bit at 0-based offset `k`.
    #[inline]
    pub fn get(&self, k: usize) -> bool {
        assert!(
            k < self.len,
            "offset {k} out of range for length {}",
            self.len
        );
        self.words[k / WORD_BITS] >> (k % WORD_BITS) & 1 == 1
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.and_unchecked(other))
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.or_unchecked(other))
    }

    pub fn not(&self) -> Self {
        let mut out = BitString {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.mask_tail();
        out
    }

    pub(crate) fn and_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        BitString {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub(crate) fn or_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        BitString {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    #[inline]
    pub(crate) fn and_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub(crate) fn or_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Clears every bit that is set in `other`.
    #[inline]
    pub(crate) fn difference_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub(crate) fn set(&mut self, k: usize, value: bool) {
        assert!(k < self.len);
        let bit = 1u64 << (k % WORD_BITS);
        if value {
            self.words[k / WORD_BITS] |= bit;
        } else {
            self.words[k / WORD_BITS] &= !bit;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    /// Number of ones shared with `other`.
    pub fn count_and(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_all_ones(&self) -> bool {
        self.count_ones() == self.len
    }

    pub fn is_all_zeros(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when every one of `self` is also a one of `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// 0-based offsets of the one bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + tz)
            })
        })
    }

    /// 0-based offsets of the zero bits, ascending.
    pub fn iter_zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&k| !self.get(k))
    }

    /// `Zero(x)`: the 1-based positions holding a 0.
    pub fn zero_set(&self) -> IndexSet {
        self.iter_zeros().map(|k| k + 1).collect()
    }

    /// `One(x)`: the 1-based positions holding a 1.
    pub fn one_set(&self) -> IndexSet {
        self.iter_ones().map(|k| k + 1).collect()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    fn mask_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.len);
        }
    }
}

/// Lexicographic order on the textual form (shorter strings first), so `"0011" < "0101"`.
impl Ord for BitString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let lowest = diff & diff.wrapping_neg();
                    return if a & lowest == 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = (0..self.len)
            .map(|k| if self.get(k) { '1' } else { '0' })
            .collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    /// Parses a `'0'`/`'1'` literal. The empty literal is rejected.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::parse(1, "empty bit string"));
        }
        let mut bits = Vec::with_capacity(text.len());
        for (col, ch) in text.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::parse(
                        1,
                        format!("unexpected character {other:?} at column {}", col + 1),
                    ))
                }
            }
        }
        Ok(BitString::from_bools(&bits))
    }
}

/// A set of 1-based bit positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(BTreeSet<usize>);

impl IndexSet {
    pub fn new() -> Self {
        IndexSet::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.contains(&position)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IndexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for IndexSet {
    fn from(items: [usize; N]) -> Self {
        IndexSet(items.into_iter().collect())
    }
}
