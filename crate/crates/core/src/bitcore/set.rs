use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::BitString;
use crate::error::{Error, Result};

/// An ordered list of equal-length strings. Each string keeps its 0-based input index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringSet {
    width: usize,
    strings: Vec<BitString>,
}

impl StringSet {
    /// Rejects empty lists, zero-width strings and ragged lengths.
    pub fn new(strings: Vec<BitString>) -> Result<Self> {
        let first = strings.first().ok_or(Error::EmptySet)?;
        let width = first.len();
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        if let Some(bad) = strings.iter().find(|s| s.len() != width) {
            return Err(Error::LengthMismatch {
                expected: width,
                found: bad.len(),
            });
        }
        Ok(StringSet { width, strings })
    }

    /// Convenience constructor from `'0'`/`'1'` literals.
    pub fn from_literals<S: AsRef<str>>(literals: &[S]) -> Result<Self> {
        let strings = literals
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<BitString>>>()?;
        StringSet::new(strings)
    }

    /// A set of `n` zero-width strings; only produced by [`normalize`].
    fn degenerate(n: usize) -> Self {
        StringSet {
            width: 0,
            strings: vec![BitString::zeros(0); n],
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of strings `n`, duplicates included.
    #[inline]
    pub fn len(&self) -> usize {
        self.strings.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    #[inline]
    pub fn get(&self, index: usize) -> Option<&BitString> {
        self.strings.get(index)
    }

    #[inline]
    pub fn strings(&self) -> &[BitString] {
        &self.strings
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BitString> {
        self.strings.iter()
    }

    /// The strings at `indices`, in the order given.
    pub fn select(&self, indices: &[usize]) -> Result<StringSet> {
        let strings = indices
            .iter()
            .map(|&i| {
                self.strings.get(i).cloned().ok_or(Error::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if strings.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(StringSet {
            width: self.width,
            strings,
        })
    }

    /// Bitwise OR of every member.
    pub fn join_all(&self) -> BitString {
        let mut acc = BitString::zeros(self.width);
        for s in &self.strings {
            acc.or_assign(s);
        }
        acc
    }

    /// Bitwise AND of every member.
    pub fn meet_all(&self) -> BitString {
        let mut acc = BitString::ones(self.width);
        for s in &self.strings {
            acc.and_assign(s);
        }
        acc
    }

    /// Indicator over string indices of the strings with a 0 at 0-based column `k`.
    pub fn zero_members(&self, k: usize) -> BitString {
        BitString::from_fn(self.len(), |j| !self.strings[j].get(k))
    }

    pub(crate) fn check_target(&self, target: &BitString) -> Result<()> {
        if self.width == 0 {
            return Err(Error::ZeroWidth);
        }
        if target.len() != self.width {
            return Err(Error::LengthMismatch {
                expected: self.width,
                found: target.len(),
            });
        }
        Ok(())
    }

    /// Parses the line-oriented text format: one `'0'`/`'1'` string per line, `#` comments and
    /// blank lines skipped, the leftmost character being position 1.
    pub fn parse(text: &str) -> Result<Self> {
        let mut strings = Vec::new();
        let mut width = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let s: BitString = line.parse().map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(lineno + 1, message),
                other => other,
            })?;
            match width {
                None => width = Some(s.len()),
                Some(w) if w != s.len() => {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("expected {w} bits, found {}", s.len()),
                    ))
                }
                Some(_) => {}
            }
            strings.push(s);
        }
        StringSet::new(strings)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.strings {
            writeln!(out, "{s}").unwrap();
        }
        out
    }
}

/// Records which columns [`normalize`] kept and which constant value each dropped column had.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationMap {
    original_width: usize,
    /// 1-based original positions, ascending.
    kept_columns: Vec<usize>,
    /// 1-based original position -> constant value.
    forced_bits: BTreeMap<usize, bool>,
}

impl NormalizationMap {
    pub fn original_width(&self) -> usize {
        self.original_width
    }

    pub fn kept_columns(&self) -> &[usize] {
        &self.kept_columns
    }

    pub fn forced_bits(&self) -> &BTreeMap<usize, bool> {
        &self.forced_bits
    }

    /// Restricts an original-width string to the kept columns.
    pub fn project(&self, s: &BitString) -> Result<BitString> {
        if s.len() != self.original_width {
            return Err(Error::LengthMismatch {
                expected: self.original_width,
                found: s.len(),
            });
        }
        Ok(BitString::from_fn(self.kept_columns.len(), |k| {
            s.get(self.kept_columns[k] - 1)
        }))
    }

    /// Re-inserts the forced bits into a kept-width string.
    pub fn restore(&self, s: &BitString) -> Result<BitString> {
        if s.len() != self.kept_columns.len() {
            return Err(Error::LengthMismatch {
                expected: self.kept_columns.len(),
                found: s.len(),
            });
        }
        let mut out = BitString::zeros(self.original_width);
        for (k, &pos) in self.kept_columns.iter().enumerate() {
            out.set(pos - 1, s.get(k));
        }
        for (&pos, &value) in &self.forced_bits {
            out.set(pos - 1, value);
        }
        Ok(out)
    }
}

/// Drops every constant column so that no position is 0 in all strings and none is 1 in all
/// strings. If every column is constant the result has width 0.
pub fn normalize(w: &StringSet) -> Result<(StringSet, NormalizationMap)> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let all_and = w.meet_all();
    let all_or = w.join_all();
    let mut kept_columns = Vec::new();
    let mut forced_bits = BTreeMap::new();
    for k in 0..w.width() {
        match (all_and.get(k), all_or.get(k)) {
            (true, _) => {
                forced_bits.insert(k + 1, true);
            }
            (false, false) => {
                forced_bits.insert(k + 1, false);
            }
            (false, true) => kept_columns.push(k + 1),
        }
    }
    let map = NormalizationMap {
        original_width: w.width(),
        kept_columns,
        forced_bits,
    };
    let reduced = if map.kept_columns.is_empty() {
        StringSet::degenerate(w.len())
    } else {
        let strings = w
            .iter()
            .map(|s| map.project(s))
            .collect::<Result<Vec<_>>>()?;
        StringSet {
            width: map.kept_columns.len(),
            strings,
        }
    };
    Ok((reduced, map))
}
