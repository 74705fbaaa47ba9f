use std::fmt::Write as _;

use crate::bitcore::BitString;
use crate::error::{Error, Result};

/// A finite partial order over elements `0..size()`.
pub trait Poset {
    fn size(&self) -> usize;

    /// Whether element `a` precedes or equals element `b`.
    fn leq(&self, a: usize, b: usize) -> bool;

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }
}

/// Checks reflexivity, antisymmetry and transitivity directly on the relation.
pub fn is_partial_order<P: Poset + ?Sized>(p: &P) -> bool {
    let n = p.size();
    for a in 0..n {
        if !p.leq(a, a) {
            return false;
        }
        for b in 0..n {
            if a != b && p.leq(a, b) && p.leq(b, a) {
                return false;
            }
            if !p.leq(a, b) {
                continue;
            }
            for c in 0..n {
                if p.leq(b, c) && !p.leq(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// A poset given by explicit relations, stored as a reflexive-transitive closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractPoset {
    /// `above[a]` has bit `b` set iff `a <= b`.
    above: Vec<BitString>,
}

impl AbstractPoset {
    /// Builds the poset on `1..=size` generated by the 1-based pairs `(i, j)` meaning `i <= j`.
    pub fn new(size: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidPoset(
                "a poset needs at least one element".into(),
            ));
        }
        let mut above: Vec<BitString> = (0..size)
            .map(|a| BitString::from_offsets(size, [a]))
            .collect();
        for (i, j) in relations {
            if !(1..=size).contains(&i) || !(1..=size).contains(&j) {
                return Err(Error::InvalidPoset(format!(
                    "relation {i} {j} mentions an element outside 1..={size}"
                )));
            }
            above[i - 1].set(j - 1, true);
        }
        // Warshall, one row at a time.
        for k in 0..size {
            let row_k = above[k].clone();
            for row in above.iter_mut() {
                if row.get(k) {
                    row.or_assign(&row_k);
                }
            }
        }
        for a in 0..size {
            for b in above[a].iter_ones() {
                if a != b && above[b].get(a) {
                    return Err(Error::InvalidPoset(format!(
                        "elements {} and {} precede each other",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(AbstractPoset { above })
    }

    /// The `p`-element antichain.
    pub fn antichain(size: usize) -> Result<Self> {
        AbstractPoset::new(size, [])
    }

    /// The chain `1 <= 2 <= ... <= size`.
    pub fn chain(size: usize) -> Result<Self> {
        AbstractPoset::new(size, (1..size).map(|i| (i, i + 1)))
    }

    /// Elements `b` with `a <= b`, as an indicator over `0..size`.
    pub fn up_set(&self, a: usize) -> &BitString {
        &self.above[a]
    }

    /// Parses the text format: first data line `p`, then lines `i j` asserting `i <= j`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut size = None;
        let mut relations = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let number = |tok: &str| {
                tok.parse::<usize>().map_err(|_| {
                    Error::parse(lineno + 1, format!("expected an integer, found {tok:?}"))
                })
            };
            match (size, fields.as_slice()) {
                (None, [p]) => size = Some(number(p)?),
                (None, _) => return Err(Error::parse(lineno + 1, "first line must hold the size")),
                (Some(_), [i, j]) => relations.push((number(i)?, number(j)?)),
                (Some(_), _) => return Err(Error::parse(lineno + 1, "expected a pair \"i j\"")),
            }
        }
        let size = size.ok_or_else(|| Error::parse(1, "missing poset size"))?;
        AbstractPoset::new(size, relations)
    }

    /// Emits the covering-free form: every non-reflexive pair of the closure.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.size());
        for (a, row) in self.above.iter().enumerate() {
            for b in row.iter_ones().filter(|&b| b != a) {
                writeln!(out, "{} {}", a + 1, b + 1).unwrap();
            }
        }
        out
    }
}

impl Poset for AbstractPoset {
    fn size(&self) -> usize {
        self.above.len()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a].get(b)
    }
}
