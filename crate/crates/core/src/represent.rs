//! Deciding whether a target string is generable from a string set, with a CNF witness.
//!
//! For every 1-based position `i`, `T_i` is the set of strings with a 0 at `i` and `t_i` is the
//! OR of `T_i`. A target `s != 1` is generable iff every `T_i` with `i` in `Zero(s)` is nonempty
//! and the AND of those `t_i` equals `s`. The target `1` is generable iff the OR of all strings
//! is `1`.

use std::collections::HashSet;

use crate::bitcore::{BitString, StringSet};
use crate::error::{Error, Result};
use crate::formula::{CnfFormula, Literal};

/// The per-position zero sets `T_i` and their joins `t_i`.
#[derive(Clone, Debug)]
pub struct ZeroFamily {
    width: usize,
    members: Vec<Vec<usize>>,
    joins: Vec<Option<BitString>>,
}

impl ZeroFamily {
    pub fn width(&self) -> usize {
        self.width
    }

    /// Indices of the strings with a 0 at 1-based `position`.
    pub fn members(&self, position: usize) -> &[usize] {
        &self.members[position - 1]
    }

    /// OR of the strings with a 0 at 1-based `position`; `None` when there are none.
    pub fn join(&self, position: usize) -> Option<&BitString> {
        self.joins[position - 1].as_ref()
    }
}

pub fn build_family(w: &StringSet) -> Result<ZeroFamily> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let width = w.width();
    let mut members = vec![Vec::new(); width];
    for (j, s) in w.iter().enumerate() {
        for k in s.iter_zeros() {
            members[k].push(j);
        }
    }
    let joins = members
        .iter()
        .map(|idx| {
            if idx.is_empty() {
                return None;
            }
            let mut join = BitString::zeros(width);
            for &j in idx {
                join.or_assign(&w.strings()[j]);
            }
            Some(join)
        })
        .collect();
    Ok(ZeroFamily {
        width,
        members,
        joins,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub representable: bool,
    /// Present iff `representable`; evaluates to the target over the queried set.
    pub witness: Option<CnfFormula>,
}

impl Verdict {
    fn no() -> Self {
        Verdict {
            representable: false,
            witness: None,
        }
    }
}

/// Decides whether `s` is generable from `w` with AND/OR, in `O(m^2 n)` bit operations.
pub fn decide(w: &StringSet, s: &BitString) -> Result<Verdict> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    w.check_target(s)?;

    if s.is_all_ones() {
        if !w.join_all().is_all_ones() {
            return Ok(Verdict::no());
        }
        let clause = (0..w.len()).map(Literal::pos).collect();
        return Ok(Verdict {
            representable: true,
            witness: Some(CnfFormula::new(vec![clause])),
        });
    }

    let (m, n) = (w.width(), w.len());
    let row_words = s.words().len();
    let col_words = n.div_ceil(64);
    // W as one row-major word matrix, and its zero bits inside Zero(s) transposed so that
    // column k marks the strings with a 0 at position k.
    let rows: Vec<u64> = w.iter().flat_map(|x| x.words().iter().copied()).collect();
    let mut columns = vec![0u64; m * col_words];
    for j in 0..n {
        let row = &rows[j * row_words..(j + 1) * row_words];
        for (wi, (&x, &t)) in row.iter().zip(s.words()).enumerate() {
            let mut zeros = !x & !t;
            if wi == row_words - 1 && m % 64 != 0 {
                zeros &= (1u64 << (m % 64)) - 1;
            }
            for k in set_bits(&[zeros]) {
                columns[(wi * 64 + k) * col_words + j / 64] |= 1u64 << (j % 64);
            }
        }
    }

    let mut meet = vec![u64::MAX; row_words];
    let mut join = vec![0u64; row_words];
    let mut clauses: Vec<&[u64]> = Vec::new();
    let mut seen: HashSet<&[u64]> = HashSet::new();
    for k in s.iter_zeros() {
        let members = &columns[k * col_words..(k + 1) * col_words];
        // An empty T_i has no formula at all; treating its join as 0 would accept too much.
        if members.iter().all(|&c| c == 0) {
            return Ok(Verdict::no());
        }
        if !seen.insert(members) {
            continue;
        }
        join.fill(0);
        for j in set_bits(members) {
            for (acc, &x) in join
                .iter_mut()
                .zip(&rows[j * row_words..(j + 1) * row_words])
            {
                *acc |= x;
            }
        }
        for (acc, &x) in meet.iter_mut().zip(&join) {
            *acc &= x;
        }
        clauses.push(members);
    }

    if BitString::from_words(m, meet) != *s {
        return Ok(Verdict::no());
    }
    let clauses = clauses
        .into_iter()
        .map(|c| {
            let mut clause = Vec::with_capacity(c.iter().map(|x| x.count_ones() as usize).sum());
            clause.extend(set_bits(c).map(Literal::pos));
            clause
        })
        .collect();
    Ok(Verdict {
        representable: true,
        witness: Some(CnfFormula::new(clauses)),
    })
}

/// Offsets of the one bits in a packed word slice, ascending.
#[inline]
fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + k)
        })
    })
}

/// `w` followed by the complements of its members, duplicates removed, together with the
/// literal each augmented entry stands for.
pub fn augment_with_complements(w: &StringSet) -> Result<(StringSet, Vec<Literal>)> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut seen = HashSet::new();
    let mut strings = Vec::new();
    let mut literals = Vec::new();
    let candidates = w
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), Literal::pos(i)))
        .chain(
            w.iter()
                .enumerate()
                .map(|(i, x)| (x.not(), Literal::neg(i))),
        );
    for (x, lit) in candidates {
        if seen.insert(x.clone()) {
            strings.push(x);
            literals.push(lit);
        }
    }
    Ok((StringSet::new(strings)?, literals))
}

/// Decides generability when NOT is also allowed, by deciding over `w` plus complements.
/// Witness leaves that stand for complements are reported as negated original indices.
pub fn decide_with_negation(w: &StringSet, s: &BitString) -> Result<Verdict> {
    let (augmented, literals) = augment_with_complements(w)?;
    let verdict = decide(&augmented, s)?;
    let witness = verdict.witness.map(|cnf| {
        CnfFormula::new(
            cnf.clauses()
                .iter()
                .map(|clause| clause.iter().map(|l| literals[l.index]).collect())
                .collect(),
        )
    });
    Ok(Verdict {
        representable: verdict.representable,
        witness,
    })
}

/// Dispatches to [`decide`] or [`decide_with_negation`].
pub fn decide_with(w: &StringSet, s: &BitString, allow_negation: bool) -> Result<Verdict> {
    if allow_negation {
        decide_with_negation(w, s)
    } else {
        decide(w, s)
    }
}
