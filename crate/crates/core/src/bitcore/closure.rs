//! Brute-force closure of a string set under AND/OR, used as the ground-truth oracle.

use std::collections::{BTreeSet, HashSet};

use super::{BitString, StringSet};
use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_LIMIT: usize = 1 << 20;

/// Every string generable from `w` (and its complements when `allow_negation` is set) with
/// bitwise AND and OR.
///
/// The lattice generated by the seeds is distributive, so it equals the OR-closure of the
/// AND-closure of the seeds. Each stage is a least fixpoint built one generator at a time:
/// after folding in generator `g`, the members are exactly the combinations of some nonempty
/// subset of the generators seen so far.
pub fn closure(w: &StringSet, allow_negation: bool, limit: usize) -> Result<BTreeSet<BitString>> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    if w.width() == 0 {
        return Err(Error::ZeroWidth);
    }
    let mut seeds: Vec<BitString> = w.strings().to_vec();
    if allow_negation {
        seeds.extend(w.iter().map(BitString::not));
    }
    let mut seen = HashSet::new();
    seeds.retain(|s| seen.insert(s.clone()));
    if seeds.len() > limit {
        return Err(Error::LimitExceeded { limit });
    }

    let meets = fixpoint(&seeds, BitString::and_unchecked, limit)?;
    let full = fixpoint(&meets, BitString::or_unchecked, limit)?;
    Ok(full.into_iter().collect())
}

fn fixpoint(
    generators: &[BitString],
    op: fn(&BitString, &BitString) -> BitString,
    limit: usize,
) -> Result<Vec<BitString>> {
    let mut members: Vec<BitString> = Vec::new();
    let mut index: HashSet<BitString> = HashSet::new();
    for g in generators {
        let mut fresh = Vec::new();
        if index.insert(g.clone()) {
            fresh.push(g.clone());
        }
        for m in &members {
            let combined = op(m, g);
            if !index.contains(&combined) {
                index.insert(combined.clone());
                fresh.push(combined);
            }
        }
        members.append(&mut fresh);
        if members.len() > limit {
            return Err(Error::LimitExceeded { limit });
        }
    }
    Ok(members)
}
