use crate::bitcore::BitString;
use crate::error::{Error, Result};

use super::SubsetAnswer;

/// One candidate subset of a cover instance, tagged with the index it answers for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSet {
    pub tag: usize,
    /// Indicator over the universe `0..universe_size`.
    pub elements: BitString,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInstance {
    universe_size: usize,
    subsets: Vec<CoverSet>,
}

impl CoverInstance {
    pub fn new(universe_size: usize, subsets: Vec<CoverSet>) -> Result<Self> {
        if let Some(bad) = subsets.iter().find(|s| s.elements.len() != universe_size) {
            return Err(Error::LengthMismatch {
                expected: universe_size,
                found: bad.elements.len(),
            });
        }
        Ok(CoverInstance {
            universe_size,
            subsets,
        })
    }

    /// Builds an instance from 1-based element lists; subset `k` gets tag `k`.
    pub fn from_lists(universe_size: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let subsets = lists
            .iter()
            .enumerate()
            .map(|(tag, list)| {
                for &e in list {
                    if !(1..=universe_size).contains(&e) {
                        return Err(Error::InvalidElement {
                            element: e,
                            universe: universe_size,
                        });
                    }
                }
                let elements = BitString::from_offsets(universe_size, list.iter().map(|e| e - 1));
                Ok(CoverSet { tag, elements })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverInstance {
            universe_size,
            subsets,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn subsets(&self) -> &[CoverSet] {
        &self.subsets
    }

    fn union(&self) -> BitString {
        let mut acc = BitString::zeros(self.universe_size);
        for s in &self.subsets {
            acc.or_assign(&s.elements);
        }
        acc
    }

    /// Tags in the order the greedy rule picks them.
    pub(crate) fn greedy_order(&self) -> Result<Vec<usize>> {
        if !self.union().is_all_ones() {
            return Err(Error::Uncoverable);
        }
        let mut uncovered = BitString::ones(self.universe_size);
        let mut used = vec![false; self.subsets.len()];
        let mut picks = Vec::new();
        while !uncovered.is_all_zeros() {
            let mut best: Option<(usize, usize)> = None;
            for (k, s) in self.subsets.iter().enumerate() {
                if used[k] {
                    continue;
                }
                let gain = s.elements.count_and(&uncovered);
                let better = match best {
                    None => gain > 0,
                    Some((bk, bgain)) => {
                        gain > bgain || (gain == bgain && s.tag < self.subsets[bk].tag)
                    }
                };
                if better {
                    best = Some((k, gain));
                }
            }
            let (k, _) = best.ok_or(Error::Uncoverable)?;
            used[k] = true;
            uncovered.difference_assign(&self.subsets[k].elements);
            picks.push(self.subsets[k].tag);
        }
        Ok(picks)
    }
}

/// Classic greedy: repeatedly take the subset covering the most uncovered elements, ties to
/// the lowest tag. The result is within a factor `H(largest subset)` of optimal.
pub fn greedy_set_cover(inst: &CoverInstance) -> Result<SubsetAnswer> {
    let picks = inst.greedy_order()?;
    let mut covered = BitString::zeros(inst.universe_size);
    for s in inst.subsets.iter().filter(|s| picks.contains(&s.tag)) {
        covered.or_assign(&s.elements);
    }
    Ok(SubsetAnswer::new(picks, covered.is_all_ones()))
}
