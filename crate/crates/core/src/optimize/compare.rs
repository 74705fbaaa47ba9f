//! Compare sets: item subsets that preserve every inclusion and non-inclusion among a family
//! of subsets. `X` is a compare set iff it meets `b_i \ b_j` for every pair where that
//! difference is nonempty, so greedy hitting set applies.

use crate::bitcore::BitString;
use crate::error::{Error, Result};

use super::SubsetAnswer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareInstance {
    item_count: usize,
    /// Each an indicator over items `0..item_count`.
    subsets: Vec<BitString>,
}

impl CompareInstance {
    /// Builds an instance from 0-based item lists.
    pub fn from_lists(item_count: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let subsets = lists
            .iter()
            .map(|list| {
                if let Some(&bad) = list.iter().find(|&&a| a >= item_count) {
                    return Err(Error::InvalidElement {
                        element: bad,
                        universe: item_count,
                    });
                }
                Ok(BitString::from_offsets(item_count, list.iter().copied()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CompareInstance {
            item_count,
            subsets,
        })
    }

    pub fn item_count(&self) -> usize {
        self.item_count
    }

    pub fn subsets(&self) -> &[BitString] {
        &self.subsets
    }

    /// The subsets as sorted 0-based item lists.
    pub fn subset_lists(&self) -> Vec<Vec<usize>> {
        self.subsets
            .iter()
            .map(|b| b.iter_ones().collect())
            .collect()
    }

    /// Checks the defining property directly: `b_i ⊆ b_j` iff `b_i ∩ X ⊆ b_j ∩ X`.
    pub fn is_compare_set(&self, items: &[usize]) -> bool {
        let x = BitString::from_offsets(self.item_count, items.iter().copied());
        let restricted: Vec<BitString> = self.subsets.iter().map(|b| b.and_unchecked(&x)).collect();
        for i in 0..self.subsets.len() {
            for j in 0..self.subsets.len() {
                let before = self.subsets[i].is_subset_of(&self.subsets[j]);
                let after = restricted[i].is_subset_of(&restricted[j]);
                if before != after {
                    return false;
                }
            }
        }
        true
    }

    /// Every nonempty difference `b_i \ b_j` over ordered pairs of subsets.
    fn demands(&self) -> Vec<BitString> {
        let mut out = Vec::new();
        for (i, bi) in self.subsets.iter().enumerate() {
            for (j, bj) in self.subsets.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut d = bi.clone();
                d.difference_assign(bj);
                if !d.is_all_zeros() {
                    out.push(d);
                }
            }
        }
        out
    }
}

/// Greedy hitting set over the pairwise differences: repeatedly take the item that hits the
/// most unhit differences, ties to the lowest item index.
pub fn greedy_compare_set(inst: &CompareInstance) -> SubsetAnswer {
    let demands = inst.demands();
    let mut hit = vec![false; demands.len()];
    let mut chosen = Vec::new();
    loop {
        let mut scores = vec![0usize; inst.item_count];
        for (d, _) in demands.iter().zip(&hit).filter(|(_, &h)| !h) {
            for a in d.iter_ones() {
                scores[a] += 1;
            }
        }
        // max_by_key keeps the last maximum, so scan in reverse to prefer low indices.
        let Some((item, &score)) = scores.iter().enumerate().rev().max_by_key(|(_, &s)| s) else {
            break;
        };
        if score == 0 {
            break;
        }
        chosen.push(item);
        for (d, h) in demands.iter().zip(hit.iter_mut()) {
            if d.get(item) {
                *h = true;
            }
        }
    }
    let certified = inst.is_compare_set(&chosen);
    SubsetAnswer::new(chosen, certified)
}

/// A set-cover instance over the universe `1..=universe_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MscInstance {
    pub universe_size: usize,
    /// 1-based elements per family member.
    pub family: Vec<Vec<usize>>,
}

impl MscInstance {
    pub fn new(universe_size: usize, family: Vec<Vec<usize>>) -> Result<Self> {
        for &e in family.iter().flatten() {
            if !(1..=universe_size).contains(&e) {
                return Err(Error::InvalidElement {
                    element: e,
                    universe: universe_size,
                });
            }
        }
        Ok(MscInstance {
            universe_size,
            family,
        })
    }

    /// Parses `m n` followed by `n` lines of space-separated 1-based elements. Lines starting
    /// with `#` are skipped; a blank line inside the body is an empty family member.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#'));
        let (header_no, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| Error::parse(1, "missing \"m n\" header"))?;
        let number = |lineno: usize, tok: &str| {
            tok.parse::<usize>().map_err(|_| {
                Error::parse(lineno + 1, format!("expected an integer, found {tok:?}"))
            })
        };
        let head: Vec<&str> = header.split_whitespace().collect();
        let [m, n] = head.as_slice() else {
            return Err(Error::parse(header_no + 1, "header must be \"m n\""));
        };
        let (m, n) = (number(header_no, m)?, number(header_no, n)?);
        let mut family = Vec::with_capacity(n);
        for (lineno, line) in lines {
            if family.len() == n {
                if line.trim().is_empty() {
                    continue;
                }
                return Err(Error::parse(
                    lineno + 1,
                    format!("more than {n} family lines"),
                ));
            }
            let members = line
                .split_whitespace()
                .map(|tok| number(lineno, tok))
                .collect::<Result<Vec<_>>>()?;
            if let Some(&bad) = members.iter().find(|&&e| !(1..=m).contains(&e)) {
                return Err(Error::InvalidElement {
                    element: bad,
                    universe: m,
                });
            }
            family.push(members);
        }
        if family.len() != n {
            return Err(Error::parse(
                text.lines().count().max(1),
                format!("expected {n} family lines, found {}", family.len()),
            ));
        }
        Ok(MscInstance {
            universe_size: m,
            family,
        })
    }
}

/// The compare-set instance whose optimum is `universe_size` plus the set-cover optimum, for
/// universes of at least two elements. With one element nothing forces item 0 into a compare
/// set, so the optimum is the set-cover optimum alone.
///
/// Items `0..m` stand for the universe elements and `m..m+n` for the family members. Subset
/// `i < m` holds item `i` and every family item whose member contains element `i + 1`; subset
/// `m + i` holds item `i` alone.
pub fn msc_to_mcs(universe_size: usize, family: &[Vec<usize>]) -> Result<CompareInstance> {
    let m = universe_size;
    let n = family.len();
    let mut lists: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
    for (j, member) in family.iter().enumerate() {
        for &e in member {
            if !(1..=m).contains(&e) {
                return Err(Error::InvalidElement {
                    element: e,
                    universe: m,
                });
            }
            lists[e - 1].push(m + j);
        }
    }
    for list in lists.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    lists.extend((0..m).map(|i| vec![i]));
    CompareInstance::from_lists(m + n, &lists)
}
