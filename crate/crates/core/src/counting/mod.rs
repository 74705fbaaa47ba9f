//! Exact counting of generable strings.
//!
//! Positions with identical zero sets `T_i` form one class; classes are ordered by inclusion
//! of their zero sets. After constant columns are stripped, generable strings correspond one to
//! one with the upper sets of that order (a string maps to the classes of its zero positions),
//! and upper sets correspond one to one with antichains (an upper set maps to its minimal
//! elements). With NOT available, no two distinct classes are comparable, so the count is a
//! power of two.

mod poset;

use std::collections::HashMap;

use num_bigint::BigUint;

pub use poset::{is_partial_order, AbstractPoset, Poset};

use crate::bitcore::{normalize, BitString, StringSet};
use crate::error::{Error, Result};
use crate::represent::augment_with_complements;

/// Default cap on the number of poset elements the counting recursions accept.
pub const DEFAULT_ENUMERATION_BOUND: usize = 30;

/// The recursions index elements by bits of a `u64`.
const HARD_BOUND: usize = 64;

/// Positions sharing one zero set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionClass {
    /// 1-based positions of the original (un-normalized) input.
    pub positions: Vec<usize>,
    /// Indices of the strings with a 0 at these positions.
    pub members: Vec<usize>,
}

/// Classes of positions ordered by zero-set inclusion.
#[derive(Clone, Debug)]
pub struct ClassPoset {
    classes: Vec<PositionClass>,
    zero_sets: Vec<BitString>,
}

impl ClassPoset {
    pub fn classes(&self) -> &[PositionClass] {
        &self.classes
    }

    /// Number of pairs of distinct comparable classes.
    pub fn comparable_pairs(&self) -> usize {
        let n = self.size();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.comparable(a, b))
            .count()
    }
}

impl Poset for ClassPoset {
    fn size(&self) -> usize {
        self.classes.len()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.zero_sets[a].is_subset_of(&self.zero_sets[b])
    }
}

/// Strips constant columns, then groups the remaining positions by zero set. Classes appear
/// in order of their first position.
pub fn build_poset(w: &StringSet) -> Result<ClassPoset> {
    let (reduced, map) = normalize(w)?;
    let mut index: HashMap<BitString, usize> = HashMap::new();
    let mut classes: Vec<PositionClass> = Vec::new();
    let mut zero_sets = Vec::new();
    for k in 0..reduced.width() {
        let zeros = reduced.zero_members(k);
        let position = map.kept_columns()[k];
        match index.get(&zeros) {
            Some(&c) => classes[c].positions.push(position),
            None => {
                index.insert(zeros.clone(), classes.len());
                classes.push(PositionClass {
                    positions: vec![position],
                    members: zeros.iter_ones().collect(),
                });
                zero_sets.push(zeros);
            }
        }
    }
    Ok(ClassPoset { classes, zero_sets })
}

fn check_bound<P: Poset + ?Sized>(p: &P, bound: usize) -> Result<()> {
    let bound = bound.min(HARD_BOUND);
    if p.size() > bound {
        return Err(Error::TooLarge {
            size: p.size(),
            bound,
        });
    }
    Ok(())
}

pub fn count_antichains<P: Poset + ?Sized>(p: &P) -> Result<BigUint> {
    count_antichains_bounded(p, DEFAULT_ENUMERATION_BOUND)
}

/// Counts antichains: those avoiding an element `x`, plus those containing `x` (which then
/// avoid everything comparable to `x`). Memoized on the mask of surviving elements.
pub fn count_antichains_bounded<P: Poset + ?Sized>(p: &P, bound: usize) -> Result<BigUint> {
    check_bound(p, bound)?;
    let n = p.size();
    let comparable: Vec<u64> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| b != a && p.comparable(a, b))
                .fold(0, |m, b| m | 1 << b)
        })
        .collect();

    fn go(mask: u64, comparable: &[u64], memo: &mut HashMap<u64, u128>) -> u128 {
        if mask == 0 {
            return 1;
        }
        if let Some(&hit) = memo.get(&mask) {
            return hit;
        }
        let x = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << x);
        let total = go(rest, comparable, memo) + go(rest & !comparable[x], comparable, memo);
        memo.insert(mask, total);
        total
    }

    let mut memo = HashMap::new();
    Ok(BigUint::from(go(full_mask(n), &comparable, &mut memo)))
}

pub fn count_upper_sets<P: Poset + ?Sized>(p: &P) -> Result<BigUint> {
    count_upper_sets_bounded(p, DEFAULT_ENUMERATION_BOUND)
}

/// Counts upper sets by splitting on a minimal element `x` of the surviving elements: either
/// `x` is absent (drop `x`), or `x` is present and so is everything above it (drop the whole
/// up-set of `x`).
pub fn count_upper_sets_bounded<P: Poset + ?Sized>(p: &P, bound: usize) -> Result<BigUint> {
    check_bound(p, bound)?;
    let n = p.size();
    let up: Vec<u64> = (0..n)
        .map(|a| (0..n).filter(|&b| p.leq(a, b)).fold(0, |m, b| m | 1 << b))
        .collect();
    let strictly_below: Vec<u64> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| b != a && p.leq(b, a))
                .fold(0, |m, b| m | 1 << b)
        })
        .collect();

    fn go(mask: u64, up: &[u64], below: &[u64], memo: &mut HashMap<u64, u128>) -> u128 {
        if mask == 0 {
            return 1;
        }
        if let Some(&hit) = memo.get(&mask) {
            return hit;
        }
        let x = (0..up.len())
            .find(|&x| mask >> x & 1 == 1 && below[x] & mask == 0)
            .expect("a finite nonempty poset has a minimal element");
        let total = go(mask & !(1 << x), up, below, memo) + go(mask & !up[x], up, below, memo);
        memo.insert(mask, total);
        total
    }

    let mut memo = HashMap::new();
    Ok(BigUint::from(go(
        full_mask(n),
        &up,
        &strictly_below,
        &mut memo,
    )))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of strings generable from `w` with AND/OR.
pub fn count_representable(w: &StringSet) -> Result<BigUint> {
    count_upper_sets(&build_poset(w)?)
}

/// The class poset of `w` plus complements, checked to have no comparable distinct classes.
pub fn negation_poset(w: &StringSet) -> Result<ClassPoset> {
    let (augmented, _) = augment_with_complements(w)?;
    let poset = build_poset(&augmented)?;
    let pairs = poset.comparable_pairs();
    if pairs != 0 {
        return Err(Error::InternalInvariantViolation(format!(
            "{pairs} comparable class pairs after adding complements"
        )));
    }
    Ok(poset)
}

/// Number of strings generable from `w` with AND/OR/NOT: two to the number of classes.
pub fn count_with_negation(w: &StringSet) -> Result<BigUint> {
    let classes = negation_poset(w)?.size();
    Ok(BigUint::from(1u8) << classes)
}

/// One string per element `i` with zeros exactly at the elements above `i`, followed by the
/// all-ones string. The number of generable strings equals the number of antichains of `p`.
pub fn poset_to_instance(p: &AbstractPoset) -> StringSet {
    let size = p.size();
    let mut strings: Vec<BitString> = (0..size).map(|i| p.up_set(i).not()).collect();
    // Without this, a poset with a greatest element yields an all-zero column and the
    // all-ones string is no longer generable.
    strings.push(BitString::ones(size));
    StringSet::new(strings).expect("poset sizes are at least one")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(lits: &[&str]) -> StringSet {
        StringSet::from_literals(lits).unwrap()
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn poset_of_w1() {
        let p = build_poset(&set(&["1100", "0110", "0011"])).unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.classes().iter().all(|c| c.positions.len() == 1));
        // [2] <= [1] and [3] <= [4], nothing else.
        let strict: Vec<(usize, usize)> = (0..4)
            .flat_map(|a| (0..4).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && p.leq(a, b))
            .map(|(a, b)| (p.classes()[a].positions[0], p.classes()[b].positions[0]))
            .collect();
        assert_eq!(strict, vec![(2, 1), (3, 4)]);
        assert!(is_partial_order(&p));
    }

    #[test]
    fn poset_examples() {
        let p = build_poset(&set(&["10", "01"])).unwrap();
        assert_eq!(p.size(), 2);
        assert_eq!(p.comparable_pairs(), 0);
        assert_eq!(build_poset(&set(&["11", "11"])).unwrap().size(), 0);
    }

    #[test]
    fn classes_report_original_positions() {
        // Column 2 is constant; columns 1 and 3 share a zero set.
        let p = build_poset(&set(&["010", "111"])).unwrap();
        assert_eq!(
            p.classes(),
            &[PositionClass {
                positions: vec![1, 3],
                members: vec![0]
            }]
        );
    }

    #[test]
    fn antichain_counts() {
        assert_eq!(
            count_antichains(&AbstractPoset::antichain(3).unwrap()).unwrap(),
            big(8)
        );
        assert_eq!(
            count_antichains(&AbstractPoset::chain(2).unwrap()).unwrap(),
            big(3)
        );
        let w1 = build_poset(&set(&["1100", "0110", "0011"])).unwrap();
        assert_eq!(count_antichains(&w1).unwrap(), big(9));
    }

    #[test]
    fn upper_set_counts() {
        assert_eq!(
            count_upper_sets(&AbstractPoset::chain(2).unwrap()).unwrap(),
            big(3)
        );
        assert_eq!(
            count_upper_sets(&AbstractPoset::antichain(3).unwrap()).unwrap(),
            big(8)
        );
        let w1 = build_poset(&set(&["1100", "0110", "0011"])).unwrap();
        assert_eq!(count_upper_sets(&w1).unwrap(), big(9));
    }

    #[test]
    fn enumeration_bound() {
        let p = AbstractPoset::antichain(31).unwrap();
        assert_eq!(
            count_antichains(&p),
            Err(Error::TooLarge {
                size: 31,
                bound: 30
            })
        );
        assert_eq!(
            count_upper_sets(&p),
            Err(Error::TooLarge {
                size: 31,
                bound: 30
            })
        );
        assert_eq!(
            count_antichains_bounded(&p, 40).unwrap(),
            BigUint::from(1u64 << 31)
        );
        let chain = AbstractPoset::chain(64).unwrap();
        assert_eq!(count_upper_sets_bounded(&chain, 64).unwrap(), big(65));
    }

    #[test]
    fn representable_counts() {
        assert_eq!(count_representable(&set(&["10", "01"])).unwrap(), big(4));
        assert_eq!(
            count_representable(&set(&["1100", "0110", "0011"])).unwrap(),
            big(9)
        );
        assert_eq!(count_representable(&set(&["00", "10"])).unwrap(), big(2));
        assert_eq!(count_representable(&set(&["11", "11"])).unwrap(), big(1));
    }

    #[test]
    fn negation_counts() {
        assert_eq!(count_with_negation(&set(&["10"])).unwrap(), big(4));
        assert_eq!(
            count_with_negation(&set(&["1100", "0110", "0011"])).unwrap(),
            big(16)
        );
        let p = negation_poset(&set(&["1010"])).unwrap();
        let positions: Vec<_> = p.classes().iter().map(|c| c.positions.clone()).collect();
        assert_eq!(positions, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(count_with_negation(&set(&["1010"])).unwrap(), big(4));
    }

    #[test]
    fn instance_generator_examples() {
        let anti = poset_to_instance(&AbstractPoset::antichain(3).unwrap());
        assert_eq!(anti, set(&["011", "101", "110", "111"]));
        assert_eq!(count_representable(&anti).unwrap(), big(8));

        let chain = poset_to_instance(&AbstractPoset::chain(2).unwrap());
        assert_eq!(chain, set(&["00", "10", "11"]));
        assert_eq!(count_representable(&chain).unwrap(), big(3));

        let single = poset_to_instance(&AbstractPoset::antichain(1).unwrap());
        assert_eq!(single, set(&["0", "1"]));
        assert_eq!(count_representable(&single).unwrap(), big(2));
    }
}
