//! Smallest subsets that still generate a target (minimum representation subset) or that
//! still generate every member of the set (minimum spanning subset).
//!
//! Both problems are NP-hard. The greedy routes reduce to set cover and hitting set; the exact
//! routes enumerate subsets by increasing size and serve as oracles on small inputs. Every
//! greedy answer is re-checked with [`decide`](crate::represent::decide) and flagged
//! `certified` accordingly.

mod compare;
mod cover;

pub use compare::{greedy_compare_set, msc_to_mcs, CompareInstance, MscInstance};
pub use cover::{greedy_set_cover, CoverInstance, CoverSet};

use serde::Serialize;

use crate::bitcore::{BitString, StringSet};
use crate::counting::build_poset;
use crate::error::{Error, Result};
use crate::represent::{decide, decide_with};

/// Largest set size the exact searches accept.
pub const DEFAULT_EXACT_BOUND: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetAnswer {
    /// Ascending indices into the input.
    pub chosen: Vec<usize>,
    pub certified: bool,
}

impl SubsetAnswer {
    pub(crate) fn new(mut chosen: Vec<usize>, certified: bool) -> Self {
        chosen.sort_unstable();
        chosen.dedup();
        SubsetAnswer { chosen, certified }
    }

    pub fn size(&self) -> usize {
        self.chosen.len()
    }
}

/// The set-cover instance whose covers are exactly the subsets generating `s`.
///
/// For `s = 1` the universe is the positions and string `i` covers `One(s_i)`; for `s = 0` it
/// covers `Zero(s_i)`. Otherwise the universe is `Zero(s) × One(s)` and string `i` covers the
/// pairs `(z, o)` with a 0 at `z` and a 1 at `o`. With NOT allowed, picking a string also
/// grants its complement, so each subset is merged with the complement's subset.
pub fn minrep_cover_instance(
    w: &StringSet,
    s: &BitString,
    allow_negation: bool,
) -> Result<CoverInstance> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    w.check_target(s)?;
    let m = w.width();
    let (universe, subsets): (usize, Vec<CoverSet>) = if s.is_all_ones() || s.is_all_zeros() {
        let want_ones = s.is_all_ones();
        let subsets = w
            .iter()
            .enumerate()
            .map(|(tag, x)| {
                let mut elements = if want_ones { x.clone() } else { x.not() };
                if allow_negation {
                    elements = BitString::ones(m);
                }
                CoverSet { tag, elements }
            })
            .collect();
        (m, subsets)
    } else {
        let zeros: Vec<usize> = s.iter_zeros().collect();
        let ones: Vec<usize> = s.iter_ones().collect();
        let universe = zeros.len() * ones.len();
        let subsets = w
            .iter()
            .enumerate()
            .map(|(tag, x)| {
                let mut elements = BitString::zeros(universe);
                for (zi, &z) in zeros.iter().enumerate() {
                    for (oi, &o) in ones.iter().enumerate() {
                        let forward = !x.get(z) && x.get(o);
                        let backward = allow_negation && x.get(z) && !x.get(o);
                        if forward || backward {
                            elements.set(zi * ones.len() + oi, true);
                        }
                    }
                }
                CoverSet { tag, elements }
            })
            .collect();
        (universe, subsets)
    };
    CoverInstance::new(universe, subsets)
}

fn require_representable(w: &StringSet, s: &BitString, allow_negation: bool) -> Result<()> {
    if decide_with(w, s, allow_negation)?.representable {
        Ok(())
    } else {
        Err(Error::NotRepresentable)
    }
}

/// Greedy set cover on [`minrep_cover_instance`], within `ln((m/2)^2) + 1` of optimal.
pub fn min_rep_subset_greedy(
    w: &StringSet,
    s: &BitString,
    allow_negation: bool,
) -> Result<SubsetAnswer> {
    require_representable(w, s, allow_negation)?;
    let inst = minrep_cover_instance(w, s, allow_negation)?;
    let cover = greedy_set_cover(&inst).map_err(|e| match e {
        Error::Uncoverable => Error::InternalInvariantViolation(
            "cover instance of a representable target is uncoverable".into(),
        ),
        other => other,
    })?;
    let certified = decide_with(&w.select(&cover.chosen)?, s, allow_negation)?.representable;
    Ok(SubsetAnswer::new(cover.chosen, certified))
}

pub fn min_rep_subset_exact(
    w: &StringSet,
    s: &BitString,
    allow_negation: bool,
) -> Result<SubsetAnswer> {
    min_rep_subset_exact_bounded(w, s, allow_negation, DEFAULT_EXACT_BOUND)
}

/// Smallest subset generating `s`, by enumerating subsets in increasing size and
/// lexicographic index order.
pub fn min_rep_subset_exact_bounded(
    w: &StringSet,
    s: &BitString,
    allow_negation: bool,
    bound: usize,
) -> Result<SubsetAnswer> {
    if w.len() > bound {
        return Err(Error::TooLarge {
            size: w.len(),
            bound,
        });
    }
    require_representable(w, s, allow_negation)?;
    for k in 1..=w.len() {
        let mut found = None;
        for_each_combination(w.len(), k, |combo| {
            let ok = w
                .select(combo)
                .and_then(|sub| decide_with(&sub, s, allow_negation))
                .map(|v| v.representable);
            match ok {
                Ok(true) => {
                    found = Some(Ok(combo.to_vec()));
                    true
                }
                Ok(false) => false,
                Err(e) => {
                    found = Some(Err(e));
                    true
                }
            }
        });
        if let Some(hit) = found {
            return Ok(SubsetAnswer::new(hit?, true));
        }
    }
    Err(Error::InternalInvariantViolation(
        "representable target without a generating subset".into(),
    ))
}

/// Whether every member of `w` is generable from the strings at `indices`.
pub fn spans(w: &StringSet, indices: &[usize]) -> Result<bool> {
    if indices.is_empty() {
        return Ok(false);
    }
    let sub = w.select(indices)?;
    for s in w.iter() {
        if !decide(&sub, s)?.representable {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Items are string indices; the subsets are the zero sets of the position classes, plus the
/// empty set and the full index set.
///
/// A subset `A` spans `w` iff it meets `T_i \ T_j` whenever that is nonempty, meets every
/// nonempty `T_i`, and has a 1 wherever some member has a 1. The last two conditions are the
/// differences against the empty set and from the full set, which is why both are added.
pub fn spanning_compare_instance(w: &StringSet) -> Result<CompareInstance> {
    let poset = build_poset(w)?;
    let mut lists: Vec<Vec<usize>> = poset.classes().iter().map(|c| c.members.clone()).collect();
    for extra in [Vec::new(), (0..w.len()).collect::<Vec<_>>()] {
        if !lists.contains(&extra) {
            lists.push(extra);
        }
    }
    CompareInstance::from_lists(w.len(), &lists)
}

/// Greedy hitting set on [`spanning_compare_instance`], certified by deciding every member.
pub fn min_spanning_subset_greedy(w: &StringSet) -> Result<SubsetAnswer> {
    let inst = spanning_compare_instance(w)?;
    let answer = greedy_compare_set(&inst);
    let certified = answer.certified && spans(w, &answer.chosen)?;
    Ok(SubsetAnswer::new(answer.chosen, certified))
}

pub fn min_spanning_subset_exact(w: &StringSet) -> Result<SubsetAnswer> {
    min_spanning_subset_exact_bounded(w, DEFAULT_EXACT_BOUND)
}

/// Smallest spanning subset by increasing-size enumeration.
pub fn min_spanning_subset_exact_bounded(w: &StringSet, bound: usize) -> Result<SubsetAnswer> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    if w.len() > bound {
        return Err(Error::TooLarge {
            size: w.len(),
            bound,
        });
    }
    for k in 1..=w.len() {
        let mut found = None;
        for_each_combination(w.len(), k, |combo| match spans(w, combo) {
            Ok(true) => {
                found = Some(Ok(combo.to_vec()));
                true
            }
            Ok(false) => false,
            Err(e) => {
                found = Some(Err(e));
                true
            }
        });
        if let Some(hit) = found {
            return Ok(SubsetAnswer::new(hit?, true));
        }
    }
    Err(Error::InternalInvariantViolation(
        "the full set must span itself".into(),
    ))
}

/// Visits the `k`-subsets of `0..n` in lexicographic order until `visit` returns `true`.
fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if visit(&combo) {
            return;
        }
        // Rightmost slot that can still advance.
        let Some(slot) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
            return;
        };
        combo[slot] += 1;
        for i in slot + 1..k {
            combo[i] = combo[i - 1] + 1;
        }
    }
}
