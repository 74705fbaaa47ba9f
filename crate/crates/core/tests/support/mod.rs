//! Brute-force oracles and random instance generators shared by the integration tests.
//!
//! Nothing here calls the algorithms under test: every oracle works from the definitions.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bitrep::counting::AbstractPoset;
use bitrep::{BitString, Formula, StringSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn bs(text: &str) -> BitString {
    text.parse().unwrap()
}

pub fn set(lits: &[&str]) -> StringSet {
    StringSet::from_literals(lits).unwrap()
}

/// Every string of width `m`, in counting order.
pub fn all_strings(m: usize) -> Vec<BitString> {
    (0..1u64 << m)
        .map(|v| BitString::from_fn(m, |k| v >> k & 1 == 1))
        .collect()
}

/// Every set of `1..=max_n` distinct strings of width `m`, each listed once.
pub fn all_sets(m: usize, max_n: usize) -> Vec<StringSet> {
    let pool = all_strings(m);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(
        pool: &[BitString],
        start: usize,
        max_n: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<StringSet>,
    ) {
        if !stack.is_empty() {
            out.push(StringSet::new(stack.iter().map(|&i| pool[i].clone()).collect()).unwrap());
        }
        if stack.len() == max_n {
            return;
        }
        for i in start..pool.len() {
            stack.push(i);
            rec(pool, i + 1, max_n, stack, out);
            stack.pop();
        }
    }
    rec(&pool, 0, max_n, &mut stack, &mut out);
    out
}

pub fn random_string(rng: &mut impl Rng, m: usize) -> BitString {
    BitString::from_fn(m, |_| rng.gen_bool(0.5))
}

/// A random set with width in `1..=max_m` and size in `1..=max_n`; duplicates allowed.
pub fn random_set(rng: &mut impl Rng, max_m: usize, max_n: usize) -> StringSet {
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(1..=max_n);
    StringSet::new((0..n).map(|_| random_string(rng, m)).collect()).unwrap()
}

/// Least superset of the seeds closed under pairwise AND and OR, by repeated all-pairs passes.
pub fn naive_closure(w: &StringSet, negation: bool) -> BTreeSet<BitString> {
    let mut out: BTreeSet<BitString> = w.iter().cloned().collect();
    if negation {
        out.extend(w.iter().map(|x| x.not()));
    }
    loop {
        let items: Vec<BitString> = out.iter().cloned().collect();
        let before = out.len();
        for a in &items {
            for b in &items {
                out.insert(a.and(b).unwrap());
                out.insert(a.or(b).unwrap());
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

/// A random partial order: a random DAG along a shuffled ordering, transitively closed on load.
pub fn random_poset(rng: &mut impl Rng, max_p: usize) -> AbstractPoset {
    let p = rng.gen_range(1..=max_p);
    let mut order: Vec<usize> = (1..=p).collect();
    order.shuffle(rng);
    let density = rng.gen_range(0.0..0.6);
    let mut pairs = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            if rng.gen_bool(density) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    AbstractPoset::new(p, pairs).unwrap()
}

/// Reflexive-transitive order as a dense matrix, 0-based, recomputed from the leq callback.
pub fn order_matrix(p: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    (0..p)
        .map(|a| (0..p).map(|b| leq(a, b)).collect())
        .collect()
}

pub fn brute_antichains(leq: &[Vec<bool>]) -> u64 {
    let p = leq.len();
    (0u64..1 << p)
        .filter(|&mask| {
            (0..p).all(|a| {
                mask >> a & 1 == 0
                    || (0..p).all(|b| b == a || mask >> b & 1 == 0 || !(leq[a][b] || leq[b][a]))
            })
        })
        .count() as u64
}

pub fn brute_upper_sets(leq: &[Vec<bool>]) -> u64 {
    let p = leq.len();
    (0u64..1 << p)
        .filter(|&mask| {
            (0..p).all(|a| mask >> a & 1 == 0 || (0..p).all(|b| !leq[a][b] || mask >> b & 1 == 1))
        })
        .count() as u64
}

/// Calls `f` on every subset of `0..n` (as a sorted index list) in increasing size.
pub fn subsets_by_size(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if f(&idx) {
            return;
        }
    }
}

/// Size of the smallest subset of `w` whose closure contains `s`, if any.
pub fn brute_minrep(w: &StringSet, s: &BitString, negation: bool) -> Option<usize> {
    let mut best = None;
    subsets_by_size(w.len(), |idx| {
        if idx.is_empty() {
            return false;
        }
        if naive_closure(&w.select(idx).unwrap(), negation).contains(s) {
            best = Some(idx.len());
            true
        } else {
            false
        }
    });
    best
}

/// Size of the smallest subset of `w` whose closure contains every member of `w`.
pub fn brute_minspan(w: &StringSet) -> usize {
    let mut best = w.len();
    subsets_by_size(w.len(), |idx| {
        if idx.is_empty() {
            return false;
        }
        let c = naive_closure(&w.select(idx).unwrap(), false);
        if w.iter().all(|x| c.contains(x)) {
            best = idx.len();
            true
        } else {
            false
        }
    });
    best
}

/// Smallest item set `X` with `b_i ⊆ b_j ⇔ b_i∩X ⊆ b_j∩X` for all pairs, by enumeration.
pub fn brute_compare_set(items: usize, family: &[BTreeSet<usize>]) -> usize {
    let mut best = items;
    subsets_by_size(items, |idx| {
        let x: BTreeSet<usize> = idx.iter().copied().collect();
        let ok = family.iter().all(|bi| {
            family.iter().all(|bj| {
                let before = bi.is_subset(bj);
                let ri: BTreeSet<_> = bi.intersection(&x).collect();
                let rj: BTreeSet<_> = bj.intersection(&x).collect();
                before == ri.is_subset(&rj)
            })
        });
        if ok {
            best = idx.len();
        }
        ok
    });
    best
}

/// Smallest subfamily covering `1..=m`, if the whole family covers it.
pub fn brute_set_cover(m: usize, family: &[Vec<usize>]) -> Option<usize> {
    let mut best = None;
    subsets_by_size(family.len(), |idx| {
        let covered: BTreeSet<usize> = idx
            .iter()
            .flat_map(|&i| family[i].iter().copied())
            .collect();
        if (1..=m).all(|u| covered.contains(&u)) {
            best = Some(idx.len());
            true
        } else {
            false
        }
    });
    best
}

/// A random formula over `n` leaves with depth at most `depth`, Not nodes included.
pub fn random_formula(rng: &mut impl Rng, n: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        let i = rng.gen_range(0..n);
        return if rng.gen_bool(0.2) {
            Formula::NegVar(i)
        } else {
            Formula::Var(i)
        };
    }
    match rng.gen_range(0..5) {
        0 | 1 => Formula::and(
            random_formula(rng, n, depth - 1),
            random_formula(rng, n, depth - 1),
        ),
        2 | 3 => Formula::or(
            random_formula(rng, n, depth - 1),
            random_formula(rng, n, depth - 1),
        ),
        _ => Formula::not(random_formula(rng, n, depth - 1)),
    }
}

/// Bitwise evaluation straight from the definition, one position at a time.
pub fn eval_pointwise(f: &Formula, w: &StringSet) -> BitString {
    fn at(f: &Formula, w: &StringSet, k: usize) -> bool {
        match f {
            Formula::Var(i) => w.strings()[*i].get(k),
            Formula::NegVar(i) => !w.strings()[*i].get(k),
            Formula::And(a, b) => at(a, w, k) && at(b, w, k),
            Formula::Or(a, b) => at(a, w, k) || at(b, w, k),
            Formula::Not(c) => !at(c, w, k),
        }
    }
    BitString::from_fn(w.width(), |k| at(f, w, k))
}
