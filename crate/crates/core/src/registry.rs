//! Named, interchangeable solvers for the optimization and counting problems.
//!
//! Each problem family has a trait; implementations register under a name and are looked up
//! at runtime (the CLI's `--method` flag). [`Registry::default`] holds the built-ins.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::bitcore::{closure, BitString, StringSet, DEFAULT_CLOSURE_LIMIT};
use crate::counting::{build_poset, count_antichains, count_upper_sets, negation_poset, Poset};
use crate::error::{Error, Result};
use crate::optimize::{
    min_rep_subset_exact, min_rep_subset_greedy, min_spanning_subset_exact,
    min_spanning_subset_greedy, SubsetAnswer,
};

pub trait MinRepStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn solve(&self, w: &StringSet, s: &BitString, allow_negation: bool) -> Result<SubsetAnswer>;
}

pub trait SpanStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn solve(&self, w: &StringSet) -> Result<SubsetAnswer>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    pub allow_negation: bool,
    /// Only consulted by strategies that materialize strings.
    pub limit: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            allow_negation: false,
            limit: DEFAULT_CLOSURE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub count: BigUint,
    /// Number of position classes of the poset the count is taken over.
    pub classes: usize,
}

pub trait CountStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn count(&self, w: &StringSet, opts: &CountOptions) -> Result<CountReport>;
}

pub struct Greedy;

impl MinRepStrategy for Greedy {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn solve(&self, w: &StringSet, s: &BitString, allow_negation: bool) -> Result<SubsetAnswer> {
        min_rep_subset_greedy(w, s, allow_negation)
    }
}

impl SpanStrategy for Greedy {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn solve(&self, w: &StringSet) -> Result<SubsetAnswer> {
        min_spanning_subset_greedy(w)
    }
}

pub struct Exact;

impl MinRepStrategy for Exact {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn solve(&self, w: &StringSet, s: &BitString, allow_negation: bool) -> Result<SubsetAnswer> {
        min_rep_subset_exact(w, s, allow_negation)
    }
}

impl SpanStrategy for Exact {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn solve(&self, w: &StringSet) -> Result<SubsetAnswer> {
        min_spanning_subset_exact(w)
    }
}

/// Upper sets of the class poset; with NOT, two to the number of classes.
pub struct UpperSets;

impl CountStrategy for UpperSets {
    fn name(&self) -> &'static str {
        "upper-sets"
    }

    fn count(&self, w: &StringSet, opts: &CountOptions) -> Result<CountReport> {
        if opts.allow_negation {
            let classes = negation_poset(w)?.size();
            return Ok(CountReport {
                count: BigUint::from(1u8) << classes,
                classes,
            });
        }
        let poset = build_poset(w)?;
        Ok(CountReport {
            count: count_upper_sets(&poset)?,
            classes: poset.size(),
        })
    }
}

/// Antichains of the class poset, enumerated even when NOT is allowed.
pub struct Antichains;

impl CountStrategy for Antichains {
    fn name(&self) -> &'static str {
        "antichains"
    }

    fn count(&self, w: &StringSet, opts: &CountOptions) -> Result<CountReport> {
        let poset = if opts.allow_negation {
            negation_poset(w)?
        } else {
            build_poset(w)?
        };
        Ok(CountReport {
            count: count_antichains(&poset)?,
            classes: poset.size(),
        })
    }
}

/// Materializes the closure and measures it.
pub struct ClosureSize;

impl CountStrategy for ClosureSize {
    fn name(&self) -> &'static str {
        "closure"
    }

    fn count(&self, w: &StringSet, opts: &CountOptions) -> Result<CountReport> {
        let size = closure(w, opts.allow_negation, opts.limit)?.len();
        let classes = if opts.allow_negation {
            negation_poset(w)?.size()
        } else {
            build_poset(w)?.size()
        };
        Ok(CountReport {
            count: BigUint::from(size),
            classes,
        })
    }
}

pub struct Registry {
    minrep: BTreeMap<&'static str, Box<dyn MinRepStrategy>>,
    span: BTreeMap<&'static str, Box<dyn SpanStrategy>>,
    count: BTreeMap<&'static str, Box<dyn CountStrategy>>,
}

impl Registry {
    pub const DEFAULT_MINREP: &'static str = "greedy";
    pub const DEFAULT_SPAN: &'static str = "greedy";
    pub const DEFAULT_COUNT: &'static str = "upper-sets";

    pub fn empty() -> Self {
        Registry {
            minrep: BTreeMap::new(),
            span: BTreeMap::new(),
            count: BTreeMap::new(),
        }
    }

    pub fn register_minrep(&mut self, strategy: Box<dyn MinRepStrategy>) {
        self.minrep.insert(strategy.name(), strategy);
    }

    pub fn register_span(&mut self, strategy: Box<dyn SpanStrategy>) {
        self.span.insert(strategy.name(), strategy);
    }

    pub fn register_count(&mut self, strategy: Box<dyn CountStrategy>) {
        self.count.insert(strategy.name(), strategy);
    }

    pub fn minrep(&self, name: &str) -> Result<&dyn MinRepStrategy> {
        self.minrep
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| unknown("minrep", name))
    }

    pub fn span(&self, name: &str) -> Result<&dyn SpanStrategy> {
        self.span
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| unknown("minspan", name))
    }

    pub fn count(&self, name: &str) -> Result<&dyn CountStrategy> {
        self.count
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| unknown("count", name))
    }

    pub fn minrep_names(&self) -> Vec<&'static str> {
        self.minrep.keys().copied().collect()
    }

    pub fn span_names(&self) -> Vec<&'static str> {
        self.span.keys().copied().collect()
    }

    pub fn count_names(&self) -> Vec<&'static str> {
        self.count.keys().copied().collect()
    }
}

fn unknown(family: &'static str, name: &str) -> Error {
    Error::UnknownStrategy {
        family,
        name: name.to_string(),
    }
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Registry::empty();
        r.register_minrep(Box::new(Greedy));
        r.register_minrep(Box::new(Exact));
        r.register_span(Box::new(Greedy));
        r.register_span(Box::new(Exact));
        r.register_count(Box::new(UpperSets));
        r.register_count(Box::new(Antichains));
        r.register_count(Box::new(ClosureSize));
        r
    }
}
