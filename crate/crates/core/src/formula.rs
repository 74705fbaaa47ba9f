//! Operator trees over string indices, negation pushing and CNF conversion.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bitcore::{BitString, StringSet};
use crate::error::{Error, Result};

/// Default bound on the number of clauses [`Formula::to_cnf`] may produce.
pub const DEFAULT_CNF_CAP: usize = 1 << 16;

/// A leaf operand: string `index`, or its complement when `negated`.
///
/// Renders as `"3"` or `"~3"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub index: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(index: usize) -> Self {
        Literal {
            index,
            negated: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        Literal {
            index,
            negated: true,
        }
    }

    pub fn eval(&self, w: &StringSet) -> Result<BitString> {
        let s = w.get(self.index).ok_or(Error::IndexOutOfRange {
            index: self.index,
            len: w.len(),
        })?;
        Ok(if self.negated { s.not() } else { s.clone() })
    }

    fn to_formula(self) -> Formula {
        if self.negated {
            Formula::NegVar(self.index)
        } else {
            Formula::Var(self.index)
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for Literal {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let (negated, digits) = match token.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let index = digits
            .parse()
            .map_err(|_| Error::parse(1, format!("bad literal token {token:?}")))?;
        Ok(Literal { index, negated })
    }
}

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(usize),
    NegVar(usize),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
}

impl Formula {
    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Box::new(left), Box::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(child: Formula) -> Formula {
        Formula::Not(Box::new(child))
    }

    pub fn eval(&self, w: &StringSet) -> Result<BitString> {
        match self {
            Formula::Var(i) => Literal::pos(*i).eval(w),
            Formula::NegVar(i) => Literal::neg(*i).eval(w),
            Formula::And(a, b) => Ok(a.eval(w)?.and_unchecked(&b.eval(w)?)),
            Formula::Or(a, b) => Ok(a.eval(w)?.or_unchecked(&b.eval(w)?)),
            Formula::Not(c) => Ok(c.eval(w)?.not()),
        }
    }

    /// Applies De Morgan's laws until every negation sits on a leaf.
    pub fn push_negations(&self) -> Formula {
        self.pushed(false)
    }

    fn pushed(&self, negate: bool) -> Formula {
        match (self, negate) {
            (Formula::Var(i), false) | (Formula::NegVar(i), true) => Formula::Var(*i),
            (Formula::Var(i), true) | (Formula::NegVar(i), false) => Formula::NegVar(*i),
            (Formula::And(a, b), false) => Formula::and(a.pushed(false), b.pushed(false)),
            (Formula::And(a, b), true) => Formula::or(a.pushed(true), b.pushed(true)),
            (Formula::Or(a, b), false) => Formula::or(a.pushed(false), b.pushed(false)),
            (Formula::Or(a, b), true) => Formula::and(a.pushed(true), b.pushed(true)),
            (Formula::Not(c), _) => c.pushed(!negate),
        }
    }

    pub fn to_cnf(&self) -> Result<CnfFormula> {
        self.to_cnf_with_cap(DEFAULT_CNF_CAP)
    }

    /// Distributes OR over AND. NegVar leaves are opaque operands; `Not` nodes are rejected.
    /// No clause deduplication or absorption is performed.
    pub fn to_cnf_with_cap(&self, cap: usize) -> Result<CnfFormula> {
        Ok(CnfFormula {
            clauses: self.clauses(cap)?,
        })
    }

    fn clauses(&self, cap: usize) -> Result<Vec<Vec<Literal>>> {
        match self {
            Formula::Var(i) => Ok(vec![vec![Literal::pos(*i)]]),
            Formula::NegVar(i) => Ok(vec![vec![Literal::neg(*i)]]),
            Formula::And(a, b) => {
                let mut left = a.clauses(cap)?;
                let right = b.clauses(cap)?;
                if left.len() + right.len() > cap {
                    return Err(Error::SizeExplosion { cap });
                }
                left.extend(right);
                Ok(left)
            }
            Formula::Or(a, b) => {
                let left = a.clauses(cap)?;
                let right = b.clauses(cap)?;
                if left.len().saturating_mul(right.len()) > cap {
                    return Err(Error::SizeExplosion { cap });
                }
                let mut out = Vec::with_capacity(left.len() * right.len());
                for c1 in &left {
                    for c2 in &right {
                        let mut clause = c1.clone();
                        clause.extend_from_slice(c2);
                        out.push(clause);
                    }
                }
                Ok(out)
            }
            Formula::Not(_) => Err(Error::NotNegationNormal),
        }
    }

    pub fn leaves(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut BTreeSet<Literal>) {
        match self {
            Formula::Var(i) => {
                out.insert(Literal::pos(*i));
            }
            Formula::NegVar(i) => {
                out.insert(Literal::neg(*i));
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
            Formula::Not(c) => c.collect_leaves(out),
        }
    }

    pub fn not_count(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::NegVar(_) => 0,
            Formula::And(a, b) | Formula::Or(a, b) => a.not_count() + b.not_count(),
            Formula::Not(c) => 1 + c.not_count(),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "x{i}"),
            Formula::NegVar(i) => write!(f, "~x{i}"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Not(c) => write!(f, "!{c}"),
        }
    }
}

/// Conjunction of disjunctive clauses over literals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Panics if there are no clauses or some clause is empty.
    pub fn new(clauses: Vec<Vec<Literal>>) -> Self {
        assert!(!clauses.is_empty(), "a CNF needs at least one clause");
        assert!(
            clauses.iter().all(|c| !c.is_empty()),
            "CNF clauses must be nonempty"
        );
        CnfFormula { clauses }
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn eval(&self, w: &StringSet) -> Result<BitString> {
        let mut acc: Option<BitString> = None;
        for clause in &self.clauses {
            let mut join: Option<BitString> = None;
            for lit in clause {
                let v = lit.eval(w)?;
                join = Some(match join {
                    Some(mut j) => {
                        j.or_assign(&v);
                        j
                    }
                    None => v,
                });
            }
            let join = join.expect("clauses are nonempty");
            acc = Some(match acc {
                Some(mut a) => {
                    a.and_assign(&join);
                    a
                }
                None => join,
            });
        }
        Ok(acc.expect("a CNF has clauses"))
    }

    pub fn leaves(&self) -> BTreeSet<Literal> {
        self.clauses.iter().flatten().copied().collect()
    }

    /// Left-nested binary tree with the same meaning.
    pub fn to_formula(&self) -> Formula {
        let clause_tree = |clause: &Vec<Literal>| {
            clause
                .iter()
                .map(|l| l.to_formula())
                .reduce(Formula::or)
                .expect("clauses are nonempty")
        };
        self.clauses
            .iter()
            .map(clause_tree)
            .reduce(Formula::and)
            .expect("a CNF has clauses")
    }
}

impl Serialize for CnfFormula {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            #[serde(rename = "type")]
            kind: &'static str,
            clauses: &'a [Vec<Literal>],
        }
        Repr {
            kind: "cnf",
            clauses: &self.clauses,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::Formula as F;
    use super::*;

    fn set(lits: &[&str]) -> StringSet {
        StringSet::from_literals(lits).unwrap()
    }

    fn x(i: usize) -> F {
        F::Var(i)
    }

    fn cnf_text(c: &CnfFormula) -> Vec<Vec<String>> {
        c.clauses()
            .iter()
            .map(|cl| cl.iter().map(|l| l.to_string()).collect())
            .collect()
    }

    #[test]
    fn eval_examples() {
        let w = set(&["1100", "0110", "0011"]);
        let f = F::and(F::or(x(0), x(1)), x(2));
        assert_eq!(f.eval(&w).unwrap().to_string(), "0010");
        assert_eq!(x(0).eval(&set(&["1010"])).unwrap().to_string(), "1010");
        let g = F::not(F::and(x(0), x(1)));
        assert_eq!(g.eval(&set(&["1100", "0110"])).unwrap().to_string(), "1011");
    }

    #[test]
    fn eval_rejects_out_of_range_leaves() {
        assert_eq!(
            F::or(x(0), x(3)).eval(&set(&["10"])),
            Err(Error::IndexOutOfRange { index: 3, len: 1 })
        );
    }

    #[test]
    fn push_negations_examples() {
        assert_eq!(
            F::not(F::and(x(0), x(1))).push_negations(),
            F::or(F::NegVar(0), F::NegVar(1))
        );
        assert_eq!(F::not(F::not(x(0))).push_negations(), x(0));
        assert_eq!(
            F::not(F::or(x(0), F::not(x(1)))).push_negations(),
            F::and(F::NegVar(0), x(1))
        );
    }

    #[test]
    fn cnf_examples() {
        let one_step = F::or(x(0), F::and(x(1), x(2))).to_cnf().unwrap();
        assert_eq!(cnf_text(&one_step), [["0", "1"], ["0", "2"]]);

        let already = F::and(x(0), x(1)).to_cnf().unwrap();
        assert_eq!(cnf_text(&already), [["0"], ["1"]]);

        let cross = F::or(F::and(x(0), x(1)), F::and(x(2), x(3)))
            .to_cnf()
            .unwrap();
        assert_eq!(
            cnf_text(&cross),
            [["0", "2"], ["0", "3"], ["1", "2"], ["1", "3"]]
        );
    }

    #[test]
    fn cnf_rejects_not_nodes_and_caps_size() {
        assert_eq!(F::not(x(0)).to_cnf(), Err(Error::NotNegationNormal));
        // (x0 & x1) | (x2 & x3) needs 4 clauses.
        let f = F::or(F::and(x(0), x(1)), F::and(x(2), x(3)));
        assert_eq!(f.to_cnf_with_cap(3), Err(Error::SizeExplosion { cap: 3 }));
        assert!(f.to_cnf_with_cap(4).is_ok());
    }

    #[test]
    fn cnf_serializes_to_canonical_json_shape() {
        let c = CnfFormula::new(vec![
            vec![Literal::pos(1), Literal::pos(2)],
            vec![Literal::neg(0)],
        ]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"type":"cnf","clauses":[["1","2"],["~0"]]}"#
        );
    }

    #[test]
    fn cnf_round_trips_through_tree() {
        let w = set(&["1100", "0110", "0011"]);
        let f = F::or(F::and(x(0), F::NegVar(1)), F::and(x(2), x(1)));
        let cnf = f.to_cnf().unwrap();
        assert_eq!(cnf.to_formula().eval(&w).unwrap(), f.eval(&w).unwrap());
        assert_eq!(cnf.eval(&w).unwrap(), f.eval(&w).unwrap());
        assert!(cnf.leaves().is_subset(&f.leaves()));
    }

    #[test]
    fn literal_tokens() {
        assert_eq!(Literal::neg(3).to_string(), "~3");
        assert_eq!("~3".parse::<Literal>().unwrap(), Literal::neg(3));
        assert_eq!("12".parse::<Literal>().unwrap(), Literal::pos(12));
        assert!("~x".parse::<Literal>().is_err());
    }
}
