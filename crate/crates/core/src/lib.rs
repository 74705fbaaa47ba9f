//! Which binary strings can be generated from a set of strings with bitwise AND and OR
//! (and optionally NOT)?
//!
//! - [`represent`] decides generability of a target and produces a CNF witness.
//! - [`counting`] counts all generable strings exactly through a poset of position classes.
//! - [`optimize`] approximates the smallest generating and spanning subsets.
//! - [`bitcore`] holds the packed bit strings and the brute-force closure used as an oracle.
//! - [`registry`] names the interchangeable solvers so callers can pick one at runtime.

pub mod bitcore;
pub mod counting;
mod error;
pub mod formula;
pub mod optimize;
pub mod registry;
pub mod represent;

pub use bitcore::{BitString, IndexSet, StringSet};
pub use error::{Error, Result};
pub use formula::{CnfFormula, Formula, Literal};
pub use optimize::SubsetAnswer;
pub use represent::{decide, decide_with_negation, Verdict};
