//! Packed bit strings, string sets, column normalization and the closure oracle.

mod bitstring;
mod closure;
mod set;

pub use bitstring::{BitString, IndexSet};
pub use closure::{closure, DEFAULT_CLOSURE_LIMIT};
pub use set::{normalize, NormalizationMap, StringSet};
