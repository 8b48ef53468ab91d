//! Analytics over explicit finite posets.
//!
//! A [`Poset`] stores an indexed element table, the covering edges of its
//! Hasse diagram, and a distinguished bottom element from which every
//! element is reachable. Elements are kept in a topological order (every
//! cover goes from a lower index to a higher one), which makes reachability
//! closures, chain searches, and least-upper-bound candidates cheap to
//! compute with per-element bitsets.
//!
//! The poset itself is agnostic about what its elements are; rewriting and
//! forest crates instantiate it with their own canonical values and use
//! [`poset_from_successors`] to materialise the reachable part of a
//! relation.

mod export;
mod poset;

pub use export::poset_from_json;
pub use poset::{
    is_isomorphic_by, poset_from_successors, ChainExtrema, Poset, PosetError, PosetStats,
};
