//! Duplicative forests: plane forests of white and black nodes in which a
//! covering move blackens a white node and duplicates its child sequence.
//!
//! The moves generate a partial order whose intervals are finite lattices.
//! This crate provides the forest syntax, the covering relation and the
//! recursive order test, meets and joins, the pruning map (which deletes
//! black nodes and generates isomorphic intervals), all-white ladders, the
//! chain-length statistic, and the translation [`fr`] from terms over the
//! constant `M` under which one-step rewriting corresponds exactly to
//! covering moves.

mod forest;
mod maps;
mod order;

pub use forest::{all_forests, parse_forest, Color, Forest, ForestError, Tree};
pub use maps::{
    check_isomorphism_via_fr, fr, ladder, ladder_witness, ml, pruning, relative_pruning,
};
pub use order::{
    covering_successors, forest_interval, forest_join, forest_leq, forest_meet,
    interval_cardinality, ForestOrderWitness,
};

/// Renders a forest in canonical form: always-bracketed, no whitespace, `e`
/// for the empty forest. Inverse of [`parse_forest`] on canonical output.
pub fn render_forest(forest: &Forest) -> String {
    forest.to_string()
}
