//! Combinatory logic systems: finitely many constants, each with a single
//! rewrite rule `X x1 … xn → t` whose right-hand side is constant-free and
//! uses only the first `n` variables.
//!
//! The crate provides the rule tables (including a catalogue of classic
//! one-rule combinators), the one-step rewrite relation obtained by closing
//! the rules under contexts, bounded breadth-first exploration of rewrite
//! graphs, and the structural predicates distinguishing erasing from
//! nonerasing and hierarchical combinators.
//!
//! Rewriting a term to itself is a real one-step rewrite (for instance the
//! Mockingbird rule sends `MM` to `MM`), so rewrite graphs distinguish
//! "no outgoing step at all" (a normal form) from "only the trivial step"
//! (a maximal term that is not a normal form).

mod rewrite;
mod rules;

pub use rewrite::{ExplorationLimits, Reachability, RewriteGraph};
pub use rules::{CLSDefinition, CLSError, Rule};
