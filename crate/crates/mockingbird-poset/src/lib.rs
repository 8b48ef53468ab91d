//! The rewrite system of the single combinator M (`Mx → xx`) seen as an
//! order: the reflexive-transitive closure of one-step rewriting is a
//! partial order on terms, and the set of terms reachable from a given
//! term forms a finite poset (in fact a lattice) with that term at the
//! bottom.
//!
//! This crate hosts everything specific to that system: validated terms
//! over the single constant M, the specialised one-step successor and
//! predecessor moves, the pattern characterisations of minimal, maximal,
//! and isolated terms, the right-comb terms whose posets realise the
//! canonical lattices, poset generation, and the binary operations turning
//! maximal (resp. minimal) terms into a model of the system.

mod moves;
mod term;

pub use moves::{poset_of, star_max, star_min};
pub use term::{closed_terms, comb, MockTerm, MockingbirdError};
