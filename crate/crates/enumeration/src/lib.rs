//! Counting machinery for Mockingbird rewrite lattices.
//!
//! The crate computes the eight counting sequences attached to the rewrite
//! order on closed terms over the combinator M — maximal, minimal, and
//! isolated terms by degree or height, and elements, covering edges, and
//! intervals of the comb-generated lattices — three independent ways:
//!
//! - exact integer recurrences ([`sequence`]),
//! - truncated generating series solved as fixed points of their
//!   self-referential counting equations ([`TruncatedSeries`],
//!   [`solve_fixpoint`], [`characteristic_series`]), and
//! - exhaustive censuses of closed terms at desk scale
//!   ([`brute_force_census`]),
//!
//! so each can serve as an oracle for the others. All values are
//! arbitrary-precision: the interval counts outgrow 64-bit integers already
//! at lattice order 7.

mod census;
mod error;
mod sequences;
mod series;

pub use census::{brute_force_census, CensusIndex, CensusKind, DEGREE_CEILING, HEIGHT_CEILING};
pub use error::EnumerationError;
pub use sequences::{sequence, SequenceName, SequenceTable};
pub use series::{characteristic_series, solve_fixpoint, TruncatedSeries};
