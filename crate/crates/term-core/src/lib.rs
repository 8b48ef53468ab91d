//! Applicative terms: binary trees whose leaves are variables `x1, x2, ...`
//! or named constants, and whose internal nodes are applications.
//!
//! Application is written by juxtaposition and associates to the left, so
//! `MMM` is `(MM)M` and `M(MM)` applies `M` to `MM`. This crate provides the
//! term type itself, its structural metrics (degree, height, frontier),
//! simultaneous substitution of variables ([`Term::compose`]), a parser and a
//! canonical minimal-parenthesis renderer, and the two containment tests used
//! to characterise extremal terms downstream: factor matching (pattern
//! variables stand for arbitrary terms) and suffix matching (pattern
//! variables stand for variables only).

mod matching;
mod parse;
mod term;

pub use matching::{matches_factor, matches_suffix};
pub use parse::{parse_term, Alphabet, AlphabetError, ParseError};
pub use term::{ComposeError, Term, TermMetrics};
