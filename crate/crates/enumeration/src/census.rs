use num_bigint::BigInt;

use mockingbird_poset::{closed_terms, MockTerm};

use crate::error::EnumerationError;
use crate::sequences::SequenceTable;

/// Which closed terms the exhaustive census counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusKind {
    /// Terms with no strict successor under the Mockingbird step.
    Maximal,
    /// Terms with no strict predecessor.
    Minimal,
    /// Terms with neither (isolated in the rewrite order).
    Isolated,
    /// Rewrite classes, counted through their unique closed maximal
    /// representative; numerically identical to [`CensusKind::Maximal`].
    Classes,
}

/// How census indices are measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusIndex {
    /// Number of applications in the term.
    Degree,
    /// Maximal number of applications on a root-to-leaf path.
    Height,
}

/// Largest degree the census will enumerate exhaustively (23714 closed
/// terms up to here).
pub const DEGREE_CEILING: usize = 12;

/// Largest height the census will enumerate exhaustively (677 closed terms
/// of height at most 4; height 5 already has 458330).
pub const HEIGHT_CEILING: usize = 4;

/// Counts closed Mockingbird terms with the chosen property by exhaustive
/// enumeration: index `i` of the table counts the matching terms of exact
/// degree (or height) `i`, up to and including `bound`.
///
/// This is deliberately independent of the recurrence tables so the two can
/// be played against each other; the ceilings keep the enumeration exact and
/// fast.
pub fn brute_force_census(
    kind: CensusKind,
    index: CensusIndex,
    bound: usize,
) -> Result<SequenceTable, EnumerationError> {
    match index {
        CensusIndex::Degree => {
            check_ceiling("degree", bound, DEGREE_CEILING)?;
            let values = (0..=bound)
                .map(|degree| {
                    let matching = closed_terms(degree)
                        .iter()
                        .filter(|term| census_hit(kind, term))
                        .count();
                    BigInt::from(matching)
                })
                .collect();
            Ok(SequenceTable::new(census_label(kind, index), values))
        }
        CensusIndex::Height => {
            check_ceiling("height", bound, HEIGHT_CEILING)?;
            let mut counts = vec![0usize; bound + 1];
            for term in closed_terms_of_height_at_most(bound) {
                if census_hit(kind, &term) {
                    counts[term.term().height()] += 1;
                }
            }
            let values = counts.into_iter().map(BigInt::from).collect();
            Ok(SequenceTable::new(census_label(kind, index), values))
        }
    }
}

fn check_ceiling(unit: &'static str, bound: usize, ceiling: usize) -> Result<(), EnumerationError> {
    if bound > ceiling {
        Err(EnumerationError::CensusBoundExceeded {
            unit,
            bound,
            ceiling,
        })
    } else {
        Ok(())
    }
}

fn census_hit(kind: CensusKind, term: &MockTerm) -> bool {
    match kind {
        CensusKind::Maximal | CensusKind::Classes => term.is_maximal(),
        CensusKind::Minimal => term.is_minimal(),
        CensusKind::Isolated => term.is_isolated(),
    }
}

fn census_label(kind: CensusKind, index: CensusIndex) -> &'static str {
    match (kind, index) {
        (CensusKind::Maximal | CensusKind::Classes, CensusIndex::Degree) => "max-deg",
        (CensusKind::Minimal, CensusIndex::Degree) => "min-deg",
        (CensusKind::Isolated, CensusIndex::Degree) => "iso-deg",
        (CensusKind::Maximal | CensusKind::Classes, CensusIndex::Height) => "classes-ht",
        (CensusKind::Minimal, CensusIndex::Height) => "min-ht",
        (CensusKind::Isolated, CensusIndex::Height) => "iso-ht",
    }
}

/// All closed terms over M of height at most `bound`: the level for height
/// `h` is M together with every application of two terms from the previous
/// level.
fn closed_terms_of_height_at_most(bound: usize) -> Vec<MockTerm> {
    let mut level = vec![MockTerm::m()];
    for _ in 0..bound {
        let mut next = vec![MockTerm::m()];
        for left in &level {
            for right in &level {
                next.push(MockTerm::app(left.clone(), right.clone()));
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(kind: CensusKind, index: CensusIndex, bound: usize) -> Vec<BigInt> {
        brute_force_census(kind, index, bound)
            .unwrap()
            .values()
            .to_vec()
    }

    #[test]
    fn degree_censuses_reproduce_the_small_tables() {
        assert_eq!(
            counts(CensusKind::Maximal, CensusIndex::Degree, 7),
            [1, 1, 1, 2, 4, 9, 21, 51].map(BigInt::from)
        );
        assert_eq!(
            counts(CensusKind::Minimal, CensusIndex::Degree, 7),
            [1, 1, 2, 4, 12, 34, 108, 344].map(BigInt::from)
        );
        assert_eq!(
            counts(CensusKind::Isolated, CensusIndex::Degree, 6),
            [1, 1, 1, 1, 3, 5, 13].map(BigInt::from)
        );
        // Classes are in bijection with their maximal representatives.
        assert_eq!(
            counts(CensusKind::Classes, CensusIndex::Degree, 6),
            counts(CensusKind::Maximal, CensusIndex::Degree, 6)
        );
    }

    #[test]
    fn height_censuses_reproduce_the_small_tables() {
        assert_eq!(
            counts(CensusKind::Classes, CensusIndex::Height, 4),
            [1, 1, 2, 10, 170].map(BigInt::from)
        );
        assert_eq!(
            counts(CensusKind::Isolated, CensusIndex::Height, 4),
            [1, 1, 1, 3, 21].map(BigInt::from)
        );
        // Hand-checked prefix: M and MM are minimal, and of the three terms
        // of height 2 only M(MM) and (MM)M have no strict predecessor.
        assert_eq!(
            counts(CensusKind::Minimal, CensusIndex::Height, 2),
            [1, 1, 2].map(BigInt::from)
        );
    }

    #[test]
    fn level_enumeration_counts_all_shapes() {
        assert_eq!(closed_terms_of_height_at_most(0).len(), 1);
        assert_eq!(closed_terms_of_height_at_most(1).len(), 2);
        assert_eq!(closed_terms_of_height_at_most(2).len(), 5);
        assert_eq!(closed_terms_of_height_at_most(3).len(), 26);
        assert_eq!(closed_terms_of_height_at_most(4).len(), 677);
    }

    #[test]
    fn bounds_beyond_the_ceilings_are_rejected() {
        assert_eq!(
            brute_force_census(CensusKind::Maximal, CensusIndex::Degree, 13).unwrap_err(),
            EnumerationError::CensusBoundExceeded {
                unit: "degree",
                bound: 13,
                ceiling: 12,
            }
        );
        assert_eq!(
            brute_force_census(CensusKind::Isolated, CensusIndex::Height, 5).unwrap_err(),
            EnumerationError::CensusBoundExceeded {
                unit: "height",
                bound: 5,
                ceiling: 4,
            }
        );
    }
}
