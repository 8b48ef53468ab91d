//! The covering relation on duplicative forests, the partial order it
//! generates, recursive meets and joins, and the interval poset above a
//! forest.
//!
//! A covering move picks one white node, blackens it, and duplicates its
//! child sequence. The resulting order compares only forests of equal length
//! and preserves height, which keeps every interval finite.

use std::collections::BTreeSet;

use lattice_analysis::{poset_from_successors, Poset};
use num_bigint::BigUint;

use crate::forest::{Color, Forest, ForestError, Tree};

/// All forests obtained from `forest` by one covering move: some white node
/// turns black and its child sequence `c` becomes `c·c`.
pub fn covering_successors(forest: &Forest) -> BTreeSet<Forest> {
    let mut out = BTreeSet::new();
    for (i, tree) in forest.trees().iter().enumerate() {
        for replacement in tree_successors(tree) {
            let mut trees = forest.trees().to_vec();
            trees[i] = replacement;
            out.insert(Forest::from_trees(trees));
        }
    }
    out
}

fn tree_successors(tree: &Tree) -> Vec<Tree> {
    let mut out: Vec<Tree> = covering_successors(tree.children())
        .into_iter()
        .map(|children| Tree::new(tree.color(), children))
        .collect();
    if tree.color() == Color::White {
        out.push(Tree::black(tree.children().concat(tree.children())));
    }
    out
}

/// Whether `upper` is reachable from `lower` by covering moves, decided
/// recursively: equal lengths always; the empty forest only below itself;
/// single trees compare by matching colours and recursing on children, or
/// white below black when the black node's children split into two halves
/// each above the white node's children; longer forests compare pointwise.
pub fn forest_leq(lower: &Forest, upper: &Forest) -> bool {
    lower.len() == upper.len()
        && lower
            .trees()
            .iter()
            .zip(upper.trees())
            .all(|(s, t)| tree_leq(s, t))
}

fn tree_leq(lower: &Tree, upper: &Tree) -> bool {
    match (lower.color(), upper.color()) {
        (Color::White, Color::White) | (Color::Black, Color::Black) => {
            forest_leq(lower.children(), upper.children())
        }
        (Color::White, Color::Black) => {
            // The duplicated halves keep the original length, so the only
            // possible split of the black node's children is at the midpoint.
            let original = lower.children();
            let doubled = upper.children();
            if doubled.len() != 2 * original.len() {
                return false;
            }
            let (first, second) = doubled.trees().split_at(original.len());
            original.trees().iter().zip(first).all(|(s, t)| tree_leq(s, t))
                && original.trees().iter().zip(second).all(|(s, t)| tree_leq(s, t))
        }
        (Color::Black, Color::White) => false,
    }
}

fn split_halves(forest: &Forest) -> Result<(Forest, Forest), ForestError> {
    if forest.len() % 2 != 0 {
        return Err(ForestError::OddDuplicate {
            length: forest.len(),
        });
    }
    let (first, second) = forest.trees().split_at(forest.len() / 2);
    Ok((
        Forest::from_trees(first.to_vec()),
        Forest::from_trees(second.to_vec()),
    ))
}

/// Greatest lower bound of two forests lying in a common interval. Defined
/// pointwise on equal-length forests; on single trees it matches colours and
/// recurses, and a white node against a black one takes the white side with
/// the black node's duplicated halves folded in. Structural failure means the
/// forests share no interval.
pub fn forest_meet(left: &Forest, right: &Forest) -> Result<Forest, ForestError> {
    if left.len() != right.len() {
        return Err(ForestError::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let trees = left
        .trees()
        .iter()
        .zip(right.trees())
        .map(|(s, t)| tree_meet(s, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Forest::from_trees(trees))
}

fn tree_meet(left: &Tree, right: &Tree) -> Result<Tree, ForestError> {
    match (left.color(), right.color()) {
        (Color::White, Color::White) => Ok(Tree::white(forest_meet(
            left.children(),
            right.children(),
        )?)),
        (Color::Black, Color::Black) => Ok(Tree::black(forest_meet(
            left.children(),
            right.children(),
        )?)),
        (Color::White, Color::Black) => {
            let (first, second) = split_halves(right.children())?;
            let inner = forest_meet(&forest_meet(left.children(), &first)?, &second)?;
            Ok(Tree::white(inner))
        }
        (Color::Black, Color::White) => tree_meet(right, left),
    }
}

/// Least upper bound of two forests lying in a common interval; dual to
/// [`forest_meet`], with a white node against a black one resolved by pushing
/// the join into both duplicated halves of the black node.
pub fn forest_join(left: &Forest, right: &Forest) -> Result<Forest, ForestError> {
    if left.len() != right.len() {
        return Err(ForestError::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let trees = left
        .trees()
        .iter()
        .zip(right.trees())
        .map(|(s, t)| tree_join(s, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Forest::from_trees(trees))
}

fn tree_join(left: &Tree, right: &Tree) -> Result<Tree, ForestError> {
    match (left.color(), right.color()) {
        (Color::White, Color::White) => Ok(Tree::white(forest_join(
            left.children(),
            right.children(),
        )?)),
        (Color::Black, Color::Black) => Ok(Tree::black(forest_join(
            left.children(),
            right.children(),
        )?)),
        (Color::White, Color::Black) => {
            let (first, second) = split_halves(right.children())?;
            let joined = forest_join(left.children(), &first)?
                .concat(&forest_join(left.children(), &second)?);
            Ok(Tree::black(joined))
        }
        (Color::Black, Color::White) => tree_join(right, left),
    }
}

/// An ordered pair of forests, optionally carrying a saturated chain of
/// covering moves from the lower to the upper one as evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestOrderWitness {
    lower: Forest,
    upper: Forest,
    covering_chain: Option<Vec<Forest>>,
}

impl ForestOrderWitness {
    /// Wraps the pair after validating the chain, when present: it must start
    /// at `lower`, end at `upper`, and advance by one covering move per step.
    pub fn new(
        lower: Forest,
        upper: Forest,
        covering_chain: Option<Vec<Forest>>,
    ) -> Result<Self, ForestError> {
        if let Some(chain) = &covering_chain {
            if chain.first() != Some(&lower) {
                return Err(ForestError::InvalidWitness(
                    "chain does not start at the lower forest",
                ));
            }
            if chain.last() != Some(&upper) {
                return Err(ForestError::InvalidWitness(
                    "chain does not end at the upper forest",
                ));
            }
            for pair in chain.windows(2) {
                if !covering_successors(&pair[0]).contains(&pair[1]) {
                    return Err(ForestError::InvalidWitness(
                        "consecutive chain entries are not one covering move apart",
                    ));
                }
            }
        }
        Ok(ForestOrderWitness {
            lower,
            upper,
            covering_chain,
        })
    }

    /// Searches for a covering chain from `lower` to `upper`, walking greedily
    /// through covering moves that stay below `upper`. Returns `None` when the
    /// forests are not ordered.
    pub fn search(lower: &Forest, upper: &Forest) -> Option<Self> {
        if !forest_leq(lower, upper) {
            return None;
        }
        let mut chain = vec![lower.clone()];
        while chain.last() != Some(upper) {
            let current = chain.last().cloned()?;
            let next = covering_successors(&current)
                .into_iter()
                .find(|candidate| forest_leq(candidate, upper))?;
            chain.push(next);
        }
        Some(ForestOrderWitness {
            lower: lower.clone(),
            upper: upper.clone(),
            covering_chain: Some(chain),
        })
    }

    pub fn lower(&self) -> &Forest {
        &self.lower
    }

    pub fn upper(&self) -> &Forest {
        &self.upper
    }

    pub fn covering_chain(&self) -> Option<&[Forest]> {
        self.covering_chain.as_deref()
    }
}

/// The finite poset of all forests reachable from `forest` by covering moves,
/// with the moves themselves as cover relations and `forest` as bottom.
pub fn forest_interval(forest: &Forest) -> Poset<Forest> {
    poset_from_successors(forest.clone(), |f| covering_successors(f))
        .expect("covering moves strictly ascend, so they generate a finite bottom-rooted poset")
}

/// Number of elements of [`forest_interval`] without building it: one for the
/// empty forest, the product over roots otherwise, where a black node keeps
/// its children's count `p` and a white node contributes `p + p²` (stay white
/// with greater children, or blacken and let both duplicated halves grow
/// independently).
pub fn interval_cardinality(forest: &Forest) -> BigUint {
    forest
        .trees()
        .iter()
        .map(tree_cardinality)
        .fold(BigUint::from(1u8), |acc, n| acc * n)
}

fn tree_cardinality(tree: &Tree) -> BigUint {
    let inner = interval_cardinality(tree.children());
    match tree.color() {
        Color::Black => inner,
        Color::White => &inner + &inner * &inner,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::parse_forest;

    fn f(text: &str) -> Forest {
        parse_forest(text).expect("test forest should parse")
    }

    fn renderings(set: &BTreeSet<Forest>) -> BTreeSet<String> {
        set.iter().map(Forest::to_string).collect()
    }

    #[test]
    fn covering_moves_blacken_and_duplicate() {
        let set = covering_successors(&f("o[o[]]"));
        assert_eq!(
            renderings(&set),
            BTreeSet::from(["o[b[]]".to_string(), "b[o[]o[]]".to_string()])
        );
        assert!(covering_successors(&f("b[]")).is_empty());
        assert_eq!(
            renderings(&covering_successors(&f("o[]"))),
            BTreeSet::from(["b[]".to_string()])
        );
        assert!(covering_successors(&Forest::empty()).is_empty());
    }

    #[test]
    fn order_follows_the_recursive_cases() {
        assert!(forest_leq(&Forest::empty(), &Forest::empty()));
        assert!(forest_leq(&f("o[]"), &f("b[]")));
        assert!(forest_leq(&f("o[o[]]"), &f("b[b[]b[]]")));
        assert!(forest_leq(&f("o[o[]]"), &f("o[o[]]")));
        assert!(!forest_leq(&f("b[]"), &f("o[]")));
        assert!(!forest_leq(&f("o[]"), &f("o[]o[]")));
        assert!(!forest_leq(&f("o[o[]]"), &f("b[o[]b[]b[]]")));
        assert!(!forest_leq(&f("b[o[]o[]]"), &f("b[o[]b[]]b[]")));
    }

    #[test]
    fn meet_and_join_match_the_reference_examples() {
        assert_eq!(
            forest_meet(&f("o[b[]]"), &f("b[o[]o[]]")),
            Ok(f("o[o[]]"))
        );
        assert_eq!(
            forest_join(&f("o[b[]]"), &f("b[o[]o[]]")),
            Ok(f("b[b[]b[]]"))
        );
        let sample = f("b[o[]o[o[]]]o[]");
        assert_eq!(forest_meet(&sample, &sample), Ok(sample.clone()));
        assert_eq!(forest_join(&sample, &sample), Ok(sample));
    }

    #[test]
    fn meet_and_join_report_incompatible_contexts() {
        assert_eq!(
            forest_meet(&f("o[]"), &f("o[]o[]")),
            Err(ForestError::LengthMismatch { left: 1, right: 2 })
        );
        assert_eq!(
            forest_join(&f("o[]"), &f("b[o[]]")),
            Err(ForestError::OddDuplicate { length: 1 })
        );
        assert_eq!(
            forest_meet(&f("o[o[]]"), &f("b[o[]o[]o[]]")),
            Err(ForestError::OddDuplicate { length: 3 })
        );
    }

    #[test]
    fn witnesses_carry_validated_chains() {
        let lower = f("o[o[]]");
        let upper = f("b[b[]b[]]");
        let witness = ForestOrderWitness::search(&lower, &upper)
            .expect("the forests are ordered");
        let chain = witness.covering_chain().expect("search returns a chain");
        assert_eq!(chain.first(), Some(&lower));
        assert_eq!(chain.last(), Some(&upper));
        // Saturated chains of both lengths 2 and 3 join these endpoints; the
        // greedy search happens to take the short one through "o[b[]]".
        assert_eq!(chain.len(), 3);
        assert!(ForestOrderWitness::new(
            lower.clone(),
            upper.clone(),
            Some(chain.to_vec())
        )
        .is_ok());

        assert!(ForestOrderWitness::search(&f("b[]"), &f("o[]")).is_none());
        assert_eq!(
            ForestOrderWitness::new(lower.clone(), upper.clone(), Some(vec![lower, upper])),
            Err(ForestError::InvalidWitness(
                "consecutive chain entries are not one covering move apart",
            ))
        );
    }

    #[test]
    fn intervals_have_the_documented_shapes() {
        let maximal = forest_interval(&f("o[o[]]o[]"));
        let stats = maximal.stats();
        assert_eq!((stats.elements, stats.covers), (12, 20));

        assert_eq!(forest_interval(&Forest::empty()).len(), 1);

        let six = forest_interval(&f("o[o[]]"));
        assert_eq!((six.stats().elements, six.stats().covers), (6, 7));
        assert_eq!(six.elements()[six.bottom()], f("o[o[]]"));
    }

    #[test]
    fn cardinality_predicts_interval_sizes() {
        for text in ["e", "o[]", "b[]", "o[o[]]", "o[o[]]o[]", "b[o[]o[]]"] {
            let forest = f(text);
            let expected = BigUint::from(forest_interval(&forest).len());
            assert_eq!(interval_cardinality(&forest), expected, "forest {text}");
        }
    }
}
