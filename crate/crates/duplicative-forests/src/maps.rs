//! Structure-preserving maps on duplicative forests: pruning, ladders, the
//! chain-length statistic, and the translation from Mockingbird terms.

use std::borrow::Borrow;

use lattice_analysis::{is_isomorphic_by, Poset};
use term_core::Term;

use crate::forest::{Color, Forest, ForestError, Tree};

/// Deletes every black node, splicing its children into its place; white
/// nodes are kept. The result is all-white and generates an isomorphic
/// interval.
pub fn pruning(forest: &Forest) -> Forest {
    let mut trees = Vec::new();
    for tree in forest.trees() {
        let pruned_children = pruning(tree.children());
        match tree.color() {
            Color::White => trees.push(Tree::white(pruned_children)),
            Color::Black => trees.extend(pruned_children.trees().iter().cloned()),
        }
    }
    Forest::from_trees(trees)
}

/// Pruning relative to a base forest below `upper`: deletes exactly the
/// black nodes the base already has and keeps every node that is white in
/// the base, whether or not a covering move has blackened it in `upper`.
///
/// This, not plain [`pruning`], is the map realizing the isomorphism between
/// the interval above `base` and the interval above `pruning(base)`: plain
/// pruning would also delete the black nodes created by covering moves and
/// throw their locations away (already `b[]`, the sole successor of `o[]`,
/// prunes to the empty forest, which lies outside the interval).
pub fn relative_pruning(base: &Forest, upper: &Forest) -> Result<Forest, ForestError> {
    if base.len() != upper.len() {
        return Err(ForestError::InvalidWitness(
            "the forest does not lie above the base",
        ));
    }
    let mut trees = Vec::new();
    for (low, high) in base.trees().iter().zip(upper.trees()) {
        match (low.color(), high.color()) {
            (Color::White, Color::White) => {
                trees.push(Tree::white(relative_pruning(
                    low.children(),
                    high.children(),
                )?));
            }
            (Color::White, Color::Black) => {
                let original = low.children();
                let doubled = high.children();
                if doubled.len() != 2 * original.len() {
                    return Err(ForestError::InvalidWitness(
                        "the forest does not lie above the base",
                    ));
                }
                let (first, second) = doubled.trees().split_at(original.len());
                let left = relative_pruning(original, &Forest::from_trees(first.to_vec()))?;
                let right = relative_pruning(original, &Forest::from_trees(second.to_vec()))?;
                trees.push(Tree::black(left.concat(&right)));
            }
            (Color::Black, Color::Black) => {
                let spliced = relative_pruning(low.children(), high.children())?;
                trees.extend(spliced.trees().iter().cloned());
            }
            (Color::Black, Color::White) => {
                return Err(ForestError::InvalidWitness(
                    "the forest does not lie above the base",
                ));
            }
        }
    }
    Ok(Forest::from_trees(trees))
}

/// The all-white unary chain of the given height: `ladder(0)` is empty and
/// `ladder(d)` is a white node over `ladder(d − 1)`.
pub fn ladder(height: usize) -> Forest {
    let mut forest = Forest::empty();
    for _ in 0..height {
        forest = Forest::singleton(Tree::white(forest));
    }
    forest
}

/// The chain-length statistic: the number of forests on a longest saturated
/// chain from `forest` to the top of its interval. The empty forest maps to
/// 1, a sequence of roots to one more than the sum of their statistics minus
/// the number of roots, a black node to its children's value, and a white
/// node to twice its children's value.
pub fn ml(forest: &Forest) -> u128 {
    let sum: u128 = forest.trees().iter().map(tree_ml).sum();
    sum + 1 - forest.len() as u128
}

fn tree_ml(tree: &Tree) -> u128 {
    let inner = ml(tree.children());
    match tree.color() {
        Color::White => 2 * inner,
        Color::Black => inner,
    }
}

/// Translates a term over the constant `M` (variables allowed) into a
/// duplicative forest: variables and `M` itself vanish, an application of `M`
/// to a non-`M` argument becomes a white node over the argument's forest, and
/// every other application becomes a black node over the concatenated forests
/// of its sides.
pub fn fr(term: &Term) -> Result<Forest, ForestError> {
    match term {
        Term::Var(_) => Ok(Forest::empty()),
        Term::Con(symbol) => {
            if symbol == "M" {
                Ok(Forest::empty())
            } else {
                Err(ForestError::ForeignConstant {
                    symbol: symbol.clone(),
                })
            }
        }
        Term::App(left, right) => {
            let left_is_m = matches!(left.as_ref(), Term::Con(s) if s == "M");
            let right_is_m = matches!(right.as_ref(), Term::Con(s) if s == "M");
            if left_is_m && !right_is_m {
                Ok(Forest::singleton(Tree::white(fr(right)?)))
            } else {
                let children = fr(left)?.concat(&fr(right)?);
                Ok(Forest::singleton(Tree::black(children)))
            }
        }
    }
}

/// Checks that elementwise translation by [`fr`] realizes a poset isomorphism
/// from a poset of terms onto a poset of forests: a bijection on elements
/// that maps the cover set exactly onto the cover set. Fails with an error if
/// any term contains a constant other than `M`.
pub fn check_isomorphism_via_fr<T: Borrow<Term>>(
    term_poset: &Poset<T>,
    forest_poset: &Poset<Forest>,
) -> Result<bool, ForestError> {
    for element in term_poset.elements() {
        fr(element.borrow())?;
    }
    Ok(is_isomorphic_by(term_poset, forest_poset, |t| {
        fr(t.borrow()).expect("every element was translated once already")
    }))
}

/// Constructs a forest `g` above a ladder with the same pruning as `forest`:
/// returns `(d, g)` with `ladder(d) ≤ g` and `pruning(g) = pruning(forest)`.
/// Since the interval above `g` inside the ladder's interval is exactly the
/// interval of `g`, this exhibits the interval of `pruning(forest)` — and so
/// of `forest` itself — inside a ladder interval.
///
/// The construction mirrors the pruning's shape: each white node stays white,
/// sibling groups are merged pairwise under black nodes, and branches are
/// padded with black nodes so that all leaves end up at one common depth.
pub fn ladder_witness(forest: &Forest) -> (usize, Forest) {
    let pruned = pruning(forest);
    if pruned.is_empty() {
        return (0, Forest::empty());
    }
    let embedded: Vec<Tree> = pruned.trees().iter().map(embed_tree).collect();
    let combined = combine_uniform(embedded);
    let depth = combined.height();
    (depth, Forest::singleton(combined))
}

/// Embeds one all-white tree as a uniform-depth tree with the same pruning.
fn embed_tree(tree: &Tree) -> Tree {
    debug_assert_eq!(tree.color(), Color::White);
    if tree.children().is_empty() {
        return Tree::white_leaf();
    }
    let embedded: Vec<Tree> = tree.children().trees().iter().map(embed_tree).collect();
    Tree::white(Forest::singleton(combine_uniform(embedded)))
}

/// Merges uniform-depth trees into a single uniform-depth tree with the
/// concatenation of their prunings, pairing halves under black nodes.
fn combine_uniform(mut trees: Vec<Tree>) -> Tree {
    debug_assert!(!trees.is_empty());
    if trees.len() == 1 {
        return trees.pop().expect("one tree is present");
    }
    let tail = trees.split_off(trees.len() / 2);
    let left = combine_uniform(trees);
    let right = combine_uniform(tail);
    let depth = left.height().max(right.height());
    let children = Forest::from_trees(vec![pad_to_depth(left, depth), pad_to_depth(right, depth)]);
    Tree::black(children)
}

/// Grows black padding below a uniform-depth tree until its leaves reach the
/// target depth; padding prunes away, so the pruning is unchanged.
fn pad_to_depth(mut tree: Tree, depth: usize) -> Tree {
    while tree.height() < depth {
        tree = deepen(&tree);
    }
    tree
}

fn deepen(tree: &Tree) -> Tree {
    let children = if tree.children().is_empty() {
        match tree.color() {
            Color::White => Forest::singleton(Tree::black_leaf()),
            Color::Black => Forest::from_trees(vec![Tree::black_leaf(), Tree::black_leaf()]),
        }
    } else {
        Forest::from_trees(tree.children().trees().iter().map(deepen).collect())
    };
    Tree::new(tree.color(), children)
}
