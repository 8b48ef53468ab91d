use std::collections::BTreeSet;
use std::sync::OnceLock;

use lattice_analysis::Poset;
use term_core::{matches_factor, matches_suffix, Term};

use crate::term::{MockTerm, MockingbirdError};

/// `M(x1x2)`: a factor of every term with a strict successor.
fn reducible_factor() -> &'static Term {
    static PATTERN: OnceLock<Term> = OnceLock::new();
    PATTERN.get_or_init(|| Term::app(Term::con("M"), Term::app(Term::var(1), Term::var(2))))
}

/// `Mx1`: a suffix of every open term with a strict successor.
fn reducible_suffix() -> &'static Term {
    static PATTERN: OnceLock<Term> = OnceLock::new();
    PATTERN.get_or_init(|| Term::app(Term::con("M"), Term::var(1)))
}

/// `(x1x2)(x1x2)`: a factor of every term with a strict predecessor.
fn expandable_factor() -> &'static Term {
    static PATTERN: OnceLock<Term> = OnceLock::new();
    PATTERN.get_or_init(|| {
        let pair = Term::app(Term::var(1), Term::var(2));
        Term::app(pair.clone(), pair)
    })
}

/// `x1x1`: a suffix of every open term with a strict predecessor.
fn expandable_suffix() -> &'static Term {
    static PATTERN: OnceLock<Term> = OnceLock::new();
    PATTERN.get_or_init(|| Term::app(Term::var(1), Term::var(1)))
}

impl MockTerm {
    /// All terms reachable in one strict rewrite step: a step in the left
    /// child, a step in the right child, or unfolding the whole term
    /// `Mu ⇒ uu`. The trivial step `MM ⇒ MM` is the only self-rewrite at
    /// the root and is excluded.
    pub fn successors(&self) -> BTreeSet<MockTerm> {
        let mut out = BTreeSet::new();
        if let Some((left, right)) = self.split() {
            for stepped in left.successors() {
                out.insert(MockTerm::app(stepped, right.clone()));
            }
            for stepped in right.successors() {
                out.insert(MockTerm::app(left.clone(), stepped));
            }
            if left.is_m() && !right.is_m() {
                out.insert(MockTerm::app(right.clone(), right));
            }
        }
        out
    }

    /// All terms rewriting to this one in one strict step: folding a
    /// subterm `uu` (identical children) back into `Mu`, anywhere. The
    /// fold at `u = M` reproduces `MM` and is excluded.
    pub fn predecessors(&self) -> BTreeSet<MockTerm> {
        let mut out = BTreeSet::new();
        if let Some((left, right)) = self.split() {
            for stepped in left.predecessors() {
                out.insert(MockTerm::app(stepped, right.clone()));
            }
            for stepped in right.predecessors() {
                out.insert(MockTerm::app(left.clone(), stepped));
            }
            if left == right && !left.is_m() {
                out.insert(MockTerm::app(MockTerm::m(), left));
            }
        }
        out
    }

    /// Whether no strict step leaves this term, characterised by avoiding
    /// the factor `M(x1x2)` and the suffix `Mx1`.
    pub fn is_maximal(&self) -> bool {
        !matches_factor(reducible_factor(), self.term())
            && !matches_suffix(reducible_suffix(), self.term())
    }

    /// Whether no strict step reaches this term, characterised by avoiding
    /// the factor `(x1x2)(x1x2)` and the suffix `x1x1`.
    pub fn is_minimal(&self) -> bool {
        !matches_factor(expandable_factor(), self.term())
            && !matches_suffix(expandable_suffix(), self.term())
    }

    /// Whether the term is alone in its connected component.
    pub fn is_isolated(&self) -> bool {
        self.is_minimal() && self.is_maximal()
    }
}

/// The poset of all terms reachable from `t`, with `t` at the bottom and
/// the strict one-step pairs as covering edges. Finiteness and
/// antisymmetry are theorems of the system, so construction cannot fail.
pub fn poset_of(t: &MockTerm) -> Poset<MockTerm> {
    lattice_analysis::poset_from_successors(t.clone(), |u| u.successors())
        .expect("one-step rewriting of Mockingbird terms generates a finite poset")
}

/// The product of the model on maximal terms: `t2 t2` when `t1 = M`, and
/// `t1 t2` otherwise. Both inputs must be maximal; the result then is.
pub fn star_max(t1: &MockTerm, t2: &MockTerm) -> Result<MockTerm, MockingbirdError> {
    for t in [t1, t2] {
        if !t.is_maximal() {
            return Err(MockingbirdError::NotMaximal {
                term: t.to_string(),
            });
        }
    }
    let product = if t1.is_m() {
        MockTerm::app(t2.clone(), t2.clone())
    } else {
        MockTerm::app(t1.clone(), t2.clone())
    };
    debug_assert!(product.is_maximal());
    Ok(product)
}

/// The product of the model on minimal terms: `M t2` when `t1 = t2`, and
/// `t1 t2` otherwise. Both inputs must be minimal; the result then is.
pub fn star_min(t1: &MockTerm, t2: &MockTerm) -> Result<MockTerm, MockingbirdError> {
    for t in [t1, t2] {
        if !t.is_minimal() {
            return Err(MockingbirdError::NotMinimal {
                term: t.to_string(),
            });
        }
    }
    let product = if t1 == t2 {
        MockTerm::app(MockTerm::m(), t2.clone())
    } else {
        MockTerm::app(t1.clone(), t2.clone())
    };
    debug_assert!(product.is_minimal());
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> MockTerm {
        MockTerm::parse(text).unwrap()
    }

    fn set(texts: &[&str]) -> BTreeSet<MockTerm> {
        texts.iter().map(|text| t(text)).collect()
    }

    #[test]
    fn successor_moves_follow_the_three_cases() {
        assert_eq!(t("M(MM)").successors(), set(&["MM(MM)"]));
        assert_eq!(t("MM").successors(), set(&[]));
        assert_eq!(
            t("M(M(MM))").successors(),
            set(&["M(MM(MM))", "M(MM)(M(MM))"])
        );
    }

    #[test]
    fn predecessor_moves_fold_equal_children() {
        assert_eq!(t("MM(MM)").predecessors(), set(&["M(MM)"]));
        assert_eq!(t("M(MM)").predecessors(), set(&[]));
        assert_eq!(t("MM").predecessors(), set(&[]));
    }

    #[test]
    fn open_terms_move_too() {
        assert_eq!(t("Mx1").successors(), set(&["x1x1"]));
        assert_eq!(t("x1x1").predecessors(), set(&["Mx1"]));
    }

    #[test]
    fn maximality_matches_the_figure() {
        assert!(t("MM").is_maximal());
        assert!(!t("M(MM)").is_maximal());
        assert!(t("MMM").is_maximal());
        assert!(!t("Mx1").is_maximal());
    }

    #[test]
    fn minimality_spares_the_double_m() {
        assert!(t("M(MM)").is_minimal());
        assert!(!t("MM(MM)").is_minimal());
        assert!(t("MM").is_minimal());
        assert!(!t("x1x1").is_minimal());
    }

    #[test]
    fn isolation_is_the_conjunction() {
        assert!(t("M").is_isolated());
        assert!(t("MM").is_isolated());
        assert!(t("MMM").is_isolated());
        assert!(!t("M(MM)").is_isolated());
    }

    #[test]
    fn maximal_products_follow_the_two_branches() {
        assert_eq!(star_max(&t("M"), &t("MM")).unwrap(), t("MM(MM)"));
        assert_eq!(star_max(&t("MM"), &t("M")).unwrap(), t("MMM"));
        assert_eq!(star_max(&t("M"), &t("M")).unwrap(), t("MM"));
        assert_eq!(
            star_max(&t("M(MM)"), &t("M")),
            Err(MockingbirdError::NotMaximal {
                term: "M(MM)".into()
            })
        );
    }

    #[test]
    fn minimal_products_follow_the_two_branches() {
        assert_eq!(star_min(&t("MM"), &t("MM")).unwrap(), t("M(MM)"));
        assert_eq!(star_min(&t("M"), &t("MM")).unwrap(), t("M(MM)"));
        assert_eq!(star_min(&t("MMM"), &t("MMM")).unwrap(), t("M(MMM)"));
        assert_eq!(
            star_min(&t("MM(MM)"), &t("M")),
            Err(MockingbirdError::NotMinimal {
                term: "MM(MM)".into()
            })
        );
    }
}
