//! Randomised structural laws: parse/render round trips, substitution
//! composition, containment monotonicity, and metric recursions.

use proptest::prelude::*;
use term_core::{matches_factor, matches_suffix, parse_term, Alphabet, Term};

/// Terms over constants {M, A, B} and variables up to `x<max_var>`
/// (no variables at all when `max_var` is 0).
fn arb_term(max_var: u32) -> impl Strategy<Value = Term> {
    let constant = prop_oneof![Just("M"), Just("A"), Just("B")].prop_map(Term::con);
    let leaf = if max_var == 0 {
        constant.boxed()
    } else {
        prop_oneof![constant, (1..=max_var).prop_map(Term::var)].boxed()
    };
    leaf.prop_recursive(6, 48, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Term::app(l, r))
    })
}

fn alphabet() -> Alphabet {
    Alphabet::new(["M", "A", "B"]).unwrap()
}

proptest! {
    #[test]
    fn parse_inverts_render(t in arb_term(4)) {
        let rendered = t.to_string();
        let reparsed = parse_term(&rendered, &alphabet()).unwrap();
        prop_assert_eq!(reparsed, t);
    }

    #[test]
    fn rendering_is_stable_under_reparsing(t in arb_term(4)) {
        let rendered = t.to_string();
        let again = parse_term(&rendered, &alphabet()).unwrap().to_string();
        prop_assert_eq!(again, rendered);
    }

    /// Substituting in two stages agrees with substituting the composed
    /// arguments in one stage.
    #[test]
    fn composition_is_associative(
        t in arb_term(3),
        s in proptest::collection::vec(arb_term(2), 3),
        r in proptest::collection::vec(arb_term(2), 2),
    ) {
        let staged = t.compose(&s).unwrap().compose(&r).unwrap();
        let composed_args: Vec<Term> =
            s.iter().map(|si| si.compose(&r).unwrap()).collect();
        let direct = t.compose(&composed_args).unwrap();
        prop_assert_eq!(staged, direct);
    }

    #[test]
    fn identity_substitution_is_identity(t in arb_term(3)) {
        let identity = [Term::var(1), Term::var(2), Term::var(3)];
        prop_assert_eq!(t.compose(&identity).unwrap(), t);
    }

    /// A variables-only instance is in particular an arbitrary-terms
    /// instance.
    #[test]
    fn suffix_matching_implies_factor_matching(
        pattern in arb_term(2),
        subject in arb_term(3),
    ) {
        if matches_suffix(&pattern, &subject) {
            prop_assert!(matches_factor(&pattern, &subject));
        }
    }

    /// degree and height satisfy their defining recursions, and a binary
    /// tree with d internal nodes has d + 1 leaves.
    #[test]
    fn metric_recursions_hold(t in arb_term(3)) {
        match &t {
            Term::App(l, r) => {
                prop_assert_eq!(t.degree(), 1 + l.degree() + r.degree());
                prop_assert_eq!(t.height(), 1 + l.height().max(r.height()));
            }
            _ => {
                prop_assert_eq!(t.degree(), 0);
                prop_assert_eq!(t.height(), 0);
            }
        }
        let leaves = t.frontier().len()
            + ["M", "A", "B"]
                .iter()
                .map(|s| t.constant_count(s))
                .sum::<usize>();
        prop_assert_eq!(leaves, t.degree() + 1);
        prop_assert_eq!(t.is_closed(), t.frontier().is_empty());
    }

    /// The metrics snapshot agrees with the individual accessors.
    #[test]
    fn metrics_snapshot_is_consistent(t in arb_term(3)) {
        let m = t.metrics();
        prop_assert_eq!(m.degree, t.degree());
        prop_assert_eq!(m.height, t.height());
        prop_assert_eq!(m.frontier, t.frontier());
        prop_assert_eq!(m.is_closed, t.is_closed());
        prop_assert_eq!(m.is_linear, t.is_linear());
        prop_assert_eq!(m.is_planar, t.is_planar());
    }
}
