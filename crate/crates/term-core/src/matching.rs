use std::collections::HashMap;

use crate::Term;

/// Whether some subterm of `subject` is an instance of `pattern` with
/// pattern variables standing for arbitrary terms.
///
/// Matching is non-linear: a variable repeated in the pattern must be bound
/// to structurally equal subterms. For example `(x1x2)(x1x2)` matches inside
/// `MM(MM)` because both halves instantiate `x1x2` to `MM`.
pub fn matches_factor(pattern: &Term, subject: &Term) -> bool {
    subject
        .subterms()
        .any(|sub| instantiates(pattern, sub, false))
}

/// Whether some subterm of `subject` is an instance of `pattern` with
/// pattern variables standing for variables only.
///
/// This is the containment test behind "suffix" avoidance: `Mx1` matches in
/// `M(Mx2)` (bind `x1` to `x2`) but not in `M(MM)` because `MM` is not a
/// variable.
pub fn matches_suffix(pattern: &Term, subject: &Term) -> bool {
    subject
        .subterms()
        .any(|sub| instantiates(pattern, sub, true))
}

fn instantiates(pattern: &Term, subject: &Term, vars_only: bool) -> bool {
    let mut bindings: HashMap<u32, &Term> = HashMap::new();
    match_with(pattern, subject, vars_only, &mut bindings)
}

fn match_with<'s>(
    pattern: &Term,
    subject: &'s Term,
    vars_only: bool,
    bindings: &mut HashMap<u32, &'s Term>,
) -> bool {
    match pattern {
        Term::Var(i) => {
            if vars_only && !matches!(subject, Term::Var(_)) {
                return false;
            }
            match bindings.get(i) {
                Some(bound) => *bound == subject,
                None => {
                    bindings.insert(*i, subject);
                    true
                }
            }
        }
        Term::Con(s) => matches!(subject, Term::Con(t) if s == t),
        Term::App(pl, pr) => match subject {
            Term::App(sl, sr) => {
                match_with(pl, sl, vars_only, bindings) && match_with(pr, sr, vars_only, bindings)
            }
            _ => false,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_term, Alphabet};

    fn term(text: &str, symbols: &[&str]) -> Term {
        let alphabet = Alphabet::new(symbols.iter().copied()).unwrap();
        parse_term(text, &alphabet).unwrap()
    }

    // The running example ((A x3)(B ((x1 x3) x1)))(A A).
    fn example() -> Term {
        term("(Ax3)(B(x1x3x1))(AA)", &["A", "B"])
    }

    #[test]
    fn factor_finds_a_nonlinear_instance() {
        let pattern = term("B(x1x2)", &["B"]);
        assert!(matches_factor(&pattern, &example()));
    }

    #[test]
    fn a_bare_variable_is_a_factor_of_everything() {
        let pattern = Term::var(1);
        assert!(matches_factor(&pattern, &example()));
        assert!(matches_factor(&pattern, &Term::con("M")));
    }

    #[test]
    fn repeated_pattern_variables_require_equal_subterms() {
        let pattern = term("(x1x2)(x1x2)", &[]);
        assert!(matches_factor(&pattern, &term("MM(MM)", &["M"])));
        assert!(!matches_factor(&pattern, &term("MM(M(MM))", &["M"])));
    }

    #[test]
    fn suffix_matching_binds_variables_to_variables_only() {
        let subject = example();
        assert!(matches_suffix(&term("x1x2x3", &[]), &subject));
        // x1 x3 x1 repeats its outer variable; x1 x1 x1 demands all three equal.
        assert!(!matches_suffix(&term("x1x1x1", &[]), &subject));
    }

    #[test]
    fn suffix_rejects_compound_arguments() {
        let pattern = term("Mx1", &["M"]);
        assert!(!matches_suffix(&pattern, &term("M(MM)", &["M"])));
        assert!(matches_suffix(&pattern, &term("M(Mx2)", &["M"])));
    }

    #[test]
    fn suffix_implies_factor_on_a_known_pair() {
        let pattern = term("x1x2x3", &[]);
        let subject = example();
        assert!(matches_suffix(&pattern, &subject));
        assert!(matches_factor(&pattern, &subject));
    }
}
