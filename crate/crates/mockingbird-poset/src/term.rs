use std::fmt;
use std::sync::OnceLock;

use term_core::{parse_term, Alphabet, ParseError, Term};
use thiserror::Error;

/// A term whose only constant is M; variables are allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MockTerm(Term);

/// Errors specific to the single-combinator system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MockingbirdError {
    #[error("the constant {symbol} does not belong to the Mockingbird system")]
    ForeignConstant { symbol: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{term} is not maximal")]
    NotMaximal { term: String },
    #[error("{term} is not minimal")]
    NotMinimal { term: String },
}

fn alphabet() -> &'static Alphabet {
    static ALPHABET: OnceLock<Alphabet> = OnceLock::new();
    ALPHABET.get_or_init(|| Alphabet::new(["M"]).expect("M is a valid symbol"))
}

impl MockTerm {
    /// Wraps a term after checking that its constants are all M.
    pub fn new(term: Term) -> Result<MockTerm, MockingbirdError> {
        let foreign = term.subterms().find_map(|sub| match sub {
            Term::Con(symbol) if symbol != "M" => Some(symbol.clone()),
            _ => None,
        });
        match foreign {
            Some(symbol) => Err(MockingbirdError::ForeignConstant { symbol }),
            None => Ok(MockTerm(term)),
        }
    }

    /// Parses a term over the alphabet {M}.
    pub fn parse(text: &str) -> Result<MockTerm, MockingbirdError> {
        Ok(MockTerm(parse_term(text, alphabet())?))
    }

    /// The constant M itself.
    pub fn m() -> MockTerm {
        MockTerm(Term::con("M"))
    }

    /// Applies one term to another.
    pub fn app(left: MockTerm, right: MockTerm) -> MockTerm {
        MockTerm(Term::app(left.0, right.0))
    }

    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn into_term(self) -> Term {
        self.0
    }

    /// Whether this is the bare constant M.
    pub fn is_m(&self) -> bool {
        matches!(self.0, Term::Con(_))
    }

    /// The two children when the term is an application.
    pub(crate) fn split(&self) -> Option<(MockTerm, MockTerm)> {
        match &self.0 {
            Term::App(left, right) => Some((
                MockTerm(left.as_ref().clone()),
                MockTerm(right.as_ref().clone()),
            )),
            _ => None,
        }
    }
}

impl fmt::Display for MockTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<MockTerm> for Term {
    fn from(term: MockTerm) -> Term {
        term.0
    }
}

// Sound because every derived comparison and hash of `MockTerm` delegates to
// the wrapped `Term`.
impl std::borrow::Borrow<Term> for MockTerm {
    fn borrow(&self) -> &Term {
        &self.0
    }
}

/// The right comb of degree `d`: `comb(0) = M` and
/// `comb(d) = M comb(d-1)`. Its poset is the canonical lattice of order
/// `d`.
pub fn comb(d: usize) -> MockTerm {
    let mut term = Term::con("M");
    for _ in 0..d {
        term = Term::app(Term::con("M"), term);
    }
    MockTerm(term)
}

/// All closed terms over M with exactly `degree` applications, i.e. all
/// binary-tree shapes with that many internal nodes (Catalan many).
pub fn closed_terms(degree: usize) -> Vec<MockTerm> {
    fn shapes(degree: usize) -> Vec<Term> {
        if degree == 0 {
            return vec![Term::con("M")];
        }
        let mut out = Vec::new();
        for left_degree in 0..degree {
            for left in shapes(left_degree) {
                for right in shapes(degree - 1 - left_degree) {
                    out.push(Term::app(left.clone(), right));
                }
            }
        }
        out
    }
    shapes(degree).into_iter().map(MockTerm).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combs_unfold_to_right_nested_applications() {
        assert_eq!(comb(0).to_string(), "M");
        assert_eq!(comb(2).to_string(), "M(MM)");
        assert_eq!(comb(4).to_string(), "M(M(M(MM)))");
        assert_eq!(comb(4).term().degree(), 4);
        assert_eq!(comb(4).term().height(), 4);
    }

    #[test]
    fn foreign_constants_are_rejected() {
        let term = Term::app(Term::con("M"), Term::con("K"));
        assert_eq!(
            MockTerm::new(term),
            Err(MockingbirdError::ForeignConstant { symbol: "K".into() })
        );
        assert!(MockTerm::parse("MK").is_err());
    }

    #[test]
    fn variables_are_welcome() {
        let open = MockTerm::parse("Mx1(x2x2)").unwrap();
        assert_eq!(open.to_string(), "Mx1(x2x2)");
    }

    #[test]
    fn closed_terms_are_counted_by_catalan_numbers() {
        let catalan = [1, 1, 2, 5, 14, 42];
        for (degree, &expected) in catalan.iter().enumerate() {
            assert_eq!(closed_terms(degree).len(), expected);
        }
        assert!(closed_terms(2).contains(&comb(2)));
    }
}
