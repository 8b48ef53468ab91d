use std::fmt;

use thiserror::Error;

/// An applicative term: a variable, a constant, or an application of one
/// term to another.
///
/// Terms are immutable values; all operations build new terms. Structural
/// equality (the derived `Eq`) is the only equality used anywhere, and the
/// derived `Ord` gives a deterministic — if arbitrary — total order that
/// containers rely on for reproducible iteration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    /// The variable `x_i`; indices start at 1.
    Var(u32),
    /// A named constant such as `M` or `S`.
    Con(String),
    /// Application of the left term to the right term.
    App(Box<Term>, Box<Term>),
}

/// A snapshot of the structural statistics of one term.
///
/// `degree` counts internal (application) nodes, `height` is the maximal
/// number of applications on a root-to-leaf path, and `frontier` lists the
/// variable indices from left to right. A term is closed when its frontier
/// is empty, linear when the frontier has no repeats, and planar when the
/// frontier is exactly `x1 x2 ... xn` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermMetrics {
    pub degree: usize,
    pub height: usize,
    pub frontier: Vec<u32>,
    pub is_closed: bool,
    pub is_linear: bool,
    pub is_planar: bool,
}

/// Error raised by [`Term::compose`] when the term mentions a variable the
/// argument list does not cover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("term uses variable x{index} but only {provided} argument(s) were supplied")]
pub struct ComposeError {
    pub index: u32,
    pub provided: usize,
}

impl Term {
    /// The variable `x_index`. Panics if `index` is zero; variable indices
    /// start at 1.
    pub fn var(index: u32) -> Term {
        assert!(index >= 1, "variable indices start at 1");
        Term::Var(index)
    }

    /// A constant with the given name.
    pub fn con(symbol: impl Into<String>) -> Term {
        let symbol = symbol.into();
        assert!(!symbol.is_empty(), "constant symbols are nonempty");
        Term::Con(symbol)
    }

    /// The application `left right`.
    pub fn app(left: Term, right: Term) -> Term {
        Term::App(Box::new(left), Box::new(right))
    }

    /// Left-associated application of `head` to each argument in turn:
    /// `apply_all(X, [a, b, c])` is `((X a) b) c`.
    pub fn apply_all(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    /// Number of internal (application) nodes.
    pub fn degree(&self) -> usize {
        match self {
            Term::Var(_) | Term::Con(_) => 0,
            Term::App(l, r) => 1 + l.degree() + r.degree(),
        }
    }

    /// Maximal number of applications on a path from the root to a leaf.
    pub fn height(&self) -> usize {
        match self {
            Term::Var(_) | Term::Con(_) => 0,
            Term::App(l, r) => 1 + l.height().max(r.height()),
        }
    }

    /// The variable indices appearing in the term, from left to right.
    pub fn frontier(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_frontier(&mut out);
        out
    }

    fn collect_frontier(&self, out: &mut Vec<u32>) {
        match self {
            Term::Var(i) => out.push(*i),
            Term::Con(_) => {}
            Term::App(l, r) => {
                l.collect_frontier(out);
                r.collect_frontier(out);
            }
        }
    }

    /// True when the term contains no variables.
    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Con(_) => true,
            Term::App(l, r) => l.is_closed() && r.is_closed(),
        }
    }

    /// True when no variable occurs more than once.
    pub fn is_linear(&self) -> bool {
        let mut frontier = self.frontier();
        frontier.sort_unstable();
        frontier.windows(2).all(|w| w[0] != w[1])
    }

    /// True when the frontier is exactly `x1 x2 ... xn` for some `n >= 0`.
    pub fn is_planar(&self) -> bool {
        self.frontier()
            .iter()
            .enumerate()
            .all(|(k, &i)| i as usize == k + 1)
    }

    /// Number of occurrences of the named constant.
    pub fn constant_count(&self, symbol: &str) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Con(s) => usize::from(s == symbol),
            Term::App(l, r) => l.constant_count(symbol) + r.constant_count(symbol),
        }
    }

    /// Largest variable index occurring in the term, or 0 for a term
    /// without variables.
    pub fn max_var_index(&self) -> u32 {
        match self {
            Term::Var(i) => *i,
            Term::Con(_) => 0,
            Term::App(l, r) => l.max_var_index().max(r.max_var_index()),
        }
    }

    /// All structural metrics at once.
    pub fn metrics(&self) -> TermMetrics {
        let frontier = self.frontier();
        let is_closed = frontier.is_empty();
        let is_linear = {
            let mut sorted = frontier.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        let is_planar = frontier
            .iter()
            .enumerate()
            .all(|(k, &i)| i as usize == k + 1);
        TermMetrics {
            degree: self.degree(),
            height: self.height(),
            frontier,
            is_closed,
            is_linear,
            is_planar,
        }
    }

    /// Every subterm of `self`, including `self`, in preorder.
    pub fn subterms(&self) -> impl Iterator<Item = &Term> {
        let mut stack = vec![self];
        std::iter::from_fn(move || {
            let next = stack.pop()?;
            if let Term::App(l, r) = next {
                stack.push(r);
                stack.push(l);
            }
            Some(next)
        })
    }

    /// Simultaneous substitution: every occurrence of `x_i` is replaced by
    /// `args[i - 1]`. The argument list must cover every variable of the
    /// term; there is no implicit padding.
    pub fn compose(&self, args: &[Term]) -> Result<Term, ComposeError> {
        match self {
            Term::Var(i) => args
                .get((*i - 1) as usize)
                .cloned()
                .ok_or(ComposeError {
                    index: *i,
                    provided: args.len(),
                }),
            Term::Con(_) => Ok(self.clone()),
            Term::App(l, r) => Ok(Term::app(l.compose(args)?, r.compose(args)?)),
        }
    }
}

/// Canonical rendering: left-associative juxtaposition with parentheses
/// exactly where needed, i.e. around any application in right position.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Con(s) => f.write_str(s),
            Term::App(l, r) => {
                write!(f, "{l}")?;
                if matches!(**r, Term::App(_, _)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> Term {
        Term::con("M")
    }

    #[test]
    fn renders_with_minimal_parentheses() {
        let t = Term::app(m(), Term::app(m(), m()));
        assert_eq!(t.to_string(), "M(MM)");
        let left = Term::app(Term::app(m(), m()), m());
        assert_eq!(left.to_string(), "MMM");
        assert_eq!(Term::var(3).to_string(), "x3");
    }

    #[test]
    fn degree_and_height_of_leaves_and_applications() {
        assert_eq!(m().degree(), 0);
        assert_eq!(m().height(), 0);
        let t = Term::app(Term::app(m(), m()), Term::app(m(), m()));
        assert_eq!(t.degree(), 3);
        assert_eq!(t.height(), 2);
    }

    #[test]
    fn frontier_reads_left_to_right() {
        // A(x3 x1) x3 has frontier 3, 1, 3.
        let t = Term::app(
            Term::app(Term::con("A"), Term::app(Term::var(3), Term::var(1))),
            Term::var(3),
        );
        assert_eq!(t.frontier(), vec![3, 1, 3]);
        assert!(!t.is_closed());
        assert!(!t.is_linear());
        assert!(!t.is_planar());
    }

    #[test]
    fn planar_means_frontier_is_the_identity_sequence() {
        let t = Term::app(Term::var(1), Term::app(Term::var(2), Term::var(3)));
        assert!(t.is_planar());
        assert!(t.is_linear());
        let swapped = Term::app(Term::var(2), Term::var(1));
        assert!(!swapped.is_planar());
        assert!(swapped.is_linear());
        assert!(m().is_planar());
    }

    #[test]
    fn compose_replaces_variables_simultaneously() {
        // x1 x2 [x2, x1] swaps the variables in one pass.
        let t = Term::app(Term::var(1), Term::var(2));
        let swapped = t.compose(&[Term::var(2), Term::var(1)]).unwrap();
        assert_eq!(swapped.to_string(), "x2x1");
    }

    #[test]
    fn compose_identity_substitution_is_identity() {
        let t = Term::app(Term::app(m(), Term::var(1)), Term::var(2));
        let args = [Term::var(1), Term::var(2)];
        assert_eq!(t.compose(&args).unwrap(), t);
    }

    #[test]
    fn compose_on_a_bare_variable_projects() {
        let t = Term::var(1);
        let mm = Term::app(m(), m());
        assert_eq!(t.compose(&[mm.clone()]).unwrap(), mm);
    }

    #[test]
    fn compose_rejects_uncovered_variables() {
        let t = Term::var(3);
        let err = t.compose(&[m()]).unwrap_err();
        assert_eq!(err.index, 3);
        assert_eq!(err.provided, 1);
    }

    #[test]
    fn constant_count_distinguishes_symbols() {
        let t = Term::app(Term::con("M1"), Term::app(m(), Term::con("M1")));
        assert_eq!(t.constant_count("M1"), 2);
        assert_eq!(t.constant_count("M"), 1);
        assert_eq!(t.constant_count("K"), 0);
    }

    #[test]
    fn subterms_enumerates_every_position() {
        let t = Term::app(m(), Term::app(m(), m()));
        let subs: Vec<String> = t.subterms().map(|s| s.to_string()).collect();
        assert_eq!(subs, vec!["M(MM)", "M", "MM", "M", "M"]);
    }
}
