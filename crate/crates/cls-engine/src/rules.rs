use std::collections::BTreeMap;

use term_core::{parse_term, Alphabet, AlphabetError, ParseError, Term};
use thiserror::Error;

/// A single combinator rule `X x1 … xn → rhs` with `n ≥ 1`, a constant-free
/// right-hand side, and all right-hand-side variables among `x1 … xn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    constant: String,
    order: u32,
    rhs: Term,
}

/// A combinatory logic system: one rule per constant, keyed by symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CLSDefinition {
    rules: BTreeMap<String, Rule>,
    alphabet: Alphabet,
}

/// Validation and lookup errors for rule tables and graph analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CLSError {
    #[error("rule for {constant} must have order at least 1")]
    ZeroOrder { constant: String },
    #[error("rule for {constant} uses the constant {found} on its right-hand side")]
    ConstantInRhs { constant: String, found: String },
    #[error("rule for {constant} has order {order} but its right-hand side uses x{index}")]
    VariableExceedsOrder {
        constant: String,
        order: u32,
        index: u32,
    },
    #[error("two rules registered for the constant {constant}")]
    DuplicateRule { constant: String },
    #[error("no builtin combinator named {name}")]
    UnknownBuiltin { name: String },
    #[error("no rule registered for the constant {symbol}")]
    UnknownSymbol { symbol: String },
    #[error(transparent)]
    Symbol(#[from] AlphabetError),
    #[error("the rewrite graph was truncated, so the result would only be a lower approximation")]
    TruncatedGraph,
}

/// The classic one-rule combinators, as `(symbol, order, right-hand side)`.
const BUILTIN_TABLE: [(&str, u32, &str); 14] = [
    ("I", 1, "x1"),
    ("M", 1, "x1x1"),
    ("K", 2, "x1"),
    ("T", 2, "x2x1"),
    ("M1", 2, "x1x1x2"),
    ("W", 2, "x1x1x2"),
    ("L", 2, "x1(x2x2)"),
    ("O", 2, "x2(x1x2)"),
    ("U", 2, "x2(x1x1x2)"),
    ("C", 3, "x1x3x2"),
    ("V", 3, "x3x1x2"),
    ("B", 3, "x1(x2x3)"),
    ("S", 3, "x1x3(x2x3)"),
    ("J", 4, "x1x2(x1x4x3)"),
];

impl Rule {
    /// Validates and builds a rule. Rejects order 0, constants on the
    /// right-hand side, and right-hand-side variables beyond the order.
    pub fn new(constant: impl Into<String>, order: u32, rhs: Term) -> Result<Rule, CLSError> {
        let constant = constant.into();
        if order == 0 {
            return Err(CLSError::ZeroOrder { constant });
        }
        if let Some(found) = rhs
            .subterms()
            .find_map(|sub| match sub {
                Term::Con(name) => Some(name.clone()),
                _ => None,
            })
        {
            return Err(CLSError::ConstantInRhs { constant, found });
        }
        let index = rhs.max_var_index();
        if index > order {
            return Err(CLSError::VariableExceedsOrder {
                constant,
                order,
                index,
            });
        }
        Ok(Rule {
            constant,
            order,
            rhs,
        })
    }

    pub fn constant(&self) -> &str {
        &self.constant
    }

    /// Number of arguments the constant consumes.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    /// Whether every variable `x1 … xn` occurs on the right-hand side.
    pub fn is_nonerasing(&self) -> bool {
        let frontier = self.rhs.frontier();
        (1..=self.order).all(|i| frontier.contains(&i))
    }

    /// Whether every variable `xi` occurs on the right-hand side, always at
    /// depth exactly `n + 1 - i`. Such rules preserve term height, and a
    /// hierarchical rule is in particular nonerasing.
    pub fn is_hierarchical(&self) -> bool {
        let mut depths: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        collect_depths(&self.rhs, 0, &mut depths);
        (1..=self.order).all(|i| {
            let target = (self.order + 1 - i) as usize;
            depths
                .get(&i)
                .is_some_and(|ds| ds.iter().all(|&d| d == target))
        })
    }
}

fn collect_depths(term: &Term, depth: usize, depths: &mut BTreeMap<u32, Vec<usize>>) {
    match term {
        Term::Var(index) => depths.entry(*index).or_default().push(depth),
        Term::Con(_) => {}
        Term::App(left, right) => {
            collect_depths(left, depth + 1, depths);
            collect_depths(right, depth + 1, depths);
        }
    }
}

impl CLSDefinition {
    /// Assembles a system from validated rules, rejecting duplicate
    /// constants and symbols unfit for the term grammar.
    pub fn new(rules: impl IntoIterator<Item = Rule>) -> Result<CLSDefinition, CLSError> {
        let mut table = BTreeMap::new();
        for rule in rules {
            let constant = rule.constant.clone();
            if table.insert(constant.clone(), rule).is_some() {
                return Err(CLSError::DuplicateRule { constant });
            }
        }
        let alphabet = Alphabet::new(table.keys().cloned())?;
        Ok(CLSDefinition {
            rules: table,
            alphabet,
        })
    }

    /// Builds a system from the builtin combinator catalogue.
    pub fn builtin(names: &[&str]) -> Result<CLSDefinition, CLSError> {
        let empty = Alphabet::new(Vec::<String>::new()).expect("empty alphabet is valid");
        let mut rules = Vec::with_capacity(names.len());
        for &name in names {
            let (symbol, order, rhs_text) = BUILTIN_TABLE
                .iter()
                .find(|(symbol, _, _)| *symbol == name)
                .ok_or_else(|| CLSError::UnknownBuiltin {
                    name: name.to_string(),
                })?;
            let rhs = parse_term(rhs_text, &empty).expect("builtin right-hand sides parse");
            rules.push(Rule::new(*symbol, *order, rhs).expect("builtin rules are valid"));
        }
        CLSDefinition::new(rules)
    }

    /// Symbols available to [`CLSDefinition::builtin`].
    pub fn builtin_names() -> impl Iterator<Item = &'static str> {
        BUILTIN_TABLE.iter().map(|(symbol, _, _)| *symbol)
    }

    pub fn rule(&self, symbol: &str) -> Result<&Rule, CLSError> {
        self.rules.get(symbol).ok_or_else(|| CLSError::UnknownSymbol {
            symbol: symbol.to_string(),
        })
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.values()
    }

    /// The constant symbols of the system, usable as a parsing alphabet.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Parses a term over this system's constants.
    pub fn parse(&self, text: &str) -> Result<Term, ParseError> {
        parse_term(text, &self.alphabet)
    }

    pub fn is_nonerasing(&self, symbol: &str) -> Result<bool, CLSError> {
        self.rule(symbol).map(Rule::is_nonerasing)
    }

    pub fn is_hierarchical(&self, symbol: &str) -> Result<bool, CLSError> {
        self.rule(symbol).map(Rule::is_hierarchical)
    }
}
