use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::Term;

/// The set of constant names a parse recognises.
///
/// Constants are lexed by maximal munch: at each position the longest
/// registered symbol wins, so with `M` and `M1` both registered the input
/// `M1` is a single token and `MM1` lexes as `M`, `M1`. A candidate
/// variable token (`x` followed by digits) loses to a strictly longer
/// constant match and wins ties, which keeps `x1` a variable even if a
/// constant `x` were registered.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: BTreeSet<String>,
}

/// Error raised when registering an unusable constant name.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("constant symbols must be nonempty")]
    EmptySymbol,
    #[error("constant symbol {0:?} may not contain whitespace or parentheses")]
    ForbiddenCharacter(String),
    #[error("constant symbol {0:?} may not start with a digit")]
    LeadingDigit(String),
}

impl Alphabet {
    /// Builds an alphabet from the given symbols, rejecting names that the
    /// lexer could never produce as tokens.
    pub fn new<I, S>(symbols: I) -> Result<Alphabet, AlphabetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = BTreeSet::new();
        for symbol in symbols {
            let symbol = symbol.into();
            if symbol.is_empty() {
                return Err(AlphabetError::EmptySymbol);
            }
            if symbol
                .chars()
                .any(|c| c.is_whitespace() || c == '(' || c == ')')
            {
                return Err(AlphabetError::ForbiddenCharacter(symbol));
            }
            if symbol.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(AlphabetError::LeadingDigit(symbol));
            }
            set.insert(symbol);
        }
        Ok(Alphabet { symbols: set })
    }

    /// Whether the symbol is registered.
    pub fn contains(&self, symbol: &str) -> bool {
        self.symbols.contains(symbol)
    }

    /// The registered symbols in sorted order.
    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.symbols.iter().map(String::as_str)
    }

    /// Longest registered symbol that prefixes `input`.
    fn longest_match<'a>(&self, input: &'a str) -> Option<&'a str> {
        self.symbols
            .iter()
            .filter(|s| input.starts_with(s.as_str()))
            .map(|s| &input[..s.len()])
            .max_by_key(|s| s.len())
    }
}

/// Error raised by [`parse_term`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input where a term was expected")]
    EmptyInput,
    #[error("byte {position}: no registered constant or variable starts here")]
    UnknownSymbol { position: usize },
    #[error("byte {position}: variable indices start at 1")]
    ZeroVariableIndex { position: usize },
    #[error("byte {position}: variable index does not fit in 32 bits")]
    HugeVariableIndex { position: usize },
    #[error("byte {position}: unbalanced parenthesis")]
    UnbalancedParenthesis { position: usize },
    #[error("byte {position}: empty parentheses")]
    EmptyGroup { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Con(String),
    Var(u32),
    Open,
    Close,
}

fn lex(text: &str, alphabet: &Alphabet) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        let rest = &text[pos..];
        let c = rest.chars().next().expect("nonempty rest");
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        if c == '(' {
            tokens.push((pos, Token::Open));
            pos += 1;
            continue;
        }
        if c == ')' {
            tokens.push((pos, Token::Close));
            pos += 1;
            continue;
        }
        let con_len = alphabet.longest_match(rest).map_or(0, str::len);
        let var_len = variable_prefix_len(rest);
        if con_len >= var_len && con_len > 0 {
            tokens.push((pos, Token::Con(rest[..con_len].to_string())));
            pos += con_len;
        } else if var_len > 0 {
            let digits = &rest[1..var_len];
            let index: u32 = digits
                .parse()
                .map_err(|_| ParseError::HugeVariableIndex { position: pos })?;
            if index == 0 {
                return Err(ParseError::ZeroVariableIndex { position: pos });
            }
            tokens.push((pos, Token::Var(index)));
            pos += var_len;
        } else {
            return Err(ParseError::UnknownSymbol { position: pos });
        }
    }
    Ok(tokens)
}

/// Length of a variable token (`x` followed by at least one digit) at the
/// start of `input`, or 0 if there is none.
fn variable_prefix_len(input: &str) -> usize {
    let mut chars = input.char_indices();
    match chars.next() {
        Some((_, 'x')) => {}
        _ => return 0,
    }
    let digits = input[1..].bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        0
    } else {
        1 + digits
    }
}

/// Parses the left-associative juxtaposition syntax: a term is a nonempty
/// sequence of atoms, an atom is a constant, a variable `x<digits>`, or a
/// parenthesised term. Whitespace between atoms is ignored.
pub fn parse_term(text: &str, alphabet: &Alphabet) -> Result<Term, ParseError> {
    let tokens = lex(text, alphabet)?;
    let mut parser = Parser {
        tokens: &tokens,
        cursor: 0,
    };
    let term = parser.term()?;
    match parser.peek() {
        None => Ok(term),
        // A leftover token here can only be a stray ')'.
        Some((position, _)) => Err(ParseError::UnbalancedParenthesis { position }),
    }
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    cursor: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, &Token)> {
        self.tokens.get(self.cursor).map(|(p, t)| (*p, t))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let first = self.atom()?.ok_or(ParseError::EmptyInput)?;
        let mut term = first;
        while let Some(next) = self.atom()? {
            term = Term::app(term, next);
        }
        Ok(term)
    }

    /// One atom, or `None` when the next token ends the current term.
    fn atom(&mut self) -> Result<Option<Term>, ParseError> {
        match self.peek() {
            None | Some((_, Token::Close)) => Ok(None),
            Some((_, Token::Con(s))) => {
                let term = Term::con(s.clone());
                self.cursor += 1;
                Ok(Some(term))
            }
            Some((_, Token::Var(i))) => {
                let term = Term::var(*i);
                self.cursor += 1;
                Ok(Some(term))
            }
            Some((open_pos, Token::Open)) => {
                self.cursor += 1;
                if let Some((close_pos, Token::Close)) = self.peek() {
                    return Err(ParseError::EmptyGroup {
                        position: close_pos,
                    });
                }
                let inner = self.term().map_err(|e| match e {
                    ParseError::EmptyInput => ParseError::UnbalancedParenthesis {
                        position: open_pos,
                    },
                    other => other,
                })?;
                match self.peek() {
                    Some((_, Token::Close)) => {
                        self.cursor += 1;
                        Ok(Some(inner))
                    }
                    _ => Err(ParseError::UnbalancedParenthesis { position: open_pos }),
                }
            }
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            f.write_str(s)?;
        }
        write!(f, "}}")
    }
}
