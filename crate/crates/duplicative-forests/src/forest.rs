//! Plane forests with white/black nodes, their textual syntax, and basic
//! structural statistics.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Node colour. White nodes are the ones the covering move may still blacken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    White,
    Black,
}

/// A node of a [`Forest`]: a colour together with an ordered forest of
/// children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    color: Color,
    children: Forest,
}

/// An ordered sequence of [`Tree`]s. The empty forest is written `e`; a tree
/// is written `o[...]` or `b[...]` depending on its colour, with the brackets
/// holding its children ( `o[]` is a white leaf).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
}

/// Errors from parsing forest syntax or from partial forest operations
/// (meets and joins are only defined within a common interval, and the term
/// translation only accepts the Mockingbird constant).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("unexpected character {found:?} at byte {position}")]
    UnexpectedCharacter { found: char, position: usize },
    #[error("unbalanced brackets: {0}")]
    Unbalanced(&'static str),
    #[error("empty input (the empty forest is written \"e\")")]
    EmptyInput,
    #[error("no meet or join: forests of lengths {left} and {right} are incomparable")]
    LengthMismatch { left: usize, right: usize },
    #[error("no meet or join: a duplicated node carries {length} children, which cannot split into equal halves")]
    OddDuplicate { length: usize },
    #[error("term contains the constant {symbol:?}, but only M translates to a forest")]
    ForeignConstant { symbol: String },
    #[error("invalid order witness: {0}")]
    InvalidWitness(&'static str),
}

impl Tree {
    /// A node of the given colour over the given children.
    pub fn new(color: Color, children: Forest) -> Self {
        Tree { color, children }
    }

    /// A white node over the given children.
    pub fn white(children: Forest) -> Self {
        Tree::new(Color::White, children)
    }

    /// A black node over the given children.
    pub fn black(children: Forest) -> Self {
        Tree::new(Color::Black, children)
    }

    /// A white leaf, `o[]`.
    pub fn white_leaf() -> Self {
        Tree::white(Forest::empty())
    }

    /// A black leaf, `b[]`.
    pub fn black_leaf() -> Self {
        Tree::black(Forest::empty())
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn children(&self) -> &Forest {
        &self.children
    }

    /// Number of nodes, this one included.
    pub fn node_count(&self) -> usize {
        1 + self.children.node_count()
    }

    /// Number of nodes on a longest root-to-leaf path; a leaf has height 1.
    pub fn height(&self) -> usize {
        1 + self.children.height()
    }
}

impl Forest {
    /// The empty forest.
    pub fn empty() -> Self {
        Forest::default()
    }

    /// A forest made of the given trees, in order.
    pub fn from_trees(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    /// A forest with a single root.
    pub fn singleton(tree: Tree) -> Self {
        Forest { trees: vec![tree] }
    }

    /// The two forests laid side by side.
    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest { trees }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    /// Number of roots.
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Total number of nodes.
    pub fn node_count(&self) -> usize {
        self.trees.iter().map(Tree::node_count).sum()
    }

    /// Height of the tallest root; the empty forest has height 0.
    pub fn height(&self) -> usize {
        self.trees.iter().map(Tree::height).max().unwrap_or(0)
    }

    /// Number of white nodes.
    pub fn white_count(&self) -> usize {
        self.trees
            .iter()
            .map(|tree| {
                usize::from(tree.color() == Color::White) + tree.children().white_count()
            })
            .sum()
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("e");
        }
        for tree in &self.trees {
            write!(f, "{tree}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.color {
            Color::White => 'o',
            Color::Black => 'b',
        };
        write!(f, "{letter}[")?;
        for child in self.children.trees() {
            write!(f, "{child}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Forest {
    type Err = ForestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_forest(s)
    }
}

/// Parse the textual syntax: a forest is `e` or a sequence of trees, a tree
/// is `o` or `b` optionally followed by a bracketed child forest, and
/// whitespace between tokens is ignored. `o` without brackets is the leaf
/// `o[]`, and `[]`/`[e]` both denote empty children.
pub fn parse_forest(text: &str) -> Result<Forest, ForestError> {
    let mut parser = Parser::new(text);
    parser.skip_whitespace();
    let forest = if parser.eat('e') {
        Forest::empty()
    } else {
        let trees = parser.tree_sequence()?;
        if trees.is_empty() {
            return Err(match parser.peek() {
                Some((position, found)) => ForestError::UnexpectedCharacter { found, position },
                None => ForestError::EmptyInput,
            });
        }
        Forest::from_trees(trees)
    };
    parser.skip_whitespace();
    match parser.peek() {
        None => Ok(forest),
        Some((position, ']')) => Err(ForestError::UnexpectedCharacter {
            found: ']',
            position,
        }),
        Some((position, found)) => Err(ForestError::UnexpectedCharacter { found, position }),
    }
}

struct Parser<'a> {
    rest: &'a str,
    offset: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            rest: text,
            offset: 0,
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.rest.chars().next().map(|c| (self.offset, c))
    }

    fn bump(&mut self) {
        if let Some(c) = self.rest.chars().next() {
            let width = c.len_utf8();
            self.rest = &self.rest[width..];
            self.offset += width;
        }
    }

    fn eat(&mut self, wanted: char) -> bool {
        if matches!(self.peek(), Some((_, c)) if c == wanted) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.bump();
        }
    }

    /// Zero or more trees separated by optional whitespace.
    fn tree_sequence(&mut self) -> Result<Vec<Tree>, ForestError> {
        let mut trees = Vec::new();
        loop {
            self.skip_whitespace();
            let color = match self.peek() {
                Some((_, 'o')) => Color::White,
                Some((_, 'b')) => Color::Black,
                _ => return Ok(trees),
            };
            self.bump();
            trees.push(self.finish_tree(color)?);
        }
    }

    /// The optional bracketed child forest after a colour letter.
    fn finish_tree(&mut self, color: Color) -> Result<Tree, ForestError> {
        self.skip_whitespace();
        if !self.eat('[') {
            return Ok(Tree::new(color, Forest::empty()));
        }
        self.skip_whitespace();
        let children = if self.eat('e') {
            Forest::empty()
        } else {
            Forest::from_trees(self.tree_sequence()?)
        };
        self.skip_whitespace();
        if !self.eat(']') {
            return match self.peek() {
                Some((position, found)) => {
                    Err(ForestError::UnexpectedCharacter { found, position })
                }
                None => Err(ForestError::Unbalanced("missing closing bracket")),
            };
        }
        Ok(Tree::new(color, children))
    }
}

/// All forests with exactly `node_count` nodes, in parse-stable order. Useful
/// as an exhaustive universe for small-scale checks (there are `2^n` times the
/// `n`-th Catalan number of them).
pub fn all_forests(node_count: usize) -> Vec<Forest> {
    let mut by_size: Vec<Vec<Forest>> = vec![vec![Forest::empty()]];
    for n in 1..=node_count {
        let mut level = Vec::new();
        // Split off the first tree: it uses k nodes (1 for its root) and the
        // remaining n - k nodes form the rest of the forest.
        for k in 1..=n {
            let rest: Vec<Forest> = by_size[n - k].clone();
            for children in &by_size[k - 1] {
                for color in [Color::White, Color::Black] {
                    let head = Tree::new(color, children.clone());
                    for tail in &rest {
                        let mut trees = vec![head.clone()];
                        trees.extend(tail.trees().iter().cloned());
                        level.push(Forest::from_trees(trees));
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.swap_remove(node_count)
}
