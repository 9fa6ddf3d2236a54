//! Core syntax: symbols, operator trees, homogeneous types.

use std::fmt;

mod parse;
mod types;

pub use parse::{parse_regex, render_regex, ParseError, SyntaxMode};
pub use types::{
    describes_empty, infer_type, parse_type, Simplification, SimplifyRule, TypeError, TypeSeq,
};

/// Alphabet symbol. The full 32-bit space is usable; generated hard instances
/// need alphabets larger than a byte.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The four regular operators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Op {
    Concat,
    Union,
    Star,
    Plus,
}

impl Op {
    /// ASCII spelling used in type strings: `o | * +`.
    pub fn as_char(self) -> char {
        match self {
            Op::Concat => 'o',
            Op::Union => '|',
            Op::Star => '*',
            Op::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Op> {
        match c {
            'o' => Some(Op::Concat),
            '|' => Some(Op::Union),
            '*' => Some(Op::Star),
            '+' => Some(Op::Plus),
            _ => None,
        }
    }

    /// Star and plus take exactly one child; concat and union take one or more.
    pub fn is_unary(self) -> bool {
        matches!(self, Op::Star | Op::Plus)
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Operator tree of a homogeneous regular expression.
///
/// Homogeneity (all inner nodes at one depth sharing an operator) is not
/// enforced structurally; [`infer_type`] checks it and reports the offending
/// level. Leaves may sit at any depth. Degree-1 concat/union nodes are legal
/// trees but cannot be written in the concrete syntax.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Regex {
    Leaf(Symbol),
    Node(Op, Vec<Regex>),
}

impl Regex {
    pub fn leaf(s: u32) -> Regex {
        Regex::Leaf(Symbol(s))
    }

    pub fn concat(children: Vec<Regex>) -> Regex {
        assert!(!children.is_empty(), "concat needs at least one child");
        Regex::Node(Op::Concat, children)
    }

    pub fn union(children: Vec<Regex>) -> Regex {
        assert!(!children.is_empty(), "union needs at least one child");
        Regex::Node(Op::Union, children)
    }

    pub fn star(child: Regex) -> Regex {
        Regex::Node(Op::Star, vec![child])
    }

    pub fn plus(child: Regex) -> Regex {
        Regex::Node(Op::Plus, vec![child])
    }

    pub fn node_count(&self) -> usize {
        match self {
            Regex::Leaf(_) => 1,
            Regex::Node(_, cs) => 1 + cs.iter().map(Regex::node_count).sum::<usize>(),
        }
    }

    /// Arity discipline: unary operators have exactly one child, the others
    /// at least one.
    pub fn arity_ok(&self) -> bool {
        match self {
            Regex::Leaf(_) => true,
            Regex::Node(op, cs) => {
                let n = cs.len();
                let here = if op.is_unary() { n == 1 } else { n >= 1 };
                here && cs.iter().all(Regex::arity_ok)
            }
        }
    }
}

/// Input string over [`Symbol`]s. The empty string is representable here and
/// only here; the syntax has no epsilon.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Text(pub Vec<Symbol>);

impl Text {
    pub fn from_ascii(bytes: &[u8]) -> Text {
        Text(bytes.iter().map(|&b| Symbol(b as u32)).collect())
    }

    pub fn from_ids(ids: &[u32]) -> Text {
        Text(ids.iter().map(|&i| Symbol(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    /// Whitespace-separated decimal ids.
    pub fn to_token_string(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|s| s.0.to_string()).collect();
        parts.join(" ")
    }

    pub fn parse_tokens(s: &str) -> Result<Text, String> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            let id: u32 = tok
                .parse()
                .map_err(|_| format!("bad symbol id {tok:?}"))?;
            out.push(Symbol(id));
        }
        Ok(Text(out))
    }
}

impl FromIterator<u32> for Text {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Text {
        Text(iter.into_iter().map(Symbol).collect())
    }
}
