//! Homogeneous types: inference, the nullability predicate, and the
//! language-preserving simplification rules.

use std::fmt;

use super::{Op, Regex};

/// Operator sequence of a homogeneous regex, root level first. A regex whose
/// root is a leaf has the empty type.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TypeSeq(pub Vec<Op>);

impl TypeSeq {
    pub fn new(ops: Vec<Op>) -> TypeSeq {
        TypeSeq(ops)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ops(&self) -> &[Op] {
        &self.0
    }

    /// Subsequence embedding (not substring): every operator of `self` can be
    /// matched left to right inside `other`.
    pub fn is_subsequence_of(&self, other: &TypeSeq) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|op| it.any(|o| o == op))
    }

    pub fn contains(&self, op: Op) -> bool {
        self.0.contains(&op)
    }

    /// Exhaustively applies the three simplification rules, first applicable
    /// rule at its leftmost position each round:
    ///
    /// 1. a doubled operator collapses (`pp -> p`),
    /// 2. `+|+ -> +|`,
    /// 3. a star whose prefix uses only `+` and `|` becomes a plus.
    ///
    /// Terminates because length plus star count strictly decreases. The
    /// returned trail replays the same rewrites on a concrete tree
    /// ([`crate::classify::transform_regex`]).
    pub fn simplify(&self) -> Simplification {
        let mut ops = self.0.clone();
        let mut trail = Vec::new();
        loop {
            if let Some(i) = (1..ops.len()).position(|i| ops[i - 1] == ops[i]) {
                // position() counts from the iterator start, so i is already
                // the index of the first element of the pair.
                ops.remove(i + 1);
                trail.push(SimplifyRule::CollapsePair { pos: i });
                continue;
            }
            if let Some(i) = (0..ops.len().saturating_sub(2))
                .find(|&i| ops[i] == Op::Plus && ops[i + 1] == Op::Union && ops[i + 2] == Op::Plus)
            {
                ops.remove(i + 2);
                trail.push(SimplifyRule::PlusUnionPlus { pos: i });
                continue;
            }
            if let Some(k) = ops.iter().position(|&o| o == Op::Star) {
                if ops[..k].iter().all(|&o| o == Op::Plus || o == Op::Union) {
                    ops[k] = Op::Plus;
                    trail.push(SimplifyRule::StarToPlus { pos: k });
                    continue;
                }
            }
            break;
        }
        Simplification {
            simplified: TypeSeq(ops),
            trail,
        }
    }
}

impl fmt::Display for TypeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.0 {
            write!(f, "{}", op.as_char())?;
        }
        Ok(())
    }
}

/// One rewrite step; positions are 0-based indices into the type at the time
/// the rule fired.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SimplifyRule {
    /// `t[pos] == t[pos+1]`; the entry at `pos + 1` is deleted.
    CollapsePair { pos: usize },
    /// `t[pos..pos+3] == +|+`; the entry at `pos + 2` is deleted.
    PlusUnionPlus { pos: usize },
    /// `t[pos] == *` with only `+`/`|` before it; rewritten to `+`.
    StarToPlus { pos: usize },
}

impl fmt::Display for SimplifyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based positions for human output.
        match self {
            SimplifyRule::CollapsePair { pos } => write!(f, "pp->p@{}", pos + 1),
            SimplifyRule::PlusUnionPlus { pos } => write!(f, "+|+->+|@{}", pos + 1),
            SimplifyRule::StarToPlus { pos } => write!(f, "*->+@{}", pos + 1),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Simplification {
    pub simplified: TypeSeq,
    pub trail: Vec<SimplifyRule>,
}

/// Parses a type string over `o | * +`.
pub fn parse_type(s: &str) -> Result<TypeSeq, TypeError> {
    let mut ops = Vec::with_capacity(s.len());
    for (i, c) in s.chars().enumerate() {
        match Op::from_char(c) {
            Some(op) => ops.push(op),
            None => return Err(TypeError::BadTypeChar { pos: i, ch: c }),
        }
    }
    Ok(TypeSeq(ops))
}

/// Reads the operator of every inner level. Levels are contiguous: an inner
/// node's ancestors are all inner, so if depth d has an inner node, so do all
/// shallower depths.
pub fn infer_type(r: &Regex) -> Result<TypeSeq, TypeError> {
    fn walk(r: &Regex, depth: usize, levels: &mut Vec<Option<Op>>) -> Result<(), TypeError> {
        if let Regex::Node(op, children) = r {
            if levels.len() < depth {
                levels.resize(depth, None);
            }
            match levels[depth - 1] {
                None => levels[depth - 1] = Some(*op),
                Some(seen) if seen == *op => {}
                Some(seen) => {
                    return Err(TypeError::HeterogeneousLevel {
                        level: depth,
                        first: seen,
                        second: *op,
                    })
                }
            }
            for c in children {
                walk(c, depth + 1, levels)?;
            }
        }
        Ok(())
    }

    let mut levels = Vec::new();
    walk(r, 1, &mut levels)?;
    Ok(TypeSeq(levels.into_iter().map(Option::unwrap).collect()))
}

/// Whether the regex accepts the empty string.
pub fn describes_empty(r: &Regex) -> bool {
    match r {
        Regex::Leaf(_) => false,
        Regex::Node(Op::Star, _) => true,
        Regex::Node(Op::Plus, cs) => describes_empty(&cs[0]),
        Regex::Node(Op::Concat, cs) => cs.iter().all(describes_empty),
        Regex::Node(Op::Union, cs) => cs.iter().any(describes_empty),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TypeError {
    /// Two distinct operators appear at the same depth (1-based).
    HeterogeneousLevel { level: usize, first: Op, second: Op },
    BadTypeChar { pos: usize, ch: char },
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeError::HeterogeneousLevel {
                level,
                first,
                second,
            } => write!(
                f,
                "not homogeneous: level {level} mixes '{first}' and '{second}'"
            ),
            TypeError::BadTypeChar { pos, ch } => {
                write!(f, "bad type character {ch:?} at position {}", pos + 1)
            }
        }
    }
}

impl std::error::Error for TypeError {}
