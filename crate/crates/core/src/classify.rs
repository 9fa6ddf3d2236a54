//! The type dichotomy.
//!
//! Membership verdicts, computed on the simplified type:
//!
//! * `+|o` is Word Break,
//! * subsequences of `|+o|` / `|+o+` get the almost-linear engines,
//! * zero/one-operator types without concat are trivial,
//! * everything else is quadratic-hard under SETH-style assumptions, and we
//!   name a core hard type it descends from.
//!
//! Pattern matching (does some substring match?) has its own simplification
//! and verdict table; notably `|o|` and `|o+` are membership-easy but
//! pattern-matching-hard.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::regex::{
    describes_empty, infer_type, parse_type, Op, Regex, SimplifyRule, TypeError, TypeSeq,
};

/// Core hard types for membership. The first five are classical, the last
/// three are what pins down the boundary next to the easy maximal types.
pub const MEMBERSHIP_CORES: [&str; 8] = [
    "o*", "o|o", "o+o", "o|+", "o+|", "+|o+", "+|o|", "|+|o",
];

/// Core hard types for pattern matching.
pub const PATTERN_MATCHING_CORES: [&str; 7] = ["o*", "o|o", "o+o", "o|+", "o+|", "|o|", "|o+"];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Engine {
    SetWord,
    Rle,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// At most one operator and no concat: comparison against a symbol set.
    Trivial,
    AlmostLinear(Engine),
    WordBreak,
    /// `core` is a hard type reachable from the simplified type by the
    /// hardness-spreading rules; `None` only if the search found no witness.
    Hard { core: Option<TypeSeq> },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Trivial => write!(f, "trivial"),
            Verdict::AlmostLinear(Engine::SetWord) => write!(f, "almost-linear (set-word engine)"),
            Verdict::AlmostLinear(Engine::Rle) => write!(f, "almost-linear (run-length engine)"),
            Verdict::WordBreak => write!(f, "word-break; Theta((n m^(1/3))^(1+-o(1))) expected"),
            Verdict::Hard { core: Some(c) } => {
                write!(f, "hard; (nm)^(1-o(1)) conditional lower bound (core {c})")
            }
            Verdict::Hard { core: None } => {
                write!(f, "hard; (nm)^(1-o(1)) conditional lower bound")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub original: TypeSeq,
    pub simplified: TypeSeq,
    pub trail: Vec<SimplifyRule>,
    pub verdict: Verdict,
}

pub fn classify_membership(t: &TypeSeq) -> Classification {
    let simp = t.simplify();
    let s = &simp.simplified;
    let verdict = membership_verdict(s);
    Classification {
        original: t.clone(),
        simplified: simp.simplified.clone(),
        trail: simp.trail,
        verdict,
    }
}

fn membership_verdict(s: &TypeSeq) -> Verdict {
    let word_break = parse_type("+|o").unwrap();
    if *s == word_break {
        return Verdict::WordBreak;
    }
    if s.len() <= 1 && !s.contains(Op::Concat) {
        return Verdict::Trivial;
    }
    let set_max = parse_type("|+o|").unwrap();
    let rle_max = parse_type("|+o+").unwrap();
    let in_set = s.is_subsequence_of(&set_max);
    let in_rle = s.is_subsequence_of(&rle_max);
    match (in_set, in_rle) {
        // When both engines apply, run-length wins for concat-bearing types
        // (plain string comparison there); set-word handles the rest.
        (true, true) if s.contains(Op::Concat) => Verdict::AlmostLinear(Engine::Rle),
        (true, true) | (true, false) => Verdict::AlmostLinear(Engine::SetWord),
        (false, true) => Verdict::AlmostLinear(Engine::Rle),
        (false, false) => Verdict::Hard {
            core: find_core_witness(s, &MEMBERSHIP_CORES, true),
        },
    }
}

/// Searches backwards from `t` for a core type, undoing the four
/// hardness-spreading moves: extending by a suffix, inserting a union,
/// turning `*` into `+*`, and (membership only) prepending `+` before a
/// leading concat. Every move shortens the type, so the search space is tiny.
fn find_core_witness(t: &TypeSeq, cores: &[&str], prepend_plus_rule: bool) -> Option<TypeSeq> {
    let cores: Vec<Vec<Op>> = cores.iter().map(|c| parse_type(c).unwrap().0).collect();
    let mut seen: HashSet<Vec<Op>> = HashSet::new();
    let mut queue: VecDeque<Vec<Op>> = VecDeque::new();
    seen.insert(t.0.clone());
    queue.push_back(t.0.clone());
    while let Some(u) = queue.pop_front() {
        if cores.contains(&u) {
            return Some(TypeSeq(u));
        }
        let push = |v: Vec<Op>, seen: &mut HashSet<Vec<Op>>, queue: &mut VecDeque<Vec<Op>>| {
            if !v.is_empty() && seen.insert(v.clone()) {
                queue.push_back(v);
            }
        };
        for k in 1..u.len() {
            push(u[..k].to_vec(), &mut seen, &mut queue);
        }
        for i in 0..u.len() {
            if u[i] == Op::Union {
                let mut v = u.clone();
                v.remove(i);
                push(v, &mut seen, &mut queue);
            }
        }
        for i in 0..u.len().saturating_sub(1) {
            if u[i] == Op::Plus && u[i + 1] == Op::Star {
                let mut v = u.clone();
                v.remove(i);
                push(v, &mut seen, &mut queue);
            }
        }
        if prepend_plus_rule && u.len() >= 2 && u[0] == Op::Plus && u[1] == Op::Concat {
            push(u[1..].to_vec(), &mut seen, &mut queue);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Applying a simplification trail to a concrete tree.

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Transformed {
    Regex(Regex),
    /// The star-prefix rule changes the language only at the empty string, so
    /// when the input is empty the answer is already determined.
    AnswerNow(bool),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TransformError {
    Type(TypeError),
    TargetMismatch { expected: TypeSeq, simplified: TypeSeq },
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::Type(e) => e.fmt(f),
            TransformError::TargetMismatch {
                expected,
                simplified,
            } => write!(
                f,
                "target type {expected} is not the simplification {simplified}"
            ),
        }
    }
}

impl std::error::Error for TransformError {}

impl From<TypeError> for TransformError {
    fn from(e: TypeError) -> Self {
        TransformError::Type(e)
    }
}

/// Rewrites `r` into an equivalent tree of the simplified type `target`.
///
/// Equivalence is exact for the pair-collapse and `+|+` rules; the
/// star-to-plus rule preserves the language on non-empty inputs only, hence
/// the `input_empty` escape hatch returning [`Transformed::AnswerNow`].
pub fn transform_regex(
    r: &Regex,
    target: &TypeSeq,
    input_empty: bool,
) -> Result<Transformed, TransformError> {
    let t = infer_type(r)?;
    let simp = t.simplify();
    if simp.simplified != *target {
        return Err(TransformError::TargetMismatch {
            expected: target.clone(),
            simplified: simp.simplified,
        });
    }
    let mut cur = r.clone();
    for rule in &simp.trail {
        match rule {
            SimplifyRule::CollapsePair { pos } => splice_level(&mut cur, pos + 1),
            SimplifyRule::PlusUnionPlus { pos } => splice_level(&mut cur, pos + 2),
            SimplifyRule::StarToPlus { pos } => {
                if input_empty {
                    return Ok(Transformed::AnswerNow(describes_empty(&cur)));
                }
                relabel_level(&mut cur, pos + 1, Op::Plus);
            }
        }
    }
    debug_assert_eq!(infer_type(&cur).as_ref(), Ok(target));
    Ok(Transformed::Regex(cur))
}

/// Replaces every inner child of the nodes at `depth` (1-based) by that
/// child's children, contracting one level. For the pair rule the spliced
/// children share the parent operator; for the `+|+` rule they are the plus
/// nodes below the unions. Leaf children stay put.
fn splice_level(r: &mut Regex, depth: usize) {
    fn walk(r: &mut Regex, d: usize, target: usize) {
        if let Regex::Node(_, children) = r {
            if d == target {
                let old = std::mem::take(children);
                for c in old {
                    match c {
                        Regex::Node(_, gc) => children.extend(gc),
                        leaf => children.push(leaf),
                    }
                }
            } else {
                for c in children {
                    walk(c, d + 1, target);
                }
            }
        }
    }
    walk(r, 1, depth)
}

fn relabel_level(r: &mut Regex, depth: usize, to: Op) {
    fn walk(r: &mut Regex, d: usize, target: usize, to: Op) {
        if let Regex::Node(op, children) = r {
            if d == target {
                *op = to;
            } else {
                for c in children {
                    walk(c, d + 1, target, to);
                }
            }
        }
    }
    walk(r, 1, depth, to)
}

// ---------------------------------------------------------------------------
// Pattern matching.

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PmFamily {
    /// Subsequence of `|o`: dictionary matching.
    UnionOfStrings,
    /// Subsequence of `o|`: superset matching over blocks of symbol sets.
    SupersetBlocks,
    /// Subsequence of `o+`: a concatenation of symbol powers.
    ConcatPlus,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PmVerdict {
    /// Simplified type starts with `*` or `|*`: the pattern matches inside
    /// any text that survives a linear scan.
    Linear,
    NearLinear(PmFamily),
    Hard { core: Option<TypeSeq> },
}

impl fmt::Display for PmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PmVerdict::Linear => write!(f, "linear"),
            PmVerdict::NearLinear(PmFamily::UnionOfStrings) => {
                write!(f, "near-linear (dictionary matching, |o)")
            }
            PmVerdict::NearLinear(PmFamily::SupersetBlocks) => {
                write!(f, "near-linear (superset matching, o|)")
            }
            PmVerdict::NearLinear(PmFamily::ConcatPlus) => write!(f, "near-linear (o+)"),
            PmVerdict::Hard { core: Some(c) } => {
                write!(f, "hard; (nm)^(1-o(1)) conditional lower bound (core {c})")
            }
            PmVerdict::Hard { core: None } => {
                write!(f, "hard; (nm)^(1-o(1)) conditional lower bound")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PmClassification {
    pub original: TypeSeq,
    pub simplified: TypeSeq,
    pub verdict: PmVerdict,
}

/// Pattern-matching simplification: collapse doubled operators, drop a
/// leading plus, and shrink a leading `|+` to `|`. All three preserve the
/// pattern-matching problem (a leading plus or the inner plus of `|+` can
/// always take exactly one round when only a substring must match).
pub fn pm_simplify(t: &TypeSeq) -> TypeSeq {
    let mut ops = t.0.clone();
    loop {
        if let Some(i) = (1..ops.len()).position(|i| ops[i - 1] == ops[i]) {
            ops.remove(i + 1);
            continue;
        }
        if ops.first() == Some(&Op::Plus) {
            ops.remove(0);
            continue;
        }
        if ops.len() >= 2 && ops[0] == Op::Union && ops[1] == Op::Plus {
            ops.remove(1);
            continue;
        }
        break;
    }
    TypeSeq(ops)
}

pub fn classify_pattern_matching(t: &TypeSeq) -> PmClassification {
    let s = pm_simplify(t);
    let verdict = pm_verdict(&s);
    PmClassification {
        original: t.clone(),
        simplified: s,
        verdict,
    }
}

fn pm_verdict(s: &TypeSeq) -> PmVerdict {
    let starts_star = s.ops().first() == Some(&Op::Star);
    let starts_union_star = s.len() >= 2 && s.0[0] == Op::Union && s.0[1] == Op::Star;
    if starts_star || starts_union_star {
        return PmVerdict::Linear;
    }
    for (max, fam) in [
        ("|o", PmFamily::UnionOfStrings),
        ("o|", PmFamily::SupersetBlocks),
        ("o+", PmFamily::ConcatPlus),
    ] {
        if s.is_subsequence_of(&parse_type(max).unwrap()) {
            return PmVerdict::NearLinear(fam);
        }
    }
    PmVerdict::Hard {
        core: find_core_witness(s, &PATTERN_MATCHING_CORES, false),
    }
}
