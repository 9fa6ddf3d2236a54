//! Membership routing: classify the type, normalize the tree, pick the
//! engine the dichotomy prescribes.
//!
//! Hard types are still answered, just by the NFA baseline; the verdict only
//! tells callers what runtime to expect. A [`Matcher`] holds the compiled
//! artifact so one regex can be matched against many texts.

use std::fmt;

use crate::baseline::Nfa;
use crate::classify::{classify_membership, transform_regex, Classification, Transformed, Verdict};
use crate::classify::{Engine, TransformError};
use crate::linear::{
    compile_rle_groups, compile_setword_groups, match_rle_groups, match_setword_groups,
    CompileError, RleGroups, SetWordGroups,
};
use crate::regex::{describes_empty, infer_type, Op, Regex, Symbol, Text, TypeError};
use crate::wordbreak::{wordbreak, Algo, WordBreakInstance};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EngineChoice {
    Auto,
    Nfa,
    SetWord,
    Rle,
}

impl std::str::FromStr for EngineChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<EngineChoice, String> {
        match s {
            "auto" => Ok(EngineChoice::Auto),
            "nfa" => Ok(EngineChoice::Nfa),
            "setword" => Ok(EngineChoice::SetWord),
            "rle" => Ok(EngineChoice::Rle),
            other => Err(format!("unknown engine {other:?} (auto|nfa|setword|rle)")),
        }
    }
}

/// What actually answers the queries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EngineKind {
    Trivial,
    SetWord,
    Rle,
    WordBreak,
    Nfa,
}

impl EngineKind {
    /// Where `EngineChoice::Auto` routes this verdict.
    pub fn for_verdict(v: &Verdict) -> EngineKind {
        match v {
            Verdict::Trivial => EngineKind::Trivial,
            Verdict::AlmostLinear(Engine::SetWord) => EngineKind::SetWord,
            Verdict::AlmostLinear(Engine::Rle) => EngineKind::Rle,
            Verdict::WordBreak => EngineKind::WordBreak,
            Verdict::Hard { .. } => EngineKind::Nfa,
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineKind::Trivial => "trivial",
            EngineKind::SetWord => "set-word",
            EngineKind::Rle => "run-length",
            EngineKind::WordBreak => "word-break",
            EngineKind::Nfa => "nfa",
        })
    }
}

#[derive(Debug)]
pub enum MatchError {
    Type(TypeError),
    Transform(TransformError),
    Compile { engine: EngineKind, source: CompileError },
}

impl fmt::Display for MatchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchError::Type(e) => e.fmt(f),
            MatchError::Transform(e) => e.fmt(f),
            MatchError::Compile { engine, source } => write!(f, "{engine} engine: {source}"),
        }
    }
}

impl std::error::Error for MatchError {}

impl From<TypeError> for MatchError {
    fn from(e: TypeError) -> Self {
        MatchError::Type(e)
    }
}

impl From<TransformError> for MatchError {
    fn from(e: TransformError) -> Self {
        MatchError::Transform(e)
    }
}

enum Compiled {
    Trivial(Regex),
    SetWord(SetWordGroups),
    Rle(RleGroups),
    WordBreak(Vec<Text>),
    Nfa(Nfa),
}

pub struct Matcher {
    pub classification: Classification,
    empty_ok: bool,
    compiled: Compiled,
}

impl Matcher {
    pub fn new(r: &Regex) -> Result<Matcher, MatchError> {
        Matcher::with_engine(r, EngineChoice::Auto)
    }

    pub fn with_engine(r: &Regex, choice: EngineChoice) -> Result<Matcher, MatchError> {
        let t = infer_type(r)?;
        let classification = classify_membership(&t);
        let empty_ok = describes_empty(r);
        let normalized = || -> Result<Regex, MatchError> {
            match transform_regex(r, &classification.simplified, false)? {
                Transformed::Regex(rt) => Ok(rt),
                Transformed::AnswerNow(_) => unreachable!("only reachable on empty input"),
            }
        };
        let compile = |engine: EngineKind, rt: &Regex| -> Result<Compiled, MatchError> {
            let wrap = |source| MatchError::Compile { engine, source };
            match engine {
                EngineKind::SetWord => {
                    Ok(Compiled::SetWord(compile_setword_groups(rt).map_err(wrap)?))
                }
                EngineKind::Rle => Ok(Compiled::Rle(compile_rle_groups(rt).map_err(wrap)?)),
                _ => unreachable!(),
            }
        };
        let compiled = match choice {
            EngineChoice::Nfa => Compiled::Nfa(Nfa::compile(r)),
            EngineChoice::SetWord => compile(EngineKind::SetWord, &normalized()?)?,
            EngineChoice::Rle => compile(EngineKind::Rle, &normalized()?)?,
            EngineChoice::Auto => match EngineKind::for_verdict(&classification.verdict) {
                EngineKind::Trivial => Compiled::Trivial(normalized()?),
                EngineKind::SetWord => compile(EngineKind::SetWord, &normalized()?)?,
                EngineKind::Rle => compile(EngineKind::Rle, &normalized()?)?,
                EngineKind::WordBreak => {
                    let rt = normalized()?;
                    let dict = union_word_dict(&rt).ok_or(MatchError::Compile {
                        engine: EngineKind::WordBreak,
                        source: CompileError {
                            msg: "word-break types flatten to a word dictionary",
                        },
                    })?;
                    Compiled::WordBreak(dict)
                }
                EngineKind::Nfa => Compiled::Nfa(Nfa::compile(r)),
            },
        };
        Ok(Matcher {
            classification,
            empty_ok,
            compiled,
        })
    }

    pub fn engine(&self) -> EngineKind {
        match self.compiled {
            Compiled::Trivial(_) => EngineKind::Trivial,
            Compiled::SetWord(_) => EngineKind::SetWord,
            Compiled::Rle(_) => EngineKind::Rle,
            Compiled::WordBreak(_) => EngineKind::WordBreak,
            Compiled::Nfa(_) => EngineKind::Nfa,
        }
    }

    /// Expected-cost warning for types the dichotomy pins as hard.
    pub fn warning(&self) -> Option<String> {
        match &self.classification.verdict {
            v @ Verdict::Hard { .. } => Some(format!(
                "type {} is {v}; falling back to the O(nm) NFA",
                self.classification.original
            )),
            _ => None,
        }
    }

    pub fn matches(&self, text: &[Symbol]) -> bool {
        if text.is_empty() {
            return self.empty_ok;
        }
        match &self.compiled {
            Compiled::Trivial(rt) => trivial_match(rt, text),
            Compiled::SetWord(g) => match_setword_groups(g, text),
            Compiled::Rle(g) => match_rle_groups(g, text),
            Compiled::WordBreak(dict) => {
                let inst = WordBreakInstance::new(Text(text.to_vec()), dict.clone());
                wordbreak(&inst, Algo::Auto)
            }
            Compiled::Nfa(nfa) => nfa.matches(text),
        }
    }
}

/// Simplified trivial shapes: a symbol, a union of symbols, or one repeated
/// symbol.
fn trivial_match(rt: &Regex, text: &[Symbol]) -> bool {
    match rt {
        Regex::Leaf(s) => text == [*s],
        Regex::Node(Op::Union, cs) => {
            text.len() == 1 && cs.iter().any(|c| matches!(c, Regex::Leaf(s) if *s == text[0]))
        }
        Regex::Node(Op::Plus, cs) => match cs[0] {
            Regex::Leaf(s) => text.iter().all(|&x| x == s),
            _ => unreachable!("simplified trivial tree"),
        },
        _ => unreachable!("simplified trivial tree"),
    }
}

/// The dictionary of a word-break type: branches of the union under the
/// plus, each a leaf or a concatenation of leaves.
fn union_word_dict(rt: &Regex) -> Option<Vec<Text>> {
    let Regex::Node(Op::Plus, cs) = rt else {
        return None;
    };
    let Regex::Node(Op::Union, branches) = &cs[0] else {
        return None;
    };
    let mut dict = Vec::new();
    for b in branches {
        match b {
            Regex::Leaf(s) => dict.push(Text(vec![*s])),
            Regex::Node(Op::Concat, fs) => {
                let mut word = Vec::new();
                for f in fs {
                    let Regex::Leaf(s) = f else { return None };
                    word.push(*s);
                }
                dict.push(Text(word));
            }
            _ => return None,
        }
    }
    Some(dict)
}
