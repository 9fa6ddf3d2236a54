//! Engine for types within `|+o+`.
//!
//! Texts and pattern bodies are compared through their run-length encodings:
//! a repeated body of s runs with distinct endpoint symbols matches iff s
//! divides the number of text runs and every text run fits the pattern tuple
//! of its residue class. Per-class minima and maxima for all divisors come
//! from one top-down sweep of the divisor tree. Bodies whose first and last
//! symbol coincide are rotated into that form first.

use std::collections::BTreeMap;

use super::divisors::{divisors_tree, DivisorTree};
use super::CompileError;
use crate::regex::{Op, Regex, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rle {
    /// Maximal runs as (symbol, length); adjacent symbols differ.
    pub runs: Vec<(Symbol, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunKind {
    Exact,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternRle {
    /// (symbol, kind, count): a maximal same-symbol group of count factors,
    /// exact when all of them are bare characters.
    pub runs: Vec<(Symbol, RunKind, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RleGroup {
    pub repeat: bool,
    pub pattern: PatternRle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RleGroups {
    pub groups: Vec<RleGroup>,
    pub singles: Vec<Symbol>,
}

pub fn rle_encode_text(text: &[Symbol]) -> Rle {
    let mut runs: Vec<(Symbol, usize)> = Vec::new();
    for &c in text {
        match runs.last_mut() {
            Some((sym, len)) if *sym == c => *len += 1,
            _ => runs.push((c, 1)),
        }
    }
    Rle { runs }
}

/// Encodes a concatenation of characters and repeated characters.
pub fn rle_encode_pattern(body: &Regex) -> Result<PatternRle, CompileError> {
    let factors = match body {
        Regex::Node(Op::Concat, cs) => cs.as_slice(),
        _ => std::slice::from_ref(body),
    };
    let mut runs: Vec<(Symbol, RunKind, usize)> = Vec::new();
    for f in factors {
        let (sym, kind) = match f {
            Regex::Leaf(s) => (*s, RunKind::Exact),
            Regex::Node(Op::Plus, cs) => match &cs[0] {
                Regex::Leaf(s) => (*s, RunKind::AtLeast),
                Regex::Node(..) => {
                    return Err(CompileError {
                        msg: "repeated factors take single characters only",
                    })
                }
            },
            Regex::Node(..) => {
                return Err(CompileError {
                    msg: "run-length bodies concatenate characters and repeated characters",
                })
            }
        };
        match runs.last_mut() {
            Some((s, k, count)) if *s == sym => {
                *count += 1;
                if kind == RunKind::AtLeast {
                    *k = RunKind::AtLeast;
                }
            }
            _ => runs.push((sym, kind, 1)),
        }
    }
    Ok(PatternRle { runs })
}

pub fn compile_rle_groups(r: &Regex) -> Result<RleGroups, CompileError> {
    let mut out = RleGroups {
        groups: Vec::new(),
        singles: Vec::new(),
    };
    let branches = match r {
        Regex::Node(Op::Union, cs) => cs.as_slice(),
        _ => std::slice::from_ref(r),
    };
    for b in branches {
        match b {
            Regex::Leaf(s) => out.singles.push(*s),
            Regex::Node(Op::Plus, cs) => out.groups.push(RleGroup {
                repeat: true,
                pattern: rle_encode_pattern(&cs[0])?,
            }),
            _ => out.groups.push(RleGroup {
                repeat: false,
                pattern: rle_encode_pattern(b)?,
            }),
        }
    }
    out.singles.sort_unstable();
    out.singles.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rotation {
    /// Both sides rotated; the pattern now has distinct endpoint symbols.
    Rotated { pattern: PatternRle, text: Rle },
    /// The group cannot match this text at all.
    Reject,
    /// Symbol-uniform pattern, answered on the spot.
    Trivial(bool),
}

fn tuple_fits(tuple: (Symbol, RunKind, usize), run_len: usize) -> bool {
    match tuple.1 {
        RunKind::Exact => run_len == tuple.2,
        RunKind::AtLeast => tuple.2 <= run_len,
    }
}

/// Endpoint normalization for a group whose body starts and ends with the
/// same symbol. Moving the text's trailing run and the pattern's trailing
/// tuple to the front preserves matching (the moved parts merge into the
/// leading run and tuple), and afterwards both endpoints differ.
pub fn normalize_rotation(group: &RleGroup, text: &Rle) -> Rotation {
    let runs = &group.pattern.runs;
    let (first, last) = (runs[0], *runs.last().unwrap());
    assert_eq!(first.0, last.0, "rotation expects matching endpoints");
    let sigma = first.0;

    if runs.len() == 1 {
        if text.runs.len() != 1 || text.runs[0].0 != sigma {
            return Rotation::Trivial(false);
        }
        let length = text.runs[0].1;
        let ok = match (group.repeat, first.1) {
            (true, RunKind::Exact) => length % first.2 == 0,
            (false, RunKind::Exact) => length == first.2,
            (_, RunKind::AtLeast) => length >= first.2,
        };
        return Rotation::Trivial(ok);
    }

    // a uniform text cannot realize two adjacent distinct symbols
    if text.runs.len() < 2 {
        return Rotation::Reject;
    }
    let (tf, tl) = (text.runs[0], *text.runs.last().unwrap());
    if tf.0 != sigma || tl.0 != sigma {
        return Rotation::Reject;
    }
    if !tuple_fits(first, tf.1) || !tuple_fits(last, tl.1) {
        return Rotation::Reject;
    }

    let mut text_runs = Vec::with_capacity(text.runs.len() - 1);
    text_runs.push((sigma, tl.1 + tf.1));
    text_runs.extend_from_slice(&text.runs[1..text.runs.len() - 1]);

    let merged_kind = if first.1 == RunKind::Exact && last.1 == RunKind::Exact {
        RunKind::Exact
    } else {
        RunKind::AtLeast
    };
    let mut pattern_runs = Vec::with_capacity(runs.len() - 1);
    pattern_runs.push((sigma, merged_kind, last.2 + first.2));
    pattern_runs.extend_from_slice(&runs[1..runs.len() - 1]);

    Rotation::Rotated {
        pattern: PatternRle { runs: pattern_runs },
        text: Rle { runs: text_runs },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTable {
    pub s: usize,
    /// Per residue class: shortest and longest run length in the class.
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    /// Class symbol; meaningful only when `clash` is false.
    pub sym: Vec<Symbol>,
    /// Two runs in one class carry different symbols: nothing of this
    /// period (or any divisor of it) can match.
    pub clash: bool,
}

/// Tables for every divisor of |r(T)|, aligned with `tree.divisors`. The
/// root is read off directly; every other divisor folds its parent's tables
/// along one prime step.
pub fn alpha_beta_tables(text: &Rle, tree: &DivisorTree) -> Vec<ResidueTable> {
    let n = tree.n();
    assert_eq!(n, text.runs.len());
    let count = tree.divisors.len();
    let mut out: Vec<Option<ResidueTable>> = vec![None; count];
    out[count - 1] = Some(ResidueTable {
        s: n,
        alpha: text.runs.iter().map(|r| r.1).collect(),
        beta: text.runs.iter().map(|r| r.1).collect(),
        sym: text.runs.iter().map(|r| r.0).collect(),
        clash: false,
    });
    for i in (0..count - 1).rev() {
        let s = tree.divisors[i];
        let parent = tree.parent[i].expect("only the root lacks a parent");
        let table = {
            let pt = out[parent].as_ref().expect("parents precede children");
            let p = pt.s / s;
            let mut alpha = vec![usize::MAX; s];
            let mut beta = vec![0; s];
            let mut sym = vec![Symbol(0); s];
            let mut clash = pt.clash;
            for j in 0..s {
                sym[j] = pt.sym[j];
                for q in 0..p {
                    let k = q * s + j;
                    alpha[j] = alpha[j].min(pt.alpha[k]);
                    beta[j] = beta[j].max(pt.beta[k]);
                    if pt.sym[k] != sym[j] {
                        clash = true;
                    }
                }
            }
            ResidueTable { s, alpha, beta, sym, clash }
        };
        out[i] = Some(table);
    }
    out.into_iter().map(Option::unwrap).collect()
}

pub fn match_rle_groups(g: &RleGroups, text: &[Symbol]) -> bool {
    let n = text.len();
    assert!(n >= 1, "empty text is decided upstream");
    if n == 1 && g.singles.binary_search(&text[0]).is_ok() {
        return true;
    }
    let rt = rle_encode_text(text);

    let mut plain: Vec<(&PatternRle, bool)> = Vec::new();
    let mut rotated: Vec<(PatternRle, bool)> = Vec::new();
    let mut rotated_text: Option<Rle> = None;
    for grp in &g.groups {
        let runs = &grp.pattern.runs;
        if runs[0].0 != runs.last().unwrap().0 {
            plain.push((&grp.pattern, grp.repeat));
        } else {
            match normalize_rotation(grp, &rt) {
                Rotation::Trivial(true) => return true,
                Rotation::Trivial(false) | Rotation::Reject => {}
                Rotation::Rotated { pattern, text } => {
                    // every surviving group rotates the text the same way
                    rotated_text.get_or_insert(text);
                    rotated.push((pattern, grp.repeat));
                }
            }
        }
    }

    if match_family(&plain, &rt) {
        return true;
    }
    if let Some(rt2) = &rotated_text {
        let refs: Vec<(&PatternRle, bool)> = rotated.iter().map(|(p, r)| (p, *r)).collect();
        if match_family(&refs, rt2) {
            return true;
        }
    }
    false
}

/// All patterns here have distinct endpoint symbols.
fn match_family(groups: &[(&PatternRle, bool)], text: &Rle) -> bool {
    let n_runs = text.runs.len();
    let mut by_size: BTreeMap<usize, Vec<&PatternRle>> = BTreeMap::new();
    for &(pattern, repeat) in groups {
        let s = pattern.runs.len();
        let feasible = if repeat { n_runs % s == 0 } else { s == n_runs };
        if feasible {
            by_size.entry(s).or_default().push(pattern);
        }
    }
    if by_size.is_empty() {
        return false;
    }
    let tree = divisors_tree(n_runs);
    let tables = alpha_beta_tables(text, &tree);
    for (s, patterns) in by_size {
        let table = &tables[tree.index_of(s).expect("filtered to divisors")];
        if table.clash {
            continue;
        }
        'next: for p in patterns {
            for (j, &(mu, kind, l)) in p.runs.iter().enumerate() {
                if mu != table.sym[j] {
                    continue 'next;
                }
                let ok = match kind {
                    RunKind::Exact => table.alpha[j] == l && table.beta[j] == l,
                    RunKind::AtLeast => l <= table.alpha[j],
                };
                if !ok {
                    continue 'next;
                }
            }
            return true;
        }
    }
    false
}
