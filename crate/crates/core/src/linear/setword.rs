//! Engine for types within `|+o|`.
//!
//! A group with blocks S_0..S_l matches exactly the strings of length l+1
//! whose j-th character lies in S_j, so a repeated group matches iff l+1
//! divides n and every position class T_j (characters at positions congruent
//! to j) is a subset of S_j. Position classes are computed once per period
//! and the subset test charges one membership probe per pattern symbol.

use std::collections::{BTreeMap, HashSet};

use super::CompileError;
use crate::regex::{Op, Regex, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetWordGroup {
    /// True when the branch sat under a `+`, so the body may repeat.
    pub repeat: bool,
    /// One symbol set per concatenation position, sorted and deduplicated.
    pub blocks: Vec<Vec<Symbol>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetWordGroups {
    pub groups: Vec<SetWordGroup>,
    /// Bare characters at the top union level, sorted.
    pub singles: Vec<Symbol>,
}

pub fn compile_setword_groups(r: &Regex) -> Result<SetWordGroups, CompileError> {
    let mut out = SetWordGroups {
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
            Regex::Node(Op::Plus, cs) => out.groups.push(group(&cs[0], true)?),
            _ => out.groups.push(group(b, false)?),
        }
    }
    out.singles.sort_unstable();
    out.singles.dedup();
    Ok(out)
}

fn group(body: &Regex, repeat: bool) -> Result<SetWordGroup, CompileError> {
    let factors = match body {
        Regex::Node(Op::Concat, cs) => cs.as_slice(),
        _ => std::slice::from_ref(body),
    };
    let blocks = factors.iter().map(symbol_set).collect::<Result<_, _>>()?;
    Ok(SetWordGroup { repeat, blocks })
}

fn symbol_set(f: &Regex) -> Result<Vec<Symbol>, CompileError> {
    let mut set = match f {
        Regex::Leaf(s) => vec![*s],
        Regex::Node(Op::Union, cs) => cs
            .iter()
            .map(|c| match c {
                Regex::Leaf(s) => Ok(*s),
                Regex::Node(..) => Err(CompileError {
                    msg: "set-word blocks take single characters only",
                }),
            })
            .collect::<Result<_, _>>()?,
        Regex::Node(..) => {
            return Err(CompileError {
                msg: "set-word groups concatenate characters or unions of characters",
            })
        }
    };
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// Position classes of a text for one period, behind either set layout.
trait PositionClasses {
    fn build(text: &[Symbol], period: usize) -> Self;
    fn contains(&self, j: usize, sym: Symbol) -> bool;
    fn size(&self, j: usize) -> usize;
}

struct HashedClasses(Vec<HashSet<Symbol>>);

impl PositionClasses for HashedClasses {
    fn build(text: &[Symbol], period: usize) -> Self {
        let mut sets = vec![HashSet::new(); period];
        for (i, &c) in text.iter().enumerate() {
            sets[i % period].insert(c);
        }
        HashedClasses(sets)
    }

    fn contains(&self, j: usize, sym: Symbol) -> bool {
        self.0[j].contains(&sym)
    }

    fn size(&self, j: usize) -> usize {
        self.0[j].len()
    }
}

struct SortedClasses(Vec<Vec<Symbol>>);

impl PositionClasses for SortedClasses {
    fn build(text: &[Symbol], period: usize) -> Self {
        let mut sets = vec![Vec::new(); period];
        for (i, &c) in text.iter().enumerate() {
            sets[i % period].push(c);
        }
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        SortedClasses(sets)
    }

    fn contains(&self, j: usize, sym: Symbol) -> bool {
        self.0[j].binary_search(&sym).is_ok()
    }

    fn size(&self, j: usize) -> usize {
        self.0[j].len()
    }
}

/// Expected-constant-time probes via hashing.
pub fn match_setword_groups(g: &SetWordGroups, text: &[Symbol]) -> bool {
    run::<HashedClasses>(g, text)
}

/// Deterministic variant on sorted arrays, for reproducible timing.
pub fn match_setword_groups_sorted(g: &SetWordGroups, text: &[Symbol]) -> bool {
    run::<SortedClasses>(g, text)
}

fn run<C: PositionClasses>(g: &SetWordGroups, text: &[Symbol]) -> bool {
    let n = text.len();
    assert!(n >= 1, "empty text is decided upstream");
    if n == 1 && g.singles.binary_search(&text[0]).is_ok() {
        return true;
    }
    let mut by_period: BTreeMap<usize, Vec<&SetWordGroup>> = BTreeMap::new();
    for grp in &g.groups {
        let p = grp.blocks.len();
        let feasible = if grp.repeat { n % p == 0 } else { p == n };
        if feasible {
            by_period.entry(p).or_default().push(grp);
        }
    }
    for (period, grps) in by_period {
        let classes = C::build(text, period);
        'next: for grp in grps {
            for (j, block) in grp.blocks.iter().enumerate() {
                let hits = block.iter().filter(|&&s| classes.contains(j, s)).count();
                if hits != classes.size(j) {
                    continue 'next;
                }
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::Nfa;
    use crate::regex::{parse_regex, SyntaxMode, Text};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn compiled(pattern: &str) -> SetWordGroups {
        let r = parse_regex(pattern, SyntaxMode::Ascii).unwrap();
        compile_setword_groups(&r).unwrap()
    }

    fn syms(s: &str) -> Vec<Symbol> {
        Text::from_ascii(s.as_bytes()).0
    }

    /// Checks the engine against the NFA and returns the shared answer.
    fn agree(pattern: &str, text: &str) -> bool {
        let r = parse_regex(pattern, SyntaxMode::Ascii).unwrap();
        let g = compile_setword_groups(&r).unwrap();
        let t = syms(text);
        let fast = match_setword_groups(&g, &t);
        assert_eq!(fast, Nfa::compile(&r).matches(&t), "{pattern} vs {text}");
        assert_eq!(fast, match_setword_groups_sorted(&g, &t), "{pattern} vs {text}");
        fast
    }

    #[test]
    fn compile_shapes() {
        let g = compiled("(ab)+|c");
        assert_eq!(g.singles, syms("c"));
        assert_eq!(
            g.groups,
            [SetWordGroup {
                repeat: true,
                blocks: vec![syms("a"), syms("b")],
            }]
        );

        let g = compiled("(a|b)c");
        assert_eq!(
            g.groups,
            [SetWordGroup {
                repeat: false,
                blocks: vec![syms("ab"), syms("c")],
            }]
        );
        assert!(g.singles.is_empty());

        // a union under + lands at the block level: one block per group
        let g = compiled("(a|b)+|c+");
        assert_eq!(
            g.groups,
            [
                SetWordGroup {
                    repeat: true,
                    blocks: vec![syms("ab")],
                },
                SetWordGroup {
                    repeat: true,
                    blocks: vec![syms("c")],
                },
            ]
        );
    }

    #[test]
    fn compile_rejects_deep_nesting() {
        let r = parse_regex("(a(b|c))+", SyntaxMode::Ascii).unwrap();
        assert!(compile_setword_groups(&r).is_ok());
        let r = parse_regex("((ab)c)d", SyntaxMode::Ascii).unwrap();
        assert!(compile_setword_groups(&r).is_err());
    }

    #[test]
    fn divisibility_and_position_classes() {
        assert!(agree("(ab)+", "abab"));
        assert!(!agree("(ab)+", "aba"));
        assert!(agree("((a|b)a)+", "aaba"));
        assert!(!agree("((a|b)a)+", "abba"));
        assert!(agree("(a|b)c", "bc"));
        assert!(!agree("(a|b)c", "cc"));
        assert!(!agree("(a|b)c", "bcbc"));
    }

    #[test]
    fn singles_only_match_length_one() {
        assert!(agree("(ab)+|c", "c"));
        assert!(!agree("(ab)+|c", "cc"));
        assert!(agree("a|b", "b"));
        assert!(!agree("a|b", "ab"));
    }

    #[test]
    fn period_is_shared_between_groups() {
        // both groups have period 2; only the second fits "baba"
        assert!(agree("(ab)+|(ba)+", "baba"));
        assert!(agree("(ab)+|(ba)+", "abab"));
        assert!(!agree("(ab)+|(ba)+", "abba"));
    }

    #[test]
    fn sorted_and_hashed_probes_agree_at_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        let patterns = ["(ab)+|c", "((a|b)a)+", "(a|b)(b|c)", "a+|(bc)+", "((a|b|c)(a|c))+"];
        for _ in 0..400 {
            let pattern = patterns[rng.random_range(0..patterns.len())];
            let n = rng.random_range(1..12);
            let text: String = (0..n)
                .map(|_| [b'a', b'b', b'c'][rng.random_range(0..3)] as char)
                .collect();
            agree(pattern, &text);
        }
    }
}
