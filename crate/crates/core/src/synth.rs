//! Instance generation for tests, benches, and the CLI.
//!
//! Regexes are generated to hit a requested type exactly: one spine realizes
//! every level, the remaining subtrees stop early at random. Inner nodes of
//! fanning operators always get at least two children so everything stays
//! printable in the surface grammar.

use rand::Rng;

use crate::regex::{infer_type, Op, Regex, Symbol, Text, TypeSeq};
use crate::wordbreak::WordBreakInstance;

/// All operator strings up to the given length, shortest first.
pub fn all_types(max_len: usize) -> Vec<TypeSeq> {
    let ops = [Op::Concat, Op::Union, Op::Star, Op::Plus];
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Op>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for &op in &ops {
                let mut t = prefix.clone();
                t.push(op);
                out.push(TypeSeq::new(t.clone()));
                next.push(t);
            }
        }
        frontier = next;
    }
    out
}

/// Fewest leaves that still realize every level of `ops[level..]`: one per
/// fanning node to keep arities at two, plus the spine's own leaf.
fn min_leaves(ops: &[Op], level: usize) -> usize {
    1 + ops[level..].iter().filter(|o| !o.is_unary()).count()
}

/// A regex whose inferred type is exactly `t`, with at most `max_leaves`
/// leaves over symbols `0..alphabet`.
pub fn rand_regex_of_type<R: Rng + ?Sized>(
    rng: &mut R,
    t: &TypeSeq,
    max_leaves: usize,
    alphabet: u32,
) -> Regex {
    assert!(alphabet >= 1);
    let budget = max_leaves.max(min_leaves(t.ops(), 0));
    let r = gen(rng, t.ops(), 0, budget, true, alphabet);
    debug_assert_eq!(&infer_type(&r).unwrap(), t);
    r
}

fn gen<R: Rng + ?Sized>(
    rng: &mut R,
    ops: &[Op],
    level: usize,
    budget: usize,
    full: bool,
    alphabet: u32,
) -> Regex {
    let leaf = |rng: &mut R| Regex::Leaf(Symbol(rng.random_range(0..alphabet)));
    if level == ops.len() {
        return leaf(rng);
    }
    if !full && rng.random_bool(0.35) {
        return leaf(rng);
    }
    let op = ops[level];
    if op.is_unary() {
        return Regex::Node(op, vec![gen(rng, ops, level + 1, budget, full, alphabet)]);
    }
    let reserve = if full { min_leaves(ops, level + 1) } else { 1 };
    if budget < reserve + 1 {
        debug_assert!(!full, "callers give full spines enough budget");
        return leaf(rng);
    }
    let arity = rng.random_range(2..=(budget - reserve + 1).min(4));
    let spine = rng.random_range(0..arity);
    let mut budgets = vec![1usize; arity];
    budgets[spine] = reserve;
    for _ in 0..budget - (arity - 1) - reserve {
        budgets[rng.random_range(0..arity)] += 1;
    }
    let children = budgets
        .iter()
        .enumerate()
        .map(|(i, &b)| gen(rng, ops, level + 1, b, full && i == spine, alphabet))
        .collect();
    Regex::Node(op, children)
}

/// A string from the language of `r`, with small repetition counts.
pub fn sample_match<R: Rng + ?Sized>(rng: &mut R, r: &Regex) -> Text {
    let mut out = Vec::new();
    sample_into(rng, r, &mut out);
    Text(out)
}

fn sample_into<R: Rng + ?Sized>(rng: &mut R, r: &Regex, out: &mut Vec<Symbol>) {
    match r {
        Regex::Leaf(s) => out.push(*s),
        Regex::Node(Op::Concat, cs) => cs.iter().for_each(|c| sample_into(rng, c, out)),
        Regex::Node(Op::Union, cs) => {
            let pick = rng.random_range(0..cs.len());
            sample_into(rng, &cs[pick], out)
        }
        Regex::Node(Op::Star, cs) => {
            for _ in 0..rng.random_range(0..=2) {
                sample_into(rng, &cs[0], out);
            }
        }
        Regex::Node(Op::Plus, cs) => {
            for _ in 0..rng.random_range(1..=3) {
                sample_into(rng, &cs[0], out);
            }
        }
    }
}

pub fn rand_text<R: Rng + ?Sized>(rng: &mut R, n: usize, alphabet: u32) -> Text {
    (0..n).map(|_| rng.random_range(0..alphabet)).collect()
}

/// Uniformly random instance; nothing is planted, most are unbreakable.
pub fn rand_wb_instance<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    words: usize,
    max_len: usize,
    alphabet: u32,
) -> WordBreakInstance {
    let text = rand_text(rng, n, alphabet);
    let dict = (0..words)
        .map(|_| {
            let len = rng.random_range(1..=max_len.max(1));
            rand_text(rng, len, alphabet)
        })
        .collect();
    WordBreakInstance::new(text, dict)
}

/// Instance whose text is a concatenation of dictionary words, so the
/// answer is always yes.
pub fn planted_wb_instance<R: Rng + ?Sized>(
    rng: &mut R,
    target_n: usize,
    words: usize,
    max_len: usize,
    alphabet: u32,
) -> WordBreakInstance {
    let dict: Vec<Text> = (0..words.max(1))
        .map(|_| {
            let len = rng.random_range(1..=max_len.max(1));
            rand_text(rng, len, alphabet)
        })
        .collect();
    let mut text = Vec::new();
    while text.len() < target_n {
        text.extend_from_slice(dict[rng.random_range(0..dict.len())].as_slice());
    }
    WordBreakInstance::new(Text(text), dict)
}

/// Layout of the scaling family: for each chain, its symbol and bucket. One
/// full unary chain per power-of-two bucket while the budget lasts, then
/// extra chains in the top bucket. A full chain in bucket q holds the words
/// sigma^j for q <= j < 2q and makes every root path of the bucket trie
/// carry q marked nodes.
fn chain_layout(m: usize) -> Vec<(u32, usize)> {
    let cost = |q: usize| (q..2 * q).sum::<usize>();
    let mut layout = Vec::new();
    let mut left = m;
    let mut q = 1;
    while cost(q) <= left {
        left -= cost(q);
        layout.push((layout.len() as u32, q));
        q *= 2;
    }
    let top = q / 2;
    while top >= 1 && cost(top) <= left {
        left -= cost(top);
        layout.push((layout.len() as u32, top));
    }
    if layout.is_empty() {
        layout.push((0, 1));
    }
    layout
}

/// Dictionary of total size about `m` stressing every bucket the budget can
/// afford; deterministic in `m`.
pub fn chain_dict(m: usize) -> Vec<Text> {
    let mut dict = Vec::new();
    for (sym, q) in chain_layout(m) {
        for len in q..2 * q {
            dict.push(Text(vec![Symbol(sym); len]));
        }
    }
    dict
}

/// Companion text: cycling runs of every chain symbol, long enough that
/// in-run windows see full-depth trie paths and the reachable set stays
/// dense. Deterministic in `(n, m)`.
pub fn chain_text(n: usize, m: usize) -> Text {
    let layout = chain_layout(m);
    let q_top = layout.iter().map(|&(_, q)| q).max().unwrap();
    let run = 4 * q_top;
    let mut text = Vec::with_capacity(n);
    'fill: loop {
        for &(sym, _) in &layout {
            for _ in 0..run {
                if text.len() == n {
                    break 'fill;
                }
                text.push(Symbol(sym));
            }
        }
    }
    Text(text)
}
