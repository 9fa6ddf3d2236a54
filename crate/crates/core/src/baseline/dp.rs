//! The textbook word-break dynamic program and a brute-force jump query.

use std::collections::BTreeMap;

use crate::index_set::IndexSet;
use crate::regex::{Symbol, Text};
use crate::wordbreak::WordBreakInstance;

/// All breakable prefix lengths, `O(n m)` by direct comparison. Words are
/// grouped by length so equal words are still compared one by one; this is
/// the trivial algorithm, not a clever one.
pub fn reachable_prefixes_dp(text: &[Symbol], words: &[Text]) -> IndexSet {
    let n = text.len();
    let mut by_len: BTreeMap<usize, Vec<&[Symbol]>> = BTreeMap::new();
    for w in words {
        if !w.is_empty() && w.len() <= n {
            by_len.entry(w.len()).or_default().push(w.as_slice());
        }
    }
    let mut reach = IndexSet::new(n + 1);
    reach.insert(0);
    for x in 1..=n {
        'lens: for (&len, ws) in by_len.range(..=x) {
            if reach.contains(x - len) {
                for w in ws {
                    if *w == &text[x - len..x] {
                        reach.insert(x);
                        break 'lens;
                    }
                }
            }
        }
    }
    reach
}

pub fn wordbreak_dp(inst: &WordBreakInstance) -> bool {
    let n = inst.n();
    reachable_prefixes_dp(inst.text.as_slice(), &inst.words).contains(n)
}

/// One jump query, answered the dumb way: for every start in `s` and every
/// word of the bucket, check the occurrence directly. Returns the endpoints
/// in `(x, min(x + 2q, n)]`, sorted and deduplicated.
pub fn jump_bruteforce(
    text: &[Symbol],
    bucket: &[&[Symbol]],
    s: &[usize],
    x: usize,
    q: usize,
) -> Vec<usize> {
    let hi = (x + 2 * q).min(text.len());
    let mut out = Vec::new();
    for &j in s {
        for d in bucket {
            let i = j + d.len();
            if i > x && i <= hi && &text[j..i] == *d {
                out.push(i);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
