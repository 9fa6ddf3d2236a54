//! Jump queries: one step of the word-break driver for one bucket.
//!
//! A query gets the breakable positions inside the window `[lo, x]` and must
//! report every position in `(x, x + 2q]` reachable from them by one bucket
//! word. Two interchangeable methods:
//!
//! * `Q2`: Aho-Corasick over the window, filter occurrences; `O(q^2)`-ish
//!   per step once divisors are accounted for, best for small `q`.
//! * `Sumset`: per candidate end, walk the marked trie ancestors of its
//!   match-statistics node; packed blocks are answered wholesale by one
//!   boolean sumset of the window against the block's depth set.

use std::collections::HashMap;

use crate::index_set::{sumset, IndexSet};
use crate::regex::{Symbol, Text};

use super::ac::AhoCorasick;
use super::bucket::lambda_for;
use super::stats::v_of_end;
use super::suffix::SuffixTree;
use super::trie::{BucketTrie, NONE};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Q2,
    Sumset,
}

pub struct BucketEngine {
    pub q: usize,
    pub method: Method,
    ac: Option<AhoCorasick>,
    trie: Option<BucketTrie>,
    stats: Option<Vec<u32>>,
}

impl BucketEngine {
    /// `tree` is the shared suffix tree of the reversed text; only the sumset
    /// method needs it. `m` is the total dictionary size across buckets.
    pub fn new(
        q: usize,
        words: &[Text],
        method: Method,
        text: &[Symbol],
        m: usize,
        tree: Option<&SuffixTree>,
    ) -> BucketEngine {
        let refs: Vec<&[Symbol]> = words.iter().map(Text::as_slice).collect();
        match method {
            Method::Q2 => BucketEngine {
                q,
                method,
                ac: Some(AhoCorasick::new(&refs)),
                trie: None,
                stats: None,
            },
            Method::Sumset => {
                let trie = BucketTrie::new(&refs, q, lambda_for(q, m));
                let tree = tree.expect("sumset method needs the suffix tree");
                let stats = v_of_end(tree, &trie, text.len());
                BucketEngine {
                    q,
                    method,
                    ac: None,
                    trie: Some(trie),
                    stats: Some(stats),
                }
            }
        }
    }

    /// `s_prime` is the window content rebased to `lo` (so absolute position
    /// `p` is present iff `s_prime` contains `p - lo`). Returns reachable
    /// ends in `(x, min(x + 2q, n)]`, ascending without duplicates.
    pub fn jump(&self, text: &[Symbol], s_prime: &IndexSet, lo: usize, x: usize) -> Vec<usize> {
        if s_prime.is_empty() {
            return Vec::new();
        }
        let hi = (x + 2 * self.q).min(text.len());
        match self.method {
            Method::Q2 => {
                let mut out = Vec::new();
                self.ac.as_ref().unwrap().scan(text, lo, hi, |j, i| {
                    if i > x && j <= x && j >= lo && s_prime.contains(j - lo) {
                        out.push(i);
                    }
                });
                out.sort_unstable();
                out.dedup();
                out
            }
            Method::Sumset => {
                let trie = self.trie.as_ref().unwrap();
                let stats = self.stats.as_ref().unwrap();
                let mut out = Vec::new();
                let mut block_sums: HashMap<usize, IndexSet> = HashMap::new();
                for i in x + 1..=hi {
                    let v = stats[i];
                    if v == NONE {
                        continue;
                    }
                    let mut u = trie.marked_up(v);
                    while u != NONE {
                        if let Some(b) = trie.block_root_of(u) {
                            let sums = block_sums.entry(b).or_insert_with(|| {
                                sumset(s_prime, &trie.blocks[b].depths)
                            });
                            if sums.contains(i - lo) {
                                out.push(i);
                            }
                            break;
                        }
                        let d = trie.depth(u);
                        if i >= d + lo && s_prime.contains(i - d - lo) {
                            out.push(i);
                            break;
                        }
                        u = trie.marked_parent(u);
                    }
                }
                out
            }
        }
    }
}
