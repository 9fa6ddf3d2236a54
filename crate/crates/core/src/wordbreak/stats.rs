//! Match statistics: for every text position, the deepest bucket-trie node
//! whose (reversed) path ends there.
//!
//! Both structures read the text backwards: the trie stores reversed words,
//! the suffix tree indexes the reversed text. One descent annotates suffix
//! tree locations with the trie nodes sitting there; a second pass pushes the
//! deepest annotation down to each leaf, and leaves are in bijection with
//! text positions. Cost per bucket is linear in text plus trie size.

use super::suffix::SuffixTree;
use super::trie::{BucketTrie, NONE};

/// `out[i]` is the deepest trie node `u` with `path(u)` equal to the reversal
/// of `text[i - depth(u)..i]`, or [`NONE`]. Index `i` runs over `0..=n`.
pub fn v_of_end(tree: &SuffixTree, trie: &BucketTrie, n: usize) -> Vec<u32> {
    debug_assert_eq!(tree.seq().len(), n + 1); // reversed text + sentinel
    let mut node_ann = vec![NONE; tree.node_count()];
    let mut edge_ann = vec![NONE; tree.node_count()];

    // positions in the suffix tree: either exactly on a node, or `k` symbols
    // down the edge entering a node
    #[derive(Clone, Copy)]
    enum Pos {
        At(u32),
        In(u32, usize),
    }

    let mut stack: Vec<(u32, Pos)> = vec![(0, Pos::At(tree.root()))];
    while let Some((u, pos)) = stack.pop() {
        for &(sym, uc) in trie.children(u) {
            let next = match pos {
                Pos::At(w) => tree.child(w, sym).map(|c| {
                    let (s, e) = tree.edge_span(c);
                    if e - s == 1 {
                        Pos::At(c)
                    } else {
                        debug_assert_eq!(tree.seq()[s], sym);
                        Pos::In(c, 1)
                    }
                }),
                Pos::In(c, k) => {
                    let (s, e) = tree.edge_span(c);
                    (tree.seq()[s + k] == sym).then(|| {
                        if s + k + 1 == e {
                            Pos::At(c)
                        } else {
                            Pos::In(c, k + 1)
                        }
                    })
                }
            };
            // trie prefixes that occur nowhere in the text are dead: no
            // position can ever report them or their descendants
            let Some(next) = next else { continue };
            match next {
                // overwrites keep the deepest annotation: trie nodes mapping
                // into one edge form an ancestor chain, visited top-down
                Pos::At(w) => node_ann[w as usize] = uc,
                Pos::In(c, _) => edge_ann[c as usize] = uc,
            }
            stack.push((uc, next));
        }
    }

    let mut out = vec![NONE; n + 1];
    let mut dfs: Vec<(u32, u32)> = vec![(tree.root(), NONE)];
    while let Some((w, mut cur)) = dfs.pop() {
        if w != tree.root() {
            if edge_ann[w as usize] != NONE {
                cur = edge_ann[w as usize];
            }
            if node_ann[w as usize] != NONE {
                cur = node_ann[w as usize];
            }
        }
        if tree.is_leaf(w) {
            let p = tree.suffix_start(w);
            out[n - p] = cur;
        } else {
            for c in tree.children(w) {
                dfs.push((c, cur));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::{Symbol, Text};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn reversed_tree(text: &[Symbol]) -> SuffixTree {
        let rev: Vec<u64> = text.iter().rev().map(|s| s.0 as u64).collect();
        SuffixTree::build(&rev)
    }

    /// Direct descent per position: read the text backwards from `i` through
    /// the trie and report the last node reached.
    fn v_of_end_brute(text: &[Symbol], trie: &BucketTrie, n: usize) -> Vec<u32> {
        (0..=n)
            .map(|i| {
                let mut u = 0u32;
                let mut last = NONE;
                for t in 1..=i {
                    match trie.child(u, text[i - t].0 as u64) {
                        Some(c) => {
                            u = c;
                            last = c;
                        }
                        None => break,
                    }
                }
                last
            })
            .collect()
    }

    #[test]
    fn fixed_example() {
        let text = Text::from_ascii(b"abaab");
        let words = [Text::from_ascii(b"ab"), Text::from_ascii(b"baa")];
        let refs: Vec<&[Symbol]> = words.iter().map(Text::as_slice).collect();
        let trie = BucketTrie::new(&refs, 2, 1);
        let tree = reversed_tree(text.as_slice());
        let got = v_of_end(&tree, &trie, text.len());
        let want = v_of_end_brute(text.as_slice(), &trie, text.len());
        assert_eq!(got, want);
        // position 2 ends "ab": its deepest node is the full word "ab",
        // reversed path b-a, at depth 2
        assert_eq!(trie.depth(got[2]), 2);
        assert!(trie.is_marked(got[2]));
        assert_eq!(got[0], NONE);
    }

    #[test]
    fn random_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..250 {
            let sigma = rng.random_range(1..4u32);
            let n = rng.random_range(0..60);
            let text: Text = (0..n).map(|_| rng.random_range(0..sigma)).collect();
            let q = 1usize << rng.random_range(0..3);
            let k = rng.random_range(1..12);
            let mut words: Vec<Text> = (0..k)
                .map(|_| {
                    let l = rng.random_range(q..2 * q);
                    (0..l).map(|_| rng.random_range(0..sigma)).collect()
                })
                .collect();
            words.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            words.dedup();
            let refs: Vec<&[Symbol]> = words.iter().map(Text::as_slice).collect();
            let trie = BucketTrie::new(&refs, q, 2);
            let tree = reversed_tree(text.as_slice());
            assert_eq!(
                v_of_end(&tree, &trie, n),
                v_of_end_brute(text.as_slice(), &trie, n),
                "text {text:?} words {words:?} q {q}"
            );
        }
    }

    #[test]
    fn unrelated_alphabet_yields_all_none() {
        let text = Text::from_ids(&[10, 11, 12]);
        let words = [Text::from_ids(&[7, 7])];
        let refs: Vec<&[Symbol]> = words.iter().map(Text::as_slice).collect();
        let trie = BucketTrie::new(&refs, 2, 1);
        let tree = reversed_tree(text.as_slice());
        assert!(v_of_end(&tree, &trie, 3).iter().all(|&v| v == NONE));
    }
}
