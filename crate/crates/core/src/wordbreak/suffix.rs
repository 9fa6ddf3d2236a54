//! Ukkonen's suffix tree.
//!
//! Built once per query text (over the reversed text, by the match-statistics
//! pass) and shared by all buckets. Symbols are widened to `u64` so the
//! sentinel can live outside the `u32` symbol space; edges are hash maps
//! because the alphabets here are unbounded.

use std::collections::HashMap;

pub const SENTINEL: u64 = 1 << 32;
const INF: usize = usize::MAX;
const NO_NODE: u32 = u32::MAX;

struct StNode {
    start: usize,
    end: usize, // exclusive; INF while the leaf is still open
    link: u32,
    children: HashMap<u64, u32>,
    depth: usize, // string depth at the node, filled in by finalize
}

pub struct SuffixTree {
    seq: Vec<u64>,
    nodes: Vec<StNode>,
}

impl SuffixTree {
    /// Tree of `text + sentinel`.
    pub fn build(text: &[u64]) -> SuffixTree {
        debug_assert!(text.iter().all(|&c| c != SENTINEL));
        let mut seq: Vec<u64> = text.to_vec();
        seq.push(SENTINEL);
        let mut t = SuffixTree {
            seq,
            nodes: vec![StNode {
                start: 0,
                end: 0,
                link: 0,
                children: HashMap::new(),
                depth: 0,
            }],
        };
        t.ukkonen();
        t.finalize();
        t
    }

    fn new_node(&mut self, start: usize, end: usize) -> u32 {
        self.nodes.push(StNode {
            start,
            end,
            link: 0,
            children: HashMap::new(),
            depth: 0,
        });
        (self.nodes.len() - 1) as u32
    }

    fn edge_len(&self, v: u32, pos: usize) -> usize {
        let n = &self.nodes[v as usize];
        n.end.min(pos + 1) - n.start
    }

    fn ukkonen(&mut self) {
        let (mut an, mut ae, mut al) = (0u32, 0usize, 0usize);
        let mut remainder = 0usize;
        for i in 0..self.seq.len() {
            let c = self.seq[i];
            let mut need_link: u32 = NO_NODE;
            remainder += 1;
            while remainder > 0 {
                if al == 0 {
                    ae = i;
                }
                let first = self.seq[ae];
                match self.nodes[an as usize].children.get(&first).copied() {
                    None => {
                        let leaf = self.new_node(i, INF);
                        self.nodes[an as usize].children.insert(first, leaf);
                        if need_link != NO_NODE {
                            self.nodes[need_link as usize].link = an;
                        }
                        need_link = an;
                    }
                    Some(nxt) => {
                        let el = self.edge_len(nxt, i);
                        if al >= el {
                            an = nxt;
                            ae += el;
                            al -= el;
                            continue;
                        }
                        if self.seq[self.nodes[nxt as usize].start + al] == c {
                            al += 1;
                            if need_link != NO_NODE {
                                self.nodes[need_link as usize].link = an;
                            }
                            break;
                        }
                        let split_start = self.nodes[nxt as usize].start;
                        let split = self.new_node(split_start, split_start + al);
                        self.nodes[an as usize].children.insert(first, split);
                        let leaf = self.new_node(i, INF);
                        self.nodes[split as usize].children.insert(c, leaf);
                        self.nodes[nxt as usize].start += al;
                        let nxt_first = self.seq[self.nodes[nxt as usize].start];
                        self.nodes[split as usize].children.insert(nxt_first, nxt);
                        if need_link != NO_NODE {
                            self.nodes[need_link as usize].link = split;
                        }
                        need_link = split;
                    }
                }
                remainder -= 1;
                if an == 0 && al > 0 {
                    al -= 1;
                    ae = i - remainder + 1;
                } else if an != 0 {
                    an = self.nodes[an as usize].link;
                }
            }
        }
    }

    /// Closes open leaves and fills string depths.
    fn finalize(&mut self) {
        let total = self.seq.len();
        for n in &mut self.nodes {
            if n.end == INF {
                n.end = total;
            }
        }
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            let d = self.nodes[v as usize].depth;
            let kids: Vec<u32> = self.nodes[v as usize].children.values().copied().collect();
            for c in kids {
                let cn = &self.nodes[c as usize];
                let step = cn.end - cn.start;
                self.nodes[c as usize].depth = d + step;
                stack.push(c);
            }
        }
    }

    pub fn root(&self) -> u32 {
        0
    }

    pub fn seq(&self) -> &[u64] {
        &self.seq
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn child(&self, v: u32, sym: u64) -> Option<u32> {
        self.nodes[v as usize].children.get(&sym).copied()
    }

    pub fn children(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.nodes[v as usize].children.values().copied()
    }

    /// Label span of the edge entering `v`, as indices into [`Self::seq`].
    pub fn edge_span(&self, v: u32) -> (usize, usize) {
        (self.nodes[v as usize].start, self.nodes[v as usize].end)
    }

    pub fn str_depth(&self, v: u32) -> usize {
        self.nodes[v as usize].depth
    }

    pub fn is_leaf(&self, v: u32) -> bool {
        self.nodes[v as usize].children.is_empty()
    }

    /// For a leaf, the start of the suffix it spells.
    pub fn suffix_start(&self, leaf: u32) -> usize {
        debug_assert!(self.is_leaf(leaf));
        self.seq.len() - self.nodes[leaf as usize].depth
    }

    /// Substring test by direct descent, mostly for validation.
    pub fn contains(&self, needle: &[u64]) -> bool {
        let (mut v, mut off) = (0u32, 0usize);
        for &c in needle {
            let (s, e) = self.edge_span(v);
            if s + off < e {
                if self.seq[s + off] != c {
                    return false;
                }
                off += 1;
            } else {
                match self.child(v, c) {
                    Some(n) => {
                        v = n;
                        off = 1;
                    }
                    None => return false,
                }
            }
        }
        true
    }
}
