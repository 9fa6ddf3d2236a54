//! Aho-Corasick over arbitrary `u32` symbols.
//!
//! The off-the-shelf automata are byte-oriented; the reductions here need
//! alphabets well past 256, so this is a plain goto/fail automaton with
//! sorted edge lists. Word lengths come from node depths, so equal words
//! must be deduplicated by the caller (buckets are).

use crate::regex::Symbol;

const NONE: u32 = u32::MAX;

struct AcNode {
    children: Vec<(Symbol, u32)>,
    fail: u32,
    depth: u32,
    is_end: bool,
    /// Nearest end node on the fail chain, self included.
    out: u32,
}

pub struct AhoCorasick {
    nodes: Vec<AcNode>,
}

impl AhoCorasick {
    pub fn new(words: &[&[Symbol]]) -> AhoCorasick {
        let mut nodes = vec![AcNode {
            children: Vec::new(),
            fail: 0,
            depth: 0,
            is_end: false,
            out: NONE,
        }];
        for w in words {
            debug_assert!(!w.is_empty());
            let mut v = 0u32;
            for &a in *w {
                v = match find_child(&nodes[v as usize].children, a) {
                    Some(c) => c,
                    None => {
                        let id = nodes.len() as u32;
                        let depth = nodes[v as usize].depth + 1;
                        nodes[v as usize].children.push((a, id));
                        nodes[v as usize].children.sort_unstable_by_key(|&(s, _)| s);
                        nodes.push(AcNode {
                            children: Vec::new(),
                            fail: 0,
                            depth,
                            is_end: false,
                            out: NONE,
                        });
                        id
                    }
                };
            }
            nodes[v as usize].is_end = true;
        }
        // breadth-first fail links
        let mut queue = std::collections::VecDeque::new();
        for i in 0..nodes[0].children.len() {
            queue.push_back(nodes[0].children[i].1);
        }
        while let Some(v) = queue.pop_front() {
            let vf = nodes[v as usize].fail;
            nodes[v as usize].out = if nodes[v as usize].is_end {
                v
            } else {
                nodes[vf as usize].out
            };
            for i in 0..nodes[v as usize].children.len() {
                let (a, c) = nodes[v as usize].children[i];
                let mut f = nodes[v as usize].fail;
                let cf = loop {
                    if let Some(t) = find_child(&nodes[f as usize].children, a) {
                        if t != c {
                            break t;
                        }
                    }
                    if f == 0 {
                        break 0;
                    }
                    f = nodes[f as usize].fail;
                };
                nodes[c as usize].fail = cf;
                queue.push_back(c);
            }
        }
        AhoCorasick { nodes }
    }

    /// Emits every occurrence of every word inside `text[from..to]` as a
    /// `(start, end)` position pair (prefix lengths, so the match is
    /// `text[start..end]`).
    pub fn scan(&self, text: &[Symbol], from: usize, to: usize, mut emit: impl FnMut(usize, usize)) {
        let mut v = 0u32;
        for (c, &a) in text[from..to].iter().enumerate() {
            v = self.step(v, a);
            let i = from + c + 1;
            let mut e = self.nodes[v as usize].out;
            while e != NONE {
                emit(i - self.nodes[e as usize].depth as usize, i);
                e = self.nodes[self.nodes[e as usize].fail as usize].out;
            }
        }
    }

    fn step(&self, mut v: u32, a: Symbol) -> u32 {
        loop {
            if let Some(c) = find_child(&self.nodes[v as usize].children, a) {
                return c;
            }
            if v == 0 {
                return 0;
            }
            v = self.nodes[v as usize].fail;
        }
    }
}

fn find_child(children: &[(Symbol, u32)], a: Symbol) -> Option<u32> {
    children
        .binary_search_by_key(&a, |&(s, _)| s)
        .ok()
        .map(|i| children[i].1)
}
