//! Bucket tries and their lambda-packing.
//!
//! One trie per length bucket, built over the *reversed* words so that the
//! words ending at a text position form a root path. Word ends are marked.
//! Packing groups marked nodes into path blocks of exactly `lambda`; a block
//! is tested with one sumset against the window, and the analysis needs every
//! walk up a root path to pass O(lambda) marked nodes before hitting a block
//! root. The packing below guarantees at most `2 lambda - 2` of them (checked
//! as a test invariant).

use crate::index_set::IndexSet;
use crate::regex::Symbol;

pub const NONE: u32 = u32::MAX;

struct TrieNode {
    children: Vec<(u64, u32)>, // sorted by symbol
    parent: u32,
    depth: u32,
    marked: bool,
    /// Nearest marked node, self included / excluded.
    marked_up: u32,
    marked_parent: u32,
    /// Block id when this marked node roots a block.
    block_root: u32,
}

pub struct Block {
    pub root: u32,
    /// The lambda marked nodes claimed by this block, shallowest first, all
    /// on one root path. The spanned segment ends at marked nodes on both
    /// sides and is disjoint from every other block's segment.
    pub members: Vec<u32>,
    /// Depths of the marked nodes on the root path of `root`, itself
    /// included. One sumset against the window answers all of them.
    pub depths: IndexSet,
}

pub struct BucketTrie {
    pub q: usize,
    pub lambda: usize,
    nodes: Vec<TrieNode>,
    pub blocks: Vec<Block>,
}

impl BucketTrie {
    /// `words` are bucket words (forward); they are reversed on insertion.
    pub fn new(words: &[&[Symbol]], q: usize, lambda: usize) -> BucketTrie {
        assert!(lambda >= 1);
        let mut t = BucketTrie {
            q,
            lambda,
            nodes: vec![TrieNode {
                children: Vec::new(),
                parent: NONE,
                depth: 0,
                marked: false,
                marked_up: NONE,
                marked_parent: NONE,
                block_root: NONE,
            }],
            blocks: Vec::new(),
        };
        for w in words {
            debug_assert!(q <= w.len() && w.len() < 2 * q);
            let mut v = 0u32;
            for &a in w.iter().rev() {
                v = t.child(v, a.0 as u64).unwrap_or_else(|| {
                    let id = t.nodes.len() as u32;
                    let depth = t.nodes[v as usize].depth + 1;
                    let ins = t.nodes[v as usize]
                        .children
                        .binary_search_by_key(&(a.0 as u64), |&(s, _)| s)
                        .unwrap_err();
                    t.nodes[v as usize].children.insert(ins, (a.0 as u64, id));
                    t.nodes.push(TrieNode {
                        children: Vec::new(),
                        parent: v,
                        depth,
                        marked: false,
                        marked_up: NONE,
                        marked_parent: NONE,
                        block_root: NONE,
                    });
                    id
                });
            }
            t.nodes[v as usize].marked = true;
        }
        // nodes are created parent-first, so one forward pass fills the
        // marked chains
        for v in 0..t.nodes.len() {
            let p = t.nodes[v].parent;
            let up_of_parent = if p == NONE {
                NONE
            } else {
                t.nodes[p as usize].marked_up
            };
            t.nodes[v].marked_parent = up_of_parent;
            t.nodes[v].marked_up = if t.nodes[v].marked { v as u32 } else { up_of_parent };
        }
        t.pack();
        t
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn child(&self, v: u32, sym: u64) -> Option<u32> {
        let ch = &self.nodes[v as usize].children;
        ch.binary_search_by_key(&sym, |&(s, _)| s)
            .ok()
            .map(|i| ch[i].1)
    }

    pub fn children(&self, v: u32) -> &[(u64, u32)] {
        &self.nodes[v as usize].children
    }

    pub fn depth(&self, v: u32) -> usize {
        self.nodes[v as usize].depth as usize
    }

    pub fn is_marked(&self, v: u32) -> bool {
        self.nodes[v as usize].marked
    }

    pub fn marked_up(&self, v: u32) -> u32 {
        self.nodes[v as usize].marked_up
    }

    pub fn marked_parent(&self, v: u32) -> u32 {
        self.nodes[v as usize].marked_parent
    }

    pub fn block_root_of(&self, v: u32) -> Option<usize> {
        match self.nodes[v as usize].block_root {
            NONE => None,
            b => Some(b as usize),
        }
    }

    /// One depth-first sweep. The path stack tracks marked nodes no block has
    /// claimed yet; as soon as lambda of them pile up on the current root
    /// path, they become a block rooted at the shallowest one. Every root
    /// path therefore carries at most `lambda - 1` unclaimed marked nodes,
    /// plus at most `lambda - 1` claimed non-roots of a single block
    /// straddling it, which caps the per-query walk at `2 lambda - 2`
    /// individual tests before a sumset takes over.
    fn pack(&mut self) {
        let mut covered = vec![false; self.nodes.len()];
        let mut unclaimed: Vec<u32> = Vec::new();
        let mut stack: Vec<(u32, usize)> = Vec::new();
        self.claim(0, &mut unclaimed, &mut covered);
        stack.push((0, 0));
        while let Some(&(v, next)) = stack.last() {
            if next < self.nodes[v as usize].children.len() {
                stack.last_mut().unwrap().1 += 1;
                let c = self.nodes[v as usize].children[next].1;
                self.claim(c, &mut unclaimed, &mut covered);
                stack.push((c, 0));
            } else {
                stack.pop();
                if self.nodes[v as usize].marked && !covered[v as usize] {
                    debug_assert_eq!(unclaimed.last(), Some(&v));
                    unclaimed.pop();
                }
            }
        }
    }

    fn claim(&mut self, v: u32, unclaimed: &mut Vec<u32>, covered: &mut [bool]) {
        if !self.nodes[v as usize].marked {
            return;
        }
        unclaimed.push(v);
        if unclaimed.len() == self.lambda {
            self.emit_block(unclaimed);
            for &u in unclaimed.iter() {
                covered[u as usize] = true;
            }
            unclaimed.clear();
        }
    }

    /// `members` are on one root path, shallowest first; the depth set of the
    /// block covers every marked node from its root up to the trie root, so
    /// one sumset answers them all.
    fn emit_block(&mut self, members: &[u32]) {
        let r_b = members[0];
        let mut depths = IndexSet::new(2 * self.q);
        let mut u = r_b;
        while u != NONE {
            depths.insert(self.depth(u));
            u = self.nodes[u as usize].marked_parent;
        }
        let id = self.blocks.len() as u32;
        debug_assert_eq!(self.nodes[r_b as usize].block_root, NONE);
        self.nodes[r_b as usize].block_root = id;
        self.blocks.push(Block {
            root: r_b,
            members: members.to_vec(),
            depths,
        });
    }

    pub fn parent(&self, v: u32) -> u32 {
        self.nodes[v as usize].parent
    }
}
