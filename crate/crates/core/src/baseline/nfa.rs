//! Thompson construction and simulation, `O(n m)` membership for any tree.

use crate::regex::{Op, Regex, Symbol};

/// Two states per tree node: a fragment entry and exit. Each state carries at
/// most one symbol edge plus epsilon edges.
pub struct Nfa {
    eps: Vec<Vec<u32>>,
    sym: Vec<Option<(Symbol, u32)>>,
    start: u32,
    accept: u32,
}

impl Nfa {
    pub fn compile(r: &Regex) -> Nfa {
        let mut b = Builder {
            eps: Vec::new(),
            sym: Vec::new(),
        };
        let (start, accept) = b.fragment(r);
        Nfa {
            eps: b.eps,
            sym: b.sym,
            start,
            accept,
        }
    }

    pub fn n_states(&self) -> usize {
        self.eps.len()
    }

    pub fn matches(&self, text: &[Symbol]) -> bool {
        let n = self.n_states();
        let mut cur = SparseSet::new(n);
        let mut next = SparseSet::new(n);
        self.close(&mut cur, self.start);
        for &c in text {
            next.clear();
            for &s in &cur.dense {
                if let Some((edge, to)) = self.sym[s as usize] {
                    if edge == c {
                        self.close(&mut next, to);
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
            if cur.dense.is_empty() {
                return false;
            }
        }
        cur.member[self.accept as usize]
    }

    /// Inserts `from` and everything epsilon-reachable into `set`.
    fn close(&self, set: &mut SparseSet, from: u32) {
        if set.member[from as usize] {
            return;
        }
        let mut stack = vec![from];
        set.add(from);
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s as usize] {
                if !set.member[t as usize] {
                    set.add(t);
                    stack.push(t);
                }
            }
        }
    }
}

struct SparseSet {
    dense: Vec<u32>,
    member: Vec<bool>,
}

impl SparseSet {
    fn new(n: usize) -> SparseSet {
        SparseSet {
            dense: Vec::with_capacity(n),
            member: vec![false; n],
        }
    }

    fn add(&mut self, s: u32) {
        self.member[s as usize] = true;
        self.dense.push(s);
    }

    fn clear(&mut self) {
        for &s in &self.dense {
            self.member[s as usize] = false;
        }
        self.dense.clear();
    }
}

struct Builder {
    eps: Vec<Vec<u32>>,
    sym: Vec<Option<(Symbol, u32)>>,
}

impl Builder {
    fn state(&mut self) -> u32 {
        self.eps.push(Vec::new());
        self.sym.push(None);
        (self.eps.len() - 1) as u32
    }

    fn fragment(&mut self, r: &Regex) -> (u32, u32) {
        let s = self.state();
        let t = self.state();
        match r {
            Regex::Leaf(a) => self.sym[s as usize] = Some((*a, t)),
            Regex::Node(Op::Concat, cs) => {
                let mut prev = s;
                for c in cs {
                    let (cs_s, cs_t) = self.fragment(c);
                    self.eps[prev as usize].push(cs_s);
                    prev = cs_t;
                }
                self.eps[prev as usize].push(t);
            }
            Regex::Node(Op::Union, cs) => {
                for c in cs {
                    let (cs_s, cs_t) = self.fragment(c);
                    self.eps[s as usize].push(cs_s);
                    self.eps[cs_t as usize].push(t);
                }
            }
            Regex::Node(op @ (Op::Star | Op::Plus), cs) => {
                let (cs_s, cs_t) = self.fragment(&cs[0]);
                self.eps[s as usize].push(cs_s);
                self.eps[cs_t as usize].push(t);
                self.eps[cs_t as usize].push(cs_s); // loop back
                if *op == Op::Star {
                    self.eps[s as usize].push(t); // bypass
                }
            }
        }
        (s, t)
    }
}
