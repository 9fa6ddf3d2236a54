//! Reduction instances used as adversarial corpora.
//!
//! Two families: k-clique instances turned into Word Break inputs, and
//! orthogonal-vectors instances turned into membership inputs of the three
//! hard types. Both come with brute-force oracles so the fast solvers can be
//! checked against ground truth on thousands of seeded instances. The
//! generators are deterministic in their inputs.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::regex::Symbol;

mod clique;
mod ov;

pub use clique::{brute_force_clique, gen_clique_wordbreak};
pub use ov::{brute_force_ov, gen_ov_instance, OvVariant};

/// Simple graph on nodes `1..=n`, edges stored as normalized pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Graph {
        let edges = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u != v, "self-loop at {u}");
                assert!(1 <= u && u <= n && 1 <= v && v <= n, "node out of range");
                (u.min(v), u.max(v))
            })
            .collect();
        Graph { n, edges }
    }

    pub fn complete(n: u32) -> Graph {
        Graph::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    /// Parses "n" on the first line, then one "u v" pair per line; blank
    /// lines and `#` comments are skipped.
    pub fn parse_edge_list(input: &str) -> Result<Graph, GraphParseError> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, head) = lines.next().ok_or(GraphParseError {
            line: 1,
            msg: "missing node count".into(),
        })?;
        let n: u32 = head.parse().map_err(|_| GraphParseError {
            line,
            msg: format!("bad node count {head:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let mut it = l.split_whitespace();
            let err = |msg: String| GraphParseError { line, msg };
            let u: u32 = it
                .next()
                .and_then(|w| w.parse().ok())
                .ok_or_else(|| err(format!("bad edge line {l:?}")))?;
            let v: u32 = it
                .next()
                .and_then(|w| w.parse().ok())
                .ok_or_else(|| err(format!("bad edge line {l:?}")))?;
            if it.next().is_some() {
                return Err(err(format!("trailing tokens on {l:?}")));
            }
            if u == v || u < 1 || v < 1 || u > n || v > n {
                return Err(err(format!("edge ({u}, {v}) out of range for n={n}")));
            }
            edges.push((u, v));
        }
        Ok(Graph::new(n, edges))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for GraphParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for GraphParseError {}

pub fn rand_graph<R: Rng + ?Sized>(rng: &mut R, n: u32, edge_prob: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Orthogonal-vectors input: does some `a` in `A` have empty support
/// intersection with some `b` in `B`?
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OvInstance {
    pub a: Vec<Vec<bool>>,
    pub b: Vec<Vec<bool>>,
    pub d: usize,
}

impl OvInstance {
    pub fn new(a: Vec<Vec<bool>>, b: Vec<Vec<bool>>, d: usize) -> OvInstance {
        assert!(d >= 1);
        assert!(!a.is_empty() && !b.is_empty());
        assert!(a.iter().chain(&b).all(|v| v.len() == d), "uneven dimension");
        OvInstance { a, b, d }
    }
}

pub fn rand_ov<R: Rng + ?Sized>(rng: &mut R, na: usize, nb: usize, d: usize) -> OvInstance {
    let mut vecs = |count: usize| -> Vec<Vec<bool>> {
        (0..count)
            .map(|_| (0..d).map(|_| rng.random_bool(0.5)).collect())
            .collect()
    };
    let a = vecs(na);
    let b = vecs(nb);
    OvInstance::new(a, b, d)
}

/// Offset encoding of a sequence: offset 0 puts `alpha .. beta` around each
/// element, offset 1 shifts the frame so each element is followed by
/// `beta alpha`.
pub fn encode_wrapped(seq: &[Symbol], offset: u8, alpha: Symbol, beta: Symbol) -> Vec<Symbol> {
    encode_wrapped_units(seq.iter().map(std::slice::from_ref), offset, alpha, beta)
}

/// Same framing, but each unit may span several symbols.
pub fn encode_wrapped_units<'a>(
    units: impl IntoIterator<Item = &'a [Symbol]>,
    offset: u8,
    alpha: Symbol,
    beta: Symbol,
) -> Vec<Symbol> {
    assert!(offset <= 1);
    let mut out = Vec::new();
    for unit in units {
        if offset == 0 {
            out.push(alpha);
        }
        out.extend_from_slice(unit);
        out.push(beta);
        if offset == 1 {
            out.push(alpha);
        }
    }
    out
}
