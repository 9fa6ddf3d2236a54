//! k-clique as a Word Break instance.
//!
//! A neighborhood gadget per (k-2)-clique S checks whether two adjacent
//! nodes extend S; the gadgets are chained with an offset trick (every
//! symbol framed by alpha/beta) so that one successful gadget flips the
//! frame phase and the trailing `mu mu` can only be consumed after a flip.

use crate::regex::{Symbol, Text};
use crate::wordbreak::WordBreakInstance;

use super::{encode_wrapped, Graph};

/// Instance that breaks iff `g` has a k-clique, `k >= 4`. Text length is
/// cubic in the node count for `k = 4` and grows as `n^(k-1)` in general.
pub fn gen_clique_wordbreak(g: &Graph, k: usize) -> WordBreakInstance {
    assert!(k >= 4, "the gadget needs k >= 4");
    let n = g.n();
    let node = Symbol;
    let dollar = Symbol(n + 1);
    let hash = Symbol(n + 2);
    let gamma = Symbol(n + 3);
    let mu = Symbol(n + 4);
    let alpha = Symbol(n + 5);
    let beta = Symbol(n + 6);
    let asc = |lo: u32, hi: u32| (lo..=hi).map(node);
    let shifted = |seq: Vec<Symbol>| Text(encode_wrapped(&seq, 1, alpha, beta));

    let mut words = Vec::new();
    for i in 1..=n {
        let mut enter = vec![dollar];
        enter.extend(asc(1, i - 1));
        words.push(shifted(enter));
        words.push(shifted(asc(i, n).collect()));
    }
    for (u, v) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
        let mut cross = asc(u, n).collect::<Vec<_>>();
        cross.extend([hash, node(v), hash]);
        cross.extend(asc(1, u - 1));
        words.push(shifted(cross));
        let mut bridge = asc(u, n).collect::<Vec<_>>();
        bridge.extend([dollar, gamma, dollar]);
        bridge.extend(asc(1, v - 1));
        words.push(shifted(bridge));
    }
    for sigma in asc(1, n).chain([dollar, hash, gamma, mu]) {
        words.push(Text(vec![alpha, sigma, beta]));
        words.push(Text(vec![beta, alpha, sigma]));
    }
    words.push(Text(vec![alpha, mu, beta, alpha]));
    words.push(Text(vec![dollar, beta, alpha, mu]));
    words.push(Text(vec![beta, mu, mu]));

    let mut text = Vec::new();
    for s in cliques(g, k - 2) {
        let mut gadget = vec![dollar];
        gadget.extend(asc(1, n));
        for &i in &s {
            gadget.extend([hash, node(i), hash]);
            gadget.extend(asc(1, n));
        }
        gadget.push(dollar);
        let mut block = vec![mu];
        block.extend(&gadget);
        block.push(gamma);
        block.extend(&gadget);
        block.push(mu);
        text.extend(encode_wrapped(&block, 0, alpha, beta));
    }
    text.extend([mu, mu]);
    WordBreakInstance::new(Text(text), words)
}

/// All c-cliques as ascending tuples in lexicographic order.
fn cliques(g: &Graph, c: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    grow(g, c, 1, &mut cur, &mut out);
    out
}

fn grow(g: &Graph, c: usize, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == c {
        out.push(cur.clone());
        return;
    }
    for v in from..=g.n() {
        if cur.iter().all(|&u| g.has_edge(u, v)) {
            cur.push(v);
            grow(g, c, v + 1, cur, out);
            cur.pop();
        }
    }
}

pub fn brute_force_clique(g: &Graph, k: usize) -> bool {
    !cliques(g, k).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardness::rand_graph;
    use crate::wordbreak::{wordbreak, Algo};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn complete_graph_breaks() {
        let inst = gen_clique_wordbreak(&Graph::complete(4), 4);
        assert!(wordbreak(&inst, Algo::Dp));
        assert!(wordbreak(&inst, Algo::Auto));
    }

    #[test]
    fn path_does_not_break() {
        let g = Graph::new(4, [(1, 2), (2, 3), (3, 4)]);
        let inst = gen_clique_wordbreak(&g, 4);
        assert!(!wordbreak(&inst, Algo::Dp));
        assert!(!wordbreak(&inst, Algo::Auto));
    }

    #[test]
    fn dictionary_has_the_end_marker() {
        let g = Graph::complete(5);
        let inst = gen_clique_wordbreak(&g, 4);
        let (mu, beta) = (Symbol(5 + 4), Symbol(5 + 6));
        assert!(inst.words.contains(&Text(vec![beta, mu, mu])));
    }

    #[test]
    fn text_length_matches_a_direct_recount() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for k in [4usize, 5] {
            for _ in 0..10 {
                let n = rng.random_range(4..=8u32);
                let g = rand_graph(&mut rng, n, 0.6);
                let inst = gen_clique_wordbreak(&g, k);
                // count (k-2)-cliques by subset masks, independent of the
                // generator's recursion
                let mut blocks = 0usize;
                for mask in 0u32..1 << n {
                    let s: Vec<u32> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    if s.len() == k - 2
                        && s.iter()
                            .all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
                    {
                        blocks += 1;
                    }
                }
                let ts = 2 + (k - 1) * n as usize + 3 * (k - 2);
                assert_eq!(inst.n(), blocks * 3 * (2 * ts + 3) + 2);
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for round in 0..36 {
            let n = rng.random_range(4..=9u32);
            let p = [0.3, 0.5, 0.8][round % 3];
            let g = rand_graph(&mut rng, n, p);
            let inst = gen_clique_wordbreak(&g, 4);
            let want = brute_force_clique(&g, 4);
            assert_eq!(wordbreak(&inst, Algo::Dp), want, "n={n} p={p}");
            assert_eq!(wordbreak(&inst, Algo::Auto), want, "n={n} p={p}");
        }
    }

    #[test]
    fn brute_force_agrees_with_mask_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..20 {
            let n = 10;
            let g = rand_graph(&mut rng, n, 0.5);
            for k in 3..=5 {
                let by_masks = (0u32..1 << n).any(|mask| {
                    let s: Vec<u32> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    s.len() == k
                        && s.iter()
                            .all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
                });
                assert_eq!(brute_force_clique(&g, k), by_masks);
            }
        }
    }
}
