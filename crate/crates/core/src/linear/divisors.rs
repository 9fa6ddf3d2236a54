//! Divisor tree for the run-length engine's residue tables.
//!
//! Every divisor of N hangs under the smallest larger divisor it divides;
//! equivalently, under s*p for the smallest prime p that still has room in
//! N's factorization. Tables then fold top-down from N along single-prime
//! steps.

pub struct DivisorTree {
    /// All divisors of n, ascending; the last one is n itself.
    pub divisors: Vec<usize>,
    /// Parent position in `divisors`; `None` only for the root n.
    pub parent: Vec<Option<usize>>,
}

impl DivisorTree {
    pub fn n(&self) -> usize {
        *self.divisors.last().unwrap()
    }

    pub fn index_of(&self, d: usize) -> Option<usize> {
        self.divisors.binary_search(&d).ok()
    }

    pub fn parent_of(&self, d: usize) -> Option<usize> {
        self.index_of(d)
            .and_then(|i| self.parent[i])
            .map(|p| self.divisors[p])
    }
}

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn multiplicity(mut s: usize, p: usize) -> u32 {
    let mut e = 0;
    while s % p == 0 {
        s /= p;
        e += 1;
    }
    e
}

pub fn divisors_tree(n: usize) -> DivisorTree {
    assert!(n >= 1);
    let mut divisors = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divisors.push(d);
            if d != n / d {
                divisors.push(n / d);
            }
        }
        d += 1;
    }
    divisors.sort_unstable();
    let factors = prime_factors(n);
    let parent = divisors
        .iter()
        .map(|&s| {
            if s == n {
                return None;
            }
            let p = factors
                .iter()
                .find(|&&(p, e)| multiplicity(s, p) < e)
                .map(|&(p, _)| p)
                .expect("proper divisor has a prime with room");
            let t = s * p;
            Some(divisors.binary_search(&t).expect("s*p divides n"))
        })
        .collect();
    DivisorTree { divisors, parent }
}
