//! Word-packed sets of small indices.
//!
//! The word-break driver keeps reachable prefix lengths in one of these and
//! repeatedly needs three things fast: windowed extraction (positions in
//! `[lo, hi]`, re-based to `lo`), unions, and boolean sumsets of two windows.

/// A set over `0..universe`, one bit per index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSet {
    universe: usize,
    words: Vec<u64>,
}

impl IndexSet {
    pub fn new(universe: usize) -> IndexSet {
        IndexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    /// Out-of-universe indices are simply absent.
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn union_with(&mut self, other: &IndexSet) {
        assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// The elements in `[lo, hi]` shifted down by `lo`, in a fresh set over
    /// `0..hi-lo+1`. `hi` may exceed the universe; the overhang is empty.
    pub fn extract_window(&self, lo: usize, hi: usize) -> IndexSet {
        assert!(lo <= hi);
        let mut out = IndexSet::new(hi - lo + 1);
        let (skip, shift) = (lo / 64, lo % 64);
        for oi in 0..out.words.len() {
            let lo_word = self.words.get(skip + oi).copied().unwrap_or(0);
            let mut w = lo_word >> shift;
            if shift != 0 {
                let hi_word = self.words.get(skip + oi + 1).copied().unwrap_or(0);
                w |= hi_word << (64 - shift);
            }
            out.words[oi] = w;
        }
        out.mask_tail();
        out
    }

    fn mask_tail(&mut self) {
        let extra = self.words.len() * 64 - self.universe;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}

impl FromIterator<usize> for IndexSet {
    /// Universe is sized to the maximum element.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> IndexSet {
        let items: Vec<usize> = iter.into_iter().collect();
        let universe = items.iter().max().map_or(0, |&m| m + 1);
        let mut s = IndexSet::new(universe);
        for i in items {
            s.insert(i);
        }
        s
    }
}

/// `{ x + y : x in a, y in b }`, materialized by shifting the word array of
/// one operand by each element of the other (the smaller one, so the cost is
/// `min(|a|,|b|) * words`). Empty when either operand is empty.
pub fn sumset(a: &IndexSet, b: &IndexSet) -> IndexSet {
    let universe = (a.universe + b.universe).saturating_sub(1).max(1);
    let mut out = IndexSet::new(universe);
    if a.is_empty() || b.is_empty() {
        return out;
    }
    let (few, many) = if a.count() <= b.count() { (a, b) } else { (b, a) };
    for k in few.iter() {
        shift_or_into(&mut out, many, k);
    }
    out
}

/// `dst |= src << k` as bit arrays.
fn shift_or_into(dst: &mut IndexSet, src: &IndexSet, k: usize) {
    let (wk, bs) = (k / 64, k % 64);
    for (si, &w) in src.words.iter().enumerate() {
        if w == 0 {
            continue;
        }
        if let Some(d) = dst.words.get_mut(si + wk) {
            *d |= w << bs;
        }
        if bs != 0 {
            if let Some(d) = dst.words.get_mut(si + wk + 1) {
                *d |= w >> (64 - bs);
            }
        }
    }
    dst.mask_tail();
}
