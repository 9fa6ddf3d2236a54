//! Length buckets and the per-bucket tuning knobs.

use crate::regex::Text;

/// Bucket key: the largest power of two at most `len`, so bucket `q` holds
/// lengths `q..2q`.
pub fn bucket_of(len: usize) -> usize {
    debug_assert!(len >= 1);
    1 << (usize::BITS - 1 - len.leading_zeros())
}

/// Buckets in ascending `q`, words deduplicated within each.
pub fn split_buckets(words: &[Text]) -> Vec<(usize, Vec<Text>)> {
    let mut sorted: Vec<&Text> = words.iter().filter(|w| !w.is_empty()).collect();
    sorted.sort_unstable_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
    sorted.dedup();
    let mut out: Vec<(usize, Vec<Text>)> = Vec::new();
    for w in sorted {
        let q = bucket_of(w.len());
        match out.last_mut() {
            Some((lq, ws)) if *lq == q => ws.push(w.clone()),
            _ => out.push((q, vec![w.clone()])),
        }
    }
    out
}

fn log2_or_one(q: usize) -> f64 {
    (q as f64).log2().max(1.0)
}

/// Block size for the sumset method, `sqrt((m / q) * log q)`, floored at 1.
/// `m` is the total dictionary size; the log gets a floor of one so the
/// smallest buckets still pack.
pub fn lambda_for(q: usize, m: usize) -> usize {
    let lam = ((m as f64 / q as f64) * log2_or_one(q)).sqrt().round();
    (lam as usize).max(1)
}

/// Scanning wins while `q` is at most roughly `(m log q)^(1/3)`; past that
/// the windows get long enough that the sumset method takes over.
pub fn prefers_q2(q: usize, m: usize) -> bool {
    q <= (m as f64 * log2_or_one(q)).cbrt().ceil() as usize
}
