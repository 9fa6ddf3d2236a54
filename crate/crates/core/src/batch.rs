//! Batched solving over many inputs.
//!
//! Each entry is independent, so batches are data-parallel when the
//! `parallel` feature is on; the `_seq` twins always run sequentially and
//! exist so the two paths can be compared in benches.

use crate::matcher::{MatchError, Matcher};
use crate::regex::{Regex, Text};
use crate::wordbreak::{wordbreak, Algo, WordBreakInstance};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Compiles `r` once and matches every text.
pub fn match_batch(r: &Regex, texts: &[Text]) -> Result<Vec<bool>, MatchError> {
    let m = Matcher::new(r)?;
    Ok(match_all(&m, texts))
}

#[cfg(feature = "parallel")]
pub fn match_all(m: &Matcher, texts: &[Text]) -> Vec<bool> {
    texts.par_iter().map(|t| m.matches(t.as_slice())).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn match_all(m: &Matcher, texts: &[Text]) -> Vec<bool> {
    match_all_seq(m, texts)
}

pub fn match_all_seq(m: &Matcher, texts: &[Text]) -> Vec<bool> {
    texts.iter().map(|t| m.matches(t.as_slice())).collect()
}

#[cfg(feature = "parallel")]
pub fn wordbreak_all(insts: &[WordBreakInstance], algo: Algo) -> Vec<bool> {
    insts.par_iter().map(|i| wordbreak(i, algo)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn wordbreak_all(insts: &[WordBreakInstance], algo: Algo) -> Vec<bool> {
    wordbreak_all_seq(insts, algo)
}

pub fn wordbreak_all_seq(insts: &[WordBreakInstance], algo: Algo) -> Vec<bool> {
    insts.iter().map(|i| wordbreak(i, algo)).collect()
}
