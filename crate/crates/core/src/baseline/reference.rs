//! Membership by direct recursion on the language definition.
//!
//! Exponential in the worst case and proud of it: this is the trust anchor
//! the polynomial matchers are validated against, so it stays as close to the
//! semantics as possible. Test sizes only.

use crate::regex::{Op, Regex, Symbol};

pub fn language_match(r: &Regex, text: &[Symbol]) -> bool {
    match r {
        Regex::Leaf(a) => text == [*a],
        Regex::Node(Op::Concat, cs) => match_seq(cs, text),
        Regex::Node(Op::Union, cs) => cs.iter().any(|c| language_match(c, text)),
        Regex::Node(Op::Star, cs) => text.is_empty() || match_rounds(&cs[0], text),
        Regex::Node(Op::Plus, cs) => language_match(&cs[0], text) || match_rounds(&cs[0], text),
    }
}

/// At least one round, each round non-empty. Decompositions with empty rounds
/// reduce to this (drop them) or to a single empty round, which both callers
/// handle themselves.
fn match_rounds(c: &Regex, text: &[Symbol]) -> bool {
    (1..=text.len()).any(|k| {
        language_match(c, &text[..k]) && (k == text.len() || match_rounds(c, &text[k..]))
    })
}

fn match_seq(cs: &[Regex], text: &[Symbol]) -> bool {
    match cs {
        [] => text.is_empty(),
        [first, rest @ ..] => {
            (0..=text.len()).any(|k| language_match(first, &text[..k]) && match_seq(rest, &text[k..]))
        }
    }
}
