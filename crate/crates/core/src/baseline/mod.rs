//! Reference algorithms.
//!
//! Everything here is deliberately unsophisticated: the Thompson NFA
//! simulation is the `O(nm)` yardstick the dichotomy is measured against,
//! [`reference::language_match`] is the exponential trust anchor the NFA is
//! checked against, and [`dp`] holds the textbook word-break dynamic program
//! and a brute-force jump query. The fast engines must agree with these on
//! everything; none of them may share code with the fast paths.

pub mod dp;
pub mod nfa;
pub mod reference;

pub use dp::{jump_bruteforce, reachable_prefixes_dp, wordbreak_dp};
pub use nfa::Nfa;
pub use reference::language_match;
