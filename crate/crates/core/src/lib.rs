//! Membership testing for bounded-depth homogeneous regular expressions.
//!
//! A homogeneous regular expression restricts every inner node at the same
//! depth to the same operator, so each expression has a *type*: the string of
//! operators read from the root level downwards (e.g. `+|o` for a plus of a
//! union of concatenations). Membership testing (`does s match r?`) admits a
//! fine-grained classification by type:
//!
//! * some types collapse to trivial work,
//! * two maximal families (`|+o|` and `|+o+`) have almost-linear engines
//!   ([`linear`]),
//! * the type `+|o` is exactly the Word Break problem, solvable in
//!   about `n * m^(1/3)` time ([`wordbreak`]),
//! * everything else is quadratic-hard under standard fine-grained
//!   assumptions, and this crate can generate the matching hard instances
//!   ([`hardness`]) as well as solve them with a baseline NFA ([`baseline`]).
//!
//! [`classify`] implements the type simplification and the verdict table,
//! [`matcher`] routes a concrete regex/string pair to the right engine.

pub mod baseline;
pub mod classify;
pub mod index_set;
pub mod linear;
pub mod batch;
pub mod bench;
pub mod hardness;
pub mod matcher;
pub mod regex;
pub mod synth;
pub mod wordbreak;

pub use regex::{Op, Regex, Symbol, Text, TypeSeq};
