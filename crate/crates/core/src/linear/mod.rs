//! The two almost-linear membership engines.
//!
//! Both engines take a regex whose (simplified) type fits their template and
//! flatten it into plain data first: a union of groups, where a group body is
//! periodic (`repeat`) when it sat under a `+`. Single characters at the top
//! union level are kept aside. The set-word engine covers types within
//! `|+o|`, the run-length engine types within `|+o+`; empty input is decided
//! upstream, so matching assumes a non-empty text.

use std::error::Error;
use std::fmt;

mod divisors;
mod rle;
mod setword;

pub use divisors::{divisors_tree, DivisorTree};
pub use rle::{
    alpha_beta_tables, compile_rle_groups, match_rle_groups, normalize_rotation, rle_encode_pattern,
    rle_encode_text, PatternRle, ResidueTable, Rle, RleGroup, RleGroups, Rotation, RunKind,
};
pub use setword::{
    compile_setword_groups, match_setword_groups, match_setword_groups_sorted, SetWordGroup,
    SetWordGroups,
};

/// The regex handed to an engine does not have the shape its type promised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompileError {
    pub msg: &'static str,
}

impl fmt::Display for CompileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "engine cannot compile this regex: {}", self.msg)
    }
}

impl Error for CompileError {}
