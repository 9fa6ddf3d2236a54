//! Orthogonal vectors as membership instances of the three hard types.
//!
//! The A side becomes the text, the B side the regex. Each variant encodes
//! the per-bit orthogonality check with the operators its type offers; the
//! offset framing and the skip and control words are shared with the clique
//! reduction. Every output contains one dead branch over fresh symbols so
//! the inferred type is the variant's type no matter what B looks like.

use crate::regex::{Regex, Symbol, Text, TypeSeq};

use super::{encode_wrapped_units, OvInstance};

const BIT0: u32 = 0;
const BIT1: u32 = 1;
const DOLLAR: u32 = 2;
const MU: u32 = 3;
const ALPHA: u32 = 4;
const BETA: u32 = 5;
const TAU1: u32 = 6;
const TAU2: u32 = 7;

fn pos_sym(i: usize) -> u32 {
    8 + i as u32
}

fn bit_sym(bit: bool) -> u32 {
    if bit {
        BIT1
    } else {
        BIT0
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OvVariant {
    /// Bits checked by unions: type `+|o|`.
    PipePipe,
    /// Bits checked by runs of zeros: type `+|o+`.
    PipePlus,
    /// One branch per vector of B under a top union: type `|+|o`.
    Outer,
}

impl OvVariant {
    pub fn type_of(self) -> TypeSeq {
        let s = match self {
            OvVariant::PipePipe => "+|o|",
            OvVariant::PipePlus => "+|o+",
            OvVariant::Outer => "|+|o",
        };
        crate::regex::parse_type(s).unwrap()
    }
}

impl std::str::FromStr for OvVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<OvVariant, String> {
        match s {
            "pipe-pipe" => Ok(OvVariant::PipePipe),
            "pipe-plus" => Ok(OvVariant::PipePlus),
            "outer" => Ok(OvVariant::Outer),
            other => Err(format!(
                "unknown variant {other:?} (pipe-pipe|pipe-plus|outer)"
            )),
        }
    }
}

/// Regex and text that match iff `inst` has an orthogonal pair.
pub fn gen_ov_instance(inst: &OvInstance, variant: OvVariant) -> (Regex, Text) {
    let out = match variant {
        OvVariant::PipePipe => (pipe_pipe_regex(inst), plain_text(inst)),
        OvVariant::PipePlus => (pipe_plus_regex(inst), run_text(inst)),
        OvVariant::Outer => (outer_regex(inst), positional_text(inst)),
    };
    debug_assert_eq!(crate::regex::infer_type(&out.0).unwrap(), variant.type_of());
    out
}

fn framed_text(units_of: impl Fn(&Vec<bool>) -> Vec<Vec<u32>>) -> impl Fn(&OvInstance) -> Text {
    move |inst| {
        let (alpha, beta) = (Symbol(ALPHA), Symbol(BETA));
        let mut text = Vec::new();
        for a in &inst.a {
            let units: Vec<Vec<Symbol>> = units_of(a)
                .into_iter()
                .map(|u| u.into_iter().map(Symbol).collect())
                .collect();
            let refs: Vec<&[Symbol]> = units.iter().map(Vec::as_slice).collect();
            text.extend(encode_wrapped_units(refs.iter().copied(), 0, alpha, beta));
        }
        text.extend([Symbol(MU), Symbol(MU)]);
        Text(text)
    }
}

fn plain_text(inst: &OvInstance) -> Text {
    framed_text(|a| {
        let mut units = vec![vec![MU]];
        units.extend(a.iter().map(|&bit| vec![bit_sym(bit)]));
        units.extend([vec![DOLLAR], vec![MU]]);
        units
    })(inst)
}

fn run_text(inst: &OvInstance) -> Text {
    framed_text(|a| {
        let mut units = vec![vec![MU]];
        units.extend(a.iter().map(|&bit| match bit {
            false => vec![BIT0, BIT0, BIT1],
            true => vec![BIT0, BIT1],
        }));
        units.extend([vec![DOLLAR], vec![MU]]);
        units
    })(inst)
}

fn positional_text(inst: &OvInstance) -> Text {
    framed_text(|a| {
        let mut units = vec![vec![MU]];
        units.extend(
            a.iter()
                .enumerate()
                .flat_map(|(i, &bit)| [vec![pos_sym(i)], vec![bit_sym(bit)]]),
        );
        units.extend([vec![DOLLAR], vec![MU]]);
        units
    })(inst)
}

fn skip_words(units: &[Vec<u32>]) -> Vec<Regex> {
    let mut out = Vec::new();
    for u in units {
        let mid = u.iter().map(|&s| Regex::leaf(s));
        out.push(Regex::concat(
            std::iter::once(Regex::leaf(ALPHA))
                .chain(mid.clone())
                .chain([Regex::leaf(BETA)])
                .collect(),
        ));
        out.push(Regex::concat(
            [Regex::leaf(BETA), Regex::leaf(ALPHA)].into_iter().chain(mid).collect(),
        ));
    }
    out
}

fn control_words() -> Vec<Regex> {
    let word = |ids: &[u32]| Regex::concat(ids.iter().map(|&s| Regex::leaf(s)).collect());
    vec![
        word(&[ALPHA, MU, BETA, ALPHA]),
        word(&[DOLLAR, BETA, ALPHA, MU]),
        word(&[BETA, MU, MU]),
    ]
}

fn pipe_pipe_regex(inst: &OvInstance) -> Regex {
    let mut branches = Vec::new();
    for b in &inst.b {
        let mut children = Vec::new();
        for &bit in b {
            children.push(if bit {
                Regex::leaf(BIT0)
            } else {
                Regex::union(vec![Regex::leaf(BIT0), Regex::leaf(BIT1)])
            });
            children.extend([Regex::leaf(BETA), Regex::leaf(ALPHA)]);
        }
        branches.push(Regex::concat(children));
    }
    branches.extend(skip_words(&[vec![BIT0], vec![BIT1], vec![DOLLAR], vec![MU]]));
    branches.extend(control_words());
    branches.push(Regex::concat(vec![
        Regex::leaf(TAU1),
        Regex::union(vec![Regex::leaf(TAU1), Regex::leaf(TAU2)]),
    ]));
    Regex::plus(Regex::union(branches))
}

fn pipe_plus_regex(inst: &OvInstance) -> Regex {
    let mut branches = Vec::new();
    for b in &inst.b {
        let mut children = Vec::new();
        for &bit in b {
            if bit {
                children.extend([Regex::leaf(BIT0), Regex::leaf(BIT0), Regex::leaf(BIT1)]);
            } else {
                children.extend([Regex::plus(Regex::leaf(BIT0)), Regex::leaf(BIT1)]);
            }
            children.extend([Regex::leaf(BETA), Regex::leaf(ALPHA)]);
        }
        branches.push(Regex::concat(children));
    }
    branches.extend(skip_words(&[
        vec![BIT0, BIT0, BIT1],
        vec![BIT0, BIT1],
        vec![DOLLAR],
        vec![MU],
    ]));
    branches.extend(control_words());
    branches.push(Regex::concat(vec![
        Regex::leaf(TAU1),
        Regex::plus(Regex::leaf(TAU2)),
    ]));
    Regex::plus(Regex::union(branches))
}

fn outer_regex(inst: &OvInstance) -> Regex {
    let mut skip_units: Vec<Vec<u32>> = vec![vec![BIT0], vec![BIT1], vec![DOLLAR], vec![MU]];
    skip_units.extend((0..inst.d).map(|i| vec![pos_sym(i)]));
    let mut arms = Vec::new();
    for b in &inst.b {
        let mut branches = Vec::new();
        for (i, &bit) in b.iter().enumerate() {
            let pair = |val: u32| {
                let seq = [pos_sym(i), BETA, ALPHA, val, BETA, ALPHA];
                Regex::concat(seq.iter().map(|&s| Regex::leaf(s)).collect())
            };
            branches.push(pair(BIT0));
            if !bit {
                branches.push(pair(BIT1));
            }
        }
        branches.extend(skip_words(&skip_units));
        branches.extend(control_words());
        arms.push(Regex::plus(Regex::union(branches)));
    }
    arms.push(Regex::plus(Regex::union(vec![
        Regex::concat(vec![Regex::leaf(TAU1), Regex::leaf(TAU2)]),
        Regex::leaf(TAU1),
    ])));
    Regex::union(arms)
}

pub fn brute_force_ov(inst: &OvInstance) -> bool {
    inst.a
        .iter()
        .any(|a| inst.b.iter().any(|b| a.iter().zip(b).all(|(&x, &y)| !(x && y))))
}
