//! Defining equations of the algebra classes, in both signatures.

use std::fmt;
use std::str::FromStr;

use crate::syntax::{expand_abbreviations, parse, Expansion, Signature, Term};

/// A named equation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn parse(name: &str, lhs: &str, rhs: &str, sig: Signature) -> Equation {
        let p = |s: &str| parse(s, sig).unwrap_or_else(|e| panic!("axiom {name}: {e}"));
        Equation { name: name.to_string(), lhs: p(lhs), rhs: p(rhs) }
    }

    fn expanded(self, sig: Signature) -> Equation {
        Equation {
            lhs: expand_abbreviations(&self.lhs, sig, Expansion::Strong),
            rhs: expand_abbreviations(&self.rhs, sig, Expansion::Strong),
            ..self
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.name, self.lhs, self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomSet {
    /// The quasi-MV* (or quasi-Wajsberg*) equations.
    Quasi,
    /// The quasi equations plus the two strongness equations.
    Strong,
    /// The strong equations plus `0 = 1`.
    Flat,
    /// The MV* (or Wajsberg*) equations, with `^+`/`^-` as defined
    /// operations, plus agreement of the primitive parts with the defined ones.
    MvStar,
    /// `x (+) y = 0`, which holds in every flat strong algebra.
    FlatSum,
}

impl FromStr for AxiomSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "quasi" => AxiomSet::Quasi,
            "strong" => AxiomSet::Strong,
            "flat" => AxiomSet::Flat,
            "mv" | "mv*" | "w" | "w*" => AxiomSet::MvStar,
            "flat-sum" => AxiomSet::FlatSum,
            other => {
                return Err(format!(
                    "unknown axiom set `{other}` (expected quasi, strong, flat, mv or flat-sum)"
                ))
            }
        })
    }
}

fn list(sig: Signature, prefix: &str, rows: &[(&str, &str, &str)]) -> Vec<Equation> {
    rows.iter()
        .map(|(n, l, r)| Equation::parse(&format!("{prefix}{n}"), l, r, sig))
        .collect()
}

pub(crate) fn quasi(sig: Signature) -> Vec<Equation> {
    match sig {
        Signature::Mv => list(
            sig,
            "QMV*",
            &[
                ("1", "x (+) y", "y (+) x"),
                ("2", "(1 (+) x) (+) (y (+) (1 (+) z))", "((1 (+) x) (+) y) (+) (1 (+) z)"),
                ("3", "(x (+) 1) (+) 1", "1"),
                ("4", "(x (+) y) (+) 0", "x (+) y"),
                ("5a", "x^+ (+) 0", "(x (+) 0)^+"),
                ("5b", "(x (+) 0)^+", "1 (+) (-1 (+) x)"),
                ("5c", "x^- (+) 0", "(x (+) 0)^-"),
                ("5d", "(x (+) 0)^-", "-1 (+) (1 (+) x)"),
                ("6", "x (+) y", "(x^+ (+) y^+) (+) (x^- (+) y^-)"),
                ("7", "0", "-0"),
                ("8", "x (+) -x", "0"),
                ("9", "-(x (+) y)", "-x (+) -y"),
                ("10", "--x", "x"),
                ("11", "(-x (+) (x (+) y))^+", "-x^+ (+) (x^+ (+) y^+)"),
                ("12", "x \\/ y", "y \\/ x"),
                ("13", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
                ("14", "x (+) (y \\/ z)", "(x (+) y) \\/ (x (+) z)"),
            ],
        ),
        Signature::W => list(
            sig,
            "QW*",
            &[
                ("1", "x -> y", "~y -> ~x"),
                ("2", "(x -> 1) -> ((y -> 1) -> z)", "(y -> 1) -> ((x -> 1) -> z)"),
                ("3", "(1 -> x) -> 1", "1"),
                ("4", "(z -> z) -> (x -> y)", "x -> y"),
                ("5a", "(1 -> 1) -> x^+", "((1 -> 1) -> x)^+"),
                ("5b", "((1 -> 1) -> x)^+", "(x -> 1) -> 1"),
                ("5c", "(1 -> 1) -> x^-", "((1 -> 1) -> x)^-"),
                ("5d", "((1 -> 1) -> x)^-", "(x -> ~1) -> ~1"),
                ("6", "x -> y", "(y^+ -> x^-) -> (x^+ -> y^-)"),
                ("7", "~(x -> y)", "y -> x"),
                ("8", "~~x", "x"),
                ("9", "(x -> (~x -> y))^+", "x^+ -> (~x^+ -> y^+)"),
                ("10", "x \\/ y", "y \\/ x"),
                ("11", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
                ("12", "x -> (y \\/ z)", "(x -> y) \\/ (x -> z)"),
            ],
        ),
    }
}

pub(crate) fn strong(sig: Signature) -> Vec<Equation> {
    match sig {
        Signature::Mv => list(
            sig,
            "strong",
            &[("+", "x^+", "x^+ (+) 0"), ("-", "x^-", "x^- (+) 0")],
        ),
        Signature::W => list(
            sig,
            "strong",
            &[("+", "x^+", "(1 -> 1) -> x^+"), ("-", "x^-", "(1 -> 1) -> x^-")],
        ),
    }
}

pub(crate) fn flat(sig: Signature) -> Vec<Equation> {
    match sig {
        Signature::Mv => list(sig, "flat", &[("", "0", "1")]),
        Signature::W => list(sig, "flat", &[("", "1 -> 1", "1")]),
    }
}

pub(crate) fn flat_sum(sig: Signature) -> Vec<Equation> {
    match sig {
        Signature::Mv => list(sig, "flat-sum", &[("", "x (+) y", "0")]),
        Signature::W => list(sig, "flat-sum", &[("", "~x -> y", "1 -> 1")]),
    }
}

pub(crate) fn mv_star(sig: Signature) -> Vec<Equation> {
    let eqs = match sig {
        Signature::Mv => list(
            sig,
            "MV*",
            &[
                ("1", "x (+) y", "y (+) x"),
                ("2", "(1 (+) x) (+) (y (+) (1 (+) z))", "((1 (+) x) (+) y) (+) (1 (+) z)"),
                ("3", "x (+) -x", "0"),
                ("4", "(x (+) 1) (+) 1", "1"),
                ("5", "x (+) 0", "x"),
                ("6", "-(x (+) y)", "-x (+) -y"),
                ("7", "--x", "x"),
                ("8", "x (+) y", "(x^+ (+) y^+) (+) (x^- (+) y^-)"),
                ("9", "(-x (+) (x (+) y))^+", "-x^+ (+) (x^+ (+) y^+)"),
                ("10", "x \\/ y", "y \\/ x"),
                ("11", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
                ("12", "x (+) (y \\/ z)", "(x (+) y) \\/ (x (+) z)"),
            ],
        ),
        Signature::W => list(
            sig,
            "W*",
            &[
                ("1", "x -> y", "~y -> ~x"),
                ("2", "(x -> 1) -> ((y -> 1) -> z)", "(y -> 1) -> ((x -> 1) -> z)"),
                ("3", "(1 -> x) -> 1", "1"),
                ("4", "(y -> y) -> x", "x"),
                ("5", "x -> y", "(y^+ -> x^-) -> (x^+ -> y^-)"),
                ("6", "~(x -> y)", "y -> x"),
                ("7", "~~x", "x"),
                ("8", "(x -> (~x -> y))^+", "x^+ -> (~x^+ -> y^+)"),
                ("9", "x \\/ y", "y \\/ x"),
                ("10", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
                ("11", "x -> (y \\/ z)", "(x -> y) \\/ (x -> z)"),
            ],
        ),
    };
    let prefix = if sig == Signature::Mv { "MV*" } else { "W*" };
    let defs = match sig {
        Signature::Mv => list(
            sig,
            prefix,
            &[("def+", "x^+", "1 (+) (-1 (+) x)"), ("def-", "x^-", "-1 (+) (1 (+) x)")],
        ),
        Signature::W => list(
            sig,
            prefix,
            &[("def+", "x^+", "(x -> 1) -> 1"), ("def-", "x^-", "(x -> ~1) -> ~1")],
        ),
    };
    eqs.into_iter().map(|e| e.expanded(sig)).chain(defs).collect()
}

/// The equations of `set` in signature `sig`.
pub fn axioms(set: AxiomSet, sig: Signature) -> Vec<Equation> {
    match set {
        AxiomSet::Quasi => quasi(sig),
        AxiomSet::Strong => quasi(sig).into_iter().chain(strong(sig)).collect(),
        AxiomSet::Flat => axioms(AxiomSet::Strong, sig).into_iter().chain(flat(sig)).collect(),
        AxiomSet::MvStar => mv_star(sig),
        AxiomSet::FlatSum => flat_sum(sig),
    }
}
