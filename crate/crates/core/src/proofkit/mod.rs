//! Hilbert-style proofs for the logic of strong quasi-Wajsberg* algebras
//! (`sqL*`) and for Chang's `L*`: script format, axiom and rule schemas, the
//! checker, a registry of derived rules, and proof constructions.
//!
//! Formulas are implicative terms. `^+`, `^-` and `\/` may be written in
//! scripts; they are expanded to `->`, `~`, `1` before any matching.

mod build;
mod check;
mod format;
mod mutate;
mod registry;
mod schemas;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::syntax::{expand_abbreviations, Expansion, Signature, Term};

pub use build::{deregularize_proof, lift_lstar_proof, replacement_proof};
pub use check::{check_proof, CheckOutcome, LineReport, ProofVerdict, RejectReason};
pub use format::{parse_script, parse_scripts, ScriptError};
pub use mutate::{mutants, Mutant};
pub use registry::{
    embedded_fixture, fixture_texts, lstar_corpus, DerivedRule, LemmaKind, Registry, FIXTURE_NAMES,
};
pub use schemas::{axiom_names, instantiate_axiom, rule, rule_names, AxiomSchema, RuleSchema};

/// The proof system a script is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum System {
    /// `sqL*`: axioms Q1–Q10, quasi modus ponens and the regularisation rules.
    #[serde(rename = "sqL*")]
    SqLStar,
    /// `L*`: axioms P1–P10, rules R1–R3.
    #[serde(rename = "L*")]
    LStar,
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::SqLStar => "sqL*",
            System::LStar => "L*",
        })
    }
}

impl std::str::FromStr for System {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "sqL*" | "sqL" | "sql*" | "sqł*" => Ok(System::SqLStar),
            "L*" | "l*" | "Ł*" => Ok(System::LStar),
            other => Err(format!("unknown system `{other}` (expected `sqL*` or `L*`)")),
        }
    }
}

/// What a line asserts: one formula, or both implications of `a <-> b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Single(Term),
    Iff(Term, Term),
}

impl Statement {
    /// The asserted formulas: `[t]`, or `[a -> b, b -> a]`.
    pub fn formulas(&self) -> Vec<Term> {
        match self {
            Statement::Single(t) => vec![t.clone()],
            Statement::Iff(a, b) => {
                vec![Term::imp(a.clone(), b.clone()), Term::imp(b.clone(), a.clone())]
            }
        }
    }

    /// `^+`, `^-` replaced by their implicative definitions.
    pub fn core(&self) -> Statement {
        let c = |t: &Term| expand_abbreviations(t, Signature::W, Expansion::Strong);
        match self {
            Statement::Single(t) => Statement::Single(c(t)),
            Statement::Iff(a, b) => Statement::Iff(c(a), c(b)),
        }
    }

    pub fn map(&self, mut f: impl FnMut(&Term) -> Term) -> Statement {
        match self {
            Statement::Single(t) => Statement::Single(f(t)),
            Statement::Iff(a, b) => Statement::Iff(f(a), f(b)),
        }
    }

    pub fn parse(text: &str) -> Result<Statement, crate::syntax::ParseError> {
        let (a, b) = crate::syntax::parse_biconditional(text, Signature::W)?;
        Ok(match b {
            None => Statement::Single(a),
            Some(b) => Statement::Iff(a, b),
        })
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Single(t) => write!(f, "{t}"),
            Statement::Iff(a, b) => write!(f, "{a} <-> {b}"),
        }
    }
}

/// Which implication of a biconditional axiom a formula instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// Left to right.
    LR,
    /// Right to left.
    RL,
    /// Both (a biconditional line).
    Both,
    /// The axiom is a single implication.
    NA,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LR => "LR",
            Direction::RL => "RL",
            Direction::Both => "BOTH",
            Direction::NA => "NA",
        })
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "LR" => Ok(Direction::LR),
            "RL" => Ok(Direction::RL),
            "BOTH" => Ok(Direction::Both),
            "NA" => Ok(Direction::NA),
            other => Err(format!("unknown direction `{other}`")),
        }
    }
}

/// Line and hypothesis numbers are 1-based, as written in scripts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Justification {
    /// An axiom instance; the direction is inferred when not given.
    Axiom { name: String, direction: Option<Direction> },
    Hypothesis(usize),
    Rule { name: String, premises: Vec<usize> },
    Lemma { id: String, premises: Vec<usize> },
}

impl Justification {
    pub fn premises(&self) -> &[usize] {
        match self {
            Justification::Rule { premises, .. } | Justification::Lemma { premises, .. } => {
                premises
            }
            _ => &[],
        }
    }
}

fn join_indices(ix: &[usize]) -> String {
    ix.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom { name, direction: None } => write!(f, "AX {name}"),
            Justification::Axiom { name, direction: Some(d) } => write!(f, "AX {name} {d}"),
            Justification::Hypothesis(i) => write!(f, "HYP {i}"),
            Justification::Rule { name, premises } => {
                write!(f, "RULE {name} {}", join_indices(premises))
            }
            Justification::Lemma { id, premises } if premises.is_empty() => write!(f, "LEM {id}"),
            Justification::Lemma { id, premises } => {
                write!(f, "LEM {id} {}", join_indices(premises))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofLine {
    pub statement: Statement,
    pub just: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofScript {
    pub system: System,
    /// The derived rule this script certifies, if any.
    pub lemma: Option<String>,
    /// Marks the certificate of the replacement rule.
    pub replacement: bool,
    pub hypotheses: Vec<Statement>,
    pub lines: Vec<ProofLine>,
}

impl ProofScript {
    pub fn new(system: System) -> ProofScript {
        ProofScript { system, lemma: None, replacement: false, hypotheses: vec![], lines: vec![] }
    }

    /// Appends a line and returns its 1-based number.
    pub fn push(&mut self, statement: Statement, just: Justification) -> usize {
        self.lines.push(ProofLine { statement, just });
        self.lines.len()
    }

    pub fn conclusion(&self) -> Option<&Statement> {
        self.lines.last().map(|l| &l.statement)
    }
}

impl fmt::Display for ProofScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system: {}", self.system)?;
        if let Some(id) = &self.lemma {
            writeln!(f, "lemma: {id}")?;
        }
        if self.replacement {
            writeln!(f, "kind: replacement")?;
        }
        for h in &self.hypotheses {
            writeln!(f, "hyp: {h}")?;
        }
        for (i, l) in self.lines.iter().enumerate() {
            writeln!(f, "{}. {} ; {}", i + 1, l.statement, l.just)?;
        }
        Ok(())
    }
}

/// Failures of the proof constructions and of registration.
#[derive(Debug, Error)]
pub enum ProofError {
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("metavariable `{0}` has no binding")]
    MissingBinding(String),
    #[error("subterm at path {path:?} is not `{expected}`")]
    PathMismatch { path: Vec<usize>, expected: String },
    #[error("the equivalence script must end in a biconditional line")]
    NotAnEquivalence,
    #[error("source proof does not check: {0}")]
    SourceProofInvalid(String),
    #[error("`{0}` is not regular")]
    NotRegular(String),
    #[error("the last line must have the form `(r -> r) -> q`, found `{0}`")]
    NotPrefixed(String),
    #[error("certificate for lemma `{id}` does not check: {reason}")]
    CertificationFailed { id: String, reason: String },
    #[error("lemma `{0}` is already registered")]
    Duplicate(String),
    #[error("lemma `{0}` is required but not registered")]
    MissingLemma(String),
    #[error(transparent)]
    Script(#[from] ScriptError),
}
