//! Axiom and rule schemas. Every variable of a schema is a metavariable.

use std::sync::OnceLock;

use super::{Direction, ProofError, Statement, System};
use crate::syntax::{
    expand_abbreviations, instantiate, Assignment, Expansion, Signature, SubstitutionError,
    Term,
};

const SQ_AXIOMS: [(&str, &str); 10] = [
    ("Q1", "(p -> q) <-> (~q -> ~p)"),
    ("Q2", "1 <-> ((1 -> p) -> 1)"),
    ("Q3", "p <-> ((q -> q) -> p)"),
    ("Q4", "(p -> q) <-> ((q^+ -> p^-) -> (p^+ -> q^-))"),
    ("Q5", "~(p -> q) <-> (q -> p)"),
    ("Q6", "(p -> (~p -> q))^+ <-> (p^+ -> (~p^+ -> q^+))"),
    ("Q7", "(p -> (q \\/ r)) <-> ((p -> r) \\/ (p -> q))"),
    ("Q8", "(p \\/ (q \\/ r)) <-> ((p \\/ q) \\/ r)"),
    ("Q9", "((p -> 1) -> ((q -> 1) -> r)) -> ((q -> 1) -> ((p -> 1) -> r))"),
    ("Q10", "p -> 1"),
];

/// `L*` axioms by the name of the `sqL*` axiom with the same statement.
const L_AXIOMS: [(&str, &str); 10] = [
    ("P1", "Q1"),
    ("P2", "Q3"),
    ("P3", "Q5"),
    ("P4", "Q10"),
    ("P5", "Q2"),
    ("P6", "Q9"),
    ("P7", "Q4"),
    ("P8", "Q6"),
    ("P9", "Q7"),
    ("P10", "Q8"),
];

const SQ_RULES: [(&str, &[&str], &str); 12] = [
    ("qMP", &["(r -> r) -> p", "(r -> r) -> (p -> q)"], "(r -> r) -> q"),
    ("Reg", &["p"], "(r -> r) -> p"),
    ("AReg1", &["(r -> r) -> (p -> q)"], "p -> q"),
    ("AReg2", &["(r -> r) -> ~(p -> q)"], "~(p -> q)"),
    ("AReg3", &["(r -> r) -> ~1"], "~1"),
    ("AReg4", &["(r -> r) -> 1"], "1"),
    ("Inv1", &["p"], "~~p"),
    ("Inv2", &["~~p"], "p"),
    ("Flat", &["p", "~1"], "~p"),
    ("R2'", &["p -> q", "r -> t"], "(q -> r) -> (p -> t)"),
    ("R3'", &["(r -> r) -> p"], "p^-"),
    ("IFF", &["p -> q", "q -> p"], "p <-> q"),
];

const L_RULES: [(&str, &[&str], &str); 4] = [
    ("R1", &["p", "p -> q"], "q"),
    ("R2", &["p -> q", "r -> t"], "(q -> r) -> (p -> t)"),
    ("R3", &["p"], "p^-"),
    ("IFF", &["p -> q", "q -> p"], "p <-> q"),
];

#[derive(Clone, Debug)]
pub struct AxiomSchema {
    pub name: String,
    /// In core form.
    pub statement: Statement,
}

impl AxiomSchema {
    /// The schema's implications with their direction.
    pub fn formulas(&self) -> Vec<(Term, Direction)> {
        match &self.statement {
            Statement::Single(t) => vec![(t.clone(), Direction::NA)],
            s @ Statement::Iff(..) => {
                s.formulas().into_iter().zip([Direction::LR, Direction::RL]).collect()
            }
        }
    }
}

/// A rule `premises ⊢ conclusion`; a biconditional conclusion stands for
/// both of its implications.
#[derive(Clone, Debug)]
pub struct RuleSchema {
    pub name: String,
    pub premises: Vec<Statement>,
    pub conclusion: Statement,
}

fn core(text: &str) -> Statement {
    Statement::parse(text).expect("built-in schema parses").core()
}

fn sq_axioms() -> &'static [AxiomSchema] {
    static CELL: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    CELL.get_or_init(|| {
        SQ_AXIOMS
            .iter()
            .map(|(n, t)| AxiomSchema { name: n.to_string(), statement: core(t) })
            .collect()
    })
}

fn l_axioms() -> &'static [AxiomSchema] {
    static CELL: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    CELL.get_or_init(|| {
        L_AXIOMS
            .iter()
            .map(|(n, q)| {
                let same = sq_axioms().iter().find(|a| a.name == *q).expect("known axiom");
                AxiomSchema { name: n.to_string(), statement: same.statement.clone() }
            })
            .collect()
    })
}

fn build_rules(table: &[(&str, &[&str], &str)]) -> Vec<RuleSchema> {
    table
        .iter()
        .map(|(n, ps, c)| RuleSchema {
            name: n.to_string(),
            premises: ps.iter().map(|p| core(p)).collect(),
            conclusion: core(c),
        })
        .collect()
}

fn rules(system: System) -> &'static [RuleSchema] {
    static SQ: OnceLock<Vec<RuleSchema>> = OnceLock::new();
    static L: OnceLock<Vec<RuleSchema>> = OnceLock::new();
    match system {
        System::SqLStar => SQ.get_or_init(|| build_rules(&SQ_RULES)),
        System::LStar => L.get_or_init(|| build_rules(&L_RULES)),
    }
}

fn axioms(system: System) -> &'static [AxiomSchema] {
    match system {
        System::SqLStar => sq_axioms(),
        System::LStar => l_axioms(),
    }
}

pub fn axiom_names(system: System) -> Vec<&'static str> {
    axioms(system).iter().map(|a| a.name.as_str()).collect()
}

pub fn rule_names(system: System) -> Vec<&'static str> {
    rules(system).iter().map(|r| r.name.as_str()).collect()
}

pub fn axiom(system: System, name: &str) -> Option<&'static AxiomSchema> {
    axioms(system).iter().find(|a| a.name == name)
}

pub fn rule(system: System, name: &str) -> Option<&'static RuleSchema> {
    rules(system).iter().find(|r| r.name == name)
}

/// The implications of axiom `name` under `sigma`, in core form; a
/// biconditional axiom yields its left-to-right implication first.
pub fn instantiate_axiom(
    system: System,
    name: &str,
    sigma: &Assignment,
) -> Result<Vec<Term>, ProofError> {
    let ax = axiom(system, name).ok_or_else(|| ProofError::UnknownAxiom(name.to_string()))?;
    ax.formulas()
        .into_iter()
        .map(|(f, _)| {
            instantiate(&f, sigma)
                .map(|t| expand_abbreviations(&t, Signature::W, Expansion::Strong))
                .map_err(|e| match e {
                    SubstitutionError::MissingBinding(m) => ProofError::MissingBinding(m),
                    other => ProofError::MissingBinding(other.to_string()),
                })
        })
        .collect()
}
