//! The bundled equation and entailment corpora.
//!
//! Lines are `name | lhs | rhs | valid|invalid` and
//! `name | p1 ; p2 ; ... | conclusion | valid|invalid`; `#` starts a comment.
//! The expected verdict refers to the square (resp. its implicative view).

use crate::models::Equation;
use crate::syntax::{parse, Signature, Term};

const EQUATIONS: &str = include_str!("../../fixtures/equations.txt");
const ENTAILMENTS: &str = include_str!("../../fixtures/entailments.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationCase {
    pub equation: Equation,
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntailmentCase {
    pub name: String,
    pub premises: Vec<Term>,
    pub conclusion: Term,
    pub valid: bool,
}

fn rows(text: &str, arity: usize) -> Result<Vec<(usize, Vec<&str>)>, String> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('|').map(str::trim).collect();
        if cols.len() != arity {
            return Err(format!("line {}: expected {arity} `|`-separated fields", i + 1));
        }
        out.push((i + 1, cols));
    }
    Ok(out)
}

fn verdict(n: usize, s: &str) -> Result<bool, String> {
    match s {
        "valid" => Ok(true),
        "invalid" => Ok(false),
        other => Err(format!("line {n}: expected `valid` or `invalid`, found `{other}`")),
    }
}

fn term(n: usize, s: &str, sig: Signature) -> Result<Term, String> {
    parse(s, sig).map_err(|e| format!("line {n}: {e}"))
}

pub fn parse_equation_corpus(text: &str, sig: Signature) -> Result<Vec<EquationCase>, String> {
    rows(text, 4)?
        .into_iter()
        .map(|(n, c)| {
            Ok(EquationCase {
                equation: Equation {
                    name: c[0].to_string(),
                    lhs: term(n, c[1], sig)?,
                    rhs: term(n, c[2], sig)?,
                },
                valid: verdict(n, c[3])?,
            })
        })
        .collect()
}

pub fn parse_entailment_corpus(text: &str) -> Result<Vec<EntailmentCase>, String> {
    rows(text, 4)?
        .into_iter()
        .map(|(n, c)| {
            let premises = c[1]
                .split(';')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| term(n, p, Signature::W))
                .collect::<Result<_, _>>()?;
            Ok(EntailmentCase {
                name: c[0].to_string(),
                premises,
                conclusion: term(n, c[2], Signature::W)?,
                valid: verdict(n, c[3])?,
            })
        })
        .collect()
}

pub fn equation_corpus() -> Vec<EquationCase> {
    parse_equation_corpus(EQUATIONS, Signature::Mv).expect("bundled corpus parses")
}

pub fn entailment_corpus() -> Vec<EntailmentCase> {
    parse_entailment_corpus(ENTAILMENTS).expect("bundled corpus parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_sizes() {
        let eqs = equation_corpus();
        assert_eq!(eqs.len(), 50);
        assert_eq!(eqs.iter().filter(|c| !c.valid).count(), 10);
        assert!(entailment_corpus().len() >= 15);
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_equation_corpus("a | x | y", Signature::Mv).is_err());
        assert!(parse_equation_corpus("a | x | y | maybe", Signature::Mv).is_err());
        let e = parse_entailment_corpus("e | | p -> 1 | valid\n").unwrap();
        assert!(e[0].premises.is_empty());
    }
}
