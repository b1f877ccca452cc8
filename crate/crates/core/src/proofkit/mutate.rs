//! Single-edit corruptions of a proof script, for checking that the checker
//! rejects them.

use super::registry::Registry;
use super::schemas::{axiom_names, rule_names};
use super::{Justification, ProofScript};

#[derive(Clone, Debug)]
pub struct Mutant {
    pub description: String,
    pub script: ProofScript,
}

/// Every script obtained from `s` by changing one justification: another
/// axiom, rule or lemma name, one premise index moved to another earlier
/// line, or another hypothesis index. Lemma names are drawn from
/// `registry`.
pub fn mutants(s: &ProofScript, registry: &Registry) -> Vec<Mutant> {
    let mut out = Vec::new();
    let mut emit = |n: usize, desc: String, just: Justification| {
        let mut script = s.clone();
        script.lines[n].just = just;
        out.push(Mutant { description: format!("line {}: {desc}", n + 1), script });
    };
    for (n, line) in s.lines.iter().enumerate() {
        match &line.just {
            Justification::Axiom { name, .. } => {
                for other in axiom_names(s.system).into_iter().filter(|o| o != name) {
                    emit(n, format!("AX {name} -> AX {other}"), Justification::Axiom {
                        name: other.to_string(),
                        direction: None,
                    });
                }
            }
            Justification::Hypothesis(i) => {
                for j in (1..=s.hypotheses.len() + 1).filter(|j| j != i) {
                    emit(n, format!("HYP {i} -> HYP {j}"), Justification::Hypothesis(j));
                }
            }
            Justification::Rule { name, premises } => {
                for other in rule_names(s.system).into_iter().filter(|o| o != name) {
                    emit(n, format!("RULE {name} -> RULE {other}"), Justification::Rule {
                        name: other.to_string(),
                        premises: premises.clone(),
                    });
                }
                for (k, p) in premise_moves(premises, n) {
                    emit(n, format!("premise {} -> {p}", premises[k]), Justification::Rule {
                        name: name.clone(),
                        premises: replace(premises, k, p),
                    });
                }
            }
            Justification::Lemma { id, premises } => {
                for other in registry.ids().into_iter().filter(|o| o != id) {
                    emit(n, format!("LEM {id} -> LEM {other}"), Justification::Lemma {
                        id: other.to_string(),
                        premises: premises.clone(),
                    });
                }
                for (k, p) in premise_moves(premises, n) {
                    emit(n, format!("premise {} -> {p}", premises[k]), Justification::Lemma {
                        id: id.clone(),
                        premises: replace(premises, k, p),
                    });
                }
            }
        }
    }
    out
}

/// Pairs (position, new index) for every earlier line not already cited.
fn premise_moves(premises: &[usize], line: usize) -> Vec<(usize, usize)> {
    (0..premises.len())
        .flat_map(|k| {
            (1..=line).filter(|p| !premises.contains(p)).map(move |p| (k, p))
        })
        .collect()
}

fn replace(premises: &[usize], k: usize, p: usize) -> Vec<usize> {
    let mut v = premises.to_vec();
    v[k] = p;
    v
}
