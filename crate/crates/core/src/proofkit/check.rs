//! Line-by-line proof checking.
//!
//! A line asserts one formula or, for `a <-> b`, both implications. A line
//! justified by a rule or lemma is accepted when each asserted implication
//! follows from one application whose premises are the cited lines, taken
//! in any order; a cited biconditional may supply either implication.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use super::registry::{LemmaKind, Registry};
use super::schemas::{axiom, rule};
use super::{Direction, Justification, ProofScript, Statement, System};
use crate::syntax::{match_into, Assignment, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProofVerdict {
    #[serde(rename = "ACCEPT")]
    Accept,
    #[serde(rename = "REJECT")]
    Reject,
}

impl std::fmt::Display for ProofVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProofVerdict::Accept => "ACCEPT",
            ProofVerdict::Reject => "REJECT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
pub enum RejectReason {
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("NoMatchingAxiomInstance: not an instance of {axiom}")]
    NoMatchingAxiomInstance { axiom: String },
    #[error("hypothesis {0} does not exist")]
    HypothesisOutOfRange(usize),
    #[error("not asserted by hypothesis {0}")]
    NotAHypothesis(usize),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("lemmas are not available in {0}")]
    LemmaNotAllowed(String),
    #[error("premise {index} does not precede the line")]
    PremiseOutOfRange { index: usize },
    #[error("{name} takes {expected} premise(s), {found} cited")]
    WrongPremiseCount { name: String, expected: usize, found: usize },
    #[error("NoMatchingRuleInstance: not obtained by {rule} from the cited lines")]
    NoMatchingRuleInstance { rule: String },
    #[error("NoMatchingLemmaInstance: not obtained by lemma {lemma} from the cited lines")]
    NoMatchingLemmaInstance { lemma: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct LineReport {
    pub line: usize,
    pub ok: bool,
    /// What matched, e.g. `Q3 LR`.
    pub detail: String,
    pub reason: Option<RejectReason>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub verdict: ProofVerdict,
    pub lines: Vec<LineReport>,
}

impl CheckOutcome {
    pub fn accepted(&self) -> bool {
        self.verdict == ProofVerdict::Accept
    }

    /// The first failing line and its reason.
    pub fn first_failure(&self) -> Option<(usize, &RejectReason)> {
        self.lines.iter().find_map(|l| l.reason.as_ref().map(|r| (l.line, r)))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            match &l.reason {
                None => out.push_str(&format!("{:>3}. ok    {}\n", l.line, l.detail)),
                Some(r) => out.push_str(&format!("{:>3}. FAIL  {r}\n", l.line)),
            }
        }
        match self.first_failure() {
            None => out.push_str("ACCEPT\n"),
            Some((n, r)) => out.push_str(&format!("REJECT at line {n}: {r}\n")),
        }
        out
    }
}

/// Checks every line. Later lines are checked even after a failure, taking
/// failed lines at face value.
pub fn check_proof(s: &ProofScript, registry: &Registry) -> CheckOutcome {
    let hyps: Vec<Statement> = s.hypotheses.iter().map(Statement::core).collect();
    let mut done: Vec<Statement> = Vec::with_capacity(s.lines.len());
    let mut lines = Vec::with_capacity(s.lines.len());
    for (i, line) in s.lines.iter().enumerate() {
        let st = line.statement.core();
        let res = check_line(s.system, &st, &line.just, &hyps, &done, registry);
        lines.push(match res {
            Ok(detail) => LineReport { line: i + 1, ok: true, detail, reason: None },
            Err(r) => LineReport { line: i + 1, ok: false, detail: String::new(), reason: Some(r) },
        });
        done.push(st);
    }
    let verdict =
        if lines.iter().all(|l| l.ok) { ProofVerdict::Accept } else { ProofVerdict::Reject };
    CheckOutcome { verdict, lines }
}

fn check_line(
    system: System,
    st: &Statement,
    just: &Justification,
    hyps: &[Statement],
    done: &[Statement],
    registry: &Registry,
) -> Result<String, RejectReason> {
    let targets = st.formulas();
    match just {
        Justification::Axiom { name, direction } => {
            let ax = axiom(system, name).ok_or_else(|| RejectReason::UnknownAxiom(name.clone()))?;
            let forms = ax.formulas();
            let mut dirs = Vec::new();
            for t in &targets {
                let d = forms
                    .iter()
                    .find(|(f, _)| match_into(f, t, &mut Assignment::new()))
                    .map(|(_, d)| *d)
                    .ok_or_else(|| RejectReason::NoMatchingAxiomInstance { axiom: name.clone() })?;
                dirs.push(d);
            }
            let found = match dirs.as_slice() {
                [d] => *d,
                [Direction::LR, Direction::RL] | [Direction::RL, Direction::LR] => Direction::Both,
                _ => Direction::NA,
            };
            if direction.is_some_and(|d| d != found) {
                return Err(RejectReason::NoMatchingAxiomInstance { axiom: name.clone() });
            }
            Ok(format!("{name} {found}"))
        }
        Justification::Hypothesis(i) => {
            let h = hyps.get(i.wrapping_sub(1)).ok_or(RejectReason::HypothesisOutOfRange(*i))?;
            let hf = h.formulas();
            if targets.iter().all(|t| hf.contains(t)) {
                Ok(format!("hypothesis {i}"))
            } else {
                Err(RejectReason::NotAHypothesis(*i))
            }
        }
        Justification::Rule { name, premises } => {
            let r = rule(system, name).ok_or_else(|| RejectReason::UnknownRule(name.clone()))?;
            let cited = cited_lines(name, premises, r.premises.len(), done)?;
            if targets.iter().all(|t| derive(&r.premises, &r.conclusion, &cited, t).is_some()) {
                Ok(format!("{name} from {}", super::join_indices(premises)))
            } else {
                Err(RejectReason::NoMatchingRuleInstance { rule: name.clone() })
            }
        }
        Justification::Lemma { id, premises } => {
            if system != System::SqLStar {
                return Err(RejectReason::LemmaNotAllowed(system.to_string()));
            }
            let lem = registry.get(id).ok_or_else(|| RejectReason::UnknownLemma(id.clone()))?;
            let ok = match lem.kind {
                LemmaKind::Schematic => {
                    let cited = cited_lines(id, premises, lem.hypotheses.len(), done)?;
                    targets
                        .iter()
                        .all(|t| derive(&lem.hypotheses, &lem.conclusion, &cited, t).is_some())
                }
                LemmaKind::Replacement => {
                    let cited = cited_lines(id, premises, 2, done)?;
                    replaces_in(cited[0], cited[1], st) || replaces_in(cited[1], cited[0], st)
                }
            };
            if ok {
                let from = if premises.is_empty() {
                    String::new()
                } else {
                    format!(" from {}", super::join_indices(premises))
                };
                Ok(format!("lemma {id}{from}"))
            } else {
                Err(RejectReason::NoMatchingLemmaInstance { lemma: id.clone() })
            }
        }
    }
}

fn cited_lines<'a>(
    name: &str,
    premises: &[usize],
    expected: usize,
    done: &'a [Statement],
) -> Result<Vec<&'a Statement>, RejectReason> {
    if premises.len() != expected {
        return Err(RejectReason::WrongPremiseCount {
            name: name.to_string(),
            expected,
            found: premises.len(),
        });
    }
    premises
        .iter()
        .map(|&i| {
            done.get(i.wrapping_sub(1)).ok_or(RejectReason::PremiseOutOfRange { index: i })
        })
        .collect()
}

/// Which cited statement and which of its formulas fed each premise.
pub(crate) type Witness = Vec<(usize, usize)>;

/// Finds one application of `premises ⊢ conclusion` producing `target`
/// with premise `k` taken from `cited[perm[k]]`.
pub(crate) fn derive(
    premises: &[Statement],
    conclusion: &Statement,
    cited: &[&Statement],
    target: &Term,
) -> Option<Witness> {
    let pools: Vec<Vec<Term>> = cited.iter().map(|s| s.formulas()).collect();
    let pats: Vec<Vec<Term>> = premises.iter().map(Statement::formulas).collect();
    for c in conclusion.formulas() {
        let mut sigma = Assignment::new();
        if !match_into(&c, target, &mut sigma) {
            continue;
        }
        for perm in (0..cited.len()).permutations(cited.len()) {
            let mut witness = Vec::new();
            if assign(&pats, &pools, &perm, 0, &sigma, &mut witness) {
                return Some(witness);
            }
        }
    }
    None
}

fn assign(
    pats: &[Vec<Term>],
    pools: &[Vec<Term>],
    perm: &[usize],
    k: usize,
    sigma: &Assignment,
    witness: &mut Witness,
) -> bool {
    if k == pats.len() {
        return true;
    }
    let pool = &pools[perm[k]];
    let mut found = false;
    each_cover(&pats[k], pool, 0, sigma, &mut Vec::new(), &mut |s, used| {
        witness.push((perm[k], used[0]));
        if assign(pats, pools, perm, k + 1, s, witness) {
            found = true;
            return true;
        }
        witness.pop();
        false
    });
    found
}

/// Calls `f` with every extension of `sigma` matching each pattern in
/// `pats` to some formula of `pool`, until `f` returns true.
fn each_cover(
    pats: &[Term],
    pool: &[Term],
    j: usize,
    sigma: &Assignment,
    used: &mut Vec<usize>,
    f: &mut dyn FnMut(&Assignment, &[usize]) -> bool,
) -> bool {
    if j == pats.len() {
        return f(sigma, used);
    }
    for (i, g) in pool.iter().enumerate() {
        let mut s = sigma.clone();
        if match_into(&pats[j], g, &mut s) {
            used.push(i);
            if each_cover(pats, pool, j + 1, &s, used, f) {
                return true;
            }
            used.pop();
        }
    }
    false
}

/// `target` is `source` with some occurrences of one side of the
/// biconditional `equiv` replaced by the other side. Replaced occurrences
/// must lie under an implication.
pub(crate) fn replaces_in(equiv: &Statement, source: &Statement, target: &Statement) -> bool {
    let Statement::Iff(a, b) = equiv else { return false };
    let one_way = |x: &Term, y: &Term| match (source, target) {
        (Statement::Single(s), Statement::Single(t)) => replaced(s, t, x, y, false),
        (Statement::Iff(s1, s2), Statement::Iff(t1, t2)) => {
            replaced(s1, t1, x, y, true) && replaced(s2, t2, x, y, true)
        }
        _ => false,
    };
    one_way(a, b) || one_way(b, a)
}

fn replaced(s: &Term, t: &Term, from: &Term, to: &Term, under_imp: bool) -> bool {
    if s == t {
        return true;
    }
    if under_imp && s == from && t == to {
        return true;
    }
    if s.connective() != t.connective() || s.connective().is_none() {
        return false;
    }
    let under = under_imp || matches!(s, Term::Impl(..));
    s.children().iter().zip(t.children()).all(|(x, y)| replaced(x, y, from, to, under))
}
