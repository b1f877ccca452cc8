#![allow(dead_code)]

use sqmv_core::models::build_model;
use sqmv_core::proofkit::{
    check_proof, fixture_texts, mutants, parse_scripts, DerivedRule, Justification, Mutant,
    ProofScript, Registry,
};
use sqmv_core::semantics::{check_entailment, Strategy, Verdict};
use sqmv_core::syntax::Term;
use sqmv_core::Model;

/// Mutants that turn out to be correct proofs: an earlier line already
/// carries what the rule needs, or transitivity of `<->` is obtained by
/// replacing equivalents instead of chaining implications.
pub const VALID_EDITS: [(&str, &str); 10] = [
    ("prop4_3_03.sqlp", "line 8: premise 7 -> 3"),
    ("prop4_3_07.sqlp", "line 6: premise 5 -> 3"),
    ("prop4_3_07.sqlp", "line 12: premise 11 -> 9"),
    ("prop4_3_08.sqlp", "line 3: LEM 3 -> LEM 6"),
    ("prop4_3_08.sqlp", "line 6: LEM 3 -> LEM 6"),
    ("prop4_3_08.sqlp", "line 8: LEM 3 -> LEM 6"),
    ("prop4_3_08.sqlp", "line 11: LEM 3 -> LEM 6"),
    ("prop4_3_10.sqlp", "line 6: LEM 3 -> LEM 6"),
    ("prop4_3_10.sqlp", "line 9: LEM 3 -> LEM 6"),
    ("prop4_3_11.sqlp", "line 3: LEM 3 -> LEM 6"),
];

pub struct FixtureScript {
    pub file: &'static str,
    pub script: ProofScript,
    /// Every lemma certified before this script, including earlier lemmas
    /// of the same file.
    pub registry: Registry,
}

/// Fixture scripts in order, each with the registry it is checked against.
pub fn fixture_scripts() -> Vec<FixtureScript> {
    let mut reg = Registry::new();
    let mut out = Vec::new();
    for (file, text) in fixture_texts() {
        let scripts = parse_scripts(text).expect("fixture parses");
        let mut i = 0;
        while i < scripts.len() {
            let id = scripts[i].lemma.clone().expect("fixture scripts name their lemma");
            let j = (i..scripts.len()).find(|&j| scripts[j].lemma.as_ref() != Some(&id)).unwrap_or(scripts.len());
            for s in &scripts[i..j] {
                out.push(FixtureScript { file, script: s.clone(), registry: reg.clone() });
            }
            reg.register(DerivedRule::from_scripts(&id, scripts[i..j].to_vec()).expect("certificate"))
                .expect("registers");
            i = j;
        }
    }
    out
}

pub struct MutationRun {
    pub rejected: usize,
    pub accepted: Vec<(String, Mutant)>,
    pub checked_lines: usize,
}

pub fn run_mutants() -> MutationRun {
    let mut run = MutationRun { rejected: 0, accepted: vec![], checked_lines: 0 };
    for f in fixture_scripts() {
        run.checked_lines += f.script.lines.len();
        for m in mutants(&f.script, &f.registry) {
            if check_proof(&m.script, &f.registry).accepted() {
                run.accepted.push((f.file.to_string(), m));
            } else {
                run.rejected += 1;
            }
        }
    }
    run
}

pub fn is_listed_valid(file: &str, m: &Mutant) -> bool {
    VALID_EDITS.iter().any(|(f, d)| *f == file && *d == m.description)
}

/// Independent of the checker: the edited line's formulas are designated in
/// SW* whenever the formulas of the lines it now cites are.
pub fn edit_is_sound(m: &Mutant) -> bool {
    let sw: Model = build_model("square@w").unwrap();
    let n: usize = m.description["line ".len()..].split(':').next().unwrap().parse().unwrap();
    let line = &m.script.lines[n - 1];
    let cited: Vec<Term> = match &line.just {
        Justification::Rule { premises, .. } | Justification::Lemma { premises, .. } => premises
            .iter()
            .flat_map(|&p| m.script.lines[p - 1].statement.core().formulas())
            .collect(),
        _ => return false,
    };
    line.statement.core().formulas().iter().all(|phi| {
        let r = check_entailment(&cited, phi, &sw, &Strategy::random(2000, 11)).unwrap();
        r.verdict != Verdict::Countermodel
    })
}

/// Countermodel search on one model: exhaustive on finite carriers, the
/// default grid then `samples` random valuations otherwise. True if no
/// countermodel was found.
pub fn holds(t: &Term, s: &Term, m: &Model, samples: u64, seed: u64) -> bool {
    use sqmv_core::semantics::check_equation;
    if m.is_finite() {
        return check_equation(t, s, m, &Strategy::Exhaustive).unwrap().verdict != Verdict::Countermodel;
    }
    check_equation(t, s, m, &Strategy::Grid(Some(6))).unwrap().verdict != Verdict::Countermodel
        && check_equation(t, s, m, &Strategy::random(samples, seed)).unwrap().verdict
            != Verdict::Countermodel
}

/// Carriers are enumerated (finite) or gridded (pairs, d = 6) when that
/// takes at most about a million valuations, and sampled otherwise.
pub fn entails(premises: &[Term], c: &Term, m: &Model, samples: u64, seed: u64) -> bool {
    let vars: std::collections::BTreeSet<String> =
        premises.iter().chain([c]).flat_map(Term::variables).collect();
    let small = m.size().is_some_and(|n| (n as f64).powi(vars.len() as i32) <= 1e6);
    let strategies = if small {
        vec![Strategy::Exhaustive]
    } else if m.is_finite() {
        vec![Strategy::random(samples, seed)]
    } else if vars.len() <= 3 {
        vec![Strategy::Grid(Some(6)), Strategy::random(samples, seed)]
    } else {
        vec![Strategy::random(samples, seed)]
    };
    strategies.iter().all(|st| {
        check_entailment(premises, c, m, st).unwrap().verdict != Verdict::Countermodel
    })
}

pub fn model(name: &str) -> Model {
    build_model(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}
