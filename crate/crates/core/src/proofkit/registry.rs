//! Derived rules certified by proof scripts.

use super::check::check_proof;
use super::format::parse_scripts;
use super::{ProofError, ProofScript, Statement, System};
use crate::syntax::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaKind {
    /// `hypotheses ⊢ conclusion` as schemas, read off the certificate.
    Schematic,
    /// From `a <-> b` and a line, the line with some occurrences of `a`
    /// (under an implication) replaced by `b`, or vice versa. Certified by
    /// the scripts for the inductive cases.
    Replacement,
}

#[derive(Clone, Debug)]
pub struct DerivedRule {
    pub id: String,
    pub kind: LemmaKind,
    /// In core form; variables act as metavariables.
    pub hypotheses: Vec<Statement>,
    pub conclusion: Statement,
    pub certificate: Vec<ProofScript>,
}

impl DerivedRule {
    /// Builds the rule certified by `scripts`. A schematic rule takes its
    /// hypotheses and conclusion from its single script.
    pub fn from_scripts(id: &str, scripts: Vec<ProofScript>) -> Result<DerivedRule, ProofError> {
        let fail = |reason: &str| ProofError::CertificationFailed {
            id: id.to_string(),
            reason: reason.to_string(),
        };
        if scripts.is_empty() {
            return Err(fail("no certificate"));
        }
        if scripts.iter().any(|s| s.system != System::SqLStar) {
            return Err(fail("certificates must be sqL* scripts"));
        }
        if scripts.iter().any(|s| s.replacement) {
            let v = |n: &str| Term::var(n);
            return Ok(DerivedRule {
                id: id.to_string(),
                kind: LemmaKind::Replacement,
                hypotheses: vec![Statement::Iff(v("p1"), v("r1"))],
                conclusion: Statement::Iff(v("p"), v("r")),
                certificate: scripts,
            });
        }
        if scripts.len() != 1 {
            return Err(fail("a schematic rule has exactly one certificate"));
        }
        let s = &scripts[0];
        Ok(DerivedRule {
            id: id.to_string(),
            kind: LemmaKind::Schematic,
            hypotheses: s.hypotheses.iter().map(Statement::core).collect(),
            conclusion: s.conclusion().expect("parsed scripts have lines").core(),
            certificate: scripts,
        })
    }

    pub fn describe(&self) -> String {
        let hyps: Vec<String> = self.hypotheses.iter().map(ToString::to_string).collect();
        match self.kind {
            LemmaKind::Schematic => format!("({}) {} |- {}", self.id, hyps.join(", "), self.conclusion),
            LemmaKind::Replacement => format!(
                "({}) p1 <-> r1, t |- t[p1 := r1] (some occurrences under ->)",
                self.id
            ),
        }
    }
}

/// Derived rules in registration order.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    rules: Vec<DerivedRule>,
}

impl Registry {
    pub fn new() -> Registry {
        Registry::default()
    }

    pub fn get(&self, id: &str) -> Option<&DerivedRule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn ids(&self) -> Vec<&str> {
        self.rules.iter().map(|r| r.id.as_str()).collect()
    }

    pub fn rules(&self) -> &[DerivedRule] {
        &self.rules
    }

    /// Checks every certificate against the rules registered so far, then
    /// adds `rule`.
    pub fn register(&mut self, rule: DerivedRule) -> Result<(), ProofError> {
        if self.get(&rule.id).is_some() {
            return Err(ProofError::Duplicate(rule.id));
        }
        for (k, s) in rule.certificate.iter().enumerate() {
            let out = check_proof(s, self);
            if let Some((line, why)) = out.first_failure() {
                return Err(ProofError::CertificationFailed {
                    id: rule.id.clone(),
                    reason: format!("script {}, line {line}: {why}", k + 1),
                });
            }
        }
        self.rules.push(rule);
        Ok(())
    }

    /// Registers the scripts of a fixture file, grouped by their `lemma:`
    /// header.
    pub fn register_file(&mut self, text: &str) -> Result<Vec<String>, ProofError> {
        let mut groups: Vec<(String, Vec<ProofScript>)> = Vec::new();
        for s in parse_scripts(text)? {
            let id = s.lemma.clone().ok_or_else(|| ProofError::CertificationFailed {
                id: "?".into(),
                reason: "script has no `lemma:` header".into(),
            })?;
            match groups.iter_mut().find(|(g, _)| *g == id) {
                Some((_, v)) => v.push(s),
                None => groups.push((id, vec![s])),
            }
        }
        let mut ids = Vec::new();
        for (id, scripts) in groups {
            self.register(DerivedRule::from_scripts(&id, scripts)?)?;
            ids.push(id);
        }
        Ok(ids)
    }

    /// All fixture lemmas, registered in dependency order.
    pub fn seeded() -> Result<Registry, ProofError> {
        let mut r = Registry::new();
        for (_, text) in fixture_texts() {
            r.register_file(text)?;
        }
        Ok(r)
    }

    /// The fixture lemmas registered before `id`.
    pub fn seeded_before(id: &str) -> Result<Registry, ProofError> {
        let mut r = Registry::new();
        for (_, text) in fixture_texts() {
            let scripts = parse_scripts(text)?;
            if scripts.iter().any(|s| s.lemma.as_deref() == Some(id)) {
                let before: Vec<ProofScript> = scripts
                    .into_iter()
                    .take_while(|s| s.lemma.as_deref() != Some(id))
                    .collect();
                for s in before {
                    let lid = s.lemma.clone().unwrap_or_default();
                    r.register(DerivedRule::from_scripts(&lid, vec![s])?)?;
                }
                return Ok(r);
            }
            r.register_file(text)?;
        }
        Err(ProofError::MissingLemma(id.to_string()))
    }
}

/// File names of the derived-rule fixtures, in dependency order.
pub const FIXTURE_NAMES: [&str; 11] = [
    "prop4_3_01.sqlp",
    "prop4_3_02.sqlp",
    "prop4_3_03.sqlp",
    "prop4_3_04.sqlp",
    "prop4_3_05.sqlp",
    "prop4_3_06.sqlp",
    "prop4_3_07.sqlp",
    "prop4_3_08.sqlp",
    "prop4_3_09.sqlp",
    "prop4_3_10.sqlp",
    "prop4_3_11.sqlp",
];

const FIXTURES: [&str; 11] = [
    include_str!("../../fixtures/prop4_3_01.sqlp"),
    include_str!("../../fixtures/prop4_3_02.sqlp"),
    include_str!("../../fixtures/prop4_3_03.sqlp"),
    include_str!("../../fixtures/prop4_3_04.sqlp"),
    include_str!("../../fixtures/prop4_3_05.sqlp"),
    include_str!("../../fixtures/prop4_3_06.sqlp"),
    include_str!("../../fixtures/prop4_3_07.sqlp"),
    include_str!("../../fixtures/prop4_3_08.sqlp"),
    include_str!("../../fixtures/prop4_3_09.sqlp"),
    include_str!("../../fixtures/prop4_3_10.sqlp"),
    include_str!("../../fixtures/prop4_3_11.sqlp"),
];

const LSTAR_CORPUS: &str = include_str!("../../fixtures/lstar_corpus.sqlp");

/// `(file name, contents)` of the derived-rule fixtures.
pub fn fixture_texts() -> Vec<(&'static str, &'static str)> {
    FIXTURE_NAMES.iter().copied().zip(FIXTURES).collect()
}

/// The bundled text of a fixture file, by file name.
pub fn embedded_fixture(name: &str) -> Option<&'static str> {
    if name == "lstar_corpus.sqlp" {
        return Some(LSTAR_CORPUS);
    }
    fixture_texts().into_iter().find(|(n, _)| *n == name).map(|(_, t)| t)
}

/// The bundled `L*` scripts.
pub fn lstar_corpus() -> Vec<ProofScript> {
    parse_scripts(LSTAR_CORPUS).expect("bundled corpus parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_registry_in_order() {
        let r = Registry::seeded().unwrap();
        assert_eq!(r.ids(), ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10a", "10b", "11"]);
        assert_eq!(r.get("6").unwrap().kind, LemmaKind::Replacement);
        assert_eq!(r.get("5").unwrap().conclusion.to_string(), "p -> p");
    }

    #[test]
    fn dependency_order_is_enforced() {
        let mut r = Registry::new();
        let err = r.register_file(fixture_texts()[4].1).unwrap_err();
        assert!(matches!(err, ProofError::CertificationFailed { ref id, .. } if id == "5"));
        let mut r = Registry::new();
        r.register_file(fixture_texts()[0].1).unwrap();
        r.register_file(fixture_texts()[1].1).unwrap();
        r.register_file(fixture_texts()[2].1).unwrap();
        assert!(r.register_file(fixture_texts()[4].1).is_ok());
        assert!(matches!(r.register_file(fixture_texts()[4].1), Err(ProofError::Duplicate(_))));
    }

    #[test]
    fn seeded_before_stops_early() {
        assert_eq!(Registry::seeded_before("5").unwrap().ids(), ["1", "2", "3", "4"]);
        assert_eq!(Registry::seeded_before("10b").unwrap().ids().last(), Some(&"10a"));
        assert!(Registry::seeded_before("99").is_err());
    }
}
