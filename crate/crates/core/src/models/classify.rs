//! Axiom-by-axiom classification of models.

use std::fmt;

use serde::Serialize;

use super::axioms::{flat, mv_star, quasi, strong, Equation};
use super::Model;
use crate::scalar::Scalar;
use crate::semantics::{check_equation, Strategy, Witness};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ClassFlags {
    /// Quasi-MV* (or quasi-Wajsberg*).
    pub quasi: bool,
    /// Quasi and satisfying the strongness equations.
    pub strong: bool,
    /// Quasi and satisfying `0 = 1`.
    pub flat: bool,
    /// MV* (or Wajsberg*).
    pub mv_star: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: String,
    pub holds: bool,
    /// A falsifying valuation with both sides' values, rendered.
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub model: String,
    pub flags: ClassFlags,
    pub results: Vec<AxiomResult>,
}

impl Classification {
    pub fn result(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fl = self.flags;
        writeln!(f, "model: {}", self.model)?;
        writeln!(
            f,
            "quasi: {}, strong: {}, flat: {}, mv*: {}",
            fl.quasi, fl.strong, fl.flat, fl.mv_star
        )?;
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "  {:<10} holds", r.name)?,
                Some(w) => writeln!(f, "  {:<10} fails at {w}", r.name)?,
            }
        }
        Ok(())
    }
}

/// Grid denominator for axiom audits on infinite carriers. The term-derived
/// default grows too large on the longer axioms.
pub const AUDIT_GRID: u32 = 12;

/// Checks one equation: exhaustively on finite carriers, on the audit grid
/// and 10^4 seeded random valuations otherwise.
pub(crate) fn check_axiom<S: Scalar>(m: &Model<S>, eq: &Equation) -> AxiomResult {
    let plans = if m.is_finite() {
        vec![Strategy::Exhaustive]
    } else {
        vec![Strategy::Grid(Some(AUDIT_GRID)), Strategy::random(10_000, 0)]
    };
    for plan in plans {
        let r = check_equation(&eq.lhs, &eq.rhs, m, &plan)
            .unwrap_or_else(|e| panic!("axiom {} on {}: {e}", eq.name, m.name()));
        if let Some(Witness::Equation { valuation, lhs, rhs }) = &r.witness {
            let vals: Vec<String> =
                valuation.iter().map(|(k, v)| format!("{k} = {}", m.show(v))).collect();
            let w = format!("{} ({} vs {})", vals.join(", "), m.show(lhs), m.show(rhs));
            return AxiomResult { name: eq.name.clone(), holds: false, witness: Some(w) };
        }
    }
    AxiomResult { name: eq.name.clone(), holds: true, witness: None }
}

/// Decides each class equation on `m` (exhaustively when finite).
pub fn classify<S: Scalar>(m: &Model<S>) -> Classification {
    let sig = m.signature();
    let run = |eqs: Vec<Equation>| -> Vec<AxiomResult> {
        eqs.iter().map(|e| check_axiom(m, e)).collect()
    };
    let q = run(quasi(sig));
    let s = run(strong(sig));
    let fl = run(flat(sig));
    let mv = run(mv_star(sig));
    let all = |rs: &[AxiomResult]| rs.iter().all(|r| r.holds);
    let quasi_ok = all(&q);
    let flags = ClassFlags {
        quasi: quasi_ok,
        strong: quasi_ok && all(&s),
        flat: quasi_ok && all(&fl),
        mv_star: all(&mv),
    };
    Classification {
        model: m.name().to_string(),
        flags,
        results: q.into_iter().chain(s).chain(fl).chain(mv).collect(),
    }
}
