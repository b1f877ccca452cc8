//! Equation and entailment checks over one model, and countermodel search
//! over a family of models.

use std::fmt;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use serde_json::{json, Map, Value};

use super::designated::designated_set;
use super::program::Program;
use super::strategy::{for_each_tuple, for_each_valuation, Strategy};
use super::{evaluate, CheckError, Valuation};
use crate::models::{build_model, Element, Model};
use crate::scalar::Scalar;
use crate::syntax::{Connective, Term};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Every valuation of a finite carrier was checked.
    ValidExhaustive,
    /// Sampling found nothing; not a proof of validity.
    NoCounterexampleFound,
    Countermodel,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ValidExhaustive => "VALID_EXHAUSTIVE",
            Verdict::NoCounterexampleFound => "NO_COUNTEREXAMPLE_FOUND",
            Verdict::Countermodel => "COUNTERMODEL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<S = Rational> {
    /// The two sides evaluate differently.
    Equation { valuation: Valuation<S>, lhs: Element<S>, rhs: Element<S> },
    /// Every premise is designated and the conclusion is not.
    Entailment { valuation: Valuation<S>, premises: Vec<Element<S>>, conclusion: Element<S> },
}

impl<S> Witness<S> {
    pub fn valuation(&self) -> &Valuation<S> {
        match self {
            Witness::Equation { valuation, .. } | Witness::Entailment { valuation, .. } => valuation,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport<S: Scalar = Rational> {
    pub verdict: Verdict,
    /// Valuations examined (summed over models for a search).
    pub samples: u64,
    pub strategy: String,
    pub seed: u64,
    /// The model checked, or the one holding the countermodel.
    pub model: Option<Model<S>>,
    /// Names of every model examined.
    pub models: Vec<String>,
    pub witness: Option<Witness<S>>,
    /// Entailment only: valuations at which every premise was designated.
    pub premises_held: Option<u64>,
}

impl<S: Scalar> CheckReport<S> {
    pub fn is_countermodel(&self) -> bool {
        self.verdict == Verdict::Countermodel
    }

    fn show(&self, e: &Element<S>) -> String {
        match &self.model {
            Some(m) => m.show(e),
            None => e.to_string(),
        }
    }

    fn witness_json(&self) -> Value {
        let Some(w) = &self.witness else { return Value::Null };
        let mut val = Map::new();
        for (k, v) in w.valuation() {
            val.insert(k.clone(), Value::String(self.show(v)));
        }
        let model = self.model.as_ref().map(|m| m.name().to_string());
        match w {
            Witness::Equation { lhs, rhs, .. } => json!({
                "model": model,
                "valuation": val,
                "lhs": self.show(lhs),
                "rhs": self.show(rhs),
            }),
            Witness::Entailment { premises, conclusion, .. } => json!({
                "model": model,
                "valuation": val,
                "premises": premises.iter().map(|p| self.show(p)).collect::<Vec<_>>(),
                "conclusion": self.show(conclusion),
            }),
        }
    }

    /// `{verdict, samples, seed, witness}`.
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.to_string(),
            "samples": self.samples,
            "seed": self.seed,
            "witness": self.witness_json(),
        })
    }

    /// Line-oriented text form.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "model: {}", self.models.join(", "));
        let _ = writeln!(out, "strategy: {}", self.strategy);
        let _ = writeln!(out, "seed: {}", self.seed);
        let _ = writeln!(out, "samples: {}", self.samples);
        if let Some(n) = self.premises_held {
            let _ = writeln!(out, "premises designated at: {n}");
        }
        if let Some(w) = &self.witness {
            if let Some(m) = &self.model {
                let _ = writeln!(out, "countermodel in: {}", m.name());
            }
            let vals: Vec<String> =
                w.valuation().iter().map(|(k, v)| format!("{k} = {}", self.show(v))).collect();
            if vals.is_empty() {
                let _ = writeln!(out, "witness: (no variables)");
            } else {
                let _ = writeln!(out, "witness: {}", vals.join(", "));
            }
            match w {
                Witness::Equation { lhs, rhs, .. } => {
                    let _ = writeln!(out, "lhs: {}", self.show(lhs));
                    let _ = writeln!(out, "rhs: {}", self.show(rhs));
                }
                Witness::Entailment { premises, conclusion, .. } => {
                    for (i, p) in premises.iter().enumerate() {
                        let _ = writeln!(out, "premise {}: {}", i + 1, self.show(p));
                    }
                    let _ = writeln!(out, "conclusion: {}", self.show(conclusion));
                }
            }
        }
        out
    }
}

/// Grid denominator used when none is given: one more than the number of
/// binary connectives in `t (+) s` (resp. the entailment's terms joined).
pub(crate) fn default_grid(terms: &[&Term]) -> u32 {
    let binaries: usize = terms
        .iter()
        .map(|t| t.count_connective(Connective::OPlus) + t.count_connective(Connective::Impl))
        .sum();
    (binaries + terms.len().saturating_sub(1) + 1).min(64) as u32
}

fn to_valuation<S: Scalar>(vars: &[String], args: &[Element<S>]) -> Valuation<S> {
    vars.iter().cloned().zip(args.iter().cloned()).collect()
}

fn completed(finite_exhaustive: bool) -> Verdict {
    if finite_exhaustive {
        Verdict::ValidExhaustive
    } else {
        Verdict::NoCounterexampleFound
    }
}

/// Searches for a valuation separating `t` and `s` in `m`.
pub fn check_equation<S: Scalar>(
    t: &Term,
    s: &Term,
    m: &Model<S>,
    strategy: &Strategy,
) -> Result<CheckReport<S>, CheckError> {
    t.check_signature(m.signature())?;
    s.check_signature(m.signature())?;
    let prog = Program::compile(&[t, s]);
    let (rl, rr) = (prog.root(0), prog.root(1));
    let nvars = prog.vars().len();
    let grid_d = default_grid(&[t, s]);
    let mut found: Option<Vec<Element<S>>> = None;

    let samples = match (m.finite_algebra(), strategy) {
        (Some(alg), Strategy::Exhaustive | Strategy::Grid(_)) => {
            let idx: Vec<usize> = (0..alg.size()).collect();
            let mut out = Vec::with_capacity(prog.len());
            for_each_tuple(&idx, nvars, |args| {
                prog.eval_finite(alg, args, &mut out);
                if out[rl] != out[rr] {
                    found = Some(args.iter().map(|&i| Element::Fin(i)).collect());
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })
        }
        _ => {
            let mut out = Vec::with_capacity(prog.len());
            for_each_valuation(m, strategy, grid_d, nvars, |args| {
                prog.eval(m, args, &mut out);
                if out[rl] != out[rr] {
                    found = Some(args.to_vec());
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })?
        }
    };

    let strategy_text = match strategy {
        Strategy::Grid(None) => format!("grid:{grid_d}"),
        other => other.to_string(),
    };
    let witness = match found {
        None => None,
        Some(args) => {
            let valuation = to_valuation(prog.vars(), &args);
            let lhs = evaluate(t, m, &valuation)?;
            let rhs = evaluate(s, m, &valuation)?;
            assert_ne!(lhs, rhs, "countermodel did not survive re-evaluation");
            Some(Witness::Equation { valuation, lhs, rhs })
        }
    };
    Ok(CheckReport {
        verdict: if witness.is_some() {
            Verdict::Countermodel
        } else {
            completed(m.is_finite() && !matches!(strategy, Strategy::Random { .. }))
        },
        samples,
        strategy: strategy_text,
        seed: strategy.seed(),
        model: Some(m.clone()),
        models: vec![m.name().to_string()],
        witness,
        premises_held: None,
    })
}

/// Searches for a valuation making every premise designated and the
/// conclusion not designated.
pub fn check_entailment<S: Scalar>(
    premises: &[Term],
    conclusion: &Term,
    m: &Model<S>,
    strategy: &Strategy,
) -> Result<CheckReport<S>, CheckError> {
    for p in premises.iter().chain(std::iter::once(conclusion)) {
        p.check_signature(m.signature())?;
    }
    let designated = designated_set(m)?;
    let mut all: Vec<&Term> = premises.iter().collect();
    all.push(conclusion);
    let prog = Program::compile(&all);
    let roots: Vec<usize> = (0..all.len()).map(|i| prog.root(i)).collect();
    let (proots, croot) = roots.split_at(premises.len());
    let croot = croot[0];
    let grid_d = default_grid(&all);
    let nvars = prog.vars().len();
    let mut held = 0u64;
    let mut found: Option<Vec<Element<S>>> = None;

    let samples = match (m.finite_algebra(), strategy) {
        (Some(alg), Strategy::Exhaustive | Strategy::Grid(_)) => {
            let mask: Vec<bool> =
                (0..alg.size()).map(|i| designated.contains(&Element::Fin(i))).collect();
            let idx: Vec<usize> = (0..alg.size()).collect();
            let mut out = Vec::with_capacity(prog.len());
            for_each_tuple(&idx, nvars, |args| {
                prog.eval_finite(alg, args, &mut out);
                if proots.iter().all(|&r| mask[out[r]]) {
                    held += 1;
                    if !mask[out[croot]] {
                        found = Some(args.iter().map(|&i| Element::Fin(i)).collect());
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            })
        }
        _ => {
            let mut out = Vec::with_capacity(prog.len());
            for_each_valuation(m, strategy, grid_d, nvars, |args| {
                prog.eval(m, args, &mut out);
                if proots.iter().all(|&r| designated.contains(&out[r])) {
                    held += 1;
                    if !designated.contains(&out[croot]) {
                        found = Some(args.to_vec());
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            })?
        }
    };

    let witness = match found {
        None => None,
        Some(args) => {
            let valuation = to_valuation(prog.vars(), &args);
            let prem_vals = premises
                .iter()
                .map(|p| evaluate(p, m, &valuation))
                .collect::<Result<Vec<_>, _>>()?;
            let conc = evaluate(conclusion, m, &valuation)?;
            assert!(
                prem_vals.iter().all(|v| designated.contains(v)) && !designated.contains(&conc),
                "entailment countermodel did not survive re-evaluation"
            );
            Some(Witness::Entailment { valuation, premises: prem_vals, conclusion: conc })
        }
    };
    let exhaustive = m.is_finite() && !matches!(strategy, Strategy::Random { .. });
    Ok(CheckReport {
        verdict: if witness.is_some() { Verdict::Countermodel } else { completed(exhaustive) },
        samples,
        strategy: match strategy {
            Strategy::Grid(None) => format!("grid:{grid_d}"),
            other => other.to_string(),
        },
        seed: strategy.seed(),
        model: Some(m.clone()),
        models: vec![m.name().to_string()],
        witness,
        premises_held: Some(held),
    })
}

/// Tries each named model in turn: finite ones exhaustively, infinite ones
/// on the default grid and then with `random_budget` seeded samples.
/// Returns the first countermodel, or an aggregate report.
pub fn search_countermodel<S: Scalar>(
    t: &Term,
    s: &Term,
    family: &[impl AsRef<str>],
    random_budget: u64,
    seed: u64,
) -> Result<CheckReport<S>, CheckError> {
    let mut samples = 0;
    let mut names = Vec::new();
    let mut steps = Vec::new();
    for name in family {
        let m: Model<S> = build_model(name.as_ref())?;
        names.push(m.name().to_string());
        let plans = if m.is_finite() {
            vec![Strategy::Exhaustive]
        } else {
            vec![Strategy::Grid(None), Strategy::random(random_budget, seed)]
        };
        for plan in plans {
            let r = check_equation(t, s, &m, &plan)?;
            samples += r.samples;
            steps.push(format!("{} {}", m.name(), r.strategy));
            if r.is_countermodel() {
                return Ok(CheckReport {
                    samples,
                    strategy: steps.join("; "),
                    models: names,
                    ..r
                });
            }
        }
    }
    Ok(CheckReport {
        verdict: Verdict::NoCounterexampleFound,
        samples,
        strategy: steps.join("; "),
        seed,
        model: None,
        models: names,
        witness: None,
        premises_held: None,
    })
}
