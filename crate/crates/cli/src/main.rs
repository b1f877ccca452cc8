//! `sqmv`: command-line front end for terms, models, equation and entailment
//! checks, signature translation and proof scripts.
//!
//! Exit status: 0 on success or a valid verdict, 1 when a check finds a
//! countermodel or a proof is rejected, 2 on usage and input errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sqmv_core::models::{axioms, build_model, classify, AxiomSet, AUDIT_GRID};
use sqmv_core::proofkit::{
    check_proof, deregularize_proof, embedded_fixture, lift_lstar_proof, parse_scripts,
    CheckOutcome, DerivedRule, ProofError, ProofScript, Registry, System,
};
use sqmv_core::semantics::{
    check_entailment, check_equation, evaluate, search_countermodel, Strategy, DEFAULT_MAX_DEN,
};
use sqmv_core::syntax::{expand_abbreviations, parse, print, Expansion, Signature, Term};
use sqmv_core::transform::{translate_model, translate_term};
use sqmv_core::{CheckReport, Model, Valuation};

#[derive(Parser)]
#[command(name = "sqmv", version, about = "Strong quasi-MV* algebras and their logic")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Global {
    /// Catalog model, e.g. square, disk, chain:2, flatten:chain:1:0, square@w.
    #[arg(long, global = true)]
    model: Option<String>,
    /// Signature for parsing terms: mv or w. Defaults to the model's.
    #[arg(long, global = true)]
    sig: Option<String>,
    /// exhaustive, grid, grid:<d> or random:<n>.
    #[arg(long, global = true)]
    strategy: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Denominator bound for random rationals.
    #[arg(long = "max-den", global = true, default_value_t = DEFAULT_MAX_DEN)]
    max_den: i64,
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Parse a term and report its structure.
    Parse { term: String },
    /// Print a term canonically.
    Print {
        term: String,
        /// Replace `^+` and `^-` by their definitions.
        #[arg(long)]
        expand: bool,
    },
    /// Evaluate a term under `var=value` assignments.
    Eval { term: String, assignments: Vec<String> },
    /// Look for a valuation separating two terms.
    CheckEq { lhs: String, rhs: String },
    /// Look for a valuation designating the premises but not the conclusion.
    /// The last term is the conclusion.
    CheckEntail {
        #[arg(required = true)]
        terms: Vec<String>,
    },
    /// Try models in turn until one separates the terms.
    FindCountermodel {
        lhs: String,
        rhs: String,
        /// Comma-separated model names.
        #[arg(long)]
        family: Option<String>,
        /// Random samples per infinite model.
        #[arg(long, default_value_t = 1000)]
        budget: u64,
    },
    /// Translate a term, or with no term the `--model`, to the other signature.
    Translate {
        term: Option<String>,
        /// Target signature, mv or w; the term is read in the other one.
        #[arg(long)]
        to: Option<String>,
    },
    /// Decide the class equations on `--model`.
    Classify,
    /// Check a set of defining equations on `--model`.
    AuditAxioms {
        /// quasi, strong, flat, mv or flat-sum.
        #[arg(long, default_value = "quasi")]
        set: String,
    },
    /// Check proof scripts.
    CheckProof { file: String },
    /// Lift `L*` scripts to `sqL*` scripts proving `(p -> p) -> q`.
    LiftProof {
        file: String,
        #[arg(long, default_value = "p")]
        prefix: String,
    },
    /// Extend proofs of `(r -> r) -> q`, `q` regular, to proofs of `q`.
    /// `L*` scripts are lifted first.
    Deregularize {
        file: String,
        #[arg(long, default_value = "p")]
        prefix: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

/// Text or JSON to print, and whether the verdict was negative.
struct Output {
    text: String,
    json: Value,
    negative: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, negative: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(u8::from(out.negative))
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    match &cli.verb {
        Verb::Parse { term } => {
            let t = term_in(g, term, None)?;
            let vars: Vec<String> = t.variables().into_iter().collect();
            let text = format!(
                "{}\nsize: {}\ndepth: {}\nvariables: {}\nregular: {}\n",
                print(&t),
                t.size(),
                t.depth(),
                vars.join(" "),
                t.is_regular()
            );
            let json = json!({
                "term": print(&t),
                "size": t.size(),
                "depth": t.depth(),
                "variables": vars,
                "regular": t.is_regular(),
            });
            Ok(Output::ok(text, json))
        }
        Verb::Print { term, expand } => {
            let sig = signature(g, None)?;
            let mut t = parse(term, sig).map_err(usage)?;
            if *expand {
                t = expand_abbreviations(&t, sig, Expansion::Strong);
            }
            Ok(Output::ok(format!("{}\n", print(&t)), json!({ "term": print(&t) })))
        }
        Verb::Eval { term, assignments } => {
            let m = model(g, None)?;
            let t = parse(term, m.signature()).map_err(usage)?;
            let mut v = Valuation::new();
            for a in assignments {
                let (k, val) = a
                    .split_once('=')
                    .ok_or_else(|| usage(format!("expected var=value, found `{a}`")))?;
                v.insert(k.trim().to_string(), m.parse_element(val).map_err(usage)?);
            }
            let e = evaluate(&t, &m, &v).map_err(usage)?;
            let shown = m.show(&e);
            Ok(Output::ok(format!("{shown}\n"), json!({ "model": m.name(), "value": shown })))
        }
        Verb::CheckEq { lhs, rhs } => {
            let m = model(g, None)?;
            let (t, s) = (parse(lhs, m.signature()).map_err(usage)?, parse(rhs, m.signature()).map_err(usage)?);
            let r = check_equation(&t, &s, &m, &strategy(g, &m)?).map_err(usage)?;
            Ok(report(r))
        }
        Verb::CheckEntail { terms } => {
            let m = model(g, Some(Signature::W))?;
            let parsed: Vec<Term> = terms
                .iter()
                .map(|x| parse(x, m.signature()).map_err(usage))
                .collect::<Result<_, _>>()?;
            let (conclusion, premises) = parsed.split_last().expect("clap requires a term");
            let r = check_entailment(premises, conclusion, &m, &strategy(g, &m)?).map_err(usage)?;
            Ok(report(r))
        }
        Verb::FindCountermodel { lhs, rhs, family, budget } => {
            let sig = signature(g, None)?;
            let names: Vec<String> = match family {
                Some(f) => f.split(',').map(|s| s.trim().to_string()).collect(),
                None => default_family(sig),
            };
            let (t, s) = (parse(lhs, sig).map_err(usage)?, parse(rhs, sig).map_err(usage)?);
            let r = search_countermodel(&t, &s, &names, *budget, g.seed).map_err(usage)?;
            Ok(report(r))
        }
        Verb::Translate { term: Some(term), to } => {
            let sig = match to {
                None => signature(g, None)?,
                Some(to) => {
                    let source = parse_signature(to)?.other();
                    if g.sig.is_some() && signature(g, None)? != source {
                        return Err(usage(format!("--sig and --to {to} name the same signature")));
                    }
                    source
                }
            };
            let t = parse(term, sig).map_err(usage)?;
            let out = translate_term(&t, sig.other()).map_err(usage)?;
            let json = json!({ "from": sig.to_string(), "to": sig.other().to_string(), "term": print(&out) });
            Ok(Output::ok(format!("{}\n", print(&out)), json))
        }
        Verb::Translate { term: None, to } => {
            let m = model(g, None)?;
            if let Some(to) = to {
                if parse_signature(to)? == m.signature() {
                    return Err(usage(format!("{} is already in the {to} signature", m.name())));
                }
            }
            let out = translate_model(&m, m.signature().other()).map_err(usage)?;
            let tables = out.finite_algebra().map(|a| a.export(out.name()));
            let mut text = format!("{}\n", out.name());
            if let Some(t) = &tables {
                text.push_str(t);
            }
            Ok(Output::ok(text, json!({ "model": out.name(), "tables": tables })))
        }
        Verb::Classify => {
            let m = model(g, None)?;
            let c = classify(&m);
            let results: Vec<Value> = c
                .results
                .iter()
                .map(|r| json!({ "name": r.name, "holds": r.holds, "witness": r.witness }))
                .collect();
            let json = json!({ "model": c.model, "flags": c.flags, "results": results });
            Ok(Output::ok(c.to_string(), json))
        }
        Verb::AuditAxioms { set } => audit(g, set),
        Verb::CheckProof { file } => check_file(file),
        Verb::LiftProof { file, prefix } => {
            let mut texts = Vec::new();
            for s in load_scripts(file)? {
                texts.push(lift(&s, prefix)?.to_string());
            }
            Ok(scripts_output(texts))
        }
        Verb::Deregularize { file, prefix } => {
            let reg = Registry::seeded().map_err(usage)?;
            let mut texts = Vec::new();
            for s in load_scripts(file)? {
                let source = if s.system == System::LStar { lift(&s, prefix)? } else { s };
                match deregularize_proof(&source, &reg) {
                    Ok(d) => texts.push(d.to_string()),
                    Err(e @ (ProofError::NotRegular(_) | ProofError::SourceProofInvalid(_))) => {
                        return Err(Failure { code: 1, message: e.to_string() })
                    }
                    Err(e) => return Err(usage(e)),
                }
            }
            Ok(scripts_output(texts))
        }
    }
}

fn parse_signature(s: &str) -> Result<Signature, Failure> {
    match s {
        "mv" => Ok(Signature::Mv),
        "w" => Ok(Signature::W),
        other => Err(usage(format!("unknown signature `{other}` (expected mv or w)"))),
    }
}

fn signature(g: &Global, fallback: Option<Signature>) -> Result<Signature, Failure> {
    match (&g.sig, &g.model) {
        (Some(s), _) => parse_signature(s),
        (None, Some(name)) => Ok(build_model::<sqmv_core::Rational>(name).map_err(usage)?.signature()),
        (None, None) => Ok(fallback.unwrap_or(Signature::Mv)),
    }
}

/// `--model`, or the square in the requested signature.
fn model(g: &Global, fallback: Option<Signature>) -> Result<Model, Failure> {
    let name = match &g.model {
        Some(n) => n.clone(),
        None => match signature(g, fallback)? {
            Signature::Mv => "square".into(),
            Signature::W => "square@w".into(),
        },
    };
    build_model(&name).map_err(usage)
}

fn term_in(g: &Global, text: &str, fallback: Option<Signature>) -> Result<Term, Failure> {
    parse(text, signature(g, fallback)?).map_err(usage)
}

/// `--strategy`, or exhaustive on finite carriers and the default grid
/// otherwise.
fn strategy(g: &Global, m: &Model) -> Result<Strategy, Failure> {
    match &g.strategy {
        Some(s) => Strategy::parse(s, g.seed, g.max_den).map_err(usage),
        None if m.is_finite() => Ok(Strategy::Exhaustive),
        None => Ok(Strategy::Grid(None)),
    }
}

fn default_family(sig: Signature) -> Vec<String> {
    let base = ["chain:1", "chain:2", "flatten:chain:1:0", "ex32-grid", "square"];
    base.iter()
        .map(|n| match sig {
            Signature::Mv => n.to_string(),
            Signature::W => format!("{n}@w"),
        })
        .collect()
}

fn report(r: CheckReport) -> Output {
    Output { text: r.render(), json: r.to_json(), negative: r.is_countermodel() }
}

fn audit(g: &Global, set: &str) -> Result<Output, Failure> {
    let m = model(g, None)?;
    let set: AxiomSet = set.parse().map_err(usage)?;
    let plans = match &g.strategy {
        Some(s) => vec![Strategy::parse(s, g.seed, g.max_den).map_err(usage)?],
        None if m.is_finite() => vec![Strategy::Exhaustive],
        None => vec![
            Strategy::Grid(Some(AUDIT_GRID)),
            Strategy::Random { count: 10_000, seed: g.seed, max_den: g.max_den },
        ],
    };
    let mut text = format!("model: {}\n", m.name());
    let mut rows = Vec::new();
    let mut failed = 0;
    for eq in axioms(set, m.signature()) {
        let mut failure = None;
        let mut samples = 0;
        for plan in &plans {
            let r = check_equation(&eq.lhs, &eq.rhs, &m, plan).map_err(usage)?;
            samples += r.samples;
            if r.is_countermodel() {
                failure = Some(r.render());
                break;
            }
        }
        match &failure {
            None => text.push_str(&format!("  {:<10} ok ({samples} valuations)\n", eq.name)),
            Some(r) => {
                failed += 1;
                text.push_str(&format!("  {:<10} FAILS\n", eq.name));
                for line in r.lines() {
                    text.push_str(&format!("      {line}\n"));
                }
            }
        }
        rows.push(json!({ "name": eq.name, "holds": failure.is_none(), "samples": samples }));
    }
    text.push_str(&format!("{} of {} equations hold\n", rows.len() - failed, rows.len()));
    Ok(Output { text, json: json!({ "model": m.name(), "results": rows }), negative: failed > 0 })
}

/// The path as given, then under `SQMV_FIXTURES` (full relative path and
/// file name), then the bundled fixture of that file name.
fn read_fixture(file: &str) -> Result<String, Failure> {
    let path = Path::new(file);
    let mut candidates = vec![path.to_path_buf()];
    if let Some(dir) = std::env::var_os("SQMV_FIXTURES") {
        let dir = PathBuf::from(dir);
        candidates.push(dir.join(path));
        if let Some(name) = path.file_name() {
            candidates.push(dir.join(name));
        }
    }
    for c in &candidates {
        if c.is_file() {
            return std::fs::read_to_string(c).map_err(|e| usage(format!("{}: {e}", c.display())));
        }
    }
    path.file_name()
        .and_then(|n| n.to_str())
        .and_then(embedded_fixture)
        .map(str::to_string)
        .ok_or_else(|| usage(format!("no such file `{file}`")))
}

fn load_scripts(file: &str) -> Result<Vec<ProofScript>, Failure> {
    parse_scripts(&read_fixture(file)?).map_err(|e| usage(format!("{file}: {e}")))
}

fn lift(s: &ProofScript, prefix: &str) -> Result<ProofScript, Failure> {
    lift_lstar_proof(s, prefix).map_err(|e| match e {
        ProofError::SourceProofInvalid(_) => Failure { code: 1, message: e.to_string() },
        other => usage(other),
    })
}

fn scripts_output(texts: Vec<String>) -> Output {
    Output::ok(texts.join("---\n"), json!({ "scripts": texts }))
}

/// Checks every script of a file. Scripts naming a bundled lemma are checked
/// against the lemmas certified before it; consecutive scripts of one lemma
/// are registered once all of them check.
fn check_file(file: &str) -> Result<Output, Failure> {
    let scripts = load_scripts(file)?;
    let first = scripts.iter().find_map(|s| s.lemma.clone());
    let mut reg = match first.as_deref().map(Registry::seeded_before) {
        Some(Ok(r)) => r,
        _ => Registry::seeded().map_err(usage)?,
    };
    let mut text = String::new();
    let mut docs = Vec::new();
    let mut all_ok = true;
    let mut group: (Option<String>, Vec<ProofScript>) = (None, Vec::new());
    for (i, s) in scripts.iter().enumerate() {
        if group.0 != s.lemma {
            register_group(&mut reg, &mut group);
            group.0 = s.lemma.clone();
        }
        let out: CheckOutcome = check_proof(s, &reg);
        all_ok &= out.accepted();
        if scripts.len() > 1 {
            let label = s.lemma.as_deref().map(|l| format!(" (lemma {l})")).unwrap_or_default();
            text.push_str(&format!("script {}{label}\n", i + 1));
        }
        text.push_str(&out.render());
        let mut doc: BTreeMap<&str, Value> = BTreeMap::new();
        doc.insert("lemma", json!(s.lemma));
        doc.insert("verdict", json!(out.verdict));
        doc.insert("lines", json!(out.lines));
        docs.push(json!(doc));
        if out.accepted() {
            group.1.push(s.clone());
        }
    }
    let verdict = if all_ok { "ACCEPT" } else { "REJECT" };
    if scripts.len() > 1 {
        text.push_str(&format!("{verdict}\n"));
    }
    Ok(Output { text, json: json!({ "verdict": verdict, "scripts": docs }), negative: !all_ok })
}

fn register_group(reg: &mut Registry, group: &mut (Option<String>, Vec<ProofScript>)) {
    let scripts = std::mem::take(&mut group.1);
    if let Some(id) = &group.0 {
        if reg.get(id).is_none() && !scripts.is_empty() {
            if let Ok(rule) = DerivedRule::from_scripts(id, scripts) {
                let _ = reg.register(rule);
            }
        }
    }
}
