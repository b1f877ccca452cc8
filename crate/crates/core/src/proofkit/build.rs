//! Proof constructions: replacement of equivalents, lifting `L*` proofs
//! into `sqL*`, and removing the `(r -> r) ->` prefix from a regular
//! conclusion.

use super::check::{check_proof, derive};
use super::registry::Registry;
use super::schemas::rule;
use super::{Justification, ProofError, ProofScript, Statement, System};
use crate::syntax::Term;

fn lem(id: &str, premises: Vec<usize>) -> Justification {
    Justification::Lemma { id: id.to_string(), premises }
}

fn rule_just(name: &str, premises: Vec<usize>) -> Justification {
    Justification::Rule { name: name.to_string(), premises }
}

fn require(registry: &Registry, ids: &[&str]) -> Result<(), ProofError> {
    match ids.iter().find(|id| registry.get(id).is_none()) {
        Some(id) => Err(ProofError::MissingLemma(id.to_string())),
        None => Ok(()),
    }
}

fn ensure_checks(s: &ProofScript, registry: &Registry) -> Result<(), ProofError> {
    let out = check_proof(s, registry);
    match out.first_failure() {
        None => Ok(()),
        Some((n, why)) => Err(ProofError::SourceProofInvalid(format!("line {n}: {why}"))),
    }
}

/// Extends `equiv`, which ends in `p1 <-> r1`, to a proof of `p <-> r`
/// where `p1` sits at `path` in `p` and `r` has `r1` there instead. Paths
/// index children (0 = left/only) in the core form of `p`. One step per
/// level: lemma 1 under `~`, lemmas 5 and 2 under `->`.
pub fn replacement_proof(
    p: &Term,
    path: &[usize],
    equiv: &ProofScript,
    registry: &Registry,
) -> Result<ProofScript, ProofError> {
    require(registry, &["1", "2", "5"])?;
    let core = Statement::Single(p.clone()).core();
    let Statement::Single(p) = core else { unreachable!() };
    let Some(Statement::Iff(p1, r1)) = equiv.conclusion().map(Statement::core) else {
        return Err(ProofError::NotAnEquivalence);
    };
    if p.subterm_at(path) != Some(&p1) {
        return Err(ProofError::PathMismatch { path: path.to_vec(), expected: p1.to_string() });
    }
    let mut out = equiv.clone();
    out.lemma = None;
    out.replacement = false;
    let (mut u, mut v) = (p1, r1);
    let mut at = out.lines.len();
    for depth in (0..path.len()).rev() {
        let parent = p.subterm_at(&path[..depth]).expect("prefix of a valid path");
        match (parent, path[depth]) {
            (Term::Neg(_), _) => {
                u = Term::neg(u);
                v = Term::neg(v);
                at = out.push(Statement::Iff(u.clone(), v.clone()), lem("1", vec![at]));
            }
            (Term::Impl(_, q), 0) => {
                let refl = out.push(Statement::Iff((**q).clone(), (**q).clone()), lem("5", vec![]));
                u = Term::imp(u, (**q).clone());
                v = Term::imp(v, (**q).clone());
                at = out.push(Statement::Iff(u.clone(), v.clone()), lem("2", vec![at, refl]));
            }
            (Term::Impl(q, _), _) => {
                let refl = out.push(Statement::Iff((**q).clone(), (**q).clone()), lem("5", vec![]));
                u = Term::imp((**q).clone(), u);
                v = Term::imp((**q).clone(), v);
                at = out.push(Statement::Iff(u.clone(), v.clone()), lem("2", vec![refl, at]));
            }
            _ => unreachable!("core terms have only ~ and -> above a leaf"),
        }
    }
    Ok(out)
}

fn axiom_counterpart(name: &str) -> Option<&'static str> {
    Some(match name {
        "P1" => "Q1",
        "P2" => "Q3",
        "P3" => "Q5",
        "P4" => "Q10",
        "P5" => "Q2",
        "P6" => "Q9",
        "P7" => "Q4",
        "P8" => "Q6",
        "P9" => "Q7",
        "P10" => "Q8",
        _ => return None,
    })
}

/// Turns an `L*` proof of `q` from `q1..qn` into an `sqL*` proof of
/// `(p -> p) -> q` from the same hypotheses, where `p` is the variable
/// `prefix`. A biconditional last line yields `(p -> p) -> (b -> a)` last.
pub fn lift_lstar_proof(s: &ProofScript, prefix: &str) -> Result<ProofScript, ProofError> {
    if s.system != System::LStar {
        return Err(ProofError::SourceProofInvalid("not an L* script".into()));
    }
    ensure_checks(s, &Registry::new())?;
    let rr = Term::self_impl(Term::var(prefix));
    let pre = |t: &Term| Term::imp(rr.clone(), t.clone());
    let mut out = ProofScript::new(System::SqLStar);
    out.hypotheses = s.hypotheses.clone();
    let mut done: Vec<Statement> = Vec::new();
    // lifted[i][j]: output line of (p -> p) -> (formula j of source line i)
    let mut lifted: Vec<Vec<usize>> = Vec::new();
    for line in &s.lines {
        let st = line.statement.core();
        let mut here = Vec::new();
        for phi in st.formulas() {
            let n = match &line.just {
                Justification::Axiom { name, direction } => {
                    let q = axiom_counterpart(name).expect("checked L* axiom");
                    let a = out.push(
                        Statement::Single(phi.clone()),
                        Justification::Axiom { name: q.to_string(), direction: *direction }
                            .with_single_direction(&st),
                    );
                    out.push(Statement::Single(pre(&phi)), rule_just("Reg", vec![a]))
                }
                Justification::Hypothesis(i) => {
                    let a = out.push(Statement::Single(phi.clone()), Justification::Hypothesis(*i));
                    out.push(Statement::Single(pre(&phi)), rule_just("Reg", vec![a]))
                }
                Justification::Rule { name, premises } => {
                    let r = rule(System::LStar, name).expect("checked L* rule");
                    let cited: Vec<&Statement> = premises.iter().map(|&i| &done[i - 1]).collect();
                    let w = derive(&r.premises, &r.conclusion, &cited, &phi)
                        .expect("checked L* application");
                    let from = |k: usize| lifted[premises[w[k].0] - 1][w[k].1];
                    match name.as_str() {
                        "IFF" => from(0),
                        "R1" => out.push(
                            Statement::Single(pre(&phi)),
                            rule_just("qMP", vec![from(0), from(1)]),
                        ),
                        "R2" => {
                            let f0 = cited[w[0].0].formulas()[w[0].1].clone();
                            let f1 = cited[w[1].0].formulas()[w[1].1].clone();
                            let a = out.push(Statement::Single(f0), rule_just("AReg1", vec![from(0)]));
                            let b = out.push(Statement::Single(f1), rule_just("AReg1", vec![from(1)]));
                            let c = out.push(Statement::Single(phi.clone()), rule_just("R2'", vec![a, b]));
                            out.push(Statement::Single(pre(&phi)), rule_just("Reg", vec![c]))
                        }
                        "R3" => {
                            let a = out.push(Statement::Single(phi.clone()), rule_just("R3'", vec![from(0)]));
                            out.push(Statement::Single(pre(&phi)), rule_just("Reg", vec![a]))
                        }
                        other => unreachable!("L* has no rule {other}"),
                    }
                }
                Justification::Lemma { .. } => unreachable!("L* scripts cite no lemmas"),
            };
            here.push(n);
        }
        lifted.push(here);
        done.push(st);
    }
    Ok(out)
}

impl Justification {
    /// For a biconditional source line the lifted formula is one direction,
    /// so a stated `BOTH` direction is dropped.
    fn with_single_direction(self, source: &Statement) -> Justification {
        match (self, source) {
            (Justification::Axiom { name, .. }, Statement::Iff(..)) => {
                Justification::Axiom { name, direction: None }
            }
            (j, _) => j,
        }
    }
}

/// Extends a proof whose last line is `(r -> r) -> q`, `q` regular, to a
/// proof of `q`. Double negations are removed under the prefix with lemma 8
/// and quasi modus ponens, the prefix is dropped with AReg1..4, and the
/// removed negations are restored with Inv1.
pub fn deregularize_proof(s: &ProofScript, registry: &Registry) -> Result<ProofScript, ProofError> {
    let last = match s.conclusion().map(Statement::core) {
        Some(Statement::Single(t)) => t,
        Some(other) => return Err(ProofError::NotPrefixed(other.to_string())),
        None => return Err(ProofError::NotPrefixed(String::new())),
    };
    let (rr, q) = match &last {
        Term::Impl(a, q) if matches!(&**a, Term::Impl(x, y) if x == y) => ((**a).clone(), (**q).clone()),
        _ => return Err(ProofError::NotPrefixed(last.to_string())),
    };
    if !q.is_regular() {
        return Err(ProofError::NotRegular(q.to_string()));
    }
    ensure_checks(s, registry)?;
    let (k, base) = q.strip_negations();
    let base = base.clone();
    if k >= 2 {
        require(registry, &["8"])?;
    }
    let mut out = s.clone();
    out.lemma = None;
    out.replacement = false;
    let mut at = out.lines.len();
    let mut j = k;
    while j >= 2 {
        let x = Term::negate_n(crate::syntax::Signature::W, j - 2, base.clone());
        let nnx = Term::neg(Term::neg(x.clone()));
        let eq = out.push(Statement::Iff(x.clone(), nnx.clone()), lem("8", vec![]));
        let reg = out.push(
            Statement::Single(Term::imp(rr.clone(), Term::imp(nnx, x.clone()))),
            rule_just("Reg", vec![eq]),
        );
        at = out.push(Statement::Single(Term::imp(rr.clone(), x)), rule_just("qMP", vec![at, reg]));
        j -= 2;
    }
    let name = match (j, &base) {
        (0, Term::Const1) => "AReg4",
        (0, _) => "AReg1",
        (_, Term::Const1) => "AReg3",
        _ => "AReg2",
    };
    let mut cur = Term::negate_n(crate::syntax::Signature::W, j, base);
    at = out.push(Statement::Single(cur.clone()), rule_just(name, vec![at]));
    while cur != q {
        cur = Term::neg(Term::neg(cur));
        at = out.push(Statement::Single(cur.clone()), rule_just("Inv1", vec![at]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofkit::parse_script;
    use crate::syntax::{parse, Signature};

    fn w(s: &str) -> Term {
        parse(s, Signature::W).unwrap()
    }

    fn reg() -> Registry {
        Registry::seeded().unwrap()
    }

    fn accepts(s: &ProofScript, r: &Registry) {
        let out = check_proof(s, r);
        assert!(out.accepted(), "{s}\n{}", out.render());
    }

    const EQUIV: &str = "system: sqL*\nhyp: a <-> b\n1. a <-> b ; HYP 1\n";

    #[test]
    fn replacement_cases() {
        let r = reg();
        let equiv = parse_script(EQUIV).unwrap();
        let same = replacement_proof(&w("a"), &[], &equiv, &r).unwrap();
        assert_eq!(same, equiv);
        let neg = replacement_proof(&w("~a"), &[0], &equiv, &r).unwrap();
        accepts(&neg, &r);
        assert_eq!(neg.conclusion().unwrap(), &Statement::parse("~a <-> ~b").unwrap());
        assert!(matches!(&neg.lines[1].just, Justification::Lemma { id, .. } if id == "1"));
        let left = replacement_proof(&w("a -> t"), &[0], &equiv, &r).unwrap();
        accepts(&left, &r);
        assert_eq!(left.conclusion().unwrap(), &Statement::parse("(a -> t) <-> (b -> t)").unwrap());
        let deep = w("~(x -> (~a -> y)) -> z");
        let path = [0, 0, 1, 0, 0];
        let out = replacement_proof(&deep, &path, &equiv, &r).unwrap();
        accepts(&out, &r);
        let target = deep.replace_at(&path, w("b")).unwrap();
        assert_eq!(out.conclusion().unwrap(), &Statement::Iff(deep.clone(), target));
        assert!(out.lines.len() <= 1 + 2 * path.len());
        assert!(matches!(
            replacement_proof(&deep, &[0, 0], &equiv, &r),
            Err(ProofError::PathMismatch { .. })
        ));
    }

    #[test]
    fn lift_one_liner_and_rules() {
        let s = parse_script("system: L*\n1. x -> 1 ; AX P4\n").unwrap();
        let l = lift_lstar_proof(&s, "p").unwrap();
        accepts(&l, &Registry::new());
        assert_eq!(l.lines.len(), 2);
        assert_eq!(l.conclusion().unwrap(), &Statement::Single(w("(p -> p) -> (x -> 1)")));

        let mp = parse_script("system: L*\nhyp: a\nhyp: a -> b\n1. a ; HYP 1\n2. a -> b ; HYP 2\n3. b ; RULE R1 1,2\n").unwrap();
        let l = lift_lstar_proof(&mp, "p").unwrap();
        accepts(&l, &Registry::new());
        assert_eq!(l.lines.last().unwrap().just, rule_just("qMP", vec![2, 4]));

        let r3 = parse_script("system: L*\nhyp: a\n1. a ; HYP 1\n2. a^- ; RULE R3 1\n").unwrap();
        let l = lift_lstar_proof(&r3, "p").unwrap();
        accepts(&l, &Registry::new());
        let names: Vec<String> = l.lines.iter().map(|x| x.just.to_string()).collect();
        assert_eq!(names, ["HYP 1", "RULE Reg 1", "RULE R3' 2", "RULE Reg 3"]);

        let bad = parse_script("system: L*\n1. x ; AX P4\n").unwrap();
        assert!(matches!(lift_lstar_proof(&bad, "p"), Err(ProofError::SourceProofInvalid(_))));
    }

    #[test]
    fn deregularize_cases() {
        let r = reg();
        let base = |q: &str| {
            parse_script(&format!("system: sqL*\nhyp: (s -> s) -> {q}\n1. (s -> s) -> {q} ; HYP 1\n"))
                .unwrap()
        };
        let imp = deregularize_proof(&base("(a -> b)"), &r).unwrap();
        accepts(&imp, &r);
        assert_eq!(imp.lines.len(), 2);
        assert_eq!(imp.lines[1].just, rule_just("AReg1", vec![1]));
        let one = deregularize_proof(&base("1"), &r).unwrap();
        assert_eq!(one.lines[1].just, rule_just("AReg4", vec![1]));
        for q in ["~1", "~~1", "~~~1", "~~~~~1", "~(a -> b)", "~~(a -> b)", "~~~(a -> b)"] {
            let out = deregularize_proof(&base(q), &r).unwrap();
            accepts(&out, &r);
            assert_eq!(out.conclusion().unwrap(), &Statement::Single(w(q)), "{q}");
        }
        let three = deregularize_proof(&base("~~~1"), &r).unwrap();
        let tail: Vec<String> = three.lines[1..].iter().map(|x| x.just.to_string()).collect();
        assert_eq!(tail, ["LEM 8", "RULE Reg 2", "RULE qMP 1,3", "RULE AReg3 4", "RULE Inv1 5"]);
        assert!(matches!(deregularize_proof(&base("~~a"), &r), Err(ProofError::NotRegular(_))));
        assert!(matches!(
            deregularize_proof(&parse_script("system: sqL*\n1. x -> 1 ; AX Q10\n").unwrap(), &r),
            Err(ProofError::NotPrefixed(_))
        ));
    }
}
