mod common;

use common::{entails, holds, model};
use sqmv_core::models::finite_catalog;
use sqmv_core::semantics::corpus::{entailment_corpus, equation_corpus};
use sqmv_core::semantics::{check_equation, project_to_disk, Strategy, Verdict, Witness};
use sqmv_core::syntax::{Signature, Term};
use sqmv_core::transform::mv_to_w_term;

#[test]
fn square_verdicts_match_labels_and_disk() {
    let (square, disk) = (model("square"), model("disk"));
    for c in equation_corpus() {
        let e = &c.equation;
        let s = holds(&e.lhs, &e.rhs, &square, 2000, 3);
        assert_eq!(s, c.valid, "{e}");
        assert_eq!(holds(&e.lhs, &e.rhs, &disk, 2000, 3), s, "{e}");
    }
}

#[test]
fn square_countermodels_project_to_disk() {
    let square = model("square");
    for c in equation_corpus().into_iter().filter(|c| !c.valid) {
        let e = &c.equation;
        let r = check_equation(&e.lhs, &e.rhs, &square, &Strategy::Grid(None)).unwrap();
        let Some(Witness::Equation { valuation, .. }) = r.witness else {
            panic!("{e}: grid finds no countermodel")
        };
        assert!(project_to_disk(&e.lhs, &e.rhs, &valuation).is_some(), "{e}");
    }
}

#[test]
fn flat_standard_agrees_with_finite_flat_models() {
    let flat = model("flat-standard");
    let finite: Vec<_> = finite_catalog()
        .into_iter()
        .map(model)
        .filter(|m| m.flags().flat)
        .collect();
    assert!(finite.len() >= 3);
    for c in equation_corpus() {
        let e = &c.equation;
        let v = holds(&e.lhs, &e.rhs, &flat, 1000, 5);
        for m in &finite {
            assert_eq!(holds(&e.lhs, &e.rhs, m, 0, 0), v, "{e} on {}", m.name());
        }
    }
}

#[test]
fn entailment_labels_and_transfer() {
    let sw = model("square@w");
    let wajsberg: Vec<_> = ["interval@w", "chain:1@w", "chain:2@w", "chain:3@w"].map(model).into();
    let strong: Vec<_> = finite_catalog()
        .into_iter()
        .map(|n| format!("{n}@w"))
        .chain(["square@w".into(), "disk@w".into()])
        .map(|n| model(&n))
        .collect();
    for c in entailment_corpus() {
        assert_eq!(entails(&c.premises, &c.conclusion, &sw, 2000, 9), c.valid, "{}", c.name);
        let fresh = Term::var("p0");
        let prefixed = Term::imp(Term::self_impl(fresh), c.conclusion.clone());
        let plain = wajsberg.iter().all(|m| entails(&c.premises, &c.conclusion, m, 1000, 9));
        let lifted = strong.iter().all(|m| entails(&c.premises, &prefixed, m, 1000, 9));
        assert_eq!(plain, lifted, "{}", c.name);
    }
}

#[test]
fn corpus_translates_to_w() {
    let sw = model("square@w");
    for c in equation_corpus() {
        let e = &c.equation;
        let (l, r) = (mv_to_w_term(&e.lhs).unwrap(), mv_to_w_term(&e.rhs).unwrap());
        assert!(l.conforms_to(Signature::W));
        assert_eq!(
            check_equation(&l, &r, &sw, &Strategy::Grid(Some(4))).unwrap().verdict == Verdict::Countermodel,
            !c.valid,
            "{e}"
        );
    }
}
