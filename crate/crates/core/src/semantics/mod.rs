//! Evaluation of terms in models, equation and entailment checking, and
//! countermodel search.

mod check;
pub mod corpus;
mod designated;
pub mod program;
mod projection;
mod strategy;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::models::{Element, Model, ModelError};
use crate::scalar::Scalar;
use crate::syntax::{SignatureError, Term};
use crate::Rational;

pub use check::{
    check_entailment, check_equation, search_countermodel, CheckReport, Verdict, Witness,
};
pub use designated::{designated_set, Designated};
pub use program::Program;
pub use projection::{project_to_disk, zero_second_coordinates};
pub use strategy::{random_element, Strategy, DEFAULT_MAX_DEN};

/// Variable name to carrier element.
pub type Valuation<S = Rational> = BTreeMap<String, Element<S>>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is not bound by the valuation")]
    UnboundVariable(String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("exhaustive checking needs a finite carrier; `{0}` is infinite")]
    Strategy(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Designated(String),
}

impl From<SignatureError> for CheckError {
    fn from(e: SignatureError) -> Self {
        CheckError::Eval(e.into())
    }
}

impl From<ModelError> for CheckError {
    fn from(e: ModelError) -> Self {
        CheckError::Eval(e.into())
    }
}

/// Homomorphic evaluation of `t` under `v`, with signature and carrier
/// checks.
pub fn evaluate<S: Scalar>(
    t: &Term,
    m: &Model<S>,
    v: &Valuation<S>,
) -> Result<Element<S>, EvalError> {
    t.check_signature(m.signature())?;
    for name in t.variables() {
        let e = v.get(&name).ok_or_else(|| EvalError::UnboundVariable(name.clone()))?;
        if !m.contains(e) {
            return Err(ModelError::Domain { element: m.show(e), model: m.name().to_string() }.into());
        }
    }
    Ok(eval_unchecked(t, m, v))
}

pub(crate) fn eval_unchecked<S: Scalar>(t: &Term, m: &Model<S>, v: &Valuation<S>) -> Element<S> {
    match t {
        Term::Var(x) => v[x].clone(),
        Term::Const0 | Term::Const1 => m.constant(t.connective().unwrap()),
        Term::OPlus(a, b) | Term::Impl(a, b) => m.binary(
            t.connective().unwrap(),
            &eval_unchecked(a, m, v),
            &eval_unchecked(b, m, v),
        ),
        Term::UMinus(a) | Term::Neg(a) | Term::PosPart(a) | Term::NegPart(a) => {
            m.unary(t.connective().unwrap(), &eval_unchecked(a, m, v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_model, Standard};
    use crate::syntax::{parse, Signature};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn sum_with_zero_in_square() {
        let m: Model = Model::standard(Standard::Square, Signature::Mv);
        let t = parse("p (+) 0", Signature::Mv).unwrap();
        let v = Valuation::from([("p".to_string(), Element::Pair(r(3, 10), r(1, 2)))]);
        assert_eq!(evaluate(&t, &m, &v).unwrap(), Element::Pair(r(3, 10), r(0, 1)));
    }

    #[test]
    fn double_negation_is_identity() {
        let t = parse("~~p", Signature::W).unwrap();
        for name in ["square@w", "chain:2@w", "flat-standard@w"] {
            let m: Model = build_model(name).unwrap();
            let x = match m.elements() {
                Some(es) => es[1].clone(),
                None => m.parse_element(if name.starts_with("square") { "<1/3,-1/5>" } else { "1/3" }).unwrap(),
            };
            let v = Valuation::from([("p".to_string(), x.clone())]);
            assert_eq!(evaluate(&t, &m, &v).unwrap(), x);
        }
    }

    #[test]
    fn self_implication_of_one() {
        let m: Model = Model::standard(Standard::Square, Signature::W);
        let t = parse("1 -> 1", Signature::W).unwrap();
        assert_eq!(evaluate(&t, &m, &Valuation::new()).unwrap(), Element::Pair(r(0, 1), r(0, 1)));
    }

    #[test]
    fn evaluation_errors() {
        let m: Model = Model::standard(Standard::Square, Signature::W);
        let t = parse("p -> q", Signature::W).unwrap();
        let v = Valuation::from([("p".to_string(), Element::Pair(r(0, 1), r(0, 1)))]);
        assert_eq!(evaluate(&t, &m, &v), Err(EvalError::UnboundVariable("q".into())));
        let mv = parse("p (+) p", Signature::Mv).unwrap();
        assert!(matches!(evaluate(&mv, &m, &v), Err(EvalError::Signature(_))));
    }
}
