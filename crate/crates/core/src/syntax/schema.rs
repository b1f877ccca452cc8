//! One-sided matching of schemas (terms whose variables act as metavariables).

use std::collections::BTreeMap;

use thiserror::Error;

use super::{Signature, SignatureError, Term};

/// Metavariable name to ground term.
pub type Assignment = BTreeMap<String, Term>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Schema {
    pattern: Term,
    metavars: Vec<String>,
}

impl Schema {
    pub fn new(pattern: Term) -> Schema {
        let metavars = pattern.variables().into_iter().collect();
        Schema { pattern, metavars }
    }

    pub fn pattern(&self) -> &Term {
        &self.pattern
    }

    /// Distinct metavariables in sorted order.
    pub fn metavars(&self) -> &[String] {
        &self.metavars
    }

    pub fn arity(&self) -> usize {
        self.metavars.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SubstitutionError {
    #[error("metavariable `{0}` has no binding")]
    MissingBinding(String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// Extends `sigma` so that `sigma(pattern) = ground`. On failure `sigma` may
/// hold partial bindings; callers that backtrack should match on a copy.
pub fn match_into(pattern: &Term, ground: &Term, sigma: &mut Assignment) -> bool {
    match (pattern, ground) {
        (Term::Var(m), _) => match sigma.get(m) {
            Some(bound) => bound == ground,
            None => {
                sigma.insert(m.clone(), ground.clone());
                true
            }
        },
        (Term::Const0, Term::Const0) | (Term::Const1, Term::Const1) => true,
        (Term::OPlus(a, b), Term::OPlus(c, d)) | (Term::Impl(a, b), Term::Impl(c, d)) => {
            match_into(a, c, sigma) && match_into(b, d, sigma)
        }
        (Term::UMinus(a), Term::UMinus(c))
        | (Term::Neg(a), Term::Neg(c))
        | (Term::PosPart(a), Term::PosPart(c))
        | (Term::NegPart(a), Term::NegPart(c)) => match_into(a, c, sigma),
        _ => false,
    }
}

/// The unique assignment with `sigma(s) = ground`, if any.
pub fn match_schema(s: &Schema, ground: &Term) -> Option<Assignment> {
    let mut sigma = Assignment::new();
    match_into(&s.pattern, ground, &mut sigma).then_some(sigma)
}

/// Homomorphic replacement of every variable of `pattern` by its binding.
pub fn instantiate(pattern: &Term, sigma: &Assignment) -> Result<Term, SubstitutionError> {
    Ok(match pattern {
        Term::Var(m) => sigma
            .get(m)
            .cloned()
            .ok_or_else(|| SubstitutionError::MissingBinding(m.clone()))?,
        Term::Const0 => Term::Const0,
        Term::Const1 => Term::Const1,
        Term::OPlus(a, b) => Term::oplus(instantiate(a, sigma)?, instantiate(b, sigma)?),
        Term::Impl(a, b) => Term::imp(instantiate(a, sigma)?, instantiate(b, sigma)?),
        Term::UMinus(a) => Term::minus(instantiate(a, sigma)?),
        Term::Neg(a) => Term::neg(instantiate(a, sigma)?),
        Term::PosPart(a) => Term::pos(instantiate(a, sigma)?),
        Term::NegPart(a) => Term::neg_part(instantiate(a, sigma)?),
    })
}

/// Instantiates `s` and checks the result against `sig`.
pub fn substitute(
    s: &Schema,
    sigma: &Assignment,
    sig: Signature,
) -> Result<Term, SubstitutionError> {
    let t = instantiate(&s.pattern, sigma)?;
    t.check_signature(sig)?;
    Ok(t)
}
