//! Translations between the additive and implicative signatures, for terms
//! and for models.
//!
//! Additive to implicative: `x (+) y := ~x -> y`, `-x := ~x`, `0 := 1 -> 1`.
//! Implicative to additive: `x -> y := -x (+) y`, `~x := -x`.
//! Parts and `1` are shared. No simplification is performed.

use thiserror::Error;

use crate::models::{Model, ModelError};
use crate::scalar::Scalar;
use crate::syntax::{Signature, SignatureError, Term};

#[derive(Debug, Error)]
pub enum TransformError {
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("model `{model}` uses the {found} signature, expected {expected}")]
    WrongSignature { model: String, expected: Signature, found: Signature },
    #[error(transparent)]
    Class(#[from] ModelError),
}

/// Rewrites an additive term into the implicative signature.
pub fn mv_to_w_term(t: &Term) -> Result<Term, SignatureError> {
    t.check_signature(Signature::Mv)?;
    Ok(t.map_bottom_up(&mut |n| match n {
        Term::OPlus(a, b) => Term::imp(Term::neg(*a), *b),
        Term::UMinus(a) => Term::neg(*a),
        Term::Const0 => Term::self_impl(Term::Const1),
        other => other,
    }))
}

/// Rewrites an implicative term into the additive signature.
pub fn w_to_mv_term(t: &Term) -> Result<Term, SignatureError> {
    t.check_signature(Signature::W)?;
    Ok(t.map_bottom_up(&mut |n| match n {
        Term::Impl(a, b) => Term::oplus(Term::minus(*a), *b),
        Term::Neg(a) => Term::minus(*a),
        other => other,
    }))
}

/// Translates `t` into `target`; terms already in `target` are returned
/// unchanged.
pub fn translate_term(t: &Term, target: Signature) -> Result<Term, SignatureError> {
    if t.conforms_to(target) {
        return Ok(t.clone());
    }
    match target {
        Signature::W => mv_to_w_term(t),
        Signature::Mv => w_to_mv_term(t),
    }
}

fn require<S: Scalar>(m: &Model<S>, sig: Signature) -> Result<(), TransformError> {
    if m.signature() != sig {
        return Err(TransformError::WrongSignature {
            model: m.name().to_string(),
            expected: sig,
            found: m.signature(),
        });
    }
    if !m.is_strong() {
        let class = match sig {
            Signature::Mv => "a strong quasi-MV* algebra",
            Signature::W => "a strong quasi-Wajsberg* algebra",
        };
        return Err(ModelError::Class { model: m.name().to_string(), class }.into());
    }
    Ok(())
}

fn convert<S: Scalar>(m: &Model<S>, name: String, target: Signature) -> Model<S> {
    match m.finite_algebra() {
        Some(alg) if alg.native() == m.signature() => {
            Model::finite(name, alg.converted(target))
        }
        _ => Model::derived(name, m.clone()),
    }
}

/// The implicative reading `f(m)` of a strong quasi-MV* algebra. Finite
/// models get tables computed from the additive ones.
pub fn mv_to_w_model<S: Scalar>(m: &Model<S>) -> Result<Model<S>, TransformError> {
    require(m, Signature::Mv)?;
    Ok(convert(m, format!("f({})", m.name()), Signature::W))
}

/// The additive reading `g(m)` of a strong quasi-Wajsberg* algebra.
pub fn w_to_mv_model<S: Scalar>(m: &Model<S>) -> Result<Model<S>, TransformError> {
    require(m, Signature::W)?;
    Ok(convert(m, format!("g({})", m.name()), Signature::Mv))
}

/// Dispatches on `target`.
pub fn translate_model<S: Scalar>(
    m: &Model<S>,
    target: Signature,
) -> Result<Model<S>, TransformError> {
    match target {
        Signature::W => mv_to_w_model(m),
        Signature::Mv => w_to_mv_model(m),
    }
}
