//! Concrete algebras: the standard models over exact rationals, finite
//! algebras given by operation tables, congruences, quotients and products.

mod axioms;
mod catalog;
mod classify;
mod congruence;
mod finite;

use std::fmt;
use std::marker::PhantomData;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::scalar::{parse_scalar, Scalar};
use crate::syntax::{Connective, Signature, SignatureError};
use crate::Rational;

pub use axioms::{axioms, AxiomSet, Equation};
pub use catalog::{build_model, build_spec, finite_catalog, ModelSpec};
pub use classify::{classify, AxiomResult, AUDIT_GRID, ClassFlags, Classification};
pub use congruence::{
    embed_into_product, mu_congruence, quotient, regular_elements, tau_congruence, Congruence,
    Embedding, RegularElements,
};
pub use finite::{FiniteAlgebra, Tables};

/// A carrier element. Which variant is used depends on the model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element<S = Rational> {
    /// A point of a two-dimensional carrier.
    Pair(S, S),
    /// A point of `[-1, 1]`.
    Scalar(S),
    /// An index into a finite carrier.
    Fin(usize),
}

impl<S: Scalar> Element<S> {
    pub fn pair(a: S, b: S) -> Self {
        Element::Pair(a, b)
    }

    /// First coordinate (or the scalar itself); `None` for finite indices.
    pub fn first(&self) -> Option<&S> {
        match self {
            Element::Pair(a, _) | Element::Scalar(a) => Some(a),
            Element::Fin(_) => None,
        }
    }
}

impl<S: Scalar> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Pair(a, b) => write!(f, "<{a},{b}>"),
            Element::Scalar(a) => write!(f, "{a}"),
            Element::Fin(i) => write!(f, "#{i}"),
        }
    }
}

/// The infinite models given by closed-form operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Standard {
    /// `[-1,1] x [-1,1]`; binary operations drop the second coordinate.
    Square,
    /// The unit disk as a subalgebra of the square.
    Disk,
    /// `[-1,1]` with truncated addition.
    Interval,
    /// The 0-flattening of the interval: every sum and part is 0.
    Flat,
    /// `[-1,1] x [0,1]` with second coordinate `1/2` after `(+)` and parts
    /// and `b -> 1-b` under negation.
    HalfSquare,
}

impl Standard {
    pub fn is_pair(self) -> bool {
        matches!(self, Standard::Square | Standard::Disk | Standard::HalfSquare)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid model specification: {0}")]
    Spec(String),
    #[error("operation table not closed: {op} applied to {args} gives {result}, outside the carrier")]
    Closure { op: String, args: String, result: String },
    #[error("{element} is not an element of {model}")]
    Domain { element: String, model: String },
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("wrong number of arguments for `{0}`")]
    Arity(Connective),
    #[error("model `{model}` is not {class}")]
    Class { model: String, class: &'static str },
    #[error("{0}")]
    NotCompatible(String),
}

#[derive(Clone, Debug)]
pub(crate) enum Kind<S: Scalar> {
    Standard(Standard),
    Finite(Arc<FiniteAlgebra>),
    /// The other-signature reading of `base`: `x -> y = -x (+) y`, `~x = -x`
    /// when this model is implicative, `x (+) y = ~x -> y`, `-x = ~x`,
    /// `0 = 1 -> 1` when it is additive.
    Derived(Arc<Model<S>>),
}

/// An algebra together with the signature through which it is viewed.
#[derive(Clone, Debug)]
pub struct Model<S: Scalar = Rational> {
    name: String,
    sig: Signature,
    pub(crate) kind: Kind<S>,
    flags: Arc<OnceLock<ClassFlags>>,
    scalar: PhantomData<fn() -> S>,
}

impl<S: Scalar> Model<S> {
    pub fn standard(which: Standard, sig: Signature) -> Self {
        let base = match which {
            Standard::Square => "square",
            Standard::Disk => "disk",
            Standard::Interval => "interval",
            Standard::Flat => "flat-standard",
            Standard::HalfSquare => "half-square",
        };
        let name = match sig {
            Signature::Mv => base.to_string(),
            Signature::W => format!("{base}@w"),
        };
        Model::from_kind(name, sig, Kind::Standard(which))
    }

    pub fn finite(name: impl Into<String>, alg: FiniteAlgebra) -> Self {
        let sig = alg.native();
        Model::from_kind(name.into(), sig, Kind::Finite(Arc::new(alg)))
    }

    /// The reading of `base` in the other signature, with operations derived
    /// on the fly from those of `base`.
    pub fn derived(name: impl Into<String>, base: Model<S>) -> Self {
        let sig = base.sig.other();
        Model::from_kind(name.into(), sig, Kind::Derived(Arc::new(base)))
    }

    fn from_kind(name: String, sig: Signature, kind: Kind<S>) -> Self {
        Model { name, sig, kind, flags: Arc::new(OnceLock::new()), scalar: PhantomData }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn finite_algebra(&self) -> Option<&FiniteAlgebra> {
        match &self.kind {
            Kind::Finite(a) => Some(a),
            _ => None,
        }
    }

    pub fn standard_kind(&self) -> Option<Standard> {
        match &self.kind {
            Kind::Standard(s) => Some(*s),
            Kind::Derived(b) => b.standard_kind(),
            Kind::Finite(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        match &self.kind {
            Kind::Finite(_) => true,
            Kind::Standard(_) => false,
            Kind::Derived(b) => b.is_finite(),
        }
    }

    /// Number of elements for finite carriers.
    pub fn size(&self) -> Option<usize> {
        match &self.kind {
            Kind::Finite(a) => Some(a.size()),
            Kind::Standard(_) => None,
            Kind::Derived(b) => b.size(),
        }
    }

    /// All elements, for finite carriers.
    pub fn elements(&self) -> Option<Vec<Element<S>>> {
        self.size().map(|n| (0..n).map(Element::Fin).collect())
    }

    pub fn contains(&self, e: &Element<S>) -> bool {
        let unit = |x: &S| x.in_unit_interval();
        match (&self.kind, e) {
            (Kind::Standard(Standard::Square), Element::Pair(a, b)) => unit(a) && unit(b),
            (Kind::Standard(Standard::Disk), Element::Pair(a, b)) => {
                a.clone() * a.clone() + b.clone() * b.clone() <= S::one()
            }
            (Kind::Standard(Standard::HalfSquare), Element::Pair(a, b)) => {
                unit(a) && *b >= S::zero() && *b <= S::one()
            }
            (Kind::Standard(Standard::Interval | Standard::Flat), Element::Scalar(a)) => unit(a),
            (Kind::Finite(alg), Element::Fin(i)) => *i < alg.size(),
            (Kind::Derived(b), _) => b.contains(e),
            _ => false,
        }
    }

    /// Renders an element using finite labels where available.
    pub fn show(&self, e: &Element<S>) -> String {
        match (e, self.finite_root()) {
            (Element::Fin(i), Some(alg)) if *i < alg.size() => alg.label(*i).to_string(),
            _ => e.to_string(),
        }
    }

    fn finite_root(&self) -> Option<&FiniteAlgebra> {
        match &self.kind {
            Kind::Finite(a) => Some(a),
            Kind::Derived(b) => b.finite_root(),
            Kind::Standard(_) => None,
        }
    }

    /// Parses an element: `<a,b>` (or `a,b`) for pair carriers, a rational
    /// for `[-1,1]`, and a label or `#i` for finite carriers.
    pub fn parse_element(&self, text: &str) -> Result<Element<S>, ModelError> {
        let text = text.trim();
        let domain = || ModelError::Domain { element: text.to_string(), model: self.name.clone() };
        let e = if let Some(alg) = self.finite_root() {
            match text.strip_prefix('#').and_then(|i| i.parse::<usize>().ok()) {
                Some(i) => Element::Fin(i),
                None => Element::Fin(alg.index_of(text).ok_or_else(domain)?),
            }
        } else if self.standard_kind().is_some_and(Standard::is_pair) {
            let inner = text
                .strip_prefix('<')
                .and_then(|t| t.strip_suffix('>'))
                .or_else(|| text.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
                .unwrap_or(text);
            let (a, b) = inner.split_once(',').ok_or_else(domain)?;
            Element::Pair(
                parse_scalar(a).ok_or_else(domain)?,
                parse_scalar(b).ok_or_else(domain)?,
            )
        } else {
            Element::Scalar(parse_scalar(text).ok_or_else(domain)?)
        };
        if self.contains(&e) {
            Ok(e)
        } else {
            Err(domain())
        }
    }

    /// Applies a connective of the model's signature after checking that
    /// every argument lies in the carrier.
    pub fn eval_op(&self, c: Connective, args: &[Element<S>]) -> Result<Element<S>, ModelError> {
        if !self.sig.allows(c) {
            return Err(SignatureError { connective: c, signature: self.sig }.into());
        }
        if args.len() != c.arity() {
            return Err(ModelError::Arity(c));
        }
        for a in args {
            if !self.contains(a) {
                return Err(ModelError::Domain { element: self.show(a), model: self.name.clone() });
            }
        }
        Ok(match args {
            [] => self.constant(c),
            [x] => self.unary(c, x),
            [x, y] => self.binary(c, x, y),
            _ => unreachable!(),
        })
    }

    /// Value of a constant. `0` is available in both signatures (`1 -> 1` in
    /// the implicative one).
    pub fn constant(&self, c: Connective) -> Element<S> {
        match &self.kind {
            Kind::Standard(s) => standard_constant(*s, c),
            Kind::Finite(alg) => Element::Fin(alg.constant(c)),
            Kind::Derived(base) => match (self.sig, c) {
                (_, Connective::Const1) => base.constant(Connective::Const1),
                (Signature::W, _) => {
                    let one = self.constant(Connective::Const1);
                    self.binary(Connective::Impl, &one, &one)
                }
                (Signature::Mv, _) => {
                    let one = base.constant(Connective::Const1);
                    base.binary(Connective::Impl, &one, &one)
                }
            },
        }
    }

    /// Unchecked unary operation; connectives of either signature are
    /// accepted (`-` and `~` coincide).
    pub fn unary(&self, c: Connective, x: &Element<S>) -> Element<S> {
        match &self.kind {
            Kind::Standard(s) => standard_unary(*s, c, x),
            Kind::Finite(alg) => Element::Fin(alg.unary(c, fin(x))),
            Kind::Derived(base) => match c {
                Connective::UMinus | Connective::Neg => base.unary(base.sig.negation(), x),
                _ => base.unary(c, x),
            },
        }
    }

    /// Unchecked binary operation; the non-native connective is derived.
    pub fn binary(&self, c: Connective, x: &Element<S>, y: &Element<S>) -> Element<S> {
        match &self.kind {
            Kind::Standard(s) => standard_binary(*s, c, x, y),
            Kind::Finite(alg) => Element::Fin(alg.binary(c, fin(x), fin(y))),
            Kind::Derived(base) => {
                let bneg = base.sig.negation();
                match (self.sig, c) {
                    // this model is implicative, base is additive
                    (Signature::W, Connective::Impl) => {
                        base.binary(Connective::OPlus, &base.unary(bneg, x), y)
                    }
                    (Signature::W, _) => {
                        let nx = self.unary(Connective::Neg, x);
                        self.binary(Connective::Impl, &nx, y)
                    }
                    (Signature::Mv, Connective::OPlus) => {
                        base.binary(Connective::Impl, &base.unary(bneg, x), y)
                    }
                    (Signature::Mv, _) => {
                        let nx = self.unary(Connective::UMinus, x);
                        self.binary(Connective::OPlus, &nx, y)
                    }
                }
            }
        }
    }

    /// Flags known by construction for standard models, computed
    /// exhaustively (and cached) for finite ones.
    pub fn flags(&self) -> ClassFlags {
        *self.flags.get_or_init(|| match &self.kind {
            Kind::Standard(s) => {
                let (mv, flat) = match s {
                    Standard::Interval => (true, false),
                    Standard::Flat => (false, true),
                    _ => (false, false),
                };
                ClassFlags { quasi: true, strong: true, flat, mv_star: mv }
            }
            Kind::Derived(b) => b.flags(),
            Kind::Finite(_) => classify(self).flags,
        })
    }

    pub fn is_strong(&self) -> bool {
        let f = self.flags();
        f.quasi && f.strong
    }
}

fn fin<S>(e: &Element<S>) -> usize {
    match e {
        Element::Fin(i) => *i,
        _ => panic!("finite model applied to a non-index element"),
    }
}

fn standard_constant<S: Scalar>(s: Standard, c: Connective) -> Element<S> {
    let v = match (s, c) {
        (Standard::Flat, _) | (_, Connective::Const0) => S::zero(),
        _ => S::one(),
    };
    match s {
        Standard::Square | Standard::Disk => Element::Pair(v, S::zero()),
        Standard::HalfSquare => Element::Pair(v, S::half()),
        Standard::Interval | Standard::Flat => Element::Scalar(v),
    }
}

fn standard_unary<S: Scalar>(s: Standard, c: Connective, x: &Element<S>) -> Element<S> {
    let neg = matches!(c, Connective::UMinus | Connective::Neg);
    let part = |a: &S| -> S {
        match c {
            Connective::PosPart => a.clone().max(S::zero()),
            _ => a.clone().min(S::zero()),
        }
    };
    match (s, x) {
        (Standard::Square | Standard::Disk, Element::Pair(a, b)) => {
            if neg {
                Element::Pair(-a.clone(), -b.clone())
            } else {
                Element::Pair(part(a), S::zero())
            }
        }
        (Standard::HalfSquare, Element::Pair(a, b)) => {
            if neg {
                Element::Pair(-a.clone(), S::one() - b.clone())
            } else {
                Element::Pair(part(a), S::half())
            }
        }
        (Standard::Interval, Element::Scalar(a)) => {
            Element::Scalar(if neg { -a.clone() } else { part(a) })
        }
        (Standard::Flat, Element::Scalar(a)) => {
            Element::Scalar(if neg { -a.clone() } else { S::zero() })
        }
        _ => panic!("element shape does not match the model"),
    }
}

fn standard_binary<S: Scalar>(
    s: Standard,
    c: Connective,
    x: &Element<S>,
    y: &Element<S>,
) -> Element<S> {
    // x -> y is -x (+) y; in these models that is clamp(c - a).
    let combine = |a: &S, b: &S| -> S {
        match c {
            Connective::Impl => (b.clone() - a.clone()).clamp_unit(),
            _ => (a.clone() + b.clone()).clamp_unit(),
        }
    };
    match (s, x, y) {
        (Standard::Square | Standard::Disk, Element::Pair(a, _), Element::Pair(b, _)) => {
            Element::Pair(combine(a, b), S::zero())
        }
        (Standard::HalfSquare, Element::Pair(a, _), Element::Pair(b, _)) => {
            Element::Pair(combine(a, b), S::half())
        }
        (Standard::Interval, Element::Scalar(a), Element::Scalar(b)) => {
            Element::Scalar(combine(a, b))
        }
        (Standard::Flat, Element::Scalar(_), Element::Scalar(_)) => Element::Scalar(S::zero()),
        _ => panic!("element shape does not match the model"),
    }
}
