//! Strong quasi-MV* and strong quasi-Wajsberg* algebras: terms, concrete
//! models, signature translations, equation and entailment checking, and a
//! Hilbert-style proof checker for the associated logic.
//!
//! The numeric layer is generic over [`Scalar`]; [`Rational`] (64-bit
//! numerator/denominator) is the default and [`BigRational`] is available
//! when intermediate values may overflow.

pub mod models;
pub mod proofkit;
pub mod scalar;
pub mod semantics;
pub mod syntax;
pub mod transform;

pub use scalar::{parse_scalar, Scalar};
pub use syntax::{Signature, Term};

/// A model over [`Rational`].
pub type Model = models::Model<Rational>;
/// An element over [`Rational`].
pub type Element = models::Element<Rational>;
/// A valuation over [`Rational`].
pub type Valuation = semantics::Valuation<Rational>;
/// A check report over [`Rational`].
pub type CheckReport = semantics::CheckReport<Rational>;

/// Exact rationals with `i64` parts.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision rationals.
pub type BigRational = num_rational::BigRational;
