//! Designated elements: those of the form `(c -> 1) -> 1`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::strategy::{grid_points, random_element, DEFAULT_MAX_DEN};
use super::CheckError;
use crate::models::{Element, Model, Standard};
use crate::scalar::Scalar;
use crate::syntax::Connective;

/// A membership test for the designated elements of one model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Designated<S> {
    /// Pairs `<a, b>` with `a >= 0` and `b` equal to the given value.
    PairNonNegative(S),
    /// Scalars `a >= 0`.
    NonNegative,
    /// Exactly one element.
    Single(Element<S>),
    /// Finite carrier: membership by index.
    Finite(Vec<bool>),
}

impl<S: Scalar> Designated<S> {
    pub fn contains(&self, e: &Element<S>) -> bool {
        match (self, e) {
            (Designated::PairNonNegative(b0), Element::Pair(a, b)) => {
                b == b0 && *a >= S::zero()
            }
            (Designated::NonNegative, Element::Scalar(a)) => *a >= S::zero(),
            (Designated::Single(x), _) => x == e,
            (Designated::Finite(mask), Element::Fin(i)) => mask.get(*i).copied().unwrap_or(false),
            _ => false,
        }
    }

    pub fn describe(&self, m: &Model<S>) -> String {
        match self {
            Designated::PairNonNegative(b) => format!("{{<a,{b}> : 0 <= a <= 1}}"),
            Designated::NonNegative => "{a : 0 <= a <= 1}".into(),
            Designated::Single(x) => format!("{{{}}}", m.show(x)),
            Designated::Finite(mask) => {
                let items: Vec<String> = mask
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d)
                    .map(|(i, _)| m.show(&Element::Fin(i)))
                    .collect();
                format!("{{{}}}", items.join(", "))
            }
        }
    }
}

/// `(c -> 1) -> 1`.
pub(crate) fn designate<S: Scalar>(m: &Model<S>, c: &Element<S>) -> Element<S> {
    let one = m.constant(Connective::Const1);
    let inner = m.binary(Connective::Impl, c, &one);
    m.binary(Connective::Impl, &inner, &one)
}

/// The designated elements of `m`. Finite carriers are enumerated; the
/// standard models use a closed form that is checked here against sampled
/// values of `(c -> 1) -> 1` before it is returned.
pub fn designated_set<S: Scalar>(m: &Model<S>) -> Result<Designated<S>, CheckError> {
    if let Some(elems) = m.elements() {
        let mut mask = vec![false; elems.len()];
        for c in &elems {
            if let Element::Fin(i) = designate(m, c) {
                mask[i] = true;
            }
        }
        return Ok(Designated::Finite(mask));
    }
    let closed = match m.standard_kind() {
        Some(Standard::Square | Standard::Disk) => Designated::PairNonNegative(S::zero()),
        Some(Standard::HalfSquare) => Designated::PairNonNegative(S::half()),
        Some(Standard::Interval) => Designated::NonNegative,
        Some(Standard::Flat) => Designated::Single(Element::Scalar(S::zero())),
        None => unreachable!("infinite models are standard or derived from one"),
    };
    verify_closed_form(m, &closed)?;
    Ok(closed)
}

/// Every sampled `(c -> 1) -> 1` must satisfy the closed form, and a sampled
/// element must satisfy it exactly when it is a fixpoint of `c |-> (c -> 1) -> 1`
/// (the map is idempotent, so its fixpoints are its image).
fn verify_closed_form<S: Scalar>(m: &Model<S>, closed: &Designated<S>) -> Result<(), CheckError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut samples = grid_points(m, 8);
    samples.extend((0..1000).map(|_| random_element(m, &mut rng, DEFAULT_MAX_DEN)));
    for c in &samples {
        let d = designate(m, c);
        if !closed.contains(&d) {
            return Err(CheckError::Designated(format!(
                "closed form for designated elements of {} rejects (c -> 1) -> 1 = {} at c = {}",
                m.name(),
                m.show(&d),
                m.show(c)
            )));
        }
        if designate(m, &d) != d {
            return Err(CheckError::Designated(format!(
                "c |-> (c -> 1) -> 1 is not idempotent in {} at c = {}",
                m.name(),
                m.show(c)
            )));
        }
        if closed.contains(c) != (d == *c) {
            return Err(CheckError::Designated(format!(
                "closed form for designated elements of {} disagrees with sampling at {}",
                m.name(),
                m.show(c)
            )));
        }
    }
    Ok(())
}
