//! Moving countermodels from the square to the disk.

use super::{eval_unchecked, Valuation};
use crate::models::{Element, Model, Standard};
use crate::scalar::Scalar;
use crate::syntax::{Signature, Term};

/// Replaces every `<a, b>` by `<a, 0>`.
pub fn zero_second_coordinates<S: Scalar>(v: &Valuation<S>) -> Valuation<S> {
    v.iter()
        .map(|(k, e)| {
            let e = match e {
                Element::Pair(a, _) => Element::Pair(a.clone(), S::zero()),
                other => other.clone(),
            };
            (k.clone(), e)
        })
        .collect()
}

/// Turns a square valuation separating `t` and `s` into a disk valuation
/// separating them, or `None` if `v` does not separate them in the square.
///
/// A regular term's value is `<z, 0>` with `z` depending only on first
/// coordinates, so when both sides are regular zeroing the second
/// coordinates suffices. When a side is `-^n x`, `x` is sent to `<0, 1/2>`
/// (the other variables zeroed), which makes that side's second coordinate
/// non-zero while a regular side keeps 0, and two distinct negated
/// variables (or opposite parities of one) also differ there.
pub fn project_to_disk<S: Scalar>(t: &Term, s: &Term, v: &Valuation<S>) -> Option<Valuation<S>> {
    let square: Model<S> = Model::standard(Standard::Square, Signature::Mv);
    let disk: Model<S> = Model::standard(Standard::Disk, Signature::Mv);
    if eval_unchecked(t, &square, v) == eval_unchecked(s, &square, v) {
        return None;
    }
    let mut out = zero_second_coordinates(v);
    let separated = |cand: &Valuation<S>| {
        cand.values().all(|e| disk.contains(e))
            && eval_unchecked(t, &disk, cand) != eval_unchecked(s, &disk, cand)
    };
    if separated(&out) {
        return Some(out);
    }
    let (_, core_t) = t.strip_negations();
    let (_, core_s) = s.strip_negations();
    let pick = match (core_t, core_s) {
        (Term::Var(x), _) => x.clone(),
        (_, Term::Var(y)) => y.clone(),
        _ => return None,
    };
    for (k, e) in out.iter_mut() {
        *e = if *k == pick {
            Element::Pair(S::zero(), S::half())
        } else {
            Element::Pair(S::zero(), S::zero())
        };
    }
    separated(&out).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use crate::Rational;

    fn mv(s: &str) -> Term {
        parse(s, Signature::Mv).unwrap()
    }

    /// `(variable, first, second)` with coordinates as `(num, den)`.
    type Entry<'a> = (&'a str, (i64, i64), (i64, i64));

    fn val(pairs: &[Entry]) -> Valuation {
        pairs
            .iter()
            .map(|(k, a, b)| {
                (k.to_string(), Element::Pair(Rational::new(a.0, a.1), Rational::new(b.0, b.1)))
            })
            .collect()
    }

    #[test]
    fn regular_sides_project_by_zeroing() {
        let v = val(&[("x", (1, 2), (1, 1))]);
        let p = project_to_disk(&mv("x (+) x"), &mv("x (+) 0"), &v).unwrap();
        assert_eq!(p, val(&[("x", (1, 2), (0, 1))]));
    }

    #[test]
    fn non_regular_side_uses_half() {
        // x (+) 0 = x fails at <1, 1>, which is outside the disk
        let v = val(&[("x", (1, 1), (1, 1))]);
        let p = project_to_disk(&mv("x (+) 0"), &mv("x"), &v).unwrap();
        assert_eq!(p, val(&[("x", (0, 1), (1, 2))]));
        let v2 = val(&[("x", (1, 1), (1, 1)), ("y", (1, 1), (-1, 1))]);
        assert!(project_to_disk(&mv("-x"), &mv("y"), &v2).is_some());
        assert_eq!(project_to_disk(&mv("x"), &mv("--x"), &v2), None);
    }
}
