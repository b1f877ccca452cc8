//! Defined connectives: the lattice join and the strong-algebra definitions
//! of `^+` and `^-`.

use thiserror::Error;

use super::{Signature, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expansion {
    /// Replace `^+`/`^-` by their definitions from the binary connective.
    Strong,
    /// Keep `^+`/`^-` as primitive connectives.
    Primitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("strong expansion of `^+`/`^-` requested for a model that is not strong")]
pub struct ModeError;

/// `x^+` written with the binary connective only:
/// `(x -> 1) -> 1` or `1 (+) (-1 (+) x)`.
pub fn positive_part_def(sig: Signature, x: Term) -> Term {
    match sig {
        Signature::W => Term::imp(Term::imp(x, Term::Const1), Term::Const1),
        Signature::Mv => Term::oplus(Term::Const1, Term::oplus(Term::minus(Term::Const1), x)),
    }
}

/// `x^-` written with the binary connective only:
/// `(x -> ~1) -> ~1` or `-1 (+) (1 (+) x)`.
pub fn negative_part_def(sig: Signature, x: Term) -> Term {
    match sig {
        Signature::W => {
            let bot = Term::neg(Term::Const1);
            Term::imp(Term::imp(x, bot.clone()), bot)
        }
        Signature::Mv => Term::oplus(Term::minus(Term::Const1), Term::oplus(Term::Const1, x)),
    }
}

/// The join `x \/ y`, with `^+`/`^-` left primitive.
pub fn join(sig: Signature, x: Term, y: Term) -> Term {
    let pos = Term::pos;
    let negp = Term::neg_part;
    match sig {
        Signature::Mv => {
            let half = |a: Term, b: Term| {
                Term::oplus(a.clone(), pos(Term::oplus(Term::minus(a), b)))
            };
            Term::oplus(
                half(pos(x.clone()), pos(y.clone())),
                half(negp(x), negp(y)),
            )
        }
        Signature::W => {
            let left = Term::imp(
                pos(Term::imp(pos(x.clone()), pos(y.clone()))),
                negp(Term::neg(x.clone())),
            );
            let right = Term::imp(negp(Term::imp(negp(y), negp(x.clone()))), negp(x));
            Term::imp(left, right)
        }
    }
}

/// In `Strong` mode, replaces every `^+`/`^-` by its definition (innermost
/// first); in `Primitive` mode the term is returned unchanged. The surface
/// join is already expanded by the parser.
pub fn expand_abbreviations(t: &Term, sig: Signature, mode: Expansion) -> Term {
    match mode {
        Expansion::Primitive => t.clone(),
        Expansion::Strong => t.map_bottom_up(&mut |node| match node {
            Term::PosPart(a) => positive_part_def(sig, *a),
            Term::NegPart(a) => negative_part_def(sig, *a),
            other => other,
        }),
    }
}

/// As [`expand_abbreviations`], refusing `Strong` mode when the target model
/// is not strong (the definitions are only sound there).
pub fn expand_for_target(
    t: &Term,
    sig: Signature,
    mode: Expansion,
    target_is_strong: bool,
) -> Result<Term, ModeError> {
    if mode == Expansion::Strong && !target_is_strong {
        return Err(ModeError);
    }
    Ok(expand_abbreviations(t, sig, mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, Connective};

    #[test]
    fn positive_part_in_w() {
        let t = expand_abbreviations(&Term::pos(Term::var("p")), Signature::W, Expansion::Strong);
        assert_eq!(t, parse("(p -> 1) -> 1", Signature::W).unwrap());
    }

    #[test]
    fn negative_part_in_mv() {
        let t = expand_abbreviations(
            &Term::neg_part(Term::var("p")),
            Signature::Mv,
            Expansion::Strong,
        );
        assert_eq!(t, parse("-1 (+) (1 (+) p)", Signature::Mv).unwrap());
    }

    #[test]
    fn strong_expansion_removes_parts() {
        for sig in [Signature::W, Signature::Mv] {
            let j = join(sig, Term::var("p"), Term::var("q"));
            assert!(j.count_connective(Connective::PosPart) > 0);
            let e = expand_abbreviations(&j, sig, Expansion::Strong);
            assert_eq!(e.count_connective(Connective::PosPart), 0);
            assert_eq!(e.count_connective(Connective::NegPart), 0);
            assert!(e.conforms_to(sig));
            assert_eq!(expand_abbreviations(&j, sig, Expansion::Primitive), j);
        }
    }

    #[test]
    fn join_shape_in_w() {
        let j = join(Signature::W, Term::var("p"), Term::var("q"));
        let expected = parse(
            "((p^+ -> q^+)^+ -> (~p)^-) -> ((q^- -> p^-)^- -> p^-)",
            Signature::W,
        )
        .unwrap();
        assert_eq!(j, expected);
    }

    #[test]
    fn mode_error_for_non_strong_target() {
        let t = Term::pos(Term::var("p"));
        assert_eq!(
            expand_for_target(&t, Signature::Mv, Expansion::Strong, false),
            Err(ModeError)
        );
        assert!(expand_for_target(&t, Signature::Mv, Expansion::Primitive, false).is_ok());
        assert!(expand_for_target(&t, Signature::Mv, Expansion::Strong, true).is_ok());
    }
}
