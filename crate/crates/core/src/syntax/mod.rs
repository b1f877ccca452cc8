//! Terms over the two signatures, their concrete syntax, abbreviation
//! expansion and one-sided schema matching.
//!
//! A single [`Term`] type serves both the additive signature
//! (`⊕, −, ^+, ^-, 0, 1`) and the implicative one (`→, ¬, ^+, ^-, 1`);
//! whether a term is legal for a signature is a checked predicate.

mod expand;
mod parse;
mod print;
pub use print::print;
pub mod random;
mod schema;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use expand::{
    expand_abbreviations, expand_for_target, join, negative_part_def, positive_part_def,
    Expansion, ModeError,
};
pub use parse::{parse, parse_biconditional, ParseError, SyntaxError};
pub use schema::{
    instantiate, match_into, match_schema, substitute, Assignment, Schema, SubstitutionError,
};

/// Which connective set a term is meant for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Signature {
    /// `⊕, −, ^+, ^-, 0, 1`
    #[serde(rename = "mv")]
    Mv,
    /// `→, ¬, ^+, ^-, 1`
    #[serde(rename = "w")]
    W,
}

impl Signature {
    pub fn allows(self, c: Connective) -> bool {
        use Connective::*;
        match self {
            Signature::Mv => !matches!(c, Impl | Neg),
            Signature::W => !matches!(c, OPlus | UMinus | Const0),
        }
    }

    /// The binary connective of the signature.
    pub fn binary(self) -> Connective {
        match self {
            Signature::Mv => Connective::OPlus,
            Signature::W => Connective::Impl,
        }
    }

    /// The involutive negation of the signature.
    pub fn negation(self) -> Connective {
        match self {
            Signature::Mv => Connective::UMinus,
            Signature::W => Connective::Neg,
        }
    }

    pub fn other(self) -> Signature {
        match self {
            Signature::Mv => Signature::W,
            Signature::W => Signature::Mv,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Signature::Mv => "mv",
            Signature::W => "w",
        })
    }
}

impl std::str::FromStr for Signature {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mv" | "MV" | "mv*" => Ok(Signature::Mv),
            "w" | "W" | "w*" => Ok(Signature::W),
            other => Err(format!("unknown signature `{other}` (expected `mv` or `w`)")),
        }
    }
}

/// Operation symbols, excluding variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connective {
    OPlus,
    UMinus,
    Impl,
    Neg,
    PosPart,
    NegPart,
    Const0,
    Const1,
}

impl Connective {
    pub fn arity(self) -> usize {
        use Connective::*;
        match self {
            OPlus | Impl => 2,
            UMinus | Neg | PosPart | NegPart => 1,
            Const0 | Const1 => 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        use Connective::*;
        match self {
            OPlus => "(+)",
            UMinus => "-",
            Impl => "->",
            Neg => "~",
            PosPart => "^+",
            NegPart => "^-",
            Const0 => "0",
            Const1 => "1",
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Connective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Connective::*;
        Ok(match s {
            "(+)" | "+" | "oplus" | "⊕" => OPlus,
            "-" | "minus" | "−" => UMinus,
            "->" | "impl" | "→" => Impl,
            "~" | "neg" | "¬" => Neg,
            "^+" | "pos" => PosPart,
            "^-" | "negpart" => NegPart,
            "0" | "zero" => Const0,
            "1" | "one" => Const1,
            other => return Err(format!("unknown connective `{other}`")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("connective `{connective}` is not part of the {signature} signature")]
pub struct SignatureError {
    pub connective: Connective,
    pub signature: Signature,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const0,
    Const1,
    OPlus(Box<Term>, Box<Term>),
    UMinus(Box<Term>),
    Impl(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    PosPart(Box<Term>),
    NegPart(Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn oplus(a: Term, b: Term) -> Term {
        Term::OPlus(Box::new(a), Box::new(b))
    }

    pub fn minus(a: Term) -> Term {
        Term::UMinus(Box::new(a))
    }

    pub fn imp(a: Term, b: Term) -> Term {
        Term::Impl(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    pub fn pos(a: Term) -> Term {
        Term::PosPart(Box::new(a))
    }

    pub fn neg_part(a: Term) -> Term {
        Term::NegPart(Box::new(a))
    }

    /// `r → r`, the prefix used by the regularisation rules.
    pub fn self_impl(r: Term) -> Term {
        Term::imp(r.clone(), r)
    }

    /// Applies the signature's negation `n` times.
    pub fn negate_n(sig: Signature, n: usize, mut t: Term) -> Term {
        for _ in 0..n {
            t = match sig {
                Signature::Mv => Term::minus(t),
                Signature::W => Term::neg(t),
            };
        }
        t
    }

    pub fn unary(c: Connective, a: Term) -> Term {
        match c {
            Connective::UMinus => Term::minus(a),
            Connective::Neg => Term::neg(a),
            Connective::PosPart => Term::pos(a),
            Connective::NegPart => Term::neg_part(a),
            other => panic!("`{other}` is not unary"),
        }
    }

    pub fn binary(c: Connective, a: Term, b: Term) -> Term {
        match c {
            Connective::OPlus => Term::oplus(a, b),
            Connective::Impl => Term::imp(a, b),
            other => panic!("`{other}` is not binary"),
        }
    }

    /// The head connective, or `None` for a variable.
    pub fn connective(&self) -> Option<Connective> {
        Some(match self {
            Term::Var(_) => return None,
            Term::Const0 => Connective::Const0,
            Term::Const1 => Connective::Const1,
            Term::OPlus(..) => Connective::OPlus,
            Term::UMinus(_) => Connective::UMinus,
            Term::Impl(..) => Connective::Impl,
            Term::Neg(_) => Connective::Neg,
            Term::PosPart(_) => Connective::PosPart,
            Term::NegPart(_) => Connective::NegPart,
        })
    }

    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Var(_) | Term::Const0 | Term::Const1 => vec![],
            Term::UMinus(a) | Term::Neg(a) | Term::PosPart(a) | Term::NegPart(a) => vec![a],
            Term::OPlus(a, b) | Term::Impl(a, b) => vec![a, b],
        }
    }

    /// Rebuilds this node with new children (same head).
    fn with_children(&self, mut kids: Vec<Term>) -> Term {
        match self {
            Term::Var(_) | Term::Const0 | Term::Const1 => self.clone(),
            Term::UMinus(_) => Term::minus(kids.remove(0)),
            Term::Neg(_) => Term::neg(kids.remove(0)),
            Term::PosPart(_) => Term::pos(kids.remove(0)),
            Term::NegPart(_) => Term::neg_part(kids.remove(0)),
            Term::OPlus(..) => {
                let b = kids.pop().unwrap();
                Term::oplus(kids.pop().unwrap(), b)
            }
            Term::Impl(..) => {
                let b = kids.pop().unwrap();
                Term::imp(kids.pop().unwrap(), b)
            }
        }
    }

    /// Bottom-up rewrite: `f` sees every node after its children were rewritten.
    pub fn map_bottom_up(&self, f: &mut impl FnMut(Term) -> Term) -> Term {
        let kids: Vec<Term> = self.children().into_iter().map(|c| c.map_bottom_up(f)).collect();
        f(self.with_children(kids))
    }

    pub fn check_signature(&self, sig: Signature) -> Result<(), SignatureError> {
        if let Some(c) = self.connective() {
            if !sig.allows(c) {
                return Err(SignatureError { connective: c, signature: sig });
            }
        }
        self.children().into_iter().try_for_each(|c| c.check_signature(sig))
    }

    pub fn conforms_to(&self, sig: Signature) -> bool {
        self.check_signature(sig).is_ok()
    }

    /// Free variables in sorted order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            _ => self.children().into_iter().for_each(|c| c.collect_vars(out)),
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Term::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        self.children().into_iter().map(Term::depth).max().map_or(0, |d| d + 1)
    }

    /// Number of occurrences of `c`.
    pub fn count_connective(&self, c: Connective) -> usize {
        let here = usize::from(self.connective() == Some(c));
        here + self.children().into_iter().map(|t| t.count_connective(c)).sum::<usize>()
    }

    /// Strips leading negations (`¬` or `−`), returning the count and the core.
    pub fn strip_negations(&self) -> (usize, &Term) {
        let mut n = 0;
        let mut t = self;
        while let Term::Neg(a) | Term::UMinus(a) = t {
            n += 1;
            t = a;
        }
        (n, t)
    }

    /// A term is regular unless it is a variable under zero or more negations.
    pub fn is_regular(&self) -> bool {
        !matches!(self.strip_negations().1, Term::Var(_))
    }

    /// True if some operation in the term ignores the second coordinate of
    /// pair-valued standard models (`⊕`, `→`, `^+`, `^-`).
    pub fn has_collapsing_op(&self) -> bool {
        matches!(self, Term::OPlus(..) | Term::Impl(..) | Term::PosPart(_) | Term::NegPart(_))
            || self.children().into_iter().any(Term::has_collapsing_op)
    }

    pub fn subterm_at(&self, path: &[usize]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children().get(i).and_then(|c| c.subterm_at(rest)),
        }
    }

    /// Replaces the subterm at `path`; `None` if the path leaves the term.
    pub fn replace_at(&self, path: &[usize], new: Term) -> Option<Term> {
        match path.split_first() {
            None => Some(new),
            Some((&i, rest)) => {
                let kids = self.children();
                if i >= kids.len() {
                    return None;
                }
                let mut owned: Vec<Term> = kids.into_iter().cloned().collect();
                owned[i] = owned[i].replace_at(rest, new)?;
                Some(self.with_children(owned))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Term {
        Term::var("p")
    }

    #[test]
    fn regularity_examples() {
        assert!(!Term::neg(Term::neg(p())).is_regular());
        assert!(Term::imp(p(), Term::var("q")).is_regular());
        assert!(Term::Const1.is_regular());
        assert!(!Term::minus(p()).is_regular());
        assert!(Term::pos(p()).is_regular());
        assert!(Term::Const0.is_regular());
    }

    #[test]
    fn connective_counts() {
        let t = Term::oplus(p(), Term::oplus(Term::var("q"), Term::var("r")));
        assert_eq!(t.count_connective(Connective::OPlus), 2);
        assert_eq!(Term::minus(Term::minus(p())).count_connective(Connective::UMinus), 2);
        assert_eq!(Term::Const1.count_connective(Connective::OPlus), 0);
    }

    #[test]
    fn signature_legality() {
        let mixed = Term::oplus(p(), Term::neg(p()));
        assert_eq!(
            mixed.check_signature(Signature::Mv),
            Err(SignatureError { connective: Connective::Neg, signature: Signature::Mv })
        );
        assert!(Term::imp(Term::pos(p()), Term::Const1).conforms_to(Signature::W));
        assert!(!Term::Const0.conforms_to(Signature::W));
    }

    #[test]
    fn paths_address_children() {
        let t = Term::imp(Term::neg(p()), Term::Const1);
        assert_eq!(t.subterm_at(&[0, 0]), Some(&p()));
        assert_eq!(t.subterm_at(&[1, 0]), None);
        let r = t.replace_at(&[0, 0], Term::Const1).unwrap();
        assert_eq!(r, Term::imp(Term::neg(Term::Const1), Term::Const1));
    }
}
