//! Printer with near-minimal parentheses; the output re-parses to the same tree.

use std::fmt;

use super::Term;

fn prec(t: &Term) -> u8 {
    match t {
        Term::Var(_) | Term::Const0 | Term::Const1 => 10,
        Term::PosPart(_) | Term::NegPart(_) => 9,
        Term::UMinus(_) | Term::Neg(_) => 8,
        Term::OPlus(..) => 3,
        Term::Impl(..) => 2,
    }
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, t: &Term, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({t})")
    } else {
        write!(f, "{t}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) => f.write_str(name),
            Term::Const0 => f.write_str("0"),
            Term::Const1 => f.write_str("1"),
            Term::PosPart(a) | Term::NegPart(a) => {
                write_wrapped(f, a, prec(a) < 9)?;
                f.write_str(if matches!(self, Term::PosPart(_)) { "^+" } else { "^-" })
            }
            Term::UMinus(a) | Term::Neg(a) => {
                f.write_str(if matches!(self, Term::UMinus(_)) { "-" } else { "~" })?;
                write_wrapped(f, a, prec(a) < 8)
            }
            Term::OPlus(a, b) => {
                write_wrapped(f, a, prec(a) < 3)?;
                f.write_str(" (+) ")?;
                write_wrapped(f, b, prec(b) <= 3)
            }
            Term::Impl(a, b) => {
                write_wrapped(f, a, prec(a) <= 2)?;
                f.write_str(" -> ")?;
                // Right-nested implications are parenthesised for readability.
                write_wrapped(f, b, prec(b) <= 3)
            }
        }
    }
}

/// Renders a term; `parse(&print(t), sig) == Ok(t)` for every legal `t`.
pub fn print(t: &Term) -> String {
    t.to_string()
}
