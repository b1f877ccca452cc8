//! Pratt parser for the ASCII formula grammar (with Unicode aliases).

use thiserror::Error;

use super::{expand::join, Signature, SignatureError, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {position}: expected {expected}, found {found}")]
pub struct SyntaxError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Minus,
    Tilde,
    Pos,
    NegPart,
    OPlus,
    Arrow,
    Join,
    Iff,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Pos => "`^+`".into(),
            Tok::NegPart => "`^-`".into(),
            Tok::OPlus => "`(+)`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Join => "`\\/`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let peek = |j: usize| chars.get(j).map(|&(_, c)| c);
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let err = |expected: &str| SyntaxError {
            position: pos,
            expected: expected.to_string(),
            found: format!("`{c}`"),
        };
        let tok = match c {
            'a'..='z' => {
                let mut j = i;
                let mut name = String::new();
                while let Some(d) = peek(j) {
                    if d.is_ascii_lowercase() || d.is_ascii_digit() || d == '_' {
                        name.push(d);
                        j += 1;
                    } else {
                        break;
                    }
                }
                i = j;
                out.push((pos, Tok::Ident(name)));
                continue;
            }
            '0' | '1' => {
                if matches!(peek(i + 1), Some(d) if d.is_ascii_digit()) {
                    return Err(err("the constant `0` or `1`"));
                }
                i += 1;
                out.push((pos, if c == '0' { Tok::Zero } else { Tok::One }));
                continue;
            }
            '(' => {
                // `(+)` may carry inner whitespace.
                let mut j = i + 1;
                while matches!(peek(j), Some(d) if d.is_whitespace()) {
                    j += 1;
                }
                if peek(j) == Some('+') {
                    j += 1;
                    while matches!(peek(j), Some(d) if d.is_whitespace()) {
                        j += 1;
                    }
                    if peek(j) == Some(')') {
                        i = j + 1;
                        out.push((pos, Tok::OPlus));
                        continue;
                    }
                    return Err(SyntaxError {
                        position: chars.get(j).map_or(text.len(), |&(p, _)| p),
                        expected: "`)` closing `(+)`".into(),
                        found: peek(j).map_or("end of input".into(), |d| format!("`{d}`")),
                    });
                }
                (1, Tok::LParen)
            }
            ')' => (1, Tok::RParen),
            '-' if peek(i + 1) == Some('>') => (2, Tok::Arrow),
            '-' | '−' => (1, Tok::Minus),
            '~' | '¬' => (1, Tok::Tilde),
            '^' => match peek(i + 1) {
                Some('+') => (2, Tok::Pos),
                Some('-') => (2, Tok::NegPart),
                _ => return Err(err("`^+` or `^-`")),
            },
            '⁺' => (1, Tok::Pos),
            '⁻' => (1, Tok::NegPart),
            '⊕' => (1, Tok::OPlus),
            '→' => (1, Tok::Arrow),
            '∨' => (1, Tok::Join),
            '↔' => (1, Tok::Iff),
            '\\' if peek(i + 1) == Some('/') => (2, Tok::Join),
            '<' if peek(i + 1) == Some('-') && peek(i + 2) == Some('>') => (3, Tok::Iff),
            _ => return Err(err("a term")),
        };
        i += tok.0;
        out.push((pos, tok.1));
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    sig: Signature,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError {
            position: self.pos(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), SyntaxError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&want.describe()))
        }
    }

    // Binding powers: `->` (2, right), `(+)` (3, left), `\/` (5, left).
    fn expr(&mut self, min_bp: u8) -> Result<Term, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            let (l, r) = match self.peek() {
                Tok::Arrow => (2, 2),
                Tok::OPlus => (3, 4),
                Tok::Join => (5, 6),
                _ => break,
            };
            if l < min_bp {
                break;
            }
            let op = self.bump();
            let rhs = self.expr(r)?;
            lhs = match op {
                Tok::Arrow => Term::imp(lhs, rhs),
                Tok::OPlus => Term::oplus(lhs, rhs),
                _ => join(self.sig, lhs, rhs),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Term, SyntaxError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(Term::minus(self.unary()?))
            }
            Tok::Tilde => {
                self.bump();
                Ok(Term::neg(self.unary()?))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.atom()?;
        loop {
            match self.peek() {
                Tok::Pos => t = Term::pos(t),
                Tok::NegPart => t = Term::neg_part(t),
                _ => return Ok(t),
            }
            self.bump();
        }
    }

    fn atom(&mut self) -> Result<Term, SyntaxError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::Zero => {
                self.bump();
                Ok(Term::Const0)
            }
            Tok::One => {
                self.bump();
                Ok(Term::Const1)
            }
            Tok::LParen => {
                self.bump();
                let t = self.expr(0)?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            _ => Err(self.error("a variable, constant, prefix operator or `(`")),
        }
    }
}

fn parse_tokens(text: &str, sig: Signature, allow_iff: bool) -> Result<(Term, Option<Term>), ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0, sig };
    let lhs = p.expr(0)?;
    let rhs = if allow_iff && *p.peek() == Tok::Iff {
        p.bump();
        Some(p.expr(0)?)
    } else {
        None
    };
    if *p.peek() != Tok::Eof {
        let expected = if allow_iff && rhs.is_none() {
            "an infix operator, `<->` or end of input"
        } else {
            "an infix operator or end of input"
        };
        return Err(p.error(expected).into());
    }
    lhs.check_signature(sig)?;
    if let Some(r) = &rhs {
        r.check_signature(sig)?;
    }
    Ok((lhs, rhs))
}

/// Parses a single term. `\/` is expanded to the signature's join term;
/// `<->` is rejected here (see [`parse_biconditional`]).
pub fn parse(text: &str, sig: Signature) -> Result<Term, ParseError> {
    parse_tokens(text, sig, false).map(|(t, _)| t)
}

/// Parses `t` or `t <-> u`; the second component is present for a biconditional.
pub fn parse_biconditional(
    text: &str,
    sig: Signature,
) -> Result<(Term, Option<Term>), ParseError> {
    parse_tokens(text, sig, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{Connective, Signature::*};

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn tilde_is_not_additive() {
        let e = parse("p (+) ~q", Mv).unwrap_err();
        assert_eq!(
            e,
            ParseError::Signature(SignatureError { connective: Connective::Neg, signature: Mv })
        );
    }

    #[test]
    fn double_implication_tree() {
        let t = parse("(p -> 1) -> 1", W).unwrap();
        assert_eq!(t, Term::imp(Term::imp(v("p"), Term::Const1), Term::Const1));
    }

    #[test]
    fn minus_of_sum() {
        let t = parse("-(p (+) q)", Mv).unwrap();
        assert_eq!(t, Term::minus(Term::oplus(v("p"), v("q"))));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("p -> q -> r", W).unwrap(),
            Term::imp(v("p"), Term::imp(v("q"), v("r")))
        );
        assert_eq!(
            parse("p (+) q (+) r", Mv).unwrap(),
            Term::oplus(Term::oplus(v("p"), v("q")), v("r"))
        );
        assert_eq!(parse("-p^+", Mv).unwrap(), Term::minus(Term::pos(v("p"))));
        assert_eq!(parse("~p^-^+", W).unwrap(), Term::neg(Term::pos(Term::neg_part(v("p")))));
        assert_eq!(parse("~~p -> q", W).unwrap(), Term::imp(Term::neg(Term::neg(v("p"))), v("q")));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("¬p → 1", W).unwrap(), parse("~p -> 1", W).unwrap());
        assert_eq!(parse("−x ⊕ y⁺", Mv).unwrap(), parse("-x (+) y^+", Mv).unwrap());
        assert!(parse("( + )", Mv).unwrap_err().to_string().contains("syntax error"));
        assert_eq!(parse("x ( + ) y", Mv).unwrap(), parse("x (+) y", Mv).unwrap());
    }

    #[test]
    fn syntax_error_positions() {
        let e = parse("p -> ", W).unwrap_err();
        match e {
            ParseError::Syntax(s) => {
                assert_eq!(s.position, 5);
                assert_eq!(s.found, "end of input");
            }
            other => panic!("{other:?}"),
        }
        assert!(parse("(p -> q", W).is_err());
        assert!(parse("P", W).is_err());
        assert!(parse("p q", W).is_err());
        assert!(parse("2", Mv).is_err());
        assert!(parse("10", Mv).is_err());
        assert!(parse("0", W).is_err());
    }

    #[test]
    fn biconditional_only_on_request() {
        assert!(parse("p <-> q", W).is_err());
        let (l, r) = parse_biconditional("p <-> q -> q", W).unwrap();
        assert_eq!(l, v("p"));
        assert_eq!(r, Some(Term::imp(v("q"), v("q"))));
        assert!(parse_biconditional("p <-> q <-> r", W).is_err());
        assert_eq!(parse_biconditional("p", W).unwrap().1, None);
    }

    #[test]
    fn join_sugar_expands() {
        let t = parse("p \\/ q", W).unwrap();
        assert_eq!(t, join(W, v("p"), v("q")));
        assert_eq!(parse("p ∨ q", Mv).unwrap(), join(Mv, v("p"), v("q")));
    }
}
