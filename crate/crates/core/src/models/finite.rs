//! Finite algebras stored as full operation tables.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Element, Model, ModelError};
use crate::scalar::Scalar;
use crate::syntax::{Connective, Signature};

/// A finite algebra. The tables of the native signature are primary; the
/// other signature's operations are derived once at construction
/// (`x -> y = -x (+) y`, `x (+) y = ~x -> y`, `0 = 1 -> 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    native: Signature,
    n: usize,
    oplus: Vec<usize>,
    imp: Vec<usize>,
    neg: Vec<usize>,
    pos: Vec<usize>,
    negp: Vec<usize>,
    zero: usize,
    one: usize,
}

/// Native-signature tables used to build a [`FiniteAlgebra`].
#[derive(Clone, Debug)]
pub struct Tables {
    pub labels: Vec<String>,
    pub sig: Signature,
    /// `(+)` or `->`, row-major `n * n`.
    pub binary: Vec<usize>,
    /// `-` or `~`.
    pub negation: Vec<usize>,
    pub pos: Vec<usize>,
    pub negp: Vec<usize>,
    pub one: usize,
    /// Only read for the additive signature.
    pub zero: usize,
}

impl FiniteAlgebra {
    pub fn from_tables(t: Tables) -> Result<FiniteAlgebra, ModelError> {
        let n = t.labels.len();
        if n == 0 {
            return Err(ModelError::Spec("empty carrier".into()));
        }
        let closed = |v: &[usize], len: usize| v.len() == len && v.iter().all(|&x| x < n);
        if !closed(&t.binary, n * n)
            || !closed(&t.negation, n)
            || !closed(&t.pos, n)
            || !closed(&t.negp, n)
            || t.one >= n
            || (t.sig == Signature::Mv && t.zero >= n)
        {
            return Err(ModelError::Closure {
                op: "table".into(),
                args: "-".into(),
                result: "index out of range".into(),
            });
        }
        let mut index = HashMap::new();
        for (i, l) in t.labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(ModelError::Spec(format!("duplicate element label `{l}`")));
            }
        }
        let neg = t.negation;
        let (oplus, imp, zero) = match t.sig {
            Signature::Mv => {
                let imp = (0..n * n).map(|k| t.binary[neg[k / n] * n + k % n]).collect();
                (t.binary, imp, t.zero)
            }
            Signature::W => {
                let oplus = (0..n * n).map(|k| t.binary[neg[k / n] * n + k % n]).collect();
                let zero = t.binary[t.one * n + t.one];
                (oplus, t.binary, zero)
            }
        };
        Ok(FiniteAlgebra {
            labels: t.labels,
            index,
            native: t.sig,
            n,
            oplus,
            imp,
            neg,
            pos: t.pos,
            negp: t.negp,
            zero,
            one: t.one,
        })
    }

    /// Tabulates a standard model on `points`, failing if some operation
    /// leaves the point set.
    pub fn from_points<S: Scalar>(
        model: &Model<S>,
        points: &[Element<S>],
    ) -> Result<FiniteAlgebra, ModelError> {
        let sig = model.signature();
        let pos_of: HashMap<&Element<S>, usize> =
            points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let look = |op: Connective, args: &[&Element<S>], r: Element<S>| -> Result<usize, ModelError> {
            pos_of.get(&r).copied().ok_or_else(|| ModelError::Closure {
                op: op.to_string(),
                args: args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "),
                result: r.to_string(),
            })
        };
        let bin_c = sig.binary();
        let neg_c = sig.negation();
        let mut binary = Vec::with_capacity(points.len() * points.len());
        for x in points {
            for y in points {
                binary.push(look(bin_c, &[x, y], model.binary(bin_c, x, y))?);
            }
        }
        let un = |c: Connective| -> Result<Vec<usize>, ModelError> {
            points.iter().map(|x| look(c, &[x], model.unary(c, x))).collect()
        };
        let konst = |c: Connective| look(c, &[], model.constant(c));
        FiniteAlgebra::from_tables(Tables {
            labels: points.iter().map(|p| model.show(p)).collect(),
            sig,
            binary,
            negation: un(neg_c)?,
            pos: un(Connective::PosPart)?,
            negp: un(Connective::NegPart)?,
            one: konst(Connective::Const1)?,
            zero: konst(Connective::Const0)?,
        })
    }

    /// The same carrier read in `sig`: the tables of `sig` (derived ones if
    /// `sig` is not native) become primary and the remaining operations are
    /// derived from them afresh. This is the table-level f/g correspondence.
    pub fn converted(&self, sig: Signature) -> FiniteAlgebra {
        FiniteAlgebra::from_tables(Tables {
            labels: self.labels.clone(),
            sig,
            binary: match sig {
                Signature::Mv => self.oplus.clone(),
                Signature::W => self.imp.clone(),
            },
            negation: self.neg.clone(),
            pos: self.pos.clone(),
            negp: self.negp.clone(),
            one: self.one,
            zero: self.zero,
        })
        .expect("tables of an existing algebra are closed")
    }

    /// Native tables, for exact comparison of algebras.
    pub fn tables(&self) -> Tables {
        Tables {
            labels: self.labels.clone(),
            sig: self.native,
            binary: match self.native {
                Signature::Mv => self.oplus.clone(),
                Signature::W => self.imp.clone(),
            },
            negation: self.neg.clone(),
            pos: self.pos.clone(),
            negp: self.negp.clone(),
            one: self.one,
            zero: self.zero,
        }
    }

    /// Exact equality of the native signature's tables and labels.
    pub fn same_native_tables(&self, other: &FiniteAlgebra) -> bool {
        let (a, b) = (self.tables(), other.tables());
        a.sig == b.sig
            && a.labels == b.labels
            && a.binary == b.binary
            && a.negation == b.negation
            && a.pos == b.pos
            && a.negp == b.negp
            && a.one == b.one
            && (a.sig == Signature::W || a.zero == b.zero)
    }

    pub fn native(&self) -> Signature {
        self.native
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn constant(&self, c: Connective) -> usize {
        match c {
            Connective::Const0 => self.zero,
            _ => self.one,
        }
    }

    #[inline]
    pub fn unary(&self, c: Connective, x: usize) -> usize {
        match c {
            Connective::PosPart => self.pos[x],
            Connective::NegPart => self.negp[x],
            _ => self.neg[x],
        }
    }

    #[inline]
    pub fn binary(&self, c: Connective, x: usize, y: usize) -> usize {
        match c {
            Connective::Impl => self.imp[x * self.n + y],
            _ => self.oplus[x * self.n + y],
        }
    }

    /// Componentwise product; labels are `(a,b)` and the index of
    /// `(i, j)` is `i * other.size() + j`.
    pub fn product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra, ModelError> {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let split = |k: usize| (k / n2, k % n2);
        let join = |i: usize, j: usize| i * n2 + j;
        let mut labels = Vec::with_capacity(n);
        for i in 0..n1 {
            for j in 0..n2 {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
            }
        }
        let un = |c: Connective| -> Vec<usize> {
            (0..n)
                .map(|k| {
                    let (i, j) = split(k);
                    join(self.unary(c, i), other.unary(c, j))
                })
                .collect()
        };
        let mut binary = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let ((a, b), (c, d)) = (split(x), split(y));
                binary.push(join(
                    self.binary(Connective::OPlus, a, c),
                    other.binary(Connective::OPlus, b, d),
                ));
            }
        }
        FiniteAlgebra::from_tables(Tables {
            labels,
            sig: Signature::Mv,
            binary,
            negation: un(Connective::UMinus),
            pos: un(Connective::PosPart),
            negp: un(Connective::NegPart),
            one: join(self.one, other.one),
            zero: join(self.zero, other.zero),
        })
    }

    /// The `k`-flattening: every sum, part and constant becomes `k`;
    /// negation is kept, with `-k = k`. If `k` labels an element it must be
    /// a fixpoint of `-` among the regular elements; otherwise it is
    /// adjoined, which is only allowed when no such fixpoint exists.
    pub fn flatten(&self, k: &str) -> Result<FiniteAlgebra, ModelError> {
        let regular_fixpoints: Vec<usize> = (0..self.n)
            .filter(|&x| self.binary(Connective::OPlus, x, self.zero) == x && self.neg[x] == x)
            .collect();
        let (labels, kk) = match self.index_of(k) {
            Some(i) if regular_fixpoints.contains(&i) => (self.labels.clone(), i),
            Some(_) => {
                return Err(ModelError::Spec(format!(
                    "`{k}` is not a fixpoint of negation among the regular elements"
                )))
            }
            None if regular_fixpoints.is_empty() => {
                let mut l = self.labels.clone();
                l.push(k.to_string());
                (l, self.n)
            }
            None => {
                return Err(ModelError::Spec(format!(
                    "negation has a regular fixpoint (`{}`); flatten onto it instead of adjoining `{k}`",
                    self.labels[regular_fixpoints[0]]
                )))
            }
        };
        let n = labels.len();
        let mut negation: Vec<usize> = self.neg.clone();
        negation.resize(n, kk);
        negation[kk] = kk;
        FiniteAlgebra::from_tables(Tables {
            labels,
            sig: Signature::Mv,
            binary: vec![kk; n * n],
            negation,
            pos: vec![kk; n],
            negp: vec![kk; n],
            one: kk,
            zero: kk,
        })
    }

    /// Operation tables as text, one line per tuple.
    pub fn export(&self, name: &str) -> String {
        let mut out = String::new();
        let sig = self.native;
        let _ = writeln!(out, "# model {name} ({sig}), {} elements", self.n);
        let _ = writeln!(out, "elements: {}", self.labels.join(" "));
        let l = |i: usize| self.labels[i].as_str();
        if sig == Signature::Mv {
            let _ = writeln!(out, "0 = {}", l(self.zero));
        }
        let _ = writeln!(out, "1 = {}", l(self.one));
        let neg = sig.negation();
        for x in 0..self.n {
            let _ = writeln!(out, "{neg} {} = {}", l(x), l(self.neg[x]));
        }
        for x in 0..self.n {
            let _ = writeln!(out, "^+ {} = {}", l(x), l(self.pos[x]));
        }
        for x in 0..self.n {
            let _ = writeln!(out, "^- {} = {}", l(x), l(self.negp[x]));
        }
        let bin = sig.binary();
        for x in 0..self.n {
            for y in 0..self.n {
                let _ = writeln!(out, "{bin} {} {} = {}", l(x), l(y), l(self.binary(bin, x, y)));
            }
        }
        out
    }
}
