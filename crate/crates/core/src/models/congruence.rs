//! Congruences of finite algebras, quotients, the regular part, and the
//! embedding `x |-> <x/mu, x/tau>` into a product.

use super::finite::Tables;
use super::{classify, FiniteAlgebra, Model, ModelError};
use crate::scalar::Scalar;
use crate::semantics::Program;
use crate::syntax::{join, Connective, Signature, Term};

/// An equivalence relation on `0..n`, stored as a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Congruence {
    /// Builds the partition of `rel`, which must be an equivalence.
    pub fn from_relation(
        n: usize,
        rel: impl Fn(usize, usize) -> bool,
    ) -> Result<Congruence, ModelError> {
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let members: Vec<usize> = (x..n).filter(|&y| rel(x, y)).collect();
            for &y in &members {
                class_of[y] = c;
            }
            classes.push(members);
        }
        let cong = Congruence { class_of, classes };
        for x in 0..n {
            for y in 0..n {
                if rel(x, y) != cong.related(x, y) {
                    return Err(ModelError::NotCompatible(format!(
                        "relation is not an equivalence (elements {x} and {y})"
                    )));
                }
            }
        }
        Ok(cong)
    }

    pub fn identity(n: usize) -> Congruence {
        Congruence { class_of: (0..n).collect(), classes: (0..n).map(|i| vec![i]).collect() }
    }

    pub fn all(n: usize) -> Congruence {
        Congruence { class_of: vec![0; n], classes: vec![(0..n).collect()] }
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn is_identity(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let n = self.class_of.len();
        Congruence::from_relation(n, |x, y| self.related(x, y) && other.related(x, y))
            .expect("meet of equivalences is an equivalence")
    }

    /// Checks that related arguments give related results for every
    /// operation.
    pub fn check_compatible(&self, alg: &FiniteAlgebra) -> Result<(), ModelError> {
        let n = alg.size();
        let err = |what: String| Err(ModelError::NotCompatible(what));
        for c in [Connective::UMinus, Connective::PosPart, Connective::NegPart] {
            for x in 0..n {
                for y in 0..n {
                    if self.related(x, y) && !self.related(alg.unary(c, x), alg.unary(c, y)) {
                        return err(format!(
                            "`{c}` separates related {} and {}",
                            alg.label(x),
                            alg.label(y)
                        ));
                    }
                }
            }
        }
        for x1 in 0..n {
            for x2 in self.classes[self.class_of[x1]].iter().copied() {
                for y1 in 0..n {
                    for y2 in self.classes[self.class_of[y1]].iter().copied() {
                        let a = alg.binary(Connective::OPlus, x1, y1);
                        let b = alg.binary(Connective::OPlus, x2, y2);
                        if !self.related(a, b) {
                            return err(format!(
                                "`(+)` separates related pairs ({}, {}) and ({}, {})",
                                alg.label(x1),
                                alg.label(y1),
                                alg.label(x2),
                                alg.label(y2)
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The additive reading of a finite model's algebra.
fn mv_algebra<S: Scalar>(m: &Model<S>) -> Result<FiniteAlgebra, ModelError> {
    let alg = m
        .finite_algebra()
        .ok_or_else(|| ModelError::Class { model: m.name().to_string(), class: "finite" })?;
    Ok(if alg.native() == Signature::Mv { alg.clone() } else { alg.converted(Signature::Mv) })
}

fn regular_mask(alg: &FiniteAlgebra) -> Vec<bool> {
    let zero = alg.constant(Connective::Const0);
    (0..alg.size()).map(|x| alg.binary(Connective::OPlus, x, zero) == x).collect()
}

/// The regular elements `{x : x (+) 0 = x}` (equivalently `0 -> x = x`),
/// with the subalgebra they form.
#[derive(Clone, Debug)]
pub struct RegularElements<S: Scalar> {
    pub elements: Vec<usize>,
    pub subalgebra: Model<S>,
    /// Whether the subalgebra satisfies the MV* (Wajsberg*) equations.
    pub forms_mv_star: bool,
}

pub fn regular_elements<S: Scalar>(m: &Model<S>) -> Result<RegularElements<S>, ModelError> {
    let alg = mv_algebra(m)?;
    let mask = regular_mask(&alg);
    let elements: Vec<usize> = (0..alg.size()).filter(|&x| mask[x]).collect();
    let mut pos = vec![usize::MAX; alg.size()];
    for (i, &x) in elements.iter().enumerate() {
        pos[x] = i;
    }
    let inside = |op: &str, args: String, r: usize| {
        if mask[r] {
            Ok(pos[r])
        } else {
            Err(ModelError::Closure { op: op.into(), args, result: alg.label(r).to_string() })
        }
    };
    let mut binary = Vec::new();
    for &x in &elements {
        for &y in &elements {
            let args = format!("{} {}", alg.label(x), alg.label(y));
            binary.push(inside("(+)", args, alg.binary(Connective::OPlus, x, y))?);
        }
    }
    let un = |c: Connective| -> Result<Vec<usize>, ModelError> {
        elements.iter().map(|&x| inside(c.symbol(), alg.label(x).into(), alg.unary(c, x))).collect()
    };
    let sub = FiniteAlgebra::from_tables(Tables {
        labels: elements.iter().map(|&x| alg.label(x).to_string()).collect(),
        sig: Signature::Mv,
        binary,
        negation: un(Connective::UMinus)?,
        pos: un(Connective::PosPart)?,
        negp: un(Connective::NegPart)?,
        one: inside("1", String::new(), alg.constant(Connective::Const1))?,
        zero: inside("0", String::new(), alg.constant(Connective::Const0))?,
    })?;
    let sub = if m.signature() == Signature::W { sub.converted(Signature::W) } else { sub };
    let subalgebra = Model::finite(format!("R({})", m.name()), sub);
    let forms_mv_star = classify(&subalgebra).flags.mv_star;
    Ok(RegularElements { elements, subalgebra, forms_mv_star })
}

/// `x mu y` iff `x <= y` and `y <= x`, where `x <= y` iff
/// `x \/ y = y (+) 0`.
pub fn mu_congruence<S: Scalar>(m: &Model<S>) -> Result<Congruence, ModelError> {
    let alg = mv_algebra(m)?;
    let n = alg.size();
    let j = join(Signature::Mv, Term::var("x"), Term::var("y"));
    let prog = Program::compile(&[&j]);
    let root = prog.root(0);
    let zero = alg.constant(Connective::Const0);
    let mut leq = vec![false; n * n];
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            prog.eval_finite(&alg, &[x, y], &mut out);
            leq[x * n + y] = out[root] == alg.binary(Connective::OPlus, y, zero);
        }
    }
    let cong = Congruence::from_relation(n, |x, y| leq[x * n + y] && leq[y * n + x])?;
    cong.check_compatible(&alg)?;
    Ok(cong)
}

/// `x tau y` iff `x = y` or both are regular.
pub fn tau_congruence<S: Scalar>(m: &Model<S>) -> Result<Congruence, ModelError> {
    let alg = mv_algebra(m)?;
    let mask = regular_mask(&alg);
    let cong = Congruence::from_relation(alg.size(), |x, y| x == y || (mask[x] && mask[y]))?;
    cong.check_compatible(&alg)?;
    Ok(cong)
}

fn class_label(alg: &FiniteAlgebra, members: &[usize]) -> String {
    match members {
        [x] => alg.label(*x).to_string(),
        _ => {
            let ls: Vec<&str> = members.iter().map(|&x| alg.label(x)).collect();
            format!("{{{}}}", ls.join(","))
        }
    }
}

/// `m / theta`, with operations on class representatives.
pub fn quotient<S: Scalar>(m: &Model<S>, theta: &Congruence) -> Result<Model<S>, ModelError> {
    let alg = mv_algebra(m)?;
    theta.check_compatible(&alg)?;
    let k = theta.num_classes();
    let rep: Vec<usize> = theta.classes().iter().map(|c| c[0]).collect();
    let cls = |x: usize| theta.class_of(x);
    let mut binary = Vec::with_capacity(k * k);
    for a in 0..k {
        for b in 0..k {
            binary.push(cls(alg.binary(Connective::OPlus, rep[a], rep[b])));
        }
    }
    let un = |c: Connective| (0..k).map(|a| cls(alg.unary(c, rep[a]))).collect();
    let q = FiniteAlgebra::from_tables(Tables {
        labels: theta.classes().iter().map(|c| class_label(&alg, c)).collect(),
        sig: Signature::Mv,
        binary,
        negation: un(Connective::UMinus),
        pos: un(Connective::PosPart),
        negp: un(Connective::NegPart),
        one: cls(alg.constant(Connective::Const1)),
        zero: cls(alg.constant(Connective::Const0)),
    })?;
    let q = if m.signature() == Signature::W { q.converted(Signature::W) } else { q };
    Ok(Model::finite(format!("{}/~", m.name()), q))
}

/// The map `x |-> <x/mu, x/tau>` into `(m/mu) x (m/tau)`, with its
/// properties checked exhaustively.
#[derive(Clone, Debug)]
pub struct Embedding<S: Scalar> {
    pub mu: Congruence,
    pub tau: Congruence,
    pub mv_part: Model<S>,
    pub flat_part: Model<S>,
    pub target: Model<S>,
    /// `map[x]` is the index of the image of `x` in `target`.
    pub map: Vec<usize>,
    pub is_homomorphism: bool,
    pub is_injective: bool,
    pub is_surjective: bool,
    pub is_isomorphism: bool,
}

pub fn embed_into_product<S: Scalar>(m: &Model<S>) -> Result<Embedding<S>, ModelError> {
    if !m.is_strong() {
        return Err(ModelError::Class {
            model: m.name().to_string(),
            class: "a strong quasi-MV* algebra",
        });
    }
    let alg = mv_algebra(m)?;
    let n = alg.size();
    let mu = mu_congruence(m)?;
    let tau = tau_congruence(m)?;
    let mv_part = quotient(m, &mu)?.with_name(format!("{}/mu", m.name()));
    let flat_part = quotient(m, &tau)?.with_name(format!("{}/tau", m.name()));
    let b = mv_algebra(&mv_part)?;
    let f = mv_algebra(&flat_part)?;
    let prod = b.product(&f)?;
    let nf = f.size();
    let map: Vec<usize> = (0..n).map(|x| mu.class_of(x) * nf + tau.class_of(x)).collect();

    let mut hom = map[alg.constant(Connective::Const0)] == prod.constant(Connective::Const0)
        && map[alg.constant(Connective::Const1)] == prod.constant(Connective::Const1);
    for x in 0..n {
        for c in [Connective::UMinus, Connective::PosPart, Connective::NegPart] {
            hom &= map[alg.unary(c, x)] == prod.unary(c, map[x]);
        }
        for y in 0..n {
            hom &= map[alg.binary(Connective::OPlus, x, y)]
                == prod.binary(Connective::OPlus, map[x], map[y]);
        }
    }
    let mut image = map.clone();
    image.sort_unstable();
    image.dedup();
    let injective = image.len() == n;
    let surjective = image.len() == prod.size();
    let target = Model::finite(format!("{} x {}", mv_part.name(), flat_part.name()), prod);
    Ok(Embedding {
        mu,
        tau,
        mv_part,
        flat_part,
        target,
        map,
        is_homomorphism: hom,
        is_injective: injective,
        is_surjective: surjective,
        is_isomorphism: hom && injective && surjective,
    })
}
