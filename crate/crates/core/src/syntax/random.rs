//! Seeded random term generation for sampling-based checks.

use rand::Rng;

use super::{Signature, Term};

#[derive(Clone, Debug)]
pub struct TermGen {
    pub sig: Signature,
    pub max_depth: usize,
    pub vars: Vec<String>,
    /// Whether `^+`/`^-` may appear.
    pub parts: bool,
    /// Probability of stopping early at an inner node.
    pub leaf_bias: f64,
}

impl TermGen {
    pub fn new(sig: Signature, max_depth: usize, vars: &[&str]) -> TermGen {
        TermGen {
            sig,
            max_depth,
            vars: vars.iter().map(|v| v.to_string()).collect(),
            parts: true,
            leaf_bias: 0.2,
        }
    }

    pub fn without_parts(mut self) -> TermGen {
        self.parts = false;
        self
    }

    pub fn generate<R: Rng + ?Sized>(&self, rng: &mut R) -> Term {
        self.gen_at(rng, self.max_depth)
    }

    /// Draws until `accept` holds.
    pub fn generate_where<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        accept: impl Fn(&Term) -> bool,
    ) -> Term {
        loop {
            let t = self.generate(rng);
            if accept(&t) {
                return t;
            }
        }
    }

    fn leaf<R: Rng + ?Sized>(&self, rng: &mut R) -> Term {
        let consts: &[Term] = match self.sig {
            Signature::Mv => &[Term::Const0, Term::Const1],
            Signature::W => &[Term::Const1],
        };
        if self.vars.is_empty() || rng.gen_bool(0.25) {
            consts[rng.gen_range(0..consts.len())].clone()
        } else {
            Term::Var(self.vars[rng.gen_range(0..self.vars.len())].clone())
        }
    }

    fn gen_at<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Term {
        if depth == 0 || rng.gen_bool(self.leaf_bias) {
            return self.leaf(rng);
        }
        let choices = if self.parts { 4 } else { 2 };
        match rng.gen_range(0..choices) {
            0 => {
                let a = self.gen_at(rng, depth - 1);
                let b = self.gen_at(rng, depth - 1);
                Term::binary(self.sig.binary(), a, b)
            }
            1 => Term::unary(self.sig.negation(), self.gen_at(rng, depth - 1)),
            2 => Term::pos(self.gen_at(rng, depth - 1)),
            _ => Term::neg_part(self.gen_at(rng, depth - 1)),
        }
    }
}
