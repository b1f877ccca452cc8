//! Terms compiled to a shared instruction list for repeated evaluation.

use std::collections::HashMap;

use crate::models::{Element, FiniteAlgebra, Model};
use crate::scalar::Scalar;
use crate::syntax::{Connective, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Var(usize),
    Const(Connective),
    Un(Connective, usize),
    Bin(Connective, usize, usize),
}

/// Several terms compiled together; identical subterms share one slot.
/// Slots are in evaluation order, so a single forward pass evaluates all.
#[derive(Clone, Debug)]
pub struct Program {
    nodes: Vec<Node>,
    roots: Vec<usize>,
    vars: Vec<String>,
    /// Slots whose value does not depend on any variable.
    ground: Vec<bool>,
}

impl Program {
    /// Compiles `terms`; variables are numbered in sorted order.
    pub fn compile(terms: &[&Term]) -> Program {
        let mut vars: Vec<String> = terms.iter().flat_map(|t| t.variables()).collect();
        vars.sort();
        vars.dedup();
        let var_index: HashMap<&str, usize> =
            vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut b = Builder { nodes: Vec::new(), memo: HashMap::new(), ground: Vec::new() };
        let roots = terms.iter().map(|t| b.add(t, &var_index)).collect();
        Program { nodes: b.nodes, roots, vars, ground: b.ground }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn root(&self, i: usize) -> usize {
        self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Evaluates every slot; `args[i]` is the value of `vars()[i]`. Slots
    /// that hold ground subterms are computed only when `out` is empty, so
    /// reusing `out` across calls with the same model skips them.
    pub fn eval<S: Scalar>(&self, m: &Model<S>, args: &[Element<S>], out: &mut Vec<Element<S>>) {
        let fresh = out.len() != self.nodes.len();
        if fresh {
            out.clear();
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if !fresh && self.ground[i] {
                continue;
            }
            let v = match *node {
                Node::Var(k) => args[k].clone(),
                Node::Const(c) => m.constant(c),
                Node::Un(c, a) => m.unary(c, &out[a]),
                Node::Bin(c, a, b) => m.binary(c, &out[a], &out[b]),
            };
            if fresh {
                out.push(v);
            } else {
                out[i] = v;
            }
        }
    }

    /// Table-driven evaluation over a finite algebra.
    pub fn eval_finite(&self, alg: &FiniteAlgebra, args: &[usize], out: &mut Vec<usize>) {
        out.clear();
        for node in &self.nodes {
            let v = match *node {
                Node::Var(k) => args[k],
                Node::Const(c) => alg.constant(c),
                Node::Un(c, a) => alg.unary(c, out[a]),
                Node::Bin(c, a, b) => alg.binary(c, out[a], out[b]),
            };
            out.push(v);
        }
    }
}

struct Builder {
    nodes: Vec<Node>,
    memo: HashMap<Node, usize>,
    ground: Vec<bool>,
}

impl Builder {
    fn push(&mut self, n: Node, ground: bool) -> usize {
        if let Some(&i) = self.memo.get(&n) {
            return i;
        }
        self.nodes.push(n);
        self.ground.push(ground);
        self.memo.insert(n, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    fn add(&mut self, t: &Term, vars: &HashMap<&str, usize>) -> usize {
        match t {
            Term::Var(v) => self.push(Node::Var(vars[v.as_str()]), false),
            Term::Const0 => self.push(Node::Const(Connective::Const0), true),
            Term::Const1 => self.push(Node::Const(Connective::Const1), true),
            Term::OPlus(a, b) | Term::Impl(a, b) => {
                let (x, y) = (self.add(a, vars), self.add(b, vars));
                let g = self.ground[x] && self.ground[y];
                self.push(Node::Bin(t.connective().unwrap(), x, y), g)
            }
            Term::UMinus(a) | Term::Neg(a) | Term::PosPart(a) | Term::NegPart(a) => {
                let x = self.add(a, vars);
                let g = self.ground[x];
                self.push(Node::Un(t.connective().unwrap(), x), g)
            }
        }
    }
}
