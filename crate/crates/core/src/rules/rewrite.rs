//! Directed rule application on association-normalized terms, and the
//! normal form of diagrams denoting the empty span.

use serde::Serialize;

use super::RewriteRule;
use crate::diagram::{tensor_power, Diagram, Generator, Node};
use crate::error::{Error, Result};
use crate::semantics::eval_affine_span;

/// A term with `;` and `*` chains flattened to n-ary nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Term {
    Atom(Diagram),
    Seq(Vec<Term>),
    Tensor(Vec<Term>),
}

impl Term {
    fn of(d: &Diagram) -> Term {
        match d.node() {
            Node::Seq(..) => {
                let mut parts = Vec::new();
                collect(d, true, &mut parts);
                Term::Seq(parts)
            }
            Node::Tensor(..) => {
                let mut parts = Vec::new();
                collect(d, false, &mut parts);
                Term::Tensor(parts)
            }
            _ => Term::Atom(d.clone()),
        }
    }

    fn build(&self) -> Result<Diagram> {
        match self {
            Term::Atom(d) => Ok(d.clone()),
            Term::Seq(parts) => {
                let parts = parts.iter().map(Term::build).collect::<Result<Vec<_>>>()?;
                let n = parts[0].dom();
                Diagram::seq_all(n, parts)
            }
            Term::Tensor(parts) => Ok(Diagram::tensor_all(parts.iter().map(Term::build).collect::<Result<Vec<_>>>()?)),
        }
    }

    fn children(&self) -> Option<&Vec<Term>> {
        match self {
            Term::Atom(_) => None,
            Term::Seq(c) | Term::Tensor(c) => Some(c),
        }
    }

    fn children_mut(&mut self) -> Option<&mut Vec<Term>> {
        match self {
            Term::Atom(_) => None,
            Term::Seq(c) | Term::Tensor(c) => Some(c),
        }
    }

    fn same_kind(&self, other: &Term) -> bool {
        matches!((self, other), (Term::Seq(_), Term::Seq(_)) | (Term::Tensor(_), Term::Tensor(_)))
    }

    /// The elements a window match compares: a chain's children, or the
    /// term itself.
    fn window_parts(&self) -> &[Term] {
        match self {
            Term::Atom(_) => std::slice::from_ref(self),
            Term::Seq(c) | Term::Tensor(c) => c,
        }
    }
}

fn collect(d: &Diagram, seq: bool, out: &mut Vec<Term>) {
    match (d.node(), seq) {
        (Node::Seq(a, b), true) | (Node::Tensor(a, b), false) => {
            collect(a, seq, out);
            collect(b, seq, out);
        }
        _ => out.push(Term::of(d)),
    }
}

/// Where a rule applies: a path of child indices into the flattened term,
/// and optionally the start of a run of consecutive children of the chain
/// at that path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Position {
    pub path: Vec<usize>,
    pub window: Option<usize>,
}

impl Position {
    pub fn root() -> Self {
        Position::default()
    }
}

fn window_matches(node: &Term, lhs: &Term, start: usize) -> bool {
    let Some(children) = node.children() else { return false };
    let pat = lhs.window_parts();
    if lhs.children().is_some() && !node.same_kind(lhs) {
        return false;
    }
    start + pat.len() <= children.len() && children[start..start + pat.len()] == *pat
}

/// Replaces the occurrence of `r.lhs` at `pos` by `r.rhs`.
pub fn apply_rule(d: &Diagram, r: &RewriteRule, pos: &Position) -> Result<Diagram> {
    let lhs = Term::of(&r.lhs);
    let rhs = Term::of(&r.rhs);
    let mut root = Term::of(d);
    let mut node = &mut root;
    for (depth, &i) in pos.path.iter().enumerate() {
        node = node
            .children_mut()
            .and_then(|c| c.get_mut(i))
            .ok_or_else(|| Error::NoMatch(format!("path {:?} leaves the term at step {depth}", pos.path)))?;
    }
    match pos.window {
        None => {
            if *node != lhs {
                return Err(Error::NoMatch(format!("`{}` does not occur at {:?}", r.lhs, pos.path)));
            }
            *node = rhs;
        }
        Some(start) => {
            if !window_matches(node, &lhs, start) {
                return Err(Error::NoMatch(format!("`{}` does not occur at {:?} from child {start}", r.lhs, pos.path)));
            }
            let len = lhs.window_parts().len();
            let replacement: Vec<Term> =
                if node.same_kind(&rhs) { rhs.window_parts().to_vec() } else { vec![rhs.clone()] };
            let children = node.children_mut().expect("window on a chain");
            children.splice(start..start + len, replacement);
            if children.len() == 1 {
                *node = children.pop().expect("one child");
            }
        }
    }
    let out = root.build()?;
    if (out.dom(), out.cod()) != (d.dom(), d.cod()) {
        return Err(Error::Invariant(format!("rewriting with `{}` changed the type", r.name)));
    }
    Ok(out)
}

/// Every position where `r.lhs` occurs, in preorder.
pub fn find_matches(d: &Diagram, r: &RewriteRule) -> Vec<Position> {
    let lhs = Term::of(&r.lhs);
    let mut out = Vec::new();
    let mut path = Vec::new();
    walk(&Term::of(d), &lhs, &mut path, &mut out);
    out
}

fn walk(node: &Term, lhs: &Term, path: &mut Vec<usize>, out: &mut Vec<Position>) {
    if node == lhs {
        out.push(Position { path: path.clone(), window: None });
    } else if node.same_kind(lhs) {
        for start in 0..node.window_parts().len() {
            if window_matches(node, lhs, start) {
                out.push(Position { path: path.clone(), window: Some(start) });
            }
        }
    }
    if let Some(children) = node.children() {
        for (i, c) in children.iter().enumerate() {
            path.push(i);
            walk(c, lhs, path, out);
            path.pop();
        }
    }
}

/// `zeroscalar * id(n) * xunit^(m-n)` for `m >= n`, otherwise
/// `zeroscalar * id(m) * xdel^(n-m)`. Empty factors are left out.
pub fn zero_normal_form(n: usize, m: usize) -> Diagram {
    let mut parts = vec![Diagram::gen(Generator::ZeroScalar)];
    let (wires, pad) = if m >= n {
        (n, tensor_power(&Diagram::gen(Generator::XUnit), m - n))
    } else {
        (m, tensor_power(&Diagram::gen(Generator::XDel), n - m))
    };
    if wires > 0 {
        parts.push(Diagram::id(wires));
    }
    if m != n {
        parts.push(pad);
    }
    Diagram::tensor_all(parts)
}

/// The zero normal form of `d`'s type when `d` denotes the empty affine
/// span; `d` itself otherwise.
pub fn normalize_zero(d: &Diagram) -> Result<Diagram> {
    if eval_affine_span(d)?.is_empty() {
        Ok(zero_normal_form(d.dom(), d.cod()))
    } else {
        Ok(d.clone())
    }
}
