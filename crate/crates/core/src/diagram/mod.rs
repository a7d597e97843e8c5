//! String diagrams as typed term trees.
//!
//! `seq(a, b)` runs `a` first. Diagrams are compared structurally; semantic
//! equality lives in [`crate::semantics`].

mod fragment;
mod parse;

use std::fmt;
use std::sync::Arc;

use crate::boolpoly::AnfPoly;
use crate::error::{Error, Result};

pub use fragment::{first_disallowed, fragment_check, Fragment, FragmentId, Partiality};
pub use parse::{parse, parse_program, Program};

/// Generator kinds without payload, used for fragment membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    ZCopy,
    ZDel,
    ZMerge,
    ZUnit,
    XMul,
    XUnit,
    XCopy,
    XDel,
    Pi,
    PiDel,
    ZeroScalar,
    And,
    Cnot,
    Not,
    Poly,
    Gcx,
}

impl GenKind {
    pub const ALL: [GenKind; 16] = [
        GenKind::ZCopy,
        GenKind::ZDel,
        GenKind::ZMerge,
        GenKind::ZUnit,
        GenKind::XMul,
        GenKind::XUnit,
        GenKind::XCopy,
        GenKind::XDel,
        GenKind::Pi,
        GenKind::PiDel,
        GenKind::ZeroScalar,
        GenKind::And,
        GenKind::Cnot,
        GenKind::Not,
        GenKind::Poly,
        GenKind::Gcx,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::ZCopy => "zcopy",
            GenKind::ZDel => "zdel",
            GenKind::ZMerge => "zmerge",
            GenKind::ZUnit => "zunit",
            GenKind::XMul => "xmul",
            GenKind::XUnit => "xunit",
            GenKind::XCopy => "xcopy",
            GenKind::XDel => "xdel",
            GenKind::Pi => "pi",
            GenKind::PiDel => "pidel",
            GenKind::ZeroScalar => "zeroscalar",
            GenKind::And => "and",
            GenKind::Cnot => "cnot",
            GenKind::Not => "not",
            GenKind::Poly => "poly",
            GenKind::Gcx => "gcx",
        }
    }

    pub fn is_macro(self) -> bool {
        matches!(self, GenKind::Cnot | GenKind::Not | GenKind::Gcx)
    }
}

/// A generator symbol. `Poly` carries its polynomial (over `n` variables,
/// typed `n → n`); `Gcx(k)` is the `k`-controlled not on `k + 1` wires,
/// controls first and target last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    ZCopy,
    ZDel,
    ZMerge,
    ZUnit,
    XMul,
    XUnit,
    XCopy,
    XDel,
    Pi,
    PiDel,
    ZeroScalar,
    And,
    Cnot,
    Not,
    Poly(AnfPoly),
    Gcx(usize),
}

impl Generator {
    pub fn kind(&self) -> GenKind {
        match self {
            Generator::ZCopy => GenKind::ZCopy,
            Generator::ZDel => GenKind::ZDel,
            Generator::ZMerge => GenKind::ZMerge,
            Generator::ZUnit => GenKind::ZUnit,
            Generator::XMul => GenKind::XMul,
            Generator::XUnit => GenKind::XUnit,
            Generator::XCopy => GenKind::XCopy,
            Generator::XDel => GenKind::XDel,
            Generator::Pi => GenKind::Pi,
            Generator::PiDel => GenKind::PiDel,
            Generator::ZeroScalar => GenKind::ZeroScalar,
            Generator::And => GenKind::And,
            Generator::Cnot => GenKind::Cnot,
            Generator::Not => GenKind::Not,
            Generator::Poly(_) => GenKind::Poly,
            Generator::Gcx(_) => GenKind::Gcx,
        }
    }

    pub fn name(&self) -> &'static str {
        self.kind().name()
    }

    /// Payload-free generator by name.
    pub fn from_name(name: &str) -> Option<Generator> {
        Some(match name {
            "zcopy" => Generator::ZCopy,
            "zdel" => Generator::ZDel,
            "zmerge" => Generator::ZMerge,
            "zunit" => Generator::ZUnit,
            "xmul" => Generator::XMul,
            "xunit" => Generator::XUnit,
            "xcopy" => Generator::XCopy,
            "xdel" => Generator::XDel,
            "pi" => Generator::Pi,
            "pidel" => Generator::PiDel,
            "zeroscalar" => Generator::ZeroScalar,
            "and" => Generator::And,
            "cnot" => Generator::Cnot,
            "not" => Generator::Not,
            _ => return None,
        })
    }

    pub fn dom(&self) -> usize {
        match self {
            Generator::ZCopy | Generator::ZDel | Generator::XCopy | Generator::XDel | Generator::PiDel => 1,
            Generator::ZMerge | Generator::XMul | Generator::And | Generator::Cnot => 2,
            Generator::ZUnit | Generator::XUnit | Generator::Pi | Generator::ZeroScalar => 0,
            Generator::Not => 1,
            Generator::Poly(p) => p.num_vars(),
            Generator::Gcx(k) => k + 1,
        }
    }

    pub fn cod(&self) -> usize {
        match self {
            Generator::ZCopy | Generator::XCopy | Generator::Cnot => 2,
            Generator::ZMerge | Generator::XMul | Generator::And | Generator::Not => 1,
            Generator::ZUnit | Generator::XUnit | Generator::Pi => 1,
            Generator::ZDel | Generator::XDel | Generator::PiDel | Generator::ZeroScalar => 0,
            Generator::Poly(p) => p.num_vars(),
            Generator::Gcx(k) => k + 1,
        }
    }

    pub fn is_macro(&self) -> bool {
        self.kind().is_macro()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Poly(p) => write!(f, "poly({}, {})", p, p.num_vars()),
            Generator::Gcx(k) => write!(f, "gcx({k})"),
            g => f.write_str(g.name()),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    Id(usize),
    Swap,
    Gen(Generator),
    Seq(Diagram, Diagram),
    Tensor(Diagram, Diagram),
}

#[derive(PartialEq, Eq, Hash)]
struct Inner {
    node: Node,
    dom: usize,
    cod: usize,
}

/// An immutable, cheaply clonable diagram term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram(Arc<Inner>);

impl Diagram {
    fn make(node: Node, dom: usize, cod: usize) -> Self {
        Diagram(Arc::new(Inner { node, dom, cod }))
    }

    pub fn id(n: usize) -> Self {
        Self::make(Node::Id(n), n, n)
    }

    pub fn swap() -> Self {
        Self::make(Node::Swap, 2, 2)
    }

    pub fn gen(g: Generator) -> Self {
        let (d, c) = (g.dom(), g.cod());
        Self::make(Node::Gen(g), d, c)
    }

    /// `a` then `b`.
    pub fn seq(a: &Diagram, b: &Diagram) -> Result<Self> {
        if a.cod() != b.dom() {
            return Err(Error::shape(format!(
                "sequencing a diagram with codomain {} into one with domain {}",
                a.cod(),
                b.dom()
            )));
        }
        Ok(Self::make(Node::Seq(a.clone(), b.clone()), a.dom(), b.cod()))
    }

    pub fn tensor(a: &Diagram, b: &Diagram) -> Self {
        Self::make(Node::Tensor(a.clone(), b.clone()), a.dom() + b.dom(), a.cod() + b.cod())
    }

    pub fn then(&self, next: &Diagram) -> Result<Self> {
        Self::seq(self, next)
    }

    pub fn par(&self, other: &Diagram) -> Self {
        Self::tensor(self, other)
    }

    /// Left-nested sequential composite; an empty list gives `id(n)`.
    pub fn seq_all(n: usize, parts: impl IntoIterator<Item = Diagram>) -> Result<Self> {
        let mut it = parts.into_iter();
        let Some(first) = it.next() else {
            return Ok(Self::id(n));
        };
        if first.dom() != n {
            return Err(Error::shape(format!("composite of type {n} starts with domain {}", first.dom())));
        }
        it.try_fold(first, |acc, d| Self::seq(&acc, &d))
    }

    /// Left-nested tensor; an empty list gives `id(0)`.
    pub fn tensor_all(parts: impl IntoIterator<Item = Diagram>) -> Self {
        let mut it = parts.into_iter();
        match it.next() {
            None => Self::id(0),
            Some(first) => it.fold(first, |acc, d| Self::tensor(&acc, &d)),
        }
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn dom(&self) -> usize {
        self.0.dom
    }

    pub fn cod(&self) -> usize {
        self.0.cod
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        match self.node() {
            Node::Seq(a, b) | Node::Tensor(a, b) => 1 + a.size() + b.size(),
            _ => 1,
        }
    }

    /// Every generator occurrence, left to right.
    pub fn generators(&self) -> Vec<&Generator> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<&'a Generator>) {
        match self.node() {
            Node::Gen(g) => out.push(g),
            Node::Seq(a, b) | Node::Tensor(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
            Node::Id(_) | Node::Swap => {}
        }
    }

    pub fn contains_macros(&self) -> bool {
        self.generators().iter().any(|g| g.is_macro())
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq_level(self, f)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram[{}->{}]({})", self.dom(), self.cod(), self)
    }
}

// Both operators are left-associative and `;` binds looser than `*`, so a
// right child of the same operator needs parentheses to keep the tree shape.
fn write_seq_level(d: &Diagram, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match d.node() {
        Node::Seq(a, b) => {
            write_seq_level(a, f)?;
            f.write_str(" ; ")?;
            if matches!(b.node(), Node::Seq(..)) {
                f.write_str("(")?;
                write_seq_level(b, f)?;
                f.write_str(")")
            } else {
                write_tensor_level(b, f)
            }
        }
        _ => write_tensor_level(d, f),
    }
}

fn write_tensor_level(d: &Diagram, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match d.node() {
        Node::Tensor(a, b) => {
            write_tensor_level(a, f)?;
            f.write_str(" * ")?;
            write_atom(b, f)
        }
        _ => write_atom(d, f),
    }
}

fn write_atom(d: &Diagram, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match d.node() {
        Node::Id(n) => write!(f, "id({n})"),
        Node::Swap => f.write_str("swap"),
        Node::Gen(g) => write!(f, "{g}"),
        Node::Seq(..) | Node::Tensor(..) => {
            f.write_str("(")?;
            write_seq_level(d, f)?;
            f.write_str(")")
        }
    }
}

/// The defining composite of a macro generator in the spider signature,
/// or `None` for a primitive generator.
pub fn macro_definition(g: &Generator) -> Option<Diagram> {
    let id1 = Diagram::id(1);
    let gen = Diagram::gen;
    match g {
        // control on wire 1, target on wire 2
        Generator::Cnot => {
            Some(Diagram::seq(&gen(Generator::ZCopy).par(&id1), &id1.par(&gen(Generator::XMul))).expect("typed"))
        }
        Generator::Not => Some(Diagram::seq(&gen(Generator::Pi).par(&id1), &gen(Generator::XMul)).expect("typed")),
        Generator::Gcx(0) => macro_definition(&Generator::Not),
        Generator::Gcx(1) => macro_definition(&Generator::Cnot),
        Generator::Gcx(k) => Some(gcx_expansion(*k)),
        _ => None,
    }
}

// Copy every control, gather the copies, AND them together and add the
// product onto the target.
fn gcx_expansion(k: usize) -> Diagram {
    let copies = Diagram::tensor_all((0..k).map(|_| Diagram::gen(Generator::ZCopy))).par(&Diagram::id(1));
    // wire 2i is control i, wire 2i+1 its copy, wire 2k the target
    let mut perm = vec![0; 2 * k + 1];
    for i in 0..k {
        perm[2 * i] = i + 1;
        perm[2 * i + 1] = k + i + 1;
    }
    perm[2 * k] = 2 * k + 1;
    let gather = permutation_diagram(&perm).expect("valid permutation");
    let tree = and_tree(k);
    let product = Diagram::tensor_all([Diagram::id(k), tree, Diagram::id(1)]);
    let add = Diagram::id(k).par(&Diagram::gen(Generator::XMul));
    Diagram::seq_all(k + 1, [copies, gather, product, add]).expect("typed")
}

fn and_tree(k: usize) -> Diagram {
    let and = Diagram::gen(Generator::And);
    match k {
        0 => Diagram::gen(Generator::Pi),
        1 => Diagram::id(1),
        _ => (3..=k).fold(and.clone(), |acc, _| Diagram::seq(&acc.par(&Diagram::id(1)), &and).expect("typed")),
    }
}

/// Replaces `cnot`, `not` and `gcx(k)` by their defining composites.
pub fn expand_macros(d: &Diagram) -> Diagram {
    if !d.contains_macros() {
        return d.clone();
    }
    match d.node() {
        Node::Gen(g) => macro_definition(g).map_or_else(|| d.clone(), |e| expand_macros(&e)),
        Node::Seq(a, b) => Diagram::seq(&expand_macros(a), &expand_macros(b)).expect("expansion preserves types"),
        Node::Tensor(a, b) => Diagram::tensor(&expand_macros(a), &expand_macros(b)),
        Node::Id(_) | Node::Swap => d.clone(),
    }
}

/// A swap network sending wire `i` to position `perm[i-1]` (1-based).
/// Built by odd-even transposition sort; the identity gives `id(n)` and a
/// single transposition of two wires gives `swap`.
pub fn permutation_diagram(perm: &[usize]) -> Result<Diagram> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true) {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a permutation of 1..{n}")));
        }
    }
    // keys[pos] = destination of the wire currently at pos
    let mut keys: Vec<usize> = perm.to_vec();
    let mut layers = Vec::new();
    let mut parity = 0;
    let mut quiet = 0;
    while quiet < 2 && n > 1 {
        let mut swaps = vec![false; n];
        let mut any = false;
        let mut p = parity;
        while p + 1 < n {
            if keys[p] > keys[p + 1] {
                keys.swap(p, p + 1);
                swaps[p] = true;
                any = true;
            }
            p += 2;
        }
        if any {
            layers.push(swap_layer(n, &swaps));
            quiet = 0;
        } else {
            quiet += 1;
        }
        parity ^= 1;
    }
    Diagram::seq_all(n, layers)
}

fn swap_layer(n: usize, swaps: &[bool]) -> Diagram {
    let mut blocks = Vec::new();
    let mut run = 0;
    let mut p = 0;
    while p < n {
        if swaps[p] {
            if run > 0 {
                blocks.push(Diagram::id(run));
                run = 0;
            }
            blocks.push(Diagram::swap());
            p += 2;
        } else {
            run += 1;
            p += 1;
        }
    }
    if run > 0 {
        blocks.push(Diagram::id(run));
    }
    Diagram::tensor_all(blocks)
}

/// `n`-fold tensor power of a diagram.
pub fn tensor_power(d: &Diagram, n: usize) -> Diagram {
    Diagram::tensor_all(std::iter::repeat_n(d.clone(), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arities() {
        assert_eq!((Generator::Gcx(2).dom(), Generator::Gcx(2).cod()), (3, 3));
        let d = Diagram::tensor(&Diagram::gen(Generator::ZCopy), &Diagram::gen(Generator::Pi));
        assert_eq!((d.dom(), d.cod()), (1, 3));
        assert!(Diagram::seq(&Diagram::gen(Generator::ZCopy), &Diagram::gen(Generator::ZCopy)).is_err());
    }

    #[test]
    fn serialize_atoms() {
        assert_eq!(Diagram::id(2).to_string(), "id(2)");
        assert_eq!(Diagram::gen(Generator::Pi).to_string(), "pi");
        let p = AnfPoly::parse("x1*x2 + 1", Some(2)).unwrap();
        assert_eq!(Diagram::gen(Generator::Poly(p)).to_string(), "poly(x1*x2 + 1, 2)");
    }

    #[test]
    fn serialize_parenthesizes_right_nesting() {
        let a = Diagram::gen(Generator::ZCopy);
        let b = Diagram::swap();
        let c = Diagram::swap();
        let right = Diagram::seq(&a, &Diagram::seq(&b, &c).unwrap()).unwrap();
        assert_eq!(right.to_string(), "zcopy ; (swap ; swap)");
        let t = Diagram::tensor(&a, &Diagram::tensor(&b, &c));
        assert_eq!(t.to_string(), "zcopy * (swap * swap)");
    }

    #[test]
    fn permutation_shapes() {
        assert_eq!(permutation_diagram(&[1, 2, 3]).unwrap(), Diagram::id(3));
        assert_eq!(permutation_diagram(&[2, 1]).unwrap(), Diagram::swap());
        assert!(permutation_diagram(&[1, 1]).is_err());
        assert!(permutation_diagram(&[0]).is_err());
        assert_eq!(permutation_diagram(&[]).unwrap(), Diagram::id(0));
    }

    #[test]
    fn expansion_is_idempotent_and_typed() {
        for g in [Generator::Cnot, Generator::Not, Generator::Gcx(0), Generator::Gcx(3)] {
            let d = Diagram::gen(g.clone());
            let e = expand_macros(&d);
            assert_eq!((e.dom(), e.cod()), (d.dom(), d.cod()));
            assert!(!e.contains_macros());
            assert_eq!(expand_macros(&e), e);
        }
    }
}
