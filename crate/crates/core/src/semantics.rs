//! Semantic functors from diagrams into each model, and equality decided
//! by them.
//!
//! Every model is a strict symmetric monoidal functor, so evaluation is a
//! fold over the term tree. Macros are evaluated through their definitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::boolpoly::{AnfPoly, BooleanFunc};
use crate::diagram::{first_disallowed, macro_definition, Diagram, Fragment, Generator, Node, Partiality};
use crate::error::{Error, Result};
use crate::f2::{AffineMap, F2Matrix, F2Vec};
use crate::nat::NatMatrix;
use crate::scalar::Natural;
use crate::spancat::{
    compose_affine, compose_linear, set_span_from_poly, tensor_affine, tensor_linear, CanonicalAffineSpan,
    CanonicalLinearSpan, RawAffineSpan, RawLinearSpan, StateCounting, MAX_COUNTING_WIRES,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsKind {
    /// `m × n` path counts; the cb signature only.
    PathCounting,
    /// `m × n` GF(2) matrices.
    F2Linear,
    LinearSpan,
    AffineSpan,
    /// `2^m × 2^n` natural-number matrices.
    CountingState,
    BooleanTotal,
    /// Counting matrices validated as partial functions or injections.
    PartialFunction,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 7] = [
        SemanticsKind::PathCounting,
        SemanticsKind::F2Linear,
        SemanticsKind::LinearSpan,
        SemanticsKind::AffineSpan,
        SemanticsKind::CountingState,
        SemanticsKind::BooleanTotal,
        SemanticsKind::PartialFunction,
    ];

    /// The short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            SemanticsKind::PathCounting => "path",
            SemanticsKind::F2Linear => "f2",
            SemanticsKind::LinearSpan => "linspan",
            SemanticsKind::AffineSpan => "affspan",
            SemanticsKind::CountingState => "counting",
            SemanticsKind::BooleanTotal => "bool",
            SemanticsKind::PartialFunction => "partial",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemanticsKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SemanticsKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown semantics `{s}`")))
    }
}

impl Serialize for SemanticsKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A strict symmetric monoidal target for evaluation.
pub trait Model {
    type Value;

    fn id(&self, n: usize) -> Result<Self::Value>;
    fn swap(&self) -> Result<Self::Value>;
    /// Denotation of a primitive (non-macro) generator.
    fn generator(&self, g: &Generator) -> Result<Self::Value>;
    /// `a` first, then `b`.
    fn seq(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn tensor(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
}

pub fn evaluate_in<M: Model>(model: &M, d: &Diagram) -> Result<M::Value> {
    match d.node() {
        Node::Id(n) => model.id(*n),
        Node::Swap => model.swap(),
        Node::Gen(g) => match macro_definition(g) {
            Some(def) => evaluate_in(model, &def),
            None => model.generator(g),
        },
        Node::Seq(a, b) => {
            let va = evaluate_in(model, a)?;
            let vb = evaluate_in(model, b)?;
            model.seq(va, vb)
        }
        Node::Tensor(a, b) => {
            let va = evaluate_in(model, a)?;
            let vb = evaluate_in(model, b)?;
            model.tensor(va, vb)
        }
    }
}

fn disallowed(g: &Generator, context: &str) -> Error {
    Error::Disallowed { generator: g.name().to_string(), context: context.to_string() }
}

fn f2(rows: &[&[u8]], cols: usize) -> F2Matrix {
    let data = rows.iter().map(|r| F2Vec::from_bits(r)).collect();
    F2Matrix::from_row_vecs(cols, data).expect("static table")
}

/// GF(2) matrix of a linear generator of the cb signature, `m × n`.
fn cb_matrix(g: &Generator) -> Option<F2Matrix> {
    Some(match g {
        Generator::ZCopy => f2(&[&[1], &[1]], 1),
        Generator::ZDel => F2Matrix::zeros(0, 1),
        Generator::XMul => f2(&[&[1, 1]], 2),
        Generator::XUnit => F2Matrix::zeros(1, 0),
        _ => return None,
    })
}

fn swap_f2() -> F2Matrix {
    f2(&[&[0, 1], &[1, 0]], 2)
}

/// Path counting in `Mat(N)`; only the cb signature is interpreted.
pub struct PathCounting<T>(std::marker::PhantomData<T>);

impl<T> Default for PathCounting<T> {
    fn default() -> Self {
        PathCounting(std::marker::PhantomData)
    }
}

impl<T: Natural> Model for PathCounting<T> {
    type Value = NatMatrix<T>;

    fn id(&self, n: usize) -> Result<Self::Value> {
        Ok(NatMatrix::identity(n))
    }

    fn swap(&self) -> Result<Self::Value> {
        Ok(NatMatrix::from_f2(&swap_f2()))
    }

    fn generator(&self, g: &Generator) -> Result<Self::Value> {
        cb_matrix(g).map(|m| NatMatrix::from_f2(&m)).ok_or_else(|| disallowed(g, "path-counting semantics"))
    }

    fn seq(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        b.mul(&a)
    }

    fn tensor(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(a.direct_sum(&b))
    }
}

pub struct F2Linear;

impl Model for F2Linear {
    type Value = F2Matrix;

    fn id(&self, n: usize) -> Result<F2Matrix> {
        Ok(F2Matrix::identity(n))
    }

    fn swap(&self) -> Result<F2Matrix> {
        Ok(swap_f2())
    }

    fn generator(&self, g: &Generator) -> Result<F2Matrix> {
        cb_matrix(g).ok_or_else(|| disallowed(g, "GF(2) matrix semantics"))
    }

    fn seq(&self, a: F2Matrix, b: F2Matrix) -> Result<F2Matrix> {
        b.mul(&a)
    }

    fn tensor(&self, a: F2Matrix, b: F2Matrix) -> Result<F2Matrix> {
        Ok(a.direct_sum(&b))
    }
}

fn linear_span_of(g: &Generator) -> Option<RawLinearSpan> {
    let dual = |g: Generator| cb_matrix(&g).map(|m| RawLinearSpan::cograph(&m));
    match g {
        Generator::ZMerge => dual(Generator::ZCopy),
        Generator::ZUnit => dual(Generator::ZDel),
        Generator::XCopy => dual(Generator::XMul),
        Generator::XDel => dual(Generator::XUnit),
        g => cb_matrix(g).map(|m| RawLinearSpan::graph(&m)),
    }
}

pub struct LinearSpan;

impl Model for LinearSpan {
    type Value = CanonicalLinearSpan;

    fn id(&self, n: usize) -> Result<Self::Value> {
        Ok(CanonicalLinearSpan::identity(n))
    }

    fn swap(&self) -> Result<Self::Value> {
        Ok(RawLinearSpan::graph(&swap_f2()).canonicalize())
    }

    fn generator(&self, g: &Generator) -> Result<Self::Value> {
        linear_span_of(g).map(|s| s.canonicalize()).ok_or_else(|| disallowed(g, "linear span semantics"))
    }

    fn seq(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        compose_linear(&a, &b)
    }

    fn tensor(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(tensor_linear(&a, &b))
    }
}

pub struct AffineSpan;

impl Model for AffineSpan {
    type Value = CanonicalAffineSpan;

    fn id(&self, n: usize) -> Result<Self::Value> {
        Ok(CanonicalAffineSpan::identity(n))
    }

    fn swap(&self) -> Result<Self::Value> {
        Ok(RawAffineSpan::from_linear(&RawLinearSpan::graph(&swap_f2())).canonicalize())
    }

    fn generator(&self, g: &Generator) -> Result<Self::Value> {
        let one = || AffineMap::new(F2Matrix::zeros(1, 0), F2Vec::unit(1, 0)).expect("point");
        let raw = match g {
            Generator::Pi => RawAffineSpan::graph(&one()),
            Generator::PiDel => RawAffineSpan::cograph(&one()),
            Generator::ZeroScalar => RawAffineSpan::Empty { n: 0, m: 0 },
            g => RawAffineSpan::from_linear(&linear_span_of(g).ok_or_else(|| disallowed(g, "affine span semantics"))?),
        };
        Ok(raw.canonicalize())
    }

    fn seq(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        compose_affine(&a, &b)
    }

    fn tensor(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        Ok(tensor_affine(&a, &b))
    }
}

/// `2^m × 2^n` matrices; interprets every generator.
pub struct Counting<T>(std::marker::PhantomData<T>);

impl<T> Default for Counting<T> {
    fn default() -> Self {
        Counting(std::marker::PhantomData)
    }
}

fn counting_table<T: Natural>(g: &Generator) -> Result<NatMatrix<T>> {
    let rows: &[&[u64]] = match g {
        Generator::ZCopy => &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]],
        Generator::ZMerge => &[&[1, 0, 0, 0], &[0, 0, 0, 1]],
        Generator::ZDel => &[&[1, 1]],
        Generator::ZUnit => &[&[1], &[1]],
        Generator::XMul => &[&[1, 0, 0, 1], &[0, 1, 1, 0]],
        Generator::XCopy => &[&[1, 0], &[0, 1], &[0, 1], &[1, 0]],
        Generator::XUnit => &[&[1], &[0]],
        Generator::XDel => &[&[1, 0]],
        Generator::Pi => &[&[0], &[1]],
        Generator::PiDel => &[&[0, 1]],
        Generator::And => &[&[1, 1, 1, 0], &[0, 0, 0, 1]],
        Generator::ZeroScalar => &[&[0]],
        Generator::Poly(p) => return set_span_from_poly(p),
        g => return Err(Error::Invariant(format!("macro `{}` reached the counting table", g.name()))),
    };
    NatMatrix::from_u64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

impl<T: Natural> Model for Counting<T> {
    type Value = NatMatrix<T>;

    fn id(&self, n: usize) -> Result<Self::Value> {
        if 2 * n > MAX_COUNTING_WIRES {
            return Err(Error::Budget(format!("identity on {n} wires is too large to tabulate")));
        }
        Ok(NatMatrix::identity(1 << n))
    }

    fn swap(&self) -> Result<Self::Value> {
        NatMatrix::from_u64_rows(&[vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]])
    }

    fn generator(&self, g: &Generator) -> Result<Self::Value> {
        counting_table(g)
    }

    fn seq(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        b.mul(&a)
    }

    fn tensor(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        if a.rows() * b.rows() > 1 << (MAX_COUNTING_WIRES / 2) || a.cols() * b.cols() > 1 << (MAX_COUNTING_WIRES / 2) {
            return Err(Error::Budget("counting matrix too large".into()));
        }
        a.kron(&b)
    }
}

/// Total Boolean functions as tuples of ANF polynomials.
pub struct Boolean;

impl Model for Boolean {
    type Value = BooleanFunc;

    fn id(&self, n: usize) -> Result<BooleanFunc> {
        Ok(BooleanFunc::identity(n))
    }

    fn swap(&self) -> Result<BooleanFunc> {
        BooleanFunc::new(2, vec![AnfPoly::var(2, 1), AnfPoly::var(2, 0)])
    }

    fn generator(&self, g: &Generator) -> Result<BooleanFunc> {
        let x = |n, i| AnfPoly::var(n, i);
        match g {
            Generator::ZCopy => BooleanFunc::new(1, vec![x(1, 0), x(1, 0)]),
            Generator::ZDel => BooleanFunc::new(1, vec![]),
            Generator::XMul => BooleanFunc::new(2, vec![crate::boolpoly::poly_add(&x(2, 0), &x(2, 1))?]),
            Generator::XUnit => BooleanFunc::new(0, vec![AnfPoly::zero(0)]),
            Generator::Pi => BooleanFunc::new(0, vec![AnfPoly::one(0)]),
            Generator::And => BooleanFunc::new(2, vec![crate::boolpoly::poly_mul(&x(2, 0), &x(2, 1))?]),
            g => Err(disallowed(g, "Boolean function semantics (not a total function)")),
        }
    }

    fn seq(&self, a: BooleanFunc, b: BooleanFunc) -> Result<BooleanFunc> {
        a.then(&b)
    }

    fn tensor(&self, a: BooleanFunc, b: BooleanFunc) -> Result<BooleanFunc> {
        a.tensor(&b)
    }
}

pub fn eval_path_counting<T: Natural>(d: &Diagram) -> Result<NatMatrix<T>> {
    evaluate_in(&PathCounting::<T>::default(), d)
}

pub fn eval_f2_matrix(d: &Diagram) -> Result<F2Matrix> {
    evaluate_in(&F2Linear, d)
}

pub fn eval_linear_span(d: &Diagram) -> Result<CanonicalLinearSpan> {
    evaluate_in(&LinearSpan, d)
}

pub fn eval_affine_span(d: &Diagram) -> Result<CanonicalAffineSpan> {
    evaluate_in(&AffineSpan, d)
}

pub fn eval_counting<T: Natural>(d: &Diagram) -> Result<NatMatrix<T>> {
    evaluate_in(&Counting::<T>::default(), d)
}

pub fn eval_boolean(d: &Diagram) -> Result<BooleanFunc> {
    evaluate_in(&Boolean, d)
}

/// Checks that a counting matrix is a partial function (0/1 entries, at
/// most one 1 per column), and for injections also per row.
pub fn validate_partial<T: Natural>(m: &NatMatrix<T>, kind: Partiality) -> Result<()> {
    if let Some(e) = m.entries().iter().find(|e| !e.is_zero() && !e.is_one()) {
        return Err(Error::Invariant(format!("entry {e} is not 0 or 1")));
    }
    if let Some((j, _)) = m.column_sums()?.iter().enumerate().find(|(_, s)| **s > T::one()) {
        return Err(Error::Invariant(format!("column {j} has more than one image")));
    }
    if kind == Partiality::Injection {
        if let Some((i, _)) = m.row_sums()?.iter().enumerate().find(|(_, s)| **s > T::one()) {
            return Err(Error::Invariant(format!("row {i} has more than one preimage")));
        }
    }
    Ok(())
}

fn check_fragment(d: &Diagram, f: &Fragment) -> Result<()> {
    match first_disallowed(d, f) {
        Some(g) => Err(disallowed(g, f.name)),
        None => Ok(()),
    }
}

/// Counting semantics of a diagram in a partial-map fragment, validated.
/// A validation failure means the fragment table is wrong, so it is
/// reported as an invariant violation.
pub fn eval_partial<T: Natural>(d: &Diagram, f: &Fragment) -> Result<NatMatrix<T>> {
    check_fragment(d, f)?;
    let m = eval_counting(d)?;
    validate_partial(&m, f.partiality.unwrap_or(Partiality::Function))?;
    Ok(m)
}

/// A value in any of the models.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SemanticValue<T: Natural> {
    Nat(NatMatrix<T>),
    F2(F2Matrix),
    Linear(CanonicalLinearSpan),
    Affine(CanonicalAffineSpan),
    Bool(BooleanFunc),
}

impl<T: Natural> Serialize for SemanticValue<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SemanticValue::Nat(m) => m.serialize(s),
            SemanticValue::F2(m) => m.serialize(s),
            SemanticValue::Linear(v) => v.serialize(s),
            SemanticValue::Affine(v) => v.serialize(s),
            SemanticValue::Bool(v) => v.serialize(s),
        }
    }
}

/// Evaluates `d` under `kind`. The fragment only matters for
/// [`SemanticsKind::PartialFunction`], where it selects the validation.
pub fn evaluate<T: Natural>(d: &Diagram, kind: SemanticsKind, fragment: Option<&Fragment>) -> Result<SemanticValue<T>> {
    Ok(match kind {
        SemanticsKind::PathCounting => SemanticValue::Nat(eval_path_counting(d)?),
        SemanticsKind::F2Linear => SemanticValue::F2(eval_f2_matrix(d)?),
        SemanticsKind::LinearSpan => SemanticValue::Linear(eval_linear_span(d)?),
        SemanticsKind::AffineSpan => SemanticValue::Affine(eval_affine_span(d)?),
        SemanticsKind::CountingState => SemanticValue::Nat(eval_counting(d)?),
        SemanticsKind::BooleanTotal => SemanticValue::Bool(eval_boolean(d)?),
        SemanticsKind::PartialFunction => {
            let m = eval_counting(d)?;
            validate_partial(&m, fragment.and_then(|f| f.partiality).unwrap_or(Partiality::Function))?;
            SemanticValue::Nat(m)
        }
    })
}

/// Whether `d1` and `d2` have the same value under `kind`. Both must lie in
/// `f` and `kind` must be applicable to it.
pub fn equal_under(d1: &Diagram, d2: &Diagram, kind: SemanticsKind, f: &Fragment) -> Result<bool> {
    if !f.applicable(kind) {
        return Err(Error::Inapplicable { semantics: kind.to_string(), fragment: f.name.to_string() });
    }
    check_fragment(d1, f)?;
    check_fragment(d2, f)?;
    if (d1.dom(), d1.cod()) != (d2.dom(), d2.cod()) {
        return Err(Error::shape(format!(
            "comparing a {}->{} diagram with a {}->{} diagram",
            d1.dom(),
            d1.cod(),
            d2.dom(),
            d2.cod()
        )));
    }
    match (evaluate::<u64>(d1, kind, Some(f)), evaluate::<u64>(d2, kind, Some(f))) {
        (Ok(a), Ok(b)) => Ok(a == b),
        (Err(Error::Overflow(_)), _) | (_, Err(Error::Overflow(_))) => {
            Ok(evaluate::<BigUint>(d1, kind, Some(f))? == evaluate::<BigUint>(d2, kind, Some(f))?)
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

/// Equality under the fragment's designated complete semantics.
pub fn decide_equal(d1: &Diagram, d2: &Diagram, f: &Fragment) -> Result<bool> {
    equal_under(d1, d2, f.designated, f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyCheck {
    pub relation: &'static str,
    pub holds: bool,
    pub detail: Option<String>,
}

/// Outcome of [`consistency_check`]: one entry per relation whose two sides
/// could both be evaluated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub checks: Vec<ConsistencyCheck>,
}

impl ConsistencyReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ConsistencyCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    fn record<A: PartialEq + fmt::Debug>(&mut self, relation: &'static str, lhs: Result<A>, rhs: Result<A>) {
        let outcome = match (lhs, rhs) {
            (Err(Error::Disallowed { .. }), _) | (_, Err(Error::Disallowed { .. })) => return,
            (Ok(a), Ok(b)) if a == b => ConsistencyCheck { relation, holds: true, detail: None },
            (Ok(a), Ok(b)) => ConsistencyCheck { relation, holds: false, detail: Some(format!("{a:?} vs {b:?}")) },
            (Err(e), _) | (_, Err(e)) => ConsistencyCheck { relation, holds: false, detail: Some(e.to_string()) },
        };
        self.checks.push(outcome);
    }
}

/// Cross-checks the semantics that apply to `d` against each other.
pub fn consistency_check(d: &Diagram) -> ConsistencyReport {
    let mut report = ConsistencyReport::default();
    let counting = || eval_counting::<BigUint>(d);
    report.record(
        "path counting mod 2 = f2 matrix",
        eval_path_counting::<BigUint>(d).map(|m| m.mod2()),
        eval_f2_matrix(d),
    );
    report.record(
        "f2 graph = linear span",
        eval_f2_matrix(d).map(|m| RawLinearSpan::graph(&m).canonicalize()),
        eval_linear_span(d),
    );
    report.record(
        "linear span = affine span",
        eval_linear_span(d).map(|s| CanonicalAffineSpan::from_linear(&s)),
        eval_affine_span(d),
    );
    report.record(
        "state counting of linear span = counting",
        eval_linear_span(d).and_then(|s| s.state_counting()),
        counting(),
    );
    report.record(
        "state counting of affine span = counting",
        eval_affine_span(d).and_then(|s| s.state_counting()),
        counting(),
    );
    report.record("boolean indicator = counting", eval_boolean(d).map(|f| f.indicator()), counting());
    report
}
