//! Spans `n ← k → m` of GF(2) linear and affine maps, up to apex isomorphism.
//!
//! A linear span is classified by its image in `F2^(n+m)` (left boundary
//! coordinates first) together with the nullity of its stacked legs. An
//! affine span additionally has a canonical coset offset, or is `EMPTY`.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::boolpoly::AnfPoly;
use crate::error::{Error, Result};
use crate::f2::{echelon_basis, reduce_against, solve_affine, AffineMap, AffineSubspace, F2Matrix, F2Vec};
use crate::nat::NatMatrix;
use crate::scalar::{pow2, Natural};

/// Largest `n + m` for which [`StateCounting::state_counting`] builds a matrix.
pub const MAX_COUNTING_WIRES: usize = 24;

/// Legs given as matrices: `left` is `n × k`, `right` is `m × k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawLinearSpan {
    left: F2Matrix,
    right: F2Matrix,
}

impl RawLinearSpan {
    pub fn new(left: F2Matrix, right: F2Matrix) -> Result<Self> {
        if left.cols() != right.cols() {
            return Err(Error::shape(format!("legs with apex dimensions {} and {}", left.cols(), right.cols())));
        }
        Ok(RawLinearSpan { left, right })
    }

    /// `n ← n → m` with legs `(id, a)`.
    pub fn graph(a: &F2Matrix) -> Self {
        RawLinearSpan { left: F2Matrix::identity(a.cols()), right: a.clone() }
    }

    /// `m ← n → n`, the converse relation of [`RawLinearSpan::graph`].
    pub fn cograph(a: &F2Matrix) -> Self {
        RawLinearSpan { left: a.clone(), right: F2Matrix::identity(a.cols()) }
    }

    pub fn left(&self) -> &F2Matrix {
        &self.left
    }

    pub fn right(&self) -> &F2Matrix {
        &self.right
    }

    pub fn apex(&self) -> usize {
        self.left.cols()
    }

    pub fn n(&self) -> usize {
        self.left.rows()
    }

    pub fn m(&self) -> usize {
        self.right.rows()
    }

    pub fn stacked(&self) -> F2Matrix {
        self.left.vstack(&self.right).expect("legs share the apex")
    }

    pub fn canonicalize(&self) -> CanonicalLinearSpan {
        canonicalize_linear(self)
    }

    /// Pullback composite, `self` first.
    pub fn compose(&self, next: &RawLinearSpan) -> Result<RawLinearSpan> {
        if self.m() != next.n() {
            return Err(Error::shape(format!("composing spans through boundaries {} and {}", self.m(), next.n())));
        }
        // characteristic 2: the matching condition B z1 = C z2 is [B | C] z = 0
        let kernel = self.right.hstack(&next.left)?.kernel_basis();
        let k1 = self.apex();
        let z1: Vec<F2Vec> = kernel.iter().map(|z| z.slice(0, k1)).collect();
        let z2: Vec<F2Vec> = kernel.iter().map(|z| z.slice(k1, z.len())).collect();
        let left = self.left.mul(&F2Matrix::from_col_vecs(k1, &z1)?)?;
        let right = next.right.mul(&F2Matrix::from_col_vecs(next.apex(), &z2)?)?;
        RawLinearSpan::new(left, right)
    }
}

/// `(image basis, nullity)` with the basis in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalLinearSpan {
    n: usize,
    m: usize,
    basis: Vec<F2Vec>,
    nullity: usize,
}

impl CanonicalLinearSpan {
    pub fn identity(n: usize) -> Self {
        RawLinearSpan::graph(&F2Matrix::identity(n)).canonicalize()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn basis(&self) -> &[F2Vec] {
        &self.basis
    }

    pub fn nullity(&self) -> usize {
        self.nullity
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: &F2Vec, y: &F2Vec) -> bool {
        reduce_against(&self.basis, &x.concat(y)).is_zero()
    }

    /// A raw representative whose apex is `rank + nullity`, with the
    /// nullity directions mapped to zero.
    pub fn to_raw(&self) -> RawLinearSpan {
        let k = self.rank() + self.nullity;
        let mut cols: Vec<F2Vec> = self.basis.clone();
        cols.extend(std::iter::repeat_n(F2Vec::zeros(self.n + self.m), self.nullity));
        let stacked = F2Matrix::from_col_vecs(self.n + self.m, &cols).expect("lengths");
        debug_assert_eq!(stacked.cols(), k);
        RawLinearSpan { left: stacked.row_block(0, self.n), right: stacked.row_block(self.n, self.n + self.m) }
    }

    /// The linear map this span is the graph of, if it is one.
    pub fn as_function(&self) -> Option<F2Matrix> {
        if self.nullity != 0 || self.rank() != self.n {
            return None;
        }
        let mut a = F2Matrix::zeros(self.m, self.n);
        for (i, b) in self.basis.iter().enumerate() {
            // reduced echelon with a total graph: vector i has pivot at coordinate i
            if b.first_one() != Some(i) || b.slice(0, self.n) != F2Vec::unit(self.n, i) {
                return None;
            }
            for j in b.slice(self.n, self.n + self.m).ones() {
                a.set(j, i, true);
            }
        }
        Some(a)
    }
}

impl Serialize for CanonicalLinearSpan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CanonicalLinearSpan", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("empty", &false)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("nullity", &self.nullity)?;
        st.end()
    }
}

pub fn canonicalize_linear(s: &RawLinearSpan) -> CanonicalLinearSpan {
    let stacked = s.stacked();
    let basis = echelon_basis(s.n() + s.m(), stacked.columns());
    let nullity = s.apex() - basis.len();
    CanonicalLinearSpan { n: s.n(), m: s.m(), basis, nullity }
}

/// `s` then `t`.
pub fn compose_linear(s: &CanonicalLinearSpan, t: &CanonicalLinearSpan) -> Result<CanonicalLinearSpan> {
    Ok(s.to_raw().compose(&t.to_raw())?.canonicalize())
}

fn place(v: &F2Vec, total: usize, at: usize) -> F2Vec {
    let mut out = F2Vec::zeros(total);
    for i in v.ones() {
        out.set(at + i, true);
    }
    out
}

// (a_l, a_r) over (n1, m1) and (b_l, b_r) over (n2, m2) laid out as
// (a_l, b_l, a_r, b_r).
fn interleave(a: &F2Vec, n1: usize, b: &F2Vec, n2: usize) -> F2Vec {
    let (m1, m2) = (a.len() - n1, b.len() - n2);
    let total = n1 + n2 + m1 + m2;
    let mut v = place(&a.slice(0, n1), total, 0);
    v.xor_assign(&place(&b.slice(0, n2), total, n1));
    v.xor_assign(&place(&a.slice(n1, n1 + m1), total, n1 + n2));
    v.xor_assign(&place(&b.slice(n2, n2 + m2), total, n1 + n2 + m1));
    v
}

pub fn tensor_linear(s: &CanonicalLinearSpan, t: &CanonicalLinearSpan) -> CanonicalLinearSpan {
    let zs = F2Vec::zeros(s.n + s.m);
    let zt = F2Vec::zeros(t.n + t.m);
    let mut gens: Vec<F2Vec> = s.basis.iter().map(|a| interleave(a, s.n, &zt, t.n)).collect();
    gens.extend(t.basis.iter().map(|b| interleave(&zs, s.n, b, t.n)));
    let (n, m) = (s.n + t.n, s.m + t.m);
    CanonicalLinearSpan { n, m, basis: echelon_basis(n + m, gens), nullity: s.nullity + t.nullity }
}

fn swap_blocks(v: &F2Vec, n: usize) -> F2Vec {
    v.slice(n, v.len()).concat(&v.slice(0, n))
}

pub fn dual_linear(s: &CanonicalLinearSpan) -> CanonicalLinearSpan {
    let gens = s.basis.iter().map(|v| swap_blocks(v, s.n));
    CanonicalLinearSpan { n: s.m, m: s.n, basis: echelon_basis(s.n + s.m, gens), nullity: s.nullity }
}

/// An affine span. `Empty` has the empty set as apex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RawAffineSpan {
    Empty { n: usize, m: usize },
    Legs { left: AffineMap, right: AffineMap },
}

impl RawAffineSpan {
    pub fn new(left: AffineMap, right: AffineMap) -> Result<Self> {
        if left.dom() != right.dom() {
            return Err(Error::shape(format!("legs with apex dimensions {} and {}", left.dom(), right.dom())));
        }
        Ok(RawAffineSpan::Legs { left, right })
    }

    pub fn graph(f: &AffineMap) -> Self {
        RawAffineSpan::Legs { left: AffineMap::linear_only(F2Matrix::identity(f.dom())), right: f.clone() }
    }

    pub fn cograph(f: &AffineMap) -> Self {
        RawAffineSpan::Legs { left: f.clone(), right: AffineMap::linear_only(F2Matrix::identity(f.dom())) }
    }

    pub fn from_linear(s: &RawLinearSpan) -> Self {
        RawAffineSpan::Legs {
            left: AffineMap::linear_only(s.left.clone()),
            right: AffineMap::linear_only(s.right.clone()),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            RawAffineSpan::Empty { n, .. } => *n,
            RawAffineSpan::Legs { left, .. } => left.cod(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            RawAffineSpan::Empty { m, .. } => *m,
            RawAffineSpan::Legs { right, .. } => right.cod(),
        }
    }

    /// Apex dimension, `None` for the empty apex.
    pub fn apex(&self) -> Option<usize> {
        match self {
            RawAffineSpan::Empty { .. } => None,
            RawAffineSpan::Legs { left, .. } => Some(left.dom()),
        }
    }

    pub fn canonicalize(&self) -> CanonicalAffineSpan {
        canonicalize_affine(self)
    }

    /// Pullback composite, `self` first.
    pub fn compose(&self, next: &RawAffineSpan) -> Result<RawAffineSpan> {
        if self.m() != next.n() {
            return Err(Error::shape(format!("composing spans through boundaries {} and {}", self.m(), next.n())));
        }
        let (n, p) = (self.n(), next.m());
        let (RawAffineSpan::Legs { left: a1, right: b1 }, RawAffineSpan::Legs { left: a2, right: d2 }) = (self, next)
        else {
            return Ok(RawAffineSpan::Empty { n, m: p });
        };
        // B1 z1 + b1 = A2 z2 + a2
        let system = b1.linear().hstack(a2.linear())?;
        let rhs = b1.offset().xor(a2.offset());
        let sol = solve_affine(&system, &rhs)?;
        let AffineSubspace::Coset { offset, basis, .. } = sol else {
            return Ok(RawAffineSpan::Empty { n, m: p });
        };
        let k1 = a1.dom();
        let k = offset.len();
        let param1 = AffineMap::new(
            F2Matrix::from_col_vecs(k1, &basis.iter().map(|v| v.slice(0, k1)).collect::<Vec<_>>())?,
            offset.slice(0, k1),
        )?;
        let param2 = AffineMap::new(
            F2Matrix::from_col_vecs(k - k1, &basis.iter().map(|v| v.slice(k1, k)).collect::<Vec<_>>())?,
            offset.slice(k1, k),
        )?;
        RawAffineSpan::new(param1.then(a1)?, param2.then(d2)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalAffineSpan {
    Empty { n: usize, m: usize },
    Coset { n: usize, m: usize, offset: F2Vec, basis: Vec<F2Vec>, nullity: usize },
}

impl CanonicalAffineSpan {
    pub fn identity(n: usize) -> Self {
        RawAffineSpan::graph(&AffineMap::linear_only(F2Matrix::identity(n))).canonicalize()
    }

    pub fn from_linear(s: &CanonicalLinearSpan) -> Self {
        CanonicalAffineSpan::Coset {
            n: s.n,
            m: s.m,
            offset: F2Vec::zeros(s.n + s.m),
            basis: s.basis.clone(),
            nullity: s.nullity,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CanonicalAffineSpan::Empty { n, .. } | CanonicalAffineSpan::Coset { n, .. } => *n,
        }
    }

    pub fn m(&self) -> usize {
        match self {
            CanonicalAffineSpan::Empty { m, .. } | CanonicalAffineSpan::Coset { m, .. } => *m,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CanonicalAffineSpan::Empty { .. })
    }

    pub fn contains(&self, x: &F2Vec, y: &F2Vec) -> bool {
        match self {
            CanonicalAffineSpan::Empty { .. } => false,
            CanonicalAffineSpan::Coset { offset, basis, .. } => {
                reduce_against(basis, &x.concat(y).xor(offset)).is_zero()
            }
        }
    }

    pub fn to_raw(&self) -> RawAffineSpan {
        match self {
            CanonicalAffineSpan::Empty { n, m } => RawAffineSpan::Empty { n: *n, m: *m },
            CanonicalAffineSpan::Coset { n, m, offset, basis, nullity } => {
                let lin = CanonicalLinearSpan { n: *n, m: *m, basis: basis.clone(), nullity: *nullity }.to_raw();
                RawAffineSpan::Legs {
                    left: AffineMap::new(lin.left, offset.slice(0, *n)).expect("lengths"),
                    right: AffineMap::new(lin.right, offset.slice(*n, n + m)).expect("lengths"),
                }
            }
        }
    }

    /// The underlying linear span when the offset is zero.
    pub fn as_linear(&self) -> Option<CanonicalLinearSpan> {
        match self {
            CanonicalAffineSpan::Coset { n, m, offset, basis, nullity } if offset.is_zero() => {
                Some(CanonicalLinearSpan { n: *n, m: *m, basis: basis.clone(), nullity: *nullity })
            }
            _ => None,
        }
    }
}

impl Serialize for CanonicalAffineSpan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CanonicalAffineSpan::Empty { n, m } => {
                let mut st = s.serialize_struct("CanonicalAffineSpan", 5)?;
                st.serialize_field("n", n)?;
                st.serialize_field("m", m)?;
                st.serialize_field("empty", &true)?;
                st.serialize_field("basis", &Vec::<F2Vec>::new())?;
                st.serialize_field("nullity", &0)?;
                st.end()
            }
            CanonicalAffineSpan::Coset { n, m, offset, basis, nullity } => {
                let mut st = s.serialize_struct("CanonicalAffineSpan", 6)?;
                st.serialize_field("n", n)?;
                st.serialize_field("m", m)?;
                st.serialize_field("empty", &false)?;
                st.serialize_field("offset", offset)?;
                st.serialize_field("basis", basis)?;
                st.serialize_field("nullity", nullity)?;
                st.end()
            }
        }
    }
}

pub fn canonicalize_affine(s: &RawAffineSpan) -> CanonicalAffineSpan {
    match s {
        RawAffineSpan::Empty { n, m } => CanonicalAffineSpan::Empty { n: *n, m: *m },
        RawAffineSpan::Legs { left, right } => {
            let lin = RawLinearSpan::new(left.linear().clone(), right.linear().clone())
                .expect("legs share the apex")
                .canonicalize();
            let offset = reduce_against(&lin.basis, &left.offset().concat(right.offset()));
            CanonicalAffineSpan::Coset { n: lin.n, m: lin.m, offset, basis: lin.basis, nullity: lin.nullity }
        }
    }
}

/// `s` then `t`; an empty solution set gives `EMPTY(n, p)`.
pub fn compose_affine(s: &CanonicalAffineSpan, t: &CanonicalAffineSpan) -> Result<CanonicalAffineSpan> {
    Ok(s.to_raw().compose(&t.to_raw())?.canonicalize())
}

pub fn tensor_affine(s: &CanonicalAffineSpan, t: &CanonicalAffineSpan) -> CanonicalAffineSpan {
    let (n, m) = (s.n() + t.n(), s.m() + t.m());
    match (s, t) {
        (
            CanonicalAffineSpan::Coset { n: n1, offset: o1, basis: b1, nullity: v1, .. },
            CanonicalAffineSpan::Coset { n: n2, offset: o2, basis: b2, nullity: v2, .. },
        ) => {
            let zs = F2Vec::zeros(o1.len());
            let zt = F2Vec::zeros(o2.len());
            let mut gens: Vec<F2Vec> = b1.iter().map(|a| interleave(a, *n1, &zt, *n2)).collect();
            gens.extend(b2.iter().map(|b| interleave(&zs, *n1, b, *n2)));
            let basis = echelon_basis(n + m, gens);
            let offset = reduce_against(&basis, &interleave(o1, *n1, o2, *n2));
            CanonicalAffineSpan::Coset { n, m, offset, basis, nullity: v1 + v2 }
        }
        _ => CanonicalAffineSpan::Empty { n, m },
    }
}

pub fn dual_affine(s: &CanonicalAffineSpan) -> CanonicalAffineSpan {
    match s {
        CanonicalAffineSpan::Empty { n, m } => CanonicalAffineSpan::Empty { n: *m, m: *n },
        CanonicalAffineSpan::Coset { n, m, offset, basis, nullity } => {
            let basis = echelon_basis(n + m, basis.iter().map(|v| swap_blocks(v, *n)));
            let offset = reduce_against(&basis, &swap_blocks(offset, *n));
            CanonicalAffineSpan::Coset { n: *m, m: *n, offset, basis, nullity: *nullity }
        }
    }
}

/// The `2^m × 2^n` matrix counting apex points over each boundary pair.
pub trait StateCounting {
    fn state_counting<T: Natural>(&self) -> Result<NatMatrix<T>>;
}

fn counting_matrix<T: Natural>(
    n: usize,
    m: usize,
    offset: &F2Vec,
    basis: &[F2Vec],
    nullity: usize,
) -> Result<NatMatrix<T>> {
    if n + m > MAX_COUNTING_WIRES {
        return Err(Error::Budget(format!("a {}x{} counting matrix is too large", 1u128 << m, 1u128 << n)));
    }
    let weight: T = pow2(nullity).ok_or(Error::Overflow("state counting"))?;
    let mut out = NatMatrix::zeros(1 << m, 1 << n);
    let space = AffineSubspace::Coset { ambient_dim: n + m, offset: offset.clone(), basis: basis.to_vec() };
    for p in space.points() {
        let x = p.slice(0, n).to_index() as usize;
        let y = p.slice(n, n + m).to_index() as usize;
        out.set(y, x, weight.clone());
    }
    Ok(out)
}

impl StateCounting for CanonicalLinearSpan {
    fn state_counting<T: Natural>(&self) -> Result<NatMatrix<T>> {
        counting_matrix(self.n, self.m, &F2Vec::zeros(self.n + self.m), &self.basis, self.nullity)
    }
}

impl StateCounting for CanonicalAffineSpan {
    fn state_counting<T: Natural>(&self) -> Result<NatMatrix<T>> {
        match self {
            CanonicalAffineSpan::Empty { n, m } => {
                if n + m > MAX_COUNTING_WIRES {
                    return Err(Error::Budget("counting matrix too large".into()));
                }
                Ok(NatMatrix::zeros(1 << m, 1 << n))
            }
            CanonicalAffineSpan::Coset { n, m, offset, basis, nullity } => {
                counting_matrix(*n, *m, offset, basis, *nullity)
            }
        }
    }
}

pub fn state_counting<T: Natural, S: StateCounting>(s: &S) -> Result<NatMatrix<T>> {
    s.state_counting()
}

/// `[left; right] = [mono_left; mono_right] · epi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParIsoFactors {
    pub epi: F2Matrix,
    pub mono_left: F2Matrix,
    pub mono_right: F2Matrix,
}

impl ParIsoFactors {
    /// The span `(mono_left · epi, mono_right · epi)`.
    pub fn recompose(&self) -> Result<RawLinearSpan> {
        RawLinearSpan::new(self.mono_left.mul(&self.epi)?, self.mono_right.mul(&self.epi)?)
    }

    /// The jointly monic part as a span on the smaller apex.
    pub fn mono_span(&self) -> RawLinearSpan {
        RawLinearSpan { left: self.mono_left.clone(), right: self.mono_right.clone() }
    }

    pub fn epi_is_surjective(&self) -> bool {
        self.epi.rank() == self.epi.rows()
    }

    pub fn monos_jointly_injective(&self) -> bool {
        let stacked = self.mono_left.vstack(&self.mono_right).expect("same apex");
        stacked.rank() == stacked.cols()
    }
}

pub fn pariso_factor(s: &RawLinearSpan) -> ParIsoFactors {
    let (epi, mono) = s.stacked().rank_factorize();
    ParIsoFactors { epi, mono_left: mono.row_block(0, s.n()), mono_right: mono.row_block(s.n(), s.n() + s.m()) }
}

/// `((left, id_k), (id_k, right))`; their composite is `s` again.
pub fn span_split(s: &RawLinearSpan) -> (RawLinearSpan, RawLinearSpan) {
    let id = F2Matrix::identity(s.apex());
    (RawLinearSpan { left: s.left.clone(), right: id.clone() }, RawLinearSpan { left: id, right: s.right.clone() })
}

/// The diagonal 0/1 matrix of `p`, i.e. the subset `p⁻¹(1)` as a span.
pub fn set_span_from_poly<T: Natural>(p: &AnfPoly) -> Result<NatMatrix<T>> {
    let n = p.num_vars();
    if n > MAX_COUNTING_WIRES / 2 {
        return Err(Error::Budget(format!("a polynomial box on {n} wires is too large to tabulate")));
    }
    let mut out = NatMatrix::zeros(1 << n, 1 << n);
    for (x, b) in p.to_truth_table().into_iter().enumerate() {
        if b {
            out.set(x, x, T::one());
        }
    }
    Ok(out)
}

/// Largest apex the brute-force oracles will enumerate.
pub const BRUTE_MAX_APEX: usize = 4;

fn invertible_matrices(k: usize) -> Result<Vec<F2Matrix>> {
    if k > BRUTE_MAX_APEX {
        return Err(Error::Budget(format!("apex dimension {k} exceeds the enumeration bound {BRUTE_MAX_APEX}")));
    }
    let mut out = Vec::new();
    for bits in 0u64..1 << (k * k) {
        let rows = (0..k).map(|i| F2Vec::from_index(k, (bits >> (i * k)) & ((1 << k) - 1))).collect();
        let h = F2Matrix::from_row_vecs(k, rows)?;
        if h.rank() == k {
            out.push(h);
        }
    }
    Ok(out)
}

/// Test oracle: is there an invertible `h` with `s.left = t.left·h` and
/// `s.right = t.right·h`? Enumerates GL(k, F2); refuses `k > 4`.
pub fn brute_iso_equal(s: &RawLinearSpan, t: &RawLinearSpan) -> Result<bool> {
    if (s.n(), s.m(), s.apex()) != (t.n(), t.m(), t.apex()) {
        return Ok(false);
    }
    for h in invertible_matrices(s.apex())? {
        if t.left.mul(&h)? == s.left && t.right.mul(&h)? == s.right {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Affine analogue of [`brute_iso_equal`]: the apex isomorphism is an
/// affine bijection `z ↦ h·z + c`.
pub fn brute_affine_iso_equal(s: &RawAffineSpan, t: &RawAffineSpan) -> Result<bool> {
    if (s.n(), s.m()) != (t.n(), t.m()) {
        return Ok(false);
    }
    let (RawAffineSpan::Legs { left: sl, right: sr }, RawAffineSpan::Legs { left: tl, right: tr }) = (s, t) else {
        return Ok(s.apex().is_none() && t.apex().is_none());
    };
    let k = sl.dom();
    if k != tl.dom() {
        return Ok(false);
    }
    let hs = invertible_matrices(k)?;
    for c in 0u64..1 << k {
        let shift = F2Vec::from_index(k, c);
        for h in &hs {
            let iso = AffineMap::new(h.clone(), shift.clone())?;
            if iso.then(tl)? == *sl && iso.then(tr)? == *sr {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> F2Matrix {
        F2Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn v(bits: &[u8]) -> F2Vec {
        F2Vec::from_bits(bits)
    }

    #[test]
    fn canonical_examples() {
        let id = RawLinearSpan::new(m(&[&[1]]), m(&[&[1]])).unwrap().canonicalize();
        assert_eq!((id.basis().to_vec(), id.nullity()), (vec![v(&[1, 1])], 0));
        let empty = RawLinearSpan::new(F2Matrix::zeros(1, 0), F2Matrix::zeros(1, 0)).unwrap().canonicalize();
        assert_eq!((empty.rank(), empty.nullity()), (0, 0));
        let loose = RawLinearSpan::new(F2Matrix::zeros(1, 1), F2Matrix::zeros(1, 1)).unwrap().canonicalize();
        assert_eq!((loose.rank(), loose.nullity()), (0, 1));
        assert_ne!(empty, loose);
    }

    #[test]
    fn special_law() {
        let delta = m(&[&[1], &[1]]);
        let copy = RawLinearSpan::graph(&delta).canonicalize();
        let merge = RawLinearSpan::cograph(&delta).canonicalize();
        assert_eq!(compose_linear(&copy, &merge).unwrap(), CanonicalLinearSpan::identity(1));
    }

    #[test]
    fn hopf_law() {
        let copy_add = RawLinearSpan::graph(&m(&[&[0]])).canonicalize();
        let del = RawLinearSpan::graph(&F2Matrix::zeros(0, 1)).canonicalize();
        let unit = RawLinearSpan::graph(&F2Matrix::zeros(1, 0)).canonicalize();
        let lhs = compose_linear(&del, &unit).unwrap();
        assert_eq!(lhs, copy_add);
        assert_eq!(lhs.basis(), &[v(&[1, 0])]);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(CanonicalLinearSpan::identity(1).state_counting::<u64>().unwrap(), NatMatrix::identity(2));
        let loose = RawLinearSpan::new(F2Matrix::zeros(1, 1), F2Matrix::zeros(1, 1)).unwrap().canonicalize();
        assert_eq!(
            loose.state_counting::<u64>().unwrap(),
            NatMatrix::from_u64_rows(&[vec![2, 0], vec![0, 0]]).unwrap()
        );
        let zero = CanonicalAffineSpan::Empty { n: 0, m: 0 };
        assert_eq!(zero.state_counting::<u64>().unwrap(), NatMatrix::from_u64_rows(&[vec![0]]).unwrap());
    }

    #[test]
    fn affine_points() {
        let one = AffineMap::new(F2Matrix::zeros(1, 0), v(&[1])).unwrap();
        let zero = AffineMap::new(F2Matrix::zeros(1, 0), v(&[0])).unwrap();
        let pi = RawAffineSpan::graph(&one).canonicalize();
        let pi_del = RawAffineSpan::cograph(&one).canonicalize();
        let zero_del = RawAffineSpan::cograph(&zero).canonicalize();
        assert_eq!(compose_affine(&pi, &zero_del).unwrap(), CanonicalAffineSpan::Empty { n: 0, m: 0 });
        let scalar = compose_affine(&pi, &pi_del).unwrap();
        assert_eq!(scalar, CanonicalAffineSpan::identity(0));
        assert_eq!(compose_affine(&pi, &CanonicalAffineSpan::identity(1)).unwrap(), pi);
        match pi {
            CanonicalAffineSpan::Coset { offset, basis, nullity, .. } => {
                assert_eq!((offset, basis.len(), nullity), (v(&[1]), 0, 0))
            }
            _ => panic!(),
        }
    }

    #[test]
    fn duals() {
        let a = m(&[&[1, 1]]);
        let g = RawLinearSpan::graph(&a).canonicalize();
        assert_eq!(dual_linear(&g), RawLinearSpan::cograph(&a).canonicalize());
        assert_eq!(dual_linear(&dual_linear(&g)), g);
    }

    #[test]
    fn factor_examples() {
        let s = RawLinearSpan::graph(&m(&[&[1, 0], &[1, 1]]));
        let f = pariso_factor(&s);
        assert!(f.epi.is_identity());
        let s = RawLinearSpan::new(F2Matrix::zeros(1, 1), F2Matrix::zeros(1, 1)).unwrap();
        let f = pariso_factor(&s);
        assert_eq!((f.epi.rows(), f.epi.cols(), f.mono_left.cols()), (0, 1, 0));
        assert!(f.epi_is_surjective() && f.monos_jointly_injective());
    }

    #[test]
    fn as_function_recovers_graph() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(RawLinearSpan::graph(&a).canonicalize().as_function(), Some(a.clone()));
        assert_eq!(RawLinearSpan::cograph(&a).canonicalize().as_function(), None);
    }

    #[test]
    fn brute_refuses_large_apex() {
        let s = RawLinearSpan::graph(&F2Matrix::identity(5));
        assert!(matches!(brute_iso_equal(&s, &s), Err(Error::Budget(_))));
        let t = RawLinearSpan::graph(&F2Matrix::identity(4));
        assert!(brute_iso_equal(&t, &t).unwrap());
    }

    #[test]
    fn poly_span() {
        let p = AnfPoly::var(1, 0);
        let d = set_span_from_poly::<u64>(&p).unwrap();
        assert_eq!(d, NatMatrix::from_u64_rows(&[vec![0, 0], vec![0, 1]]).unwrap());
    }
}
