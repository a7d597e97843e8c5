//! Test-side helpers: seeded random diagrams and oracles that do not go
//! through the library's models.

#![allow(dead_code)]

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spancalc::boolpoly::AnfPoly;
use spancalc::diagram::{Diagram, Fragment, GenKind, Generator};
use spancalc::f2::{F2Matrix, F2Vec};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_poly<R: Rng>(rng: &mut R, n: usize) -> AnfPoly {
    let masks: Vec<u64> = (0..1u64 << n).filter(|_| rng.gen_bool(0.4)).collect();
    AnfPoly::from_masks(n, masks).unwrap()
}

pub fn random_generator<R: Rng>(rng: &mut R, kind: GenKind) -> Generator {
    match kind {
        GenKind::Poly => {
            let n = rng.gen_range(1..=2);
            Generator::Poly(random_poly(rng, n))
        }
        GenKind::Gcx => Generator::Gcx(rng.gen_range(0..=2)),
        k => Generator::from_name(k.name()).unwrap(),
    }
}

fn smallest(kind: GenKind) -> Generator {
    match kind {
        GenKind::Poly => Generator::Poly(AnfPoly::one(1)),
        GenKind::Gcx => Generator::Gcx(0),
        k => Generator::from_name(k.name()).unwrap(),
    }
}

fn fits(g: &Generator, w: usize, max_width: usize) -> bool {
    g.dom() <= w && w - g.dom() + g.cod() <= max_width
}

/// A random diagram on `dom` wires in the generators of `f`, made of slices
/// (one generator or a swap, padded by identities). The slice count is
/// drawn from `layers`; widths stay at most `max_width`.
pub fn random_diagram<R: Rng>(
    rng: &mut R,
    f: &Fragment,
    dom: usize,
    layers: RangeInclusive<usize>,
    max_width: usize,
) -> Diagram {
    let layers = rng.gen_range(layers);
    let mut d = Diagram::id(dom);
    let mut w = dom;
    for _ in 0..layers {
        if w < 2 && !f.allowed.iter().any(|&k| fits(&smallest(k), w, max_width)) {
            break;
        }
        let layer = loop {
            if w >= 2 && rng.gen_bool(0.15) {
                let at = rng.gen_range(0..w - 1);
                break Diagram::tensor_all([Diagram::id(at), Diagram::swap(), Diagram::id(w - at - 2)]);
            }
            let kind = *f.allowed.choose(rng).unwrap();
            let g = random_generator(rng, kind);
            if !fits(&g, w, max_width) {
                continue;
            }
            let at = rng.gen_range(0..=w - g.dom());
            let rest = w - at - g.dom();
            break Diagram::tensor_all([Diagram::id(at), Diagram::gen(g), Diagram::id(rest)]);
        };
        w = layer.cod();
        d = d.then(&layer).unwrap();
    }
    d
}

/// Dense `2^m × 2^n` relation matrix with witness multiplicities, built
/// from per-generator truth tables with wire 1 as the most significant bit.
pub type Rel = Vec<Vec<u64>>;

fn bits(n: usize, x: usize) -> Vec<bool> {
    (0..n).map(|i| (x >> (n - 1 - i)) & 1 == 1).collect()
}

fn index(b: &[bool]) -> usize {
    b.iter().fold(0, |acc, &v| acc * 2 + v as usize)
}

fn from_fn(n: usize, m: usize, mut f: impl FnMut(&[bool], &[bool]) -> u64) -> Rel {
    (0..1 << m).map(|y| (0..1 << n).map(|x| f(&bits(n, x), &bits(m, y))).collect()).collect()
}

pub fn generator_relation(g: &Generator) -> Rel {
    let t = |b: bool| b as u64;
    match g {
        Generator::ZCopy => from_fn(1, 2, |x, y| t(y[0] == x[0] && y[1] == x[0])),
        Generator::ZDel => from_fn(1, 0, |_, _| 1),
        Generator::ZMerge => from_fn(2, 1, |x, y| t(x[0] == x[1] && y[0] == x[0])),
        Generator::ZUnit => from_fn(0, 1, |_, _| 1),
        Generator::XMul => from_fn(2, 1, |x, y| t(y[0] == (x[0] ^ x[1]))),
        Generator::XUnit => from_fn(0, 1, |_, y| t(!y[0])),
        Generator::XCopy => from_fn(1, 2, |x, y| t(x[0] == (y[0] ^ y[1]))),
        Generator::XDel => from_fn(1, 0, |x, _| t(!x[0])),
        Generator::Pi => from_fn(0, 1, |_, y| t(y[0])),
        Generator::PiDel => from_fn(1, 0, |x, _| t(x[0])),
        Generator::ZeroScalar => from_fn(0, 0, |_, _| 0),
        Generator::And => from_fn(2, 1, |x, y| t(y[0] == (x[0] & x[1]))),
        Generator::Cnot => from_fn(2, 2, |x, y| t(y[0] == x[0] && y[1] == (x[0] ^ x[1]))),
        Generator::Not => from_fn(1, 1, |x, y| t(y[0] != x[0])),
        Generator::Poly(p) => {
            let n = p.num_vars();
            from_fn(n, n, |x, y| t(x == y && p.eval_index(index(x) as u64)))
        }
        Generator::Gcx(k) => from_fn(k + 1, k + 1, |x, y| {
            let prod = x[..*k].iter().all(|&b| b);
            t(y[..*k] == x[..*k] && y[*k] == (x[*k] ^ prod))
        }),
    }
}

pub fn rel_identity(n: usize) -> Rel {
    from_fn(n, n, |x, y| (x == y) as u64)
}

pub fn rel_mul(b: &Rel, a: &Rel) -> Rel {
    let inner = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    b.iter().map(|brow| (0..cols).map(|j| (0..inner).map(|k| brow[k] * a[k][j]).sum()).collect()).collect()
}

pub fn rel_kron(a: &Rel, b: &Rel) -> Rel {
    let (ar, br) = (a.len(), b.len());
    let (ac, bc) = (a[0].len(), b[0].len());
    (0..ar * br).map(|i| (0..ac * bc).map(|j| a[i / br][j / bc] * b[i % br][j % bc]).collect()).collect()
}

/// The relation of `d` computed by structural recursion over the term.
pub fn relation(d: &Diagram) -> Rel {
    use spancalc::diagram::Node;
    match d.node() {
        Node::Id(n) => rel_identity(*n),
        Node::Swap => from_fn(2, 2, |x, y| (y[0] == x[1] && y[1] == x[0]) as u64),
        Node::Gen(g) => generator_relation(g),
        Node::Seq(a, b) => rel_mul(&relation(b), &relation(a)),
        Node::Tensor(a, b) => rel_kron(&relation(a), &relation(b)),
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> F2Matrix {
    let data = (0..rows).map(|_| F2Vec::from_index(cols, rng.gen_range(0..1u64 << cols))).collect();
    F2Matrix::from_row_vecs(cols, data).unwrap()
}

/// Every `rows × cols` matrix over GF(2).
pub fn all_matrices(rows: usize, cols: usize) -> Vec<F2Matrix> {
    (0u64..1 << (rows * cols))
        .map(|bits| {
            let data = (0..rows).map(|i| F2Vec::from_index(cols, (bits >> (i * cols)) & ((1 << cols) - 1))).collect();
            F2Matrix::from_row_vecs(cols, data).unwrap()
        })
        .collect()
}

/// Rank by plain elimination on `u64` rows, independent of the library.
pub fn oracle_rank(m: &F2Matrix) -> usize {
    let mut rows: Vec<u64> = m.row_vecs().iter().map(|r| r.to_index()).collect();
    let mut rank = 0;
    for bit in (0..m.cols()).rev() {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Invertible `k × k` matrices, by enumeration.
pub fn general_linear(k: usize) -> Vec<F2Matrix> {
    all_matrices(k, k).into_iter().filter(|h| oracle_rank(h) == k).collect()
}

fn mat_mul(a: &F2Matrix, b: &F2Matrix) -> F2Matrix {
    let mut out = F2Matrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let v = (0..a.cols()).fold(false, |acc, k| acc ^ (a.get(i, k) & b.get(k, j)));
            out.set(i, j, v);
        }
    }
    out
}

/// Is there `h` in GL(k) with `l1 = l2·h` and `r1 = r2·h`?
pub fn apex_isomorphic(gl: &[F2Matrix], l1: &F2Matrix, r1: &F2Matrix, l2: &F2Matrix, r2: &F2Matrix) -> bool {
    l1.cols() == l2.cols()
        && l1.rows() == l2.rows()
        && r1.rows() == r2.rows()
        && gl.iter().any(|h| mat_mul(l2, h) == *l1 && mat_mul(r2, h) == *r1)
}

fn apply(a: &F2Matrix, c: &F2Vec, z: &F2Vec) -> F2Vec {
    let mut out = c.clone();
    for i in 0..a.rows() {
        let v = (0..a.cols()).fold(false, |acc, k| acc ^ (a.get(i, k) & z.get(k)));
        if v {
            out.flip(i);
        }
    }
    out
}

/// Is there an affine bijection `z ↦ h·z + s` of the apex carrying the
/// second pair of affine legs to the first?
#[allow(clippy::too_many_arguments)]
pub fn affine_apex_isomorphic(
    gl: &[F2Matrix],
    (l1, a1, r1, b1): (&F2Matrix, &F2Vec, &F2Matrix, &F2Vec),
    (l2, a2, r2, b2): (&F2Matrix, &F2Vec, &F2Matrix, &F2Vec),
) -> bool {
    if l1.cols() != l2.cols() || l1.rows() != l2.rows() || r1.rows() != r2.rows() {
        return false;
    }
    let k = l1.cols();
    gl.iter().any(|h| {
        (0..1u64 << k).any(|s| {
            let s = F2Vec::from_index(k, s);
            // legs of the second span precomposed with the bijection
            let l = mat_mul(l2, h);
            let r = mat_mul(r2, h);
            l == *l1 && r == *r1 && apply(l2, a2, &s) == *a1 && apply(r2, b2, &s) == *b1
        })
    })
}

pub fn f2_rows(m: &F2Matrix) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j) as u64).collect()).collect()
}
