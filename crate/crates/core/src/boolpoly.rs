//! Boolean polynomials in algebraic normal form, i.e. elements of
//! `F2[x1..xn]/(xi^2 - xi)`, and tuples of them as Boolean functions.
//!
//! A monomial is a set of variable indices, stored as a `u64` bitmask with
//! bit `i` standing for `x(i+1)`; the empty set is the constant 1. Because
//! the monomial set is a set, structural equality is equality of functions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::nat::NatMatrix;
use crate::scalar::Natural;

pub const MAX_VARS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnfPoly {
    num_vars: usize,
    monomials: BTreeSet<u64>,
}

fn var_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Basis-state index (wire 1 most significant) to a variable mask (bit i is x(i+1)).
pub fn index_to_mask(n: usize, index: u64) -> u64 {
    if n == 0 {
        0
    } else {
        index.reverse_bits() >> (64 - n)
    }
}

/// Inverse of [`index_to_mask`].
pub fn mask_to_index(n: usize, mask: u64) -> u64 {
    index_to_mask(n, mask)
}

fn check_vars(n: usize) -> Result<()> {
    if n > MAX_VARS {
        return Err(Error::Invalid(format!("at most {MAX_VARS} variables are supported, got {n}")));
    }
    Ok(())
}

fn same_arity(p: &AnfPoly, q: &AnfPoly) -> Result<()> {
    if p.num_vars != q.num_vars {
        return Err(Error::shape(format!("polynomials over {} and {} variables", p.num_vars, q.num_vars)));
    }
    Ok(())
}

impl AnfPoly {
    pub fn zero(num_vars: usize) -> Self {
        AnfPoly { num_vars, monomials: BTreeSet::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        AnfPoly { num_vars, monomials: BTreeSet::from([0]) }
    }

    pub fn constant(num_vars: usize, c: bool) -> Self {
        if c {
            Self::one(num_vars)
        } else {
            Self::zero(num_vars)
        }
    }

    /// The variable `x(i+1)`; `i` is 0-based.
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable index {i} out of range for {num_vars} variables");
        AnfPoly { num_vars, monomials: BTreeSet::from([1u64 << i]) }
    }

    /// Builds from monomial masks; repeated masks cancel in pairs.
    pub fn from_masks(num_vars: usize, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_vars(num_vars)?;
        let mut monomials = BTreeSet::new();
        for m in masks {
            if m & !var_mask(num_vars) != 0 {
                return Err(Error::Invalid(format!("monomial mask {m:#b} uses a variable beyond {num_vars}")));
            }
            if !monomials.insert(m) {
                monomials.remove(&m);
            }
        }
        Ok(AnfPoly { num_vars, monomials })
    }

    /// Builds from 0-based index sets.
    pub fn from_index_sets(num_vars: usize, sets: &[&[usize]]) -> Result<Self> {
        let mut masks = Vec::new();
        for s in sets {
            let mut m = 0u64;
            for &i in *s {
                if i >= num_vars {
                    return Err(Error::Invalid(format!("variable index {i} out of range")));
                }
                m |= 1 << i;
            }
            masks.push(m);
        }
        Self::from_masks(num_vars, masks)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.monomials.iter().copied()
    }

    /// Monomials as sorted 0-based index lists, in display order.
    pub fn monomials(&self) -> Vec<Vec<usize>> {
        self.display_order().into_iter().map(mask_indices).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.monomials.len() == 1 && self.monomials.contains(&0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.monomials.iter().map(|m| m.count_ones()).max()
    }

    /// Evaluates at an assignment given as a variable mask.
    pub fn eval_mask(&self, assignment: u64) -> bool {
        self.monomials.iter().filter(|&&m| m & !assignment == 0).count() % 2 == 1
    }

    /// Evaluates at a basis-state index (wire 1 most significant).
    pub fn eval_index(&self, index: u64) -> bool {
        self.eval_mask(index_to_mask(self.num_vars, index))
    }

    pub fn eval_bits(&self, bits: &[bool]) -> bool {
        assert_eq!(bits.len(), self.num_vars);
        let mask = bits.iter().enumerate().fold(0u64, |m, (i, &b)| m | ((b as u64) << i));
        self.eval_mask(mask)
    }

    /// The same polynomial viewed over `num_vars` variables, with variable
    /// `i` renamed to `i + shift`.
    pub fn lift(&self, num_vars: usize, shift: usize) -> Result<AnfPoly> {
        check_vars(num_vars)?;
        if self.num_vars + shift > num_vars {
            return Err(Error::shape(format!(
                "cannot place {} variables at offset {shift} among {num_vars}",
                self.num_vars
            )));
        }
        Ok(AnfPoly { num_vars, monomials: self.monomials.iter().map(|m| m << shift).collect() })
    }

    /// Renames variable `i` to `perm[i]` (0-based) over `num_vars` variables.
    pub fn rename(&self, perm: &[usize], num_vars: usize) -> Result<AnfPoly> {
        if perm.len() != self.num_vars {
            return Err(Error::shape("renaming has the wrong length"));
        }
        let args = perm
            .iter()
            .map(|&j| {
                if j < num_vars {
                    Ok(AnfPoly::var(num_vars, j))
                } else {
                    Err(Error::Invalid("renaming target out of range".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        substitute_with_vars(self, &args, num_vars)
    }

    /// Fixes variable `i` to the constant `c`, keeping the variable count.
    pub fn restrict(&self, i: usize, c: bool) -> AnfPoly {
        let bit = 1u64 << i;
        let masks = self.monomials.iter().filter_map(|&m| {
            if m & bit == 0 {
                Some(m)
            } else if c {
                Some(m & !bit)
            } else {
                None
            }
        });
        AnfPoly::from_masks(self.num_vars, masks).expect("same variables")
    }

    pub fn to_truth_table(&self) -> Vec<bool> {
        to_truth_table(self)
    }

    fn display_order(&self) -> Vec<u64> {
        let mut ms: Vec<u64> = self.monomials.iter().copied().collect();
        ms.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then_with(|| mask_indices(*a).cmp(&mask_indices(*b))));
        ms
    }

    /// Parses ANF text such as `"x1*x2 + x3 + 1"` over `num_vars`
    /// variables, or over as many as the highest variable named when
    /// `num_vars` is `None`.
    pub fn parse(text: &str, num_vars: Option<usize>) -> Result<AnfPoly> {
        parse_anf(text, num_vars)
            .map_err(|(off, msg)| ParseError::at(ParseErrorKind::Polynomial, text, off, msg).into())
    }
}

fn mask_indices(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Parser shared with the diagram DSL. Errors carry a byte offset.
pub(crate) fn parse_anf(text: &str, num_vars: Option<usize>) -> std::result::Result<AnfPoly, (usize, String)> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut masks: Vec<u64> = Vec::new();
    let mut max_var = 0usize;
    loop {
        // one product
        let mut mask = Some(0u64);
        loop {
            skip_ws(&mut pos);
            let start = pos;
            match bytes.get(pos) {
                Some(b'x') => {
                    pos += 1;
                    let ds = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let idx: usize = text[ds..pos]
                        .parse()
                        .map_err(|_| (start, "expected a variable index after `x`".to_string()))?;
                    if idx == 0 {
                        return Err((start, "variables are numbered from x1".into()));
                    }
                    if idx > MAX_VARS {
                        return Err((start, format!("variable x{idx} exceeds the {MAX_VARS}-variable limit")));
                    }
                    if let Some(n) = num_vars {
                        if idx > n {
                            return Err((start, format!("variable x{idx} out of range for {n} variables")));
                        }
                    }
                    max_var = max_var.max(idx);
                    mask = mask.map(|m| m | 1 << (idx - 1));
                }
                Some(b'0') if !bytes.get(pos + 1).is_some_and(u8::is_ascii_digit) => {
                    pos += 1;
                    mask = None;
                }
                Some(b'1') if !bytes.get(pos + 1).is_some_and(u8::is_ascii_digit) => {
                    pos += 1;
                }
                Some(_) => return Err((start, "expected `x<k>`, `0` or `1`".into())),
                None => return Err((start, "unexpected end of polynomial".into())),
            }
            skip_ws(&mut pos);
            if bytes.get(pos) == Some(&b'*') {
                pos += 1;
            } else {
                break;
            }
        }
        if let Some(m) = mask {
            masks.push(m);
        }
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b'+') => pos += 1,
            None => break,
            Some(_) => return Err((pos, "expected `+`, `*` or end of polynomial".into())),
        }
    }
    let n = num_vars.unwrap_or(max_var);
    AnfPoly::from_masks(n, masks).map_err(|e| (0, e.to_string()))
}

impl fmt::Display for AnfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, m) in self.display_order().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m == 0 {
                write!(f, "1")?;
            } else {
                let names: Vec<String> = mask_indices(m).into_iter().map(|i| format!("x{}", i + 1)).collect();
                write!(f, "{}", names.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AnfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfPoly[{}]({})", self.num_vars, self)
    }
}

impl Serialize for AnfPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `p + q`.
pub fn poly_add(p: &AnfPoly, q: &AnfPoly) -> Result<AnfPoly> {
    same_arity(p, q)?;
    let monomials = p.monomials.symmetric_difference(&q.monomials).copied().collect();
    Ok(AnfPoly { num_vars: p.num_vars, monomials })
}

/// `p · q`.
pub fn poly_mul(p: &AnfPoly, q: &AnfPoly) -> Result<AnfPoly> {
    same_arity(p, q)?;
    let mut monomials = BTreeSet::new();
    for a in &p.monomials {
        for b in &q.monomials {
            let m = a | b;
            if !monomials.insert(m) {
                monomials.remove(&m);
            }
        }
    }
    Ok(AnfPoly { num_vars: p.num_vars, monomials })
}

/// `p + r + p·r`, the pointwise OR.
pub fn or_combine(p: &AnfPoly, r: &AnfPoly) -> Result<AnfPoly> {
    poly_add(&poly_add(p, r)?, &poly_mul(p, r)?)
}

/// Inverse Möbius transform of a truth table indexed with wire 1 most
/// significant.
pub fn from_truth_table(bits: &[bool]) -> Result<AnfPoly> {
    if !bits.len().is_power_of_two() {
        return Err(Error::Invalid(format!("truth table length {} is not a power of two", bits.len())));
    }
    let n = bits.len().trailing_zeros() as usize;
    let mut g: Vec<bool> = vec![false; bits.len()];
    for (idx, &b) in bits.iter().enumerate() {
        g[index_to_mask(n, idx as u64) as usize] = b;
    }
    mobius(&mut g, n);
    let masks = g.iter().enumerate().filter(|(_, &b)| b).map(|(m, _)| m as u64);
    AnfPoly::from_masks(n, masks)
}

pub fn to_truth_table(p: &AnfPoly) -> Vec<bool> {
    let n = p.num_vars;
    assert!(n < 32, "truth table of {n} variables is too large");
    let mut g = vec![false; 1 << n];
    for &m in &p.monomials {
        g[m as usize] = true;
    }
    mobius(&mut g, n);
    let mut out = vec![false; 1 << n];
    for (mask, &b) in g.iter().enumerate() {
        out[mask_to_index(n, mask as u64) as usize] = b;
    }
    out
}

// The transform over subset lattices is its own inverse in characteristic 2.
fn mobius(g: &mut [bool], n: usize) {
    for i in 0..n {
        let bit = 1 << i;
        for m in 0..g.len() {
            if m & bit != 0 {
                g[m] ^= g[m ^ bit];
            }
        }
    }
}

/// Simultaneous substitution `p(args)`; the result lives over the variables
/// of the arguments (over 0 variables when `p` has none).
pub fn substitute(p: &AnfPoly, args: &[AnfPoly]) -> Result<AnfPoly> {
    let n = args.first().map_or(0, AnfPoly::num_vars);
    substitute_with_vars(p, args, n)
}

/// As [`substitute`], with the target variable count explicit.
pub fn substitute_with_vars(p: &AnfPoly, args: &[AnfPoly], num_vars: usize) -> Result<AnfPoly> {
    if args.len() != p.num_vars {
        return Err(Error::shape(format!("{} arguments for a polynomial in {} variables", args.len(), p.num_vars)));
    }
    if let Some(a) = args.iter().find(|a| a.num_vars != num_vars) {
        return Err(Error::shape(format!("argument over {} variables, expected {num_vars}", a.num_vars)));
    }
    let mut acc = AnfPoly::zero(num_vars);
    for &m in &p.monomials {
        let mut term = AnfPoly::one(num_vars);
        for i in mask_indices(m) {
            term = poly_mul(&term, &args[i])?;
        }
        acc = poly_add(&acc, &term)?;
    }
    Ok(acc)
}

/// Number of satisfying assignments, by Shannon expansion on the ANF.
pub fn count_solutions(p: &AnfPoly) -> u128 {
    fn go(masks: &BTreeSet<u64>, vars: u64) -> u128 {
        let used = masks.iter().fold(0u64, |a, m| a | m);
        let free = (vars & !used).count_ones();
        let scale = 1u128 << free;
        let vars = vars & used;
        if vars == 0 {
            return if masks.contains(&0) { scale } else { 0 };
        }
        let i = vars.trailing_zeros();
        let bit = 1u64 << i;
        let lo: BTreeSet<u64> = masks.iter().copied().filter(|m| m & bit == 0).collect();
        let mut hi = BTreeSet::new();
        for &m in masks {
            let m = m & !bit;
            if !hi.insert(m) {
                hi.remove(&m);
            }
        }
        let rest = vars & !bit;
        scale * (go(&lo, rest) + go(&hi, rest))
    }
    go(&p.monomials, var_mask(p.num_vars))
}

/// A total function `F2^n → F2^m` given by `m` polynomials over `n` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunc {
    arity_in: usize,
    components: Vec<AnfPoly>,
}

impl BooleanFunc {
    pub fn new(arity_in: usize, components: Vec<AnfPoly>) -> Result<Self> {
        check_vars(arity_in)?;
        if let Some(c) = components.iter().find(|c| c.num_vars != arity_in) {
            return Err(Error::shape(format!(
                "component over {} variables in a function of arity {arity_in}",
                c.num_vars
            )));
        }
        Ok(BooleanFunc { arity_in, components })
    }

    pub fn identity(n: usize) -> Self {
        BooleanFunc { arity_in: n, components: (0..n).map(|i| AnfPoly::var(n, i)).collect() }
    }

    pub fn from_tables(arity_in: usize, tables: &[Vec<bool>]) -> Result<Self> {
        let comps = tables.iter().map(|t| from_truth_table(t)).collect::<Result<Vec<_>>>()?;
        if comps.iter().any(|c| c.num_vars != arity_in) {
            return Err(Error::shape("truth table length does not match the arity"));
        }
        Self::new(arity_in, comps)
    }

    pub fn arity_in(&self) -> usize {
        self.arity_in
    }

    pub fn arity_out(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[AnfPoly] {
        &self.components
    }

    /// Image of a basis-state index, both sides with wire 1 most significant.
    pub fn eval_index(&self, index: u64) -> u64 {
        let mask = index_to_mask(self.arity_in, index);
        self.components.iter().fold(0u64, |acc, c| (acc << 1) | c.eval_mask(mask) as u64)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &BooleanFunc) -> Result<BooleanFunc> {
        if self.arity_out() != next.arity_in {
            return Err(Error::shape(format!("composing {} outputs into {} inputs", self.arity_out(), next.arity_in)));
        }
        let comps = next
            .components
            .iter()
            .map(|c| substitute_with_vars(c, &self.components, self.arity_in))
            .collect::<Result<Vec<_>>>()?;
        Ok(BooleanFunc { arity_in: self.arity_in, components: comps })
    }

    /// Parallel composition; `other` reads the inputs after those of `self`.
    pub fn tensor(&self, other: &BooleanFunc) -> Result<BooleanFunc> {
        let n = self.arity_in + other.arity_in;
        let mut comps = self.components.iter().map(|c| c.lift(n, 0)).collect::<Result<Vec<_>>>()?;
        for c in &other.components {
            comps.push(c.lift(n, self.arity_in)?);
        }
        Ok(BooleanFunc { arity_in: n, components: comps })
    }

    pub fn is_bijection(&self) -> bool {
        if self.arity_in != self.arity_out() || self.arity_in >= 32 {
            return false;
        }
        let size = 1usize << self.arity_in;
        let mut seen = vec![false; size];
        for x in 0..size as u64 {
            let y = self.eval_index(x) as usize;
            if std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        true
    }

    /// The `2^m × 2^n` 0/1 matrix with a single 1 per column at `(f(x), x)`.
    pub fn indicator<T: Natural>(&self) -> NatMatrix<T> {
        let (n, m) = (self.arity_in, self.arity_out());
        let mut out = NatMatrix::zeros(1 << m, 1 << n);
        for x in 0..1u64 << n {
            out.set(self.eval_index(x) as usize, x as usize, T::one());
        }
        out
    }
}

impl fmt::Debug for BooleanFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "BooleanFunc[{}->{}]({})", self.arity_in, self.arity_out(), comps.join(", "))
    }
}

impl Serialize for BooleanFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BooleanFunc", 3)?;
        st.serialize_field("arity_in", &self.arity_in)?;
        st.serialize_field("arity_out", &self.arity_out())?;
        st.serialize_field("components", &self.components)?;
        st.end()
    }
}

/// `O_f(x, y) = (x, y + f(x))` on `n + m` wires.
pub fn oracle(f: &BooleanFunc) -> Result<BooleanFunc> {
    let (n, m) = (f.arity_in, f.arity_out());
    let w = n + m;
    check_vars(w)?;
    let mut comps: Vec<AnfPoly> = (0..n).map(|i| AnfPoly::var(w, i)).collect();
    for (j, c) in f.components.iter().enumerate() {
        comps.push(poly_add(&AnfPoly::var(w, n + j), &c.lift(w, 0)?)?);
    }
    BooleanFunc::new(w, comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> AnfPoly {
        AnfPoly::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("x3 + 1 + x2*x1", 3).to_string(), "x1*x2 + x3 + 1");
        assert_eq!(p("0", 2).to_string(), "0");
        assert_eq!(p("x1 + x1", 1).to_string(), "0");
        assert_eq!(p("x1*0 + 1*x2", 2).to_string(), "x2");
        assert_eq!(AnfPoly::parse("x2", None).unwrap().num_vars(), 2);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x", "x0", "x1 +", "x1 x2", "2", "x3"] {
            let e = AnfPoly::parse(bad, Some(2)).unwrap_err();
            assert!(matches!(e, Error::Parse(ParseError { kind: ParseErrorKind::Polynomial, .. })), "{bad}");
        }
    }

    #[test]
    fn add_mul_examples() {
        assert_eq!(poly_add(&p("x1*x2 + 1", 2), &p("x1", 2)).unwrap(), p("x1*x2 + x1 + 1", 2));
        assert_eq!(poly_mul(&p("x1", 1), &p("x1", 1)).unwrap(), p("x1", 1));
        assert_eq!(poly_mul(&p("x1 + x2", 2), &p("x1 + x2", 2)).unwrap(), p("x1 + x2", 2));
        assert!(poly_add(&p("x1", 1), &p("x1", 2)).is_err());
    }

    #[test]
    fn or_examples() {
        assert_eq!(or_combine(&p("x1", 2), &p("x2", 2)).unwrap(), p("x1 + x2 + x1*x2", 2));
        assert_eq!(or_combine(&p("1", 2), &p("x1*x2 + x2", 2)).unwrap(), p("1", 2));
    }

    #[test]
    fn truth_table_examples() {
        assert_eq!(from_truth_table(&[false, false, false, true]).unwrap(), p("x1*x2", 2));
        assert_eq!(from_truth_table(&[false, true, true, false]).unwrap(), p("x1 + x2", 2));
        // x1 is the most significant bit
        assert_eq!(to_truth_table(&p("x1", 2)), vec![false, false, true, true]);
        assert!(from_truth_table(&[true, false, true]).is_err());
        assert_eq!(from_truth_table(&[true]).unwrap(), AnfPoly::one(0));
    }

    #[test]
    fn substitute_examples() {
        let x1 = AnfPoly::var(1, 0);
        assert_eq!(substitute(&p("x1*x2", 2), &[x1.clone(), x1.clone()]).unwrap(), x1);
        assert_eq!(substitute(&p("x1 + x2", 2), &[AnfPoly::one(1), x1.clone()]).unwrap(), p("x1 + 1", 1));
        assert!(substitute(&p("x1 + x2", 2), &[x1]).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_solutions(&AnfPoly::one(5)), 32);
        assert_eq!(count_solutions(&p("x1*x2", 2)), 1);
        assert_eq!(count_solutions(&p("x1 + x2", 2)), 2);
        assert_eq!(count_solutions(&AnfPoly::zero(3)), 0);
        assert_eq!(count_solutions(&AnfPoly::one(64)), 1u128 << 64);
    }

    #[test]
    fn oracle_of_and_is_toffoli() {
        let and = BooleanFunc::new(2, vec![p("x1*x2", 2)]).unwrap();
        let o = oracle(&and).unwrap();
        assert_eq!(o.components()[2], p("x3 + x1*x2", 3));
        assert!(o.is_bijection());
        let id = BooleanFunc::identity(1);
        assert_eq!(oracle(&id).unwrap().components()[1], p("x1 + x2", 2));
    }

    #[test]
    fn tensor_and_then() {
        let not = BooleanFunc::new(1, vec![p("x1 + 1", 1)]).unwrap();
        let both = not.tensor(&BooleanFunc::identity(1)).unwrap();
        assert_eq!(both.eval_index(0b01), 0b11);
        assert_eq!(not.then(&not).unwrap(), BooleanFunc::identity(1));
    }
}
