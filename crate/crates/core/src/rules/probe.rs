//! Generalized controlled-not circuits and the bounded comparison of
//! semantic equality against the five circuit identity families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{permutation_diagram, Diagram, Generator};
use crate::error::{Error, Result};

/// `⟨X, x⟩`: flips wire `target` when every wire of `controls` is 1.
/// Wires are numbered from 0; bit `i` of `controls` is wire `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gate {
    pub controls: u64,
    pub target: usize,
}

impl Gate {
    pub fn new(controls: &[usize], target: usize) -> Result<Gate> {
        let mut mask = 0u64;
        for &c in controls {
            if c >= 64 {
                return Err(Error::Invalid(format!("control wire {c} out of range")));
            }
            mask |= 1 << c;
        }
        let g = Gate { controls: mask, target };
        if target >= 64 || g.has_control(target) {
            return Err(Error::Invalid(format!("{g} targets one of its controls")));
        }
        Ok(g)
    }

    pub fn has_control(&self, wire: usize) -> bool {
        wire < 64 && self.controls >> wire & 1 == 1
    }

    pub fn control_list(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.has_control(i)).collect()
    }

    fn max_wire(&self) -> usize {
        self.target.max(63usize.saturating_sub(self.controls.leading_zeros() as usize))
    }

    /// Applies the gate to a basis state of `wires` wires, wire 0 being the
    /// most significant bit.
    pub fn apply(&self, wires: usize, state: u64) -> u64 {
        let ctrl = (0..wires).filter(|&i| self.has_control(i)).fold(0, |m, i| m | 1 << (wires - 1 - i));
        if state & ctrl == ctrl {
            state ^ 1 << (wires - 1 - self.target)
        } else {
            state
        }
    }

    /// The gate on `wires` wires as a diagram: the controls and target are
    /// routed next to each other, the gate applied, and the routing undone.
    pub fn to_diagram(&self, wires: usize) -> Result<Diagram> {
        if self.max_wire() >= wires {
            return Err(Error::Invalid(format!("{self} does not fit on {wires} wires")));
        }
        let ctrls = self.control_list();
        let k = ctrls.len();
        let gen = match k {
            0 => Generator::Not,
            1 => Generator::Cnot,
            _ => Generator::Gcx(k),
        };
        let core = Diagram::gen(gen).par(&Diagram::id(wires - k - 1));
        let mut order = ctrls;
        order.push(self.target);
        order.extend((0..wires).filter(|w| !self.has_control(*w) && *w != self.target));
        if order.iter().enumerate().all(|(i, &w)| i == w) {
            return Ok(core);
        }
        let mut perm = vec![0; wires];
        for (pos, &w) in order.iter().enumerate() {
            perm[w] = pos + 1;
        }
        let mut inv = vec![0; wires];
        for (w, &p) in perm.iter().enumerate() {
            inv[p - 1] = w + 1;
        }
        Diagram::seq_all(wires, [permutation_diagram(&perm)?, core, permutation_diagram(&inv)?])
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctrls: Vec<String> = self.control_list().iter().map(|c| (c + 1).to_string()).collect();
        write!(f, "<{{{}}},{}>", ctrls.join(","), self.target + 1)
    }
}

/// A word of gates, applied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GcxCircuit {
    pub wires: usize,
    pub gates: Vec<Gate>,
}

impl GcxCircuit {
    pub fn new(wires: usize, gates: Vec<Gate>) -> Result<Self> {
        if let Some(g) = gates.iter().find(|g| g.max_wire() >= wires) {
            return Err(Error::Invalid(format!("{g} does not fit on {wires} wires")));
        }
        Ok(GcxCircuit { wires, gates })
    }

    pub fn apply(&self, state: u64) -> u64 {
        self.gates.iter().fold(state, |s, g| g.apply(self.wires, s))
    }

    /// The permutation of basis states, as images of `0..2^wires`.
    pub fn permutation(&self) -> Vec<u64> {
        (0..1u64 << self.wires).map(|s| self.apply(s)).collect()
    }

    pub fn to_diagram(&self) -> Result<Diagram> {
        let parts = self.gates.iter().map(|g| g.to_diagram(self.wires)).collect::<Result<Vec<_>>>()?;
        Diagram::seq_all(self.wires, parts)
    }
}

impl fmt::Display for GcxCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gates.is_empty() {
            return f.write_str("1");
        }
        for g in &self.gates {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Every gate on `wires` wires, grouped by target, then by control mask.
pub(crate) fn all_gates(wires: usize) -> Vec<Gate> {
    let mut out = Vec::new();
    for target in 0..wires {
        for mask in 0..1u64 << wires {
            if mask >> target & 1 == 0 {
                out.push(Gate { controls: mask, target });
            }
        }
    }
    out
}

/// I2: gates that commute because neither target is the other's control.
pub(crate) fn commute(a: &Gate, b: &Gate) -> bool {
    a != b && !b.has_control(a.target) && !a.has_control(b.target)
}

/// I3/I4 helper: for `a = ⟨X,x⟩` and `b = ⟨{x} ⊔ Y, y⟩` with `y ∉ X`, the
/// gate `⟨X ∪ Y, y⟩`.
pub(crate) fn control_passing(a: &Gate, b: &Gate) -> Option<Gate> {
    if !b.has_control(a.target) || a.has_control(b.target) {
        return None;
    }
    let y = b.controls & !(1 << a.target);
    Some(Gate { controls: a.controls | y, target: b.target })
}

/// I5, restricted to the sound case `X \ {y} = Y \ {x}` (a controlled
/// swap written three ways).
pub(crate) fn braid(a: &Gate, b: &Gate) -> bool {
    a.target != b.target
        && b.has_control(a.target)
        && a.has_control(b.target)
        && a.controls & !(1 << b.target) == b.controls & !(1 << a.target)
}

#[derive(Clone, Debug)]
pub struct ProbeConfig {
    /// Extra gates a rewrite path may pass through beyond `max_depth`.
    pub slack: usize,
    /// Refuse when the horizon holds more words than this.
    pub max_words: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { slack: 2, max_words: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `split`: same function, different rewrite classes. `unsound`: one
    /// rewrite class holding different functions.
    pub kind: &'static str,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub wires: usize,
    pub max_depth: usize,
    pub horizon: usize,
    pub circuits: u64,
    pub semantic_classes: usize,
    pub rewrite_classes: usize,
    pub agree_within_budget: bool,
    pub witnesses: Vec<Witness>,
}

const MAX_WITNESSES: usize = 32;

pub fn probe_cnot_conjecture(wires: usize, max_depth: usize) -> Result<ProbeReport> {
    probe_with(wires, max_depth, &ProbeConfig::default())
}

/// Enumerates every circuit of at most `max_depth` gates and compares the
/// partition by function with the partition generated by the identities
/// I1–I5, allowing intermediate words up to `max_depth + slack` gates.
pub fn probe_with(wires: usize, max_depth: usize, cfg: &ProbeConfig) -> Result<ProbeReport> {
    if wires == 0 || wires > 4 {
        return Err(Error::Budget(format!("probe supports 1 to 4 wires, got {wires}")));
    }
    if max_depth > 6 {
        return Err(Error::Budget(format!("probe supports depth at most 6, got {max_depth}")));
    }
    let gates = all_gates(wires);
    let horizon = max_depth + cfg.slack;
    let space = WordSpace::new(gates.len() as u64, horizon, cfg.max_words)
        .ok_or_else(|| Error::Budget(format!("more than {} words within {horizon} gates", cfg.max_words)))?;
    let index: BTreeMap<Gate, u64> = gates.iter().enumerate().map(|(i, g)| (*g, i as u64)).collect();
    let g = gates.len();
    let table = |f: &dyn Fn(&Gate, &Gate) -> Option<u64>| -> Vec<Option<u64>> {
        (0..g * g).map(|ab| f(&gates[ab / g], &gates[ab % g])).collect()
    };
    let comm = table(&|a, b| commute(a, b).then_some(0));
    let pass = table(&|a, b| control_passing(a, b).map(|c| index[&c]));
    let braids = table(&|a, b| braid(a, b).then_some(0));

    let edges: Vec<(u64, u64)> = (0..space.total)
        .into_par_iter()
        .flat_map_iter(|idx| {
            let w = space.decode(idx);
            let mut out = Vec::new();
            let mut push = |v: Vec<u64>| {
                if v.len() <= horizon {
                    out.push((idx, space.encode(&v)));
                }
            };
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                let ab = a as usize * g + b as usize;
                if a == b {
                    push(splice(&w, i, 2, &[]));
                }
                if comm[ab].is_some() {
                    push(splice(&w, i, 2, &[b, a]));
                }
                if let Some(c) = pass[ab] {
                    // ⟨X,x⟩⟨{x}⊔Y,y⟩ = ⟨X∪Y,y⟩⟨{x}⊔Y,y⟩⟨X,x⟩
                    push(splice(&w, i, 2, &[c, b, a]));
                }
                let ba = b as usize * g + a as usize;
                if let Some(c) = pass[ba] {
                    // ⟨{x}⊔Y,y⟩⟨X,x⟩ = ⟨X,x⟩⟨{x}⊔Y,y⟩⟨X∪Y,y⟩, here with a = ⟨{x}⊔Y,y⟩
                    push(splice(&w, i, 2, &[b, a, c]));
                }
                if i + 2 < w.len() && w[i + 2] == a && braids[ab].is_some() {
                    push(splice(&w, i, 3, &[b, a, b]));
                }
            }
            out
        })
        .collect();

    let mut uf = UnionFind::new(space.total as usize);
    for (a, b) in edges {
        uf.union(a as usize, b as usize);
    }

    let circuits = space.offsets[max_depth + 1];
    let perms: Vec<Vec<u64>> = (0..circuits)
        .into_par_iter()
        .map(|idx| {
            let word = space.decode(idx).iter().map(|&i| gates[i as usize]).collect();
            GcxCircuit { wires, gates: word }.permutation()
        })
        .collect();

    // first word of each class, in enumeration order
    let mut by_sem: BTreeMap<&[u64], BTreeMap<usize, u64>> = BTreeMap::new();
    let mut by_root: BTreeMap<usize, BTreeMap<&[u64], u64>> = BTreeMap::new();
    for idx in 0..circuits {
        let p = perms[idx as usize].as_slice();
        let root = uf.find(idx as usize);
        by_sem.entry(p).or_default().entry(root).or_insert(idx);
        by_root.entry(root).or_default().entry(p).or_insert(idx);
    }
    let show = |idx: u64| {
        GcxCircuit { wires, gates: space.decode(idx).iter().map(|&i| gates[i as usize]).collect() }.to_string()
    };
    let mut witnesses = BTreeSet::new();
    for roots in by_sem.values().filter(|r| r.len() > 1) {
        let mut firsts: Vec<u64> = roots.values().copied().collect();
        firsts.sort_unstable();
        for &other in &firsts[1..] {
            witnesses.insert((firsts[0], other, "split"));
        }
    }
    for sems in by_root.values().filter(|s| s.len() > 1) {
        let mut firsts: Vec<u64> = sems.values().copied().collect();
        firsts.sort_unstable();
        for &other in &firsts[1..] {
            witnesses.insert((firsts[0], other, "unsound"));
        }
    }
    let agree = witnesses.is_empty();
    let witnesses = witnesses
        .into_iter()
        .take(MAX_WITNESSES)
        .map(|(a, b, kind)| Witness { kind, left: show(a), right: show(b) })
        .collect();
    Ok(ProbeReport {
        wires,
        max_depth,
        horizon,
        circuits,
        semantic_classes: by_sem.len(),
        rewrite_classes: by_root.len(),
        agree_within_budget: agree,
        witnesses,
    })
}

fn splice(w: &[u64], at: usize, len: usize, with: &[u64]) -> Vec<u64> {
    let mut v = Vec::with_capacity(w.len() + with.len());
    v.extend_from_slice(&w[..at]);
    v.extend_from_slice(with);
    v.extend_from_slice(&w[at + len..]);
    v
}

/// Dense numbering of all words of length at most `horizon`: shorter words
/// first, then little-endian in the gate indices.
struct WordSpace {
    gates: u64,
    offsets: Vec<u64>,
    total: u64,
}

impl WordSpace {
    fn new(gates: u64, horizon: usize, max_words: u64) -> Option<Self> {
        let mut offsets = vec![0u64];
        let mut count = 1u64;
        for _ in 0..=horizon {
            let last = *offsets.last()?;
            offsets.push(last.checked_add(count)?);
            count = count.checked_mul(gates)?;
        }
        let total = *offsets.last()?;
        (total <= max_words).then_some(WordSpace { gates, offsets, total })
    }

    fn encode(&self, w: &[u64]) -> u64 {
        self.offsets[w.len()] + w.iter().rev().fold(0, |acc, &d| acc * self.gates + d)
    }

    fn decode(&self, idx: u64) -> Vec<u64> {
        let len = self.offsets.partition_point(|&o| o <= idx) - 1;
        let mut rest = idx - self.offsets[len];
        (0..len)
            .map(|_| {
                let d = rest % self.gates;
                rest /= self.gates;
                d
            })
            .collect()
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    // the smaller index becomes the root, so roots do not depend on edge order
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}
