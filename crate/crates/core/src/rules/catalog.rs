//! Every equation of every fragment, instantiated as diagram pairs.

use serde::Serialize;

use super::probe::{all_gates, braid, commute, control_passing, Gate, GcxCircuit};
use super::RewriteRule;
use crate::boolpoly::{poly_add, poly_mul, AnfPoly};
use crate::diagram::{parse, permutation_diagram, Diagram, FragmentId, Generator};

use FragmentId::*;

/// Bounds for the parameterized families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogConfig {
    /// Widest circuit or box instantiated.
    pub max_wires: usize,
    /// Most variables in an instantiated polynomial box.
    pub max_vars: usize,
    /// Longest CNOT ladder in the sandwiched-ladder identities.
    pub ladder_len: usize,
}

impl Default for CatalogConfig {
    fn default() -> Self {
        CatalogConfig { max_wires: 3, max_vars: 3, ladder_len: 4 }
    }
}

impl CatalogConfig {
    /// Wire and variable bounds both set to `bound`.
    pub fn with_bound(bound: usize) -> Self {
        CatalogConfig { max_wires: bound, max_vars: bound, ..Self::default() }
    }
}

pub fn catalog() -> Vec<RewriteRule> {
    catalog_with(&CatalogConfig::default())
}

/// The rules whose home is `f`.
pub fn rule_set(f: FragmentId, cfg: &CatalogConfig) -> Vec<RewriteRule> {
    catalog_with(cfg).into_iter().filter(|r| r.fragment == f).collect()
}

pub fn catalog_with(cfg: &CatalogConfig) -> Vec<RewriteRule> {
    let mut c = Catalog(Vec::new());
    c.bialgebra();
    c.linear_relations();
    c.affine();
    c.boolean();
    c.circuit_identities(cfg);
    c.ladders(cfg);
    c.polynomial_boxes(cfg);
    c.0
}

struct Catalog(Vec<RewriteRule>);

fn d(src: &str) -> Diagram {
    parse(src).unwrap_or_else(|e| panic!("catalog term `{src}`: {e}"))
}

fn g(gen: Generator) -> Diagram {
    Diagram::gen(gen)
}

fn seq(n: usize, parts: impl IntoIterator<Item = Diagram>) -> Diagram {
    Diagram::seq_all(n, parts).expect("catalog composite is well typed")
}

/// `id(a) * x * id(b)` without empty identities.
fn pad(a: usize, x: Diagram, b: usize) -> Diagram {
    let mut parts = Vec::new();
    if a > 0 {
        parts.push(Diagram::id(a));
    }
    parts.push(x);
    if b > 0 {
        parts.push(Diagram::id(b));
    }
    Diagram::tensor_all(parts)
}

fn poly(p: &AnfPoly) -> Diagram {
    g(Generator::Poly(p.clone()))
}

fn gate(controls: &[usize], target: usize, wires: usize) -> Diagram {
    Gate::new(controls, target).and_then(|g| g.to_diagram(wires)).expect("gate fits")
}

/// A small fixed family of polynomials over at most `n` variables.
fn pool(n: usize) -> Vec<AnfPoly> {
    ["0", "1", "x1", "x1 + 1", "x1*x2", "x1 + x2", "x1*x2 + x3", "x1*x2*x3 + x2 + 1"]
        .iter()
        .filter_map(|s| AnfPoly::parse(s, Some(n)).ok())
        .collect()
}

fn nonconstant(n: usize) -> Vec<AnfPoly> {
    pool(n).into_iter().filter(|p| p.degree().unwrap_or(0) > 0).collect()
}

impl Catalog {
    fn add(&mut self, name: impl Into<String>, f: FragmentId, lhs: Diagram, rhs: Diagram, source: &str) {
        let name = name.into();
        let r = RewriteRule::new(name.clone(), f, lhs, rhs, source)
            .unwrap_or_else(|e| panic!("catalog rule `{name}` is malformed: {e}"));
        self.0.push(r);
    }

    fn text(&mut self, name: &str, f: FragmentId, lhs: &str, rhs: &str, source: &str) {
        self.add(name, f, d(lhs), d(rhs), source);
    }

    fn bialgebra(&mut self) {
        let cm = "commutative monoid";
        self.text("assoc", Epi, "(xmul * id(1)) ; xmul", "(id(1) * xmul) ; xmul", cm);
        self.text("comm", Epi, "swap ; xmul", "xmul", cm);
        self.text("unit", Cm, "(xunit * id(1)) ; xmul", "id(1)", cm);
        self.text("unit.right", Cm, "(id(1) * xunit) ; xmul", "id(1)", cm);
        let co = "cocommutative comonoid";
        self.text("assoc.op", Cb, "zcopy ; (zcopy * id(1))", "zcopy ; (id(1) * zcopy)", co);
        self.text("comm.op", Cb, "zcopy ; swap", "zcopy", co);
        self.text("unit.op", Cb, "zcopy ; (zdel * id(1))", "id(1)", co);
        let bi = "bialgebra laws of cb";
        self.text("bi.one", Cb, "xmul ; zcopy", "(zcopy * zcopy) ; (id(1) * swap * id(1)) ; (xmul * xmul)", bi);
        self.text("bi.two", Cb, "xmul ; zdel", "zdel * zdel", bi);
        self.text("bi.two-op", Cb, "xunit ; zcopy", "xunit * xunit", bi);
        self.text("extra", Cb, "xunit ; zdel", "id(0)", bi);
        self.text("hopf", Cb2, "zcopy ; xmul", "zdel ; xunit", "Hopf law of cb2");
        self.text(
            "derived.copy",
            Cb2,
            "(id(1) * xunit) ; cnot",
            "zcopy",
            "white comultiplication from cnot and a black unit",
        );
    }

    fn linear_relations(&mut self) {
        let iso = "generators of Iso(cb2)";
        self.text("cnot.one", IsoCb2, "cnot ; cnot", "id(2)", iso);
        self.text("cnot.two", IsoCb2, "(swap ; cnot ; swap) ; cnot ; (swap ; cnot ; swap)", "swap", iso);
        self.text(
            "cnot.three",
            IsoCb2,
            "(id(1) * cnot) ; (cnot * id(1)) ; (id(1) * cnot)",
            "(cnot * id(1)) ; (id(1) * swap) ; (cnot * id(1)) ; (id(1) * swap)",
            iso,
        );
        self.text(
            "cnot.four",
            IsoCb2,
            "(cnot * id(1)) ; (id(1) * (swap ; cnot ; swap))",
            "(id(1) * (swap ; cnot ; swap)) ; (cnot * id(1))",
            iso,
        );
        self.text(
            "cnot.five",
            IsoCb2,
            "((swap ; cnot ; swap) * id(1)) ; (id(1) * cnot)",
            "(id(1) * cnot) ; ((swap ; cnot ; swap) * id(1))",
            iso,
        );
        self.text("cnot.six", MonoCb2, "(xunit * id(1)) ; cnot", "xunit * id(1)", "generators of Mono(cb2)");
        self.text("bone", ParIsoCb2, "xunit ; xdel", "id(0)", "ParIso(cb2) distributive law");
        let frob = "special commutative Frobenius algebra";
        self.text("special", SpanCb2, "zcopy ; zmerge", "id(1)", frob);
        self.text("frob.white", SpanCb2, "(zcopy * id(1)) ; (id(1) * zmerge)", "zmerge ; zcopy", frob);
        self.text("frob.white.right", SpanCb2, "(id(1) * zcopy) ; (zmerge * id(1))", "zmerge ; zcopy", frob);
        self.text("frob.black", SpanCb2, "(xcopy * id(1)) ; (id(1) * xmul)", "xmul ; xcopy", frob);
        self.text("frob.black.right", SpanCb2, "(id(1) * xcopy) ; (xmul * id(1))", "xmul ; xcopy", frob);
        self.text(
            "derived.merge",
            SpanCb2,
            "cnot ; (id(1) * xdel)",
            "zmerge",
            "white multiplication from cnot and a black counit",
        );
    }

    fn affine(&mut self) {
        let aff = "affine generator pi";
        self.text("pi.copy", AffCb2, "pi ; zcopy", "pi * pi", aff);
        self.text("pi.delete", AffCb2, "pi ; zdel", "id(0)", aff);
        let iso = "generators of Iso(Aff cb2)";
        self.text("cnot.seven", IsoAff, "not ; not", "id(1)", iso);
        self.text("cnot.eight", IsoAff, "(not * id(1)) ; cnot", "cnot ; (not * not)", iso);
        self.text("cnot.nine", IsoAff, "(id(1) * not) ; cnot", "cnot ; (id(1) * not)", iso);
        let zero = "empty scalar of Iso(Aff cb2)+1";
        self.text("zero.one", IsoAffPlus1, "zeroscalar * zeroscalar", "zeroscalar", zero);
        self.text("zero.two", IsoAffPlus1, "zeroscalar * cnot", "zeroscalar * id(2)", zero);
        self.text("zero.three", IsoAffPlus1, "zeroscalar * swap", "zeroscalar * id(2)", zero);
        self.text("zero.four", IsoAffPlus1, "zeroscalar * not", "zeroscalar * id(1)", zero);
        self.text("zero.mono", MonoAffPlus1, "zeroscalar * xunit", "zeroscalar * (xunit ; not)", zero);
        let pariso = "ParIso(Aff cb2) idempotent of the empty set";
        self.text("zero.five", ParIsoAff, "xunit ; pidel", "zeroscalar", pariso);
        self.text("zero.five.dual", ParIsoAff, "pi ; xdel", "zeroscalar", pariso);
        self.text("zero.six", ParIsoAff, "zeroscalar * id(1)", "zeroscalar * (pidel ; pi)", pariso);
    }

    fn boolean(&mut self) {
        self.text("antispecial", LF2x, "zcopy ; and", "id(1)", "L_F2x multiplicative monoid");
        let rel = "cb laws relabelled to the multiplicative monoid";
        self.text("relabel.assoc", LF2x, "(and * id(1)) ; and", "(id(1) * and) ; and", rel);
        self.text("relabel.comm", LF2x, "swap ; and", "and", rel);
        self.text("relabel.unit", LF2x, "(pi * id(1)) ; and", "id(1)", rel);
        self.text("relabel.bi.one", LF2x, "and ; zcopy", "(zcopy * zcopy) ; (id(1) * swap * id(1)) ; (and * and)", rel);
        self.text("relabel.bi.two", LF2x, "and ; zdel", "zdel * zdel", rel);
        self.text("relabel.bi.two-op", LF2x, "pi ; zcopy", "pi * pi", rel);
        self.text("relabel.extra", LF2x, "pi ; zdel", "id(0)", rel);
        let ring = "f2 distributive law";
        self.text(
            "ring.mul",
            F2,
            "(xmul * id(1)) ; and",
            "(id(2) * zcopy) ; (id(1) * swap * id(1)) ; (and * and) ; xmul",
            ring,
        );
        self.text("ring.unit", F2, "(xunit * id(1)) ; and", "zdel ; xunit", ring);
    }

    /// I1–I5 on up to `max_wires` wires, plus the zero-control law of Mono(f2).
    fn circuit_identities(&mut self, cfg: &CatalogConfig) {
        let src = "generalized controlled-not identities";
        for w in 1..=cfg.max_wires {
            let gates = all_gates(w);
            let word = |gs: &[Gate]| GcxCircuit { wires: w, gates: gs.to_vec() };
            let diag = |gs: &[Gate]| word(gs).to_diagram().expect("gates fit");
            for a in &gates {
                self.add(format!("I1[{w}]{}", word(&[*a, *a])), IsoF2, diag(&[*a, *a]), Diagram::id(w), src);
            }
            for (i, a) in gates.iter().enumerate() {
                for b in &gates[i + 1..] {
                    if commute(a, b) {
                        self.add(format!("I2[{w}]{}", word(&[*a, *b])), IsoF2, diag(&[*a, *b]), diag(&[*b, *a]), src);
                    }
                }
            }
            for a in &gates {
                for b in &gates {
                    if let Some(c) = control_passing(a, b) {
                        self.add(
                            format!("I3[{w}]{}", word(&[*a, *b])),
                            IsoF2,
                            diag(&[*a, *b]),
                            diag(&[c, *b, *a]),
                            src,
                        );
                        self.add(
                            format!("I4[{w}]{}", word(&[*b, *a])),
                            IsoF2,
                            diag(&[*b, *a]),
                            diag(&[*a, *b, c]),
                            src,
                        );
                    }
                }
            }
            for (i, a) in gates.iter().enumerate() {
                for b in &gates[i + 1..] {
                    if braid(a, b) {
                        self.add(
                            format!("I5[{w}]{}", word(&[*a, *b, *a])),
                            IsoF2,
                            diag(&[*a, *b, *a]),
                            diag(&[*b, *a, *b]),
                            src,
                        );
                    }
                }
            }
        }
        for n in 0..cfg.max_wires.saturating_sub(1) {
            let k = n + 1;
            self.add(
                format!("mono.ftwo[{k}]"),
                MonoF2,
                seq(k, [g(Generator::XUnit).par(&Diagram::id(k)), g(Generator::Gcx(k))]),
                g(Generator::XUnit).par(&Diagram::id(k)),
                "zero control of Mono(f2)",
            );
        }
    }

    /// Black units and counits sandwiching a CNOT ladder, and the pi variant.
    fn ladders(&mut self, cfg: &CatalogConfig) {
        for n in 1..=cfg.ladder_len {
            for pi in [false, true] {
                let (state, mid_effect, mid_state) = if pi {
                    (Generator::Pi, Generator::PiDel, Generator::Pi)
                } else {
                    (Generator::XUnit, Generator::XDel, Generator::XUnit)
                };
                let lhs = seq(
                    n,
                    std::iter::once(pad(n, g(state.clone()), 0))
                        .chain((0..n).map(|i| gate(&[i], n, n + 1)))
                        .chain([pad(n, g(Generator::XDel), 0)]),
                );
                let up = (0..n - 1).map(|i| gate(&[i], n - 1, n));
                let down = (0..n - 1).rev().map(|i| gate(&[i], n - 1, n));
                let rhs = seq(n, up.chain([pad(n - 1, g(mid_effect), 0), pad(n - 1, g(mid_state), 0)]).chain(down));
                let (name, f) = if pi { ("remark.pi-ladder", ParIsoAff) } else { ("remark.ladder", ParIsoCb2) };
                self.add(format!("{name}[{n}]"), f, lhs, rhs, "CNOT ladder sandwiched by black units and counits");
            }
        }
    }

    fn polynomial_boxes(&mut self, cfg: &CatalogConfig) {
        let sub = "sub2 polynomial boxes";
        for n in 1..=cfg.max_vars {
            self.add(format!("sub.one[{n}]"), Sub2, poly(&AnfPoly::one(n)), Diagram::id(n), sub);
            let ps = pool(n);
            for p in &ps {
                for r in &ps {
                    let pr = poly_mul(p, r).expect("same variables");
                    self.add(format!("sub.two[{n}]({p};{r})"), Sub2, seq(n, [poly(r), poly(p)]), poly(&pr), sub);
                }
                self.add(format!("sub.quotient[{n}]({p})"), Sub2, seq(n, [poly(p), poly(p)]), poly(p), sub);
            }
        }
        for n in 1..cfg.max_vars {
            for m in 1..=cfg.max_vars - n {
                for p in nonconstant(n).iter().take(2) {
                    for q in nonconstant(m).iter().take(2) {
                        let pq = poly_mul(&p.lift(n + m, 0).unwrap(), &q.lift(n + m, n).unwrap()).unwrap();
                        self.add(format!("sub.three[{n},{m}]({p};{q})"), Sub2, poly(p).par(&poly(q)), poly(&pq), sub);
                    }
                }
            }
        }

        let subiso = "subIso f2";
        for t in 2..=cfg.max_vars {
            for a in 0..=t - 2 {
                let sw = pad(a, Diagram::swap(), t - 2 - a);
                let mut perm: Vec<usize> = (0..t).collect();
                perm.swap(a, a + 1);
                for p in nonconstant(t).iter().take(3) {
                    let q = p.rename(&perm, t).unwrap();
                    self.add(
                        format!("subiso.one[{a},{t}]({p})"),
                        SubIsoF2,
                        seq(t, [sw.clone(), poly(p)]),
                        seq(t, [poly(&q), sw.clone()]),
                        subiso,
                    );
                }
            }
        }
        for total in 1..=cfg.max_wires {
            for m in 0..total {
                for n in 0..total - m {
                    let k = total - n - m - 1;
                    let gen = match m {
                        0 => Generator::Not,
                        1 => Generator::Cnot,
                        _ => Generator::Gcx(m),
                    };
                    let gx = pad(n, g(gen), k);
                    let t = n + m;
                    let mut product = AnfPoly::one(total);
                    for c in n..n + m {
                        product = poly_mul(&product, &AnfPoly::var(total, c)).unwrap();
                    }
                    for q in nonconstant(total).iter().take(2) {
                        let args: Vec<AnfPoly> = (0..total)
                            .map(|i| {
                                if i == t {
                                    poly_add(&AnfPoly::var(total, i), &product).unwrap()
                                } else {
                                    AnfPoly::var(total, i)
                                }
                            })
                            .collect();
                        let q2 = crate::boolpoly::substitute_with_vars(q, &args, total).unwrap();
                        self.add(
                            format!("subiso.two[{n},{m},{k}]({q})"),
                            SubIsoF2,
                            seq(total, [gx.clone(), poly(q)]),
                            seq(total, [poly(&q2), gx.clone()]),
                            subiso,
                        );
                    }
                }
            }
        }
        for n in 1..cfg.max_wires {
            for m in 1..=cfg.max_wires - n {
                let perm: Vec<usize> = (0..m).map(|i| n + i + 1).chain((0..n).map(|j| j + 1)).collect();
                let sigma = permutation_diagram(&perm).unwrap();
                for r in nonconstant(n).iter().take(2) {
                    self.add(
                        format!("subiso.three[{n},{m}]({r})"),
                        SubIsoF2,
                        seq(n + m, [sigma.clone(), poly(r).par(&Diagram::id(m))]),
                        seq(n + m, [Diagram::id(m).par(&poly(r)), sigma.clone()]),
                        subiso,
                    );
                }
            }
        }

        for t in 1..=cfg.max_vars {
            for n in 0..t {
                let m = t - 1 - n;
                if n + m == 0 {
                    continue;
                }
                let unit = pad(n, g(Generator::XUnit), m);
                let perm: Vec<usize> = (0..t)
                    .map(|i| {
                        if i < n {
                            i
                        } else if i == n {
                            0
                        } else {
                            i - 1
                        }
                    })
                    .collect();
                for p in nonconstant(t).iter().take(3) {
                    let q = p.restrict(n, false).rename(&perm, t - 1).unwrap();
                    self.add(
                        format!("subinj[{n},{m}]({p})"),
                        SubMonoF2,
                        seq(t - 1, [unit.clone(), poly(p)]),
                        seq(t - 1, [poly(&q), unit.clone()]),
                        "subMono f2 distributive law",
                    );
                }
            }
        }

        for n in 1..=cfg.max_vars {
            for p in pool(n) {
                let gates = p.masks().map(|mask| Gate { controls: mask, target: n }).collect();
                let oracle = GcxCircuit::new(n + 1, gates).and_then(|c| c.to_diagram()).unwrap();
                let lhs = seq(n, [pad(n, g(Generator::XUnit), 0), oracle, pad(n, g(Generator::XDel), 0)]);
                let rhs = poly(&poly_add(&p, &AnfPoly::one(n)).unwrap());
                self.add(
                    format!("oracle.eq[{n}]({p})"),
                    ParIsoF2,
                    lhs,
                    rhs,
                    "oracle with the target capped by black unit and counit",
                );
            }
        }
    }
}
