mod common;

use common::{random_diagram, relation};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use spancalc::diagram::{parse, Diagram, FragmentId};
use spancalc::rules::*;
use spancalc::semantics::{decide_equal, eval_affine_span, eval_boolean};
use spancalc::Error;

fn rule(name: &str) -> RewriteRule {
    catalog().into_iter().find(|r| r.name == name).unwrap_or_else(|| panic!("no rule {name}"))
}

fn d(s: &str) -> Diagram {
    parse(s).unwrap()
}

#[test]
fn every_catalog_rule_verifies() {
    let rules = catalog();
    let reports = verify_catalog(&rules, None).unwrap();
    let failed: Vec<_> = reports.iter().filter(|r| !r.verified).collect();
    for r in &failed {
        eprintln!("{} [{}]: {:?}", r.name, r.fragment, r.failures);
    }
    assert!(failed.is_empty(), "{} of {} rules failed", failed.len(), rules.len());
    let names = |v: Vec<&str>| v.join(",");
    assert_eq!(
        names(reports.iter().map(|r| r.name.as_str()).collect()),
        names(rules.iter().map(|r| r.name.as_str()).collect())
    );
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let rules = catalog();
    assert_eq!(verify_catalog(&rules, Some(1)).unwrap(), verify_catalog(&rules, Some(4)).unwrap());
}

#[test]
fn named_rules_verify() {
    for name in ["hopf", "zero.five", "cnot.one", "unit"] {
        assert!(verify_rule(&rule(name)), "{name}");
    }
}

#[test]
fn corrupted_rules_fail() {
    for name in ["hopf", "cnot.two", "zero.five", "bi.one", "cnot.six"] {
        let mut r = rule(name);
        r.rhs = Diagram::id(r.lhs.dom());
        if r.lhs.dom() != r.lhs.cod() {
            r.rhs = Diagram::tensor_all([Diagram::id(0)]);
        }
        let report = check_rule(&r);
        assert!(!report.verified, "{name} still verifies");
        assert!(!report.failures.is_empty());
    }
}

#[test]
fn ill_formed_rules_are_rejected() {
    let err = RewriteRule::new("bad", FragmentId::IsoCb2, d("cnot"), d("id(1)"), "");
    assert!(matches!(err, Err(Error::Shape(_))));
    let err = RewriteRule::new("bad", FragmentId::IsoCb2, d("zcopy ; xmul"), d("id(1)"), "");
    assert!(matches!(err, Err(Error::Disallowed { .. })));
}

#[test]
fn catalog_is_large_and_uniquely_named() {
    let rules = catalog();
    assert!(rules.len() >= 40);
    let mut names: Vec<_> = rules.iter().map(|r| r.name.clone()).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), rules.len());
    assert!(catalog_with(&CatalogConfig::with_bound(2)).len() < rules.len());
}

#[test]
fn apply_hopf_at_the_root() {
    let out = apply_rule(&d("zcopy ; xmul"), &rule("hopf"), &Position::root()).unwrap();
    assert_eq!(out, d("zdel ; xunit"));
}

#[test]
fn apply_unit() {
    let out = apply_rule(&d("(xunit * id(1)) ; xmul"), &rule("unit"), &Position::root()).unwrap();
    assert_eq!(out, d("id(1)"));
}

#[test]
fn apply_inside_a_chain() {
    let hopf = rule("hopf");
    let host = d("xmul ; zcopy ; xmul ; zcopy");
    let found = find_matches(&host, &hopf);
    assert_eq!(found, vec![Position { path: vec![], window: Some(1) }]);
    let out = apply_rule(&host, &hopf, &found[0]).unwrap();
    assert_eq!(out, d("xmul ; zdel ; xunit ; zcopy"));
}

#[test]
fn apply_under_a_tensor() {
    let cnot1 = rule("cnot.one");
    let host = d("(cnot ; cnot) * id(1)");
    let found = find_matches(&host, &cnot1);
    assert_eq!(found.len(), 1);
    assert_eq!(apply_rule(&host, &cnot1, &found[0]).unwrap(), d("id(2) * id(1)"));
}

#[test]
fn apply_errors() {
    let hopf = rule("hopf");
    assert!(matches!(apply_rule(&d("xmul ; zcopy"), &hopf, &Position::root()), Err(Error::NoMatch(_))));
    let deep = Position { path: vec![7, 2], window: None };
    assert!(matches!(apply_rule(&d("zcopy ; xmul"), &hopf, &deep), Err(Error::NoMatch(_))));
    let late = Position { path: vec![], window: Some(5) };
    assert!(matches!(apply_rule(&d("zcopy ; xmul"), &hopf, &late), Err(Error::NoMatch(_))));
}

#[test]
fn reversed_rules_undo() {
    let hopf = rule("hopf");
    let there = apply_rule(&d("zcopy ; xmul"), &hopf, &Position::root()).unwrap();
    let back = apply_rule(&there, &hopf.reversed(), &Position::root()).unwrap();
    assert_eq!(back, d("zcopy ; xmul"));
}

/// Builds a host diagram containing the lhs of `r` somewhere.
fn host_for<R: Rng>(rng: &mut R, r: &RewriteRule) -> Diagram {
    let f = r.fragment.fragment();
    let pad = rng.gen_range(0..=1);
    let mid = if rng.gen_bool(0.5) { r.lhs.par(&Diagram::id(pad)) } else { Diagram::id(pad).par(&r.lhs) };
    let before = random_diagram(rng, f, mid.dom(), 0..=0, 4);
    let after = random_diagram(rng, f, mid.cod(), 0..=2, 4);
    Diagram::seq_all(mid.dom(), [before, mid, after]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn rewriting_preserves_meaning(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let rules: Vec<_> = catalog().into_iter().filter(|r| r.lhs.dom() + r.lhs.cod() <= 6).collect();
        let r = rules.choose(&mut rng).unwrap();
        let r = if rng.gen_bool(0.5) { r.clone() } else { r.reversed() };
        let host = host_for(&mut rng, &r);
        let found = find_matches(&host, &r);
        prop_assert!(!found.is_empty(), "{} not found in {}", r.name, host);
        let pos = found.choose(&mut rng).unwrap();
        let out = apply_rule(&host, &r, pos).unwrap();
        prop_assert_eq!((out.dom(), out.cod()), (host.dom(), host.cod()));
        prop_assert!(decide_equal(&host, &out, r.fragment.fragment()).unwrap());
        prop_assert_eq!(relation(&host), relation(&out));
    }

    #[test]
    fn zero_normal_form_is_empty_and_equal(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let f = FragmentId::SpanAff.fragment();
        let dom = rng.gen_range(0..=3);
        let a = random_diagram(&mut rng, f, dom, 0..=4, 4);
        let zeroed = a.par(&d("zeroscalar"));
        let out = normalize_zero(&zeroed).unwrap();
        prop_assert!(decide_equal(&zeroed, &out, f).unwrap());
        prop_assert!(eval_affine_span(&out).unwrap().is_empty());
        prop_assert!(out.generators().iter().any(|g| g.name() == "zeroscalar"));
        // non-empty diagrams pass through untouched
        if !eval_affine_span(&a).unwrap().is_empty() {
            prop_assert_eq!(normalize_zero(&a).unwrap(), a);
        }
    }
}

#[test]
fn zero_normal_form_examples() {
    assert_eq!(normalize_zero(&d("zeroscalar * zeroscalar")).unwrap(), d("zeroscalar"));
    assert_eq!(normalize_zero(&d("zeroscalar * cnot")).unwrap(), d("zeroscalar * id(2)"));
    assert_eq!(normalize_zero(&d("xunit ; pidel")).unwrap(), d("zeroscalar"));
    assert_eq!(normalize_zero(&d("zeroscalar * xunit")).unwrap(), d("zeroscalar * xunit"));
    assert_eq!(normalize_zero(&d("zeroscalar * zcopy")).unwrap(), d("zeroscalar * id(1) * xunit"));
    assert_eq!(normalize_zero(&d("zeroscalar * xmul")).unwrap(), d("zeroscalar * id(1) * xdel"));
    assert_eq!(normalize_zero(&d("cnot")).unwrap(), d("cnot"));
    assert_eq!(zero_normal_form(2, 0), d("zeroscalar * (xdel * xdel)"));
}

#[test]
fn iwama_identities_are_sound_up_to_four_wires() {
    let rules = catalog_with(&CatalogConfig { max_wires: 4, ..CatalogConfig::default() });
    let mut seen = 0;
    for r in rules.iter().filter(|r| r.name.starts_with('I')) {
        assert_eq!(eval_boolean(&r.lhs).unwrap(), eval_boolean(&r.rhs).unwrap(), "{}", r.name);
        assert_eq!(relation(&r.lhs), relation(&r.rhs), "{}", r.name);
        seen += 1;
    }
    assert!(rules.iter().any(|r| r.name.starts_with("I5[4]")));
    assert!(seen > 100, "{seen}");
}

#[test]
fn ladders_hold_semantically() {
    for r in catalog().iter().filter(|r| r.name.starts_with("remark.")) {
        assert_eq!(relation(&r.lhs), relation(&r.rhs), "{}", r.name);
    }
}

#[test]
fn gates_act_as_described() {
    let g = Gate::new(&[1, 2], 0).unwrap();
    assert_eq!(g.to_string(), "<{2,3},1>");
    let f = eval_boolean(&g.to_diagram(3).unwrap()).unwrap();
    for x in 0..8u64 {
        assert_eq!(f.eval_index(x), g.apply(3, x));
    }
    assert_eq!(f.eval_index(0b011), 0b111);
}

#[test]
fn probe_small_cases() {
    let one = probe_cnot_conjecture(1, 4).unwrap();
    assert_eq!((one.semantic_classes, one.rewrite_classes), (2, 2));
    assert!(one.agree_within_budget);
    for depth in 0..=3 {
        let r = probe_cnot_conjecture(2, depth).unwrap();
        assert!(r.agree_within_budget, "depth {depth}");
        assert!(r.witnesses.is_empty());
    }
    let r = probe_cnot_conjecture(2, 2).unwrap();
    assert_eq!(r.circuits, 1 + 4 + 16);
}

#[test]
fn probe_refuses_large_budgets() {
    assert!(matches!(probe_cnot_conjecture(5, 1), Err(Error::Budget(_))));
    assert!(matches!(probe_cnot_conjecture(2, 7), Err(Error::Budget(_))));
    assert!(matches!(probe_with(4, 6, &ProbeConfig::default()), Err(Error::Budget(_))));
}
