mod common;

use common::{random_diagram, relation};
use proptest::prelude::*;
use spancalc::diagram::{expand_macros, parse, Diagram, Fragment, FragmentId};
use spancalc::semantics::*;
use spancalc::Error;

fn d(s: &str) -> Diagram {
    parse(s).unwrap()
}

fn diagram_in(f: FragmentId) -> impl Strategy<Value = Diagram> {
    (any::<u64>(), 0..=3usize).prop_map(move |(seed, dom)| {
        let mut rng = common::rng(seed);
        random_diagram(&mut rng, f.fragment(), dom, 1..=6, 4)
    })
}

proptest! {
    #[test]
    fn consistency_holds_on_linear_diagrams(d in diagram_in(FragmentId::SpanCb2)) {
        let report = consistency_check(&d);
        prop_assert!(report.all_hold(), "{:?}", report.violations().collect::<Vec<_>>());
    }

    #[test]
    fn consistency_holds_on_affine_diagrams(d in diagram_in(FragmentId::SpanAff)) {
        prop_assert!(consistency_check(&d).all_hold());
    }

    #[test]
    fn counting_matches_the_relation(d in diagram_in(FragmentId::SpanF2)) {
        prop_assert_eq!(eval_counting::<u64>(&d).unwrap().to_rows(), relation(&d));
    }

    #[test]
    fn macros_do_not_change_meaning(d in diagram_in(FragmentId::ParF2)) {
        let e = expand_macros(&d);
        prop_assert!(!e.contains_macros());
        prop_assert_eq!(eval_counting::<u64>(&d).unwrap(), eval_counting::<u64>(&e).unwrap());
    }

    #[test]
    fn boolean_semantics_is_the_graph(d in diagram_in(FragmentId::IsoF2)) {
        let f = eval_boolean(&d).unwrap();
        prop_assert!(f.is_bijection());
        prop_assert_eq!(f.indicator::<u64>(), eval_counting::<u64>(&d).unwrap());
    }

    #[test]
    fn partial_fragments_stay_partial(d in diagram_in(FragmentId::ParAff)) {
        prop_assert!(eval_partial::<u64>(&d, FragmentId::ParAff.fragment()).is_ok());
    }

    #[test]
    fn big_naturals_agree(d in diagram_in(FragmentId::Cb)) {
        let small = eval_path_counting::<u64>(&d).unwrap();
        let big = eval_path_counting::<num_bigint::BigUint>(&d).unwrap();
        prop_assert_eq!(big, small.convert().unwrap());
    }
}

#[test]
fn counting_examples() {
    let and = eval_counting::<u64>(&d("and")).unwrap();
    assert_eq!(and.to_rows(), vec![vec![1, 1, 1, 0], vec![0, 0, 0, 1]]);
    assert_eq!(eval_counting::<u64>(&d("id(1)")).unwrap().to_rows(), vec![vec![1, 0], vec![0, 1]]);
    let hopf = eval_counting::<u64>(&d("zcopy ; xmul")).unwrap();
    assert_eq!(hopf.to_rows(), vec![vec![1, 1], vec![0, 0]]);
    let scalar = eval_counting::<u64>(&d("zunit ; zdel")).unwrap();
    assert_eq!(scalar.to_rows(), vec![vec![2]]);
}

#[test]
fn path_counting_is_not_f2() {
    // zcopy ; xmul has two paths, which the Hopf law collapses mod 2
    let p = eval_path_counting::<u64>(&d("zcopy ; xmul")).unwrap();
    assert_eq!(p.to_rows(), vec![vec![2]]);
    assert_eq!(eval_f2_matrix(&d("zcopy ; xmul")).unwrap().to_rows(), vec![vec![0]]);
}

#[test]
fn disallowed_generators() {
    assert!(matches!(eval_path_counting::<u64>(&d("pi")), Err(Error::Disallowed { .. })));
    assert!(eval_path_counting::<u64>(&d("cnot")).is_ok());
    assert!(matches!(eval_f2_matrix(&d("pi")), Err(Error::Disallowed { .. })));
    assert!(matches!(eval_linear_span(&d("not")), Err(Error::Disallowed { .. })));
    assert!(matches!(eval_boolean(&d("zunit")), Err(Error::Disallowed { .. })));
}

#[test]
fn partial_validation() {
    let f = FragmentId::ParIsoCb2.fragment();
    assert!(eval_partial::<u64>(&d("xdel"), f).is_ok());
    assert!(matches!(eval_partial::<u64>(&d("zcopy"), f), Err(Error::Disallowed { .. })));
    let m = eval_counting::<u64>(&d("xmul")).unwrap();
    assert!(validate_partial(&m, spancalc::diagram::Partiality::Function).is_ok());
    assert!(validate_partial(&m, spancalc::diagram::Partiality::Injection).is_err());
}

#[test]
fn deciding_equality() {
    let cb2 = FragmentId::Cb2.fragment();
    assert!(decide_equal(&d("zcopy ; xmul"), &d("zdel ; xunit"), cb2).unwrap());
    let cb = FragmentId::Cb.fragment();
    assert!(!decide_equal(&d("zcopy ; xmul"), &d("zdel ; xunit"), cb).unwrap());
    let aff = FragmentId::AffCb2.fragment();
    assert!(!decide_equal(&d("pi"), &d("xunit"), aff).unwrap());
    assert!(matches!(
        equal_under(&d("id(1)"), &d("id(1)"), SemanticsKind::PathCounting, aff),
        Err(Error::Inapplicable { .. })
    ));
    assert!(decide_equal(&d("id(1)"), &d("id(2)"), aff).is_err());
}

#[test]
fn every_fragment_lists_its_designated_semantics() {
    for f in Fragment::all() {
        assert!(f.applicable(f.designated), "{}", f.name);
    }
}

#[test]
fn semantics_names_round_trip() {
    for k in SemanticsKind::ALL {
        assert_eq!(k.name().parse::<SemanticsKind>().unwrap(), k);
    }
    assert!("nope".parse::<SemanticsKind>().is_err());
}
