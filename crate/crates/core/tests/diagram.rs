mod common;

use common::random_diagram;
use proptest::prelude::*;
use spancalc::diagram::*;
use spancalc::{Error, ParseErrorKind};

fn kind(text: &str) -> ParseErrorKind {
    match parse(text) {
        Err(Error::Parse(e)) => e.kind,
        other => panic!("expected a parse error for {text:?}, got {other:?}"),
    }
}

proptest! {
    #[test]
    fn serialize_parses_back(seed in any::<u64>(), dom in 0..=3usize) {
        let mut rng = common::rng(seed);
        let d = random_diagram(&mut rng, FragmentId::SpanF2.fragment(), dom, 0..=8, 4);
        prop_assert_eq!(parse(&d.serialize()).unwrap(), d);
    }

    #[test]
    fn permutation_diagrams_route_wires(perm in Just((1..=4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let d = permutation_diagram(&perm).unwrap();
        let f = spancalc::semantics::eval_boolean(&d).unwrap();
        for x in 0..16u64 {
            let mut y = 0;
            for (i, &p) in perm.iter().enumerate() {
                if x >> (3 - i) & 1 == 1 {
                    y |= 1 << (4 - p);
                }
            }
            prop_assert_eq!(f.eval_index(x), y);
        }
    }
}

#[test]
fn types() {
    let d = parse("(zcopy * id(1)) ; (id(1) * xmul)").unwrap();
    assert_eq!((d.dom(), d.cod()), (2, 2));
    assert_eq!(parse("gcx(3)").unwrap().dom(), 4);
    assert_eq!(parse("poly(x1*x2, 2)").unwrap().cod(), 2);
    assert_eq!((parse("zeroscalar").unwrap().dom(), parse("zeroscalar").unwrap().cod()), (0, 0));
}

#[test]
fn seq_binds_looser_than_tensor() {
    assert_eq!(parse("zcopy * id(1) ; id(1) * xmul").unwrap(), parse("(zcopy * id(1)) ; (id(1) * xmul)").unwrap());
}

#[test]
fn bindings_and_comments() {
    let prog = parse_program("# two gates\nlet c = cnot\nlet cc = c ; c\n").unwrap();
    assert_eq!(prog.get("cc").unwrap().dom(), 2);
    assert_eq!(parse("let c = cnot\nc ; c").unwrap(), parse("cnot ; cnot").unwrap());
}

#[test]
fn error_kinds() {
    assert_eq!(kind("zcopy ; zcopy"), ParseErrorKind::Arity);
    assert_eq!(kind("frobnicate"), ParseErrorKind::UnknownGenerator);
    assert_eq!(kind("(zcopy"), ParseErrorKind::Syntax);
    assert_eq!(kind(""), ParseErrorKind::Syntax);
}

#[test]
fn fragments() {
    let cnot = parse("cnot").unwrap();
    assert!(fragment_check(&cnot, FragmentId::IsoCb2.fragment()));
    // macros are admitted through their expansion
    assert!(fragment_check(&cnot, FragmentId::Cb2.fragment()));
    assert!(!fragment_check(&parse("zcopy").unwrap(), FragmentId::IsoCb2.fragment()));
    assert!(!fragment_check(&parse("not").unwrap(), FragmentId::SpanCb2.fragment()));
    assert_eq!(Fragment::by_name("SPAN_AFF").unwrap().id, FragmentId::SpanAff);
    assert!(Fragment::by_name("nope").is_none());
}

#[test]
fn macros_expand_fully() {
    for g in ["cnot", "not", "gcx(0)", "gcx(1)", "gcx(3)"] {
        let d = parse(g).unwrap();
        let e = expand_macros(&d);
        assert!(!e.contains_macros(), "{g}");
        assert_eq!((e.dom(), e.cod()), (d.dom(), d.cod()));
    }
}

#[test]
fn bad_permutations() {
    assert!(permutation_diagram(&[1, 1]).is_err());
    assert!(permutation_diagram(&[0, 1]).is_err());
    assert_eq!(permutation_diagram(&[2, 1]).unwrap(), Diagram::swap());
    assert_eq!(permutation_diagram(&[1, 2, 3]).unwrap(), Diagram::id(3));
}
