use proptest::prelude::*;
use spancalc::boolpoly::*;

fn poly(n: usize) -> impl Strategy<Value = AnfPoly> {
    proptest::collection::vec(any::<bool>(), 1 << n)
        .prop_map(move |keep| AnfPoly::from_masks(n, (0..1u64 << n).filter(|&m| keep[m as usize])).unwrap())
}

fn table(p: &AnfPoly) -> Vec<bool> {
    p.to_truth_table()
}

proptest! {
    #[test]
    fn ring_operations_are_pointwise(p in poly(4), q in poly(4)) {
        let (tp, tq) = (table(&p), table(&q));
        let sum = table(&poly_add(&p, &q).unwrap());
        let prod = table(&poly_mul(&p, &q).unwrap());
        let or = table(&or_combine(&p, &q).unwrap());
        for x in 0..16 {
            prop_assert_eq!(sum[x], tp[x] ^ tq[x]);
            prop_assert_eq!(prod[x], tp[x] & tq[x]);
            prop_assert_eq!(or[x], tp[x] | tq[x]);
        }
    }

    #[test]
    fn multiplication_is_idempotent(p in poly(4)) {
        prop_assert_eq!(poly_mul(&p, &p).unwrap(), p);
    }

    #[test]
    fn display_parses_back(p in poly(4)) {
        prop_assert_eq!(AnfPoly::parse(&p.to_string(), Some(4)).unwrap(), p);
    }

    #[test]
    fn count_solutions_matches_the_table(p in poly(5)) {
        prop_assert_eq!(count_solutions(&p), table(&p).iter().filter(|&&b| b).count() as u128);
    }

    #[test]
    fn restriction_fixes_a_variable(p in poly(3), i in 0usize..3, c in any::<bool>()) {
        let r = p.restrict(i, c);
        for x in 0..8u64 {
            let bit = 1 << (2 - i);
            let y = if c { x | bit } else { x & !bit };
            prop_assert_eq!(r.eval_index(x), p.eval_index(y));
        }
    }

    #[test]
    fn substitution_composes_functions(p in poly(2), a in poly(3), b in poly(3)) {
        let s = substitute(&p, &[a.clone(), b.clone()]).unwrap();
        for x in 0..8u64 {
            let inner = ((a.eval_index(x) as u64) << 1) | b.eval_index(x) as u64;
            prop_assert_eq!(s.eval_index(x), p.eval_index(inner));
        }
    }

    #[test]
    fn oracle_is_an_involutive_bijection(p in poly(3), q in poly(3)) {
        let f = BooleanFunc::new(3, vec![p, q]).unwrap();
        let o = oracle(&f).unwrap();
        prop_assert!(o.is_bijection());
        prop_assert_eq!(o.then(&o).unwrap(), BooleanFunc::identity(5));
    }
}

#[test]
fn parse_and_display() {
    let p = AnfPoly::parse("x1*x2 + x3 + 1", Some(3)).unwrap();
    assert_eq!(p.degree(), Some(2));
    assert_eq!(AnfPoly::parse("x2*x1 + x1*x2", Some(2)).unwrap(), AnfPoly::zero(2));
    assert!(AnfPoly::parse("x4", Some(3)).is_err());
    assert!(AnfPoly::parse("x1 +", None).is_err());
    assert_eq!(AnfPoly::zero(2).to_string(), "0");
    assert_eq!(AnfPoly::one(2).to_string(), "1");
}

#[test]
fn truth_table_examples() {
    let and = from_truth_table(&[false, false, false, true]).unwrap();
    assert_eq!(and.to_string(), "x1*x2");
    let first = from_truth_table(&[false, false, true, true]).unwrap();
    assert_eq!(first, AnfPoly::var(2, 0));
    assert!(from_truth_table(&[true, false, true]).is_err());
}

#[test]
fn non_bijections_are_detected() {
    let and = BooleanFunc::new(2, vec![AnfPoly::parse("x1*x2", Some(2)).unwrap()]).unwrap();
    assert!(!and.is_bijection());
    let swap = BooleanFunc::new(2, vec![AnfPoly::var(2, 1), AnfPoly::var(2, 0)]).unwrap();
    assert!(swap.is_bijection());
    assert_eq!(swap.eval_index(0b10), 0b01);
}
