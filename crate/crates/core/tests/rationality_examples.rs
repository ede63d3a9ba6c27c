mod common;

use std::collections::BTreeSet;

use gklab::catalog::{builders, corpus::corpus, resolve};
use gklab::group::direct_product;
use gklab::rationality::*;
use gklab::GroupHandle;

fn first_of_order(g: &GroupHandle, n: u32) -> u32 {
    (0..g.order() as u32).find(|&x| g.order_of(x) == n).unwrap()
}

#[test]
fn bg_examples() {
    let g = resolve("C5:C4").unwrap();
    assert_eq!(bg_order(&g, first_of_order(&g, 5)).unwrap(), 4);
    let h = resolve("C7:C3").unwrap();
    assert_eq!(bg_order(&h, first_of_order(&h, 7)).unwrap(), 3);
    assert_eq!(bg_order(&h, h.identity()).unwrap(), 1);
    for g in [g, h, resolve("SL(2,3)").unwrap()] {
        for x in 0..g.order() as u32 {
            let brute = common::normalizer_of_cyclic_order(&g, x) / common::centralizer_order(&g, x);
            assert_eq!(bg_order(&g, x).unwrap(), brute);
            assert_eq!(iota_exponents(&g, x).unwrap(), common::iota_by_classes(&g, x));
        }
    }
}

#[test]
fn element_verdicts() {
    for g in corpus(1, 40, 500) {
        for x in 0..g.order() as u32 {
            if g.order_of(x) <= 2 {
                assert_eq!(element_verdict(&g, x).unwrap(), Verdict::Rational);
            }
        }
    }
    let c3 = builders::cyclic(3).unwrap();
    let x = c3.generators()[0];
    assert_eq!(element_verdict(&c3, x).unwrap(), Verdict::InverseSemiRationalOnly);
    assert!(!is_rational_element(&c3, x).unwrap());
    let c5 = builders::cyclic(5).unwrap();
    assert_eq!(element_verdict(&c5, c5.generators()[0]).unwrap(), Verdict::Neither);
}

#[test]
fn group_verdicts() {
    for name in ["S3", "Q8", "fig3.e", "S4"] {
        let g = resolve(name).unwrap();
        assert!(is_rational_group(&g), "{name}");
        assert!(common::is_rational_brute(&g), "{name}");
    }
    let l = resolve("fig3.l").unwrap();
    assert!(is_cut_group(&l) && !is_rational_group(&l));
    assert!(common::is_cut_brute(&l) && !common::is_rational_brute(&l));
    let c5 = resolve("C5").unwrap();
    assert!(!is_cut_group(&c5) && !common::is_cut_brute(&c5));
}

#[test]
fn normalizer_oracle_examples() {
    let g = resolve("C7:C3").unwrap();
    assert_eq!(iota_exponents(&g, first_of_order(&g, 7)).unwrap(), [1, 2, 4]);
    assert!(cut_oracle_via_bg(&g));
    let s4 = resolve("S4").unwrap();
    for x in 0..24 {
        let n = s4.order_of(x) as u64;
        assert_eq!(iota_exponents(&s4, x).unwrap().len() as u64, gklab::arith::totient(n));
    }
    let c5 = resolve("C5").unwrap();
    assert_eq!(iota_exponents(&c5, c5.generators()[0]).unwrap(), [1]);
    assert!(!cut_oracle_via_bg(&c5));
}

fn product_agrees(g: &GroupHandle, h: &GroupHandle) -> bool {
    let direct = direct_product(g, h, 1 << 20).unwrap();
    let want = common::is_cut_brute(&direct);
    assert_eq!(is_cut_group(&direct), want);
    product_cut_predicate(g, h).unwrap() == want
}

#[test]
fn product_cut_examples() {
    let s3 = resolve("S3").unwrap();
    let c7c6 = resolve("C7:C6").unwrap();
    assert!(product_cut_predicate(&s3, &c7c6).unwrap());
    assert!(product_agrees(&s3, &c7c6));

    let c3 = resolve("C3").unwrap();
    assert!(product_cut_predicate(&c3, &c3).unwrap());
    assert!(product_agrees(&c3, &c3));

    let a = resolve("C5:C4").unwrap();
    let b = resolve("C7:C3").unwrap();
    assert_eq!(non_rational_orders(&a), BTreeSet::from([4]));
    assert_eq!(non_rational_orders(&b), BTreeSet::from([3, 7]));
    assert!(!product_cut_predicate(&a, &b).unwrap());
    assert!(product_agrees(&a, &b));

    assert_eq!(
        product_cut_predicate(&resolve("C5").unwrap(), &c3),
        Err(gklab::GroupError::PreconditionNotCut)
    );
}

#[test]
fn gcd_rule_misses_shared_exponent_sets() {
    // both factors have non-rational elements of order 12 with exponents {1, 5}
    let c4 = builders::cyclic(4).unwrap();
    let g = direct_product(&c4, &builders::dihedral(12).unwrap(), 1000).unwrap();
    let h = direct_product(&c4, &builders::c3_semi_c4().unwrap(), 1000).unwrap();
    assert!(non_rational_orders(&g).contains(&12) && non_rational_orders(&h).contains(&12));
    assert!(!product_cut_from_orders(&non_rational_orders(&g), &non_rational_orders(&h)));
    assert!(product_cut_predicate(&g, &h).unwrap());
    assert!(product_agrees(&g, &h));
}

#[test]
fn prime_power_criteria() {
    for g in corpus(1, 60, 1000).into_iter().filter(is_cut_group) {
        for x in 0..g.order() as u32 {
            match g.order_of(x) {
                5 => assert!(is_rational_element(&g, x).unwrap()),
                3 => assert!(prime_power_criterion_check(&g, x).unwrap()),
                _ => {}
            }
        }
    }
    let g = resolve("C7:C3").unwrap();
    let x = first_of_order(&g, 7);
    assert!(prime_power_criterion_check(&g, x).unwrap());
    assert!(is_inverse_semirational_element(&g, x).unwrap());
    let c12 = resolve("C12").unwrap();
    assert!(matches!(
        prime_power_criterion_check(&c12, c12.generators()[0]),
        Err(gklab::GroupError::NotApplicable(_))
    ));
}
