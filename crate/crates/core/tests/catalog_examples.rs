mod common;

use gklab::catalog::{self, builders, corpus::corpus, matrices, search};
use gklab::element::Matrix;
use gklab::frobenius::{fingerprint, frobenius_kind, FrobeniusKind};
use gklab::prime_graph::{gk_graph, PrimeGraph};
use gklab::rationality::{is_cut_group, is_rational_group};
use gklab::structure::is_solvable;

/// Solvable cut groups in the seed-1 corpus of 200 groups up to order 2000.
const SOLVABLE_CUT_IN_CORPUS: usize = 113;

#[test]
fn builder_examples() {
    let c6 = builders::cyclic(6).unwrap();
    assert_eq!(c6.order(), 6);
    assert_eq!(gk_graph(&c6), PrimeGraph::parse_literal("2-3").unwrap());
    let s4 = builders::sym(4).unwrap();
    assert_eq!(s4.order(), 24);
    assert!(is_rational_group(&s4) && common::is_rational_brute(&s4));
    let sl = builders::sl2_3().unwrap();
    assert_eq!(sl.order(), 24);
    assert_eq!(sl.element_orders().iter().filter(|&&o| o == 2).count(), 1);
}

#[test]
fn named_matrices() {
    let a = matrices::reduced("A", 2).unwrap();
    let ga = gklab::group::enumerate(&[a.into()], 100).unwrap();
    assert_eq!(common::order_by_powers(&ga, ga.generators()[0]), 7);
    let cd = ["C", "D"].map(|n| matrices::reduced(n, 2).unwrap().into());
    assert_eq!(gklab::group::enumerate(&cd, 100).unwrap().order(), 6);
    let ef = ["E", "F"].map(|n| matrices::reduced(n, 2).unwrap().into());
    let g = gklab::group::enumerate(&ef, 100).unwrap();
    assert_eq!(g.order(), 20);
    assert_eq!(fingerprint(&g), fingerprint(&builders::c5_semi_c4().unwrap()));
}

#[test]
fn catalog_entry_examples() {
    let e = catalog::lookup("fig3.e").unwrap().build().unwrap();
    assert_eq!(e.order(), 200);
    assert_eq!(gk_graph(&e), PrimeGraph::parse_literal("2,5").unwrap());
    assert!(is_cut_group(&e) && is_rational_group(&e));
    assert_eq!(frobenius_kind(&e).unwrap().kind, FrobeniusKind::Frobenius);

    let l = catalog::lookup("fig3.l").unwrap().build().unwrap();
    assert_eq!(l.order(), 42);
    assert_eq!(gk_graph(&l), PrimeGraph::parse_literal("2-3,7").unwrap());
    assert!(is_cut_group(&l) && !is_rational_group(&l));

    let w = catalog::lookup("twofrob.l").unwrap().build().unwrap();
    assert_eq!(w.order(), 2688);
    assert_eq!(gk_graph(&w), PrimeGraph::parse_literal("2-3,7").unwrap());
    assert!(is_cut_group(&w));
    assert_eq!(frobenius_kind(&w).unwrap().kind, FrobeniusKind::TwoFrobenius);
}

#[test]
fn experimental_binary_octahedral() {
    let e = catalog::lookup("experimental.2s4").unwrap();
    assert!(e.experimental);
    let g = e.build().unwrap();
    assert_eq!(g.order(), 48);
    assert!(!is_cut_group(&g));
    assert_eq!(gk_graph(&g), PrimeGraph::parse_literal("2-3").unwrap());
}

#[test]
fn catalog_names_are_unique() {
    let names: Vec<&str> = catalog::catalog().iter().map(|e| e.name).collect();
    let set: std::collections::BTreeSet<&str> = names.iter().copied().collect();
    assert_eq!(names.len(), set.len());
}

fn same(a: &[Matrix], b: &[Matrix]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}

#[test]
fn pinned_actions_are_first_search_hits() {
    let cases = [
        (5, builders::c3_semi_c4().unwrap(), catalog::c3c4_on_f5()),
        (5, builders::sl2_3().unwrap(), catalog::sl23_on_f5()),
        (7, builders::sl2_3().unwrap(), catalog::sl23_on_f7()),
        (7, builders::q8_times_c3().unwrap(), catalog::q8c3_on_f7()),
        (3, builders::cyclic(4).unwrap(), catalog::c4_on_f3()),
        (3, builders::quaternion8().unwrap(), catalog::q8_on_f3()),
    ];
    for (p, h, pinned) in cases {
        let found = search::find_fixed_point_free(p, 2, &fingerprint(&h), true).unwrap();
        assert!(same(&found, &pinned), "{} over F_{p}", h.label());
    }
    assert!(same(&search::find_binary_octahedral().unwrap(), &catalog::binary_octahedral()));
}

#[test]
fn corpus_contract() {
    let a = corpus(1, 1, 2000);
    let b = corpus(1, 1, 2000);
    assert_eq!(a.len(), 1);
    assert_eq!(a[0].label(), b[0].label());
    assert_eq!(fingerprint(&a[0]), fingerprint(&b[0]));

    let groups = corpus(1, 200, 2000);
    assert_eq!(groups.len(), 200);
    assert!(groups.iter().all(|g| g.order() <= 2000));
    let solvable_cut = groups
        .iter()
        .filter(|g| is_solvable(g) && is_cut_group(g))
        .count();
    assert!(solvable_cut >= 50);
    assert_eq!(solvable_cut, SOLVABLE_CUT_IN_CORPUS);
    assert!(corpus(7, 50, 300).iter().all(|g| g.order() <= 300));
}
