//! Named verification suites: catalog reproduction, the classifier table and
//! the corpus invariant scan.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::catalog::{self, builders, corpus::corpus, CatalogEntry};
use crate::frobenius::{
    fingerprint, frobenius_kind, match_frobenius_cut_family, FamilyMatch, FrobeniusDecomposition,
    FrobeniusKind,
};
use crate::group::{direct_product, GroupHandle};
use crate::prime_graph::{
    classify, component_diameters, components, gk_graph, higman_check, is_cut_spectrum,
    edge_implications_hold, product_graph, GraphClass, PrimeGraph, Status, FIGURE_GRAPHS,
};
use crate::rationality::{
    bg_order, cut_oracle_via_bg, iota_exponents, product_cut_predicate, rationality_report,
    is_cut_group, is_rational_group, RationalityReport,
};
use crate::structure::{
    class_predicates, core_p, derived_subgroup, exponent, fitting, is_abelian, is_cyclic,
    minimal_normal_subgroups, quotient, sylow, ClassPredicates,
};

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    /// Number of cases behind the row.
    pub checked: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub rows: Vec<CheckRow>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.rows.iter().filter(|r| r.passed).count()
    }

    pub fn table(&self) -> String {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(4);
        let mut out = String::new();
        for r in &self.rows {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{mark}  {:width$}  {}", r.name, r.detail);
        }
        let _ = writeln!(
            out,
            "{}: {}/{} passed",
            self.suite,
            self.pass_count(),
            self.rows.len()
        );
        out
    }
}

/// Builds a catalog entry and compares every recorded expectation.
pub fn verify_entry(e: &CatalogEntry) -> CheckRow {
    let g = match e.build() {
        Ok(g) => g,
        Err(err) => {
            return CheckRow {
                name: e.name.to_string(),
                passed: false,
                checked: 1,
                detail: format!("build failed: {err}"),
            }
        }
    };
    let mut problems = Vec::new();
    let x = &e.expected;
    if g.order() != x.order {
        problems.push(format!("order {} != {}", g.order(), x.order));
    }
    let graph = gk_graph(&g);
    let want = PrimeGraph::parse_literal(x.graph).expect("catalog literal");
    if graph != want {
        problems.push(format!("graph {graph} != {want}"));
    }
    let cut = is_cut_group(&g);
    if cut != x.is_cut {
        problems.push(format!("cut {cut}"));
    }
    let rational = is_rational_group(&g);
    if let Some(r) = x.is_rational {
        if rational != r {
            problems.push(format!("rational {rational}"));
        }
    }
    let decomposition = frobenius_kind(&g);
    match &decomposition {
        Ok(d) if d.kind == x.frobenius_kind => {
            if d.consequences_hold == Some(false) {
                problems.push("2-Frobenius consequences fail".into());
            }
        }
        Ok(d) => problems.push(format!("kind {:?}", d.kind)),
        Err(err) => problems.push(format!("frobenius: {err}")),
    }
    if let Some((tag, n)) = x.family {
        match match_frobenius_cut_family(&g) {
            Ok(FamilyMatch::Family { tag: t, n: m }) if t == tag && m == n => {}
            other => problems.push(format!("family {other:?}")),
        }
    }
    if e.name == "twofrob.c" && fingerprint(&g) != fingerprint(&builders::sym(4).unwrap()) {
        problems.push("fingerprint differs from S4".into());
    }
    let summary = format!(
        "order {} graph {} cut {} rational {} {:?}",
        g.order(),
        graph,
        cut,
        rational,
        decomposition.map(|d| d.kind).unwrap_or(FrobeniusKind::None)
    );
    CheckRow {
        name: e.name.to_string(),
        passed: problems.is_empty(),
        checked: 1,
        detail: if problems.is_empty() {
            summary
        } else {
            format!("{summary}; {}", problems.join("; "))
        },
    }
}

fn entries_suite(name: &str, entries: Vec<CatalogEntry>) -> SuiteResult {
    SuiteResult {
        suite: name.to_string(),
        rows: entries.par_iter().map(verify_entry).collect(),
    }
}

pub fn figure3() -> SuiteResult {
    entries_suite("figure3", catalog::figure_entries())
}

pub fn two_frobenius() -> SuiteResult {
    entries_suite("twofrobenius", catalog::two_frobenius_entries())
}

pub fn frobenius_families() -> SuiteResult {
    entries_suite("frobenius-families", catalog::family_entries())
}

/// Graphs outside the figure tables that must be classified forbidden for
/// solvable cut groups.
pub const FORBIDDEN_CUT_GRAPHS: [&str; 10] = [
    "2,3,5",
    "2-5,3",
    "2-5,3-5",
    "2-3-5,2-7",
    "2-3,2-5,3-7",
    "2-3,2-5,2-7,3-7",
    "2-3,2-5,3-5,3-7",
    "2-3,5,7",
    "2,7",
    "5",
];

pub fn classifier() -> SuiteResult {
    let mut rows = Vec::new();
    let cut_realized = "abcdefghijklmnopqr";
    let mut check = |name: String, g: &PrimeGraph, class: GraphClass, want: Status| {
        let v = classify(g, class);
        let (passed, detail) = match v {
            Ok(v) => (v.status == want, format!("{:?}: {}", v.status, v.citation)),
            Err(e) => (false, e.to_string()),
        };
        rows.push(CheckRow {
            name,
            passed,
            checked: 1,
            detail,
        });
    };
    for (label, lit) in FIGURE_GRAPHS {
        let g = PrimeGraph::parse_literal(lit).unwrap();
        let want = if cut_realized.contains(label) {
            Status::Realized
        } else {
            Status::Open
        };
        check(format!("cut ({label}) {lit}"), &g, GraphClass::SolvableCut, want);
    }
    for (label, lit) in FIGURE_GRAPHS {
        let g = PrimeGraph::parse_literal(lit).unwrap();
        let want = match label {
            "a" | "c" | "d" | "e" | "f" | "k" => Status::Realized,
            "i" => Status::Open,
            _ => Status::Forbidden,
        };
        check(format!("rational ({label}) {lit}"), &g, GraphClass::SolvableRational, want);
    }
    for lit in FORBIDDEN_CUT_GRAPHS {
        let g = PrimeGraph::parse_literal(lit).unwrap();
        check(format!("cut {lit}"), &g, GraphClass::SolvableCut, Status::Forbidden);
    }
    SuiteResult {
        suite: "classifier".into(),
        rows,
    }
}

/// Everything the invariant scan needs about one group.
struct Facts {
    group: GroupHandle,
    primes: BTreeSet<u64>,
    report: RationalityReport,
    oracle_cut: bool,
    graph: PrimeGraph,
    predicates: ClassPredicates,
    frobenius: Result<FrobeniusDecomposition, crate::error::GroupError>,
}

fn facts(g: &GroupHandle) -> Facts {
    Facts {
        group: g.clone(),
        primes: arith::prime_divisors(g.order() as u64).into_iter().collect(),
        report: rationality_report(g),
        oracle_cut: cut_oracle_via_bg(g),
        graph: gk_graph(g),
        predicates: class_predicates(g),
        frobenius: if g.order() > 1 {
            frobenius_kind(g)
        } else {
            Err(crate::error::GroupError::TrivialGroup)
        },
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    violations: Vec<String>,
}

struct Tallies {
    names: Vec<&'static str>,
    data: Vec<Tally>,
}

impl Tallies {
    fn new(names: &[&'static str]) -> Self {
        Tallies {
            names: names.to_vec(),
            data: names.iter().map(|_| Tally::default()).collect(),
        }
    }

    fn record(&mut self, name: &str, ok: bool, group: &str) {
        let i = self
            .names
            .iter()
            .position(|n| *n == name)
            .unwrap_or_else(|| panic!("unregistered invariant {name}"));
        self.data[i].checked += 1;
        if !ok {
            self.data[i].violations.push(group.to_string());
        }
    }

    fn rows(self) -> Vec<CheckRow> {
        self.names
            .iter()
            .zip(self.data)
            .map(|(n, t)| CheckRow {
                name: n.to_string(),
                passed: t.violations.is_empty(),
                checked: t.checked,
                detail: if t.violations.is_empty() {
                    format!("{} checked, 0 violations", t.checked)
                } else {
                    let shown: Vec<&str> = t.violations.iter().take(3).map(|s| s.as_str()).collect();
                    format!(
                        "{} checked, {} violations: {}",
                        t.checked,
                        t.violations.len(),
                        shown.join(" | ")
                    )
                },
            })
            .collect()
    }
}

pub const INVARIANTS: [&str; 22] = [
    "cut verdict equals normalizer oracle",
    "bg_order agrees and divides phi",
    "iota exponents form a subgroup",
    "prime spectrum of solvable cut groups",
    "solvable rational groups avoid 7",
    "solvable: at most 2 components",
    "solvable: 2 components iff Frobenius or 2-Frobenius",
    "solvable: component diameter at most 3",
    "solvable cut: three-primes rule",
    "cut: edge implications",
    "solvable cut: at most 4 vertices, not forbidden",
    "solvable rational: not forbidden",
    "cut: abelian Sylow exponent divides p or 4",
    "cut: normal Sylow without pq elements",
    "cut: cyclic or quaternion Sylow 2 and Sylow 3 exclusions",
    "Frobenius or 2-Frobenius cut: at most 3 primes",
    "Frobenius decomposition properties",
    "2-Frobenius index conditions",
    "Frobenius cut groups match a family",
    "quotients of cut and rational groups",
    "class predicate implications",
    "products: cut predicate and product graph",
];

/// Runs every corpus invariant. Products are checked on the first 64 pairs
/// of cut groups whose product has order at most 50000.
pub fn invariants(seed: u64, count: usize, max_order: usize) -> SuiteResult {
    let groups = corpus(seed, count, max_order);
    let all: Vec<Facts> = groups.par_iter().map(facts).collect();
    let mut t = Tallies::new(&INVARIANTS);
    let q8 = fingerprint(&builders::quaternion8().unwrap());
    let per_group: Vec<Vec<(&'static str, bool)>> =
        all.par_iter().map(|f| group_invariants(f, &q8)).collect();
    for (f, results) in all.iter().zip(per_group) {
        for (name, ok) in results {
            t.record(name, ok, f.group.label());
        }
    }
    for (label, ok) in product_checks(&all, 64, 50_000) {
        t.record("products: cut predicate and product graph", ok, &label);
    }
    SuiteResult {
        suite: "invariants".into(),
        rows: t.rows(),
    }
}

/// Cut pairs `(G, H)` in corpus order with `|G||H| <= limit`, at most `want`.
pub fn product_pairs(groups: &[GroupHandle], want: usize, limit: usize) -> Vec<(usize, usize)> {
    let cut: Vec<usize> = (0..groups.len())
        .filter(|&i| is_cut_group(&groups[i]))
        .collect();
    let mut pairs = Vec::new();
    'outer: for (a, &i) in cut.iter().enumerate() {
        for &j in &cut[a + 1..] {
            if groups[i].order() * groups[j].order() <= limit {
                pairs.push((i, j));
                if pairs.len() == want {
                    break 'outer;
                }
            }
        }
    }
    pairs
}

fn product_checks(all: &[Facts], want: usize, limit: usize) -> Vec<(String, bool)> {
    let groups: Vec<GroupHandle> = all.iter().map(|f| f.group.clone()).collect();
    product_pairs(&groups, want, limit)
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (&groups[i], &groups[j]);
            let prod = direct_product(g, h, usize::MAX).expect("uncapped");
            let ok = product_cut_predicate(g, h) == Ok(is_cut_group(&prod))
                && product_graph(&all[i].graph, &all[j].graph) == gk_graph(&prod);
            (format!("{} x {}", g.label(), h.label()), ok)
        })
        .collect()
}

fn has_order_divisible_by(g: &GroupHandle, m: u32) -> bool {
    g.element_orders().iter().any(|&o| o % m == 0)
}

fn group_invariants(f: &Facts, q8: &crate::frobenius::GroupFingerprint) -> Vec<(&'static str, bool)> {
    let g = &f.group;
    let mut out = Vec::new();
    let cut = f.report.is_cut;
    let rational = f.report.is_rational;
    let solvable = f.predicates.solvable;

    out.push((INVARIANTS[0], cut == f.oracle_cut));

    let mut bg_ok = true;
    let mut subgroup_ok = true;
    for c in &f.report.classes {
        let n = c.order as u64;
        let phi = arith::totient(n) as usize;
        let via_normalizer = bg_order(g, c.representative).unwrap();
        bg_ok &= via_normalizer == c.bg_order && phi.is_multiple_of(c.bg_order);
        let exps = iota_exponents(g, c.representative).unwrap();
        let set: BTreeSet<u64> = exps.iter().copied().collect();
        let closed = exps
            .iter()
            .all(|&a| exps.iter().all(|&b| set.contains(&(a * b % n.max(1)))));
        subgroup_ok &= closed && exps == c.iota_exponents && exps.len() == c.bg_order;
    }
    out.push((INVARIANTS[1], bg_ok));
    out.push((INVARIANTS[2], subgroup_ok));

    if solvable && cut {
        out.push((INVARIANTS[3], is_cut_spectrum(&f.primes)));
    }
    if solvable && rational {
        out.push((INVARIANTS[4], f.primes.iter().all(|p| [2, 3, 5].contains(p))));
    }
    let kind = f.frobenius.as_ref().map(|d| d.kind).unwrap_or(FrobeniusKind::None);
    if solvable && g.order() > 1 {
        let comps = components(&f.graph).len();
        out.push((INVARIANTS[5], comps <= 2));
        out.push((INVARIANTS[6], (comps == 2) == (kind != FrobeniusKind::None)));
        out.push((
            INVARIANTS[7],
            component_diameters(&f.graph).iter().all(|&d| d <= 3),
        ));
    }
    if solvable && cut {
        out.push((INVARIANTS[8], higman_check(&f.graph)));
        let v = classify(&f.graph, GraphClass::SolvableCut).unwrap();
        out.push((
            INVARIANTS[10],
            f.graph.vertices().len() <= 4 && v.status != Status::Forbidden,
        ));
    }
    if cut {
        out.push((INVARIANTS[9], edge_implications_hold(&f.graph)));
    }
    if solvable && rational {
        let v = classify(&f.graph, GraphClass::SolvableRational).unwrap();
        out.push((INVARIANTS[11], v.status != Status::Forbidden));
    }

    if cut {
        let sylows: Vec<(u64, GroupHandle, bool)> = f
            .primes
            .iter()
            .map(|&p| {
                let s = sylow(g, p);
                let normal = s.is_normal();
                (p, s.as_group(), normal)
            })
            .collect();
        let mut abelian_ok = true;
        for (p, s, _) in &sylows {
            if is_abelian(s) {
                let e = exponent(s);
                abelian_ok &= *p % e == 0 || 4 % e == 0;
            }
        }
        out.push((INVARIANTS[12], abelian_ok));

        let mut normal_ok = true;
        for (p, _, normal) in &sylows {
            if !normal {
                continue;
            }
            for (q, sq, _) in &sylows {
                if q == p || has_order_divisible_by(g, (p * q) as u32) {
                    continue;
                }
                let n = sq.order() as u64;
                let cyclic_ok = is_cyclic(sq) && (4 % n == 0 || n == *q);
                normal_ok &= cyclic_ok || fingerprint(sq) == *q8;
            }
        }
        out.push((INVARIANTS[13], normal_ok));

        let mut excl_ok = true;
        for (p, s, _) in &sylows {
            if *p == 2 && is_cyclic(s) {
                for &r in f.primes.iter().filter(|&&r| r != 2) {
                    excl_ok &= !has_order_divisible_by(g, 4 * r as u32);
                    if r % 4 == 1 {
                        excl_ok &= !has_order_divisible_by(g, 2 * r as u32);
                    }
                }
            }
            if *p == 2 && s.order() == 8 && fingerprint(s) == *q8 {
                for &r in f.primes.iter().filter(|&&r| r % 4 == 1) {
                    excl_ok &= !has_order_divisible_by(g, 2 * r as u32);
                }
            }
            if *p == 3 && is_cyclic(s) {
                excl_ok &= !has_order_divisible_by(g, 21);
            }
        }
        if !f.primes.contains(&2) {
            // trivial Sylow 2-subgroup is cyclic
            excl_ok &= f
                .primes
                .iter()
                .all(|&r| !has_order_divisible_by(g, 4 * r as u32));
        }
        out.push((INVARIANTS[14], excl_ok));

        if kind != FrobeniusKind::None {
            out.push((INVARIANTS[15], f.primes.len() <= 3));
        }
    }

    if let Ok(d) = &f.frobenius {
        match d.kind {
            FrobeniusKind::Frobenius => {
                let k = d.kernel.as_ref().unwrap();
                let h = d.complement.as_ref().unwrap();
                let meet = h.elements().iter().filter(|&&x| k.contains(x)).count();
                let (nk, nh) = (k.order(), h.order());
                let orders_ok = g
                    .element_orders()
                    .iter()
                    .all(|&o| nk % o as usize == 0 || nh % o as usize == 0);
                out.push((
                    INVARIANTS[16],
                    k.is_normal()
                        && meet == 1
                        && nk * nh == g.order()
                        && arith::gcd(nk as u64, nh as u64) == 1
                        && orders_ok,
                ));
                if cut {
                    let m = match_frobenius_cut_family(g);
                    out.push((
                        INVARIANTS[18],
                        matches!(m, Ok(FamilyMatch::Family { .. } | FamilyMatch::ItemThreeConsistent)),
                    ));
                }
            }
            FrobeniusKind::TwoFrobenius => {
                let f1 = d.lower_kernel.as_ref().unwrap().order();
                let f2 = d.middle.as_ref().unwrap().order();
                let mid = (f2 / f1) as u64;
                let top = d.upper_complement_order.unwrap() as u64;
                out.push((
                    INVARIANTS[17],
                    arith::gcd(mid, top) == 1
                        && arith::gcd(mid, f1 as u64) == 1
                        && d.consequences_hold == Some(true),
                ));
            }
            FrobeniusKind::None => {}
        }
    }

    if cut || rational {
        let mut normals: Vec<crate::group::SubgroupHandle> = minimal_normal_subgroups(g);
        normals.push(derived_subgroup(g));
        normals.push(fitting(g));
        for p in &f.primes {
            normals.push(core_p(g, *p));
        }
        let mut ok = true;
        for n in normals.iter().filter(|n| n.order() > 1) {
            let q = quotient(g, n).expect("normal");
            if cut {
                ok &= is_cut_group(&q);
            }
            if rational {
                ok &= is_rational_group(&q);
            }
        }
        out.push((INVARIANTS[19], ok));
    }

    let c = &f.predicates;
    let implies = |a: bool, b: bool| !a || b;
    out.push((
        INVARIANTS[20],
        implies(c.cyclic, c.abelian)
            && implies(c.cyclic, c.metacyclic)
            && implies(c.abelian, c.nilpotent)
            && implies(c.abelian, c.metabelian)
            && implies(c.nilpotent, c.metanilpotent)
            && implies(c.metacyclic, c.supersolvable)
            && implies(c.metacyclic, c.metabelian)
            && implies(c.supersolvable, c.solvable)
            && implies(c.metabelian, c.metanilpotent)
            && implies(c.metanilpotent, c.solvable)
            && implies(c.nilpotent, c.supersolvable),
    ));
    out
}
