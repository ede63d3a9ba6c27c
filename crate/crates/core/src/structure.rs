//! Conjugacy, Sylow and Fitting structure, and the standard class predicates.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::arith;
use crate::error::GroupError;
use crate::group::{quotient_group, quotient_parts, BitSet, GroupHandle, SubgroupHandle};

/// Conjugacy classes, numbered by least element index.
#[derive(Debug)]
pub struct ConjugacyData {
    /// Class number of each element.
    pub class_of: Vec<u32>,
    /// Members of each class, sorted.
    pub classes: Vec<Vec<u32>>,
}

impl ConjugacyData {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Least element of each class.
    pub fn representatives(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_size(&self, x: u32) -> usize {
        self.classes[self.class_of[x as usize] as usize].len()
    }

    pub fn conjugate(&self, x: u32, y: u32) -> bool {
        self.class_of[x as usize] == self.class_of[y as usize]
    }
}

/// Conjugacy classes of `g`, computed once and cached on the group.
pub fn conjugacy(g: &GroupHandle) -> Arc<ConjugacyData> {
    g.conjugacy
        .get_or_init(|| {
            let n = g.order();
            let unset = u32::MAX;
            let mut class_of = vec![unset; n];
            let mut classes = Vec::new();
            for x in 0..n as u32 {
                if class_of[x as usize] != unset {
                    continue;
                }
                let c = classes.len() as u32;
                class_of[x as usize] = c;
                let mut orbit = vec![x];
                let mut head = 0;
                while head < orbit.len() {
                    let y = orbit[head];
                    head += 1;
                    for &s in g.generators() {
                        let z = g.conj(y, s);
                        if class_of[z as usize] == unset {
                            class_of[z as usize] = c;
                            orbit.push(z);
                        }
                    }
                }
                orbit.sort_unstable();
                classes.push(orbit);
            }
            Arc::new(ConjugacyData { class_of, classes })
        })
        .clone()
}

pub fn subgroup(g: &GroupHandle, gens: &[u32]) -> SubgroupHandle {
    SubgroupHandle::generated(g, gens)
}

pub fn cyclic_subgroup(g: &GroupHandle, x: u32) -> SubgroupHandle {
    SubgroupHandle::generated(g, &[x])
}

/// Elements commuting with `x`.
pub fn centralizer(g: &GroupHandle, x: u32) -> SubgroupHandle {
    let items: Vec<u32> = (0..g.order() as u32)
        .filter(|&y| g.mul(x, y) == g.mul(y, x))
        .collect();
    SubgroupHandle::from_elements(g, &items)
}

/// `|C_G(x)|` without building the subgroup, via the class size.
pub fn centralizer_order(g: &GroupHandle, x: u32) -> usize {
    g.order() / conjugacy(g).class_size(x)
}

/// `N_G(H)`.
pub fn normalizer(g: &GroupHandle, h: &SubgroupHandle) -> SubgroupHandle {
    let items: Vec<u32> = (0..g.order() as u32)
        .filter(|&y| h.generators().iter().all(|&s| h.contains(g.conj(s, y))))
        .collect();
    SubgroupHandle::from_elements(g, &items)
}

/// `N_G(<x>)`.
pub fn normalizer_of_cyclic(g: &GroupHandle, x: u32) -> SubgroupHandle {
    normalizer(g, &cyclic_subgroup(g, x))
}

pub fn center(g: &GroupHandle) -> SubgroupHandle {
    let items: Vec<u32> = (0..g.order() as u32)
        .filter(|&y| g.generators().iter().all(|&s| g.mul(s, y) == g.mul(y, s)))
        .collect();
    SubgroupHandle::from_elements(g, &items)
}

pub fn exponent(g: &GroupHandle) -> u64 {
    g.element_orders()
        .iter()
        .fold(1u64, |acc, &o| arith::lcm(acc, o as u64))
}

/// Smallest subgroup containing `items` and normalized by `by`.
pub fn closure_under_conjugation(g: &GroupHandle, items: &[u32], by: &[u32]) -> SubgroupHandle {
    let mut gens: Vec<u32> = items.iter().copied().filter(|&x| x != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut members = g.closure(&gens).1;
    loop {
        let mut added = false;
        for i in 0..gens.len() {
            for &s in by {
                let c = g.conj(gens[i], s);
                if !members.contains(c) {
                    gens.push(c);
                    members = g.closure(&gens).1;
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    SubgroupHandle::generated(g, &gens)
}

pub fn normal_closure(g: &GroupHandle, items: &[u32]) -> SubgroupHandle {
    closure_under_conjugation(g, items, g.generators())
}

/// Derived subgroup of `h`, as a subgroup of `h`'s parent.
pub fn derived_subgroup_of(h: &SubgroupHandle) -> SubgroupHandle {
    let g = h.parent();
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            comms.push(g.commutator(a, b));
        }
    }
    closure_under_conjugation(g, &comms, gens)
}

pub fn derived_subgroup(g: &GroupHandle) -> SubgroupHandle {
    derived_subgroup_of(&SubgroupHandle::whole(g))
}

/// `G = G^(0) > G' > G'' > ...` until it stabilizes.
pub fn derived_series(g: &GroupHandle) -> Vec<SubgroupHandle> {
    let mut series = vec![SubgroupHandle::whole(g)];
    loop {
        let next = derived_subgroup_of(series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            break;
        }
        series.push(next);
    }
    series
}

pub fn is_solvable(g: &GroupHandle) -> bool {
    derived_series(g).last().unwrap().order() == 1
}

/// `G/N`, with elements represented by value-least coset members.
pub fn quotient(g: &GroupHandle, n: &SubgroupHandle) -> Result<GroupHandle, GroupError> {
    if !Arc::ptr_eq(n.parent(), g) {
        return Err(GroupError::NotMember);
    }
    if !n.is_normal() {
        return Err(GroupError::NotNormal);
    }
    Ok(quotient_group(g, n))
}

/// Preimage in the parent of a subgroup of a quotient group.
pub fn preimage(q: &GroupHandle, sub: &SubgroupHandle) -> Option<SubgroupHandle> {
    let (parent, coset_of, _) = quotient_parts(q)?;
    let items: Vec<u32> = (0..parent.order() as u32)
        .filter(|&x| sub.contains(coset_of[x as usize]))
        .collect();
    Some(SubgroupHandle::from_elements(parent, &items))
}

/// A Sylow `p`-subgroup, grown one step at a time inside normalizers using
/// the value-least admissible element.
pub fn sylow(g: &GroupHandle, p: u64) -> SubgroupHandle {
    let target = arith::p_part(g.order() as u64, p) as usize;
    let order = g.value_order();
    let mut current = SubgroupHandle::trivial(g);
    while current.order() < target {
        let n = normalizer(g, &current);
        let y = order
            .iter()
            .copied()
            .find(|&y| {
                n.contains(y) && !current.contains(y) && current.contains(g.pow(y, p))
            })
            .expect("p divides |N_G(P) : P| while P is not Sylow");
        let mut gens = current.generators().to_vec();
        gens.push(y);
        current = SubgroupHandle::generated(g, &gens);
    }
    current
}

/// `O_p(G)`: the elements whose whole class lies in a Sylow `p`-subgroup.
pub fn core_p(g: &GroupHandle, p: u64) -> SubgroupHandle {
    let s = sylow(g, p);
    let cls = conjugacy(g);
    let mut items = Vec::new();
    for class in &cls.classes {
        if class.iter().all(|&x| s.contains(x)) {
            items.extend_from_slice(class);
        }
    }
    items.sort_unstable();
    SubgroupHandle::from_elements(g, &items)
}

/// `F(G)`, the product of the `O_p(G)`.
pub fn fitting(g: &GroupHandle) -> SubgroupHandle {
    let mut gens = Vec::new();
    for p in arith::prime_divisors(g.order() as u64) {
        gens.extend_from_slice(core_p(g, p).generators());
    }
    SubgroupHandle::generated(g, &gens)
}

#[derive(Clone, Debug)]
pub struct FittingSeries {
    /// `1 = F_0 < F_1 < ... `, each term normal in `G`.
    pub terms: Vec<SubgroupHandle>,
    /// True when the series reaches `G`.
    pub solvable: bool,
}

impl FittingSeries {
    /// The Fitting length, when the group is solvable.
    pub fn length(&self) -> Option<usize> {
        self.solvable.then(|| self.terms.len() - 1)
    }
}

/// Upper Fitting series: `F_{i+1}/F_i = F(G/F_i)`.
pub fn fitting_series(g: &GroupHandle) -> FittingSeries {
    let mut terms = vec![SubgroupHandle::trivial(g)];
    loop {
        let last = terms.last().unwrap();
        if last.order() == g.order() {
            return FittingSeries {
                terms,
                solvable: true,
            };
        }
        let next = if last.order() == 1 {
            fitting(g)
        } else {
            let q = quotient_group(g, last);
            let fq = fitting(&q);
            preimage(&q, &fq).expect("quotient group")
        };
        if next.order() == last.order() {
            return FittingSeries {
                terms,
                solvable: false,
            };
        }
        terms.push(next);
    }
}

pub fn is_abelian(g: &GroupHandle) -> bool {
    let gens = g.generators();
    gens.iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn is_cyclic(g: &GroupHandle) -> bool {
    g.element_orders().iter().any(|&o| o as usize == g.order())
}

pub fn is_nilpotent(g: &GroupHandle) -> bool {
    fitting(g).order() == g.order()
}

/// Chief factors of a finite group are independent of the chief series, so
/// it suffices to extend greedily by normal subgroups of prime index over the
/// current term.
pub fn is_supersolvable(g: &GroupHandle) -> bool {
    if !is_solvable(g) {
        return false;
    }
    let n = g.order();
    let mut m = SubgroupHandle::trivial(g);
    while m.order() < n {
        let rest = (n / m.order()) as u64;
        let primes = arith::prime_divisors(rest);
        let mut step = None;
        'search: for x in 0..n as u32 {
            if m.contains(x) {
                continue;
            }
            for &p in &primes {
                if !m.contains(g.pow(x, p)) {
                    continue;
                }
                // <M, x> = union of x^j M for j < p
                let powers: Vec<u32> = (0..p).map(|j| g.inv(g.pow(x, j))).collect();
                let in_k = |y: u32| powers.iter().any(|&xi| m.contains(g.mul(xi, y)));
                if g.generators().iter().all(|&s| in_k(g.conj(x, s))) {
                    step = Some(x);
                    break 'search;
                }
            }
        }
        let Some(x) = step else {
            return false;
        };
        let mut gens = m.generators().to_vec();
        gens.push(x);
        m = SubgroupHandle::generated(g, &gens);
    }
    true
}

pub fn is_metabelian(g: &GroupHandle) -> bool {
    let s = derived_series(g);
    s.len() <= 3 && s.last().unwrap().order() == 1
}

/// A cyclic normal subgroup with cyclic quotient exists.
pub fn is_metacyclic(g: &GroupHandle) -> bool {
    let n = g.order();
    let derived = derived_subgroup(g);
    let mut seen: Vec<BitSet> = Vec::new();
    for x in 0..n as u32 {
        let c = cyclic_subgroup(g, x);
        if !c.is_normal() || !c.contains_subgroup(&derived) {
            continue;
        }
        if seen.iter().any(|s| s == c.members()) {
            continue;
        }
        seen.push(c.members().clone());
        let m = (n / c.order()) as u64;
        // some y of order m modulo <x>
        let found = (0..n as u32).any(|y| {
            let mut z = y;
            let mut k = 1u64;
            while !c.contains(z) {
                z = g.mul(z, y);
                k += 1;
            }
            k == m
        });
        if found {
            return true;
        }
    }
    false
}

/// Fitting length at most 2.
pub fn is_metanilpotent(g: &GroupHandle) -> bool {
    let fs = fitting_series(g);
    fs.solvable && fs.terms.len() <= 3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPredicates {
    pub abelian: bool,
    pub cyclic: bool,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub metacyclic: bool,
    pub metabelian: bool,
    pub metanilpotent: bool,
    pub solvable: bool,
}

pub fn class_predicates(g: &GroupHandle) -> ClassPredicates {
    ClassPredicates {
        abelian: is_abelian(g),
        cyclic: is_cyclic(g),
        nilpotent: is_nilpotent(g),
        supersolvable: is_supersolvable(g),
        metacyclic: is_metacyclic(g),
        metabelian: is_metabelian(g),
        metanilpotent: is_metanilpotent(g),
        solvable: is_solvable(g),
    }
}

/// Minimal normal subgroups: every one is the normal closure of any of its
/// elements of prime order, so the minimal members among those closures are
/// exactly the minimal normal subgroups.
pub fn minimal_normal_subgroups(g: &GroupHandle) -> Vec<SubgroupHandle> {
    let cls = conjugacy(g);
    let mut cands: Vec<SubgroupHandle> = Vec::new();
    for rep in cls.representatives() {
        let o = g.order_of(rep) as u64;
        if o < 2 || !arith::is_prime(o) {
            continue;
        }
        let ncl = normal_closure(g, &[rep]);
        if !cands.iter().any(|c| c.same_elements(&ncl)) {
            cands.push(ncl);
        }
    }
    let minimal: Vec<SubgroupHandle> = cands
        .iter()
        .filter(|c| {
            !cands
                .iter()
                .any(|d| d.order() < c.order() && c.contains_subgroup(d))
        })
        .cloned()
        .collect();
    minimal
}

/// Multiset of element orders.
pub fn order_statistics(g: &GroupHandle) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for &o in g.element_orders() {
        *m.entry(o).or_insert(0) += 1;
    }
    m
}

/// Primes dividing `|G|`.
pub fn prime_spectrum(g: &GroupHandle) -> Vec<u64> {
    arith::prime_divisors(g.order() as u64)
}
