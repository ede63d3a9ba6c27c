//! Brute-force oracles that only use the multiplication table of a group.
#![allow(dead_code)]

use std::collections::BTreeSet;

use gklab::GroupHandle;

pub fn order_by_powers(g: &GroupHandle, x: u32) -> u32 {
    let mut y = x;
    let mut k = 1;
    while y != g.identity() {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

pub fn conj(g: &GroupHandle, x: u32, y: u32) -> u32 {
    g.mul(g.mul(g.inv(y), x), y)
}

/// Conjugacy classes as sorted sets, ordered by least member.
pub fn classes(g: &GroupHandle) -> Vec<BTreeSet<u32>> {
    let n = g.order() as u32;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x as usize] {
            continue;
        }
        let class: BTreeSet<u32> = (0..n).map(|y| conj(g, x, y)).collect();
        for &c in &class {
            seen[c as usize] = true;
        }
        out.push(class);
    }
    out
}

pub fn powers(g: &GroupHandle, x: u32) -> BTreeSet<u32> {
    let mut s = BTreeSet::from([g.identity()]);
    let mut y = x;
    while s.insert(y) {
        y = g.mul(y, x);
    }
    s
}

pub fn centralizer_order(g: &GroupHandle, x: u32) -> usize {
    (0..g.order() as u32).filter(|&y| g.mul(x, y) == g.mul(y, x)).count()
}

pub fn normalizer_of_cyclic_order(g: &GroupHandle, x: u32) -> usize {
    let c = powers(g, x);
    (0..g.order() as u32)
        .filter(|&y| c.contains(&conj(g, x, y)))
        .count()
}

/// Closure of a set under multiplication.
pub fn generated(g: &GroupHandle, gens: &[u32]) -> BTreeSet<u32> {
    let mut s = BTreeSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(a) = frontier.pop() {
        for &b in gens {
            let c = g.mul(a, b);
            if s.insert(c) {
                frontier.push(c);
            }
        }
    }
    s
}

pub fn is_normal_set(g: &GroupHandle, s: &BTreeSet<u32>) -> bool {
    s.iter()
        .all(|&x| g.generators().iter().all(|&y| s.contains(&conj(g, x, y))))
}

/// Exponents `k` mod `|x|` with `x^k` conjugate to `x`, from the classes.
pub fn iota_by_classes(g: &GroupHandle, x: u32) -> Vec<u64> {
    let n = order_by_powers(g, x) as u64;
    let class: BTreeSet<u32> = (0..g.order() as u32).map(|y| conj(g, x, y)).collect();
    (0..n.max(1))
        .filter(|&k| gklab::arith::gcd(k, n) == 1 || n == 1)
        .filter(|&k| class.contains(&g.pow(x, k)))
        .collect()
}

pub fn is_cut_brute(g: &GroupHandle) -> bool {
    (0..g.order() as u32).all(|x| {
        let n = order_by_powers(g, x) as u64;
        let phi = gklab::arith::totient(n) as usize;
        let k = iota_by_classes(g, x).len();
        let inv_conj = iota_by_classes(g, x).contains(&((n - 1) % n.max(1)));
        k == phi || (2 * k == phi && !inv_conj)
    })
}

pub fn is_rational_brute(g: &GroupHandle) -> bool {
    (0..g.order() as u32).all(|x| {
        let n = order_by_powers(g, x) as u64;
        iota_by_classes(g, x).len() == gklab::arith::totient(n) as usize
    })
}

/// Edges `p < q` with an element of order divisible by `pq`.
pub fn gk_edges(g: &GroupHandle) -> BTreeSet<(u64, u64)> {
    let orders: BTreeSet<u64> = (0..g.order() as u32)
        .map(|x| order_by_powers(g, x) as u64)
        .collect();
    let primes: Vec<u64> = gklab::arith::prime_divisors(g.order() as u64);
    let mut out = BTreeSet::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if orders.iter().any(|o| o % (p * q) == 0) {
                out.insert((p, q));
            }
        }
    }
    out
}
