//! Rational and inverse semi-rational elements.
//!
//! For `g` of order `n`, `B_G(g) = N_G(<g>)/C_G(g)` embeds in the unit group
//! mod `n` through the exponents `k` with `g^x = g^k`. The primary path
//! decides verdicts from class indices of powers; [`cut_oracle_via_bg`]
//! recomputes the exponents by scanning the normalizer instead.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::GroupError;
use crate::group::GroupHandle;
use crate::structure::{centralizer_order, conjugacy, normalizer_of_cyclic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Rational,
    InverseSemiRationalOnly,
    Neither,
}

impl Verdict {
    pub fn is_cut(self) -> bool {
        self != Verdict::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRationality {
    /// Element index of the class representative.
    pub representative: u32,
    pub order: u32,
    pub class_size: usize,
    pub bg_order: usize,
    pub iota_exponents: Vec<u64>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityReport {
    pub classes: Vec<ClassRationality>,
    pub is_rational: bool,
    pub is_cut: bool,
    pub non_rational_orders: BTreeSet<u32>,
}

fn check_member(g: &GroupHandle, x: u32) -> Result<(), GroupError> {
    if (x as usize) < g.order() {
        Ok(())
    } else {
        Err(GroupError::NotMember)
    }
}

/// Units `k` mod `|x|` with `x^k` conjugate to `x`, via class indices.
fn exponents_by_classes(g: &GroupHandle, x: u32) -> Vec<u64> {
    let cls = conjugacy(g);
    let n = g.order_of(x) as u64;
    arith::units_mod(n)
        .into_iter()
        .filter(|&k| cls.conjugate(g.pow(x, k), x))
        .collect()
}

fn verdict_from_exponents(n: u64, exps: &[u64]) -> Verdict {
    let units = arith::units_mod(n);
    if exps.len() == units.len() {
        return Verdict::Rational;
    }
    let set: BTreeSet<u64> = exps.iter().copied().collect();
    let covered = units
        .iter()
        .all(|&k| set.contains(&k) || set.contains(&((n - k) % n)));
    if covered {
        Verdict::InverseSemiRationalOnly
    } else {
        Verdict::Neither
    }
}

/// `|N_G(<x>)| / |C_G(x)|`.
pub fn bg_order(g: &GroupHandle, x: u32) -> Result<usize, GroupError> {
    check_member(g, x)?;
    Ok(normalizer_of_cyclic(g, x).order() / centralizer_order(g, x))
}

/// The image of `ι_x`: exponents realized by conjugation inside `N_G(<x>)`.
pub fn iota_exponents(g: &GroupHandle, x: u32) -> Result<Vec<u64>, GroupError> {
    check_member(g, x)?;
    let n = g.order_of(x) as u64;
    let cyc = crate::structure::cyclic_subgroup(g, x);
    // position of each power of x
    let mut power_of = std::collections::HashMap::new();
    let mut y = 0u32;
    for k in 0..n {
        power_of.insert(y, k);
        y = g.mul(y, x);
    }
    let norm = normalizer_of_cyclic(g, x);
    let mut exps = BTreeSet::new();
    for &h in norm.elements() {
        let c = g.conj(x, h);
        debug_assert!(cyc.contains(c));
        exps.insert(power_of[&c]);
    }
    Ok(exps.into_iter().collect())
}

pub fn is_rational_element(g: &GroupHandle, x: u32) -> Result<bool, GroupError> {
    check_member(g, x)?;
    let n = g.order_of(x) as u64;
    Ok(exponents_by_classes(g, x).len() == arith::totient(n) as usize)
}

pub fn is_inverse_semirational_element(g: &GroupHandle, x: u32) -> Result<bool, GroupError> {
    check_member(g, x)?;
    let n = g.order_of(x) as u64;
    Ok(verdict_from_exponents(n, &exponents_by_classes(g, x)).is_cut())
}

pub fn element_verdict(g: &GroupHandle, x: u32) -> Result<Verdict, GroupError> {
    check_member(g, x)?;
    let n = g.order_of(x) as u64;
    Ok(verdict_from_exponents(n, &exponents_by_classes(g, x)))
}

pub fn rationality_report(g: &GroupHandle) -> RationalityReport {
    let cls = conjugacy(g);
    let classes: Vec<ClassRationality> = cls
        .classes
        .par_iter()
        .map(|members| {
            let x = members[0];
            let n = g.order_of(x) as u64;
            let exps = exponents_by_classes(g, x);
            ClassRationality {
                representative: x,
                order: n as u32,
                class_size: members.len(),
                bg_order: exps.len(),
                verdict: verdict_from_exponents(n, &exps),
                iota_exponents: exps,
            }
        })
        .collect();
    let is_rational = classes.iter().all(|c| c.verdict == Verdict::Rational);
    let is_cut = classes.iter().all(|c| c.verdict.is_cut());
    let non_rational_orders = classes
        .iter()
        .filter(|c| c.verdict != Verdict::Rational)
        .map(|c| c.order)
        .collect();
    RationalityReport {
        classes,
        is_rational,
        is_cut,
        non_rational_orders,
    }
}

pub fn is_rational_group(g: &GroupHandle) -> bool {
    let cls = conjugacy(g);
    cls.classes.par_iter().all(|members| {
        let x = members[0];
        exponents_by_classes(g, x).len() == arith::totient(g.order_of(x) as u64) as usize
    })
}

pub fn is_cut_group(g: &GroupHandle) -> bool {
    let cls = conjugacy(g);
    cls.classes.par_iter().all(|members| {
        let x = members[0];
        let n = g.order_of(x) as u64;
        verdict_from_exponents(n, &exponents_by_classes(g, x)).is_cut()
    })
}

/// Orders of the non-rational elements.
pub fn non_rational_orders(g: &GroupHandle) -> BTreeSet<u32> {
    rationality_report(g).non_rational_orders
}

/// Cut verdict from normalizer scans alone: each representative passes when
/// its exponent set is all units, or is an index-2 subgroup avoiding `-1`.
pub fn cut_oracle_via_bg(g: &GroupHandle) -> bool {
    let cls = conjugacy(g);
    cls.classes.par_iter().all(|members| {
        let x = members[0];
        let n = g.order_of(x) as u64;
        if n <= 2 {
            return true;
        }
        let exps = iota_exponents(g, x).expect("representative is a member");
        let phi = arith::totient(n) as usize;
        exps.len() == phi || (2 * exps.len() == phi && !exps.contains(&(n - 1)))
    })
}

/// Whether `(g, h)` is inverse semi-rational in `G x H`, given `|g| = m`,
/// `|h| = n` and their exponent sets. The exponent set of `(g, h)` consists
/// of the units `k` mod `lcm(m, n)` with `k mod m` in `bx` and `k mod n` in
/// `by`; it has to be half of all units.
pub fn pair_is_inverse_semirational(m: u64, bx: &[u64], n: u64, by: &[u64]) -> bool {
    let l = arith::lcm(m, n);
    let bx: BTreeSet<u64> = bx.iter().copied().collect();
    let by: BTreeSet<u64> = by.iter().copied().collect();
    let units = arith::units_mod(l);
    let kept = units
        .iter()
        .filter(|&&k| bx.contains(&(k % m)) && by.contains(&(k % n)))
        .count();
    let minus_one = (l - 1) % l;
    2 * kept == units.len() && !(bx.contains(&(minus_one % m)) && by.contains(&(minus_one % n)))
}

/// For cut `G` and `H`: whether `G x H` is cut, decided from the exponent
/// sets of the non-rational classes of the factors. Pairs involving a
/// rational class never break the property.
pub fn product_cut_predicate(g: &GroupHandle, h: &GroupHandle) -> Result<bool, GroupError> {
    let rg = rationality_report(g);
    let rh = rationality_report(h);
    if !rg.is_cut || !rh.is_cut {
        return Err(GroupError::PreconditionNotCut);
    }
    let shapes = |r: &RationalityReport| -> BTreeSet<(u64, Vec<u64>)> {
        r.classes
            .iter()
            .filter(|c| c.verdict != Verdict::Rational)
            .map(|c| (c.order as u64, c.iota_exponents.clone()))
            .collect()
    };
    let (sg, sh) = (shapes(&rg), shapes(&rh));
    Ok(sg.iter().all(|(m, bx)| {
        sh.iter()
            .all(|(n, by)| pair_is_inverse_semirational(*m, bx, *n, by))
    }))
}

/// The rule "`gcd(m, n)` lies in {3, 4, 6} for all non-rational orders".
/// It treats the exponent set of `(g, h)` as the full product of those of
/// `g` and `h`, which only holds for coprime orders, so it can reject cut
/// products: `C4 x D12` with `C4 x (C3:C4)` is cut although both have
/// non-rational elements of order 12. [`product_cut_predicate`] is exact.
pub fn product_cut_from_orders(a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> bool {
    a.iter().all(|&n| {
        b.iter()
            .all(|&m| matches!(arith::gcd(n as u64, m as u64), 3 | 4 | 6))
    })
}

/// Checks the prime-power equivalences for `x` of order `p^k` or `2p^k`,
/// `p` odd, against the direct verdicts. `B_G(x)` is read off as the
/// exponent group from the normalizer scan, so "contains an element of
/// order `m`" is tested on multiplicative orders of its exponents.
pub fn prime_power_criterion_check(g: &GroupHandle, x: u32) -> Result<bool, GroupError> {
    check_member(g, x)?;
    let n = g.order_of(x) as u64;
    let odd = if n.is_multiple_of(2) { n / 2 } else { n };
    let f = arith::factorize(odd);
    let [(p, k)] = f[..] else {
        return Err(GroupError::NotApplicable(format!(
            "order {n} is not p^k or 2p^k for an odd prime p"
        )));
    };
    if p == 2 {
        return Err(GroupError::NotApplicable(format!("order {n} has no odd prime")));
    }
    let full = p.pow(k - 1) * (p - 1);
    let exps = iota_exponents(g, x)?;
    let b = exps.len() as u64;
    let has_order = |m: u64| exps.iter().any(|&e| arith::multiplicative_order(e, n) == m);
    let rational = is_rational_element(g, x)?;
    let isr = is_inverse_semirational_element(g, x)?;
    let consistent = if p % 4 == 1 {
        rational == isr && isr == has_order(full)
    } else {
        let half = full / 2;
        isr == (half <= b) && isr == has_order(half) && rational == (b == full)
            && rational == has_order(full)
    };
    Ok(consistent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_from_exponents() {
        assert_eq!(verdict_from_exponents(7, &[1, 2, 4]), Verdict::InverseSemiRationalOnly);
        assert_eq!(verdict_from_exponents(5, &[1, 4]), Verdict::Neither);
        assert_eq!(verdict_from_exponents(5, &[1, 2, 3, 4]), Verdict::Rational);
        assert_eq!(verdict_from_exponents(3, &[1]), Verdict::InverseSemiRationalOnly);
        assert_eq!(verdict_from_exponents(2, &[1]), Verdict::Rational);
        assert_eq!(verdict_from_exponents(1, &[0]), Verdict::Rational);
    }

    #[test]
    fn product_gcd_rule() {
        let a: BTreeSet<u32> = [3].into();
        let b: BTreeSet<u32> = [3, 6].into();
        assert!(product_cut_from_orders(&a, &b));
        let c: BTreeSet<u32> = [4].into();
        let d: BTreeSet<u32> = [3, 7].into();
        assert!(!product_cut_from_orders(&c, &d));
        assert!(product_cut_from_orders(&BTreeSet::new(), &d));
    }

    #[test]
    fn pair_exponent_rule() {
        assert!(pair_is_inverse_semirational(3, &[1], 3, &[1]));
        assert!(pair_is_inverse_semirational(12, &[1, 5], 12, &[1, 5]));
        assert!(!pair_is_inverse_semirational(12, &[1, 5], 12, &[1, 7]));
        assert!(!pair_is_inverse_semirational(12, &[1, 7], 4, &[1]));
        assert!(!pair_is_inverse_semirational(4, &[1], 7, &[1, 2, 4]));
        assert!(!pair_is_inverse_semirational(4, &[1], 6, &[1]));
        assert!(pair_is_inverse_semirational(4, &[1], 12, &[1, 5]));
    }
}
