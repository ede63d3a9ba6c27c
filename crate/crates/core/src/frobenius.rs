//! Frobenius and 2-Frobenius structure, and recognition of the Frobenius cut
//! families by fingerprint.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::arith;
use crate::catalog::builders;
use crate::error::GroupError;
use crate::group::{BitSet, GroupHandle, SubgroupHandle};
use crate::structure::{
    center, conjugacy, derived_subgroup, exponent, fitting, fitting_series, is_abelian,
    is_cyclic, is_metabelian, order_statistics, quotient,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrobeniusKind {
    Frobenius,
    TwoFrobenius,
    None,
}

#[derive(Clone, Debug)]
pub struct FrobeniusDecomposition {
    pub kind: FrobeniusKind,
    /// Frobenius kernel, or `F_2` for a 2-Frobenius group.
    pub kernel: Option<SubgroupHandle>,
    /// A Frobenius complement (Frobenius kind only).
    pub complement: Option<SubgroupHandle>,
    /// `F_1` of a 2-Frobenius group.
    pub lower_kernel: Option<SubgroupHandle>,
    /// `F_2` of a 2-Frobenius group.
    pub middle: Option<SubgroupHandle>,
    /// `|G / F_2|` of a 2-Frobenius group.
    pub upper_complement_order: Option<usize>,
    /// For 2-Frobenius groups: `G/F_2` cyclic, `F_2/F_1` cyclic of odd order
    /// and `F_1` not cyclic.
    pub consequences_hold: Option<bool>,
}

impl FrobeniusDecomposition {
    fn none() -> Self {
        FrobeniusDecomposition {
            kind: FrobeniusKind::None,
            kernel: None,
            complement: None,
            lower_kernel: None,
            middle: None,
            upper_complement_order: None,
            consequences_hold: None,
        }
    }
}

/// `C_G(x) ⊆ F` for every non-identity `x ∈ F`, checked per class.
fn centralizer_condition(g: &GroupHandle, f: &SubgroupHandle) -> bool {
    let cls = conjugacy(g);
    cls.classes.iter().all(|class| {
        let x = class[0];
        if x == 0 || !f.contains(x) {
            return true;
        }
        let in_f = f
            .elements()
            .iter()
            .filter(|&&y| g.mul(x, y) == g.mul(y, x))
            .count();
        in_f == g.order() / class.len()
    })
}

/// Kernel `F(G)`, with the centralizer and coprimality conditions checked
/// and a complement found by growing a subgroup of elements of order
/// dividing `[G : F]`.
pub fn frobenius_decomposition(g: &GroupHandle) -> Result<FrobeniusDecomposition, GroupError> {
    if g.order() == 1 {
        return Err(GroupError::TrivialGroup);
    }
    let f = fitting(g);
    let n = g.order();
    if f.order() == 1 || f.order() == n {
        return Ok(FrobeniusDecomposition::none());
    }
    let m = n / f.order();
    if arith::gcd(f.order() as u64, m as u64) != 1 || !centralizer_condition(g, &f) {
        return Ok(FrobeniusDecomposition::none());
    }
    let complement = find_complement(g, m)?;
    Ok(FrobeniusDecomposition {
        kind: FrobeniusKind::Frobenius,
        kernel: Some(f),
        complement: Some(complement),
        lower_kernel: None,
        middle: None,
        upper_complement_order: None,
        consequences_hold: None,
    })
}

/// In a Frobenius group every element of order dividing `m` lies in exactly
/// one complement, so growing from the value-least element of largest such
/// order, each step adding some element that keeps the closure inside the
/// pool, reaches that element's complement.
fn find_complement(g: &GroupHandle, m: usize) -> Result<SubgroupHandle, GroupError> {
    let values = g.value_order();
    let pool: Vec<u32> = values
        .iter()
        .copied()
        .filter(|&x| m.is_multiple_of(g.order_of(x) as usize))
        .collect();
    let in_pool = BitSet::from_indices(g.order(), &pool);
    let top = pool.iter().map(|&x| g.order_of(x)).max().unwrap_or(1);
    let first = *pool
        .iter()
        .find(|&&x| g.order_of(x) == top)
        .ok_or(GroupError::SearchExhausted)?;
    let mut gens = vec![first];
    let mut current = g.closure(&gens);
    while current.0.len() < m {
        let mut grown = None;
        for &x in &pool {
            if current.1.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x);
            if let Some(c) = g.closure_capped(&trial, m) {
                if c.0.iter().all(|&y| in_pool.contains(y)) && m.is_multiple_of(c.0.len()) {
                    grown = Some((trial, c));
                    break;
                }
            }
        }
        let (t, c) = grown.ok_or(GroupError::SearchExhausted)?;
        gens = t;
        current = c;
    }
    Ok(SubgroupHandle::generated(g, &gens))
}

/// Kind `TwoFrobenius` when `F_2` is Frobenius with kernel `F_1` and
/// `G/F_1` is Frobenius with kernel `F_2/F_1`.
pub fn two_frobenius_decomposition(g: &GroupHandle) -> FrobeniusDecomposition {
    let fs = fitting_series(g);
    if fs.terms.len() < 3 || fs.terms[2].order() == g.order() {
        return FrobeniusDecomposition::none();
    }
    let f1 = fs.terms[1].clone();
    let f2 = fs.terms[2].clone();
    let lower_ok = matches!(
        frobenius_decomposition(&f2.as_group()),
        Ok(d) if d.kind == FrobeniusKind::Frobenius
            && d.kernel.as_ref().map(|k| k.order()) == Some(f1.order())
    );
    if !lower_ok {
        return FrobeniusDecomposition::none();
    }
    let Ok(q) = quotient(g, &f1) else {
        return FrobeniusDecomposition::none();
    };
    let upper_ok = matches!(
        frobenius_decomposition(&q),
        Ok(d) if d.kind == FrobeniusKind::Frobenius
            && d.kernel.as_ref().map(|k| k.order()) == Some(f2.order() / f1.order())
    );
    if !upper_ok {
        return FrobeniusDecomposition::none();
    }
    let top = quotient(g, &f2).expect("Fitting terms are normal");
    let middle = quotient(&f2.as_group(), &lift_normal(&f2, &f1)).expect("F_1 normal in F_2");
    let consequences = is_cyclic(&top)
        && is_cyclic(&middle)
        && middle.order() % 2 == 1
        && !is_cyclic(&f1.as_group());
    FrobeniusDecomposition {
        kind: FrobeniusKind::TwoFrobenius,
        kernel: Some(f2.clone()),
        complement: None,
        lower_kernel: Some(f1),
        middle: Some(f2),
        upper_complement_order: Some(top.order()),
        consequences_hold: Some(consequences),
    }
}

/// `inner`, a subgroup of `outer`'s parent contained in `outer`, as a
/// subgroup of `outer.as_group()`.
fn lift_normal(outer: &SubgroupHandle, inner: &SubgroupHandle) -> SubgroupHandle {
    let og = outer.as_group();
    let pos: BTreeMap<u32, u32> = outer
        .elements()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i as u32))
        .collect();
    let gens: Vec<u32> = inner.generators().iter().map(|x| pos[x]).collect();
    SubgroupHandle::generated(&og, &gens)
}

/// Frobenius if possible, otherwise 2-Frobenius, otherwise none.
pub fn frobenius_kind(g: &GroupHandle) -> Result<FrobeniusDecomposition, GroupError> {
    let d = frobenius_decomposition(g)?;
    if d.kind == FrobeniusKind::Frobenius {
        return Ok(d);
    }
    Ok(two_frobenius_decomposition(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: u64,
    pub classes: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub element_orders: BTreeMap<u32, usize>,
}

pub fn fingerprint(g: &GroupHandle) -> GroupFingerprint {
    GroupFingerprint {
        order: g.order(),
        abelian: is_abelian(g),
        exponent: exponent(g),
        classes: conjugacy(g).count(),
        center_order: center(g).order(),
        derived_order: derived_subgroup(g).order(),
        element_orders: order_statistics(g),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "match", rename_all = "snake_case")]
pub enum FamilyMatch {
    Family { tag: String, n: u32 },
    /// Complement of order 3 and a kernel meeting the necessary conditions
    /// of the open-ended family.
    ItemThreeConsistent,
    Unmatched,
}

struct References {
    c2: GroupFingerprint,
    c4: GroupFingerprint,
    c6: GroupFingerprint,
    q8: GroupFingerprint,
    q8xc3: GroupFingerprint,
    c3c4: GroupFingerprint,
    sl23: GroupFingerprint,
}

fn references() -> &'static References {
    static REFS: OnceLock<References> = OnceLock::new();
    REFS.get_or_init(|| {
        let fp = |g: Result<GroupHandle, GroupError>| fingerprint(&g.expect("reference group"));
        References {
            c2: fp(builders::cyclic(2)),
            c4: fp(builders::cyclic(4)),
            c6: fp(builders::cyclic(6)),
            q8: fp(builders::quaternion8()),
            q8xc3: fp(builders::q8_times_c3()),
            c3c4: fp(builders::c3_semi_c4()),
            sl23: fp(builders::sl2_3()),
        }
    })
}

/// Rank of an elementary abelian `p`-group, if the group is one.
fn elementary_rank(fp: &GroupFingerprint, p: u64) -> Option<u32> {
    if !fp.abelian || fp.exponent != p {
        return None;
    }
    let f = arith::factorize(fp.order as u64);
    match f[..] {
        [(q, k)] if q == p => Some(k),
        _ => None,
    }
}

/// Matches a Frobenius cut group against the families of Frobenius cut
/// groups with rank-parametrized elementary abelian kernels.
pub fn match_frobenius_cut_family(g: &GroupHandle) -> Result<FamilyMatch, GroupError> {
    let d = frobenius_decomposition(g)?;
    if d.kind != FrobeniusKind::Frobenius {
        return Err(GroupError::PreconditionFailed("group is not Frobenius".into()));
    }
    if !crate::rationality::is_cut_group(g) {
        return Err(GroupError::PreconditionFailed("group is not cut".into()));
    }
    let kernel = d.kernel.unwrap().as_group();
    let comp = d.complement.unwrap().as_group();
    let kf = fingerprint(&kernel);
    let cf = fingerprint(&comp);
    let r = references();
    let r3 = elementary_rank(&kf, 3);
    let r5 = elementary_rank(&kf, 5);
    let r7 = elementary_rank(&kf, 7);
    let even = |k: Option<u32>| k.filter(|k| k % 2 == 0).map(|k| k / 2);
    let family = |tag: &str, n: u32| FamilyMatch::Family {
        tag: tag.to_string(),
        n,
    };
    let found = if cf == r.c2 {
        r3.map(|n| family("C3^n:C2", n))
    } else if cf == r.c4 {
        even(r3)
            .map(|n| family("C3^2n:C4", n))
            .or(r5.map(|n| family("C5^n:C4", n)))
    } else if cf == r.q8 {
        even(r3)
            .map(|n| family("C3^2n:Q8", n))
            .or((r5 == Some(2)).then(|| family("C5^2:Q8", 1)))
    } else if cf == r.c6 {
        r7.map(|n| family("C7^n:C6", n))
    } else if cf == r.q8xc3 {
        even(r7).map(|n| family("C7^2n:(Q8xC3)", n))
    } else if cf == r.c3c4 {
        (r5 == Some(2)).then(|| family("C5^2:(C3:C4)", 1))
    } else if cf == r.sl23 {
        if r5 == Some(2) {
            Some(family("C5^2:SL(2,3)", 1))
        } else if r7 == Some(2) {
            Some(family("C7^2:SL(2,3)", 1))
        } else {
            None
        }
    } else {
        None
    };
    if let Some(f) = found {
        return Ok(f);
    }
    if cf.order == 3 && item_three_kernel(&kernel, &kf) {
        return Ok(FamilyMatch::ItemThreeConsistent);
    }
    Ok(FamilyMatch::Unmatched)
}

/// Necessary conditions only: a metabelian 2-group of exponent dividing 16
/// or a metabelian 7-group of exponent 7.
fn item_three_kernel(kernel: &GroupHandle, kf: &GroupFingerprint) -> bool {
    let primes = arith::prime_divisors(kf.order as u64);
    match primes[..] {
        [2] => 16 % kf.exponent == 0 && is_metabelian(kernel),
        [7] => kf.exponent == 7 && is_metabelian(kernel),
        _ => false,
    }
}
