//! Exhaustive search in `GL(d, p)` for fixed-point-free subgroups with a
//! prescribed fingerprint. Used offline to find the actions pinned in the
//! catalog, and by tests to re-derive them.

use crate::element::{Element, Matrix};
use crate::frobenius::{fingerprint, GroupFingerprint};
use crate::group::{enumerate, vector_group, GroupHandle, DEFAULT_CAP};
use crate::rationality::is_cut_group;

/// All invertible `d x d` matrices over `F_p`, in increasing entry order.
pub fn gl_elements(p: u32, d: usize) -> Vec<Matrix> {
    let cells = d * d;
    let total = (p as u64).pow(cells as u32);
    (0..total)
        .filter_map(|code| {
            let mut c = code;
            let mut entries = vec![0u32; cells];
            for k in (0..cells).rev() {
                entries[k] = (c % p as u64) as u32;
                c /= p as u64;
            }
            let m = Matrix::from_entries(p, d, entries);
            (m.det() != 0).then_some(m)
        })
        .collect()
}

fn matrix_order(m: &Matrix) -> u32 {
    let mut x = m.clone();
    let mut k = 1;
    while !x.is_identity() {
        x = x.mul(m);
        k += 1;
    }
    k
}

/// `F_p^d ⋊ H` for a matrix group `H` acting on column vectors.
pub fn vector_semidirect(
    p: u32,
    matrices: &[Matrix],
    cap: usize,
) -> Result<GroupHandle, crate::error::GroupError> {
    let d = matrices[0].dim();
    let kernel = vector_group(p, d, cap)?;
    let gens: Vec<Element> = matrices.iter().cloned().map(Element::from).collect();
    let acting = enumerate(&gens, cap)?;
    let action: Vec<Vec<u32>> = matrices
        .iter()
        .map(|m| {
            (0..d)
                .map(|i| {
                    let mut e = vec![0u32; d];
                    e[i] = 1;
                    crate::group::vector_index(&m.apply(&e), p)
                })
                .collect()
        })
        .collect();
    crate::group::semidirect_product_by_indices(&kernel, &acting, &action, cap)
}

/// Whether no non-identity element of the matrix group fixes a non-zero
/// vector.
pub fn acts_fixed_point_freely(h: &GroupHandle) -> bool {
    (1..h.order() as u32).all(|i| match h.element(i) {
        Element::Matrix(m) => !m.has_fixed_vector(),
        _ => false,
    })
}

/// Finds at most two generators of a fixed-point-free subgroup of
/// `GL(d, p)` with fingerprint `target`, optionally requiring the resulting
/// semidirect product to be cut. The first generator ranges over matrices of
/// the largest element order in `target`, the second over all of `GL(d, p)`.
pub fn find_fixed_point_free(
    p: u32,
    d: usize,
    target: &GroupFingerprint,
    require_cut: bool,
) -> Option<Vec<Matrix>> {
    let all = gl_elements(p, d);
    let orders: Vec<u32> = all.iter().map(matrix_order).collect();
    let top = *target.element_orders.keys().max()?;
    let allowed = |o: u32| target.element_orders.contains_key(&o);
    let accept = |gens: &[Matrix]| -> bool {
        let els: Vec<Element> = gens.iter().cloned().map(Element::from).collect();
        let Ok(h) = enumerate(&els, target.order) else {
            return false;
        };
        if h.order() != target.order || fingerprint(&h) != *target {
            return false;
        }
        if !acts_fixed_point_freely(&h) {
            return false;
        }
        !require_cut
            || vector_semidirect(p, gens, DEFAULT_CAP)
                .map(|g| is_cut_group(&g))
                .unwrap_or(false)
    };
    for (i, a) in all.iter().enumerate() {
        if orders[i] != top || a.has_fixed_vector() {
            continue;
        }
        if top as usize == target.order {
            if accept(std::slice::from_ref(a)) {
                return Some(vec![a.clone()]);
            }
            continue;
        }
        for (j, b) in all.iter().enumerate() {
            if j == i || !allowed(orders[j]) || orders[j] == 1 || b.has_fixed_vector() {
                continue;
            }
            let pair = [a.clone(), b.clone()];
            if accept(&pair) {
                return Some(pair.to_vec());
            }
        }
    }
    None
}

/// First order-48 subgroup of `SL(2, 7)` generated by an element of order 8
/// and one of order 3, scanning in increasing entry order.
pub fn find_binary_octahedral() -> Option<Vec<Matrix>> {
    let sl: Vec<Matrix> = gl_elements(7, 2).into_iter().filter(|m| m.det() == 1).collect();
    let orders: Vec<u32> = sl.iter().map(matrix_order).collect();
    for (i, a) in sl.iter().enumerate() {
        if orders[i] != 8 {
            continue;
        }
        for (j, b) in sl.iter().enumerate() {
            if orders[j] != 3 {
                continue;
            }
            let gens = [Element::from(a.clone()), Element::from(b.clone())];
            if matches!(enumerate(&gens, 48), Ok(h) if h.order() == 48) {
                return Some(vec![a.clone(), b.clone()]);
            }
        }
    }
    None
}
