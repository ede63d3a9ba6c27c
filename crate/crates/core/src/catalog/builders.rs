//! Standard small groups.

use crate::element::{Element, Matrix, Perm};
use crate::error::GroupError;
use crate::group::{
    direct_product, enumerate_labeled, semidirect_product_by_indices, vector_group, GroupHandle,
    DEFAULT_CAP,
};

fn perm(degree: usize, cycles: &[&[usize]]) -> Element {
    let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Element::Perm(Perm::from_cycles(degree, &c).expect("well-formed cycles"))
}

fn mat(p: u32, rows: &[&[i64]]) -> Element {
    let r: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    Element::Matrix(Matrix::invertible_from_rows(p, &r).expect("invertible matrix"))
}

/// `C_n` as the regular permutation group on `n` points.
pub fn cyclic(n: usize) -> Result<GroupHandle, GroupError> {
    if n == 0 {
        return Err(GroupError::OutOfRange("cyclic order must be positive".into()));
    }
    let cycle: Vec<usize> = (1..=n).collect();
    enumerate_labeled(&[perm(n, &[&cycle])], DEFAULT_CAP, &format!("C{n}"))
}

/// `F_p^rank` as an elementary abelian group.
pub fn elem_abelian(p: u32, rank: usize) -> Result<GroupHandle, GroupError> {
    if rank == 0 {
        return Err(GroupError::OutOfRange("rank must be positive".into()));
    }
    vector_group(p, rank, DEFAULT_CAP)
}

/// Dihedral group of the given (even) order, acting on `order/2` points.
pub fn dihedral(order: usize) -> Result<GroupHandle, GroupError> {
    if order < 4 || order % 2 == 1 {
        return Err(GroupError::OutOfRange(format!(
            "dihedral order {order} must be even and at least 4"
        )));
    }
    let label = format!("D{order}");
    let n = order / 2;
    if n == 2 {
        return enumerate_labeled(
            &[perm(4, &[&[1, 2], &[3, 4]]), perm(4, &[&[1, 3], &[2, 4]])],
            DEFAULT_CAP,
            &label,
        );
    }
    let rotation: Vec<usize> = (1..=n).collect();
    let reflection: Vec<Vec<usize>> = (2..=n / 2 + (n % 2))
        .map(|i| vec![i, n + 2 - i])
        .filter(|c| c[0] < c[1])
        .collect();
    let refl: Vec<&[usize]> = reflection.iter().map(|c| c.as_slice()).collect();
    enumerate_labeled(&[perm(n, &[&rotation]), perm(n, &refl)], DEFAULT_CAP, &label)
}

/// `Q8` inside `GL(2, 3)`.
pub fn quaternion8() -> Result<GroupHandle, GroupError> {
    enumerate_labeled(
        &[mat(3, &[&[0, 2], &[1, 0]]), mat(3, &[&[1, 1], &[1, 2]])],
        DEFAULT_CAP,
        "Q8",
    )
}

/// `SL(2, 3)` from its two unipotent generators.
pub fn sl2_3() -> Result<GroupHandle, GroupError> {
    enumerate_labeled(
        &[mat(3, &[&[1, 1], &[0, 1]]), mat(3, &[&[1, 0], &[1, 1]])],
        DEFAULT_CAP,
        "SL(2,3)",
    )
}

pub fn sym(n: usize) -> Result<GroupHandle, GroupError> {
    if n == 0 || n > 6 {
        return Err(GroupError::OutOfRange(format!("sym({n}) needs 1 <= n <= 6")));
    }
    let label = format!("S{n}");
    if n == 1 {
        return enumerate_labeled(&[perm(1, &[])], DEFAULT_CAP, &label);
    }
    let cycle: Vec<usize> = (1..=n).collect();
    enumerate_labeled(&[perm(n, &[&[1, 2]]), perm(n, &[&cycle])], DEFAULT_CAP, &label)
}

pub fn alt(n: usize) -> Result<GroupHandle, GroupError> {
    if n == 0 || n > 6 {
        return Err(GroupError::OutOfRange(format!("alt({n}) needs 1 <= n <= 6")));
    }
    let label = format!("A{n}");
    if n < 3 {
        return enumerate_labeled(&[perm(n, &[])], DEFAULT_CAP, &label);
    }
    let gens: Vec<Element> = (3..=n).map(|k| perm(n, &[&[1, 2, k]])).collect();
    enumerate_labeled(&gens, DEFAULT_CAP, &label)
}

/// `C5 : C4` acting on `F_5` by `x -> 2x`.
pub fn c5_semi_c4() -> Result<GroupHandle, GroupError> {
    enumerate_labeled(
        &[perm(5, &[&[1, 2, 3, 4, 5]]), perm(5, &[&[2, 3, 5, 4]])],
        DEFAULT_CAP,
        "C5:C4",
    )
}

pub fn c7_semi_c3() -> Result<GroupHandle, GroupError> {
    enumerate_labeled(
        &[perm(7, &[&[1, 2, 3, 4, 5, 6, 7]]), perm(7, &[&[1, 2, 4], &[3, 6, 5]])],
        DEFAULT_CAP,
        "C7:C3",
    )
}

pub fn c7_semi_c6() -> Result<GroupHandle, GroupError> {
    enumerate_labeled(
        &[perm(7, &[&[1, 2, 3, 4, 5, 6, 7]]), perm(7, &[&[1, 3, 2, 6, 4, 5]])],
        DEFAULT_CAP,
        "C7:C6",
    )
}

/// The dicyclic group of order 12: `C4` acting on `C3` by inversion.
pub fn c3_semi_c4() -> Result<GroupHandle, GroupError> {
    let c3 = cyclic(3)?;
    let c4 = cyclic(4)?;
    let r = c3.generators()[0];
    let g = semidirect_product_by_indices(&c3, &c4, &[vec![c3.inv(r)]], DEFAULT_CAP)?;
    Ok(g.with_label("C3:C4"))
}

pub fn q8_times_c3() -> Result<GroupHandle, GroupError> {
    let g = direct_product(&quaternion8()?, &cyclic(3)?, DEFAULT_CAP)?;
    Ok(g.with_label("Q8xC3"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{center, conjugacy, is_abelian, is_cyclic};

    #[test]
    fn orders() {
        assert_eq!(cyclic(6).unwrap().order(), 6);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(elem_abelian(3, 2).unwrap().order(), 9);
        for o in [4, 6, 8, 10, 12, 14] {
            let d = dihedral(o).unwrap();
            assert_eq!(d.order(), o, "D{o}");
        }
        assert_eq!(quaternion8().unwrap().order(), 8);
        assert_eq!(sl2_3().unwrap().order(), 24);
        assert_eq!(sym(4).unwrap().order(), 24);
        assert_eq!(sym(6).unwrap().order(), 720);
        assert_eq!(alt(5).unwrap().order(), 60);
        assert_eq!(alt(6).unwrap().order(), 360);
        assert_eq!(c5_semi_c4().unwrap().order(), 20);
        assert_eq!(c7_semi_c3().unwrap().order(), 21);
        assert_eq!(c7_semi_c6().unwrap().order(), 42);
        assert_eq!(c3_semi_c4().unwrap().order(), 12);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(sym(7), Err(GroupError::OutOfRange(_))));
        assert!(matches!(alt(0), Err(GroupError::OutOfRange(_))));
        assert!(matches!(dihedral(7), Err(GroupError::OutOfRange(_))));
        assert!(matches!(cyclic(0), Err(GroupError::OutOfRange(_))));
    }

    #[test]
    fn quaternion_and_sl23_have_one_involution() {
        for g in [quaternion8().unwrap(), sl2_3().unwrap()] {
            let involutions = g.element_orders().iter().filter(|&&o| o == 2).count();
            assert_eq!(involutions, 1);
            assert_eq!(center(&g).order(), 2);
        }
        let q = quaternion8().unwrap();
        assert!(!is_abelian(&q));
        assert_eq!(conjugacy(&q).count(), 5);
        assert_eq!(conjugacy(&sl2_3().unwrap()).count(), 7);
        assert!(is_cyclic(&cyclic(9).unwrap()));
    }
}
