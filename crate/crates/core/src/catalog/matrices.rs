//! The integer matrices of the explicit 2-Frobenius constructions.
//!
//! `A` is the companion matrix of the 7th cyclotomic polynomial and `E` that
//! of the 5th; `B`, `D`, `F` are permutation matrices normalizing them.

use crate::element::Matrix;
use crate::error::GroupError;

pub fn a() -> Vec<Vec<i64>> {
    vec![
        vec![0, 0, 0, 0, 0, -1],
        vec![1, 0, 0, 0, 0, -1],
        vec![0, 1, 0, 0, 0, -1],
        vec![0, 0, 1, 0, 0, -1],
        vec![0, 0, 0, 1, 0, -1],
        vec![0, 0, 0, 0, 1, -1],
    ]
}

pub fn b() -> Vec<Vec<i64>> {
    vec![
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 1, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 1],
        vec![0, 0, 0, 1, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
    ]
}

pub fn c() -> Vec<Vec<i64>> {
    vec![vec![0, -1], vec![1, -1]]
}

pub fn d() -> Vec<Vec<i64>> {
    vec![vec![0, 1], vec![1, 0]]
}

pub fn e() -> Vec<Vec<i64>> {
    vec![
        vec![0, 0, 0, -1],
        vec![1, 0, 0, -1],
        vec![0, 1, 0, -1],
        vec![0, 0, 1, -1],
    ]
}

pub fn f() -> Vec<Vec<i64>> {
    vec![
        vec![0, 0, 1, 0],
        vec![1, 0, 0, 0],
        vec![0, 0, 0, 1],
        vec![0, 1, 0, 0],
    ]
}

/// All six matrices by name, as integer rows.
pub fn named_matrices() -> Vec<(&'static str, Vec<Vec<i64>>)> {
    vec![
        ("A", a()),
        ("B", b()),
        ("C", c()),
        ("D", d()),
        ("E", e()),
        ("F", f()),
    ]
}

/// One of the named matrices reduced mod `p`.
pub fn reduced(name: &str, p: u32) -> Result<Matrix, GroupError> {
    let rows = named_matrices()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, r)| r)
        .ok_or_else(|| GroupError::InvalidElement(format!("no matrix named {name}")))?;
    Matrix::invertible_from_rows(p, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;
    use crate::group::enumerate;

    fn order_of(m: &Matrix) -> usize {
        let mut x = m.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(m);
            k += 1;
        }
        k
    }

    #[test]
    fn generator_orders() {
        assert_eq!(order_of(&reduced("A", 2).unwrap()), 7);
        assert_eq!(order_of(&reduced("A", 3).unwrap()), 7);
        assert_eq!(order_of(&reduced("B", 2).unwrap()), 6);
        assert_eq!(order_of(&reduced("C", 2).unwrap()), 3);
        assert_eq!(order_of(&reduced("D", 2).unwrap()), 2);
        assert_eq!(order_of(&reduced("E", 2).unwrap()), 5);
        assert_eq!(order_of(&reduced("F", 2).unwrap()), 4);
    }

    #[test]
    fn generated_orders() {
        let gen = |names: &[&str], p| {
            let gens: Vec<Element> = names.iter().map(|n| reduced(n, p).unwrap().into()).collect();
            enumerate(&gens, 10_000).unwrap().order()
        };
        assert_eq!(gen(&["C", "D"], 2), 6);
        assert_eq!(gen(&["E", "F"], 2), 20);
        assert_eq!(gen(&["A", "B"], 2), 42);
    }
}
