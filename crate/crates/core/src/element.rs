//! Concrete group elements: permutations, matrices over prime fields and
//! pairs for product constructions.

use std::fmt;

use crate::error::GroupError;

/// A permutation of `{0, .., n-1}` stored as its image array.
///
/// Products compose left to right: `(a * b)(i) = b(a(i))`, so `a` is applied
/// first. This is the convention of cycle notation in the literature and of
/// GAP.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::InvalidElement(format!(
                    "image array {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of `degree` points from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(GroupError::InvalidElement(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if touched[pt - 1] {
                    return Err(GroupError::InvalidElement(format!(
                        "point {pt} occurs twice in cycles {cycles:?}"
                    )));
                }
                touched[pt - 1] = true;
            }
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// Disjoint cycles of length > 1, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.apply(cur);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// A square matrix over `F_p`, entries stored row-major as residues in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    p: u32,
    dim: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn identity(p: u32, dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % p;
        }
        Matrix { p, dim, entries }
    }

    /// Reduces integer rows modulo `p`. Negative entries are allowed.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self, GroupError> {
        if p < 2 || !crate::arith::is_prime(p as u64) {
            return Err(GroupError::InvalidElement(format!("modulus {p} is not prime")));
        }
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(GroupError::InvalidElement(
                "matrix rows must form a non-empty square".into(),
            ));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(p as i64) as u32)
            .collect();
        Ok(Matrix { p, dim, entries })
    }

    /// Like [`Matrix::from_rows`] but also rejects singular matrices.
    pub fn invertible_from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self, GroupError> {
        let m = Self::from_rows(p, rows)?;
        if m.det() == 0 {
            return Err(GroupError::InvalidElement(format!(
                "matrix {m:?} is singular mod {p}"
            )));
        }
        Ok(m)
    }

    pub(crate) fn from_entries(p: u32, dim: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Matrix { p, dim, entries }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.p, self.dim)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!((self.p, self.dim), (other.p, other.dim));
        let n = self.dim;
        let p = self.p as u64;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out[idx] = ((out[idx] as u64 + a * other.entries[k * n + j] as u64) % p) as u32;
                }
            }
        }
        Matrix {
            p: self.p,
            dim: n,
            entries: out,
        }
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let n = self.dim;
        let p = self.p as u64;
        (0..n)
            .map(|i| {
                let s: u64 = (0..n)
                    .map(|j| self.entries[i * n + j] as u64 * v[j] as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    /// Determinant by Gaussian elimination over `F_p`.
    pub fn det(&self) -> u32 {
        let n = self.dim;
        let p = self.p as u64;
        let mut a: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let inv = crate::arith::mod_inverse(pv, p).expect("pivot is a unit");
            for r in col + 1..n {
                let factor = a[r * n + col] * inv % p;
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = (a[r * n + j] + p * p - factor * a[col * n + j]) % p;
                }
            }
        }
        det as u32
    }

    /// Inverse via Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim;
        let p = self.p as u64;
        let mut a: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let mut inv: Vec<u64> = Matrix::identity(self.p, n)
            .entries
            .iter()
            .map(|&x| x as u64)
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * n + col] != 0)?;
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                inv.swap(piv * n + j, col * n + j);
            }
            let s = crate::arith::mod_inverse(a[col * n + col], p)?;
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * s % p;
                inv[col * n + j] = inv[col * n + j] * s % p;
            }
            for r in 0..n {
                if r == col || a[r * n + col] == 0 {
                    continue;
                }
                let f = a[r * n + col];
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + p * p - f * a[col * n + j]) % p;
                    inv[r * n + j] = (inv[r * n + j] + p * p - f * inv[col * n + j]) % p;
                }
            }
        }
        Some(Matrix {
            p: self.p,
            dim: n,
            entries: inv.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// True when `M - I` is singular, i.e. `M` fixes a non-zero vector.
    pub fn has_fixed_vector(&self) -> bool {
        let n = self.dim;
        let mut shifted = self.entries.clone();
        for i in 0..n {
            shifted[i * n + i] = (shifted[i * n + i] + self.p - 1) % self.p;
        }
        Matrix::from_entries(self.p, n, shifted).det() == 0
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", v.join(","))
            })
            .collect();
        write!(f, "F{}[{}]", self.p, rows.join(","))
    }
}

/// A group element. Equal payloads are equal elements.
///
/// Pairs carry no multiplication of their own: the owning group decides
/// whether a pair multiplies componentwise or through an action.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Element {
    Perm(Perm),
    Matrix(Matrix),
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    pub fn pair(left: Element, right: Element) -> Self {
        Element::Pair(Box::new(left), Box::new(right))
    }

    pub fn kind(&self) -> ElementKind {
        match self {
            Element::Perm(p) => ElementKind::Perm { degree: p.degree() },
            Element::Matrix(m) => ElementKind::Matrix {
                p: m.modulus(),
                dim: m.dim(),
            },
            Element::Pair(..) => ElementKind::Pair,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => write!(f, "{p}"),
            Element::Matrix(m) => write!(f, "{m:?}"),
            Element::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

impl From<Perm> for Element {
    fn from(p: Perm) -> Self {
        Element::Perm(p)
    }
}

impl From<Matrix> for Element {
    fn from(m: Matrix) -> Self {
        Element::Matrix(m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    Perm { degree: usize },
    Matrix { p: u32, dim: usize },
    Pair,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Perm::from_cycles(7, &[vec![1, 3, 2, 6, 4, 5]]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 3, 2, 6, 4, 5]]);
        assert_eq!(p.to_string(), "(1,3,2,6,4,5)");
        assert!(p.mul(&p.inverse()).is_identity());
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).apply(0), 2);
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn negative_entries_reduce_into_range() {
        let m = Matrix::from_rows(5, &[vec![2, 0], vec![0, -2]]).unwrap();
        assert_eq!(m.entry(1, 1), 3);
        assert_eq!(m.det(), 1);
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_rows(7, &[vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Matrix::from_rows(3, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(sing.det(), 0);
        assert!(sing.inverse().is_none());
        assert!(Matrix::invertible_from_rows(3, &[vec![1, 2], vec![2, 1]]).is_err());
    }

    #[test]
    fn fixed_vectors() {
        let m = Matrix::from_rows(5, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert!(!m.has_fixed_vector());
        let u = Matrix::from_rows(5, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(u.has_fixed_vector());
    }
}
