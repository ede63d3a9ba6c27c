//! Fully enumerated finite groups.
//!
//! Every group stores its elements as indices `0..order` with the identity at
//! index 0. Multiplication is a property of the group, not of the element
//! payload: permutation and matrix groups multiply their payloads directly,
//! product groups combine the laws of their factors, and quotients and
//! subgroups delegate to their parent. Small groups cache a full Cayley
//! table.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith;
use crate::element::{Element, ElementKind, Matrix, Perm};
use crate::error::GroupError;
use crate::structure::ConjugacyData;

/// Default enumeration cap.
pub const DEFAULT_CAP: usize = 1 << 20;

/// Groups of at most this many elements get a Cayley table.
const TABLE_LIMIT: usize = 1024;

pub type GroupHandle = Arc<Group>;

/// Reads `GKLAB_MAX_ORDER`, falling back to [`DEFAULT_CAP`].
pub fn cap_from_env() -> usize {
    std::env::var("GKLAB_MAX_ORDER")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Clone)]
pub(crate) enum Law {
    Perm {
        elements: Vec<Perm>,
        index: HashMap<Perm, u32>,
    },
    Matrix {
        elements: Vec<Matrix>,
        index: HashMap<Matrix, u32>,
    },
    /// `F_p^dim` with index = base-`p` digits, least significant first.
    Vector {
        p: u32,
        dim: usize,
    },
    Direct {
        left: GroupHandle,
        right: GroupHandle,
    },
    Semidirect {
        kernel: GroupHandle,
        acting: GroupHandle,
        /// `action[h * |kernel| + n]` is the image of `n` under `h`.
        action: Vec<u32>,
        /// Per acting generator, the images of the kernel generators.
        generator_images: Vec<Vec<u32>>,
        trivial: bool,
    },
    Quotient {
        parent: GroupHandle,
        coset_of: Vec<u32>,
        reps: Vec<u32>,
    },
    Sub {
        parent: GroupHandle,
        members: Vec<u32>,
        local: Vec<u32>,
    },
}

/// How a group was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Perm { degree: usize },
    Matrix { p: u32, dim: usize },
    Vector { p: u32, dim: usize },
    Direct,
    Semidirect { direct: bool },
    Quotient,
    Subgroup,
}

#[derive(Clone)]
pub struct Group {
    label: String,
    law: Law,
    order: usize,
    generators: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
    value_rank: OnceLock<Vec<u32>>,
    pub(crate) conjugacy: OnceLock<Arc<ConjugacyData>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("construction", &self.construction())
            .finish()
    }
}

/// Breadth-first closure of `generators` under left multiplication.
pub fn enumerate(generators: &[Element], cap: usize) -> Result<GroupHandle, GroupError> {
    enumerate_labeled(generators, cap, "")
}

pub fn enumerate_labeled(
    generators: &[Element],
    cap: usize,
    label: &str,
) -> Result<GroupHandle, GroupError> {
    let first = generators.first().ok_or(GroupError::EmptyGenerators)?;
    let kind = first.kind();
    if generators.iter().any(|g| g.kind() != kind) {
        return Err(GroupError::IncompatibleKinds);
    }
    match kind {
        ElementKind::Perm { degree } => {
            let gens: Vec<Perm> = generators
                .iter()
                .map(|g| match g {
                    Element::Perm(p) => p.clone(),
                    _ => unreachable!(),
                })
                .collect();
            let (elements, index) = bfs(Perm::identity(degree), &gens, cap, |a, b| a.mul(b))?;
            let gen_idx = gens.iter().map(|g| index[g]).collect();
            Ok(Group::finish(label, Law::Perm { elements, index }, gen_idx))
        }
        ElementKind::Matrix { p, dim } => {
            let gens: Vec<Matrix> = generators
                .iter()
                .map(|g| match g {
                    Element::Matrix(m) => m.clone(),
                    _ => unreachable!(),
                })
                .collect();
            if let Some(bad) = gens.iter().find(|m| m.det() == 0) {
                return Err(GroupError::InvalidElement(format!("{bad:?} is singular")));
            }
            let (elements, index) = bfs(Matrix::identity(p, dim), &gens, cap, |a, b| a.mul(b))?;
            let gen_idx = gens.iter().map(|g| index[g]).collect();
            Ok(Group::finish(label, Law::Matrix { elements, index }, gen_idx))
        }
        ElementKind::Pair => Err(GroupError::IncompatibleKinds),
    }
}

fn bfs<T: Clone + Eq + std::hash::Hash>(
    identity: T,
    gens: &[T],
    cap: usize,
    mul: impl Fn(&T, &T) -> T,
) -> Result<(Vec<T>, HashMap<T, u32>), GroupError> {
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0u32);
    if cap < 1 {
        return Err(GroupError::CapExceeded { cap });
    }
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y = mul(g, &x);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len() as u32);
                elements.push(y);
            }
        }
    }
    Ok((elements, index))
}

/// `G x H` with componentwise multiplication.
pub fn direct_product(
    g: &GroupHandle,
    h: &GroupHandle,
    cap: usize,
) -> Result<GroupHandle, GroupError> {
    let order = g.order().saturating_mul(h.order());
    if order > cap {
        return Err(GroupError::CapExceeded { cap });
    }
    let n = h.order() as u32;
    let mut gens: Vec<u32> = g.generators.iter().map(|&a| a * n).collect();
    gens.extend(h.generators.iter().copied());
    let label = format!("{} x {}", wrap(&g.label), wrap(&h.label));
    Ok(Group::finish(
        &label,
        Law::Direct {
            left: g.clone(),
            right: h.clone(),
        },
        gens,
    ))
}

/// Iterated direct product of the given factors, left-associated.
pub fn direct_product_all(factors: &[GroupHandle], cap: usize) -> Result<GroupHandle, GroupError> {
    let (first, rest) = factors.split_first().ok_or(GroupError::EmptyGenerators)?;
    let mut acc = first.clone();
    for f in rest {
        acc = direct_product(&acc, f, cap)?;
    }
    Ok(acc)
}

fn wrap(label: &str) -> String {
    if label.contains(' ') {
        format!("[{label}]")
    } else {
        label.to_string()
    }
}

/// `N ⋊ H`, where `action[i]` lists the images (as elements of `N`) of the
/// generators of `N` under the `i`-th generator of `H`.
///
/// Multiplication is `(n1, h1)(n2, h2) = (n1 · (h1 ▷ n2), h1 h2)` with `▷` the
/// left action extended from the generator images.
pub fn semidirect_product(
    kernel: &GroupHandle,
    acting: &GroupHandle,
    action: &[Vec<Element>],
    cap: usize,
) -> Result<GroupHandle, GroupError> {
    let mut idx = Vec::with_capacity(action.len());
    for images in action {
        let mut row = Vec::with_capacity(images.len());
        for e in images {
            row.push(kernel.index_of(e).ok_or_else(|| {
                GroupError::NotAnAutomorphism(format!("image {e} is not in the kernel"))
            })?);
        }
        idx.push(row);
    }
    semidirect_product_by_indices(kernel, acting, &idx, cap)
}

/// As [`semidirect_product`] with images given as kernel element indices.
pub fn semidirect_product_by_indices(
    kernel: &GroupHandle,
    acting: &GroupHandle,
    action: &[Vec<u32>],
    cap: usize,
) -> Result<GroupHandle, GroupError> {
    let order = kernel.order().saturating_mul(acting.order());
    if order > cap {
        return Err(GroupError::CapExceeded { cap });
    }
    if action.len() != acting.generators.len() {
        return Err(GroupError::ActionNotWellDefined(format!(
            "{} maps supplied for {} acting generators",
            action.len(),
            acting.generators.len()
        )));
    }
    let nk = kernel.order();
    let mut gen_maps = Vec::with_capacity(action.len());
    for (i, images) in action.iter().enumerate() {
        if images.len() != kernel.generators.len() {
            return Err(GroupError::NotAnAutomorphism(format!(
                "map {i} gives {} images for {} kernel generators",
                images.len(),
                kernel.generators.len()
            )));
        }
        if images.iter().any(|&x| x as usize >= nk) {
            return Err(GroupError::NotAnAutomorphism(format!("map {i} leaves the kernel")));
        }
        gen_maps.push(extend_to_automorphism(kernel, images).map_err(|msg| {
            GroupError::NotAnAutomorphism(format!("map {i}: {msg}"))
        })?);
    }

    // phi(h * h_i) = phi(h) ∘ phi(h_i), checked on every edge of the Cayley graph.
    let nh = acting.order();
    let unset = u32::MAX;
    let mut table = vec![unset; nh * nk];
    for (n, slot) in table[..nk].iter_mut().enumerate() {
        *slot = n as u32;
    }
    let mut assigned = vec![false; nh];
    assigned[0] = true;
    let mut queue = VecDeque::from([0u32]);
    while let Some(h) = queue.pop_front() {
        let h = h as usize;
        for (i, &gi) in acting.generators.iter().enumerate() {
            let h2 = acting.mul(h as u32, gi) as usize;
            let composed: Vec<u32> = (0..nk)
                .map(|n| table[h * nk + gen_maps[i][n] as usize])
                .collect();
            if assigned[h2] {
                if table[h2 * nk..(h2 + 1) * nk] != composed[..] {
                    return Err(GroupError::ActionNotWellDefined(
                        "generator maps violate a relation of the acting group".into(),
                    ));
                }
            } else {
                table[h2 * nk..(h2 + 1) * nk].copy_from_slice(&composed);
                assigned[h2] = true;
                queue.push_back(h2 as u32);
            }
        }
    }
    let trivial = gen_maps
        .iter()
        .all(|m| m.iter().enumerate().all(|(i, &x)| i as u32 == x));
    let nh32 = nh as u32;
    let mut gens: Vec<u32> = kernel.generators.iter().map(|&n| n * nh32).collect();
    gens.extend(acting.generators.iter().copied());
    let label = if trivial {
        format!("{} x {}", wrap(&kernel.label), wrap(&acting.label))
    } else {
        format!("{} : {}", wrap(&kernel.label), wrap(&acting.label))
    };
    Ok(Group::finish(
        &label,
        Law::Semidirect {
            kernel: kernel.clone(),
            acting: acting.clone(),
            action: table,
            generator_images: action.to_vec(),
            trivial,
        },
        gens,
    ))
}

/// Extends generator images to a map on all of `group`, checking that the
/// result is a bijective homomorphism.
fn extend_to_automorphism(group: &GroupHandle, images: &[u32]) -> Result<Vec<u32>, String> {
    let n = group.order();
    let unset = u32::MAX;
    let mut map = vec![unset; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for (j, &g) in group.generators.iter().enumerate() {
            let y = group.mul(x, g) as usize;
            let fy = group.mul(map[x as usize], images[j]);
            if map[y] == unset {
                map[y] = fy;
                queue.push_back(y as u32);
            } else if map[y] != fy {
                return Err("images do not respect the kernel's relations".into());
            }
        }
    }
    let mut hit = vec![false; n];
    for &v in &map {
        if v == unset || hit[v as usize] {
            return Err("induced map is not bijective".into());
        }
        hit[v as usize] = true;
    }
    Ok(map)
}

/// The elementary abelian group `F_p^dim`. Elements materialize as
/// translation matrices of size `dim + 1` acting on affine column vectors.
pub fn vector_group(p: u32, dim: usize, cap: usize) -> Result<GroupHandle, GroupError> {
    if !arith::is_prime(p as u64) {
        return Err(GroupError::InvalidElement(format!("modulus {p} is not prime")));
    }
    let order = (p as u128).pow(dim as u32);
    if order > cap as u128 || order > u32::MAX as u128 {
        return Err(GroupError::CapExceeded { cap });
    }
    let gens = (0..dim).map(|i| p.pow(i as u32)).collect();
    let label = if dim == 1 {
        format!("C{p}")
    } else {
        format!("C{p}^{dim}")
    };
    Ok(Group::finish(&label, Law::Vector { p, dim }, gens))
}

/// Base-`p` digits of `a`, least significant first.
pub fn digits(a: u32, p: u32, dim: usize) -> Vec<u32> {
    let mut a = a;
    (0..dim)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

pub fn vector_index(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn translation(p: u32, v: &[u32]) -> Matrix {
    let n = v.len() + 1;
    let mut entries = Matrix::identity(p, n).entries().to_vec();
    for (i, &x) in v.iter().enumerate() {
        entries[i * n + n - 1] = x;
    }
    Matrix::from_entries(p, n, entries)
}

fn translation_vector(m: &Matrix) -> Option<Vec<u32>> {
    let n = m.dim();
    if n < 2 {
        return None;
    }
    for i in 0..n {
        for j in 0..n - 1 {
            if m.entry(i, j) != u32::from(i == j) {
                return None;
            }
        }
    }
    if m.entry(n - 1, n - 1) != 1 {
        return None;
    }
    Some((0..n - 1).map(|i| m.entry(i, n - 1)).collect())
}

impl Group {
    fn finish(label: &str, law: Law, generators: Vec<u32>) -> GroupHandle {
        let order = match &law {
            Law::Perm { elements, .. } => elements.len(),
            Law::Matrix { elements, .. } => elements.len(),
            Law::Vector { p, dim } => (*p as usize).pow(*dim as u32),
            Law::Direct { left, right } => left.order * right.order,
            Law::Semidirect { kernel, acting, .. } => kernel.order * acting.order,
            Law::Quotient { reps, .. } => reps.len(),
            Law::Sub { members, .. } => members.len(),
        };
        let mut g = Group {
            label: label.to_string(),
            law,
            order,
            generators,
            inverses: Vec::new(),
            orders: Vec::new(),
            table: None,
            value_rank: OnceLock::new(),
            conjugacy: OnceLock::new(),
        };
        if !matches!(g.law, Law::Vector { .. }) && order <= TABLE_LIMIT {
            let mut t = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    t[a * order + b] = g.law_mul(a as u32, b as u32);
                }
            }
            g.table = Some(t);
        }
        g.compute_orders_and_inverses();
        Arc::new(g)
    }

    fn compute_orders_and_inverses(&mut self) {
        let n = self.order;
        let (orders, inverses) = match &self.law {
            Law::Direct { left, right } => {
                let m = right.order;
                let mut orders = Vec::with_capacity(n);
                let mut inverses = Vec::with_capacity(n);
                for a in 0..left.order {
                    for b in 0..m {
                        orders.push(
                            arith::lcm(left.orders[a] as u64, right.orders[b] as u64) as u32,
                        );
                        inverses.push(left.inverses[a] * m as u32 + right.inverses[b]);
                    }
                }
                (orders, inverses)
            }
            Law::Sub { parent, members, local } => (
                members.iter().map(|&m| parent.orders[m as usize]).collect(),
                members
                    .iter()
                    .map(|&m| local[parent.inverses[m as usize] as usize])
                    .collect(),
            ),
            _ => {
                let mut orders = vec![0u32; n];
                let mut inverses = vec![0u32; n];
                for a in 0..n as u32 {
                    let mut x = a;
                    let mut k = 1u32;
                    let mut prev = 0u32;
                    while x != 0 {
                        prev = x;
                        x = self.mul(x, a);
                        k += 1;
                    }
                    // invariant: x = a^k
                    orders[a as usize] = k;
                    inverses[a as usize] = prev;
                }
                (orders, inverses)
            }
        };
        self.orders = orders;
        self.inverses = inverses;
    }

    fn law_mul(&self, a: u32, b: u32) -> u32 {
        match &self.law {
            Law::Perm { elements, index } => {
                index[&elements[a as usize].mul(&elements[b as usize])]
            }
            Law::Matrix { elements, index } => {
                index[&elements[a as usize].mul(&elements[b as usize])]
            }
            Law::Vector { p, dim } => {
                let (mut a, mut b) = (a, b);
                let (mut out, mut place) = (0u32, 1u32);
                for _ in 0..*dim {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out
            }
            Law::Direct { left, right } => {
                let m = right.order as u32;
                left.mul(a / m, b / m) * m + right.mul(a % m, b % m)
            }
            Law::Semidirect {
                kernel,
                acting,
                action,
                ..
            } => {
                let m = acting.order as u32;
                let nk = kernel.order;
                let (n1, h1) = (a / m, a % m);
                let (n2, h2) = (b / m, b % m);
                let moved = action[h1 as usize * nk + n2 as usize];
                kernel.mul(n1, moved) * m + acting.mul(h1, h2)
            }
            Law::Quotient {
                parent,
                coset_of,
                reps,
            } => coset_of[parent.mul(reps[a as usize], reps[b as usize]) as usize],
            Law::Sub {
                parent,
                members,
                local,
            } => local[parent.mul(members[a as usize], members[b as usize]) as usize],
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.order + b as usize],
            None => self.law_mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `g^-1 x g`, written `x^g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        let k = k % self.orders[a as usize] as u64;
        let mut result = 0;
        let mut base = a;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        // [a, b] = a^-1 a^b
        self.mul(self.inv(a), self.conj(a, b))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// A copy of this group under a new display name.
    pub fn with_label(&self, label: &str) -> GroupHandle {
        let mut g = self.clone();
        g.label = label.to_string();
        Arc::new(g)
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order_of(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn construction(&self) -> Construction {
        match &self.law {
            Law::Perm { elements, .. } => Construction::Perm {
                degree: elements[0].degree(),
            },
            Law::Matrix { elements, .. } => Construction::Matrix {
                p: elements[0].modulus(),
                dim: elements[0].dim(),
            },
            Law::Vector { p, dim } => Construction::Vector { p: *p, dim: *dim },
            Law::Direct { .. } => Construction::Direct,
            Law::Semidirect { trivial, .. } => Construction::Semidirect { direct: *trivial },
            Law::Quotient { .. } => Construction::Quotient,
            Law::Sub { .. } => Construction::Subgroup,
        }
    }

    /// Kernel and acting group of a semidirect product.
    pub fn semidirect_factors(&self) -> Option<(&GroupHandle, &GroupHandle)> {
        match &self.law {
            Law::Semidirect { kernel, acting, .. } => Some((kernel, acting)),
            _ => None,
        }
    }

    /// Factors of a direct product.
    pub fn direct_factors(&self) -> Option<(&GroupHandle, &GroupHandle)> {
        match &self.law {
            Law::Direct { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// For semidirect products: per complement generator, the images of the
    /// kernel generators.
    pub fn action_table(&self) -> Option<Vec<Vec<Element>>> {
        match &self.law {
            Law::Semidirect {
                kernel,
                generator_images,
                ..
            } => Some(
                generator_images
                    .iter()
                    .map(|row| row.iter().map(|&x| kernel.element(x)).collect())
                    .collect(),
            ),
            _ => None,
        }
    }

    pub fn element(&self, a: u32) -> Element {
        match &self.law {
            Law::Perm { elements, .. } => Element::Perm(elements[a as usize].clone()),
            Law::Matrix { elements, .. } => Element::Matrix(elements[a as usize].clone()),
            Law::Vector { p, dim } => {
                Element::Matrix(translation(*p, &digits(a, *p, *dim)))
            }
            Law::Direct { left, right } => {
                let m = right.order as u32;
                Element::pair(left.element(a / m), right.element(a % m))
            }
            Law::Semidirect { kernel, acting, .. } => {
                let m = acting.order as u32;
                Element::pair(kernel.element(a / m), acting.element(a % m))
            }
            Law::Quotient { parent, reps, .. } => parent.element(reps[a as usize]),
            Law::Sub { parent, members, .. } => parent.element(members[a as usize]),
        }
    }

    pub fn index_of(&self, e: &Element) -> Option<u32> {
        match (&self.law, e) {
            (Law::Perm { index, .. }, Element::Perm(p)) => index.get(p).copied(),
            (Law::Matrix { index, .. }, Element::Matrix(m)) => index.get(m).copied(),
            (Law::Vector { p, dim }, Element::Matrix(m)) => {
                let v = translation_vector(m)?;
                (m.modulus() == *p && v.len() == *dim).then(|| vector_index(&v, *p))
            }
            (Law::Direct { left, right }, Element::Pair(a, b)) => {
                Some(left.index_of(a)? * right.order as u32 + right.index_of(b)?)
            }
            (Law::Semidirect { kernel, acting, .. }, Element::Pair(a, b)) => {
                Some(kernel.index_of(a)? * acting.order as u32 + acting.index_of(b)?)
            }
            (
                Law::Quotient {
                    parent,
                    coset_of,
                    reps,
                },
                _,
            ) => {
                let x = parent.index_of(e)?;
                let c = coset_of[x as usize];
                (reps[c as usize] == x).then_some(c)
            }
            (Law::Sub { parent, local, .. }, _) => {
                let x = parent.index_of(e)?;
                let l = local[x as usize];
                (l != u32::MAX).then_some(l)
            }
            _ => None,
        }
    }

    /// Index of `e`, or `NotMember`.
    pub fn locate(&self, e: &Element) -> Result<u32, GroupError> {
        self.index_of(e).ok_or(GroupError::NotMember)
    }

    /// Position of each element in the ordering of element values.
    pub fn value_rank(&self) -> &[u32] {
        self.value_rank.get_or_init(|| self.compute_value_rank())
    }

    /// Element indices sorted by value.
    pub fn value_order(&self) -> Vec<u32> {
        let rank = self.value_rank();
        let mut out = vec![0u32; self.order];
        for (i, &r) in rank.iter().enumerate() {
            out[r as usize] = i as u32;
        }
        out
    }

    fn compute_value_rank(&self) -> Vec<u32> {
        fn ranks_from_sorted(sorted: &[u32]) -> Vec<u32> {
            let mut rank = vec![0u32; sorted.len()];
            for (r, &i) in sorted.iter().enumerate() {
                rank[i as usize] = r as u32;
            }
            rank
        }
        match &self.law {
            Law::Perm { elements, .. } => {
                let mut idx: Vec<u32> = (0..self.order as u32).collect();
                idx.sort_by(|&a, &b| elements[a as usize].cmp(&elements[b as usize]));
                ranks_from_sorted(&idx)
            }
            Law::Matrix { elements, .. } => {
                let mut idx: Vec<u32> = (0..self.order as u32).collect();
                idx.sort_by(|&a, &b| elements[a as usize].cmp(&elements[b as usize]));
                ranks_from_sorted(&idx)
            }
            Law::Vector { .. } => (0..self.order as u32).collect(),
            Law::Direct { left, right }
            | Law::Semidirect {
                kernel: left,
                acting: right,
                ..
            } => {
                let (rl, rr) = (left.value_rank(), right.value_rank());
                let m = right.order as u32;
                (0..self.order as u32)
                    .map(|a| rl[(a / m) as usize] * m + rr[(a % m) as usize])
                    .collect()
            }
            Law::Quotient { parent, reps, .. } => {
                let pr = parent.value_rank();
                let mut idx: Vec<u32> = (0..self.order as u32).collect();
                idx.sort_by_key(|&c| pr[reps[c as usize] as usize]);
                ranks_from_sorted(&idx)
            }
            Law::Sub { parent, members, .. } => {
                let pr = parent.value_rank();
                let mut idx: Vec<u32> = (0..self.order as u32).collect();
                idx.sort_by_key(|&c| pr[members[c as usize] as usize]);
                ranks_from_sorted(&idx)
            }
        }
    }

    /// Closure of `gens` as a sorted index list together with a membership set.
    pub fn closure(&self, gens: &[u32]) -> (Vec<u32>, BitSet) {
        self.closure_capped(gens, usize::MAX)
            .expect("uncapped closure always succeeds")
    }

    /// Closure of `gens`, giving up once it exceeds `cap` elements.
    pub fn closure_capped(&self, gens: &[u32], cap: usize) -> Option<(Vec<u32>, BitSet)> {
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut seen = BitSet::new(self.order);
        seen.insert(0);
        let mut list = vec![0u32];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    if list.len() >= cap {
                        return None;
                    }
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        Some((list, seen))
    }

    /// Whether the set `members` (closed under multiplication) is normalized
    /// by every group generator, tested on the subgroup generators `sub_gens`.
    pub fn normalizes(&self, members: &BitSet, sub_gens: &[u32]) -> bool {
        self.generators
            .iter()
            .all(|&g| sub_gens.iter().all(|&s| members.contains(self.conj(s, g))))
    }

    /// Sampled associativity check on `samples` triples drawn deterministically.
    pub fn spot_check_associativity(&self, samples: usize) -> bool {
        let n = self.order as u64;
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n) as u32
        };
        (0..samples).all(|_| {
            let (a, b, c) = (next(), next(), next());
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }
}

/// Fixed-size membership set over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_indices(len: usize, items: &[u32]) -> Self {
        let mut s = BitSet::new(len);
        for &i in items {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        (self.words[i as usize / 64] >> (i % 64)) & 1 == 1
    }

    /// Inserts `i`; true when it was absent.
    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let w = &mut self.words[i as usize / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(wi as u32 * 64 + t)
            })
        })
    }
}

/// A subgroup of an enumerated group, stored as sorted parent indices.
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: GroupHandle,
    elements: Vec<u32>,
    members: BitSet,
    generators: Vec<u32>,
    normal: bool,
    as_group: OnceLock<GroupHandle>,
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupHandle")
            .field("parent", &self.parent.label())
            .field("order", &self.elements.len())
            .field("normal", &self.normal)
            .finish()
    }
}

impl SubgroupHandle {
    /// The subgroup generated by `gens`.
    pub fn generated(parent: &GroupHandle, gens: &[u32]) -> Self {
        let (elements, members) = parent.closure(gens);
        let generators: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        let normal = parent.normalizes(&members, &generators);
        SubgroupHandle {
            parent: parent.clone(),
            elements,
            members,
            generators,
            normal,
            as_group: OnceLock::new(),
        }
    }

    /// The subgroup generated by a set of elements, with a small generating
    /// set extracted greedily.
    pub fn from_elements(parent: &GroupHandle, items: &[u32]) -> Self {
        let mut gens: Vec<u32> = Vec::new();
        let mut current = BitSet::new(parent.order());
        current.insert(0);
        let mut elements = vec![0u32];
        for &x in items {
            if !current.contains(x) {
                gens.push(x);
                let (e, m) = parent.closure(&gens);
                elements = e;
                current = m;
            }
        }
        let normal = parent.normalizes(&current, &gens);
        SubgroupHandle {
            parent: parent.clone(),
            elements,
            members: current,
            generators: gens,
            normal,
            as_group: OnceLock::new(),
        }
    }

    pub fn trivial(parent: &GroupHandle) -> Self {
        Self::generated(parent, &[])
    }

    pub fn whole(parent: &GroupHandle) -> Self {
        Self::generated(parent, parent.generators())
    }

    pub fn parent(&self) -> &GroupHandle {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x)
    }

    pub fn contains_subgroup(&self, other: &SubgroupHandle) -> bool {
        other.members.is_subset(&self.members)
    }

    pub fn same_elements(&self, other: &SubgroupHandle) -> bool {
        self.elements == other.elements
    }

    /// This subgroup as a group in its own right.
    pub fn as_group(&self) -> GroupHandle {
        self.as_group
            .get_or_init(|| {
                let mut local = vec![u32::MAX; self.parent.order()];
                for (i, &m) in self.elements.iter().enumerate() {
                    local[m as usize] = i as u32;
                }
                let gens = self.generators.iter().map(|&g| local[g as usize]).collect();
                let label = format!("sub({}, {})", self.parent.label(), self.order());
                Group::finish(
                    &label,
                    Law::Sub {
                        parent: self.parent.clone(),
                        members: self.elements.clone(),
                        local,
                    },
                    gens,
                )
            })
            .clone()
    }

    /// Maps a subgroup of [`Self::as_group`] back into the parent.
    pub fn lift(&self, inner: &SubgroupHandle) -> SubgroupHandle {
        let gens: Vec<u32> = inner
            .generators()
            .iter()
            .map(|&g| self.elements[g as usize])
            .collect();
        SubgroupHandle::generated(&self.parent, &gens)
    }
}

/// Builds `G/N` on canonical coset representatives: the value-least element
/// of each coset. Cosets are numbered by their least element index, so the
/// identity coset is 0. The caller guarantees `N` is normal.
pub(crate) fn quotient_group(g: &GroupHandle, n: &SubgroupHandle) -> GroupHandle {
    let order = g.order();
    let unset = u32::MAX;
    let mut coset_of = vec![unset; order];
    let mut reps = Vec::new();
    let rank = g.value_rank();
    for x in 0..order as u32 {
        if coset_of[x as usize] != unset {
            continue;
        }
        let c = reps.len() as u32;
        let mut best = x;
        for &m in n.elements() {
            let y = g.mul(x, m);
            coset_of[y as usize] = c;
            if rank[y as usize] < rank[best as usize] {
                best = y;
            }
        }
        reps.push(best);
    }
    let mut gens: Vec<u32> = g
        .generators()
        .iter()
        .map(|&x| coset_of[x as usize])
        .filter(|&c| c != 0)
        .collect();
    gens.dedup();
    let label = format!("{} / {}", wrap(g.label()), n.order());
    Group::finish(
        &label,
        Law::Quotient {
            parent: g.clone(),
            coset_of,
            reps,
        },
        gens,
    )
}

/// Coset map of a quotient group, if this is one.
pub(crate) fn quotient_parts(g: &Group) -> Option<(&GroupHandle, &[u32], &[u32])> {
    match &g.law {
        Law::Quotient {
            parent,
            coset_of,
            reps,
        } => Some((parent, coset_of, reps)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(deg: usize, cycles: &[&[usize]]) -> Element {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Element::Perm(Perm::from_cycles(deg, &c).unwrap())
    }

    #[test]
    fn s3_from_transposition_and_three_cycle() {
        let g = enumerate(&[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.spot_check_associativity(200));
        // identity is a two-sided unit, inverses are inverses
        for a in 0..6 {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = enumerate(&[Element::Perm(Perm::identity(4))], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.order_of(0), 1);
    }

    #[test]
    fn cap_and_kind_errors() {
        let gens = [perm(5, &[&[1, 2, 3, 4, 5]]), perm(5, &[&[1, 2]])];
        assert_eq!(
            enumerate(&gens, 119).unwrap_err(),
            GroupError::CapExceeded { cap: 119 }
        );
        assert_eq!(enumerate(&gens, 120).unwrap().order(), 120);
        let m = Element::Matrix(Matrix::identity(3, 2));
        assert_eq!(
            enumerate(&[gens[0].clone(), m], 10).unwrap_err(),
            GroupError::IncompatibleKinds
        );
        assert_eq!(enumerate(&[], 10).unwrap_err(), GroupError::EmptyGenerators);
        assert_eq!(
            enumerate(&[perm(3, &[]), perm(4, &[])], 10).unwrap_err(),
            GroupError::IncompatibleKinds
        );
    }

    #[test]
    fn semidirect_c3_by_c2_is_s3() {
        let c3 = enumerate(&[perm(3, &[&[1, 2, 3]])], 10).unwrap();
        let c2 = enumerate(&[perm(2, &[&[1, 2]])], 10).unwrap();
        let r = c3.generators()[0];
        let s3 = semidirect_product_by_indices(&c3, &c2, &[vec![c3.inv(r)]], 100).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.construction(), Construction::Semidirect { direct: false });
        // (n1,h1)(n2,h2) = (n1 * (h1 . n2), h1 h2): conjugating the kernel
        // generator by the complement generator inverts it
        let n = s3.generators()[0];
        let h = s3.generators()[1];
        assert_eq!(s3.conj(n, h), s3.inv(n));
        let max_order = s3.element_orders().iter().max().copied();
        assert_eq!(max_order, Some(3));
    }

    #[test]
    fn trivial_action_is_labelled_direct() {
        let c3 = enumerate(&[perm(3, &[&[1, 2, 3]])], 10).unwrap();
        let c2 = enumerate(&[perm(2, &[&[1, 2]])], 10).unwrap();
        let g = semidirect_product_by_indices(&c3, &c2, &[vec![c3.generators()[0]]], 100).unwrap();
        assert_eq!(g.construction(), Construction::Semidirect { direct: true });
        assert_eq!(g.order(), 6);
        assert!(g.element_orders().contains(&6));
    }

    #[test]
    fn bad_actions_are_rejected() {
        let c3 = enumerate(&[perm(3, &[&[1, 2, 3]])], 10).unwrap();
        let c2 = enumerate(&[perm(2, &[&[1, 2]])], 10).unwrap();
        // generator to identity: not bijective
        assert!(matches!(
            semidirect_product_by_indices(&c3, &c2, &[vec![0]], 100),
            Err(GroupError::NotAnAutomorphism(_))
        ));
        // an automorphism of order 2 cannot be the image of a C3 generator
        let c3b = enumerate(&[perm(3, &[&[1, 2, 3]])], 10).unwrap();
        let r = c3.generators()[0];
        assert!(matches!(
            semidirect_product_by_indices(&c3, &c3b, &[vec![c3.inv(r)]], 100),
            Err(GroupError::ActionNotWellDefined(_))
        ));
    }

    #[test]
    fn direct_product_orders_and_membership() {
        let c2 = enumerate(&[perm(2, &[&[1, 2]])], 10).unwrap();
        let c3 = enumerate(&[perm(3, &[&[1, 2, 3]])], 10).unwrap();
        let g = direct_product(&c2, &c3, 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element_orders().contains(&6));
        for a in 0..6 {
            assert_eq!(g.index_of(&g.element(a)), Some(a));
        }
        assert_eq!(
            direct_product(&c2, &c3, 5).unwrap_err(),
            GroupError::CapExceeded { cap: 5 }
        );
    }

    #[test]
    fn bitset_basics() {
        let mut s = BitSet::new(130);
        assert!(s.insert(129));
        assert!(!s.insert(129));
        s.insert(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(s.count(), 2);
        let t = BitSet::from_indices(130, &[3, 5, 129]);
        assert!(s.is_subset(&t));
        assert!(!t.is_subset(&s));
    }
}
