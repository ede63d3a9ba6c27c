//! Deterministic pseudo-random stream of small groups for invariant scans.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Matrix;
use crate::error::GroupError;
use crate::group::{direct_product, GroupHandle};

use super::builders::*;
use super::search::vector_semidirect;

fn base_pool() -> Vec<GroupHandle> {
    let mut pool: Vec<Result<GroupHandle, GroupError>> = (2..=9).map(cyclic).collect();
    pool.extend([
        elem_abelian(2, 2),
        elem_abelian(2, 3),
        elem_abelian(3, 2),
        sym(3),
        dihedral(8),
        quaternion8(),
        dihedral(10),
        dihedral(12),
        alt(4),
        sym(4),
        sl2_3(),
        c3_semi_c4(),
        c5_semi_c4(),
        c7_semi_c3(),
        c7_semi_c6(),
        alt(5),
        super::lookup("fig3.e").expect("catalog").build(),
        super::lookup("fig3.h").expect("catalog").build(),
    ]);
    pool.into_iter()
        .map(|g| g.expect("base pool builds"))
        .collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, p: u32, d: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(0..p as i64)).collect())
            .collect();
        if let Ok(m) = Matrix::invertible_from_rows(p, &rows) {
            return m;
        }
    }
}

fn label_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    format!("[{}]", rows.join(";"))
}

/// `count` groups of order at most `max_order`, built by combining base
/// groups through direct products and semidirect products `F_p^d ⋊ <M>`
/// with one or two random matrices. Rejected or duplicate candidates are
/// skipped; the stream depends only on the arguments.
pub fn corpus(seed: u64, count: usize, max_order: usize) -> Vec<GroupHandle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base: Vec<GroupHandle> = base_pool()
        .into_iter()
        .filter(|g| g.order() <= max_order)
        .collect();
    let mut out: Vec<GroupHandle> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 500 {
        attempts += 1;
        let pick = |rng: &mut ChaCha8Rng, out: &[GroupHandle]| -> GroupHandle {
            if !out.is_empty() && rng.gen_bool(0.3) {
                out[rng.gen_range(0..out.len())].clone()
            } else {
                base[rng.gen_range(0..base.len())].clone()
            }
        };
        let roll = rng.gen_range(0..100);
        let candidate: Result<GroupHandle, GroupError> = if roll < 15 {
            Ok(base[rng.gen_range(0..base.len())].clone())
        } else if roll < 50 {
            let a = pick(&mut rng, &out);
            let b = pick(&mut rng, &out);
            direct_product(&a, &b, max_order)
        } else if roll < 58 {
            let a = pick(&mut rng, &out);
            let b = pick(&mut rng, &out);
            let c = pick(&mut rng, &out);
            direct_product(&a, &b, max_order).and_then(|ab| direct_product(&ab, &c, max_order))
        } else {
            let (p, d) = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (5, 2), (7, 2), (2, 3), (3, 3), (2, 4)]
                [rng.gen_range(0..11)];
            let ngens = if rng.gen_bool(0.35) { 2 } else { 1 };
            let ms: Vec<Matrix> = (0..ngens).map(|_| random_matrix(&mut rng, p, d)).collect();
            let label = format!(
                "C{p}^{d}:<{}>",
                ms.iter().map(label_matrix).collect::<Vec<_>>().join(",")
            );
            vector_semidirect(p, &ms, max_order).map(|g| g.with_label(&label))
        };
        let Ok(g) = candidate else {
            continue;
        };
        if g.order() > max_order || !seen.insert(g.label().to_string()) {
            continue;
        }
        out.push(g);
    }
    out
}
