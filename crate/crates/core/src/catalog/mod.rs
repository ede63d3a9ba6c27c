//! Builders, explicit constructions and the named catalog.
//!
//! Catalog names are stable identifiers: `fig3.a` .. `fig3.r` for the
//! realizations of the figure graphs, `twofrob.c/e/g/l` for the 2-Frobenius
//! witnesses, `frob.*` for small members of the Frobenius cut families and
//! `experimental.2s4` for the binary octahedral group.

pub mod builders;
pub mod corpus;
pub mod matrices;
pub mod search;

use crate::element::Matrix;
use crate::error::GroupError;
use crate::frobenius::FrobeniusKind;
use crate::group::{direct_product_all, GroupHandle, DEFAULT_CAP};

use search::vector_semidirect;

/// Properties a catalog group must have.
#[derive(Clone, Debug)]
pub struct Expected {
    pub order: usize,
    /// GK-graph in literal form.
    pub graph: &'static str,
    pub is_cut: bool,
    /// `None` when not part of the claim being recorded.
    pub is_rational: Option<bool>,
    pub frobenius_kind: FrobeniusKind,
    /// Family tag and parameter for Frobenius cut family members.
    pub family: Option<(&'static str, u32)>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub recipe: &'static str,
    /// Label of the figure graph this group realizes.
    pub figure: Option<&'static str>,
    /// SmallGroups identifier, kept as metadata only.
    pub small_group_id: Option<&'static str>,
    pub experimental: bool,
    pub expected: Expected,
    build: fn() -> Result<GroupHandle, GroupError>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<GroupHandle, GroupError> {
        Ok((self.build)()?.with_label(self.recipe))
    }
}

fn mats(p: u32, rows: &[&[&[i64]]]) -> Vec<Matrix> {
    rows.iter()
        .map(|m| {
            let r: Vec<Vec<i64>> = m.iter().map(|row| row.to_vec()).collect();
            Matrix::invertible_from_rows(p, &r).expect("pinned matrix is invertible")
        })
        .collect()
}

fn named(p: u32, names: &[&str]) -> Vec<Matrix> {
    names
        .iter()
        .map(|n| matrices::reduced(n, p).expect("named matrix"))
        .collect()
}

fn dp(parts: Vec<Result<GroupHandle, GroupError>>) -> Result<GroupHandle, GroupError> {
    let parts: Vec<GroupHandle> = parts.into_iter().collect::<Result<_, _>>()?;
    direct_product_all(&parts, DEFAULT_CAP)
}

/// `Q8` on `F_5^2` by `diag(2, -2)` and `[[0, 1], [-1, 0]]`.
pub fn q8_on_f5() -> Vec<Matrix> {
    mats(5, &[&[&[2, 0], &[0, -2]], &[&[0, 1], &[-1, 0]]])
}

/// `C3 : C4` acting fixed-point-freely on `F_5^2`; first hit of the GL(2,5) search.
pub fn c3c4_on_f5() -> Vec<Matrix> {
    mats(5, &[&[&[0, 1], &[4, 1]], &[&[0, 2], &[2, 0]]])
}

/// `SL(2,3)` acting fixed-point-freely on `F_5^2`; first hit of the GL(2,5) search.
pub fn sl23_on_f5() -> Vec<Matrix> {
    mats(5, &[&[&[0, 1], &[4, 1]], &[&[0, 2], &[2, 1]]])
}

/// `SL(2,3)` acting fixed-point-freely on `F_7^2`; first hit of the GL(2,7) search.
pub fn sl23_on_f7() -> Vec<Matrix> {
    mats(7, &[&[&[0, 1], &[6, 1]], &[&[0, 2], &[3, 0]]])
}

/// `Q8 x C3` acting fixed-point-freely on `F_7^2`; first hit of the GL(2,7) search.
pub fn q8c3_on_f7() -> Vec<Matrix> {
    mats(7, &[&[&[0, 1], &[3, 0]], &[&[1, 1], &[4, 6]]])
}

/// `C4` on `F_3^2`; first hit of the GL(2,3) search.
pub fn c4_on_f3() -> Vec<Matrix> {
    mats(3, &[&[&[0, 1], &[2, 0]]])
}

/// `Q8` on `F_3^2`; first hit of the GL(2,3) search.
pub fn q8_on_f3() -> Vec<Matrix> {
    mats(3, &[&[&[0, 1], &[2, 0]], &[&[1, 1], &[1, 2]]])
}

/// Binary octahedral group inside `SL(2,7)`; first hit of the SL(2,7) search.
pub fn binary_octahedral() -> Vec<Matrix> {
    mats(7, &[&[&[0, 1], &[6, 3]], &[&[1, 1], &[4, 5]]])
}

fn scalar(p: u32, d: usize, s: i64) -> Vec<Matrix> {
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { s } else { 0 }).collect())
        .collect();
    vec![Matrix::invertible_from_rows(p, &rows).expect("non-zero scalar")]
}

fn fig3_e() -> Result<GroupHandle, GroupError> {
    vector_semidirect(5, &q8_on_f5(), DEFAULT_CAP)
}

fn fig3_h() -> Result<GroupHandle, GroupError> {
    vector_semidirect(5, &c3c4_on_f5(), DEFAULT_CAP)
}

fn fig3_l() -> Result<GroupHandle, GroupError> {
    builders::c7_semi_c6()
}

macro_rules! entry {
    ($name:expr, $recipe:expr, $fig:expr, $sg:expr, $order:expr, $graph:expr, $cut:expr,
     $rat:expr, $kind:expr, $family:expr, $build:expr) => {
        CatalogEntry {
            name: $name,
            recipe: $recipe,
            figure: $fig,
            small_group_id: $sg,
            experimental: false,
            expected: Expected {
                order: $order,
                graph: $graph,
                is_cut: $cut,
                is_rational: $rat,
                frobenius_kind: $kind,
                family: $family,
            },
            build: $build,
        }
    };
}

use FrobeniusKind::{Frobenius as Frob, None as NoFrob, TwoFrobenius as TwoFrob};

pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = figure_entries();
    out.extend(two_frobenius_entries());
    out.extend(family_entries());
    out.push(CatalogEntry {
        experimental: true,
        ..entry!("experimental.2s4", "2.S4", None, Some("SG(48,28)"), 48, "2-3", false,
            None, NoFrob, None, || crate::group::enumerate_labeled(
                &binary_octahedral().into_iter().map(Into::into).collect::<Vec<_>>(),
                DEFAULT_CAP, "2.S4"))
    });
    out
}

/// The eighteen realizations of the figure graphs; shaded ones are rational.
pub fn figure_entries() -> Vec<CatalogEntry> {
    vec![
        entry!("fig3.a", "C2", Some("a"), None, 2, "2", true, Some(true), NoFrob, None,
            || builders::cyclic(2)),
        entry!("fig3.b", "C3", Some("b"), None, 3, "3", true, Some(false), NoFrob, None,
            || builders::cyclic(3)),
        entry!("fig3.c", "S3", Some("c"), None, 6, "2,3", true, Some(true), Frob, None,
            || builders::sym(3)),
        entry!("fig3.d", "S3 x C2", Some("d"), None, 12, "2-3", true, Some(true), NoFrob, None,
            || dp(vec![builders::sym(3), builders::cyclic(2)])),
        entry!("fig3.e", "C5^2:Q8", Some("e"), Some("SG(200,44)"), 200, "2,5", true, Some(true),
            Frob, None, fig3_e),
        entry!("fig3.f", "(C5^2:Q8) x C2", Some("f"), None, 400, "2-5", true, Some(true),
            NoFrob, None, || dp(vec![fig3_e(), builders::cyclic(2)])),
        entry!("fig3.g", "C7:C3", Some("g"), Some("SG(21,1)"), 21, "3,7", true, Some(false),
            Frob, None, builders::c7_semi_c3),
        entry!("fig3.h", "C5^2:(C3:C4)", Some("h"), Some("SG(300,23)"), 300, "2-3,5", true,
            Some(false), Frob, None, fig3_h),
        entry!("fig3.i", "(C5^2:(C3:C4)) x C2", Some("i"), None, 600, "3-2-5", true, Some(false),
            NoFrob, None, || dp(vec![fig3_h(), builders::cyclic(2)])),
        entry!("fig3.j", "(C5^2:Q8) x C3", Some("j"), None, 600, "2-3-5", true, Some(false),
            NoFrob, None, || dp(vec![fig3_e(), builders::cyclic(3)])),
        entry!("fig3.k", "(C5^2:Q8) x S3", Some("k"), None, 1200, "2-3-5-2", true, Some(true),
            NoFrob, None, || dp(vec![fig3_e(), builders::sym(3)])),
        entry!("fig3.l", "C7:C6", Some("l"), Some("SG(42,1)"), 42, "2-3,7", true, Some(false),
            Frob, None, fig3_l),
        entry!("fig3.m", "(C7:C6) x C2", Some("m"), None, 84, "3-2-7", true, Some(false),
            NoFrob, None, || dp(vec![fig3_l(), builders::cyclic(2)])),
        entry!("fig3.n", "(C7:C6) x C3", Some("n"), None, 126, "2-3-7", true, Some(false),
            NoFrob, None, || dp(vec![fig3_l(), builders::cyclic(3)])),
        entry!("fig3.o", "(C7:C3) x S3", Some("o"), None, 126, "2-3-7-2", true, Some(false),
            NoFrob, None, || dp(vec![builders::c7_semi_c3(), builders::sym(3)])),
        entry!("fig3.p", "(C5^2:Q8) x (C7:C3)", Some("p"), None, 4200, "2-3-5-7-2", true,
            Some(false), NoFrob, None, || dp(vec![fig3_e(), builders::c7_semi_c3()])),
        entry!("fig3.q", "(C5^2:Q8) x (C7:C3) x C2", Some("q"), None, 8400, "2-3-5-7-2-5", true,
            Some(false), NoFrob, None,
            || dp(vec![fig3_e(), builders::c7_semi_c3(), builders::cyclic(2)])),
        entry!("fig3.r", "(C5^2:Q8) x (C7:C6) x C3", Some("r"), None, 25200, "2-3-5-7-2-5,3-7",
            true, Some(false), NoFrob, None,
            || dp(vec![fig3_e(), fig3_l(), builders::cyclic(3)])),
    ]
}

/// `F_p^d ⋊ H` with `H` generated by the named integer matrices mod `p`.
pub fn two_frobenius_entries() -> Vec<CatalogEntry> {
    vec![
        entry!("twofrob.c", "C2^2:<C,D> mod 2", Some("c"), None, 24, "2,3", true, Some(true),
            TwoFrob, None, || vector_semidirect(2, &named(2, &["C", "D"]), DEFAULT_CAP)),
        entry!("twofrob.e", "C2^4:<E,F> mod 2", Some("e"), None, 320, "2,5", true, None,
            TwoFrob, None, || vector_semidirect(2, &named(2, &["E", "F"]), DEFAULT_CAP)),
        entry!("twofrob.g", "C3^6:<A,B^2> mod 3", Some("g"), None, 15309, "3,7", true, None,
            TwoFrob, None, || {
                let b = matrices::reduced("B", 3)?;
                let gens = vec![matrices::reduced("A", 3)?, b.mul(&b)];
                vector_semidirect(3, &gens, DEFAULT_CAP)
            }),
        entry!("twofrob.l", "C2^6:<A,B> mod 2", Some("l"), None, 2688, "2-3,7", true, None,
            TwoFrob, None, || vector_semidirect(2, &named(2, &["A", "B"]), DEFAULT_CAP)),
    ]
}

/// Members of the Frobenius cut families with kernel rank at most 2.
pub fn family_entries() -> Vec<CatalogEntry> {
    vec![
        entry!("frob.c3-c2", "C3:C2", None, None, 6, "2,3", true, None, Frob,
            Some(("C3^n:C2", 1)), || builders::sym(3)),
        entry!("frob.c3^2-c2", "C3^2:C2", None, None, 18, "2,3", true, None, Frob,
            Some(("C3^n:C2", 2)), || vector_semidirect(3, &scalar(3, 2, -1), DEFAULT_CAP)),
        entry!("frob.c3^2-c4", "C3^2:C4", None, None, 36, "2,3", true, None, Frob,
            Some(("C3^2n:C4", 1)), || vector_semidirect(3, &c4_on_f3(), DEFAULT_CAP)),
        entry!("frob.c3^2-q8", "C3^2:Q8", None, None, 72, "2,3", true, None, Frob,
            Some(("C3^2n:Q8", 1)), || vector_semidirect(3, &q8_on_f3(), DEFAULT_CAP)),
        entry!("frob.c5-c4", "C5:C4", None, None, 20, "2,5", true, None, Frob,
            Some(("C5^n:C4", 1)), builders::c5_semi_c4),
        entry!("frob.c5^2-c4", "C5^2:C4", None, None, 100, "2,5", true, None, Frob,
            Some(("C5^n:C4", 2)), || vector_semidirect(5, &scalar(5, 2, 2), DEFAULT_CAP)),
        entry!("frob.c7-c6", "C7:C6", None, None, 42, "2-3,7", true, None, Frob,
            Some(("C7^n:C6", 1)), builders::c7_semi_c6),
        entry!("frob.c7^2-c6", "C7^2:C6", None, None, 294, "2-3,7", true, None, Frob,
            Some(("C7^n:C6", 2)), || vector_semidirect(7, &scalar(7, 2, 3), DEFAULT_CAP)),
        entry!("frob.c7^2-q8xc3", "C7^2:(Q8xC3)", None, None, 1176, "2-3,7", true, None, Frob,
            Some(("C7^2n:(Q8xC3)", 1)), || vector_semidirect(7, &q8c3_on_f7(), DEFAULT_CAP)),
        entry!("frob.c5^2-q8", "C5^2:Q8", None, None, 200, "2,5", true, None, Frob,
            Some(("C5^2:Q8", 1)), fig3_e),
        entry!("frob.c5^2-c3c4", "C5^2:(C3:C4)", None, None, 300, "2-3,5", true, None, Frob,
            Some(("C5^2:(C3:C4)", 1)), fig3_h),
        entry!("frob.c5^2-sl23", "C5^2:SL(2,3)", None, None, 600, "2-3,5", true, None, Frob,
            Some(("C5^2:SL(2,3)", 1)), || vector_semidirect(5, &sl23_on_f5(), DEFAULT_CAP)),
        entry!("frob.c7^2-sl23", "C7^2:SL(2,3)", None, None, 1176, "2-3,7", true, None, Frob,
            Some(("C7^2:SL(2,3)", 1)), || vector_semidirect(7, &sl23_on_f7(), DEFAULT_CAP)),
    ]
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Builds a catalog group or one of the parameter-free builders by name
/// (`S4`, `A5`, `Q8`, `SL(2,3)`, `C6`, `D10`, ...).
pub fn resolve(name: &str) -> Result<GroupHandle, GroupError> {
    if let Some(e) = lookup(name) {
        return e.build();
    }
    builtin(name, &[])
}

/// Builders by name with integer parameters.
pub fn builtin(name: &str, params: &[u64]) -> Result<GroupHandle, GroupError> {
    let arg = |i: usize| params.get(i).map(|&v| v as usize);
    let numeric = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|rest| rest.parse::<usize>().ok())
    };
    let unknown = || GroupError::InvalidElement(format!("unknown group name {name:?}"));
    match name {
        "cyclic" => builders::cyclic(arg(0).ok_or_else(unknown)?),
        "elem_abelian" => builders::elem_abelian(
            arg(0).ok_or_else(unknown)? as u32,
            arg(1).ok_or_else(unknown)?,
        ),
        "dihedral" => builders::dihedral(arg(0).ok_or_else(unknown)?),
        "sym" => builders::sym(arg(0).ok_or_else(unknown)?),
        "alt" => builders::alt(arg(0).ok_or_else(unknown)?),
        "quaternion8" | "Q8" => builders::quaternion8(),
        "sl2_3" | "SL(2,3)" => builders::sl2_3(),
        "C5:C4" => builders::c5_semi_c4(),
        "C7:C3" => builders::c7_semi_c3(),
        "C7:C6" => builders::c7_semi_c6(),
        "C3:C4" => builders::c3_semi_c4(),
        "trivial" => builders::cyclic(1),
        _ => {
            if let Some(n) = numeric("C") {
                builders::cyclic(n)
            } else if let Some(n) = numeric("D") {
                builders::dihedral(n)
            } else if let Some(n) = numeric("S") {
                builders::sym(n)
            } else if let Some(n) = numeric("A") {
                builders::alt(n)
            } else {
                Err(unknown())
            }
        }
    }
}
