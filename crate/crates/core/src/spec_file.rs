//! JSON group specification files.
//!
//! ```json
//! {
//!   "groups": {
//!     "S3": {"type": "perm", "degree": 3, "gens": [[[1, 2, 3]], [[1, 2]]]},
//!     "K": {"type": "builtin", "name": "elem_abelian", "params": [2, 2]},
//!     "G": {"type": "semidirect", "kernel": "K", "acting": "S3",
//!           "action": {"images": [[[2], [-1, -2]], [[2], [1]]]}}
//!   },
//!   "analyze": ["G"]
//! }
//! ```
//!
//! Cycles use 1-based points. An `images` action lists, for each generator
//! of the acting group, the image of each kernel generator as a word in the
//! kernel generators (1-based, negative for inverses). A `matrices_mod_p`
//! action gives one matrix per acting generator and needs a kernel built as
//! `elem_abelian`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use thiserror::Error;

use crate::catalog;
use crate::element::{Element, Matrix, Perm};
use crate::error::GroupError;
use crate::group::{
    direct_product_all, enumerate_labeled, semidirect_product_by_indices, vector_index,
    Construction, GroupHandle,
};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot parse group specification: {0}")]
    Parse(String),
    #[error("invalid group specification: {0}")]
    Invalid(String),
    #[error("group {name:?}: {source}")]
    Group { name: String, source: GroupError },
}

impl SpecError {
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            SpecError::Group {
                source: GroupError::CapExceeded { .. },
                ..
            }
        )
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Recipe {
    Perm {
        degree: usize,
        gens: Vec<Vec<Vec<usize>>>,
    },
    Matgrp {
        p: u32,
        dim: usize,
        gens: Vec<Vec<Vec<i64>>>,
    },
    Builtin {
        name: String,
        #[serde(default)]
        params: Vec<u64>,
    },
    Catalog {
        name: String,
    },
    Direct {
        factors: Vec<String>,
    },
    Semidirect {
        kernel: String,
        acting: String,
        action: Action,
    },
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Action {
    MatricesModP(Vec<Vec<Vec<i64>>>),
    Images(Vec<Vec<Vec<i64>>>),
}

impl Recipe {
    fn references(&self) -> Vec<&str> {
        match self {
            Recipe::Direct { factors } => factors.iter().map(String::as_str).collect(),
            Recipe::Semidirect { kernel, acting, .. } => vec![kernel, acting],
            _ => Vec::new(),
        }
    }
}

/// Name map that rejects duplicate keys.
#[derive(Clone, Debug, PartialEq)]
struct Groups(BTreeMap<String, Recipe>);

impl<'de> Deserialize<'de> for Groups {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Groups;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from group names to recipes")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> Result<Groups, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, v)) = m.next_entry::<String, Recipe>()? {
                    if out.contains_key(&k) {
                        return Err(de::Error::custom(format!("duplicate group name {k:?}")));
                    }
                    out.insert(k, v);
                }
                Ok(Groups(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    groups: Groups,
    #[serde(default)]
    analyze: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpecFile {
    pub groups: BTreeMap<String, Recipe>,
    /// Groups to report on; all groups in name order when absent.
    pub analyze: Vec<String>,
}

impl GroupSpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let raw: Raw = serde_json::from_str(text).map_err(|e| SpecError::Parse(e.to_string()))?;
        let groups = raw.groups.0;
        if groups.is_empty() {
            return Err(SpecError::Invalid("the \"groups\" map is empty".into()));
        }
        for (name, recipe) in &groups {
            for r in recipe.references() {
                if !groups.contains_key(r) {
                    return Err(SpecError::Invalid(format!(
                        "group {name:?} refers to undefined group {r:?}"
                    )));
                }
            }
        }
        let analyze = raw.analyze.unwrap_or_else(|| groups.keys().cloned().collect());
        for a in &analyze {
            if !groups.contains_key(a) {
                return Err(SpecError::Invalid(format!("cannot analyze undefined group {a:?}")));
            }
        }
        let spec = GroupSpecFile { groups, analyze };
        spec.check_acyclic()?;
        Ok(spec)
    }

    fn check_acyclic(&self) -> Result<(), SpecError> {
        // 0 unvisited, 1 on the stack, 2 done
        let mut state: BTreeMap<&str, u8> = BTreeMap::new();
        fn visit<'a>(
            spec: &'a GroupSpecFile,
            name: &'a str,
            state: &mut BTreeMap<&'a str, u8>,
        ) -> Result<(), SpecError> {
            match state.get(name) {
                Some(2) => return Ok(()),
                Some(1) => {
                    return Err(SpecError::Invalid(format!(
                        "recipes are cyclic through {name:?}"
                    )))
                }
                _ => {}
            }
            state.insert(name, 1);
            for r in spec.groups[name].references() {
                visit(spec, r, state)?;
            }
            state.insert(name, 2);
            Ok(())
        }
        for name in self.groups.keys() {
            visit(self, name, &mut state)?;
        }
        Ok(())
    }

    /// Builds every group named in `analyze` (and their dependencies),
    /// returning them in `analyze` order.
    pub fn build(&self, cap: usize) -> Result<Vec<(String, GroupHandle)>, SpecError> {
        let mut built: BTreeMap<String, GroupHandle> = BTreeMap::new();
        self.analyze
            .iter()
            .map(|name| Ok((name.clone(), self.build_one(name, cap, &mut built)?)))
            .collect()
    }

    fn build_one(
        &self,
        name: &str,
        cap: usize,
        built: &mut BTreeMap<String, GroupHandle>,
    ) -> Result<GroupHandle, SpecError> {
        if let Some(g) = built.get(name) {
            return Ok(g.clone());
        }
        let err = |source: GroupError| SpecError::Group {
            name: name.to_string(),
            source,
        };
        let capped = |g: GroupHandle| {
            if g.order() > cap {
                Err(GroupError::CapExceeded { cap })
            } else {
                Ok(g)
            }
        };
        let g = match &self.groups[name] {
            Recipe::Perm { degree, gens } => {
                let els = gens
                    .iter()
                    .map(|cycles| Perm::from_cycles(*degree, cycles).map(Element::from))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                let els = if els.is_empty() {
                    vec![Element::from(Perm::identity(*degree))]
                } else {
                    els
                };
                enumerate_labeled(&els, cap, name).map_err(err)?
            }
            Recipe::Matgrp { p, dim, gens } => {
                let els = gens
                    .iter()
                    .map(|rows| {
                        if rows.len() != *dim || rows.iter().any(|r| r.len() != *dim) {
                            return Err(GroupError::InvalidElement(format!(
                                "matrix is not {dim} x {dim}"
                            )));
                        }
                        Matrix::invertible_from_rows(*p, rows).map(Element::from)
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                enumerate_labeled(&els, cap, name).map_err(err)?
            }
            Recipe::Builtin { name: b, params } => {
                catalog::builtin(b, params).and_then(capped).map_err(err)?
            }
            Recipe::Catalog { name: c } => {
                let entry = catalog::lookup(c).ok_or_else(|| {
                    SpecError::Invalid(format!("group {name:?}: no catalog entry {c:?}"))
                })?;
                entry.build().and_then(capped).map_err(err)?
            }
            Recipe::Direct { factors } => {
                let parts = factors
                    .iter()
                    .map(|f| self.build_one(f, cap, built))
                    .collect::<Result<Vec<_>, _>>()?;
                if parts.is_empty() {
                    return Err(SpecError::Invalid(format!("group {name:?} has no factors")));
                }
                direct_product_all(&parts, cap).map_err(err)?
            }
            Recipe::Semidirect {
                kernel,
                acting,
                action,
            } => {
                let k = self.build_one(kernel, cap, built)?;
                let h = self.build_one(acting, cap, built)?;
                let table = action_indices(&k, action).map_err(err)?;
                semidirect_product_by_indices(&k, &h, &table, cap).map_err(err)?
            }
        };
        let g = g.with_label(name);
        built.insert(name.to_string(), g.clone());
        Ok(g)
    }
}

fn action_indices(kernel: &GroupHandle, action: &Action) -> Result<Vec<Vec<u32>>, GroupError> {
    match action {
        Action::MatricesModP(ms) => {
            let Construction::Vector { p, dim } = kernel.construction() else {
                return Err(GroupError::InvalidElement(
                    "matrices_mod_p needs an elem_abelian kernel".into(),
                ));
            };
            ms.iter()
                .map(|rows| {
                    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                        return Err(GroupError::InvalidElement(format!(
                            "action matrix is not {dim} x {dim}"
                        )));
                    }
                    let m = Matrix::invertible_from_rows(p, rows)?;
                    Ok((0..dim)
                        .map(|i| {
                            let mut e = vec![0u32; dim];
                            e[i] = 1;
                            vector_index(&m.apply(&e), p)
                        })
                        .collect())
                })
                .collect()
        }
        Action::Images(maps) => {
            let gens = kernel.generators();
            maps.iter()
                .map(|images| {
                    images
                        .iter()
                        .map(|word| {
                            let mut x = kernel.identity();
                            for &letter in word {
                                let i = letter.unsigned_abs() as usize;
                                if letter == 0 || i > gens.len() {
                                    return Err(GroupError::InvalidElement(format!(
                                        "word letter {letter} names no kernel generator"
                                    )));
                                }
                                let g = gens[i - 1];
                                let g = if letter < 0 { kernel.inv(g) } else { g };
                                x = kernel.mul(x, g);
                            }
                            Ok(x)
                        })
                        .collect()
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_builds_s4_as_semidirect() {
        let text = r#"{
            "groups": {
                "S3": {"type": "perm", "degree": 3, "gens": [[[1, 2, 3]], [[1, 2]]]},
                "K": {"type": "builtin", "name": "elem_abelian", "params": [2, 2]},
                "G": {"type": "semidirect", "kernel": "K", "acting": "S3",
                      "action": {"matrices_mod_p": [[[0, 1], [1, 1]], [[0, 1], [1, 0]]]}}
            },
            "analyze": ["G", "S3"]
        }"#;
        let spec = GroupSpecFile::parse(text).unwrap();
        let built = spec.build(1 << 20).unwrap();
        assert_eq!(built[0].1.order(), 24);
        assert_eq!(built[1].1.order(), 6);
    }

    #[test]
    fn rejects_bad_files() {
        let dup = r#"{"groups": {"A": {"type": "builtin", "name": "S3"},
                                 "A": {"type": "builtin", "name": "S4"}}}"#;
        assert!(matches!(GroupSpecFile::parse(dup), Err(SpecError::Parse(_))));
        let cyc = r#"{"groups": {"A": {"type": "direct", "factors": ["B"]},
                                 "B": {"type": "direct", "factors": ["A"]}}}"#;
        assert!(matches!(GroupSpecFile::parse(cyc), Err(SpecError::Invalid(_))));
        let undef = r#"{"groups": {"A": {"type": "direct", "factors": ["Z"]}}}"#;
        assert!(matches!(GroupSpecFile::parse(undef), Err(SpecError::Invalid(_))));
        assert!(GroupSpecFile::parse(r#"{"groups": {}}"#).is_err());
    }

    #[test]
    fn cap_is_reported() {
        let text = r#"{"groups": {"S6": {"type": "builtin", "name": "S6"}}}"#;
        let e = GroupSpecFile::parse(text).unwrap().build(100).unwrap_err();
        assert!(e.is_cap());
    }
}
