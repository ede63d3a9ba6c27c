//! JSON analysis reports. Every map is a `BTreeMap` and every list has a
//! fixed order, so identical inputs give identical bytes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::frobenius::{frobenius_kind, FrobeniusKind};
use crate::group::GroupHandle;
use crate::prime_graph::{classify, gk_graph, GraphClass, TheoremVerdict};
use crate::rationality::{rationality_report, Verdict};
use crate::structure::{
    class_predicates, fitting_series, order_statistics, prime_spectrum, sylow, ClassPredicates,
};

pub const TOOL_NAME: &str = "gklab";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub literal: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub order: u32,
    pub size: usize,
    pub bg_order: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalitySummary {
    pub is_rational: bool,
    pub is_cut: bool,
    pub non_rational_orders: BTreeSet<u32>,
    pub classes: Vec<ClassSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureSummary {
    pub sylow_orders: BTreeMap<u64, usize>,
    pub fitting_orders: Vec<usize>,
    pub fitting_length: Option<usize>,
    pub predicates: ClassPredicates,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusSummary {
    pub kind: FrobeniusKind,
    pub kernel_order: Option<usize>,
    pub complement_order: Option<usize>,
    pub lower_kernel_order: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    /// Whether the group itself belongs to the class.
    pub member: bool,
    pub verdict: TheoremVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub order: usize,
    pub element_orders: BTreeMap<u32, usize>,
    pub graph: GraphSummary,
    pub rationality: RationalitySummary,
    pub structure: StructureSummary,
    pub frobenius: FrobeniusSummary,
    pub classification: BTreeMap<GraphClass, Classification>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub tool: Tool,
    pub config: BTreeMap<String, String>,
    pub groups: Vec<GroupReport>,
}

pub fn group_report(name: &str, g: &GroupHandle) -> GroupReport {
    let graph = gk_graph(g);
    let rat = rationality_report(g);
    let predicates = class_predicates(g);
    let fitting = fitting_series(g);
    let frob = if g.order() > 1 {
        frobenius_kind(g).ok()
    } else {
        None
    };
    let mut classification = BTreeMap::new();
    for (class, member) in [
        (GraphClass::SolvableCut, predicates.solvable && rat.is_cut),
        (GraphClass::SolvableRational, predicates.solvable && rat.is_rational),
    ] {
        if let Ok(verdict) = classify(&graph, class) {
            classification.insert(class, Classification { member, verdict });
        }
    }
    GroupReport {
        name: name.to_string(),
        order: g.order(),
        element_orders: order_statistics(g),
        graph: GraphSummary {
            vertices: graph.vertices().iter().copied().collect(),
            edges: graph.edges().iter().copied().collect(),
            literal: graph.to_literal(),
        },
        rationality: RationalitySummary {
            is_rational: rat.is_rational,
            is_cut: rat.is_cut,
            non_rational_orders: rat.non_rational_orders.clone(),
            classes: rat
                .classes
                .iter()
                .map(|c| ClassSummary {
                    order: c.order,
                    size: c.class_size,
                    bg_order: c.bg_order,
                    verdict: c.verdict,
                })
                .collect(),
        },
        structure: StructureSummary {
            sylow_orders: prime_spectrum(g)
                .into_iter()
                .map(|p| (p, sylow(g, p).order()))
                .collect(),
            fitting_orders: fitting.terms.iter().map(|t| t.order()).collect(),
            fitting_length: fitting.length(),
            predicates,
        },
        frobenius: FrobeniusSummary {
            kind: frob.as_ref().map(|d| d.kind).unwrap_or(FrobeniusKind::None),
            kernel_order: frob.as_ref().and_then(|d| d.kernel.as_ref()).map(|k| k.order()),
            complement_order: frob
                .as_ref()
                .and_then(|d| d.complement.as_ref().map(|h| h.order()).or(d.upper_complement_order)),
            lower_kernel_order: frob
                .as_ref()
                .and_then(|d| d.lower_kernel.as_ref())
                .map(|k| k.order()),
        },
        classification,
    }
}

pub fn analysis_report(
    groups: &[(String, GroupHandle)],
    config: BTreeMap<String, String>,
) -> AnalysisReport {
    AnalysisReport {
        tool: Tool {
            name: TOOL_NAME,
            version: TOOL_VERSION,
        },
        config,
        groups: groups.iter().map(|(n, g)| group_report(n, g)).collect(),
    }
}

impl AnalysisReport {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
