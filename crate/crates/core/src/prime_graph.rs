//! Gruenberg-Kegel graphs and their classification for solvable cut and
//! solvable rational groups.
//!
//! Graphs are written in a compact literal form: comma-separated paths and
//! isolated vertices, e.g. `2-3,5` or `3-2-5`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::error::GroupError;
use crate::group::GroupHandle;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    /// Edge endpoints are added to the vertex set. Loops are rejected.
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, GroupError> {
        let mut g = PrimeGraph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        };
        for (a, b) in edges {
            if a == b {
                return Err(GroupError::PreconditionFailed(format!("loop at {a}")));
            }
            g.vertices.insert(a);
            g.vertices.insert(b);
            g.edges.insert((a.min(b), a.max(b)));
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn neighbours(&self) -> BTreeMap<u64, Vec<u64>> {
        let mut adj: BTreeMap<u64, Vec<u64>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&a).unwrap().push(b);
            adj.get_mut(&b).unwrap().push(a);
        }
        adj
    }

    /// Parses the literal form. The empty string is the empty graph.
    pub fn parse_literal(s: &str) -> Result<Self, GroupError> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let path: Vec<u64> = token
                .split('-')
                .map(|v| {
                    v.trim().parse::<u64>().map_err(|_| {
                        GroupError::PreconditionFailed(format!("bad vertex {v:?} in {s:?}"))
                    })
                })
                .collect::<Result<_, _>>()?;
            vertices.extend_from_slice(&path);
            for w in path.windows(2) {
                edges.push((w[0], w[1]));
            }
        }
        PrimeGraph::new(vertices, edges)
    }

    /// Edges in order, then isolated vertices.
    pub fn to_literal(&self) -> String {
        let mut parts: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let touched: BTreeSet<u64> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        parts.extend(
            self.vertices
                .iter()
                .filter(|v| !touched.contains(v))
                .map(|v| v.to_string()),
        );
        parts.join(",")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph GK {\n");
        for v in &self.vertices {
            out.push_str(&format!("  {v} [label=\"{v}\"];\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Reads back the output of [`PrimeGraph::to_dot`]: vertex statements
    /// `v [..];` and edge statements `a -- b;`.
    pub fn from_dot(s: &str) -> Result<Self, GroupError> {
        let bad = |line: &str| GroupError::PreconditionFailed(format!("cannot read DOT line {line:?}"));
        let body = s
            .split_once('{')
            .and_then(|(_, rest)| rest.rsplit_once('}'))
            .map(|(b, _)| b)
            .ok_or_else(|| bad(s))?;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for stmt in body.split([';', '\n']).map(str::trim).filter(|t| !t.is_empty()) {
            let unquote = |t: &str| t.trim().trim_matches('"').parse::<u64>();
            if let Some((a, b)) = stmt.split_once("--") {
                let (a, b) = (unquote(a).map_err(|_| bad(stmt))?, unquote(b).map_err(|_| bad(stmt))?);
                edges.push((a, b));
            } else {
                let name = stmt.split('[').next().unwrap_or(stmt);
                vertices.push(unquote(name).map_err(|_| bad(stmt))?);
            }
        }
        PrimeGraph::new(vertices, edges)
    }
}

impl fmt::Display for PrimeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.is_empty() {
            write!(f, "(empty)")
        } else {
            write!(f, "{}", self.to_literal())
        }
    }
}

/// Vertices are primes dividing element orders; `p - q` whenever some
/// element has order divisible by `pq`.
pub fn gk_graph(g: &GroupHandle) -> PrimeGraph {
    let orders: BTreeSet<u32> = g.element_orders().iter().copied().collect();
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    for o in orders {
        let ps = arith::prime_divisors(o as u64);
        vertices.extend(ps.iter().copied());
        for (i, &p) in ps.iter().enumerate() {
            for &q in &ps[i + 1..] {
                edges.push((p, q));
            }
        }
    }
    PrimeGraph::new(vertices, edges).expect("distinct primes")
}

pub fn components(g: &PrimeGraph) -> Vec<BTreeSet<u64>> {
    let adj = g.neighbours();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &v in &g.vertices {
        if !seen.insert(v) {
            continue;
        }
        let mut comp = BTreeSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[&x] {
                if seen.insert(y) {
                    comp.insert(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Diameter of each component, in the order of [`components`].
pub fn component_diameters(g: &PrimeGraph) -> Vec<usize> {
    let adj = g.neighbours();
    components(g)
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|&s| {
                    let mut dist = BTreeMap::from([(s, 0usize)]);
                    let mut queue = VecDeque::from([s]);
                    while let Some(x) = queue.pop_front() {
                        let d = dist[&x];
                        for &y in &adj[&x] {
                            dist.entry(y).or_insert_with(|| {
                                queue.push_back(y);
                                d + 1
                            });
                        }
                    }
                    dist.values().copied().max().unwrap_or(0)
                })
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// Any of `2-7`, `3-5`, `3-7`, `5-7` forces `2-3`, and `5-7` forces both
/// `2-7` and `3-5`.
pub fn edge_implications_hold(g: &PrimeGraph) -> bool {
    let forces_23 = [(2, 7), (3, 5), (3, 7), (5, 7)]
        .iter()
        .any(|&(a, b)| g.has_edge(a, b));
    let first = !forces_23 || g.has_edge(2, 3);
    let second = !g.has_edge(5, 7) || (g.has_edge(2, 7) && g.has_edge(3, 5));
    first && second
}

/// Every three vertices span at least one edge.
pub fn higman_check(g: &PrimeGraph) -> bool {
    let v: Vec<u64> = g.vertices.iter().copied().collect();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            for k in j + 1..v.len() {
                if !g.has_edge(v[i], v[j]) && !g.has_edge(v[i], v[k]) && !g.has_edge(v[j], v[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Union of the two graphs plus every edge between a vertex of one and a
/// different vertex of the other.
pub fn product_graph(a: &PrimeGraph, b: &PrimeGraph) -> PrimeGraph {
    let vertices = a.vertices.union(&b.vertices).copied();
    let mut edges: Vec<(u64, u64)> = a.edges.union(&b.edges).copied().collect();
    for &p in &a.vertices {
        for &q in &b.vertices {
            if p != q {
                edges.push((p, q));
            }
        }
    }
    PrimeGraph::new(vertices, edges).expect("no loops")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    SolvableCut,
    SolvableRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Realized,
    Forbidden,
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub class_queried: GraphClass,
    pub status: Status,
    pub citation: String,
}

/// The labelled figure graphs: `(a)`-`(r)` occur for solvable cut groups,
/// `(s)`-`(v)` are undecided.
pub const FIGURE_GRAPHS: [(&str, &str); 22] = [
    ("a", "2"),
    ("b", "3"),
    ("c", "2,3"),
    ("d", "2-3"),
    ("e", "2,5"),
    ("f", "2-5"),
    ("g", "3,7"),
    ("h", "2-3,5"),
    ("i", "3-2-5"),
    ("j", "2-3-5"),
    ("k", "2-3-5-2"),
    ("l", "2-3,7"),
    ("m", "3-2-7"),
    ("n", "2-3-7"),
    ("o", "2-3-7-2"),
    ("p", "2-3-5-7-2"),
    ("q", "2-3-5-7-2-5"),
    ("r", "2-3-5-7-2-5,3-7"),
    ("s", "2-3-5,2-7-3"),
    ("t", "2-3-5-2-7"),
    ("u", "2-3-5-7-2,3-7"),
    ("v", "2-3-5-2-7-3"),
];

const CUT_OPEN: [&str; 4] = ["s", "t", "u", "v"];
const RATIONAL_REALIZED: [&str; 6] = ["a", "c", "d", "e", "f", "k"];
const RATIONAL_OPEN: &str = "i";

/// The figure graph with the given label.
pub fn figure_graph(label: &str) -> Option<PrimeGraph> {
    FIGURE_GRAPHS
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, lit)| PrimeGraph::parse_literal(lit).expect("figure literal"))
}

fn figure_label(g: &PrimeGraph) -> Option<&'static str> {
    FIGURE_GRAPHS
        .iter()
        .find(|(_, lit)| PrimeGraph::parse_literal(lit).expect("figure literal") == *g)
        .map(|(l, _)| *l)
}

/// Prime sets that occur as `π(G)` for solvable cut groups.
pub const CUT_SPECTRA: [&[u64]; 8] = [
    &[2],
    &[3],
    &[2, 3],
    &[2, 5],
    &[3, 7],
    &[2, 3, 5],
    &[2, 3, 7],
    &[2, 3, 5, 7],
];

pub fn is_cut_spectrum(primes: &BTreeSet<u64>) -> bool {
    CUT_SPECTRA
        .iter()
        .any(|s| s.len() == primes.len() && s.iter().all(|p| primes.contains(p)))
}

/// Matches literal prime labels against the figure tables. Forbidden
/// verdicts cite the first necessary condition that fails.
pub fn classify(g: &PrimeGraph, class: GraphClass) -> Result<TheoremVerdict, GroupError> {
    if let Some(&bad) = g.vertices.iter().find(|&&v| !arith::is_prime(v)) {
        return Err(GroupError::NonPrimeVertex(bad));
    }
    let label = figure_label(g);
    let (status, citation) = match (class, label) {
        (GraphClass::SolvableCut, Some(l)) if CUT_OPEN.contains(&l) => {
            (Status::Open, format!("graph ({l}) not known to occur"))
        }
        (GraphClass::SolvableCut, Some(l)) => (Status::Realized, format!("({l})")),
        (GraphClass::SolvableRational, Some(l)) if RATIONAL_REALIZED.contains(&l) => {
            (Status::Realized, format!("({l})"))
        }
        (GraphClass::SolvableRational, Some(l)) if l == RATIONAL_OPEN => {
            (Status::Open, "3-2-5 not known to occur for rational groups".into())
        }
        (_, _) => (Status::Forbidden, forbidden_reason(g, class, label)),
    };
    Ok(TheoremVerdict {
        class_queried: class,
        status,
        citation,
    })
}

fn forbidden_reason(g: &PrimeGraph, class: GraphClass, label: Option<&str>) -> String {
    if !is_cut_spectrum(&g.vertices) {
        return "prime spectrum not allowed for solvable cut groups".into();
    }
    if class == GraphClass::SolvableRational && g.vertices.contains(&7) {
        return "7 divides no solvable rational group".into();
    }
    if !higman_check(g) {
        return "three-primes rule: three vertices without an edge".into();
    }
    if !edge_implications_hold(g) {
        return "edge implications violated".into();
    }
    if components(g).len() > 2 {
        return "more than two components".into();
    }
    match label {
        Some(l) => format!("graph ({l}) does not occur for this class"),
        None => "not among the listed graphs".into(),
    }
}
