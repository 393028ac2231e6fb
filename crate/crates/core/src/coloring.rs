//! Edge colorings and the strong/proper verifiers.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub type Color = u32;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    assignment: BTreeMap<Edge, Color>,
}

impl EdgeColoring {
    pub fn new(assignment: BTreeMap<Edge, Color>) -> Self {
        EdgeColoring { assignment }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Edge, Color)>>(pairs: I) -> Self {
        EdgeColoring {
            assignment: pairs.into_iter().collect(),
        }
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        self.assignment.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of distinct ids in use.
    pub fn num_colors(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.assignment.values().max().copied()
    }

    /// Relabels ids to `1..=num_colors`, preserving their order.
    pub fn compacted(&self) -> EdgeColoring {
        let ids: BTreeMap<Color, Color> = self
            .assignment
            .values()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .zip(1..)
            .map(|(&old, new)| (old, new))
            .collect();
        EdgeColoring::from_pairs(self.iter().map(|(e, c)| (e, ids[&c])))
    }

    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> EdgeColoring {
        EdgeColoring::from_pairs(self.iter().map(|(e, c)| (e, f(c))))
    }

    pub fn classes(&self) -> ColorClassPartition {
        let mut by_color: BTreeMap<Color, Vec<Edge>> = BTreeMap::new();
        for (e, c) in self.iter() {
            by_color.entry(c).or_default().push(e);
        }
        ColorClassPartition {
            classes: by_color.into_values().collect(),
        }
    }

    /// Edges grouped by their original id.
    pub fn classes_by_id(&self) -> BTreeMap<Color, Vec<Edge>> {
        let mut by_color: BTreeMap<Color, Vec<Edge>> = BTreeMap::new();
        for (e, c) in self.iter() {
            by_color.entry(c).or_default().push(e);
        }
        by_color
    }

    pub fn to_json(&self) -> ColoringJson {
        ColoringJson {
            colors: self.iter().map(|(e, c)| (e.u(), e.v(), c)).collect(),
            num_colors: self.num_colors(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("coloring serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: ColoringJson = serde_json::from_str(s)?;
        let mut assignment = BTreeMap::new();
        for (u, v, c) in raw.colors {
            let e = Edge::new(u, v)?;
            if assignment.insert(e, c).is_some() {
                return Err(Error::DuplicateEdge(e.u(), e.v()));
            }
        }
        let coloring = EdgeColoring { assignment };
        if coloring.num_colors() != raw.num_colors {
            return Err(Error::InvalidParameter(format!(
                "num_colors is {} but {} distinct ids are used",
                raw.num_colors,
                coloring.num_colors()
            )));
        }
        Ok(coloring)
    }

    /// DOT rendering; ids map to a fixed palette, cycling past its end.
    pub fn to_dot(&self, g: &Graph) -> String {
        const PALETTE: [&str; 12] = [
            "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
            "#bcbd22", "#17becf", "#000000", "#aec7e8",
        ];
        let mut out = String::from("graph G {\n");
        for v in 0..g.vertex_count() {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", g.label(v)));
        }
        for e in g.edges() {
            match self.color(e) {
                Some(c) => out.push_str(&format!(
                    "  {} -- {} [label=\"{c}\", color=\"{}\"];\n",
                    e.u(),
                    e.v(),
                    PALETTE[(c as usize).saturating_sub(1) % PALETTE.len()]
                )),
                None => out.push_str(&format!("  {} -- {} [style=dashed];\n", e.u(), e.v())),
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub colors: Vec<(usize, usize, Color)>,
    pub num_colors: usize,
}

/// Nonempty color classes, ordered by color id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClassPartition {
    pub classes: Vec<Vec<Edge>>,
}

impl ColorClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    SharedEndpoint,
    JoinedByEdge,
    UncoloredEdge,
    /// The coloring names an edge the graph does not have.
    ForeignEdge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub first: Edge,
    pub second: Edge,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        VerificationReport {
            valid: violations.is_empty(),
            violations,
        }
    }
}

fn coverage_violations(g: &Graph, c: &EdgeColoring) -> Vec<Violation> {
    let uncolored = g
        .edges()
        .filter(|&e| c.color(e).is_none())
        .map(|e| Violation {
            first: e,
            second: e,
            kind: ViolationKind::UncoloredEdge,
        });
    let foreign = c
        .iter()
        .filter(|&(e, _)| !g.has_edge(e.u(), e.v()))
        .map(|(e, _)| Violation {
            first: e,
            second: e,
            kind: ViolationKind::ForeignEdge,
        });
    uncolored.chain(foreign).collect()
}

fn class_violations(
    g: &Graph,
    c: &EdgeColoring,
    kind_of: impl Fn(Edge, Edge) -> Option<ViolationKind>,
) -> Vec<Violation> {
    let mut out = Vec::new();
    for class in c.classes_by_id().values() {
        let class: Vec<Edge> = class
            .iter()
            .copied()
            .filter(|e| g.has_edge(e.u(), e.v()))
            .collect();
        for (i, &e) in class.iter().enumerate() {
            for &f in &class[i + 1..] {
                if let Some(kind) = kind_of(e, f) {
                    out.push(Violation {
                        first: e,
                        second: f,
                        kind,
                    });
                }
            }
        }
    }
    out
}

/// Every edge colored, and every color class an induced matching.
pub fn verify_strong(g: &Graph, c: &EdgeColoring) -> VerificationReport {
    let mut violations = coverage_violations(g, c);
    violations.extend(class_violations(g, c, |e, f| {
        if e.shares_endpoint(f) {
            Some(ViolationKind::SharedEndpoint)
        } else if g.joined(e, f) {
            Some(ViolationKind::JoinedByEdge)
        } else {
            None
        }
    }));
    VerificationReport::from_violations(violations)
}

/// Every edge colored, and no two same-colored edges share an endpoint.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> VerificationReport {
    let mut violations = coverage_violations(g, c);
    violations.extend(class_violations(g, c, |e, f| {
        e.shares_endpoint(f)
            .then_some(ViolationKind::SharedEndpoint)
    }));
    VerificationReport::from_violations(violations)
}

/// Verification gate used by every construction before it returns.
pub(crate) fn gate(construction: &'static str, g: &Graph, c: EdgeColoring) -> Result<EdgeColoring> {
    let report = verify_strong(g, &c);
    if report.valid {
        Ok(c)
    } else {
        Err(Error::InvalidColoring {
            construction,
            report: Box::new(report),
        })
    }
}
