//! Simple undirected graphs on dense vertex indices.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge in canonical form `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn touches(self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// The endpoint that is not `w`, if `w` is an endpoint.
    pub fn other(self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        Edge::new(a, b).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// Simple undirected graph. Adjacency lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for (a, b) in edges {
            for w in [a, b] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: n,
                    });
                }
            }
            let e = Edge::new(a, b)?;
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            labels: None,
            edge_count: seen.len(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
            edge_count: 0,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.adj.len() {
            return Err(Error::LabelCount {
                labels: labels.len(),
                vertices: self.adj.len(),
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.adj.len(),
            })
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(Error::EdgeAbsent(e.u, e.v))
        }
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && b < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges in canonical order (by `u`, then `v`).
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge { u, v })
        })
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_degree(&self, e: Edge) -> Result<usize> {
        self.check_edge(e)?;
        Ok(self.adj[e.u].len() + self.adj[e.v].len() - 1)
    }

    pub fn max_edge_degree(&self) -> Result<usize> {
        self.edges()
            .map(|e| self.adj[e.u].len() + self.adj[e.v].len() - 1)
            .max()
            .ok_or(Error::EmptyEdgeSet)
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.adj.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(v)?;
        Ok(match self.bfs_distances(u)?[v] {
            Some(d) => Distance::Finite(d),
            None => Distance::Unreachable,
        })
    }

    pub fn is_connected(&self) -> bool {
        match self.bfs_distances(0) {
            Ok(d) => d.iter().all(Option::is_some),
            Err(_) => true,
        }
    }

    pub fn is_tree(&self) -> bool {
        !self.adj.is_empty() && self.edge_count + 1 == self.adj.len() && self.is_connected()
    }

    /// The conflict predicate of strong edge coloring: equal, sharing an endpoint,
    /// or joined by an edge.
    pub fn strong_conflict(&self, e1: Edge, e2: Edge) -> Result<bool> {
        self.check_edge(e1)?;
        self.check_edge(e2)?;
        Ok(self.conflict_unchecked(e1, e2))
    }

    pub(crate) fn conflict_unchecked(&self, e1: Edge, e2: Edge) -> bool {
        e1.shares_endpoint(e2) || self.joined(e1, e2)
    }

    /// Some endpoint of `e1` is adjacent to some endpoint of `e2`.
    pub(crate) fn joined(&self, e1: Edge, e2: Edge) -> bool {
        e1.endpoints()
            .iter()
            .any(|&a| e2.endpoints().iter().any(|&b| self.has_edge(a, b)))
    }

    pub fn is_induced_matching(&self, edges: &[Edge]) -> Result<bool> {
        for &e in edges {
            self.check_edge(e)?;
        }
        Ok(edges.iter().enumerate().all(|(i, &e)| {
            edges[i + 1..]
                .iter()
                .all(|&f| e == f || !self.conflict_unchecked(e, f))
        }))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.vertex_count(),
            edges: self.edges().collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: RawGraphJson = serde_json::from_str(s)?;
        let g = Graph::from_edges(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))?;
        match raw.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.vertex_count() {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", self.label(v)));
        }
        for e in self.edges() {
            out.push_str(&format!("  {} -- {};\n", e.u, e.v));
        }
        out.push_str("}\n");
        out
    }
}

/// Serialized form: `{"n": .., "edges": [[u, v], ..], "labels": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<Edge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cycle, path, star};

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle(5).unwrap().degree(0).unwrap(), 2);
        assert_eq!(star(4).unwrap().degree(0).unwrap(), 4);
        assert!(matches!(
            cycle(5).unwrap().degree(5),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn edge_degrees() {
        assert_eq!(star(3).unwrap().edge_degree(e(0, 1)).unwrap(), 3);
        assert_eq!(path(4).unwrap().edge_degree(e(1, 2)).unwrap(), 3);
        assert!(matches!(
            path(4).unwrap().edge_degree(e(0, 3)),
            Err(Error::EdgeAbsent(0, 3))
        ));
        assert_eq!(path(4).unwrap().max_edge_degree().unwrap(), 3);
        assert_eq!(star(7).unwrap().max_edge_degree().unwrap(), 7);
        assert_eq!(cycle(6).unwrap().max_edge_degree().unwrap(), 3);
        assert!(matches!(
            Graph::empty(3).max_edge_degree(),
            Err(Error::EmptyEdgeSet)
        ));
    }

    #[test]
    fn distances() {
        let p = path(5).unwrap();
        assert_eq!(p.distance(2, 2).unwrap(), Distance::Finite(0));
        assert_eq!(p.distance(0, 4).unwrap(), Distance::Finite(4));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 3).unwrap(), Distance::Unreachable);
    }

    #[test]
    fn conflicts() {
        let p4 = path(4).unwrap();
        assert!(p4.strong_conflict(e(0, 1), e(2, 3)).unwrap());
        let p5 = path(5).unwrap();
        assert!(!p5.strong_conflict(e(0, 1), e(3, 4)).unwrap());
        let c4 = cycle(4).unwrap();
        let edges: Vec<_> = c4.edges().collect();
        for &a in &edges {
            for &b in &edges {
                assert!(c4.strong_conflict(a, b).unwrap());
            }
        }
        assert!(!c4.is_induced_matching(&edges[..2]).unwrap());
        assert!(c4.is_induced_matching(&edges[..1]).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(Graph::empty(2)
            .with_labels(vec!["a".into(), "a".into()])
            .is_err());
        assert!(Graph::from_json_str(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).is_err());
        assert!(Graph::from_json_str(r#"{"n":3,"edges":[[2,2]]}"#).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(4, [(3, 1), (0, 1), (1, 2)])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()])
            .unwrap();
        let s = g.to_json_string();
        assert_eq!(
            s,
            r#"{"n":4,"edges":[[0,1],[1,2],[1,3]],"labels":["a","b","c","d"]}"#
        );
        assert_eq!(Graph::from_json_str(&s).unwrap(), g);
    }
}
