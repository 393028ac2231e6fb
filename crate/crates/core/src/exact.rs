//! Exact strong chromatic index via vertex coloring of the conflict graph `L(G)^2`.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Edges of `base` as vertices, adjacent when they strongly conflict.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    base: Graph,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
    rows: Vec<BitSet>,
}

pub fn conflict_graph(g: &Graph) -> Result<ConflictGraph> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let index: HashMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut rows = vec![BitSet::new(edges.len()); edges.len()];
    // Edges conflicting with e are exactly those touching N[u] or N[v].
    for (i, &e) in edges.iter().enumerate() {
        for a in e.endpoints() {
            for &b in g.neighbors(a) {
                for &c in g.neighbors(b) {
                    let j = index[&Edge::new(b, c).expect("simple graph")];
                    if j != i {
                        rows[i].insert(j);
                    }
                }
            }
        }
    }
    Ok(ConflictGraph {
        base: g.clone(),
        edges,
        index,
        rows,
    })
}

impl ConflictGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn index_of(&self, e: Edge) -> Option<usize> {
        self.index.get(&e).copied()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].iter()
    }

    pub fn conflict_edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    fn coloring_from(&self, colors: &[Color]) -> EdgeColoring {
        EdgeColoring::from_pairs(self.edges.iter().copied().zip(colors.iter().copied()))
    }

    /// Largest-degree-first greedy; ties go to the lower index.
    fn greedy_colors(&self) -> Vec<Color> {
        let n = self.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.degree(i)), i));
        let mut colors = vec![0; n];
        let mut taken = Vec::new();
        for &v in &order {
            taken.clear();
            taken.extend(self.rows[v].iter().map(|u| colors[u]).filter(|&c| c > 0));
            taken.sort_unstable();
            taken.dedup();
            let mut c = 1;
            for &t in &taken {
                if t == c {
                    c += 1;
                } else if t > c {
                    break;
                }
            }
            colors[v] = c;
        }
        colors
    }

    /// A clique grown greedily from every start vertex; the largest one found.
    pub fn greedy_clique(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut best = Vec::new();
        for start in 0..n {
            if self.degree(start) < best.len() {
                continue;
            }
            let mut clique = vec![start];
            let mut cand = self.rows[start].clone();
            while let Some(next) = cand
                .iter()
                .max_by_key(|&u| (self.rows[u].intersection_count(&cand), std::cmp::Reverse(u)))
            {
                clique.push(next);
                cand.intersect_with(&self.rows[next]);
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        best.sort_unstable();
        best
    }

    /// Size of a largest independent set, i.e. of a largest induced matching of the base
    /// graph. With `cap`, stops as soon as a set of that size is found.
    pub fn max_independent_set_size(&self, cap: Option<usize>) -> usize {
        let mut best = 0;
        self.mis(BitSet::full(self.vertex_count()), 0, &mut best, cap);
        match cap {
            Some(c) => best.min(c),
            None => best,
        }
    }

    fn mis(&self, mut cand: BitSet, size: usize, best: &mut usize, cap: Option<usize>) -> bool {
        loop {
            if size + cand.count() <= *best {
                return false;
            }
            let Some(v) = cand.first() else {
                *best = size;
                return cap.is_some_and(|c| size >= c);
            };
            let mut with_v = cand.clone();
            with_v.difference_with(&self.rows[v]);
            with_v.remove(v);
            if self.mis(with_v, size + 1, best, cap) {
                return true;
            }
            cand.remove(v);
        }
    }
}

pub fn greedy_strong_coloring(g: &Graph) -> Result<EdgeColoring> {
    let cg = conflict_graph(g)?;
    Ok(cg.coloring_from(&cg.greedy_colors()))
}

pub fn counting_lower_bound(g: &Graph) -> Result<usize> {
    let cg = conflict_graph(g)?;
    Ok(counting_bound(&cg))
}

fn counting_bound(cg: &ConflictGraph) -> usize {
    cg.vertex_count()
        .div_ceil(cg.max_independent_set_size(None))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub chi: usize,
    pub witness: EdgeColoring,
    pub lower_bound_used: usize,
    pub nodes_explored: u64,
    /// False when the node budget ran out before optimality was proved.
    pub optimal: bool,
}

/// Branch-and-bound minimum strong edge coloring. The witness is always a valid strong
/// coloring; `optimal` is false if the budget ran out first.
pub fn exact_chi_s(g: &Graph, budget: Option<u64>) -> Result<SolveResult> {
    let cg = conflict_graph(g)?;
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let mut best = cg.greedy_colors();
    let mut best_k = *best.iter().max().expect("nonempty") as usize;
    let clique = cg.greedy_clique();
    let lower = clique.len().max(counting_bound(&cg));

    // The clique gets fixed distinct colors; that removes color-permutation symmetry.
    let mut fixed = vec![0; cg.vertex_count()];
    for (c, &v) in clique.iter().enumerate() {
        fixed[v] = c as Color + 1;
    }
    let mut nodes = 0;
    let mut optimal = best_k <= lower;
    while best_k > lower {
        let k = (best_k - 1) as Color;
        let mut search = PaletteSearch::new(&cg.rows, k, &fixed, budget.saturating_sub(nodes));
        let outcome = search.run();
        nodes += search.nodes;
        match outcome {
            Outcome::Found(colors) => {
                best_k = *colors.iter().max().expect("nonempty") as usize;
                best = colors;
                optimal = best_k <= lower;
            }
            Outcome::Exhausted => {
                optimal = true;
                break;
            }
            Outcome::OutOfBudget => break,
        }
    }
    let witness = cg.coloring_from(&best).compacted();
    Ok(SolveResult {
        chi: witness.num_colors(),
        witness,
        lower_bound_used: lower,
        nodes_explored: nodes,
        optimal,
    })
}

#[derive(Debug)]
pub(crate) enum Outcome {
    Found(Vec<Color>),
    Exhausted,
    OutOfBudget,
}

/// DSATUR backtracking for a coloring with colors `1..=k` that extends a partial one.
pub(crate) struct PaletteSearch<'a> {
    rows: &'a [BitSet],
    degree: Vec<usize>,
    k: usize,
    color: Vec<Color>,
    // blocked[v * (k + 1) + c]: colored neighbors of v that use c
    blocked: Vec<u16>,
    saturation: Vec<usize>,
    usage: Vec<usize>,
    uncolored: usize,
    budget: u64,
    pub nodes: u64,
}

impl<'a> PaletteSearch<'a> {
    /// `fixed[v] = 0` leaves `v` free. Fixed colors must already be consistent.
    pub fn new(rows: &'a [BitSet], k: Color, fixed: &[Color], budget: u64) -> Self {
        let n = rows.len();
        let k = k as usize;
        let mut s = PaletteSearch {
            rows,
            degree: rows.iter().map(BitSet::count).collect(),
            k,
            color: vec![0; n],
            blocked: vec![0; n * (k + 1)],
            saturation: vec![0; n],
            usage: vec![0; k + 1],
            uncolored: n,
            budget,
            nodes: 0,
        };
        for (v, &c) in fixed.iter().enumerate() {
            if c > 0 {
                s.assign(v, c);
            }
        }
        s
    }

    fn assign(&mut self, v: usize, c: Color) {
        let c = c as usize;
        self.color[v] = c as Color;
        self.usage[c] += 1;
        self.uncolored -= 1;
        let k = self.k;
        for u in self.rows[v].iter() {
            let slot = &mut self.blocked[u * (k + 1) + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v] as usize;
        self.color[v] = 0;
        self.usage[c] -= 1;
        self.uncolored += 1;
        let k = self.k;
        for u in self.rows[v].iter() {
            let slot = &mut self.blocked[u * (k + 1) + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn select(&self) -> usize {
        (0..self.rows.len())
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| (self.saturation[v], self.degree[v], std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains")
    }

    pub fn run(&mut self) -> Outcome {
        if (0..self.rows.len()).any(|v| {
            self.color[v] > 0 && self.blocked[v * (self.k + 1) + self.color[v] as usize] > 0
        }) {
            return Outcome::Exhausted;
        }
        match self.search() {
            Some(true) => Outcome::Found(self.color.clone()),
            Some(false) => Outcome::Exhausted,
            None => Outcome::OutOfBudget,
        }
    }

    /// `Some(found)`, or `None` once the budget is spent.
    fn search(&mut self) -> Option<bool> {
        if self.uncolored == 0 {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let v = self.select();
        if self.saturation[v] >= self.k {
            return Some(false);
        }
        let mut fresh_tried = false;
        for c in 1..=self.k {
            if self.blocked[v * (self.k + 1) + c] > 0 {
                continue;
            }
            // Unused colors are interchangeable; trying one of them is enough.
            if self.usage[c] == 0 {
                if fresh_tried {
                    continue;
                }
                fresh_tried = true;
            }
            self.assign(v, c as Color);
            match self.search() {
                Some(true) => return Some(true),
                Some(false) => self.unassign(v),
                None => {
                    self.unassign(v);
                    return None;
                }
            }
        }
        Some(false)
    }
}
