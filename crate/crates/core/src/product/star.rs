//! `K_{1,n} □ K_{1,m}` with `2n + m + 2` colors, and the census of its classes.
//!
//! Vertex `x_i:y_j` has index `i * (m + 1) + j`; index 0 is the center `x` or `y`.

use serde::Serialize;

use crate::coloring::{gate, Color, EdgeColoring};
use crate::constructors::{cartesian_product, star};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn check_params(n: usize, m: usize) -> Result<()> {
    if m < 1 || n < m {
        return Err(Error::InvalidParameter(format!(
            "star product needs n >= m >= 1, got n={n}, m={m}"
        )));
    }
    Ok(())
}

fn star_product(n: usize, m: usize) -> Result<Graph> {
    cartesian_product(&star(n)?, &star(m)?)
}

pub fn star_product_coloring(n: usize, m: usize) -> Result<EdgeColoring> {
    check_params(n, m)?;
    let g = star_product(n, m)?;
    let v = |i: usize, j: usize| i * (m + 1) + j;
    let e = |a: usize, b: usize| Edge::new(a, b).expect("distinct vertices");
    let mut pairs: Vec<(Edge, Color)> = Vec::with_capacity(g.edge_count());
    let mut next: Color = 1;
    let mut fresh = || {
        next += 1;
        next - 1
    };

    // One color for each edge at the center x:y.
    for i in 1..=n {
        pairs.push((e(v(0, 0), v(i, 0)), fresh()));
    }
    for j in 1..=m {
        pairs.push((e(v(0, 0), v(0, j)), fresh()));
    }
    // Leaves x_i with i > m: the x_i-edge of every K_{1,n}-fiber over y_1..y_m.
    for i in m + 1..=n {
        let c = fresh();
        pairs.extend((1..=m).map(|j| (e(v(0, j), v(i, j)), c)));
    }
    // A_i: the y_i-edge of every other K_{1,m}-fiber, and the x_i-edge of every other
    // K_{1,n}-fiber.
    for i in 1..=m {
        let c = fresh();
        pairs.extend(
            (1..=n)
                .filter(|&j| j != i)
                .map(|j| (e(v(j, 0), v(j, i)), c)),
        );
        pairs.extend(
            (1..=m)
                .filter(|&j| j != i)
                .map(|j| (e(v(0, j), v(i, j)), c)),
        );
    }
    // The two families of edges ending at diagonal vertices x_i:y_i.
    let c = fresh();
    pairs.extend((1..=m).map(|i| (e(v(i, 0), v(i, i)), c)));
    let c = fresh();
    pairs.extend((1..=m).map(|i| (e(v(0, i), v(i, i)), c)));

    // For n = m = 1 the A_1 family is empty.
    gate(
        "star product coloring",
        &g,
        EdgeColoring::from_pairs(pairs).compacted(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// Exactly `m` edges, one from each `K_{1,n}`-fiber over `y_1..y_m`.
    LongFibers,
    /// At most `m - 1` edges from `K_{1,n}`-fibers and at most `n - 1` from `K_{1,m}`-fibers.
    Mixed,
    /// Exactly `n` edges, one from each `K_{1,m}`-fiber over `x_1..x_n`.
    ShortFibers,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub kind: ClassKind,
    pub count: usize,
    /// Largest number of `K_{1,n}`-fiber edges in one class of this kind.
    pub long_edges: usize,
    /// Largest number of `K_{1,m}`-fiber edges in one class of this kind.
    pub short_edges: usize,
}

/// Classes of the construction that avoid the center `x:y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarCensus {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<CensusRow>,
    /// `a m + b (m - 1) >= m n`
    pub long_fiber_inequality: bool,
    /// `b (n - 1) + c n >= m n`
    pub short_fiber_inequality: bool,
}

impl StarCensus {
    pub fn count(&self, kind: ClassKind) -> usize {
        self.rows
            .iter()
            .find(|r| r.kind == kind)
            .map_or(0, |r| r.count)
    }
}

pub fn star_product_class_census(n: usize, m: usize) -> Result<StarCensus> {
    if m < 2 || n < m {
        return Err(Error::InvalidParameter(format!(
            "census needs n >= m >= 2, got n={n}, m={m}"
        )));
    }
    let coloring = star_product_coloring(n, m)?;
    let center = 0;
    let right = m + 1;
    let mut rows: Vec<CensusRow> = [
        ClassKind::LongFibers,
        ClassKind::Mixed,
        ClassKind::ShortFibers,
    ]
    .into_iter()
    .map(|kind| CensusRow {
        kind,
        count: 0,
        long_edges: 0,
        short_edges: 0,
    })
    .collect();
    for class in coloring.classes().classes {
        if class.iter().any(|e| e.touches(center)) {
            continue;
        }
        // K_{1,n}-fiber edges keep the y-coordinate fixed.
        let (long, short): (Vec<Edge>, Vec<Edge>) =
            class.iter().partition(|e| e.u() % right == e.v() % right);
        let kind = if short.is_empty() && long.len() == m {
            ClassKind::LongFibers
        } else if long.is_empty() && short.len() == n {
            ClassKind::ShortFibers
        } else if long.len() < m && short.len() < n {
            ClassKind::Mixed
        } else {
            return Err(Error::InvalidParameter(format!(
                "class with {} long and {} short fiber edges fits no census row",
                long.len(),
                short.len()
            )));
        };
        let row = &mut rows[kind as usize];
        row.count += 1;
        row.long_edges = row.long_edges.max(long.len());
        row.short_edges = row.short_edges.max(short.len());
    }
    let (a, b, c) = (rows[0].count, rows[1].count, rows[2].count);
    Ok(StarCensus {
        n,
        m,
        rows,
        long_fiber_inequality: a * m + b * (m - 1) >= m * n,
        short_fiber_inequality: b * (n - 1) + c * n >= m * n,
    })
}
