//! Strong colorings of `T □ C_L`.
//!
//! Vertex `u:t_i` has index `u * L + i` with positions `0..L`; the cycle edge at position
//! `i` joins positions `i` and `i + 1 mod L`. Tree-fiber edges and cycle-fiber edges use
//! disjoint palettes, tree fibers first.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::fiber::{FiberSearch, MAX_PALETTE};
use super::tree::{lowest_max_degree_vertex, LayerColoring, RootedTreeView};
use crate::coloring::{gate, Color, EdgeColoring};
use crate::constructors::{cartesian_product, cycle, ensure_tree};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const FIBER_ATTEMPT_BUDGET: u64 = 200_000;
const FIBER_PERMUTATION_BUDGET: u64 = 4_000_000;
const FIBER_RESTARTS: usize = 16;

fn vertex(u: usize, i: usize, len: usize) -> usize {
    u * len + i
}

/// The cycle edge of `u`'s fiber at position `i`.
pub fn cycle_edge(u: usize, i: usize, len: usize) -> Edge {
    Edge::new(vertex(u, i, len), vertex(u, (i + 1) % len, len)).expect("len >= 3")
}

/// `A_i` / `B_i`: cycle edges at position `i` over tree vertices of even / odd depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFiberMatchings {
    pub a: Vec<Vec<Edge>>,
    pub b: Vec<Vec<Edge>>,
}

impl CycleFiberMatchings {
    pub fn new(view: &RootedTreeView, len: usize) -> Self {
        let mut a = vec![Vec::new(); len];
        let mut b = vec![Vec::new(); len];
        for u in 0..view.tree().vertex_count() {
            let side = if view.parity(u) == 0 { &mut a } else { &mut b };
            for (i, set) in side.iter_mut().enumerate() {
                set.push(cycle_edge(u, i, len));
            }
        }
        CycleFiberMatchings { a, b }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

// Class of the cycle edge at position i over a vertex of the given depth parity.
// Away from the end every length uses the period-4 pattern; the last few positions get a
// closing window that keeps equal classes 3 apart within a side and 2 apart across sides.
const CLOSE_MOD4_TWO: [[usize; 7]; 2] = [[3, 0, 4, 1, 2, 3, 4], [4, 1, 2, 3, 4, 0, 1]];
const CLOSE_MOD4_ONE: [[usize; 3]; 2] = [[2, 3, 4], [4, 0, 1]];
const CLOSE_MOD4_THREE: [[usize; 3]; 2] = [[0, 2, 4], [4, 3, 1]];
// Six unions for L = 5 and L = 7, e.g. A_1 ∪ B_3 ∪ A_5 in 1-based positions.
const SHORT_FIVE: [[usize; 5]; 2] = [[0, 2, 1, 3, 4], [1, 3, 0, 2, 5]];
const SHORT_SEVEN: [[usize; 7]; 2] = [[0, 2, 1, 3, 0, 2, 4], [1, 3, 0, 2, 1, 3, 5]];

fn periodic_or(len: usize, i: usize, odd: usize, window: &[usize]) -> usize {
    let start = len - window.len();
    if i < start {
        (i + 2 * odd) % 4
    } else {
        window[i - start]
    }
}

pub(crate) fn cycle_fiber_class(len: usize, i: usize, odd: usize) -> usize {
    match (len, len % 4) {
        (_, 0) => (i + 2 * odd) % 4,
        (3, _) => i + 3 * odd,
        (5, _) => SHORT_FIVE[odd][i],
        (6, _) => i % 3 + 3 * odd,
        (7, _) => SHORT_SEVEN[odd][i],
        (_, 2) => periodic_or(len, i, odd, &CLOSE_MOD4_TWO[odd]),
        (_, 1) => periodic_or(len, i, odd, &CLOSE_MOD4_ONE[odd]),
        _ => periodic_or(len, i, odd, &CLOSE_MOD4_THREE[odd]),
    }
}

/// Number of cycle-fiber classes the construction uses for length `len`.
#[cfg(test)]
fn cycle_fiber_class_count(len: usize) -> usize {
    use super::bounds::LengthClass;
    match LengthClass::of(len) {
        LengthClass::FourL => 4,
        LengthClass::Six | LengthClass::OddShort => 6,
        LengthClass::TwoModFour | LengthClass::OddLong => 5,
    }
}

/// The colors a vertex of maximum degree sees at one cycle position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaletteTuple {
    pub index: usize,
    pub entries: Vec<Color>,
}

/// Tuples for odd `len = 2ℓ + 1` over the palette `1..=2Δ + ⌈Δ/ℓ⌉`.
///
/// With `X_j = j`, `Y_j = Δ + j` and `g = ⌈Δ/ℓ⌉`, entry `j` alternates `Y_j, X_j, ...`
/// around the cycle except once, where it takes the `Z` color `2Δ + s`. Entries switch in
/// windows of `g`: the `w`-th window (entries `(w-1)g < j ≤ wg`) switches at position
/// `2w - 1`. Position 0 is all `Y` and position `L - 1` all `X`.
pub fn palette_tuples(delta: usize, len: usize) -> Result<Vec<PaletteTuple>> {
    if len < 3 || len % 2 == 0 || delta == 0 {
        return Err(Error::InvalidParameter(format!(
            "palette tuples need odd length >= 3 and Δ >= 1, got L={len}, Δ={delta}"
        )));
    }
    let ell = (len - 1) / 2;
    let g = delta.div_ceil(ell);
    let tuples = (0..len)
        .map(|r| {
            let t = r + 2;
            let entries = (1..=delta)
                .map(|j| {
                    let (x, y) = (j, delta + j);
                    let c = if t % 2 == 0 {
                        if j <= (t / 2 - 1) * g {
                            x
                        } else {
                            y
                        }
                    } else {
                        let w = (t - 1) / 2;
                        if j <= (w - 1) * g {
                            y
                        } else if j <= w * g {
                            2 * delta + j - (w - 1) * g
                        } else {
                            x
                        }
                    };
                    c as Color
                })
                .collect();
            PaletteTuple { index: r, entries }
        })
        .collect();
    Ok(tuples)
}

/// Rearranges `v` into the next permutation in lexicographic order; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Per tree edge (canonical order), the color at every cycle position.
type FiberTable = Vec<Vec<Color>>;

fn layered_fibers(view: RootedTreeView, layers: usize, len: usize) -> Result<(FiberTable, Color)> {
    let lc = LayerColoring::new(view, layers)?;
    let table = lc
        .view()
        .tree()
        .edges()
        .map(|e| (0..len).map(|i| lc.color(e, i % layers)).collect())
        .collect();
    Ok((table, lc.palette()))
}

/// Odd `len >= 5`: the root star follows the palette tuples and an exact search completes
/// the remaining fiber edges within `2Δ + ⌈Δ/ℓ⌉` colors. If the tuples admit no completion
/// the root edges are searched as well.
fn searched_fibers(view: &RootedTreeView, len: usize) -> Result<(FiberTable, Color)> {
    let t = view.tree();
    let delta = t.max_degree();
    let palette = (2 * delta + delta.div_ceil((len - 1) / 2)) as Color;
    if palette > MAX_PALETTE {
        return Err(Error::InvalidParameter(format!(
            "odd-cycle fiber search supports palettes up to {MAX_PALETTE}, need {palette}"
        )));
    }
    let tuples = palette_tuples(delta, len)?;
    let rows: Vec<Vec<Color>> = (0..delta)
        .map(|j| tuples.iter().map(|tuple| tuple.entries[j]).collect())
        .collect();
    let table = |search: &FiberSearch| -> FiberTable {
        t.edges()
            .map(|e| search.colors(view.lower_end(e)).to_vec())
            .collect()
    };

    // Some assignments of tuples to root edges admit no completion, so each distinct one is
    // tried with a small budget. Then restarts shuffle the color order, the assignment, and
    // sometimes free the root edges, with growing budgets.
    let root_children = view.children(view.root());
    let leaf: Vec<bool> = root_children
        .iter()
        .map(|&c| view.children(c).is_empty())
        .collect();
    let assign = |order: &[usize]| -> Vec<Vec<Color>> {
        (0..order.len())
            .map(|c| rows[order.iter().position(|&o| o == c).expect("permutation")].clone())
            .collect()
    };
    let mut order: Vec<usize> = (0..root_children.len()).collect();
    let mut nodes = 0;
    loop {
        let leaves_sorted = order.iter().filter(|&&c| leaf[c]).is_sorted();
        if leaves_sorted {
            let mut search = FiberSearch::new(view, len, palette, FIBER_ATTEMPT_BUDGET);
            search.fix_root(&assign(&order));
            let found = search.run(true);
            nodes += search.nodes;
            if found == Some(true) {
                return Ok((table(&search), palette));
            }
        }
        if nodes > FIBER_PERMUTATION_BUDGET || !next_permutation(&mut order) {
            break;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(len as u64);
    let mut budget = FIBER_ATTEMPT_BUDGET;
    for attempt in 0..FIBER_RESTARTS {
        let mut colors: Vec<Color> = (1..=palette).collect();
        colors.shuffle(&mut rng);
        order.shuffle(&mut rng);
        let mut search = FiberSearch::new(view, len, palette, budget).with_order(colors);
        search.fix_root(&assign(&order));
        let found = search.run(attempt % 3 != 2);
        nodes += search.nodes;
        if found == Some(true) {
            return Ok((table(&search), palette));
        }
        budget = budget * 5 / 4;
    }
    Err(Error::SearchFailed {
        construction: "odd-cycle tree fibers",
        palette,
        nodes,
    })
}

/// Strong coloring of `t □ C_len` within the budget of its length class.
pub fn tree_cycle_coloring(t: &Graph, len: usize) -> Result<EdgeColoring> {
    ensure_tree(t)?;
    if t.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let g = cartesian_product(t, &cycle(len)?)?;
    let a = lowest_max_degree_vertex(t);
    let view = RootedTreeView::new(t, a)?;
    let (fibers, fiber_palette) = match len {
        _ if len % 2 == 0 => layered_fibers(view.clone(), 2, len)?,
        3 => layered_fibers(view.clone(), 3, len)?,
        _ => searched_fibers(&view, len)?,
    };
    let tree_edges: Vec<Edge> = t.edges().collect();

    let mut pairs = Vec::with_capacity(g.edge_count());
    for (k, e) in tree_edges.iter().enumerate() {
        for (i, &c) in fibers[k].iter().enumerate() {
            let fe = Edge::new(vertex(e.u(), i, len), vertex(e.v(), i, len)).expect("distinct");
            pairs.push((fe, c));
        }
    }
    for u in 0..t.vertex_count() {
        for i in 0..len {
            let class = cycle_fiber_class(len, i, view.parity(u)) as Color;
            pairs.push((cycle_edge(u, i, len), fiber_palette + 1 + class));
        }
    }
    let coloring = EdgeColoring::from_pairs(pairs).compacted();
    gate("tree-cycle coloring", &g, coloring)
}
