//! Tree-fiber colors of `T □ C_L` for odd `L`: a color for every tree edge at every cycle
//! position, such that edges in strong conflict differ at one position and edges that are
//! equal or share a vertex differ at consecutive positions.
//!
//! Once every edge at a vertex `p` has its colors, the subtrees below the children of `p`
//! no longer interact, so the search runs top-down: a small exact search colors the child
//! edges of `p` at all positions, then each child subtree is extended on its own, and a
//! failing subtree sends the search back to the next choice at `p`.

use super::tree::RootedTreeView;
use crate::coloring::Color;

type Mask = u128;

/// Largest palette the bit masks hold.
pub(crate) const MAX_PALETTE: Color = 127;

fn bit(c: Color) -> Mask {
    1 << c
}

pub(crate) struct FiberSearch<'a> {
    view: &'a RootedTreeView,
    len: usize,
    full: Mask,
    // col[v][r]: color at position r of the edge from v to its parent; 0 while unset
    col: Vec<Vec<Color>>,
    // Colors in the order the search tries them.
    order: Vec<Color>,
    budget: u64,
    pub nodes: u64,
}

struct Local {
    children: Vec<usize>,
    leaf: Vec<bool>,
    forbid: Vec<Mask>,
    vals: Vec<Vec<Color>>,
    unset: usize,
    // Nothing outside this star is colored yet, so unused colors are interchangeable.
    fresh_break: bool,
}

impl<'a> FiberSearch<'a> {
    pub fn new(view: &'a RootedTreeView, len: usize, palette: Color, budget: u64) -> Self {
        assert!(palette <= MAX_PALETTE);
        FiberSearch {
            view,
            len,
            full: ((1 << (palette + 1)) - 1) & !1,
            col: vec![vec![0; len]; view.tree().vertex_count()],
            order: (1..=palette).collect(),
            budget,
            nodes: 0,
        }
    }

    /// Tries colors in the given order instead of ascending.
    pub fn with_order(mut self, order: Vec<Color>) -> Self {
        self.order = order;
        self
    }

    /// Colors of the root edges, one row per root child in ascending order.
    pub fn fix_root(&mut self, rows: &[Vec<Color>]) {
        let root = self.view.root();
        for (&c, row) in self.view.children(root).iter().zip(rows) {
            self.col[c].clone_from(row);
        }
    }

    /// Completes the coloring below the root; with `seeded` the root edges keep the
    /// colors from `fix_root`. `None` once the budget is spent.
    pub fn run(&mut self, seeded: bool) -> Option<bool> {
        let root = self.view.root();
        if !seeded {
            return self.extend(root);
        }
        for &c in self.view.children(root) {
            if !self.extend(c)? {
                return Some(false);
            }
        }
        Some(true)
    }

    /// Color at every position of the edge from `v` to its parent.
    pub fn colors(&self, v: usize) -> &[Color] {
        &self.col[v]
    }

    fn extend(&mut self, p: usize) -> Option<bool> {
        let children = self.view.children(p).to_vec();
        if children.is_empty() {
            return Some(true);
        }
        let len = self.len;
        let mut forbid = vec![0; len];
        if let Some(q) = self.view.parent(p) {
            let at_q: Vec<usize> = self
                .view
                .children(q)
                .iter()
                .copied()
                .chain(self.view.parent(q).map(|_| q))
                .collect();
            for (r, f) in forbid.iter_mut().enumerate() {
                for &v in &at_q {
                    *f |= bit(self.col[v][r]);
                }
                *f |= bit(self.col[p][(r + 1) % len]) | bit(self.col[p][(r + len - 1) % len]);
            }
        }
        let leaf = children
            .iter()
            .map(|&c| self.view.children(c).is_empty())
            .collect();
        let k = children.len();
        let fresh_break = self.view.parent(p).is_none();
        let mut local = Local {
            children,
            leaf,
            forbid,
            vals: vec![vec![0; len]; k],
            unset: k * len,
            fresh_break,
        };
        self.local(&mut local)
    }

    fn domain(&self, local: &Local, i: usize, r: usize) -> Mask {
        let len = self.len;
        let (prev, next) = ((r + len - 1) % len, (r + 1) % len);
        let mut used = local.forbid[r];
        for (j, row) in local.vals.iter().enumerate() {
            if j != i {
                used |= bit(row[r]);
            }
            used |= bit(row[prev]) | bit(row[next]);
        }
        let mut dom = self.full & !used;
        // Leaf children are interchangeable: their position-0 colors increase.
        if r == 0 && local.leaf[i] {
            for (j, row) in local.vals.iter().enumerate() {
                if j == i || !local.leaf[j] || row[0] == 0 {
                    continue;
                }
                dom &= if j < i {
                    !((bit(row[0]) << 1) - 1)
                } else {
                    bit(row[0]) - 1
                };
            }
        }
        dom
    }

    fn local(&mut self, local: &mut Local) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if local.unset == 0 {
            for (&c, row) in local.children.iter().zip(&local.vals) {
                self.col[c].clone_from(row);
            }
            for &c in &local.children {
                if !self.extend(c)? {
                    return Some(false);
                }
            }
            return Some(true);
        }
        let mut best: Option<(u32, usize, usize, Mask)> = None;
        for i in 0..local.children.len() {
            for r in 0..self.len {
                if local.vals[i][r] != 0 {
                    continue;
                }
                let dom = self.domain(local, i, r);
                let size = dom.count_ones();
                if best.is_none_or(|b| size < b.0) {
                    best = Some((size, i, r, dom));
                }
            }
        }
        let (_, i, r, mut dom) = best.expect("an unset variable remains");
        if local.fresh_break {
            let used = local.vals.iter().flatten().fold(0, |m, &c| m | bit(c));
            let fresh = dom & !used;
            if fresh != 0 {
                dom = (dom & used) | (fresh & fresh.wrapping_neg());
            }
        }
        local.unset -= 1;
        for k in 0..self.order.len() {
            let c = self.order[k];
            if dom & bit(c) == 0 {
                continue;
            }
            local.vals[i][r] = c;
            match self.local(local) {
                Some(false) => {}
                other => {
                    if other.is_none() {
                        local.vals[i][r] = 0;
                        local.unset += 1;
                    }
                    return other;
                }
            }
        }
        local.vals[i][r] = 0;
        local.unset += 1;
        Some(false)
    }
}
