//! Rooted trees, layered tree colorings, and the coloring of `T1 □ T2`.

use std::collections::VecDeque;

use crate::coloring::{gate, Color, EdgeColoring};
use crate::constructors::{cartesian_product, ensure_tree, ProductLabel};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug)]
pub struct RootedTreeView {
    tree: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl RootedTreeView {
    pub fn new(tree: &Graph, root: usize) -> Result<Self> {
        ensure_tree(tree)?;
        let n = tree.vertex_count();
        if root >= n {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                count: n,
            });
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for &c in tree.neighbors(p) {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = Some(p);
                    depth[c] = depth[p] + 1;
                    children[p].push(c);
                    queue.push_back(c);
                }
            }
        }
        Ok(RootedTreeView {
            tree: tree.clone(),
            root,
            parent,
            depth,
            children,
            order,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn parity(&self, v: usize) -> usize {
        self.depth[v] % 2
    }

    /// Children in ascending index order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// The vertex of `e` farther from the root.
    pub fn lower_end(&self, e: Edge) -> usize {
        if self.parent[e.v()] == Some(e.u()) {
            e.v()
        } else {
            e.u()
        }
    }
}

pub fn lowest_leaf(tree: &Graph) -> usize {
    (0..tree.vertex_count())
        .find(|&v| tree.neighbors(v).len() <= 1)
        .unwrap_or(0)
}

pub fn lowest_max_degree_vertex(tree: &Graph) -> usize {
    let d = tree.max_degree();
    (0..tree.vertex_count())
        .find(|&v| tree.neighbors(v).len() == d)
        .unwrap_or(0)
}

/// `k` strong colorings `ψ_0..ψ_{k-1}` of a tree from the palette `1..=kΔ` such that
/// `ψ_r(e) ≠ ψ_s(f)` whenever `r ≠ s` and `e`, `f` are equal or share a vertex.
///
/// Built top-down: at the root all `k·deg` colors are distinct. At a vertex `p` with
/// parent `q` and parent edge `e`, layer `r` of the child edges draws first from the
/// colors layer `r + 1` uses at `q` (minus `ψ_{r+1}(e)`), then from colors unused at `q`.
#[derive(Clone, Debug)]
pub struct LayerColoring {
    view: RootedTreeView,
    layers: usize,
    palette: Color,
    // colors[v][r]: layer-r color of the edge from v to its parent
    colors: Vec<Vec<Color>>,
}

impl LayerColoring {
    pub fn new(view: RootedTreeView, layers: usize) -> Result<Self> {
        if layers < 2 {
            return Err(Error::InvalidParameter(
                "layered coloring needs >= 2 layers".into(),
            ));
        }
        let delta = view.tree().max_degree();
        let palette = (layers * delta) as Color;
        let n = view.tree().vertex_count();
        let mut colors = vec![Vec::new(); n];

        let root = view.root();
        for (i, &c) in view.children(root).iter().enumerate() {
            let d = view.children(root).len();
            colors[c] = (0..layers).map(|r| (r * d + i + 1) as Color).collect();
        }

        for &p in view.bfs_order() {
            let Some(q) = view.parent(p) else { continue };
            if view.children(p).is_empty() {
                continue;
            }
            let at_q: Vec<usize> = view
                .children(q)
                .iter()
                .copied()
                .chain(view.parent(q).map(|_| q))
                .collect();
            let used: Vec<Vec<Color>> = (0..layers)
                .map(|r| at_q.iter().map(|&v| colors[v][r]).collect())
                .collect();
            let mut spare: Vec<Color> = (1..=palette)
                .filter(|c| !used.iter().any(|u| u.contains(c)))
                .collect();
            let need = view.children(p).len();
            let mut picks = Vec::with_capacity(layers);
            for r in 0..layers {
                let source = (r + 1) % layers;
                let mut pool: Vec<Color> = used[source]
                    .iter()
                    .copied()
                    .filter(|&c| c != colors[p][source])
                    .collect();
                pool.sort_unstable();
                pool.truncate(need);
                while pool.len() < need {
                    if spare.is_empty() {
                        return Err(Error::InvalidParameter(format!(
                            "layered coloring ran out of colors at vertex {p}"
                        )));
                    }
                    pool.push(spare.remove(0));
                }
                picks.push(pool);
            }
            for (i, &c) in view.children(p).iter().enumerate() {
                colors[c] = picks.iter().map(|pool| pool[i]).collect();
            }
        }
        Ok(LayerColoring {
            view,
            layers,
            palette,
            colors,
        })
    }

    pub fn view(&self) -> &RootedTreeView {
        &self.view
    }

    pub fn layers(&self) -> usize {
        self.layers
    }

    /// `k Δ`.
    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn color(&self, e: Edge, layer: usize) -> Color {
        self.colors[self.view.lower_end(e)][layer % self.layers]
    }

    pub fn layer(&self, layer: usize) -> EdgeColoring {
        EdgeColoring::from_pairs(self.view.tree().edges().map(|e| (e, self.color(e, layer))))
    }
}

fn nontrivial_tree(t: &Graph) -> Result<()> {
    ensure_tree(t)?;
    if t.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    Ok(())
}

/// Strong coloring of `t1 □ t2` with at most `2Δ(t1) + 2Δ(t2)` colors.
///
/// A `t1`-fiber edge over `v ∈ V(t2)` takes layer `depth(v) mod 2` of a two-layer coloring
/// of `t1`, so fibers at even distance agree; `t2`-fibers do the same with colors shifted
/// past `2Δ(t1)`. Both trees are rooted at their lowest-index leaf.
pub fn tree_product_coloring(t1: &Graph, t2: &Graph) -> Result<EdgeColoring> {
    nontrivial_tree(t1)?;
    nontrivial_tree(t2)?;
    let phi = LayerColoring::new(RootedTreeView::new(t1, lowest_leaf(t1))?, 2)?;
    let psi = LayerColoring::new(RootedTreeView::new(t2, lowest_leaf(t2))?, 2)?;
    let g = cartesian_product(t1, t2)?;
    let n2 = t2.vertex_count();
    let coloring = EdgeColoring::from_pairs(g.edges().map(|e| {
        let a = ProductLabel::from_index(e.u(), n2);
        let b = ProductLabel::from_index(e.v(), n2);
        let color = if a.right == b.right {
            let fiber = Edge::new(a.left, b.left).expect("distinct");
            phi.color(fiber, psi.view().parity(a.right))
        } else {
            let fiber = Edge::new(a.right, b.right).expect("distinct");
            phi.palette() + psi.color(fiber, phi.view().parity(a.left))
        };
        (e, color)
    }));
    gate("tree product coloring", &g, coloring)
}
