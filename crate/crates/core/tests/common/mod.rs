//! Independent oracles: adjacency-matrix predicates and plain exhaustive searches that
//! share no code with the library's solver.

#![allow(dead_code)]

use std::collections::BTreeSet;

use strongcol::{Edge, Graph};

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for e in g.edges() {
        m[e.u()][e.v()] = true;
        m[e.v()][e.u()] = true;
    }
    m
}

/// Equal, sharing an endpoint, or joined by an edge.
pub fn conflict(adj: &[Vec<bool>], e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = e;
    let (c, d) = f;
    a == c || a == d || b == c || b == d || adj[a][c] || adj[a][d] || adj[b][c] || adj[b][d]
}

pub fn edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|e| (e.u(), e.v())).collect()
}

fn fits(
    adj: &[Vec<bool>],
    edges: &[(usize, usize)],
    colors: &mut Vec<usize>,
    k: usize,
    used: usize,
) -> bool {
    let i = colors.len();
    if i == edges.len() {
        return true;
    }
    // A color beyond the ones used so far is tried once.
    for c in 0..k.min(used + 1) {
        if (0..i).all(|j| colors[j] != c || !conflict(adj, edges[i], edges[j])) {
            colors.push(c);
            if fits(adj, edges, colors, k, used.max(c + 1)) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

/// Smallest k admitting a strong coloring, by plain backtracking.
pub fn brute_chi_s(g: &Graph) -> usize {
    let adj = matrix(g);
    let edges = edge_pairs(g);
    (1..=edges.len())
        .find(|&k| fits(&adj, &edges, &mut Vec::new(), k, 0))
        .unwrap_or(0)
}

fn mim_from(
    adj: &[Vec<bool>],
    edges: &[(usize, usize)],
    chosen: &mut Vec<usize>,
    i: usize,
) -> usize {
    if i == edges.len() {
        return chosen.len();
    }
    let mut best = mim_from(adj, edges, chosen, i + 1);
    if chosen.iter().all(|&j| !conflict(adj, edges[i], edges[j])) {
        chosen.push(i);
        best = best.max(mim_from(adj, edges, chosen, i + 1));
        chosen.pop();
    }
    best
}

/// Maximum induced matching by include/exclude enumeration.
pub fn brute_mim(g: &Graph) -> usize {
    mim_from(&matrix(g), &edge_pairs(g), &mut Vec::new(), 0)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let here = side[v].expect("visited");
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!here);
                        stack.push(w);
                    }
                    Some(x) if x == here => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn canonical(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| canonical(adj, w, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Rooted encodings minimized over all roots: equal iff the trees are isomorphic.
fn tree_key(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n)
        .map(|r| canonical(&adj, r, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// One tree per isomorphism class on `n` vertices, from all parent arrays.
pub fn all_trees(n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    loop {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (parent[i], i)).collect();
        if seen.insert(tree_key(n, &edges)) {
            out.push(Graph::from_edges(n, edges).expect("tree"));
        }
        // Odometer over parent[i] in 0..i.
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            if parent[i] + 1 < i {
                parent[i] += 1;
                break;
            }
            parent[i] = 0;
        }
    }
}

pub fn edge(a: usize, b: usize) -> Edge {
    Edge::new(a, b).expect("distinct endpoints")
}

/// Side of each vertex in a bipartition of a connected bipartite graph, vertex 0 on side 0.
pub fn two_coloring(g: &Graph) -> Vec<u8> {
    let mut side = vec![u8::MAX; g.vertex_count()];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[v];
                stack.push(w);
            }
        }
    }
    side
}
