//! Graph families: unitary Cayley graphs, products, trees, cycles, stars, jellyfish, hypercubes.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Prime decomposition of `n` together with the quantities derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
    phi: u64,
    n_prime: u64,
    n_dprime: u64,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(p_i, r_i)` with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct primes.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    /// `n / (p_1 ... p_k)`, the size of each false-twin class.
    pub fn n_prime(&self) -> u64 {
        self.n_prime
    }

    /// `p_1 ... p_k`.
    pub fn n_dprime(&self) -> u64 {
        self.n_dprime
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "factorize needs n >= 2, got {n}"
        )));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut r = 0;
            while rest % p == 0 {
                rest /= p;
                r += 1;
            }
            factors.push((p, r));
        }
        p += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    let n_dprime: u64 = factors.iter().map(|&(p, _)| p).product();
    let phi = factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1));
    Ok(Factorization {
        n,
        factors,
        phi,
        n_prime: n / n_dprime,
        n_dprime,
    })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `X_n`: vertices `0..n`, `u ~ v` iff `gcd(|u - v|, n) = 1`.
pub fn unitary_cayley(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "unitary Cayley graph needs n >= 2, got {n}"
        )));
    }
    let units: Vec<usize> = (1..n).filter(|&d| gcd(d as u64, n as u64) == 1).collect();
    let edges = (0..n).flat_map(|u| {
        units
            .iter()
            .map(move |&d| (u, (u + d) % n))
            .filter(|&(u, v)| u < v)
    });
    Graph::from_edges(n, edges)
}

/// Residues of a vertex modulo each distinct prime of `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ResidueSignature(Vec<u64>);

impl ResidueSignature {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }
}

pub fn signature(f: &Factorization, v: u64) -> Result<ResidueSignature> {
    if v >= f.n {
        return Err(Error::VertexOutOfRange {
            vertex: v as usize,
            count: f.n as usize,
        });
    }
    Ok(ResidueSignature(f.primes().map(|p| v % p).collect()))
}

/// A vertex `a:u` of a product graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductLabel {
    pub left: usize,
    pub right: usize,
}

impl ProductLabel {
    /// Index of `a:u` in a product whose right factor has `right_count` vertices.
    pub fn index(self, right_count: usize) -> usize {
        self.left * right_count + self.right
    }

    pub fn from_index(index: usize, right_count: usize) -> Self {
        ProductLabel {
            left: index / right_count,
            right: index % right_count,
        }
    }
}

impl fmt::Display for ProductLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.left, self.right)
    }
}

fn product_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let mut labels = Vec::with_capacity(g.vertex_count() * h.vertex_count());
    for a in 0..g.vertex_count() {
        for u in 0..h.vertex_count() {
            labels.push(format!("{}:{}", g.label(a), h.label(u)));
        }
    }
    labels
}

fn check_nonempty(g: &Graph, h: &Graph) -> Result<()> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// `G □ H`; vertex `a:u` has index `a * |V(H)| + u`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_nonempty(g, h)?;
    let nh = h.vertex_count();
    let idx = |a: usize, u: usize| ProductLabel { left: a, right: u }.index(nh);
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + nh * g.edge_count());
    for a in 0..g.vertex_count() {
        for e in h.edges() {
            edges.push((idx(a, e.u()), idx(a, e.v())));
        }
    }
    for e in g.edges() {
        for u in 0..nh {
            edges.push((idx(e.u(), u), idx(e.v(), u)));
        }
    }
    Graph::from_edges(g.vertex_count() * nh, edges)?.with_labels(product_labels(g, h))
}

/// `G × H`: `a:u ~ b:v` iff `a ~ b` and `u ~ v`.
pub fn categorical_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_nonempty(g, h)?;
    let nh = h.vertex_count();
    let idx = |a: usize, u: usize| ProductLabel { left: a, right: u }.index(nh);
    let mut edges = Vec::new();
    for e in g.edges() {
        for f in h.edges() {
            edges.push((idx(e.u(), f.u()), idx(e.v(), f.v())));
            edges.push((idx(e.u(), f.v()), idx(e.v(), f.u())));
        }
    }
    Graph::from_edges(g.vertex_count() * nh, edges)?.with_labels(product_labels(g, h))
}

/// `C_len` on `0..len`; 1-based position `t_i` maps to index `i - 1`.
pub fn cycle(len: usize) -> Result<Graph> {
    if len < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be >= 3, got {len}"
        )));
    }
    Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len)))
}

/// `P_n` with `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "path needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,n}`: center 0, leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))
}

pub fn hypercube(d: u32) -> Result<Graph> {
    if !(1..=20).contains(&d) {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension must be in 1..=20, got {d}"
        )));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| {
        (0..d)
            .map(move |b| (v, v ^ (1 << b)))
            .filter(|&(a, b)| a < b)
    });
    Graph::from_edges(n, edges)
}

/// A tree on `0..=max index`; rejects cyclic or disconnected edge lists.
pub fn tree_from_edges(edges: &[(usize, usize)]) -> Result<Graph> {
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
    let g = Graph::from_edges(n, edges.iter().copied())?;
    ensure_tree(&g)?;
    Ok(g)
}

pub fn ensure_tree(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::NotATree("no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("disconnected".into()));
    }
    if g.edge_count() + 1 != g.vertex_count() {
        return Err(Error::NotATree(format!(
            "{} edges on {} vertices",
            g.edge_count(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// `C_k` on `0..k` with `pendants[v]` leaves attached to cycle vertex `v`.
/// Pendants are numbered after the cycle, in cycle order.
pub fn jellyfish(k: usize, pendants: &[usize]) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "jellyfish cycle length must be >= 3, got {k}"
        )));
    }
    if pendants.len() != k {
        return Err(Error::InvalidParameter(format!(
            "expected {k} pendant counts, got {}",
            pendants.len()
        )));
    }
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (v, &p) in pendants.iter().enumerate() {
        for _ in 0..p {
            edges.push((v, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

/// Tree on `n` vertices from a uniformly random parent array (`parent[i] < i`).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "tree needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(n, (1..n).map(|i| (rng.random_range(0..i), i)))
}

/// `count` random trees with 2 to `max_vertices` vertices and maximum degree at most
/// `max_degree`, reproducible from `seed`. Trees over the degree limit are redrawn.
pub fn random_tree_corpus(
    count: usize,
    max_vertices: usize,
    max_degree: usize,
    seed: u64,
) -> Result<Vec<Graph>> {
    if max_vertices < 2 || max_degree < 1 {
        return Err(Error::InvalidParameter(format!(
            "corpus needs max_vertices >= 2 and max_degree >= 1, got {max_vertices} and {max_degree}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trees = Vec::with_capacity(count);
    while trees.len() < count {
        let t = random_tree(rng.random_range(2..=max_vertices), &mut rng)?;
        if t.max_degree() <= max_degree {
            trees.push(t);
        }
    }
    Ok(trees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn factorizations() {
        let f = factorize(12).unwrap();
        assert_eq!(f.factors(), &[(2, 2), (3, 1)]);
        assert_eq!((f.k(), f.phi(), f.n_prime(), f.n_dprime()), (2, 4, 2, 6));
        let f = factorize(9).unwrap();
        assert_eq!(f.factors(), &[(3, 2)]);
        assert_eq!((f.k(), f.phi(), f.n_prime(), f.n_dprime()), (1, 6, 3, 3));
        let f = factorize(30).unwrap();
        assert_eq!(f.factors(), &[(2, 1), (3, 1), (5, 1)]);
        assert_eq!((f.k(), f.phi(), f.n_prime(), f.n_dprime()), (3, 8, 1, 30));
        assert!(factorize(1).is_err());
    }

    #[test]
    fn cayley_examples() {
        let x6 = unitary_cayley(6).unwrap();
        assert_eq!(x6, cycle(6).unwrap());
        let x5 = unitary_cayley(5).unwrap();
        assert_eq!(x5.edge_count(), 10);
        let x12 = unitary_cayley(12).unwrap();
        assert_eq!(x12.edge_count(), 24);
        assert!((0..12).all(|v| x12.degree(v).unwrap() == 4));
        assert!(unitary_cayley(1).is_err());
    }

    #[test]
    fn signatures() {
        let f = factorize(12).unwrap();
        assert_eq!(signature(&f, 7).unwrap().residues(), &[1, 1]);
        assert_eq!(signature(&f, 1).unwrap(), signature(&f, 7).unwrap());
        let x12 = unitary_cayley(12).unwrap();
        assert_eq!(x12.neighbors(1), x12.neighbors(7));
        assert_eq!(
            signature(&factorize(30).unwrap(), 0).unwrap().residues(),
            &[0, 0, 0]
        );
        assert!(signature(&f, 12).is_err());
    }

    #[test]
    fn products() {
        let k2 = path(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v).unwrap() == 2));
        assert!(c4.is_connected());
        assert_eq!(c4.labels().unwrap(), &["0:0", "0:1", "1:0", "1:1"]);

        let q3 = cartesian_product(&cycle(4).unwrap(), &k2).unwrap();
        assert_eq!(q3.edge_count(), 12);
        assert!((0..8).all(|v| q3.degree(v).unwrap() == 3));

        let s = cartesian_product(&star(3).unwrap(), &star(2).unwrap()).unwrap();
        assert_eq!(s.max_degree(), 5);

        let two_k2 = categorical_product(&k2, &k2).unwrap();
        assert_eq!(two_k2.edge_count(), 2);
        assert!(!two_k2.is_connected());

        let c6 = categorical_product(&k2, &cycle(3).unwrap()).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert!(c6.is_connected() && (0..6).all(|v| c6.degree(v).unwrap() == 2));

        let p3p3 = categorical_product(&k2, &star(2).unwrap()).unwrap();
        assert_eq!(p3p3.edge_count(), 4);
        let mut degs: Vec<_> = (0..6).map(|v| p3p3.degree(v).unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 1, 2, 2]);
        assert!(!p3p3.is_connected());
    }

    #[test]
    fn edge_degree_in_star_product() {
        let g = cartesian_product(&star(3).unwrap(), &star(3).unwrap()).unwrap();
        // x:y is 0, x_1:y is 1 * 4 + 0.
        let e = Edge::new(0, 4).unwrap();
        assert_eq!(g.edge_degree(e).unwrap(), 9);
    }

    #[test]
    fn standard_families() {
        assert_eq!(cycle(3).unwrap().edge_count(), 3);
        assert!(cycle(2).is_err());
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(q3.max_degree(), 3);
        let t = tree_from_edges(&[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(t.max_degree(), 3);
        assert!(tree_from_edges(&[(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(tree_from_edges(&[(0, 1), (2, 3)]).is_err());
    }

    #[test]
    fn jellyfish_examples() {
        assert_eq!(jellyfish(5, &[0; 5]).unwrap(), cycle(5).unwrap());
        let j = jellyfish(5, &[2; 5]).unwrap();
        assert_eq!(j.edge_count(), 15);
        assert!((0..5).all(|v| j.degree(v).unwrap() == 4));
        assert_eq!(j.neighbors(0), &[1, 4, 5, 6]);
        assert_eq!(
            jellyfish(7, &[1, 0, 0, 0, 0, 0, 0]).unwrap().edge_count(),
            8
        );
        assert!(jellyfish(2, &[0, 0]).is_err());
    }
}
