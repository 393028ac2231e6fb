//! Optimal strong edge coloring of unitary Cayley graphs.
//!
//! `X_n` is `X_{n''}` with every vertex blown up into `n'` false twins. An edge class of
//! `X_{n''}` is fixed by one unordered residue pair per prime; the `2^{k-1}` edges of a
//! class blow up into `K_{n',n'}` blocks, and taking the same cell of every block gives an
//! induced matching.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::{gate, EdgeColoring};
use crate::constructors::{factorize, signature, unitary_cayley, Factorization};
use crate::error::{Error, Result};
use crate::exact::conflict_graph;
use crate::graph::{Edge, Graph};

/// Identifies the color class of an edge of `X_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MatchingFamilyKey {
    /// `(a_i, b_i)` with `a_i < b_i`, one per prime.
    pub pair_per_coordinate: Vec<(u64, u64)>,
    /// `(i, j)`: twin-class ranks of the lexicographically smaller and larger endpoint.
    pub block_cell: (u64, u64),
}

/// `n φ(n) / 2^k`.
pub fn chi_s_formula(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok((n * f.phi()) >> f.k())
}

pub fn matching_family_key(f: &Factorization, e: Edge) -> Result<MatchingFamilyKey> {
    let (a, b) = (e.u() as u64, e.v() as u64);
    let (sa, sb) = (signature(f, a)?, signature(f, b)?);
    let (low, high) = if sa <= sb { (a, b) } else { (b, a) };
    let pairs = sa
        .residues()
        .iter()
        .zip(sb.residues())
        .map(|(&x, &y)| (x.min(y), x.max(y)))
        .collect();
    // Twin classes are residue classes mod n''; rank within a class is numeric order.
    let rank = |v: u64| v / f.n_dprime();
    Ok(MatchingFamilyKey {
        pair_per_coordinate: pairs,
        block_cell: (rank(low), rank(high)),
    })
}

/// Strong coloring of `X_n` with exactly `chi_s_formula(n)` colors, ids in key order.
pub fn cayley_strong_coloring(n: u64) -> Result<EdgeColoring> {
    let f = factorize(n)?;
    let g = unitary_cayley(n as usize)?;
    let keyed = g
        .edges()
        .map(|e| Ok((e, matching_family_key(&f, e)?)))
        .collect::<Result<Vec<_>>>()?;
    let ids: BTreeMap<&MatchingFamilyKey, u32> = {
        let mut keys: Vec<_> = keyed.iter().map(|(_, k)| k).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().zip(1..).collect()
    };
    let coloring = EdgeColoring::from_pairs(keyed.iter().map(|(e, k)| (*e, ids[k])));
    gate("cayley coloring", &g, coloring)
}

/// Largest induced matching, by branch and bound over the edges in canonical order.
/// With `cap`, returns `cap` as soon as a matching that large exists.
pub fn max_induced_matching_size(g: &Graph, cap: Option<usize>) -> Result<usize> {
    if cap == Some(0) {
        return Err(Error::InvalidParameter("cap must be positive".into()));
    }
    Ok(conflict_graph(g)?.max_independent_set_size(cap))
}
