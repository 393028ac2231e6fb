//! Lower bounds and the upper-bound budgets of the tree constructions.

use serde::Serialize;

use crate::constructors::ensure_tree;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cycle lengths grouped by which construction colors `T □ C_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LengthClass {
    /// `L ≡ 0 mod 4`
    FourL,
    /// `L = 6`
    Six,
    /// `L ≡ 2 mod 4`, `L ≥ 10`
    TwoModFour,
    /// odd `L ≥ 9`
    OddLong,
    /// `L ∈ {3, 5, 7}`
    OddShort,
}

impl LengthClass {
    /// Panics for `len < 3`; callers validate first.
    pub fn of(len: usize) -> Self {
        assert!(len >= 3, "cycle length must be >= 3");
        match len {
            _ if len % 4 == 0 => LengthClass::FourL,
            6 => LengthClass::Six,
            _ if len % 2 == 0 => LengthClass::TwoModFour,
            3 | 5 | 7 => LengthClass::OddShort,
            _ => LengthClass::OddLong,
        }
    }

    pub fn method(self) -> &'static str {
        match self {
            LengthClass::FourL => "mod4-pattern",
            LengthClass::Six => "mod3-palettes",
            LengthClass::TwoModFour => "five-unions",
            LengthClass::OddLong => "tuples-five-unions",
            LengthClass::OddShort => "tuples-six-unions",
        }
    }
}

fn check_len(len: usize) -> Result<()> {
    if len < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be >= 3, got {len}"
        )));
    }
    Ok(())
}

/// Colors the tree-cycle construction may use.
pub fn tree_cycle_budget(delta: usize, len: usize) -> Result<usize> {
    check_len(len)?;
    let g = || delta.div_ceil((len - 1) / 2);
    Ok(match LengthClass::of(len) {
        LengthClass::FourL => 2 * delta + 4,
        LengthClass::Six => 2 * delta + 6,
        LengthClass::TwoModFour => 2 * delta + 5,
        LengthClass::OddLong => 2 * delta + g() + 5,
        LengthClass::OddShort => 2 * delta + g() + 6,
    })
}

fn tree_delta(t: &Graph) -> Result<usize> {
    ensure_tree(t)?;
    if t.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    Ok(t.max_degree())
}

/// `max(2Δ(t1) + Δ'(t2), 2Δ(t2) + Δ'(t1)) + 1`.
pub fn tree_product_lower_bound(t1: &Graph, t2: &Graph) -> Result<usize> {
    let (d1, d2) = (tree_delta(t1)?, tree_delta(t2)?);
    let (e1, e2) = (t1.max_edge_degree()?, t2.max_edge_degree()?);
    Ok((2 * d1 + e2).max(2 * d2 + e1) + 1)
}

/// `2Δ + 4` from the `P_3` subproduct, and for odd `L = 2ℓ + 1` also
/// `⌈(2ℓ+1)(Δ+1)/ℓ⌉` from the jellyfish count.
pub fn tree_cycle_lower_bound(t: &Graph, len: usize) -> Result<usize> {
    check_len(len)?;
    Ok(lower_bound_parts(tree_delta(t)?, len).0)
}

fn lower_bound_parts(delta: usize, len: usize) -> (usize, &'static str) {
    let path_bound = 2 * delta + 4;
    if len % 2 == 0 {
        return (path_bound, "path-subgraph");
    }
    let ell = (len - 1) / 2;
    let count = (len * (delta + 1)).div_ceil(ell);
    if count >= path_bound {
        (count, "jellyfish-count")
    } else {
        (path_bound, "path-subgraph")
    }
}

/// `⌈m / ⌊k/2⌋⌉` for a `C_k`-jellyfish with `m` edges whose cycle vertices share a degree.
pub fn jellyfish_lower_bound(g: &Graph, k: usize) -> Result<usize> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "jellyfish bound needs odd k >= 3, got {k}"
        )));
    }
    let n = g.vertex_count();
    if n < k {
        return Err(Error::NotJellyfish(format!("{n} vertices for a {k}-cycle")));
    }
    for i in 0..k {
        if !g.has_edge(i, (i + 1) % k) {
            return Err(Error::NotJellyfish(format!(
                "cycle edge ({i}, {}) missing",
                (i + 1) % k
            )));
        }
    }
    for v in k..n {
        if g.neighbors(v).len() != 1 || g.neighbors(v)[0] >= k {
            return Err(Error::NotJellyfish(format!(
                "vertex {v} is not a pendant of the cycle"
            )));
        }
    }
    let pendants = n - k;
    if g.edge_count() != k + pendants {
        return Err(Error::NotJellyfish(
            "extra edges among cycle vertices".into(),
        ));
    }
    let d = g.neighbors(0).len();
    if let Some(v) = (0..k).find(|&v| g.neighbors(v).len() != d) {
        return Err(Error::InvalidParameter(format!(
            "cycle vertex {v} has degree {} but vertex 0 has {d}",
            g.neighbors(v).len()
        )));
    }
    Ok(g.edge_count().div_ceil(k / 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub method: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub delta: usize,
    pub cycle_length: usize,
    pub length_class: LengthClass,
    pub lower: Bound,
    pub upper: Bound,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    pub gap: usize,
    /// `gap ≤ 4`, and `gap ≤ 3` for odd `L ≥ 9`.
    pub within_remark_bound: bool,
}

impl BoundsReport {
    pub fn with_exact(mut self, exact: usize) -> Self {
        self.exact = Some(exact);
        self
    }

    pub fn exact_within_bounds(&self) -> bool {
        self.exact
            .is_none_or(|x| self.lower.value <= x && x <= self.upper.value)
    }
}

pub fn bounds_table(t: &Graph, len: usize) -> Result<BoundsReport> {
    check_len(len)?;
    let delta = tree_delta(t)?;
    let class = LengthClass::of(len);
    let (lower, lower_method) = lower_bound_parts(delta, len);
    let upper = tree_cycle_budget(delta, len)?;
    let gap = upper - lower;
    let limit = if len % 2 == 1 && len >= 9 { 3 } else { 4 };
    Ok(BoundsReport {
        delta,
        cycle_length: len,
        length_class: class,
        lower: Bound {
            value: lower,
            method: lower_method,
        },
        upper: Bound {
            value: upper,
            method: class.method(),
        },
        exact: None,
        gap,
        within_remark_bound: gap <= limit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{jellyfish, path, star, tree_from_edges};

    fn delta3() -> Graph {
        tree_from_edges(&[(0, 1), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn product_lower_bound() {
        let p4 = path(4).unwrap();
        assert_eq!(tree_product_lower_bound(&p4, &p4).unwrap(), 8);
        let s3 = star(3).unwrap();
        assert_eq!(tree_product_lower_bound(&s3, &s3).unwrap(), 10);
        let k2 = path(2).unwrap();
        assert_eq!(tree_product_lower_bound(&k2, &k2).unwrap(), 4);
    }

    #[test]
    fn cycle_lower_bounds() {
        let t = delta3();
        assert_eq!(tree_cycle_lower_bound(&t, 8).unwrap(), 10);
        assert_eq!(tree_cycle_lower_bound(&t, 5).unwrap(), 10);
        assert_eq!(tree_cycle_lower_bound(&star(4).unwrap(), 9).unwrap(), 12);
        assert!(tree_cycle_lower_bound(&t, 2).is_err());
    }

    #[test]
    fn jellyfish_bounds() {
        assert_eq!(
            jellyfish_lower_bound(&jellyfish(5, &[2; 5]).unwrap(), 5).unwrap(),
            8
        );
        assert_eq!(
            jellyfish_lower_bound(&jellyfish(5, &[0; 5]).unwrap(), 5).unwrap(),
            3
        );
        assert_eq!(
            jellyfish_lower_bound(&jellyfish(7, &[1; 7]).unwrap(), 7).unwrap(),
            5
        );
        assert!(jellyfish_lower_bound(&jellyfish(6, &[1; 6]).unwrap(), 6).is_err());
        assert!(jellyfish_lower_bound(&jellyfish(5, &[1, 0, 0, 0, 0]).unwrap(), 5).is_err());
        assert!(matches!(
            jellyfish_lower_bound(&path(5).unwrap(), 5),
            Err(Error::NotJellyfish(_))
        ));
    }

    #[test]
    fn table_rows() {
        let t = delta3();
        let r = bounds_table(&t, 8).unwrap();
        assert_eq!((r.lower.value, r.upper.value, r.gap), (10, 10, 0));
        let r = bounds_table(&t, 10).unwrap();
        assert_eq!((r.lower.value, r.upper.value), (10, 11));
        let r = bounds_table(&t, 7).unwrap();
        assert_eq!((r.lower.value, r.upper.value), (10, 13));
        assert!(r.within_remark_bound);
        let r = bounds_table(&t, 6).unwrap();
        assert_eq!((r.lower.value, r.upper.value), (10, 12));
    }

    #[test]
    fn gap_limits_hold_broadly() {
        for delta in 1..=30 {
            let t = star(delta).unwrap();
            for len in 3..=60 {
                assert!(
                    bounds_table(&t, len).unwrap().within_remark_bound,
                    "Δ={delta} L={len}"
                );
            }
        }
    }
}
