//! Structural recognisers: split partitions, clique number, twins.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for the exact clique search.
pub const CLIQUE_LIMIT: usize = 64;

/// Partition of a split graph into a clique and an independent set.
///
/// The clique part is a maximum clique, except for complete graphs where one
/// vertex is moved to the independent side so that both parts are non-empty
/// (`donated` is then set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
    pub donated: bool,
}

impl SplitPartition {
    /// Checks disjointness, coverage, clique-ness, independence and non-emptiness.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.clique.intersects(self.independent) {
            return Err(Error::InvalidPartition("parts overlap".into()));
        }
        if self.clique | self.independent != g.vertices() {
            return Err(Error::InvalidPartition(
                "parts do not cover the vertex set".into(),
            ));
        }
        if self.clique.is_empty() || self.independent.is_empty() {
            return Err(Error::InvalidPartition("a part is empty".into()));
        }
        for v in self.clique {
            if !(self.clique.without(v)).is_subset(g.neighbors(v)) {
                return Err(Error::InvalidPartition(format!(
                    "clique vertex {v} misses a clique neighbour"
                )));
            }
        }
        for v in self.independent {
            if g.neighbors(v).intersects(self.independent) {
                return Err(Error::InvalidPartition(format!(
                    "independent vertex {v} has an independent neighbour"
                )));
            }
        }
        Ok(())
    }
}

/// Recognises split graphs by the degree-sequence test: with degrees sorted
/// non-increasingly and `m = max{i : d_i >= i - 1}`, `G` is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`; the top `m` vertices then form
/// a maximum clique.
///
/// Graphs with fewer than two vertices have no partition with both parts
/// non-empty and yield `None`.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut clique: VertexSet = order[..m].iter().copied().collect();
    let mut donated = false;
    if m == n {
        // Complete graph: donate the highest-index vertex.
        let last = n - 1;
        clique.remove(last);
        donated = true;
    }
    let part = SplitPartition {
        clique,
        independent: g.vertices() - clique,
        donated,
    };
    debug_assert!(part.validate(g).is_ok());
    Some(part)
}

/// `ω(G)` with the default vertex limit.
pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_with_limit(g, CLIQUE_LIMIT)
}

/// Exact clique number by branch and bound over bitset candidate sets.
pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    if g.order() > limit {
        return Err(Error::TooLarge {
            n: g.order(),
            limit,
        });
    }
    let mut best = 0;
    expand(g, 0, g.vertices(), &mut best);
    Ok(best)
}

fn expand(g: &Graph, size: usize, mut candidates: VertexSet, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    while let Some(v) = candidates.first() {
        if size + candidates.len() <= *best {
            return;
        }
        expand(g, size + 1, candidates & g.neighbors(v), best);
        candidates.remove(v);
    }
}

/// All unordered pairs `(u, v)`, `u < v`, with `N(u) \ {v} = N(v) \ {u}`.
pub fn twins(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.neighbors(u).without(v) == g.neighbors(v).without(u) {
                out.push((u, v));
            }
        }
    }
    out
}
