//! Exact power domination number and propagation radius.
//!
//! Subsets are tried by increasing cardinality, lexicographically within a
//! cardinality. The first cardinality that contains a power dominating set
//! is `γ_p`; every set of that size is then checked so that `rad_p`, the
//! minimum radius over `γ_p`-sets, is certified by exhaustion.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::propagation::run_fast;
use crate::structure::{twins, SplitPartition};

pub const DEFAULT_MAX_N: usize = 24;
pub const DEFAULT_ALL_PDS_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_n: usize,
    /// Skip candidates whose closed neighbourhood misses a twin pair.
    pub twin_pruning: bool,
    /// 1 runs on the calling thread; 0 uses the global rayon pool.
    pub threads: usize,
    /// Solve each component separately instead of rejecting disconnected input.
    pub per_component: bool,
    /// Maximum number of minimum power dominating sets kept in the result.
    pub all_pds_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_n: DEFAULT_MAX_N,
            twin_pruning: true,
            threads: 1,
            per_component: false,
            all_pds_cap: DEFAULT_ALL_PDS_CAP,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SolveStats {
    /// Candidate sets generated.
    pub nodes: u64,
    /// Candidates discarded by the twin filter.
    pub twin_prunes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for SolveStats {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.twin_prunes == other.twin_prunes
    }
}

impl Eq for SolveStats {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub gamma_p: usize,
    /// Minimum radius over minimum power dominating sets.
    pub rad_p: usize,
    /// Lexicographically first `γ_p`-set of radius `rad_p`.
    pub witness: VertexSet,
    /// Number of `γ_p`-sets (single-component solves only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_pds_count: Option<u64>,
    /// The `γ_p`-sets in lexicographic order, capped at `all_pds_cap`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_min_pds: Option<Vec<VertexSet>>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub all_min_pds_truncated: bool,
    /// Radius minimised over every power dominating set regardless of size.
    /// `V` is always one of radius 1, so this is 1 for any non-null graph.
    pub rad_p_any_pds: usize,
    /// Set when the two radius readings disagree.
    pub definition_sensitive: bool,
    pub components: usize,
    pub stats: SolveStats,
}

/// Filter built from the twin pairs of a graph: a power dominating set's
/// closed neighbourhood meets every pair `{u, v}` with `N(u) \ {v} = N(v) \ {u}`.
#[derive(Debug, Clone)]
pub struct TwinFilter {
    pairs: Vec<VertexSet>,
}

impl TwinFilter {
    pub fn new(g: &Graph) -> Self {
        TwinFilter {
            pairs: twins(g)
                .into_iter()
                .map(|(u, v)| VertexSet::singleton(u).with(v))
                .collect(),
        }
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// False when `candidate` cannot be a power dominating set because
    /// `N[candidate]` misses some twin pair.
    pub fn admits(&self, g: &Graph, candidate: VertexSet) -> bool {
        self.admits_closed(g.closed_neighborhood(candidate))
    }

    #[inline]
    fn admits_closed(&self, closed: VertexSet) -> bool {
        self.pairs.iter().all(|&p| p.intersects(closed))
    }
}

/// Exact `γ_p` and `rad_p`.
pub fn solve(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    precheck(g, opts)?;
    let components = g.components();
    if components.len() > 1 {
        if !opts.per_component {
            return Err(Error::Disconnected);
        }
        let mut gamma_p = 0;
        let mut rad_p = 0;
        let mut witness = VertexSet::EMPTY;
        let mut stats = SolveStats::default();
        for &c in &components {
            let (h, map) = g.induced_subgraph(c);
            let r = search(&h, h.vertices(), opts)?;
            gamma_p += r.gamma_p;
            rad_p = rad_p.max(r.rad_p);
            witness |= r.witness.iter().map(|v| map[v]).collect();
            stats.nodes += r.stats.nodes;
            stats.twin_prunes += r.stats.twin_prunes;
        }
        stats.elapsed = start.elapsed();
        return Ok(SolveResult {
            gamma_p,
            rad_p,
            witness,
            min_pds_count: None,
            all_min_pds: None,
            all_min_pds_truncated: false,
            rad_p_any_pds: 1,
            definition_sensitive: rad_p != 1,
            components: components.len(),
            stats,
        });
    }
    let mut r = search(g, g.vertices(), opts)?;
    r.stats.elapsed = start.elapsed();
    Ok(r)
}

/// Same contract as [`solve`], but only subsets of `N(I)` are searched.
/// Requires a connected split graph with both parts non-empty.
pub fn split_restricted_solve(
    g: &Graph,
    part: &SplitPartition,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    let start = Instant::now();
    precheck(g, opts)?;
    part.validate(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let universe = g.open_neighborhood(part.independent);
    let mut r = search(g, universe, opts)?;
    r.stats.elapsed = start.elapsed();
    Ok(r)
}

fn precheck(g: &Graph, opts: &SolveOptions) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.order() > opts.max_n {
        return Err(Error::TooLarge {
            n: g.order(),
            limit: opts.max_n,
        });
    }
    Ok(())
}

/// Per-chunk accumulator; chunks are merged in lexicographic order.
#[derive(Default)]
struct Chunk {
    nodes: u64,
    prunes: u64,
    count: u64,
    best: Option<(usize, VertexSet)>,
    sets: Vec<VertexSet>,
}

fn search(g: &Graph, universe: VertexSet, opts: &SolveOptions) -> Result<SolveResult> {
    let all = g.vertices();
    let items: Vec<usize> = universe.to_vec();
    let filter = opts.twin_pruning.then(|| TwinFilter::new(g));
    let mut stats = SolveStats::default();

    for k in 1..=items.len() {
        // Chunk j holds the k-subsets whose smallest member is items[j].
        let run_chunk = |j: usize| -> Chunk {
            let mut chunk = Chunk::default();
            let head = VertexSet::singleton(items[j]);
            for_each_subset(&items[j + 1..], k - 1, |rest| {
                let s = head | rest;
                chunk.nodes += 1;
                if let Some(f) = &filter {
                    if !f.admits_closed(g.closed_neighborhood(s)) {
                        chunk.prunes += 1;
                        return;
                    }
                }
                let (layers, fixed) = run_fast(g, s);
                if fixed != all {
                    return;
                }
                chunk.count += 1;
                if chunk.best.is_none_or(|(r, _)| layers < r) {
                    chunk.best = Some((layers, s));
                }
                if chunk.sets.len() < opts.all_pds_cap {
                    chunk.sets.push(s);
                }
            });
            chunk
        };
        let heads = items.len() + 1 - k;
        let chunks: Vec<Chunk> = match opts.threads {
            1 => (0..heads).map(run_chunk).collect(),
            0 => (0..heads).into_par_iter().map(run_chunk).collect(),
            t => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
                .install(|| (0..heads).into_par_iter().map(run_chunk).collect()),
        };

        let mut count = 0;
        let mut best: Option<(usize, VertexSet)> = None;
        let mut sets = Vec::new();
        for c in chunks {
            stats.nodes += c.nodes;
            stats.twin_prunes += c.prunes;
            count += c.count;
            if let Some((r, s)) = c.best {
                if best.is_none_or(|(br, _)| r < br) {
                    best = Some((r, s));
                }
            }
            let room = opts.all_pds_cap.saturating_sub(sets.len());
            sets.extend(c.sets.into_iter().take(room));
        }
        if let Some((rad_p, witness)) = best {
            return Ok(SolveResult {
                gamma_p: k,
                rad_p,
                witness,
                min_pds_count: Some(count),
                all_min_pds_truncated: (sets.len() as u64) < count,
                all_min_pds: Some(sets),
                rad_p_any_pds: 1,
                definition_sensitive: rad_p != 1,
                components: 1,
                stats,
            });
        }
    }
    Err(Error::NotPowerDominating(universe.to_string()))
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order.
fn for_each_subset<F: FnMut(VertexSet)>(items: &[usize], k: usize, mut f: F) {
    let m = items.len();
    if k > m {
        return;
    }
    if k == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().map(|&i| items[i]).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
