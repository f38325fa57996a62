//! The power-domination process: a domination step followed by synchronous
//! propagation steps.
//!
//! `P^1 = N[S]`. At every later step each monitored vertex with exactly one
//! unmonitored neighbour propagates to it, all at once. The process stops at
//! the first fixed point. Layers are numbered from 1, so a trace with `k`
//! layers that ends at `V` has radius `k`.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Full record of one run of the process.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub source: VertexSet,
    /// `P^1, .., P^k`, where `P^k` is the fixed point.
    pub layers: Vec<VertexSet>,
    /// `L^1, .., L^k`: monitored non-source vertices that have not propagated yet.
    pub live: Vec<VertexSet>,
    /// `(step, v, u)`: `v` propagates to `u` at `step` (`step >= 2`).
    pub propagators: Vec<(usize, usize, usize)>,
    pub complete: bool,
    /// `Σ (|P^i \ P^{i-1}| - 1)` with `P^0 = ∅`.
    pub excess: usize,
}

impl PropagationTrace {
    /// Radius of the source set, if it monitors the whole graph.
    pub fn radius(&self) -> Option<usize> {
        self.complete.then_some(self.layers.len())
    }

    /// Final monitored set `P^∞`.
    pub fn monitored(&self) -> VertexSet {
        *self.layers.last().expect("a trace has at least one layer")
    }
}

/// Runs the process from `s` and records everything.
pub fn propagate(g: &Graph, s: VertexSet) -> Result<PropagationTrace> {
    check_source(g, s)?;
    let all = g.vertices();
    let mut monitored = g.closed_neighborhood(s);
    let mut layers = vec![monitored];
    let mut live = vec![monitored - s];
    let mut propagators = Vec::new();
    let mut excess = monitored.len() - 1;
    let mut current_live = monitored - s;

    loop {
        let step = layers.len() + 1;
        let mut fired = VertexSet::EMPTY;
        let mut gained = VertexSet::EMPTY;
        for v in monitored {
            let outside = g.neighbors(v) - monitored;
            if outside.len() == 1 {
                let u = outside.first().unwrap();
                propagators.push((step, v, u));
                fired.insert(v);
                gained |= outside;
            }
        }
        if gained.is_empty() {
            break;
        }
        monitored |= gained;
        current_live = (current_live - fired) | gained;
        excess += gained.len() - 1;
        layers.push(monitored);
        live.push(current_live);
    }

    Ok(PropagationTrace {
        source: s,
        complete: monitored == all,
        layers,
        live,
        propagators,
        excess,
    })
}

/// Radius and completeness without recording a trace. Returns the number of
/// layers and the fixed point.
#[inline]
pub(crate) fn run_fast(g: &Graph, s: VertexSet) -> (usize, VertexSet) {
    let mut monitored = g.closed_neighborhood(s);
    let mut layers = 1;
    loop {
        let mut gained = VertexSet::EMPTY;
        for v in monitored {
            let outside = g.neighbors(v) - monitored;
            if outside.len() == 1 {
                gained |= outside;
            }
        }
        if gained.is_empty() {
            return (layers, monitored);
        }
        monitored |= gained;
        layers += 1;
    }
}

fn check_source(g: &Graph, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySource);
    }
    if let Some(v) = (s - g.vertices()).first() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

/// Whether `s` power dominates `g`. The empty set never does.
pub fn is_pds(g: &Graph, s: VertexSet) -> bool {
    if s.is_empty() || !s.is_subset(g.vertices()) {
        return false;
    }
    run_fast(g, s).1 == g.vertices()
}

/// `rad_p(G, S)`: number of layers until `V` is monitored, or `None` if `s`
/// is not a power dominating set.
pub fn rad_of_set(g: &Graph, s: VertexSet) -> Option<usize> {
    if s.is_empty() || !s.is_subset(g.vertices()) {
        return None;
    }
    let (layers, fixed) = run_fast(g, s);
    (fixed == g.vertices()).then_some(layers)
}

/// Excess `ε(S)` of a power dominating set.
pub fn excess(g: &Graph, s: VertexSet) -> Result<usize> {
    let trace = propagate(g, s)?;
    if !trace.complete {
        return Err(Error::NotPowerDominating(s.to_string()));
    }
    Ok(trace.excess)
}
