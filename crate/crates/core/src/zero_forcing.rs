//! Sequential zero forcing: one force per tick, forcing chains, reversals.
//!
//! Completeness agrees with the synchronous power-domination engine when the
//! initial set is `N[S]`, but step counts differ: here every force is its
//! own tick.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tie-break used when several vertices could force.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum ForcingPolicy {
    /// Lowest-index forcer first.
    #[default]
    LowestIndex,
    /// Forcer with the earliest position in the given vertex order first.
    /// Vertices missing from the order rank after all listed ones, by index.
    Priority(Vec<usize>),
    /// Uniformly random eligible forcer, reproducible from the seed.
    Random(u64),
}

impl ForcingPolicy {
    pub fn tag(&self) -> String {
        match self {
            ForcingPolicy::LowestIndex => "lowest-index".to_string(),
            ForcingPolicy::Priority(order) => format!(
                "priority:{}",
                order
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            ForcingPolicy::Random(seed) => format!("random:{seed}"),
        }
    }
}

/// Chronological list of forces `p -> x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingSequence {
    pub initial: VertexSet,
    pub forces: Vec<(usize, usize)>,
    pub policy_tag: String,
}

impl ForcingSequence {
    /// `initial` plus every forced vertex.
    pub fn closure(&self) -> VertexSet {
        self.forces
            .iter()
            .fold(self.initial, |acc, &(_, x)| acc.with(x))
    }

    /// Replays the sequence on `g` and checks that every force is legal.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut monitored = self.initial;
        for (j, &(p, x)) in self.forces.iter().enumerate() {
            let outside = g.neighbors(p) - monitored;
            if !monitored.contains(p) || outside != VertexSet::singleton(x) {
                return Err(Error::InvalidParameter(format!(
                    "force #{j} {p}->{x} is not legal"
                )));
            }
            monitored.insert(x);
        }
        Ok(())
    }

    pub fn is_complete(&self, g: &Graph) -> bool {
        self.closure() == g.vertices()
    }
}

/// Maximal forcing chains of a sequence and the reversal they define.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingChains {
    /// Longest chains first; ties by starting vertex.
    pub chains: Vec<Vec<usize>>,
    /// Terminal vertices of all chains.
    pub reversal: VertexSet,
}

/// Closure of `s` under the forcing rule.
pub fn closure(g: &Graph, s: VertexSet) -> VertexSet {
    let mut monitored = s;
    loop {
        let mut gained = VertexSet::EMPTY;
        for v in monitored {
            let outside = g.neighbors(v) - monitored;
            if outside.len() == 1 {
                gained |= outside;
            }
        }
        if gained.is_empty() {
            return monitored;
        }
        monitored |= gained;
    }
}

pub fn is_zfs(g: &Graph, s: VertexSet) -> bool {
    s.is_subset(g.vertices()) && closure(g, s) == g.vertices()
}

/// Fires forces one at a time under `policy` until none is possible. The
/// result may be incomplete if `s` is not a zero forcing set.
pub fn forcing_run(g: &Graph, s: VertexSet, policy: &ForcingPolicy) -> ForcingSequence {
    let n = g.order();
    let rank: Vec<usize> = match policy {
        ForcingPolicy::Priority(order) => {
            let mut rank: Vec<usize> = (0..n).map(|v| n + v).collect();
            for (pos, &v) in order.iter().enumerate() {
                if v < n && rank[v] >= n {
                    rank[v] = pos;
                }
            }
            rank
        }
        _ => (0..n).collect(),
    };
    let mut rng = match policy {
        ForcingPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };

    let mut monitored = s & g.vertices();
    let mut forces = Vec::new();
    loop {
        let eligible: Vec<(usize, usize)> = monitored
            .iter()
            .filter_map(|v| {
                let outside = g.neighbors(v) - monitored;
                (outside.len() == 1).then(|| (v, outside.first().unwrap()))
            })
            .collect();
        if eligible.is_empty() {
            break;
        }
        let (p, x) = match rng.as_mut() {
            Some(rng) => eligible[rng.gen_range(0..eligible.len())],
            None => *eligible.iter().min_by_key(|(v, _)| rank[*v]).unwrap(),
        };
        forces.push((p, x));
        monitored.insert(x);
    }
    ForcingSequence {
        initial: s & g.vertices(),
        forces,
        policy_tag: policy.tag(),
    }
}

/// A complete forcing sequence for a zero forcing set.
pub fn forcing_sequence(
    g: &Graph,
    s: VertexSet,
    policy: &ForcingPolicy,
) -> Result<ForcingSequence> {
    if let Some(v) = (s - g.vertices()).first() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    let seq = forcing_run(g, s, policy);
    if !seq.is_complete(g) {
        return Err(Error::NotZeroForcing(s.to_string()));
    }
    Ok(seq)
}

/// Links the forces of `seq` into maximal chains. Every initial vertex
/// starts exactly one chain, possibly of length one.
pub fn chains_and_reversal(seq: &ForcingSequence) -> ForcingChains {
    let mut next = std::collections::HashMap::new();
    for &(p, x) in &seq.forces {
        next.insert(p, x);
    }
    let mut chains: Vec<Vec<usize>> = seq
        .initial
        .iter()
        .map(|start| {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(&x) = next.get(&cur) {
                chain.push(x);
                cur = x;
            }
            chain
        })
        .collect();
    chains.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let reversal = chains.iter().map(|c| *c.last().unwrap()).collect();
    ForcingChains { chains, reversal }
}

/// The sequence obtained by reversing every force and replaying them in
/// reverse chronological order, starting from the reversal of `seq`. Fails if
/// the result is not a legal forcing sequence on `g`.
pub fn reverse_sequence(g: &Graph, seq: &ForcingSequence) -> Result<ForcingSequence> {
    let reversal = chains_and_reversal(seq).reversal;
    let forces: Vec<(usize, usize)> = seq.forces.iter().rev().map(|&(p, x)| (x, p)).collect();
    let rev = ForcingSequence {
        initial: reversal,
        forces,
        policy_tag: format!("reverse({})", seq.policy_tag),
    };
    rev.validate(g)?;
    Ok(rev)
}

/// Checks the reversal property over `trials` forcing sequences (the first
/// with the default policy, the rest random): each reversal `Z` must be a
/// zero forcing set, and reversing the chains must give a legal sequence from
/// `Z` whose own reversal is `s` again.
pub fn check_reversal_lemma(g: &Graph, s: VertexSet, trials: usize, seed: u64) -> bool {
    if !is_zfs(g, s) {
        return false;
    }
    (0..trials.max(1)).all(|t| {
        let policy = if t == 0 {
            ForcingPolicy::LowestIndex
        } else {
            ForcingPolicy::Random(seed.wrapping_add(t as u64))
        };
        let Ok(seq) = forcing_sequence(g, s, &policy) else {
            return false;
        };
        let z = chains_and_reversal(&seq).reversal;
        if !is_zfs(g, z) {
            return false;
        }
        match reverse_sequence(g, &seq) {
            Ok(rev) => rev.is_complete(g) && chains_and_reversal(&rev).reversal == s,
            Err(_) => false,
        }
    })
}
