//! Reference implementations and generators shared by the integration tests.
#![allow(dead_code)]

use powdom::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Adjacency lists, independent of the bitset representation.
pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Straightforward simulation of the process on adjacency lists.
/// Returns the monitored flags of each layer, ending at the fixed point.
pub fn naive_layers(adj: &[Vec<usize>], source: &[usize]) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut mon = vec![false; n];
    for &s in source {
        mon[s] = true;
        for &w in &adj[s] {
            mon[w] = true;
        }
    }
    let mut layers = vec![mon.clone()];
    loop {
        let mut next = mon.clone();
        let mut changed = false;
        for v in 0..n {
            if !mon[v] {
                continue;
            }
            let unmonitored: Vec<usize> = adj[v].iter().copied().filter(|&w| !mon[w]).collect();
            if unmonitored.len() == 1 {
                next[unmonitored[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return layers;
        }
        mon = next;
        layers.push(mon.clone());
    }
}

/// Radius of `source` by the naive simulator, `None` if it does not monitor everything.
pub fn naive_radius(adj: &[Vec<usize>], source: &[usize]) -> Option<usize> {
    let layers = naive_layers(adj, source);
    layers
        .last()
        .unwrap()
        .iter()
        .all(|&b| b)
        .then_some(layers.len())
}

/// `(γ_p, rad_p)` by trying every subset of every size.
pub fn naive_solve(g: &Graph) -> (usize, usize) {
    let n = g.order();
    let adj = adjacency_lists(g);
    let mut best: Option<(usize, usize)> = None;
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if let Some(r) = naive_radius(&adj, &set) {
            let cand = (set.len(), r);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
    }
    best.expect("the full vertex set always works")
}

pub fn flags_to_set(flags: &[bool]) -> VertexSet {
    flags
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(v, _)| v)
        .collect()
}

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected graph: a random labelled tree plus independent extra
/// edges with a density drawn per graph, so both sparse and dense graphs occur.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let p = rng.gen_range(0.0..0.7);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i], parent));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    debug_assert!(g.is_connected());
    g
}

/// Random connected split graph: a clique of size `c` and `n − c`
/// independent vertices, each joined to a nonempty random part of the clique.
pub fn random_split<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let c = rng.gen_range(1..n);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for w in c..n {
        let mut any = false;
        for u in 0..c {
            if rng.gen_bool(0.4) {
                edges.push((u, w));
                any = true;
            }
        }
        if !any {
            edges.push((rng.gen_range(0..c), w));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Connected graphs on up to 8 vertices, one graph6 string per line.
pub fn small_corpus() -> Vec<Graph> {
    include_str!("../data/connected_n1_to_8.g6")
        .lines()
        .map(|l| powdom::parse_graph6(l).unwrap())
        .collect()
}
