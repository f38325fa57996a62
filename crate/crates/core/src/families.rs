//! Generators for the extremal graph families, each paired with the
//! parameter profile it is claimed to have.
//!
//! Vertex layouts are fixed: hub vertices first, then layered vertices in
//! row-major order. Every generator attaches display labels that follow the
//! usual names (`x`, `u3`, `(2,1)`, `s1`, ...).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `K_n`
    Complete,
    /// `K_n - M` for a perfect matching `M`
    CompleteMinusMatching,
    /// `G(2,k)`
    G2,
    /// `G(3,k)`
    G3,
    /// `G(δ,k)`, `δ >= 4`
    Gd,
    /// `G(δ) = K_{δ+3} - C_{δ+3}`
    Regular,
    /// `D(k)`
    D,
    /// `F(δ)`
    F,
    /// `S(p,g)`
    S,
    /// `H(Δ,γ,r)`
    H,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Complete,
        Family::CompleteMinusMatching,
        Family::G2,
        Family::G3,
        Family::Gd,
        Family::Regular,
        Family::D,
        Family::F,
        Family::S,
        Family::H,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "K",
            Family::CompleteMinusMatching => "KM",
            Family::G2 => "G2",
            Family::G3 => "G3",
            Family::Gd => "Gd",
            Family::Regular => "regular",
            Family::D => "D",
            Family::F => "F",
            Family::S => "S",
            Family::H => "H",
        }
    }

    /// Parameter names in the order [`generate`] expects them.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Complete | Family::CompleteMinusMatching => &["n"],
            Family::G2 | Family::G3 | Family::D => &["k"],
            Family::Gd => &["delta", "k"],
            Family::Regular | Family::F => &["delta"],
            Family::S => &["p", "g"],
            Family::H => &["Delta", "gamma", "rad"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let known: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown family {s:?} (known: {})",
                    known.join(", ")
                ))
            })
    }
}

/// How far the expected profile is backed by the source claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileStatus {
    /// Parameters inside the claimed range.
    Claimed,
    /// Outside the claimed range; values come from the formulas.
    Extrapolated,
    /// Base graph of a recursion; no parameter claims attach to it.
    BaseOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedProfile {
    pub n: usize,
    pub delta: usize,
    #[serde(rename = "Delta", skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    pub gamma_p: Option<usize>,
    pub rad_p: Option<usize>,
    pub status: ProfileStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub family: Family,
    pub params: BTreeMap<String, usize>,
    pub expected: ExpectedProfile,
}

impl FamilyInstance {
    fn new(graph: Graph, family: Family, params: &[usize], expected: ExpectedProfile) -> Self {
        let params = family
            .param_names()
            .iter()
            .zip(params)
            .map(|(k, &v)| (k.to_string(), v))
            .collect();
        FamilyInstance {
            graph,
            family,
            params,
            expected,
        }
    }

    /// Order and minimum degree (and maximum degree, when claimed) match.
    pub fn degrees_match(&self) -> bool {
        self.graph.order() == self.expected.n
            && self.graph.min_degree() == self.expected.delta
            && self
                .expected
                .max_degree
                .is_none_or(|d| d == self.graph.max_degree())
    }
}

/// Dispatches on family name with positional parameters.
pub fn generate(family: Family, params: &[usize]) -> Result<FamilyInstance> {
    let want = family.param_names().len();
    if params.len() != want {
        return Err(Error::InvalidParameter(format!(
            "family {family} takes {want} parameter(s) ({}), got {}",
            family.param_names().join(", "),
            params.len()
        )));
    }
    match family {
        Family::Complete => gen_complete(params[0]),
        Family::CompleteMinusMatching => gen_complete_minus_matching(params[0]),
        Family::G2 => gen_g2(params[0]),
        Family::G3 => gen_g3(params[0]),
        Family::Gd => gen_gd(params[0], params[1]),
        Family::Regular => gen_regular(params[0]),
        Family::D => gen_d(params[0]),
        Family::F => gen_f(params[0]),
        Family::S => gen_s(params[0], params[1]),
        Family::H => gen_h(params[0], params[1], params[2]),
    }
}

fn labelled(n: usize, edges: Vec<(usize, usize)>, labels: Vec<String>) -> Result<Graph> {
    Graph::from_edges(n, edges)?.with_labels(labels)
}

fn index_labels(prefix: &str, count: usize) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |i| format!("{prefix}{i}"))
}

pub fn gen_complete(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "K_n needs n >= 2, got {n}"
        )));
    }
    let g = Graph::complete(n)?;
    let expected = ExpectedProfile {
        n,
        delta: n - 1,
        max_degree: Some(n - 1),
        gamma_p: Some(1),
        rad_p: Some(1),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(g, Family::Complete, &[n], expected))
}

/// `K_n` minus the matching `{0 1, 2 3, ..}`.
pub fn gen_complete_minus_matching(n: usize) -> Result<FamilyInstance> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "K_n - M needs even n >= 4, got {n}"
        )));
    }
    let g = Graph::complete_minus(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1)))?;
    let expected = ExpectedProfile {
        n,
        delta: n - 2,
        max_degree: Some(n - 2),
        gamma_p: Some(1),
        rad_p: Some(2),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(
        g,
        Family::CompleteMinusMatching,
        &[n],
        expected,
    ))
}

/// `G(2,k)`. Layout: `x = 0`, `y = 1`, `z = 2`, `u_i = 2 + i`, `v_i = 2 + k + i`.
///
/// The expected radius is the claimed `2k`. For `k = 3` the singleton `{v_1}`
/// also power dominates, in 5 steps, so the exact radius there is 5.
pub fn gen_g2(k: usize) -> Result<FamilyInstance> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "G(2,k) needs k >= 3, got {k}"
        )));
    }
    let (x, y, z) = (0, 1, 2);
    let u = |i: usize| 2 + i;
    let v = |i: usize| 2 + k + i;
    let n = 2 * k + 3;
    let mut edges = vec![(x, u(1)), (x, v(1)), (x, z), (y, u(1)), (y, v(1)), (y, z)];
    for i in 1..k {
        edges.push((u(i), u(i + 1)));
        edges.push((v(i), v(i + 1)));
    }
    for i in (2..=k).step_by(2) {
        if i < k {
            edges.push((u(i), v(i + 1)));
        }
        edges.push((u(i), v(i - 1)));
    }
    edges.push((u(k), v(k)));
    let labels = ["x", "y", "z"]
        .into_iter()
        .map(String::from)
        .chain(index_labels("u", k))
        .chain(index_labels("v", k))
        .collect();
    let g = labelled(n, edges, labels)?;
    let expected = ExpectedProfile {
        n,
        delta: 2,
        max_degree: None,
        gamma_p: Some(1),
        rad_p: Some(2 * k),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(g, Family::G2, &[k], expected))
}

/// `G(3,k)`. Layout: `x = 0`, `y = 1`, `(i,j) = 2 + 3(i-1) + (j-1)`.
pub fn gen_g3(k: usize) -> Result<FamilyInstance> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "G(3,k) needs k >= 3, got {k}"
        )));
    }
    let (x, y) = (0, 1);
    let at = |i: usize, j: usize| 2 + 3 * (i - 1) + (j - 1);
    let n = 3 * k + 2;
    let mut edges = vec![(x, y)];
    for j in 1..=3 {
        edges.push((x, at(1, j)));
        edges.push((y, at(1, j)));
    }
    for i in 2..=k {
        edges.extend([
            (at(i, 1), at(i, 2)),
            (at(i, 1), at(i, 3)),
            (at(i, 2), at(i, 3)),
        ]);
    }
    for i in 1..k {
        for j in 1..=3 {
            edges.push((at(i, j), at(i + 1, j)));
        }
        for j in 2..=3 {
            edges.push((at(i, j), at(i + 1, j - 1)));
        }
    }
    let labels = ["x", "y"]
        .into_iter()
        .map(String::from)
        .chain((1..=k).flat_map(|i| (1..=3).map(move |j| format!("({i},{j})"))))
        .collect();
    let g = labelled(n, edges, labels)?;
    let expected = ExpectedProfile {
        n,
        delta: 3,
        max_degree: None,
        gamma_p: Some(1),
        rad_p: Some(3 * (k - 1) + 1),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(g, Family::G3, &[k], expected))
}

/// `G(δ,k)` for `δ >= 4`. Layout: `u, v, x, y = 0..4`,
/// `(i,j) = 4 + (δ-2)(i-1) + (j-1)`.
pub fn gen_gd(delta: usize, k: usize) -> Result<FamilyInstance> {
    if delta < 4 || k < 3 {
        return Err(Error::InvalidParameter(format!(
            "G(δ,k) needs δ >= 4 and k >= 3, got δ = {delta}, k = {k}"
        )));
    }
    let w = delta - 2;
    let (u, v, x, y) = (0, 1, 2, 3);
    let at = |i: usize, j: usize| 4 + w * (i - 1) + (j - 1);
    let n = w * k + 4;
    let mut edges = vec![(u, v), (u, x), (u, y), (v, x), (v, y), (x, y)];
    for j in 1..=w {
        edges.extend([(u, at(1, j)), (v, at(1, j)), (x, at(k, j)), (y, at(k, j))]);
    }
    for i in 1..=k {
        for j in 1..=w {
            for j2 in j + 1..=w {
                edges.push((at(i, j), at(i, j2)));
            }
        }
    }
    for i in 1..k {
        for j in 1..=w {
            edges.push((at(i, j), at(i + 1, j)));
        }
        for j in 2..=w {
            edges.push((at(i, j), at(i + 1, j - 1)));
        }
    }
    let labels = ["u", "v", "x", "y"]
        .into_iter()
        .map(String::from)
        .chain((1..=k).flat_map(|i| (1..=w).map(move |j| format!("({i},{j})"))))
        .collect();
    let g = labelled(n, edges, labels)?;
    let expected = ExpectedProfile {
        n,
        delta,
        max_degree: None,
        gamma_p: Some(1),
        rad_p: Some((k - 1) * w + 1),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(g, Family::Gd, &[delta, k], expected))
}

/// `G(δ)`: `K_n` minus the Hamiltonian cycle `v_1 .. v_n`, `n = δ + 3`.
pub fn gen_regular(delta: usize) -> Result<FamilyInstance> {
    if delta < 2 {
        return Err(Error::InvalidParameter(format!(
            "G(δ) needs δ >= 2, got {delta}"
        )));
    }
    let n = delta + 3;
    let g = Graph::complete_minus(n, (0..n).map(|i| (i, (i + 1) % n)))?
        .with_labels(index_labels("v", n).collect())?;
    let expected = ExpectedProfile {
        n,
        delta,
        max_degree: Some(delta),
        gamma_p: Some(1),
        rad_p: Some(2),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(g, Family::Regular, &[delta], expected))
}

/// `D(k)`: path `v_1..v_k` (indices `0..k`) with a pendant triangle on each
/// `v_i` through `a_i = k + 2(i-1)`, `b_i = a_i + 1`.
pub fn gen_d(k: usize) -> Result<FamilyInstance> {
    if k < 1 {
        return Err(Error::InvalidParameter("D(k) needs k >= 1".into()));
    }
    let n = 3 * k;
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    for i in 0..k {
        let a = k + 2 * i;
        edges.extend([(i, a), (i, a + 1), (a, a + 1)]);
    }
    let labels = index_labels("v", k)
        .chain((1..=k).flat_map(|i| [format!("a{i}"), format!("b{i}")]))
        .collect();
    let g = labelled(n, edges, labels)?;
    let expected = ExpectedProfile {
        n,
        delta: 2,
        max_degree: None,
        gamma_p: Some(k),
        rad_p: Some(1),
        status: if k >= 2 {
            ProfileStatus::Claimed
        } else {
            ProfileStatus::Extrapolated
        },
    };
    Ok(FamilyInstance::new(g, Family::D, &[k], expected))
}

fn f_graph(delta: usize) -> Result<Graph> {
    let two_k2 = || Graph::from_edges(4, [(0, 1), (2, 3)]);
    match delta {
        0 => Graph::empty(3),
        1 => two_k2(),
        2 => Err(Error::InvalidParameter(
            "no suitable candidate graph for F(2)".into(),
        )),
        3 => Graph::complete_bipartite(3, 3),
        6 => Graph::empty(3)?.join(&Graph::complete_bipartite(3, 3)?),
        d => two_k2()?.join(&f_graph(d - 4)?),
    }
}

/// `F(δ)`, `δ != 2`: `F(0) = 3K_1`, `F(1) = 2K_2`, `F(3) = K_{3,3}`,
/// `F(6) = 3K_1 + K_{3,3}`, and `F(δ+4) = 2K_2 + F(δ)` with the `2K_2` side first.
pub fn gen_f(delta: usize) -> Result<FamilyInstance> {
    let g = f_graph(delta)?;
    let base_only = delta <= 1;
    let expected = ExpectedProfile {
        n: delta + 3,
        delta,
        max_degree: None,
        gamma_p: (!base_only).then_some(2),
        rad_p: (!base_only).then_some(1),
        status: if base_only {
            ProfileStatus::BaseOnly
        } else {
            ProfileStatus::Claimed
        },
    };
    Ok(FamilyInstance::new(g, Family::F, &[delta], expected))
}

/// `S(p,g)`. Layout: `S` (`g` vertices), `T` (`p-1`), `X` (`g`), `Y` (`g`), `Z` (`p-1`).
/// Clique `S ∪ T`; `s_i x_i`, `s_i y_i`, `t_i z_i`, and `t_{i-1} z_i` for `i >= 2`.
pub fn gen_s(p: usize, g: usize) -> Result<FamilyInstance> {
    if p < 1 || g < 1 {
        return Err(Error::InvalidParameter(format!(
            "S(p,g) needs p, g >= 1, got p = {p}, g = {g}"
        )));
    }
    let t_count = p - 1;
    let s = |i: usize| i - 1;
    let t = |i: usize| g + i - 1;
    let x = |i: usize| g + t_count + i - 1;
    let y = |i: usize| 2 * g + t_count + i - 1;
    let z = |i: usize| 3 * g + t_count + i - 1;
    let n = 3 * g + 2 * p - 2;
    let clique = g + t_count;
    let mut edges = Vec::new();
    for a in 0..clique {
        for b in a + 1..clique {
            edges.push((a, b));
        }
    }
    for i in 1..=g {
        edges.extend([(s(i), x(i)), (s(i), y(i))]);
    }
    for i in 1..=t_count {
        edges.push((t(i), z(i)));
        if i >= 2 {
            edges.push((t(i - 1), z(i)));
        }
    }
    let labels = index_labels("s", g)
        .chain(index_labels("t", t_count))
        .chain(index_labels("x", g))
        .chain(index_labels("y", g))
        .chain(index_labels("z", t_count))
        .collect();
    let graph = labelled(n, edges, labels)?;
    let expected = ExpectedProfile {
        n,
        delta: graph.min_degree(),
        max_degree: None,
        gamma_p: Some(g),
        rad_p: Some(p),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(graph, Family::S, &[p, g], expected))
}

/// `H(Δ,γ,r)`: `γ` copies of `K_{1,Δ}` with every edge subdivided into a path
/// of length `r`, and the leaves `v_1 .. v_γ` of each copy's first arm joined
/// in a path.
///
/// Layout: hubs `u_1..u_γ` at `0..γ`; then for copy `c`, arm `a`, depth `d`
/// (`1..=r`, `d = r` is the leaf) the vertex `γ + (c Δ + a) r + d - 1`.
pub fn gen_h(max_degree: usize, gamma: usize, rad: usize) -> Result<FamilyInstance> {
    if max_degree < 3 || gamma < 1 || rad < 1 {
        return Err(Error::InvalidParameter(format!(
            "H(Δ,γ,r) needs Δ >= 3, γ >= 1, r >= 1, got Δ = {max_degree}, γ = {gamma}, r = {rad}"
        )));
    }
    let arm = |c: usize, a: usize, d: usize| gamma + (c * max_degree + a) * rad + d - 1;
    let n = gamma * (rad * max_degree + 1);
    let mut edges = Vec::new();
    for c in 0..gamma {
        for a in 0..max_degree {
            edges.push((c, arm(c, a, 1)));
            for d in 1..rad {
                edges.push((arm(c, a, d), arm(c, a, d + 1)));
            }
        }
        if c + 1 < gamma {
            edges.push((arm(c, 0, rad), arm(c + 1, 0, rad)));
        }
    }
    let labels = index_labels("u", gamma)
        .chain((1..=gamma).flat_map(move |c| {
            (1..=max_degree).flat_map(move |a| {
                (1..=rad).map(move |d| {
                    if a == 1 && d == rad {
                        format!("v{c}")
                    } else {
                        format!("a{c}.{a}.{d}")
                    }
                })
            })
        }))
        .collect();
    let g = labelled(n, edges, labels)?;
    let expected = ExpectedProfile {
        n,
        delta: g.min_degree(),
        max_degree: Some(max_degree),
        gamma_p: Some(gamma),
        rad_p: Some(rad),
        status: ProfileStatus::Claimed,
    };
    Ok(FamilyInstance::new(
        g,
        Family::H,
        &[max_degree, gamma, rad],
        expected,
    ))
}
