//! Evaluates the radius bounds B1–B7 against exactly computed invariants.
//!
//! | id | bound | applies to |
//! |----|-------|------------|
//! | B1 | `rad_p ≤ n − |N[S]| + 1`, `S` the witness | every graph |
//! | B2 | `rad_p ≤ n − δ` | every graph |
//! | B3 | `rad_p ≤ n − δ − 1` | connected, not `K_n`, not `K_n − M` |
//! | B4 | piecewise in `γ_p`, `δ` | connected, `δ ≥ 2`, `γ_p ≥ 2` |
//! | B5 | `rad_p ≤ ω − γ_p + 1` | connected split |
//! | B6 | `rad_p ≤ (n − 3γ_p)/2 + 1` | connected split |
//! | B7 | `rad_p ≥ (n − γ_p)/(γ_p Δ)` | connected, `Δ ≥ 1` |
//!
//! Comparisons are done in exact integer arithmetic; `bound_value` is only
//! for display.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::propagation::rad_of_set;
use crate::solver::SolveResult;
use crate::structure::{clique_number, split_partition, CLIQUE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BoundId {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
}

impl BoundId {
    pub const ALL: [BoundId; 7] = [
        BoundId::B1,
        BoundId::B2,
        BoundId::B3,
        BoundId::B4,
        BoundId::B5,
        BoundId::B6,
        BoundId::B7,
    ];
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        })
    }
}

/// Exact structural flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub complete: bool,
    /// `n` even and `(n−2)`-regular, i.e. the complement is a perfect matching.
    pub complete_minus_pm: bool,
    pub connected: bool,
    pub split: bool,
}

pub fn classify(g: &Graph) -> StructureFlags {
    let n = g.order();
    StructureFlags {
        complete: n > 0 && g.is_complete(),
        complete_minus_pm: n >= 2 && n.is_multiple_of(2) && g.degrees().iter().all(|&d| d == n - 2),
        connected: g.is_connected(),
        split: split_partition(g).is_some(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    pub gamma_p: usize,
    pub rad_p: usize,
    pub is_connected: bool,
    pub is_complete: bool,
    pub is_complete_minus_pm: bool,
    pub is_split: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub bound_id: BoundId,
    pub applicable: bool,
    pub reason: String,
    /// False when the bound applies but an input could not be computed.
    pub evaluated: bool,
    pub bound_value: Option<f64>,
    pub relation: Relation,
    /// Vacuously true when not applicable or not evaluated.
    pub satisfied: bool,
    /// Equality; implies `satisfied`.
    pub tight: bool,
}

impl BoundEntry {
    fn inapplicable(bound_id: BoundId, relation: Relation, reason: impl Into<String>) -> Self {
        BoundEntry {
            bound_id,
            applicable: false,
            reason: reason.into(),
            evaluated: false,
            bound_value: None,
            relation,
            satisfied: true,
            tight: false,
        }
    }

    /// Upper bound `rad ≤ num / den` checked as `rad · den ≤ num`.
    fn upper(bound_id: BoundId, reason: impl Into<String>, rad: i64, num: i64, den: i64) -> Self {
        BoundEntry {
            bound_id,
            applicable: true,
            reason: reason.into(),
            evaluated: true,
            bound_value: Some(num as f64 / den as f64),
            relation: Relation::AtMost,
            satisfied: rad * den <= num,
            tight: rad * den == num,
        }
    }

    pub fn violated(&self) -> bool {
        self.applicable && self.evaluated && !self.satisfied
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub invariants: Invariants,
    pub entries: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn entry(&self, id: BoundId) -> &BoundEntry {
        self.entries
            .iter()
            .find(|e| e.bound_id == id)
            .expect("every bound has an entry")
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.violated())
    }

    pub fn csv_header() -> &'static str {
        "graph_id,bound_id,applicable,evaluated,relation,bound_value,rad_p,satisfied,tight"
    }

    /// One CSV row per bound, without trailing newlines.
    pub fn csv_rows(&self) -> Vec<String> {
        let id = csv_field(&self.graph_id);
        self.entries
            .iter()
            .map(|e| {
                format!(
                    "{id},{},{},{},{},{},{},{},{}",
                    e.bound_id,
                    e.applicable,
                    e.evaluated,
                    e.relation,
                    e.bound_value.map(|v| v.to_string()).unwrap_or_default(),
                    self.invariants.rad_p,
                    e.satisfied,
                    e.tight
                )
            })
            .collect()
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Value of the piecewise `γ_p ≥ 2` bound and the name of the arm used.
pub fn piecewise_bound(n: usize, delta: usize, gamma_p: usize) -> (i64, &'static str) {
    let (n, d, g) = (n as i64, delta as i64, gamma_p as i64);
    if gamma_p == 2 && delta == 2 {
        (n - 5, "gamma_p=2,delta=2")
    } else if gamma_p == 2 {
        (n - d - 2, "gamma_p=2,delta>2")
    } else {
        (n - g - (2 * g).max(g + d) + 1, "gamma_p>2")
    }
}

/// Evaluates every bound on `g` using a solver result for `g`.
///
/// The result is re-certified first: the witness must be a power dominating
/// set of size `γ_p` and radius `rad_p`.
pub fn audit(g: &Graph, result: &SolveResult, graph_id: impl Into<String>) -> Result<BoundReport> {
    let n = g.order();
    if result.witness.len() != result.gamma_p || rad_of_set(g, result.witness) != Some(result.rad_p)
    {
        return Err(Error::NotPowerDominating(format!(
            "witness {} does not certify gamma_p = {}, rad_p = {}",
            result.witness, result.gamma_p, result.rad_p
        )));
    }

    let flags = classify(g);
    let split = split_partition(g);
    let omega = match split {
        Some(p) => {
            let omega = p.clique.len() + p.donated as usize;
            if n <= CLIQUE_LIMIT && clique_number(g)? != omega {
                return Err(Error::InvalidPartition(
                    "split clique is not maximum".into(),
                ));
            }
            Some(omega)
        }
        None if n <= CLIQUE_LIMIT => Some(clique_number(g)?),
        None => None,
    };
    let inv = Invariants {
        n,
        delta: g.min_degree(),
        max_degree: g.max_degree(),
        omega,
        gamma_p: result.gamma_p,
        rad_p: result.rad_p,
        is_connected: flags.connected,
        is_complete: flags.complete,
        is_complete_minus_pm: flags.complete_minus_pm,
        is_split: flags.split,
    };

    let (ni, di, gi, ri) = (
        n as i64,
        inv.delta as i64,
        inv.gamma_p as i64,
        inv.rad_p as i64,
    );
    let mut entries = Vec::with_capacity(7);
    let mut notes = Vec::new();

    let closed = g.closed_neighborhood(result.witness).len() as i64;
    entries.push(BoundEntry::upper(
        BoundId::B1,
        "always",
        ri,
        ni - closed + 1,
        1,
    ));
    entries.push(BoundEntry::upper(BoundId::B2, "always", ri, ni - di, 1));

    if !flags.connected {
        notes.push(format!(
            "disconnected ({} components): B1/B2 evaluated on per-component optimum, B3-B7 not applicable",
            result.components
        ));
        for id in [BoundId::B3, BoundId::B4, BoundId::B5, BoundId::B6] {
            entries.push(BoundEntry::inapplicable(
                id,
                Relation::AtMost,
                "disconnected",
            ));
        }
        entries.push(BoundEntry::inapplicable(
            BoundId::B7,
            Relation::AtLeast,
            "disconnected",
        ));
    } else {
        entries.push(if flags.complete {
            BoundEntry::inapplicable(BoundId::B3, Relation::AtMost, "complete graph")
        } else if flags.complete_minus_pm {
            BoundEntry::inapplicable(
                BoundId::B3,
                Relation::AtMost,
                "complete minus a perfect matching",
            )
        } else {
            BoundEntry::upper(BoundId::B3, "not K_n, not K_n - M", ri, ni - di - 1, 1)
        });

        entries.push(if inv.delta < 2 {
            BoundEntry::inapplicable(BoundId::B4, Relation::AtMost, "delta < 2")
        } else if inv.gamma_p < 2 {
            BoundEntry::inapplicable(BoundId::B4, Relation::AtMost, "gamma_p < 2")
        } else {
            let (value, arm) = piecewise_bound(n, inv.delta, inv.gamma_p);
            BoundEntry::upper(BoundId::B4, format!("arm {arm}"), ri, value, 1)
        });

        match (split, omega) {
            (Some(p), Some(w)) => {
                if p.donated {
                    notes.push(
                        "complete graph: one clique vertex moved to the independent side".into(),
                    );
                }
                entries.push(BoundEntry::upper(
                    BoundId::B5,
                    "split",
                    ri,
                    w as i64 - gi + 1,
                    1,
                ));
                entries.push(BoundEntry::upper(
                    BoundId::B6,
                    "split",
                    ri,
                    ni - 3 * gi + 2,
                    2,
                ));
            }
            _ => {
                entries.push(BoundEntry::inapplicable(
                    BoundId::B5,
                    Relation::AtMost,
                    "not split",
                ));
                entries.push(BoundEntry::inapplicable(
                    BoundId::B6,
                    Relation::AtMost,
                    "not split",
                ));
            }
        }

        entries.push(if inv.max_degree == 0 {
            BoundEntry::inapplicable(BoundId::B7, Relation::AtLeast, "Delta = 0")
        } else {
            let md = inv.max_degree as i64;
            // rad ≥ (n − γ)/(γΔ), equivalently γ(rΔ + 1) ≥ n.
            let lower = ri * gi * md >= ni - gi;
            let companion = gi * (ri * md + 1) >= ni;
            BoundEntry {
                bound_id: BoundId::B7,
                applicable: true,
                reason: "connected".into(),
                evaluated: true,
                bound_value: Some((ni - gi) as f64 / (gi * md) as f64),
                relation: Relation::AtLeast,
                satisfied: lower && companion,
                tight: ri * gi * md == ni - gi,
            }
        });
    }

    if result.definition_sensitive {
        notes.push(format!(
            "definition-sensitive: minimum radius over all power dominating sets is {}, over gamma_p-sets {}",
            result.rad_p_any_pds, result.rad_p
        ));
    }

    Ok(BoundReport {
        graph_id: graph_id.into(),
        invariants: inv,
        entries,
        notes,
    })
}
