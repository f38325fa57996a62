//! Exact power domination with propagation radius.
//!
//! Graphs have at most [`MAX_VERTICES`] vertices and vertex sets are single
//! 128-bit words. The main entry points are [`propagate`] for a single run of
//! the process, [`solve`] for `γ_p` and `rad_p`, [`families`] for the extremal
//! constructions and [`audit()`] for checking radius bounds.

pub mod audit;
pub mod bitset;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod propagation;
pub mod solver;
pub mod structure;
pub mod zero_forcing;

pub use audit::{
    audit, classify, BoundEntry, BoundId, BoundReport, Invariants, Relation, StructureFlags,
};
pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use families::{generate, ExpectedProfile, Family, FamilyInstance, ProfileStatus};
pub use formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, Indexing};
pub use graph::{Graph, GraphJson};
pub use propagation::{excess, is_pds, propagate, rad_of_set, PropagationTrace};
pub use solver::{
    solve, split_restricted_solve, SolveOptions, SolveResult, SolveStats, TwinFilter,
};
pub use structure::{clique_number, split_partition, twins, SplitPartition};
pub use zero_forcing::{
    chains_and_reversal, check_reversal_lemma, closure, forcing_sequence, is_zfs, reverse_sequence,
    ForcingChains, ForcingPolicy, ForcingSequence,
};
