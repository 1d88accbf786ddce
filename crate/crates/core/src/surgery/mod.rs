//! Cycle surgery: rewiring a cycle `C` through a path `P` in `G \ C` and the
//! detours available around it, to find longer cycles.
//!
//! Every constructed cycle is validated against the graph before it is
//! returned, so a move either yields a genuine cycle of `G` or nothing.

mod claims;
mod engine;
mod segments;
mod splice;

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::{OrientedCycle, WalkError};

pub use claims::claim_moves;
pub use engine::{greedy_cycle, heuristic_longest_cycle, improve_once, improve_to_fixed_point};
pub use segments::{enumerate_intermediate_paths, upsilon_between, IntermediatePath, SegmentDecomposition, Upsilon};
pub use splice::{splice_intermediate, SpliceAccounting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("the path shares a vertex with the cycle")]
    PathTouchesCycle,
    #[error("neither end of the path has a neighbor on the cycle")]
    NoAttachments,
    #[error("segment indices must differ, got {0} twice")]
    SameSegment(usize),
    #[error("vertex {vertex} is not interior to segment {segment}")]
    NotInSegment { vertex: usize, segment: usize },
    #[error("{0:?} is not an intermediate path: {1}")]
    NotIntermediate(Vec<usize>, String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(#[from] WalkError),
}

/// Which construction produced a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// Replace one segment by a detour through the path.
    Insertion,
    /// Exchange two segment pieces for an intermediate path plus the path.
    Splice,
    /// Three-segment rewiring through a chord `ξ_a⁻ξ_b⁺`.
    Claim3,
    /// Rewiring through a chord `ξ_a⁺w` and a second chord at `ξ_b⁻`.
    Claim4,
    /// Rewiring through chords `ξ_a⁺w` and `ξ_b⁺w±`.
    Claim5,
    /// Two-arc replacement through a path leaving an interior vertex of `P`.
    Claim17,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Insertion => "insertion",
            MoveKind::Splice => "splice",
            MoveKind::Claim3 => "claim3",
            MoveKind::Claim4 => "claim4",
            MoveKind::Claim5 => "claim5",
            MoveKind::Claim17 => "claim17",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A candidate replacement cycle and its length change relative to `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryMove {
    pub kind: MoveKind,
    pub result: OrientedCycle,
    pub delta: isize,
    /// Length bookkeeping, filled in by splices only.
    pub accounting: Option<SpliceAccounting>,
}

impl SurgeryMove {
    fn new(kind: MoveKind, result: OrientedCycle, old_len: usize) -> Self {
        let delta = result.len() as isize - old_len as isize;
        SurgeryMove {
            kind,
            result,
            delta,
            accounting: None,
        }
    }
}

/// Search limits for the improvement engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurgeryConfig {
    /// Longest intermediate path, in edges, tried by splices and detours.
    pub max_intermediate_len: usize,
    /// Number of endpoint-distinct longest paths of `G \ C` to try.
    pub path_candidates: usize,
    /// Extra random starts for the heuristic beyond the first.
    pub restarts: usize,
}

impl Default for SurgeryConfig {
    fn default() -> Self {
        SurgeryConfig {
            max_intermediate_len: 3,
            path_candidates: 8,
            restarts: 8,
        }
    }
}

/// The path `P` ordered so its first vertex is adjacent to `u` and its last to `v`.
fn link(g: &Graph, p: &[usize], u: usize, v: usize) -> Option<Vec<usize>> {
    let (x, y) = (p[0], p[p.len() - 1]);
    if g.has_edge(x, u) && g.has_edge(y, v) {
        Some(p.to_vec())
    } else if g.has_edge(y, u) && g.has_edge(x, v) {
        Some(p.iter().rev().copied().collect())
    } else {
        None
    }
}

/// Builds a cycle from `seq` if it is one, measured against `old_len`.
fn attempt(g: &Graph, kind: MoveKind, seq: Vec<usize>, old_len: usize) -> Option<SurgeryMove> {
    OrientedCycle::new(g, seq)
        .ok()
        .map(|c| SurgeryMove::new(kind, c, old_len))
}
