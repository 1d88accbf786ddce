//! Per-graph checks of circumference lower bounds and the structural lemmas
//! behind them, plus a batch driver over graph6 streams.

mod batch;
mod lemmas;
mod profile;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::VertexSet;
use crate::invariants::{OrientedCycle, Toughness};

pub use batch::{batch_verify, ParseFailure, Report, StatusCounts, RECORD_FIELDS};
pub use profile::{
    check_corollary_1, check_lemma_1, check_lemma_2, check_lemma_3, check_theorem_1, check_theorem_a,
    check_theorem_b, check_theorem_c, check_theorem_c_auto, GraphProfile,
};

/// The statements that can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// 2-connected ⇒ c ≥ min{n, 2δ}.
    A,
    /// 1-tough ⇒ c ≥ min{n, 2δ + 2}.
    B,
    /// τ > 1 ⇒ c ≥ min{n, 2δ + 5} or Petersen.
    One,
    /// τ > 1 and 2δ ≥ n − 5 ⇒ hamiltonian or Petersen.
    Corollary1,
    /// Hamiltonian with t vertices of degree ≥ t ⇒ every pair joined by a path of length ≥ t.
    C,
    /// Cycle length bounds from a longest external path with unequal end neighborhoods.
    Lemma1,
    /// Segment length bounds from intermediate paths when end neighborhoods agree.
    Lemma2,
    /// |C| ≥ κ(δ + 1) or a longest external path has both ends attached twice.
    Lemma3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::A,
        TheoremId::B,
        TheoremId::One,
        TheoremId::Corollary1,
        TheoremId::C,
        TheoremId::Lemma1,
        TheoremId::Lemma2,
        TheoremId::Lemma3,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::One => "1",
            TheoremId::Corollary1 => "C1",
            TheoremId::C => "C",
            TheoremId::Lemma1 => "L1",
            TheoremId::Lemma2 => "L2",
            TheoremId::Lemma3 => "L3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem {0:?}; expected one of A, B, 1, C1, C, L1, L2, L3")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Parses a comma-separated theorem list such as `A,B,1,C1`.
pub fn parse_theorem_list(s: &str) -> Result<Vec<TheoremId>, UnknownTheorem> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let t: TheoremId = part.parse()?;
        if !out.contains(&t) {
            out.push(t);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    HypothesisNotMet,
    Holds,
    PetersenException,
    Counterexample,
    /// The graph exceeds a configured size cap for this check.
    ResourceLimit,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::HypothesisNotMet,
        Status::Holds,
        Status::PetersenException,
        Status::Counterexample,
        Status::ResourceLimit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Status::HypothesisNotMet => "hypothesis-not-met",
            Status::Holds => "holds",
            Status::PetersenException => "petersen-exception",
            Status::Counterexample => "counterexample",
            Status::ResourceLimit => "resource-limit",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Invariant values behind a verdict, with witnesses where they exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub kappa: usize,
    /// Absent when the graph is over the exact-computation cap.
    pub tau: Option<Toughness>,
    /// Absent when the graph is over the exact-computation cap.
    pub c: Option<usize>,
    /// A cut attaining τ.
    pub cut: Option<VertexSet>,
    /// A longest cycle, or the cycle a lemma failed on.
    pub cycle: Option<OrientedCycle>,
    /// What failed, for counterexamples.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub status: Status,
    pub evidence: Evidence,
    /// Some enumeration hit its cap, so the check covered a subset of cases.
    pub truncated: bool,
}

impl Verdict {
    /// Tab-separated record in [`RECORD_FIELDS`] order. An infinite τ is
    /// written as `1/0`; values that were not computed as `-`.
    pub fn record(&self) -> String {
        let e = &self.evidence;
        let (num, den) = match e.tau {
            Some(t) => {
                let (a, b) = t.parts();
                (a.to_string(), b.to_string())
            }
            None => ("-".to_string(), "-".to_string()),
        };
        let c = e.c.map_or_else(|| "-".to_string(), |c| c.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            e.graph6, self.theorem, self.status, e.n, e.delta, e.kappa, num, den, c
        )
    }
}

/// Size caps and test hooks for the checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyLimits {
    /// Largest order for exact toughness and circumference.
    pub max_exact_n: usize,
    /// Largest order for the all-pairs path check.
    pub theorem_c_max_n: usize,
    /// Most longest external paths listed per cycle.
    pub path_cap: usize,
    /// Worker threads for batches; `None` uses the default pool.
    pub workers: Option<usize>,
    /// Added to the circumference before the bound checks. Only for
    /// exercising the failure path.
    pub c_offset: isize,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits {
            max_exact_n: 16,
            theorem_c_max_n: 10,
            path_cap: 10_000,
            workers: None,
            c_offset: 0,
        }
    }
}
