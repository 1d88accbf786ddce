//! Invariants computed once per graph, and the theorem checks that read them.

use std::cell::OnceCell;

use super::lemmas::{self, Extremes};
use super::{Evidence, Status, TheoremId, Verdict, VerifyLimits};
use crate::graph::{Graph, VertexSet};
use crate::graph6::encode_graph6;
use crate::invariants::{
    circumference, has_path_of_length_at_least, toughness, vertex_connectivity, Circumference, Toughness,
};

/// Exact invariants of one graph. The longest-cycle structure needed by the
/// lemma checks is built on first use and shared between them.
#[derive(Debug)]
pub struct GraphProfile {
    pub(super) g: Graph,
    pub(super) graph6: String,
    pub(super) delta: usize,
    pub(super) kappa: usize,
    /// `None` when the graph is over the exact cap.
    pub(super) exact: Option<(Toughness, Circumference)>,
    pub(super) limits: VerifyLimits,
    extremes: OnceCell<Extremes>,
}

impl GraphProfile {
    pub fn new(g: &Graph, limits: &VerifyLimits) -> Self {
        let exact = (g.n() <= limits.max_exact_n).then(|| (toughness(g), circumference(g)));
        GraphProfile {
            g: g.clone(),
            graph6: encode_graph6(g),
            delta: g.min_degree().unwrap_or(0),
            kappa: vertex_connectivity(g),
            exact,
            limits: limits.clone(),
            extremes: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn tau(&self) -> Option<Toughness> {
        self.exact.as_ref().map(|(t, _)| *t)
    }

    pub fn circumference(&self) -> Option<&Circumference> {
        self.exact.as_ref().map(|(_, c)| c)
    }

    /// Circumference as seen by the bound checks, including any configured offset.
    fn c_checked(&self) -> Option<usize> {
        let c = self.circumference()?.length as isize + self.limits.c_offset;
        Some(c.max(0) as usize)
    }

    pub(super) fn extremes(&self) -> &Extremes {
        self.extremes
            .get_or_init(|| Extremes::new(&self.g, self.circumference().expect("exact"), &self.limits))
    }

    pub(super) fn evidence(&self) -> Evidence {
        Evidence {
            graph6: self.graph6.clone(),
            n: self.n(),
            delta: self.delta,
            kappa: self.kappa,
            tau: self.tau(),
            c: self.c_checked(),
            cut: self.tau().and_then(|t| t.witness()),
            cycle: self.circumference().and_then(|c| c.witness.clone()),
            detail: None,
        }
    }

    pub(super) fn verdict(&self, theorem: TheoremId, status: Status) -> Verdict {
        Verdict {
            theorem,
            status,
            evidence: self.evidence(),
            truncated: false,
        }
    }

    fn failed(&self, theorem: TheoremId, detail: String) -> Verdict {
        let mut v = self.verdict(theorem, Status::Counterexample);
        v.evidence.detail = Some(detail);
        v
    }

    pub fn check(&self, theorem: TheoremId) -> Verdict {
        if self.exact.is_none() {
            return self.verdict(theorem, Status::ResourceLimit);
        }
        match theorem {
            TheoremId::A => self.theorem_a(),
            TheoremId::B => self.theorem_b(),
            TheoremId::One => self.theorem_1(),
            TheoremId::Corollary1 => self.corollary_1(),
            TheoremId::C => self.theorem_c(self.auto_vset()),
            TheoremId::Lemma1 => lemmas::lemma_1(self),
            TheoremId::Lemma2 => lemmas::lemma_2(self),
            TheoremId::Lemma3 => lemmas::lemma_3(self),
        }
    }

    /// `c ≥ bound`, else a counterexample naming the bound.
    fn bound(&self, theorem: TheoremId, bound: usize) -> Verdict {
        let c = self.c_checked().expect("exact");
        if c >= bound {
            self.verdict(theorem, Status::Holds)
        } else {
            self.failed(theorem, format!("c = {c} < {bound}"))
        }
    }

    fn theorem_a(&self) -> Verdict {
        if self.kappa < 2 {
            return self.verdict(TheoremId::A, Status::HypothesisNotMet);
        }
        self.bound(TheoremId::A, self.n().min(2 * self.delta))
    }

    fn theorem_b(&self) -> Verdict {
        if !self.tau().expect("exact").is_one_tough() {
            return self.verdict(TheoremId::B, Status::HypothesisNotMet);
        }
        self.bound(TheoremId::B, self.n().min(2 * self.delta + 2))
    }

    fn theorem_1(&self) -> Verdict {
        if !self.tau().expect("exact").exceeds_one() {
            return self.verdict(TheoremId::One, Status::HypothesisNotMet);
        }
        let v = self.bound(TheoremId::One, self.n().min(2 * self.delta + 5));
        if v.status == Status::Counterexample && self.g.is_petersen() {
            return self.verdict(TheoremId::One, Status::PetersenException);
        }
        v
    }

    /// Hamiltonian here means `c ≥ n`, so one- and two-vertex graphs count.
    fn corollary_1(&self) -> Verdict {
        let n = self.n();
        if !self.tau().expect("exact").exceeds_one() || 2 * self.delta + 5 < n {
            return self.verdict(TheoremId::Corollary1, Status::HypothesisNotMet);
        }
        let v = self.bound(TheoremId::Corollary1, n);
        if v.status == Status::Counterexample && self.g.is_petersen() {
            return self.verdict(TheoremId::Corollary1, Status::PetersenException);
        }
        v
    }

    /// The largest `t` with `t` vertices of degree at least `t`, taking the
    /// `t` vertices of highest degree (smaller index first on ties).
    fn auto_vset(&self) -> VertexSet {
        let mut by_degree: Vec<usize> = self.g.vertices().iter().collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(self.g.degree(v)), v));
        let t = (0..=by_degree.len())
            .rev()
            .find(|&t| by_degree[..t].iter().all(|&v| self.g.degree(v) >= t))
            .unwrap_or(0);
        by_degree[..t].iter().copied().collect()
    }

    pub(super) fn theorem_c(&self, vset: VertexSet) -> Verdict {
        let n = self.n();
        if n > self.limits.theorem_c_max_n {
            return self.verdict(TheoremId::C, Status::ResourceLimit);
        }
        let t = vset.len();
        let hamiltonian = self.c_checked().expect("exact") >= n;
        let in_range = vset.is_subset(self.g.vertices());
        if !hamiltonian || !in_range || vset.iter().any(|v| self.g.degree(v) < t) {
            return self.verdict(TheoremId::C, Status::HypothesisNotMet);
        }
        for x in 0..n {
            for y in x + 1..n {
                if !has_path_of_length_at_least(&self.g, x, y, t) {
                    return self.failed(TheoremId::C, format!("no path of length ≥ {t} joins {x} and {y}"));
                }
            }
        }
        self.verdict(TheoremId::C, Status::Holds)
    }
}

fn run(g: &Graph, theorem: TheoremId) -> Verdict {
    GraphProfile::new(g, &VerifyLimits::default()).check(theorem)
}

pub fn check_theorem_a(g: &Graph) -> Verdict {
    run(g, TheoremId::A)
}

pub fn check_theorem_b(g: &Graph) -> Verdict {
    run(g, TheoremId::B)
}

pub fn check_theorem_1(g: &Graph) -> Verdict {
    run(g, TheoremId::One)
}

pub fn check_corollary_1(g: &Graph) -> Verdict {
    run(g, TheoremId::Corollary1)
}

/// Checks the all-pairs path statement for a given vertex set.
pub fn check_theorem_c(g: &Graph, vset: VertexSet) -> Verdict {
    let p = GraphProfile::new(g, &VerifyLimits::default());
    if p.exact.is_none() {
        return p.verdict(TheoremId::C, Status::ResourceLimit);
    }
    p.theorem_c(vset)
}

/// Checks the all-pairs path statement with the largest admissible vertex set.
pub fn check_theorem_c_auto(g: &Graph) -> Verdict {
    run(g, TheoremId::C)
}

pub fn check_lemma_1(g: &Graph) -> Verdict {
    run(g, TheoremId::Lemma1)
}

pub fn check_lemma_2(g: &Graph) -> Verdict {
    run(g, TheoremId::Lemma2)
}

pub fn check_lemma_3(g: &Graph) -> Verdict {
    run(g, TheoremId::Lemma3)
}
