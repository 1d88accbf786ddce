//! Lemma checks, quantified over every longest cycle and every longest path
//! outside it.

use log::warn;

use super::profile::GraphProfile;
use super::{Status, TheoremId, Verdict, VerifyLimits};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{all_longest_cycles, all_longest_paths_in, Circumference, OrientedCycle, Path};
use crate::surgery::{enumerate_intermediate_paths, splice_intermediate, SegmentDecomposition};

/// A longest cycle with the longest paths of the graph outside it.
#[derive(Debug)]
pub(super) struct Extreme {
    pub cycle: OrientedCycle,
    pub paths: Vec<Path>,
    pub truncated: bool,
}

/// Every longest cycle that leaves vertices uncovered.
#[derive(Debug, Default)]
pub(super) struct Extremes {
    pub items: Vec<Extreme>,
}

impl Extremes {
    pub fn new(g: &Graph, circ: &Circumference, limits: &VerifyLimits) -> Self {
        // no proper cycle, or hamiltonian: nothing lies outside a longest cycle
        if circ.witness.is_none() || circ.length == g.n() {
            return Extremes::default();
        }
        let cycles = all_longest_cycles(g).expect("graph has a cycle");
        let items = cycles
            .into_iter()
            .map(|cycle| {
                let listed = all_longest_paths_in(g, cycle.vertex_set(), limits.path_cap)
                    .expect("cycle is not hamiltonian");
                if listed.truncated {
                    warn!("longest paths outside {cycle} capped at {}", limits.path_cap);
                }
                Extreme {
                    cycle,
                    paths: listed.paths,
                    truncated: listed.truncated,
                }
            })
            .collect();
        Extremes { items }
    }

    fn truncated(&self) -> bool {
        self.items.iter().any(|e| e.truncated)
    }
}

fn on_cycle(g: &Graph, v: usize, c: &OrientedCycle) -> VertexSet {
    g.neighbors(v).intersection(c.vertex_set())
}

/// Outcome of scanning all instances: whether any instance qualified, and
/// the first failure.
struct Scan {
    qualified: bool,
    failure: Option<(OrientedCycle, String)>,
}

impl Scan {
    fn new() -> Self {
        Scan {
            qualified: false,
            failure: None,
        }
    }

    fn into_verdict(self, p: &GraphProfile, theorem: TheoremId) -> Verdict {
        let truncated = p.extremes().truncated();
        let mut v = match (&self.failure, self.qualified) {
            (Some(_), _) => p.verdict(theorem, Status::Counterexample),
            (None, true) => p.verdict(theorem, Status::Holds),
            (None, false) => p.verdict(theorem, Status::HypothesisNotMet),
        };
        if let Some((cycle, detail)) = self.failure {
            v.evidence.cycle = Some(cycle);
            v.evidence.detail = Some(detail);
        }
        v.truncated = truncated;
        v
    }
}

/// Unequal end neighborhoods: `|C| ≥ 3δ + max{σ₁, σ₂} − 1` for p̄ = 1 and
/// `|C| ≥ max{2p̄ + 8, 4δ − 2p̄}` for p̄ ≥ 2.
pub(super) fn lemma_1(p: &GraphProfile) -> Verdict {
    let g = &p.g;
    let delta = p.delta as isize;
    let mut scan = Scan::new();
    'outer: for e in &p.extremes().items {
        for path in &e.paths {
            let pbar = path.len() as isize;
            let nx = on_cycle(g, path.start(), &e.cycle);
            let ny = on_cycle(g, path.end(), &e.cycle);
            if pbar < 1 || nx.len() < 2 || ny.len() < 2 || nx == ny {
                continue;
            }
            scan.qualified = true;
            let sigma = nx.difference(ny).len().max(ny.difference(nx).len()) as isize;
            let bound = if pbar == 1 {
                3 * delta + sigma - 1
            } else {
                (2 * pbar + 8).max(4 * delta - 2 * pbar)
            };
            if (e.cycle.len() as isize) < bound {
                let detail = format!("|C| = {} < {bound} for P = {:?}", e.cycle.len(), path.vertices());
                scan.failure = Some((e.cycle.clone(), detail));
                break 'outer;
            }
        }
    }
    scan.into_verdict(p, TheoremId::Lemma1)
}

/// Equal end neighborhoods with at least two attachments: the segment
/// bounds for every intermediate path (a1), for all-edge families of one to
/// three edges (a2), and for two independent intermediate edges (a3). Each
/// intermediate path is also spliced, and the result must match the length
/// bookkeeping without beating the longest cycle.
pub(super) fn lemma_2(p: &GraphProfile) -> Verdict {
    let g = &p.g;
    let mut scan = Scan::new();
    'outer: for e in &p.extremes().items {
        for path in &e.paths {
            let nx = on_cycle(g, path.start(), &e.cycle);
            let ny = on_cycle(g, path.end(), &e.cycle);
            if nx != ny || nx.len() < 2 {
                continue;
            }
            scan.qualified = true;
            if let Some(detail) = lemma_2_instance(g, &e.cycle, path) {
                scan.failure = Some((e.cycle.clone(), detail));
                break 'outer;
            }
        }
    }
    scan.into_verdict(p, TheoremId::Lemma2)
}

fn lemma_2_instance(g: &Graph, c: &OrientedCycle, path: &Path) -> Option<String> {
    let d = SegmentDecomposition::new(g, c, path).expect("path is outside and attached");
    let pbar = path.len();
    let upsilon = enumerate_intermediate_paths(g, &d, g.n());
    for (&(a, b), paths) in &upsilon {
        let pair = d.segment_len(a) + d.segment_len(b);
        for l in paths {
            if pair < 2 * pbar + 2 * l.len() + 4 {
                return Some(format!(
                    "(a1) |I_{a}| + |I_{b}| = {pair} < {} for L = {:?}",
                    2 * pbar + 2 * l.len() + 4,
                    l.vertices()
                ));
            }
            match splice_intermediate(g, &d, l, a, b) {
                Ok(Some(m)) => {
                    let predicted = m.accounting.expect("splices carry accounting").predicted_len();
                    if predicted != m.result.len() || m.delta > 0 {
                        return Some(format!(
                            "splice through {:?} gives length {} (bookkeeping {predicted})",
                            l.vertices(),
                            m.result.len()
                        ));
                    }
                }
                Ok(None) => return Some(format!("no splice closes through {:?}", l.vertices())),
                Err(err) => return Some(format!("splice through {:?} failed: {err}", l.vertices())),
            }
        }
        if !paths.iter().all(|l| l.is_edge()) {
            continue;
        }
        let i = paths.len();
        if i <= 3 && pair < 2 * pbar + i + 5 {
            return Some(format!("(a2) |I_{a}| + |I_{b}| = {pair} < {} with {i} edges", 2 * pbar + i + 5));
        }
        let independent = paths.iter().enumerate().any(|(k, l1)| {
            paths[k + 1..]
                .iter()
                .any(|l2| l1.z() != l2.z() && l1.w() != l2.w())
        });
        if independent && pair < 2 * pbar + 8 {
            return Some(format!("(a3) |I_{a}| + |I_{b}| = {pair} < {}", 2 * pbar + 8));
        }
    }
    None
}

/// Either `|C| ≥ κ(δ + 1)` or some longest path outside `C` has both ends
/// with at least two neighbors on `C`.
pub(super) fn lemma_3(p: &GraphProfile) -> Verdict {
    let g = &p.g;
    let bound = p.kappa * (p.delta + 1);
    let mut scan = Scan::new();
    let mut undecided = false;
    for e in &p.extremes().items {
        scan.qualified = true;
        if e.cycle.len() >= bound {
            continue;
        }
        let attached = |v: usize| on_cycle(g, v, &e.cycle).len() >= 2;
        if e.paths.iter().any(|path| attached(path.start()) && attached(path.end())) {
            continue;
        }
        if e.truncated {
            undecided = true;
            continue;
        }
        let detail = format!("|C| = {} < {bound} and no longest outside path is attached twice at both ends", e.cycle.len());
        scan.failure = Some((e.cycle.clone(), detail));
        break;
    }
    let mut v = scan.into_verdict(p, TheoremId::Lemma3);
    if undecided && v.status == Status::Holds {
        v.status = Status::ResourceLimit;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle_graph, petersen};
    use crate::verifier::{check_lemma_1, check_lemma_2, check_lemma_3};

    #[test]
    fn hamiltonian_graphs_do_not_qualify() {
        for g in [complete(5).unwrap(), cycle_graph(7).unwrap()] {
            assert_eq!(check_lemma_1(&g).status, Status::HypothesisNotMet);
            assert_eq!(check_lemma_2(&g).status, Status::HypothesisNotMet);
            assert_eq!(check_lemma_3(&g).status, Status::HypothesisNotMet);
        }
    }

    #[test]
    fn petersen_lemmas() {
        let g = petersen();
        // single outside vertex with three neighbors on each 9-cycle
        assert_eq!(check_lemma_3(&g).status, Status::Holds);
        assert_eq!(check_lemma_2(&g).status, Status::Holds);
        assert_eq!(check_lemma_1(&g).status, Status::HypothesisNotMet);
    }

    #[test]
    fn single_intermediate_edge() {
        // C8 with x joined to 0 and 4 and the chord 2–6 between the two segment interiors
        let mut e = cycle_graph(8).unwrap().edges();
        e.extend_from_slice(&[(8, 0), (8, 4), (2, 6)]);
        let g = Graph::from_edges(9, &e).unwrap();
        let p = GraphProfile::new(&g, &VerifyLimits::default());
        assert_eq!(p.circumference().unwrap().length, 8);
        let c = OrientedCycle::new(&g, (0..8).collect()).unwrap();
        let x = Path::new(&g, vec![8]).unwrap();
        let d = SegmentDecomposition::new(&g, &c, &x).unwrap();
        let u = enumerate_intermediate_paths(&g, &d, 9);
        assert_eq!(u[&(0, 1)].len(), 1);
        assert_eq!(lemma_2_instance(&g, &c, &x), None);
        assert_eq!(p.check(TheoremId::Lemma2).status, Status::Holds);
    }
}
