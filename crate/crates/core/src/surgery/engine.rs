//! Local improvement of cycles and a randomized longest-cycle heuristic.

use std::collections::HashSet;

use log::{debug, trace};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::claims::claim_moves;
use super::segments::{enumerate_intermediate_paths, SegmentDecomposition};
use super::splice::splice_intermediate;
use super::{attempt, link, MoveKind, SurgeryConfig, SurgeryError, SurgeryMove};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{all_longest_paths_in, OrientedCycle, Path};

/// External paths worth trying: endpoint-distinct longest paths of `G \ C`,
/// then every single external vertex with a neighbor on `C`.
fn candidate_paths(g: &Graph, c: &OrientedCycle, config: &SurgeryConfig) -> Vec<Path> {
    let mut out = Vec::new();
    let forbidden = c.vertex_set();
    if let Some(longest) = all_longest_paths_in(g, forbidden, config.path_candidates.max(1) * 8) {
        let mut ends = HashSet::new();
        for p in longest.paths {
            if out.len() == config.path_candidates {
                break;
            }
            if ends.insert((p.start(), p.end())) {
                out.push(p);
            }
        }
    }
    for v in g.vertices().difference(forbidden) {
        if out.iter().any(|p: &Path| p.is_empty() && p.start() == v) {
            continue;
        }
        if !g.neighbors(v).intersection(forbidden).is_empty() {
            out.push(Path::new(g, vec![v]).expect("single vertex"));
        }
    }
    out
}

/// Replace segment `i` by a detour through the path.
fn insertions(g: &Graph, d: &SegmentDecomposition) -> Vec<SurgeryMove> {
    let c = d.cycle();
    let mut out = Vec::new();
    for i in 0..d.s() {
        let Some(route) = link(g, d.path().vertices(), d.xi(i), d.xi(i + 1)) else {
            continue;
        };
        let mut seq = vec![d.xi(i)];
        seq.extend(route);
        let rest = c.forward_arc(d.xi_pos(i + 1), d.xi_pos(i));
        if d.s() > 1 {
            seq.extend_from_slice(&rest[..rest.len() - 1]);
        }
        out.extend(attempt(g, MoveKind::Insertion, seq, c.len()));
    }
    out
}

/// Every move available for one external path.
fn moves_for(g: &Graph, d: &SegmentDecomposition, config: &SurgeryConfig) -> Vec<SurgeryMove> {
    let mut out = insertions(g, d);
    let upsilon = enumerate_intermediate_paths(g, d, config.max_intermediate_len);
    for ((a, b), paths) in &upsilon {
        for l in paths {
            if let Ok(Some(m)) = splice_intermediate(g, d, l, *a, *b) {
                out.push(m);
            }
        }
    }
    out.extend(claim_moves(g, d, config));
    out
}

/// One improvement step: the longest cycle reachable from `c` by a single
/// move, if it is strictly longer than `c`.
pub fn improve_once(
    g: &Graph,
    c: &OrientedCycle,
    config: &SurgeryConfig,
) -> Result<Option<OrientedCycle>, SurgeryError> {
    let c = OrientedCycle::new(g, c.vertices().to_vec())?;
    let mut best: Option<SurgeryMove> = None;
    for p in candidate_paths(g, &c, config) {
        let Ok(d) = SegmentDecomposition::new(g, &c, &p) else {
            continue;
        };
        for m in moves_for(g, &d, config) {
            if m.delta > 0 && best.as_ref().is_none_or(|b| m.delta > b.delta) {
                trace!("{} move gains {}", m.kind, m.delta);
                best = Some(m);
            }
        }
    }
    Ok(best.map(|m| m.result))
}

/// Applies [`improve_once`] until no move helps.
pub fn improve_to_fixed_point(
    g: &Graph,
    c: &OrientedCycle,
    config: &SurgeryConfig,
) -> Result<OrientedCycle, SurgeryError> {
    let mut current = c.clone();
    while let Some(next) = improve_once(g, &current, config)? {
        debug!("cycle grew from {} to {}", current.len(), next.len());
        current = next;
    }
    Ok(current)
}

/// Grows a random path, preferring neighbors with few unvisited neighbors,
/// then closes it at the earliest vertex adjacent to the end.
pub fn greedy_cycle<R: Rng>(g: &Graph, rng: &mut R) -> Option<OrientedCycle> {
    let starts: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v) >= 2).collect();
    let &start = starts.choose(rng)?;
    let mut path = vec![start];
    let mut visited = VertexSet::singleton(start);
    for _ in 0..2 {
        loop {
            let end = *path.last().expect("non-empty");
            let open: Vec<usize> = g.neighbors(end).difference(visited).iter().collect();
            let Some(fewest) = open
                .iter()
                .map(|&u| g.neighbors(u).difference(visited).len())
                .min()
            else {
                break;
            };
            let ties: Vec<usize> = open
                .into_iter()
                .filter(|&u| g.neighbors(u).difference(visited).len() == fewest)
                .collect();
            let &next = ties.choose(rng).expect("non-empty");
            path.push(next);
            visited.insert(next);
        }
        path.reverse();
    }
    let end = *path.last().expect("non-empty");
    let i = (0..path.len().saturating_sub(2)).find(|&i| g.has_edge(path[i], end))?;
    OrientedCycle::new(g, path[i..].to_vec()).ok()
}

/// Some cycle of `g`, closed by the first non-tree edge of a search tree.
fn any_cycle(g: &Graph) -> Option<OrientedCycle> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = VertexSet::EMPTY;
    let up = |parent: &[usize], mut v: usize| {
        let mut chain = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            chain.push(v);
        }
        chain
    };
    for root in 0..n {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if !seen.contains(u) {
                    seen.insert(u);
                    parent[u] = v;
                    stack.push(u);
                } else if u != parent[v] && parent[u] != v {
                    let from_v = up(&parent, v);
                    let from_u = up(&parent, u);
                    let on_v: VertexSet = from_v.iter().copied().collect();
                    let k = from_u.iter().position(|w| on_v.contains(*w)).expect("same tree");
                    let lca = from_u[k];
                    let mut walk: Vec<usize> = from_v.iter().copied().take_while(|&w| w != lca).collect();
                    walk.push(lca);
                    walk.extend(from_u[..k].iter().rev());
                    return OrientedCycle::new(g, walk).ok();
                }
            }
        }
    }
    None
}

/// A long cycle found by random greedy starts improved to a fixed point.
/// `None` exactly when the graph is a forest.
pub fn heuristic_longest_cycle(g: &Graph, seed: u64, config: &SurgeryConfig) -> Option<OrientedCycle> {
    if g.is_forest() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<OrientedCycle> = None;
    for round in 0..=config.restarts {
        let Some(start) = greedy_cycle(g, &mut rng).or_else(|| any_cycle(g)) else {
            continue;
        };
        let grown = improve_to_fixed_point(g, &start, config).expect("cycle built from g");
        debug!("round {round}: start {} improved to {}", start.len(), grown.len());
        if best.as_ref().is_none_or(|b| grown.len() > b.len()) {
            best = Some(grown);
        }
        if best.as_ref().is_some_and(|b| b.len() == g.n()) {
            break;
        }
    }
    best.or_else(|| any_cycle(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle_graph, petersen};
    use crate::invariants::{all_longest_cycles, circumference};

    #[test]
    fn insertion_closes_a_triangle_into_a_square() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1)]).unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2]).unwrap();
        let better = improve_once(&g, &c, &SurgeryConfig::default()).unwrap().unwrap();
        assert_eq!(better.len(), 4);
    }

    #[test]
    fn longest_cycles_are_fixed_points() {
        let g = petersen();
        for c in all_longest_cycles(&g).unwrap() {
            assert_eq!(improve_once(&g, &c, &SurgeryConfig::default()).unwrap(), None);
        }
    }

    #[test]
    fn rejects_foreign_cycle() {
        let k4 = complete(4).unwrap();
        let c = OrientedCycle::new(&k4, vec![0, 1, 2, 3]).unwrap();
        let c4 = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(improve_once(&c4, &c, &SurgeryConfig::default()).is_err());
    }

    #[test]
    fn heuristic_on_named_graphs() {
        let cfg = SurgeryConfig::default();
        for g in [
            petersen(),
            complete(7).unwrap(),
            cycle_graph(9).unwrap(),
            complete_bipartite(4, 4).unwrap(),
        ] {
            let found = heuristic_longest_cycle(&g, 7, &cfg).unwrap();
            assert_eq!(found.len(), circumference(&g).length);
        }
        assert_eq!(heuristic_longest_cycle(&Graph::empty(3).unwrap(), 0, &cfg), None);
    }

    #[test]
    fn any_cycle_finds_the_unique_cycle() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]).unwrap();
        assert_eq!(any_cycle(&g).unwrap().len(), 3);
    }
}
