//! Small-graph canonical labeling and an isomorph-free enumerator of
//! connected graphs.
//!
//! Canonical labeling is a plain individualization/refinement search that
//! visits every leaf of the search tree (no automorphism pruning). That is
//! exponential for highly symmetric graphs but instantaneous for n ≤ 9, which
//! is all the bundled enumerator needs. Larger corpora should come from an
//! external generator in graph6 form.

use std::collections::HashSet;

use crate::graph::{Graph, VertexSet};

/// Largest order the bundled enumerator will produce.
pub const MAX_ENUMERATION_ORDER: usize = 9;

/// Ordered partition refinement to the coarsest equitable partition.
/// Cells are split by neighbor counts into earlier cells, and subcells are
/// ordered by those counts, so the result is labeling-independent.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v);
                    (masks.iter().map(|m| nb.intersection(*m).len()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_for(g: &Graph, order: &[usize]) -> Vec<u64> {
    // order[i] = original vertex placed at canonical position i
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|i| {
            g.neighbors(order[i])
                .iter()
                .fold(0u64, |acc, u| acc | 1u64 << (63 - pos[u]))
        })
        .collect()
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = code_for(g, &order);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, order));
            }
        }
        Some(target) => {
            for &v in &cells[target] {
                let mut split = Vec::with_capacity(cells.len() + 1);
                split.extend_from_slice(&cells[..target]);
                split.push(vec![v]);
                split.push(cells[target].iter().copied().filter(|&u| u != v).collect());
                split.extend_from_slice(&cells[target + 1..]);
                search(g, split, best);
            }
        }
    }
}

/// Canonical labeling: `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    let (_, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (i, v) in order.into_iter().enumerate() {
        perm[v] = i;
    }
    perm
}

/// A representative that is equal for isomorphic graphs and only for them.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical form,
/// sorted by their graph6 words.
///
/// Every connected graph has a vertex whose removal leaves it connected (any
/// leaf of a spanning tree), so extending each connected graph on `n - 1`
/// vertices by a new vertex with every non-empty neighborhood reaches all of
/// them; duplicates collapse on canonical form.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_ENUMERATION_ORDER).contains(&n),
        "bundled enumerator supports 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}"
    );
    let mut level = vec![Graph::empty(1).expect("n = 1")];
    for m in 2..=n {
        let mut seen: HashSet<Graph> = HashSet::new();
        for base in &level {
            for mask in 1u64..(1u64 << (m - 1)) {
                let mut edges = base.edges();
                edges.extend(VertexSet(mask).iter().map(|u| (u, m - 1)));
                let g = Graph::from_edges(m, &edges).expect("in range");
                seen.insert(canonical_form(&g));
            }
        }
        level = seen.into_iter().collect();
    }
    let mut out: Vec<(String, Graph)> = level
        .into_iter()
        .map(|g| (crate::graph6::encode_graph6(&g), g))
        .collect();
    out.sort();
    out.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle_graph, petersen, random_gnp};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_counts() {
        // connected graphs on n unlabeled vertices
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn canonical_form_is_labeling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..40 {
            let g = random_gnp(8, 0.45, seed).unwrap();
            let mut perm: Vec<usize> = (0..8).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
        }
    }

    #[test]
    fn petersen_isomorphism_matches_invariant_test() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let p = petersen();
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            let q = p.permuted(&perm);
            assert!(is_isomorphic(&p, &q));
            assert!(q.is_petersen());
        }
        assert!(!is_isomorphic(&p, &complete(10).unwrap()));
        // 5-prism: cubic on 10 vertices, girth 4
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 1) % 5));
            e.push((i, i + 5));
        }
        let prism = Graph::from_edges(10, &e).unwrap();
        assert!(!is_isomorphic(&p, &prism));
        assert_eq!(prism.is_petersen(), is_isomorphic(&p, &prism));
    }

    #[test]
    fn non_isomorphic_same_degree_sequence() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let c6 = cycle_graph(6).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&c6, &tt));
    }
}
