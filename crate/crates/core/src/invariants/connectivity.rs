//! Vertex connectivity by unit-capacity max-flow on the split-vertex network.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

/// Residual network where vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1`.
struct SplitNetwork {
    size: usize,
    cap: Vec<u32>,
}

const INF: u32 = u32::MAX / 2;

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let size = 2 * g.n();
        let mut cap = vec![0u32; size * size];
        for v in 0..g.n() {
            let c = if v == s || v == t { INF } else { 1 };
            cap[(2 * v) * size + 2 * v + 1] = c;
        }
        for (u, v) in g.edges() {
            cap[(2 * u + 1) * size + 2 * v] = INF;
            cap[(2 * v + 1) * size + 2 * u] = INF;
        }
        SplitNetwork { size, cap }
    }

    /// Augments along shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let size = self.size;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; size];
        let mut queue = VecDeque::with_capacity(size);
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            queue.clear();
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for w in 0..size {
                    if parent[w] == usize::MAX && self.cap[u * size + w] > 0 {
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut w = sink;
            while w != source {
                let u = parent[w];
                self.cap[u * size + w] -= 1;
                self.cap[w * size + u] += 1;
                w = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Size of a minimum vertex set separating non-adjacent `s` and `t`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "s and t must be distinct and non-adjacent");
    SplitNetwork::new(g, s, t).max_flow(2 * s + 1, 2 * t, g.n())
}

/// κ(G): the fewest vertices whose removal disconnects G or leaves a single
/// vertex. κ(Kₙ) = n − 1 and κ of a disconnected graph is 0.
///
/// Some vertex among the first κ + 1 lies outside a minimum cut, so only
/// pairs whose first member has index ≤ the incumbent need a flow.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let k = SplitNetwork::new(g, i, j).max_flow(2 * i + 1, 2 * j, best);
            best = best.min(k);
        }
        i += 1;
    }
    best
}

/// Is `cut` a vertex cut, i.e. does removing it leave at least two components?
pub fn is_vertex_cut(g: &Graph, cut: VertexSet) -> bool {
    g.component_count(cut) >= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle_graph, path_graph, petersen};

    #[test]
    fn named_graphs() {
        assert_eq!(vertex_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&cycle_graph(5).unwrap()), 2);
        assert_eq!(vertex_connectivity(&complete(4).unwrap()), 3);
        assert_eq!(vertex_connectivity(&complete(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&path_graph(4).unwrap()), 1);
        assert_eq!(vertex_connectivity(&complete_bipartite(3, 4).unwrap()), 3);
        assert_eq!(vertex_connectivity(&Graph::empty(3).unwrap()), 0);
    }

    #[test]
    fn local_connectivity() {
        let g = cycle_graph(6).unwrap();
        assert_eq!(local_vertex_connectivity(&g, 0, 3), 2);
        assert!(is_vertex_cut(&g, VertexSet::from_vertices([1, 4])));
        assert!(!is_vertex_cut(&g, VertexSet::from_vertices([1, 2])));
    }
}
