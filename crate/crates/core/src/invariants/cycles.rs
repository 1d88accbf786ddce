//! Longest cycles: circumference, enumeration of all longest cycles, hamiltonicity.

use thiserror::Error;

use super::walk::OrientedCycle;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleSearchError {
    #[error("graph is acyclic")]
    Acyclic,
}

/// Length of a longest cycle together with a witness.
///
/// Acyclic graphs follow the convention that a vertex is a cycle of length 1
/// and an edge a cycle of length 2: `length` is 2 for a forest with an edge,
/// 1 for an edgeless graph with a vertex, 0 for the empty graph, and `witness`
/// is `None` in all three cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circumference {
    pub length: usize,
    pub witness: Option<OrientedCycle>,
}

/// Relabeling that puts vertices in (degree, id) order.
struct Ranked {
    h: Graph,
    order: Vec<usize>,
}

impl Ranked {
    fn new(g: &Graph) -> Self {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (g.degree(v), v));
        let mut rank = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        Ranked {
            h: g.permuted(&rank),
            order,
        }
    }
}

struct LongestSearch<'a> {
    g: &'a Graph,
    root: usize,
    allowed: VertexSet,
    best: Vec<usize>,
    path: Vec<usize>,
    target: usize,
}

impl LongestSearch<'_> {
    fn dfs(&mut self, visited: VertexSet) {
        let end = *self.path.last().expect("path starts at root");
        if self.path.len() >= 3 && self.path.len() > self.best.len() && self.g.has_edge(end, self.root)
        {
            self.best = self.path.clone();
            if self.best.len() == self.target {
                return;
            }
        }
        let open = self.allowed.difference(visited);
        let mut region = self.g.reach(end, open.union(VertexSet::singleton(end)));
        region.remove(end);
        if self.path.len() + region.len() <= self.best.len() {
            return;
        }
        // the cycle has to come back to the root
        let closers = region.union(VertexSet::singleton(end));
        if closers.intersection(self.g.neighbors(self.root)).is_empty() {
            return;
        }
        for u in self.g.neighbors(end).intersection(open) {
            self.path.push(u);
            let mut vis = visited;
            vis.insert(u);
            self.dfs(vis);
            self.path.pop();
            if self.best.len() == self.target {
                return;
            }
        }
    }
}

/// Exact circumference by branch and bound.
///
/// Roots are taken in (degree, id) order; after a root is exhausted it is
/// removed, so each later search only looks for cycles avoiding all earlier
/// roots. A branch is cut when the path plus everything still reachable from
/// its end cannot beat the incumbent, or when nothing reachable is adjacent to
/// the root.
pub fn circumference(g: &Graph) -> Circumference {
    let ranked = Ranked::new(g);
    let h = &ranked.h;
    let n = g.n();
    let mut allowed = h.vertices();
    let mut best: Vec<usize> = Vec::new();
    for root in 0..n {
        if allowed.len() <= best.len().max(2) || best.len() == n {
            break;
        }
        let mut search = LongestSearch {
            g: h,
            root,
            allowed,
            best: std::mem::take(&mut best),
            path: vec![root],
            target: allowed.len(),
        };
        search.dfs(VertexSet::singleton(root));
        best = search.best;
        allowed.remove(root);
    }
    if best.is_empty() {
        let length = if g.edge_count() > 0 { 2 } else { n.min(1) };
        return Circumference {
            length,
            witness: None,
        };
    }
    let verts: Vec<usize> = best.iter().map(|&v| ranked.order[v]).collect();
    let witness = OrientedCycle::new(g, verts).expect("search only follows edges");
    Circumference {
        length: witness.len(),
        witness: Some(witness),
    }
}

/// True iff the graph has a cycle through all `n ≥ 3` vertices.
pub fn is_hamiltonian(g: &Graph) -> bool {
    g.n() >= 3 && circumference(g).length == g.n()
}

struct CycleCollector<'a> {
    g: &'a Graph,
    root: usize,
    length: usize,
    path: Vec<usize>,
    out: Vec<OrientedCycle>,
}

impl CycleCollector<'_> {
    fn dfs(&mut self, visited: VertexSet, allowed: VertexSet) {
        let end = *self.path.last().expect("path starts at root");
        if self.path.len() == self.length {
            if self.g.has_edge(end, self.root) && self.path[1] < end {
                let c = OrientedCycle::new(self.g, self.path.clone()).expect("edges checked");
                self.out.push(c);
            }
            return;
        }
        let open = allowed.difference(visited);
        let mut region = self.g.reach(end, open.union(VertexSet::singleton(end)));
        region.remove(end);
        if self.path.len() + region.len() < self.length {
            return;
        }
        for u in self.g.neighbors(end).intersection(open) {
            self.path.push(u);
            let mut vis = visited;
            vis.insert(u);
            self.dfs(vis, allowed);
            self.path.pop();
        }
    }
}

/// Every simple cycle of length exactly `length` in canonical form, sorted.
pub fn cycles_of_length(g: &Graph, length: usize) -> Vec<OrientedCycle> {
    let mut out = Vec::new();
    if length < 3 {
        return out;
    }
    for root in 0..g.n() {
        // cycles whose smallest vertex is `root`
        let allowed = g.vertices().difference(VertexSet::full(root));
        if allowed.len() < length {
            break;
        }
        let mut c = CycleCollector {
            g,
            root,
            length,
            path: vec![root],
            out: Vec::new(),
        };
        c.dfs(VertexSet::singleton(root), allowed);
        out.append(&mut c.out);
    }
    out.sort();
    out
}

/// Every longest cycle, each once, in canonical form.
pub fn all_longest_cycles(g: &Graph) -> Result<Vec<OrientedCycle>, CycleSearchError> {
    let c = circumference(g);
    if c.witness.is_none() {
        return Err(CycleSearchError::Acyclic);
    }
    Ok(cycles_of_length(g, c.length))
}
