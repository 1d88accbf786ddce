//! Longest paths inside induced subgraphs, and long paths between fixed endpoints.

use super::walk::Path;
use crate::graph::{Graph, VertexSet};

/// Result of listing all longest paths in `G \ forbidden`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPaths {
    /// Common length of the listed paths.
    pub length: usize,
    /// Each undirected path once, oriented so the first vertex is not larger
    /// than the last, sorted lexicographically.
    pub paths: Vec<Path>,
    /// True when the cap cut the listing short.
    pub truncated: bool,
}

struct PathSearch<'a> {
    g: &'a Graph,
    allowed: VertexSet,
    path: Vec<usize>,
    best: Vec<usize>,
}

impl PathSearch<'_> {
    fn dfs(&mut self, visited: VertexSet) {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
            if self.best.len() == self.allowed.len() {
                return;
            }
        }
        let end = *self.path.last().expect("non-empty");
        let open = self.allowed.difference(visited);
        let mut region = self.g.reach(end, open.union(VertexSet::singleton(end)));
        region.remove(end);
        if self.path.len() + region.len() <= self.best.len() {
            return;
        }
        for u in self.g.neighbors(end).intersection(open) {
            self.path.push(u);
            self.dfs(visited.union(VertexSet::singleton(u)));
            self.path.pop();
            if self.best.len() == self.allowed.len() {
                return;
            }
        }
    }
}

/// A maximum-length simple path in `G \ forbidden`; `None` when nothing is left.
pub fn longest_path_in(g: &Graph, forbidden: VertexSet) -> Option<Path> {
    let allowed = g.vertices().difference(forbidden);
    let mut search = PathSearch {
        g,
        allowed,
        path: Vec::new(),
        best: Vec::new(),
    };
    for s in allowed {
        search.path = vec![s];
        search.dfs(VertexSet::singleton(s));
        if search.best.len() == allowed.len() {
            break;
        }
    }
    if search.best.is_empty() {
        return None;
    }
    Some(Path::new(g, search.best).expect("search only follows edges"))
}

struct PathCollector<'a> {
    g: &'a Graph,
    allowed: VertexSet,
    length: usize,
    cap: usize,
    path: Vec<usize>,
    out: Vec<Vec<usize>>,
    truncated: bool,
}

impl PathCollector<'_> {
    fn dfs(&mut self, visited: VertexSet) {
        if self.truncated {
            return;
        }
        let end = *self.path.last().expect("non-empty");
        if self.path.len() == self.length + 1 {
            if self.path[0] <= end {
                if self.out.len() == self.cap {
                    self.truncated = true;
                    return;
                }
                self.out.push(self.path.clone());
            }
            return;
        }
        let open = self.allowed.difference(visited);
        let mut region = self.g.reach(end, open.union(VertexSet::singleton(end)));
        region.remove(end);
        if self.path.len() + region.len() < self.length + 1 {
            return;
        }
        for u in self.g.neighbors(end).intersection(open) {
            self.path.push(u);
            self.dfs(visited.union(VertexSet::singleton(u)));
            self.path.pop();
        }
    }
}

/// All longest paths of `G \ forbidden`, each undirected path once, at most
/// `cap` of them. `None` when nothing is left.
pub fn all_longest_paths_in(g: &Graph, forbidden: VertexSet, cap: usize) -> Option<LongestPaths> {
    let length = longest_path_in(g, forbidden)?.len();
    let allowed = g.vertices().difference(forbidden);
    let mut c = PathCollector {
        g,
        allowed,
        length,
        cap,
        path: Vec::new(),
        out: Vec::new(),
        truncated: false,
    };
    for s in allowed {
        c.path = vec![s];
        c.dfs(VertexSet::singleton(s));
        if c.truncated {
            break;
        }
    }
    let mut raw = c.out;
    raw.sort();
    let paths = raw
        .into_iter()
        .map(|p| Path::new(g, p).expect("search only follows edges"))
        .collect();
    Some(LongestPaths {
        length,
        paths,
        truncated: c.truncated,
    })
}

fn reaches_length(g: &Graph, path: &mut Vec<usize>, visited: VertexSet, target: usize, need: usize) -> bool {
    let end = *path.last().expect("non-empty");
    if end == target {
        return path.len() > need;
    }
    let open = g.vertices().difference(visited);
    let region = g.reach(end, open.union(VertexSet::singleton(end)));
    if !region.contains(target) || path.len() + region.len() - 1 <= need {
        return false;
    }
    for u in g.neighbors(end).intersection(open) {
        path.push(u);
        let found = reaches_length(g, path, visited.union(VertexSet::singleton(u)), target, need);
        path.pop();
        if found {
            return true;
        }
    }
    false
}

/// Is there a `u`–`v` path with at least `length` edges? `u` and `v` must differ.
pub fn has_path_of_length_at_least(g: &Graph, u: usize, v: usize, length: usize) -> bool {
    assert_ne!(u, v, "endpoints must differ");
    let mut path = vec![u];
    reaches_length(g, &mut path, VertexSet::singleton(u), v, length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle_graph, path_graph, petersen};
    use crate::invariants::circumference;

    #[test]
    fn cycle_minus_a_vertex() {
        let g = cycle_graph(5).unwrap();
        let p = longest_path_in(&g, VertexSet::singleton(0)).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn petersen_outside_a_nine_cycle() {
        let g = petersen();
        let c = circumference(&g).witness.unwrap();
        let p = longest_path_in(&g, c.vertex_set()).unwrap();
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn everything_forbidden() {
        let g = complete(4).unwrap();
        assert_eq!(longest_path_in(&g, g.vertices()), None);
        assert_eq!(all_longest_paths_in(&g, g.vertices(), 8), None);
    }

    #[test]
    fn listing_longest_paths() {
        let g = path_graph(4).unwrap();
        let all = all_longest_paths_in(&g, VertexSet::EMPTY, 10).unwrap();
        assert_eq!(all.length, 3);
        assert_eq!(all.paths.len(), 1);
        assert_eq!(all.paths[0].vertices(), &[0, 1, 2, 3]);

        // K4 has 4!/2 = 12 hamiltonian paths
        let k4 = complete(4).unwrap();
        let all = all_longest_paths_in(&k4, VertexSet::EMPTY, 100).unwrap();
        assert_eq!(all.paths.len(), 12);
        assert!(!all.truncated);
        let capped = all_longest_paths_in(&k4, VertexSet::EMPTY, 5).unwrap();
        assert_eq!(capped.paths.len(), 5);
        assert!(capped.truncated);

        let single = all_longest_paths_in(&Graph::empty(3).unwrap(), VertexSet::EMPTY, 10).unwrap();
        assert_eq!(single.length, 0);
        assert_eq!(single.paths.len(), 3);
    }

    #[test]
    fn path_length_queries() {
        let c6 = cycle_graph(6).unwrap();
        assert!(has_path_of_length_at_least(&c6, 0, 1, 5));
        assert!(!has_path_of_length_at_least(&c6, 0, 1, 6));
        assert!(has_path_of_length_at_least(&c6, 0, 3, 3));
        assert!(!has_path_of_length_at_least(&c6, 0, 3, 4));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!has_path_of_length_at_least(&split, 0, 3, 0));
    }
}
