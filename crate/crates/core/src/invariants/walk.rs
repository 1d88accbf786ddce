//! Validated cycles and paths.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("a path needs at least one vertex")]
    EmptyPath,
    #[error("vertex {0} is not in the graph")]
    OutOfRange(usize),
    #[error("vertex {0} appears twice")]
    Repeated(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

fn check_vertices(g: &Graph, verts: &[usize]) -> Result<VertexSet, WalkError> {
    let mut set = VertexSet::EMPTY;
    for &v in verts {
        if v >= g.n() {
            return Err(WalkError::OutOfRange(v));
        }
        if set.contains(v) {
            return Err(WalkError::Repeated(v));
        }
        set.insert(v);
    }
    for w in verts.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(WalkError::NotAdjacent(w[0], w[1]));
        }
    }
    Ok(set)
}

/// A simple cycle `v₁ v₂ … v_t v₁` with `t ≥ 3`, stored with a fixed orientation.
///
/// Successor and predecessor operators are index arithmetic modulo the length
/// on the stored orientation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedCycle {
    verts: Vec<usize>,
    set: VertexSet,
}

impl OrientedCycle {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, WalkError> {
        if verts.len() < 3 {
            return Err(WalkError::CycleTooShort(verts.len()));
        }
        let set = check_vertices(g, &verts)?;
        let (last, first) = (verts[verts.len() - 1], verts[0]);
        if !g.has_edge(last, first) {
            return Err(WalkError::NotAdjacent(last, first));
        }
        Ok(OrientedCycle { verts, set })
    }

    /// Number of edges, which equals the number of vertices.
    #[inline]
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.set
    }

    pub fn contains(&self, v: usize) -> bool {
        self.set.contains(v)
    }

    /// Vertex at position `i`, taken modulo the length.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.verts[i % self.verts.len()]
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        if !self.set.contains(v) {
            return None;
        }
        self.verts.iter().position(|&u| u == v)
    }

    /// Number of edges walked going forward from position `from` to position `to`.
    #[inline]
    pub fn forward_distance(&self, from: usize, to: usize) -> usize {
        let t = self.len();
        (to % t + t - from % t) % t
    }

    /// Vertices from position `from` forward to position `to`, both inclusive.
    pub fn forward_arc(&self, from: usize, to: usize) -> Vec<usize> {
        let d = self.forward_distance(from, to);
        (0..=d).map(|k| self.at(from + k)).collect()
    }

    /// Vertices from position `from` backward to position `to`, both inclusive.
    pub fn backward_arc(&self, from: usize, to: usize) -> Vec<usize> {
        let d = self.forward_distance(to, from);
        let t = self.len();
        (0..=d).map(|k| self.at(from + t * 2 - k)).collect()
    }

    pub fn reversed(&self) -> OrientedCycle {
        let mut verts = self.verts.clone();
        verts.reverse();
        OrientedCycle {
            verts,
            set: self.set,
        }
    }

    /// Starts at the smallest vertex and walks toward its smaller cycle neighbor.
    /// Two cycles with the same edge set have the same canonical form.
    pub fn canonical(&self) -> OrientedCycle {
        let t = self.len();
        let start = (0..t).min_by_key(|&i| self.verts[i]).expect("non-empty");
        let next = self.at(start + 1);
        let prev = self.at(start + t - 1);
        let verts = if next < prev {
            (0..t).map(|k| self.at(start + k)).collect()
        } else {
            (0..t).map(|k| self.at(start + t - k)).collect()
        };
        OrientedCycle {
            verts,
            set: self.set,
        }
    }
}

impl fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.verts)
    }
}

impl fmt::Display for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.verts.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A simple path; a single vertex is a path of length 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    verts: Vec<usize>,
    set: VertexSet,
}

impl Path {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, WalkError> {
        if verts.is_empty() {
            return Err(WalkError::EmptyPath);
        }
        let set = check_vertices(g, &verts)?;
        Ok(Path { verts, set })
    }

    /// Number of edges.
    #[inline]
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.set
    }

    pub fn start(&self) -> usize {
        self.verts[0]
    }

    pub fn end(&self) -> usize {
        self.verts[self.verts.len() - 1]
    }

    pub fn reversed(&self) -> Path {
        let mut verts = self.verts.clone();
        verts.reverse();
        Path {
            verts,
            set: self.set,
        }
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{:?}", self.verts)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.verts.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle_graph};

    #[test]
    fn cycle_validation() {
        let g = cycle_graph(5).unwrap();
        assert!(OrientedCycle::new(&g, vec![0, 1, 2, 3, 4]).is_ok());
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1]),
            Err(WalkError::CycleTooShort(2))
        );
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1, 2, 3]),
            Err(WalkError::NotAdjacent(3, 0))
        );
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1, 2, 1, 0]),
            Err(WalkError::Repeated(1))
        );
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1, 7]),
            Err(WalkError::OutOfRange(7))
        );
    }

    #[test]
    fn arcs_and_distances() {
        let g = cycle_graph(6).unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c.forward_arc(4, 1), vec![4, 5, 0, 1]);
        assert_eq!(c.backward_arc(1, 4), vec![1, 0, 5, 4]);
        assert_eq!(c.forward_distance(4, 1), 3);
        assert_eq!(c.forward_arc(2, 2), vec![2]);
    }

    #[test]
    fn canonical_rotation_and_reflection() {
        let g = complete(5).unwrap();
        let a = OrientedCycle::new(&g, vec![3, 1, 4, 0, 2]).unwrap();
        let b = a.reversed();
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(a.canonical().vertices(), &[0, 2, 3, 1, 4]);
    }

    #[test]
    fn path_validation() {
        let g = cycle_graph(5).unwrap();
        let p = Path::new(&g, vec![2]).unwrap();
        assert_eq!(p.len(), 0);
        assert_eq!(Path::new(&g, vec![]), Err(WalkError::EmptyPath));
        assert_eq!(Path::new(&g, vec![0, 2]), Err(WalkError::NotAdjacent(0, 2)));
        assert_eq!(Path::new(&g, vec![0, 1, 2]).unwrap().reversed().vertices(), &[2, 1, 0]);
    }
}
