//! Elementary segments of a cycle cut out by the attachments of an external
//! path, and the intermediate paths that join two segment interiors.

use std::collections::BTreeMap;

use super::SurgeryError;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{OrientedCycle, Path};

/// A cycle `C`, a path `P = x..y` disjoint from it, and the segments of `C`
/// between consecutive members of `N_C(x) ∪ N_C(y)`.
///
/// Attachments are kept as positions on the stored orientation of `C`, in
/// increasing order, so the first attachment is the one with the least
/// position. Segment `i` runs from attachment `i` forward to attachment
/// `i + 1` (indices modulo `s`); with a single attachment it is all of `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDecomposition {
    cycle: OrientedCycle,
    path: Path,
    attach: Vec<usize>,
    /// Segment whose interior holds each vertex, indexed by vertex.
    owner: Vec<Option<usize>>,
}

impl SegmentDecomposition {
    pub fn new(g: &Graph, cycle: &OrientedCycle, path: &Path) -> Result<Self, SurgeryError> {
        if !cycle.vertex_set().intersection(path.vertex_set()).is_empty() {
            return Err(SurgeryError::PathTouchesCycle);
        }
        let on_cycle = cycle.vertex_set();
        let x_side = g.neighbors(path.start()).intersection(on_cycle);
        let y_side = g.neighbors(path.end()).intersection(on_cycle);
        let xs = x_side.union(y_side);
        if xs.is_empty() {
            return Err(SurgeryError::NoAttachments);
        }
        let attach: Vec<usize> = (0..cycle.len()).filter(|&i| xs.contains(cycle.at(i))).collect();
        let mut d = SegmentDecomposition {
            cycle: cycle.clone(),
            path: path.clone(),
            attach,
            owner: vec![None; g.n()],
        };
        for i in 0..d.s() {
            for v in d.interior(i) {
                d.owner[v] = Some(i);
            }
        }
        Ok(d)
    }

    pub fn cycle(&self) -> &OrientedCycle {
        &self.cycle
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Number of attachment vertices (and of segments).
    pub fn s(&self) -> usize {
        self.attach.len()
    }

    /// Position on the cycle of attachment `i` (modulo `s`).
    pub fn xi_pos(&self, i: usize) -> usize {
        self.attach[i % self.s()]
    }

    /// Attachment vertex `i` (modulo `s`).
    pub fn xi(&self, i: usize) -> usize {
        self.cycle.at(self.xi_pos(i))
    }

    pub fn attachments(&self) -> VertexSet {
        self.attach.iter().map(|&p| self.cycle.at(p)).collect()
    }

    /// `|I_i|`, the number of cycle edges in segment `i`.
    pub fn segment_len(&self, i: usize) -> usize {
        if self.s() == 1 {
            self.cycle.len()
        } else {
            self.cycle.forward_distance(self.xi_pos(i), self.xi_pos(i + 1))
        }
    }

    /// Vertices of segment `i`, both attachments included.
    pub fn segment(&self, i: usize) -> Vec<usize> {
        let start = self.xi_pos(i);
        (0..=self.segment_len(i)).map(|k| self.cycle.at(start + k)).collect()
    }

    /// Interior of segment `i`: the segment without its two attachments.
    pub fn interior(&self, i: usize) -> Vec<usize> {
        let start = self.xi_pos(i);
        (1..self.segment_len(i)).map(|k| self.cycle.at(start + k)).collect()
    }

    /// Index of the segment whose interior contains `v`.
    pub fn segment_of(&self, v: usize) -> Option<usize> {
        self.owner.get(v).copied().flatten()
    }

    /// Vertices neither on the cycle nor on the path.
    pub fn outside(&self, g: &Graph) -> VertexSet {
        g.vertices()
            .difference(self.cycle.vertex_set())
            .difference(self.path.vertex_set())
    }
}

/// A path `z..w` with `z` interior to segment `a`, `w` interior to a
/// different segment `b`, and every other vertex off both the cycle and the
/// external path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntermediatePath {
    a: usize,
    b: usize,
    verts: Vec<usize>,
}

impl IntermediatePath {
    /// Validates `verts` as an intermediate path and works out its segments.
    pub fn new(g: &Graph, d: &SegmentDecomposition, verts: Vec<usize>) -> Result<Self, SurgeryError> {
        let bad = |why: &str| SurgeryError::NotIntermediate(verts.clone(), why.to_string());
        let path = Path::new(g, verts.clone()).map_err(|e| bad(&e.to_string()))?;
        if path.is_empty() {
            return Err(bad("needs at least one edge"));
        }
        let a = d.segment_of(path.start()).ok_or_else(|| bad("start is not interior to a segment"))?;
        let b = d.segment_of(path.end()).ok_or_else(|| bad("end is not interior to a segment"))?;
        if a == b {
            return Err(bad("both ends lie in the same segment"));
        }
        let outside = d.outside(g);
        let inner = &verts[1..verts.len() - 1];
        if !inner.iter().all(|&v| outside.contains(v)) {
            return Err(bad("an internal vertex meets the cycle or the path"));
        }
        Ok(IntermediatePath { a, b, verts })
    }

    /// Segment holding the first vertex.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Segment holding the last vertex.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn z(&self) -> usize {
        self.verts[0]
    }

    pub fn w(&self) -> usize {
        self.verts[self.verts.len() - 1]
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges; 1 for an intermediate edge.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_edge(&self) -> bool {
        self.verts.len() == 2
    }

    pub fn reversed(&self) -> IntermediatePath {
        let mut verts = self.verts.clone();
        verts.reverse();
        IntermediatePath {
            a: self.b,
            b: self.a,
            verts,
        }
    }
}

/// Intermediate paths grouped by segment pair `(a, b)` with `a < b`; each
/// path starts in segment `a`. Pairs without paths are absent.
pub type Upsilon = BTreeMap<(usize, usize), Vec<IntermediatePath>>;

/// Paths in `Υ(I_a, I_b)` for any order of `a` and `b`, oriented from `a`.
pub fn upsilon_between(u: &Upsilon, a: usize, b: usize) -> Vec<IntermediatePath> {
    if a < b {
        u.get(&(a, b)).cloned().unwrap_or_default()
    } else {
        u.get(&(b, a))
            .map(|ps| ps.iter().map(IntermediatePath::reversed).collect())
            .unwrap_or_default()
    }
}

struct Walker<'a> {
    g: &'a Graph,
    d: &'a SegmentDecomposition,
    outside: VertexSet,
    max_len: usize,
    from: usize,
    path: Vec<usize>,
    out: &'a mut Upsilon,
}

impl Walker<'_> {
    fn extend(&mut self, visited: VertexSet) {
        let end = *self.path.last().expect("non-empty");
        let edges_so_far = self.path.len() - 1;
        if edges_so_far + 1 > self.max_len {
            return;
        }
        for u in self.g.neighbors(end) {
            if let Some(b) = self.d.segment_of(u) {
                if b > self.from {
                    let mut verts = self.path.clone();
                    verts.push(u);
                    self.out.entry((self.from, b)).or_default().push(IntermediatePath {
                        a: self.from,
                        b,
                        verts,
                    });
                }
            } else if self.outside.contains(u) && !visited.contains(u) {
                self.path.push(u);
                self.extend(visited.union(VertexSet::singleton(u)));
                self.path.pop();
            }
        }
    }
}

/// Every intermediate path with at most `max_len` edges, grouped by segment pair.
pub fn enumerate_intermediate_paths(g: &Graph, d: &SegmentDecomposition, max_len: usize) -> Upsilon {
    let mut out = Upsilon::new();
    let outside = d.outside(g);
    for a in 0..d.s() {
        for z in d.interior(a) {
            let mut walker = Walker {
                g,
                d,
                outside,
                max_len,
                from: a,
                path: vec![z],
                out: &mut out,
            };
            walker.extend(VertexSet::singleton(z));
        }
    }
    out
}
