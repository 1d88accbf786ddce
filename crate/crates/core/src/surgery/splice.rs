//! Splicing an intermediate path and the external path into the cycle.

use super::segments::{IntermediatePath, SegmentDecomposition};
use super::{MoveKind, SurgeryError, SurgeryMove};
use crate::graph::Graph;
use crate::invariants::OrientedCycle;

/// Length bookkeeping for a splice: the new cycle has
/// `cycle_len - dropped.0 - dropped.1 + l_len + p_len + 2` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpliceAccounting {
    pub cycle_len: usize,
    /// Cycle edges removed on the two sides of the intermediate path.
    pub dropped: (usize, usize),
    pub l_len: usize,
    pub p_len: usize,
}

impl SpliceAccounting {
    pub fn predicted_len(&self) -> usize {
        self.cycle_len + self.l_len + self.p_len + 2 - self.dropped.0 - self.dropped.1
    }
}

/// Best cycle obtained by routing through the intermediate path `l` (from
/// segment `a` to segment `b`) and the external path.
///
/// Four rewirings are tried. Keeping the arcs `ξ_b..z` and `w..ξ_a` needs
/// the path ends adjacent to `ξ_a` and `ξ_b`; keeping `ξ_{b+1}..z` and
/// `ξ_{a+1}..w` needs them adjacent to `ξ_{a+1}` and `ξ_{b+1}`. Each is tried
/// with the path in both directions. `Ok(None)` when no rewiring closes.
pub fn splice_intermediate(
    g: &Graph,
    d: &SegmentDecomposition,
    l: &IntermediatePath,
    a: usize,
    b: usize,
) -> Result<Option<SurgeryMove>, SurgeryError> {
    if a % d.s() == b % d.s() {
        return Err(SurgeryError::SameSegment(a));
    }
    for (vertex, segment) in [(l.z(), a), (l.w(), b)] {
        if d.segment_of(vertex) != Some(segment % d.s()) {
            return Err(SurgeryError::NotInSegment { vertex, segment });
        }
    }
    let c = d.cycle();
    let t = c.len();
    let lv = l.vertices();
    let p = d.path().vertices();
    let pos = |v: usize| c.position(v).expect("on the cycle");
    let (pz, pw) = (pos(l.z()), pos(l.w()));
    let (pa, pa1, pb, pb1) = (d.xi_pos(a), d.xi_pos(a + 1), d.xi_pos(b), d.xi_pos(b + 1));

    let mut best: Option<SurgeryMove> = None;
    let mut consider = |seq: Vec<usize>, dropped: (usize, usize)| {
        if let Ok(cycle) = OrientedCycle::new(g, seq) {
            if best.as_ref().is_none_or(|m| cycle.len() > m.result.len()) {
                let mut m = SurgeryMove::new(MoveKind::Splice, cycle, t);
                m.accounting = Some(SpliceAccounting {
                    cycle_len: t,
                    dropped,
                    l_len: l.len(),
                    p_len: d.path().len(),
                });
                best = Some(m);
            }
        }
    };

    let forward: Vec<usize> = p.to_vec();
    let backward: Vec<usize> = p.iter().rev().copied().collect();
    for route in [&forward, &backward] {
        let (x, y) = (route[0], route[route.len() - 1]);

        // ξ_a x..y ξ_b ←C z →L w →C ξ_a
        if g.has_edge(x, d.xi(a)) && g.has_edge(y, d.xi(b)) {
            let mut seq = vec![d.xi(a)];
            seq.extend_from_slice(route);
            seq.extend(c.backward_arc(pb, pz));
            seq.extend_from_slice(&lv[1..]);
            let tail = c.forward_arc(pw, pa);
            seq.extend_from_slice(&tail[1..tail.len() - 1]);
            consider(seq, (c.forward_distance(pa, pz), c.forward_distance(pb, pw)));
        }

        // ξ_{a+1} x..y ξ_{b+1} →C z →L w ←C ξ_{a+1}
        if g.has_edge(x, d.xi(a + 1)) && g.has_edge(y, d.xi(b + 1)) {
            let mut seq = vec![d.xi(a + 1)];
            seq.extend_from_slice(route);
            seq.extend(c.forward_arc(pb1, pz));
            seq.extend_from_slice(&lv[1..]);
            let tail = c.backward_arc(pw, pa1);
            seq.extend_from_slice(&tail[1..tail.len() - 1]);
            consider(seq, (c.forward_distance(pz, pa1), c.forward_distance(pw, pb1)));
        }
    }
    Ok(best)
}
