//! Chord-driven rewirings of a cycle through the external path.
//!
//! Each template is applied to both orientations of the cycle and both
//! orientations of the path; every emitted move is a validated cycle.

use std::collections::HashSet;

use super::segments::SegmentDecomposition;
use super::{attempt, link, MoveKind, SurgeryConfig, SurgeryMove};
use crate::graph::{Graph, VertexSet};
use crate::invariants::OrientedCycle;

struct Ctx<'a> {
    g: &'a Graph,
    d: &'a SegmentDecomposition,
    t: usize,
    out: Vec<SurgeryMove>,
}

impl Ctx<'_> {
    fn pos_of(&self, v: usize) -> usize {
        self.d.cycle().position(v).expect("on the cycle")
    }

    fn at(&self, p: usize) -> usize {
        self.d.cycle().at(p)
    }

    fn succ(&self, p: usize) -> usize {
        (p + 1) % self.t
    }

    fn pred(&self, p: usize) -> usize {
        (p + self.t - 1) % self.t
    }

    fn fwd(&self, from: usize, to: usize) -> Vec<usize> {
        self.d.cycle().forward_arc(from, to)
    }

    fn bwd(&self, from: usize, to: usize) -> Vec<usize> {
        self.d.cycle().backward_arc(from, to)
    }

    fn adj(&self, p: usize, q: usize) -> bool {
        self.g.has_edge(self.at(p), self.at(q))
    }

    /// `w` lies on the forward arc from `from` to `to`, both inclusive.
    fn on_arc(&self, w: usize, from: usize, to: usize) -> bool {
        let c = self.d.cycle();
        c.forward_distance(from, w) <= c.forward_distance(from, to)
    }

    fn emit(&mut self, kind: MoveKind, parts: &[&[usize]]) {
        let seq: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        if let Some(m) = attempt(self.g, kind, seq, self.t) {
            self.out.push(m);
        }
    }

    fn link(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        link(self.g, self.d.path().vertices(), self.at(u), self.at(v))
    }

    fn claim3(&mut self) {
        let s = self.d.s();
        for a in 0..s {
            for b in 0..s {
                for f in 0..s {
                    if a == b || b == f || a == f {
                        continue;
                    }
                    let (pa, pb, pf) = (self.d.xi_pos(a), self.d.xi_pos(b), self.d.xi_pos(f));
                    // cyclic order a, b, f
                    let c = self.d.cycle();
                    if c.forward_distance(pa, pb) >= c.forward_distance(pa, pf) {
                        continue;
                    }
                    if !self.adj(self.pred(pa), self.succ(pb)) {
                        continue;
                    }
                    let head = [self.at(pf)];
                    let mid = self.bwd(self.pred(pf), self.succ(pb));
                    let tail = self.bwd(self.pred(pa), self.succ(pf));
                    // ξ_f x..y ξ_b ←C ξ_a ξ_f⁻ ←C ξ_b⁺ ξ_a⁻ ←C ξ_f⁺
                    if self.adj(self.pred(pf), pa) {
                        if let Some(route) = self.link(pf, pb) {
                            let arc = self.bwd(pb, pa);
                            self.emit(MoveKind::Claim3, &[&head, &route, &arc, &mid, &tail]);
                        }
                    }
                    // ξ_f x..y ξ_a →C ξ_b ξ_f⁻ ←C ξ_b⁺ ξ_a⁻ ←C ξ_f⁺
                    if self.adj(self.pred(pf), pb) {
                        if let Some(route) = self.link(pf, pa) {
                            let arc = self.fwd(pa, pb);
                            self.emit(MoveKind::Claim3, &[&head, &route, &arc, &mid, &tail]);
                        }
                    }
                }
            }
        }
    }

    fn claim4(&mut self) {
        let s = self.d.s();
        for a in 0..s {
            for b in 0..s {
                if a == b {
                    continue;
                }
                let (pa, pb) = (self.d.xi_pos(a), self.d.xi_pos(b));
                let Some(route) = self.link(pa, pb) else {
                    continue;
                };
                let head = [self.at(pa)];
                let pa_succ = self.succ(pa);
                let pb_pred = self.pred(pb);
                for pw in 0..self.t {
                    if !self.on_arc(pw, pb, self.pred(pa)) || !self.adj(pa_succ, pw) {
                        continue;
                    }
                    // ξ_a x..y ξ_b →C w⁻ ξ_b⁻ ←C ξ_a⁺ w →C ξ_a⁻
                    if self.adj(pb_pred, self.pred(pw)) {
                        let p1 = self.fwd(pb, self.pred(pw));
                        let p2 = self.bwd(pb_pred, pa_succ);
                        let p3 = self.fwd(pw, self.pred(pa));
                        self.emit(MoveKind::Claim4, &[&head, &route, &p1, &p2, &p3]);
                    }
                    // ξ_a x..y ξ_b →C w ξ_a⁺ →C ξ_b⁻ w⁺ →C ξ_a⁻
                    if self.adj(pb_pred, self.succ(pw)) {
                        let p1 = self.fwd(pb, pw);
                        let p2 = self.fwd(pa_succ, pb_pred);
                        let p3 = self.fwd(self.succ(pw), self.pred(pa));
                        self.emit(MoveKind::Claim4, &[&head, &route, &p1, &p2, &p3]);
                    }
                }
            }
        }
    }

    fn claim5(&mut self) {
        let s = self.d.s();
        for a in 0..s {
            for b in 0..s {
                if a == b {
                    continue;
                }
                let (pa, pb) = (self.d.xi_pos(a), self.d.xi_pos(b));
                let Some(route) = self.link(pa, pb) else {
                    continue;
                };
                let head = [self.at(pa)];
                let pa_succ = self.succ(pa);
                let pb_succ = self.succ(pb);
                for pw in 0..self.t {
                    if !self.adj(pa_succ, pw) {
                        continue;
                    }
                    // w on ξ_b⁺..ξ_a: ξ_a x..y ξ_b ←C ξ_a⁺ w ←C ξ_b⁺ w⁺ →C ξ_a⁻
                    if self.on_arc(pw, pb_succ, pa) && self.adj(pb_succ, self.succ(pw)) {
                        let p1 = self.bwd(pb, pa_succ);
                        let p2 = self.bwd(pw, pb_succ);
                        let p3 = self.fwd(self.succ(pw), self.pred(pa));
                        self.emit(MoveKind::Claim5, &[&head, &route, &p1, &p2, &p3]);
                    }
                    // w on ξ_a⁺..ξ_b: ξ_a x..y ξ_b ←C w ξ_a⁺ →C w⁻ ξ_b⁺ →C ξ_a⁻
                    if self.on_arc(pw, pa_succ, pb) && self.adj(pb_succ, self.pred(pw)) {
                        let p1 = self.bwd(pb, pw);
                        let p2 = self.fwd(pa_succ, self.pred(pw));
                        let p3 = self.fwd(pb_succ, self.pred(pa));
                        self.emit(MoveKind::Claim5, &[&head, &route, &p1, &p2, &p3]);
                    }
                }
            }
        }
    }

    /// Paths from `from` through vertices in `free` to interior vertices of
    /// segment `seg`, with at most `max_len` edges.
    fn detours(&self, from: usize, seg: usize, free: VertexSet, max_len: usize) -> Vec<Vec<usize>> {
        fn walk(
            ctx: &Ctx<'_>,
            seg: usize,
            free: VertexSet,
            max_len: usize,
            path: &mut Vec<usize>,
            visited: VertexSet,
            out: &mut Vec<Vec<usize>>,
        ) {
            if path.len() > max_len {
                return;
            }
            let end = *path.last().expect("non-empty");
            for u in ctx.g.neighbors(end) {
                if ctx.d.segment_of(u) == Some(seg) {
                    let mut p = path.clone();
                    p.push(u);
                    out.push(p);
                } else if free.contains(u) && !visited.contains(u) {
                    path.push(u);
                    walk(ctx, seg, free, max_len, path, visited.union(VertexSet::singleton(u)), out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut path = vec![from];
        walk(self, seg, free, max_len, &mut path, VertexSet::singleton(from), &mut out);
        out
    }

    fn claim17(&mut self, max_len: usize) {
        let s = self.d.s();
        let free = self.d.outside(self.g);
        let p_len = self.d.path().len();
        for a in 0..s {
            let (pa, pa1) = (self.d.xi_pos(a), self.d.xi_pos(a + 1));
            let seg_len = self.d.segment_len(a);
            let Some(route) = self.link(pa, pa1) else {
                continue;
            };
            let (x1, x2) = (route[0], route[p_len]);
            let closed = self.g.has_edge(x1, x2);
            for (k, &y) in route.iter().enumerate() {
                let threshold = if closed && k != 0 && k != p_len { p_len + 6 } else { p_len + 4 };
                if seg_len >= threshold {
                    continue;
                }
                for q in self.detours(y, a, free, max_len) {
                    let z = q[q.len() - 1];
                    let pz = self.pos_of(z);
                    let q_rev: Vec<usize> = q.iter().rev().copied().collect();
                    let xi_a = [self.at(pa)];
                    // ξ_a x₁ →P y →Q z →C ξ_a
                    let close = self.fwd(pz, pa);
                    let close = &close[1..close.len() - 1];
                    self.emit(MoveKind::Claim17, &[&xi_a, &route[..k], &q, close]);
                    // ξ_{a+1} →C z ←Q y →P x₂
                    let open = self.fwd(pa1, pz);
                    self.emit(MoveKind::Claim17, &[&open, &q_rev[1..], &route[k + 1..]]);
                    if closed && k != 0 && k != p_len {
                        // ξ_a x₁ x₂ ←P y →Q z →C ξ_a
                        let back: Vec<usize> = route[k + 1..].iter().rev().copied().collect();
                        self.emit(MoveKind::Claim17, &[&xi_a, &[x1], &back, &q, close]);
                        // ξ_{a+1} →C z ←Q y ←P x₁ x₂
                        let back: Vec<usize> = route[..k].iter().rev().copied().collect();
                        self.emit(MoveKind::Claim17, &[&open, &q_rev[1..], &back, &[x2]]);
                    }
                }
            }
        }
    }
}

/// Every rewiring produced by the chord templates for this decomposition.
/// Empty when there are fewer than two attachments.
pub fn claim_moves(g: &Graph, d: &SegmentDecomposition, config: &SurgeryConfig) -> Vec<SurgeryMove> {
    if d.s() < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let flipped = d.cycle().reversed();
    let orientations: [(OrientedCycle, bool); 2] = [(d.cycle().clone(), false), (flipped, true)];
    for (cycle, is_flipped) in orientations {
        let dd = if is_flipped {
            match SegmentDecomposition::new(g, &cycle, d.path()) {
                Ok(dd) => dd,
                Err(_) => continue,
            }
        } else {
            d.clone()
        };
        let mut ctx = Ctx {
            g,
            d: &dd,
            t: cycle.len(),
            out: Vec::new(),
        };
        ctx.claim3();
        ctx.claim4();
        ctx.claim5();
        ctx.claim17(config.max_intermediate_len);
        out.append(&mut ctx.out);
    }
    let mut seen = HashSet::new();
    out.retain(|m| seen.insert((m.kind, m.result.canonical())));
    out
}
