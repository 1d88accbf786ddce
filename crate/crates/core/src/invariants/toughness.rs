//! Exact toughness.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::graph::{Graph, VertexSet};

/// τ(G) as an exact value: infinite for complete graphs, otherwise a reduced
/// fraction with the cut that attains it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Toughness {
    Infinite,
    Finite {
        value: Ratio<u64>,
        witness: VertexSet,
    },
}

impl Toughness {
    pub fn value(&self) -> Option<Ratio<u64>> {
        match *self {
            Toughness::Infinite => None,
            Toughness::Finite { value, .. } => Some(value),
        }
    }

    pub fn witness(&self) -> Option<VertexSet> {
        match *self {
            Toughness::Infinite => None,
            Toughness::Finite { witness, .. } => Some(witness),
        }
    }

    /// `(numerator, denominator)`, with infinity written as `(1, 0)`.
    pub fn parts(&self) -> (u64, u64) {
        match self.value() {
            None => (1, 0),
            Some(r) => (*r.numer(), *r.denom()),
        }
    }

    /// Compares against the rational `num / den`.
    pub fn cmp_ratio(&self, num: u64, den: u64) -> Ordering {
        match self.value() {
            None => Ordering::Greater,
            Some(r) => r.cmp(&Ratio::new(num, den)),
        }
    }

    /// τ ≥ 1.
    pub fn is_one_tough(&self) -> bool {
        self.cmp_ratio(1, 1) != Ordering::Less
    }

    /// τ > 1.
    pub fn exceeds_one(&self) -> bool {
        self.cmp_ratio(1, 1) == Ordering::Greater
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Infinite => write!(f, "inf"),
            Toughness::Finite { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Each vertex of `cut` has neighbors in at least two components of `G \ cut`.
fn is_tight(g: &Graph, cut: VertexSet, labels: &[Option<usize>]) -> bool {
    cut.iter().all(|v| {
        let mut first = None;
        for u in g.neighbors(v) {
            if let Some(c) = labels[u] {
                match first {
                    None => first = Some(c),
                    Some(f) if f != c => return true,
                    _ => {}
                }
            }
        }
        false
    })
}

/// Next larger integer with the same popcount (Gosper's hack).
fn next_combination(x: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// τ(G) = min |S| / s(G∖S) over all S with s(G∖S) ≥ 2.
///
/// Cuts are visited by increasing size. A cut of size k leaves at most n − k
/// components, so once k / (n − k) reaches the incumbent no larger cut can
/// improve it. Only tight cuts are scored: if some v ∈ S touches at most one
/// component, S − v has a strictly smaller ratio, so every optimal cut is
/// tight. Disconnected graphs have toughness 0 with the empty cut as witness.
pub fn toughness(g: &Graph) -> Toughness {
    let n = g.n();
    if g.is_complete() {
        return Toughness::Infinite;
    }
    if !g.is_connected() {
        return Toughness::Finite {
            value: Ratio::from_integer(0),
            witness: VertexSet::EMPTY,
        };
    }
    let mut best: Option<(Ratio<u64>, VertexSet)> = None;
    // a non-complete connected graph has a cut of size ≤ n − 2
    for k in 1..=n - 2 {
        let floor = Ratio::new(k as u64, (n - k) as u64);
        if best.is_some_and(|(b, _)| floor >= b) {
            break;
        }
        let mut mask = (1u64 << k) - 1;
        let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        loop {
            let cut = VertexSet(mask);
            let (count, labels) = g.components(cut);
            if count >= 2 && is_tight(g, cut, &labels) {
                let r = Ratio::new(k as u64, count as u64);
                if best.is_none_or(|(b, _)| r < b) {
                    best = Some((r, cut));
                }
            }
            match next_combination(mask) {
                Some(next) if next <= limit => mask = next,
                _ => break,
            }
        }
    }
    let (value, witness) = best.expect("non-complete connected graph has a cut");
    Toughness::Finite { value, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle_graph, path_graph, petersen};

    fn frac(a: u64, b: u64) -> Option<Ratio<u64>> {
        Some(Ratio::new(a, b))
    }

    #[test]
    fn named_values() {
        assert_eq!(toughness(&petersen()).value(), frac(4, 3));
        for n in 4..10 {
            assert_eq!(toughness(&cycle_graph(n).unwrap()).value(), frac(1, 1));
        }
        assert_eq!(toughness(&complete(5).unwrap()), Toughness::Infinite);
        assert_eq!(toughness(&complete(1).unwrap()), Toughness::Infinite);
        assert_eq!(toughness(&complete_bipartite(2, 3).unwrap()).value(), frac(2, 3));
        assert_eq!(toughness(&complete_bipartite(1, 3).unwrap()).value(), frac(1, 3));
        assert_eq!(toughness(&complete_bipartite(3, 3).unwrap()).value(), frac(1, 1));
        assert_eq!(toughness(&path_graph(5).unwrap()).value(), frac(1, 2));
    }

    #[test]
    fn witness_attains_value() {
        let g = petersen();
        let t = toughness(&g);
        let w = t.witness().unwrap();
        let s = g.component_count(w);
        assert!(s >= 2);
        assert_eq!(Ratio::new(w.len() as u64, s as u64), t.value().unwrap());
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            toughness(&g),
            Toughness::Finite {
                value: Ratio::from_integer(0),
                witness: VertexSet::EMPTY
            }
        );
    }

    #[test]
    fn comparisons_and_parts() {
        let p = toughness(&petersen());
        assert!(p.exceeds_one());
        assert_eq!(p.parts(), (4, 3));
        assert_eq!(p.to_string(), "4/3");
        let c = toughness(&cycle_graph(6).unwrap());
        assert!(c.is_one_tough() && !c.exceeds_one());
        assert_eq!(c.to_string(), "1");
        assert!(Toughness::Infinite.exceeds_one());
        assert_eq!(Toughness::Infinite.parts(), (1, 0));
        assert_eq!(Toughness::Infinite.to_string(), "inf");
    }

    #[test]
    fn gosper_walks_all_subsets_of_a_size() {
        let mut x = 0b111u64;
        let mut count = 1;
        while let Some(next) = next_combination(x) {
            if next >= 1 << 6 {
                break;
            }
            x = next;
            count += 1;
        }
        assert_eq!(count, 20);
    }
}
