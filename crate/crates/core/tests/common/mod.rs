//! Brute-force reference implementations and corpus access shared by the
//! integration tests. Nothing here prunes; each oracle looks at every
//! candidate it is defined over.

#![allow(dead_code)]

use std::path::PathBuf;

use num_rational::Ratio;
use toughcycle::{parse_graph6, Graph};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}

/// Raw lines of `connected_n{n}.g6`.
pub fn corpus_lines(n: usize) -> Vec<String> {
    let text = std::fs::read_to_string(data_path(&format!("connected_n{n}.g6"))).expect("corpus file");
    text.lines().filter(|l| !l.is_empty()).map(str::to_string).collect()
}

pub fn corpus(n: usize) -> Vec<Graph> {
    corpus_lines(n).iter().map(|l| parse_graph6(l).expect("corpus line parses")).collect()
}

/// All connected graphs with 1 ≤ n ≤ `max_n`.
pub fn corpus_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(corpus).collect()
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v)
}

/// Components of the subgraph on the vertices with `keep[v]`, by plain
/// flood fill over `has_edge`.
pub fn count_components(g: &Graph, keep: &[bool]) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !keep[s] || seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if keep[v] && !seen[v] && adjacent(g, u, v) {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

fn keep_mask(n: usize, removed: u64) -> Vec<bool> {
    (0..n).map(|v| removed >> v & 1 == 0).collect()
}

/// min |S| / c(G − S) over every subset S leaving at least two components;
/// `None` when no subset does (complete graphs).
pub fn brute_toughness(g: &Graph) -> Option<Ratio<u64>> {
    let n = g.n();
    let mut best: Option<Ratio<u64>> = None;
    for s in 0u64..(1u64 << n) {
        let c = count_components(g, &keep_mask(n, s));
        if c >= 2 {
            let r = Ratio::new(s.count_ones() as u64, c as u64);
            if best.is_none_or(|b| r < b) {
                best = Some(r);
            }
        }
    }
    best
}

/// Smallest |S| such that G − S is disconnected or has one vertex.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    (0u64..(1u64 << n))
        .filter(|&s| {
            let left = n - s.count_ones() as usize;
            left <= 1 || count_components(g, &keep_mask(n, s)) >= 2
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Lengths of all simple cycles of length ≥ 3, each undirected cycle once.
/// Every path starting at its smallest vertex is extended; a cycle is
/// recorded when the path can close and is counted in both directions, so
/// the tally is halved at the end.
pub fn brute_cycle_lengths(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut tally = vec![0usize; n + 1];
    fn walk(g: &Graph, root: usize, path: &mut Vec<usize>, on: &mut Vec<bool>, tally: &mut [usize]) {
        let end = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(end, root) {
            tally[path.len()] += 1;
        }
        for v in root + 1..g.n() {
            if !on[v] && g.has_edge(end, v) {
                on[v] = true;
                path.push(v);
                walk(g, root, path, on, tally);
                path.pop();
                on[v] = false;
            }
        }
    }
    for root in 0..n {
        let mut on = vec![false; n];
        on[root] = true;
        walk(g, root, &mut vec![root], &mut on, &mut tally);
    }
    let mut out = Vec::new();
    for (len, &count) in tally.iter().enumerate() {
        assert!(count % 2 == 0, "each cycle is found once per direction");
        out.extend(std::iter::repeat_n(len, count / 2));
    }
    out
}

/// (circumference, number of longest cycles) under the acyclic convention
/// c = 2 with an edge, 1 with a vertex, 0 when empty.
pub fn brute_circumference(g: &Graph) -> (usize, usize) {
    let lengths = brute_cycle_lengths(g);
    match lengths.iter().max() {
        Some(&c) => (c, lengths.iter().filter(|&&l| l == c).count()),
        None if g.edge_count() > 0 => (2, 0),
        None => (g.n().min(1), 0),
    }
}

/// Is `seq` a simple cycle of `g` (length ≥ 3, consecutive vertices adjacent)?
pub fn is_simple_cycle(g: &Graph, seq: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in seq {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    seq.len() >= 3 && (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]))
}
