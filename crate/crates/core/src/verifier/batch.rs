//! Checking many graphs at once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, BufRead};
use std::time::{Duration, Instant};

use log::info;
use rayon::prelude::*;

use super::profile::GraphProfile;
use super::{Status, TheoremId, Verdict, VerifyLimits};
use crate::graph6::parse_graph6;

/// Field order of [`Verdict::record`] lines.
pub const RECORD_FIELDS: [&str; 9] = ["graph6", "theorem", "status", "n", "delta", "kappa", "tau_num", "tau_den", "c"];

const NEAR_MISSES_SHOWN: usize = 10;

/// How many verdicts of each status one theorem received.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StatusCounts([usize; 5]);

impl StatusCounts {
    pub fn get(&self, s: Status) -> usize {
        self.0[s.index()]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    fn add(&mut self, s: Status) {
        self.0[s.index()] += 1;
    }
}

/// A line that is not a valid graph6 word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFailure {
    /// 1-based line number.
    pub line: usize,
    /// Byte offset within the line.
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub descriptor: String,
    pub theorems: Vec<TheoremId>,
    /// Graphs successfully parsed and checked.
    pub graphs: usize,
    pub counts: BTreeMap<TheoremId, StatusCounts>,
    /// Every verdict, grouped by graph in input order, theorems in selection order.
    pub verdicts: Vec<Verdict>,
    pub parse_failures: Vec<ParseFailure>,
    /// graph6 of non-hamiltonian graphs with τ = 1 and c = 2δ + 4.
    pub near_misses: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.status == Status::Counterexample)
    }

    pub fn count(&self, t: TheoremId, s: Status) -> usize {
        self.counts.get(&t).map_or(0, |c| c.get(s))
    }

    pub fn has_counterexample(&self) -> bool {
        self.counterexamples().next().is_some()
    }

    /// One record line per verdict, in input order.
    pub fn records(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            out.push_str(&v.record());
            out.push('\n');
        }
        out
    }

    /// Human-readable summary table. Timing is left out so the text is
    /// reproducible.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "corpus: {} ({} graphs)", self.descriptor, self.graphs);
        let _ = write!(out, "{:<8}", "theorem");
        for s in Status::ALL {
            let _ = write!(out, " {:>19}", s.name());
        }
        out.push('\n');
        for t in &self.theorems {
            let _ = write!(out, "{:<8}", t.code());
            for s in Status::ALL {
                let _ = write!(out, " {:>19}", self.count(*t, s));
            }
            out.push('\n');
        }
        for v in self.counterexamples() {
            let e = &v.evidence;
            let _ = writeln!(
                out,
                "counterexample {} {}: {}",
                v.theorem,
                e.graph6,
                e.detail.as_deref().unwrap_or("")
            );
        }
        for f in &self.parse_failures {
            let _ = writeln!(out, "line {}: byte {}: {}", f.line, f.offset, f.message);
        }
        if !self.near_misses.is_empty() {
            let shown: Vec<&str> = self.near_misses.iter().take(NEAR_MISSES_SHOWN).map(String::as_str).collect();
            let more = self.near_misses.len() - shown.len();
            let _ = write!(
                out,
                "near misses (τ = 1, c = 2δ + 4 < n): {} {}",
                self.near_misses.len(),
                shown.join(" ")
            );
            if more > 0 {
                let _ = write!(out, " (+{more} more)");
            }
            out.push('\n');
        }
        out
    }
}

enum LineOutcome {
    Checked { verdicts: Vec<Verdict>, near_miss: bool },
    Failed(ParseFailure),
}

fn check_line(line_no: usize, text: &str, theorems: &[TheoremId], limits: &VerifyLimits) -> LineOutcome {
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => {
            return LineOutcome::Failed(ParseFailure {
                line: line_no,
                offset: e.offset(),
                message: e.to_string(),
            })
        }
    };
    let profile = GraphProfile::new(&g, limits);
    let verdicts = theorems.iter().map(|&t| profile.check(t)).collect();
    let near_miss = match (profile.tau(), profile.circumference()) {
        (Some(tau), Some(c)) => {
            tau.cmp_ratio(1, 1).is_eq() && c.length < g.n() && c.length == 2 * g.min_degree().unwrap_or(0) + 4
        }
        _ => false,
    };
    LineOutcome::Checked { verdicts, near_miss }
}

/// Checks every graph6 line of `input` against `theorems`. Blank lines are
/// skipped; malformed lines are recorded and skipped. Verdicts come back in
/// input order regardless of how many workers ran.
pub fn batch_verify<R: BufRead>(
    input: R,
    descriptor: &str,
    theorems: &[TheoremId],
    limits: &VerifyLimits,
) -> io::Result<Report> {
    let started = Instant::now();
    let mut lines = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push((i + 1, line));
        }
    }
    let work = || -> Vec<LineOutcome> {
        lines
            .par_iter()
            .map(|(no, text)| check_line(*no, text.trim_end(), theorems, limits))
            .collect()
    };
    let outcomes = match limits.workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(io::Error::other)?
            .install(work),
        None => work(),
    };

    let mut report = Report {
        descriptor: descriptor.to_string(),
        theorems: theorems.to_vec(),
        graphs: 0,
        counts: theorems.iter().map(|&t| (t, StatusCounts::default())).collect(),
        verdicts: Vec::new(),
        parse_failures: Vec::new(),
        near_misses: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for outcome in outcomes {
        match outcome {
            LineOutcome::Failed(f) => report.parse_failures.push(f),
            LineOutcome::Checked { verdicts, near_miss } => {
                report.graphs += 1;
                if near_miss {
                    report.near_misses.push(verdicts.first().map(|v| v.evidence.graph6.clone()).unwrap_or_default());
                }
                for v in verdicts {
                    report.counts.entry(v.theorem).or_default().add(v.status);
                    report.verdicts.push(v);
                }
            }
        }
    }
    report.elapsed = started.elapsed();
    info!(
        "checked {} graphs from {} in {:.2?}",
        report.graphs, report.descriptor, report.elapsed
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, petersen};
    use crate::graph6::encode_graph6;

    #[test]
    fn empty_stream() {
        let r = batch_verify(&b""[..], "empty", &[TheoremId::A], &VerifyLimits::default()).unwrap();
        assert_eq!(r.graphs, 0);
        assert_eq!(r.counts[&TheoremId::A].total(), 0);
        assert!(r.verdicts.is_empty());
    }

    #[test]
    fn petersen_and_a_bad_line() {
        let text = format!("{}\nB w\n\n{}\n", encode_graph6(&complete(4).unwrap()), encode_graph6(&petersen()));
        let theorems = [TheoremId::One, TheoremId::A];
        let r = batch_verify(text.as_bytes(), "mixed", &theorems, &VerifyLimits::default()).unwrap();
        assert_eq!(r.graphs, 2);
        assert_eq!(r.count(TheoremId::One, Status::PetersenException), 1);
        assert_eq!(r.count(TheoremId::One, Status::Holds), 1);
        assert!(!r.has_counterexample());
        assert_eq!(
            r.parse_failures,
            vec![ParseFailure {
                line: 2,
                offset: 1,
                message: "byte 1: character 0x20 is outside the graph6 range 63..=126".into()
            }]
        );
        let records = r.records();
        let lines: Vec<&str> = records.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "C~\t1\tholds\t4\t3\t3\t1\t0\t4");
        assert_eq!(lines[2], "IheA@GUAo\t1\tpetersen-exception\t10\t3\t3\t4\t3\t9");
        assert_eq!(lines[3].split('\t').count(), RECORD_FIELDS.len());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let text: String = (3..9).map(|n| encode_graph6(&complete(n).unwrap()) + "\n").collect();
        let one = VerifyLimits {
            workers: Some(1),
            ..VerifyLimits::default()
        };
        let four = VerifyLimits {
            workers: Some(4),
            ..VerifyLimits::default()
        };
        let a = batch_verify(text.as_bytes(), "k", &TheoremId::ALL, &one).unwrap();
        let b = batch_verify(text.as_bytes(), "k", &TheoremId::ALL, &four).unwrap();
        assert_eq!(a.records(), b.records());
        assert_eq!(a.table(), b.table());
    }
}
