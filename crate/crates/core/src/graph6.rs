//! graph6 reading and writing.
//!
//! Only the subset needed for graphs with at most 64 vertices is supported:
//! the one-byte size header for n ≤ 62 and the `~`-prefixed three-byte header
//! for n = 63 and 64. The optional `>>graph6<<` prefix is accepted on input.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 word")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated size header")]
    TruncatedHeader { offset: usize },
    #[error("byte {offset}: graph has {n} vertices, at most {MAX_VERTICES} are supported")]
    Unsupported { offset: usize, n: usize },
    #[error("byte {offset}: expected {expected} adjacency bytes, found {found}")]
    WrongLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: padding bits are not zero")]
    NonZeroPadding { offset: usize },
}

impl Graph6Error {
    /// Byte offset into the input word where the problem was detected.
    pub fn offset(&self) -> usize {
        match *self {
            Graph6Error::Empty => 0,
            Graph6Error::BadByte { offset, .. }
            | Graph6Error::TruncatedHeader { offset }
            | Graph6Error::Unsupported { offset, .. }
            | Graph6Error::WrongLength { offset, .. }
            | Graph6Error::NonZeroPadding { offset } => offset,
        }
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 word. A single trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let (skip, word) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if word.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in word.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Graph6Error::BadByte {
                offset: skip + i,
                byte: b,
            });
        }
    }

    let (n, header_len) = if word[0] != 126 {
        ((word[0] - BIAS) as usize, 1)
    } else if word.len() >= 2 && word[1] == 126 {
        // 8-byte header, n ≥ 258048
        return Err(Graph6Error::Unsupported {
            offset: skip,
            n: usize::MAX,
        });
    } else if word.len() < 4 {
        return Err(Graph6Error::TruncatedHeader {
            offset: skip + word.len(),
        });
    } else {
        let n = word[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::Unsupported { offset: skip, n });
    }

    let body = &word[header_len..];
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            offset: skip + header_len + body.len().min(expected),
            expected,
            found: body.len(),
        });
    }

    let mut g = Graph::empty(n).expect("n checked above");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[k / 6] - BIAS;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: skip + header_len + k / 6,
            });
        }
    }
    Ok(g)
}

/// Encodes a graph in minimal graph6 form, without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    // Graph already enforces n ≤ 64, so the size error cannot occur here.
    let n = g.n();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
