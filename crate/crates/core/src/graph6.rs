//! graph6 encoding of simple graphs.
//!
//! Order is one byte `n + 63` (or `~` followed by three 6-bit groups for
//! `n >= 63`), then the upper triangle in column-major order `(0,1), (0,2),
//! (1,2), (0,3), ...`, six bits per byte, biased by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use std::io::BufRead;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(malformed("truncated order header"));
        }
        if bytes[1] == 126 {
            return Err(malformed("order exceeds 64"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, &bytes[4..])
    };
    if n == 0 {
        return Err(malformed("order 0"));
    }
    if n > MAX_VERTICES {
        return Err(malformed(format!("order {n} exceeds 64")));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(malformed(format!(
            "truncated edge data: {} of {need} bytes",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(malformed("trailing bytes after edge data"));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    for k in nbits..need * 6 {
        if bit(k) {
            return Err(malformed("nonzero padding bits"));
        }
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Multigraph);
    }
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 is ascii"))
}

/// Reads newline-delimited graph6, skipping blank lines. Errors carry the
/// 1-based line number.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| {
            let line_no = idx as u64 + 1;
            match line {
                Err(e) => Some(Err(Error::Io(e))),
                Ok(l) if l.trim().is_empty() => None,
                Ok(l) => Some(from_graph6(l.trim()).map_err(|e| Error::InputLine {
                    line: line_no,
                    source: Box::new(e),
                })),
            }
        })
}
