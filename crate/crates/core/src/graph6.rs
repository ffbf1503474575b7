//! graph6 short form (orders 1..=62).
//!
//! Byte 0 is `63 + n`; the upper triangle is then packed column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) six bits per byte, most
//! significant bit first, each byte offset by 63.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

/// Optional first-line marker emitted by some generators.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {offset}: header byte {byte:#04x} is not a short-form order")]
    BadHeader { offset: usize, byte: u8 },
    #[error("byte {offset}: order {n} outside 1..=62")]
    OrderOutOfRange { offset: usize, n: usize },
    #[error("byte {offset}: {byte:#04x} is not a graph6 character")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: expected {expected} bytes for order {n}, found {found}")]
    Length { offset: usize, n: usize, expected: usize, found: usize },
    #[error("byte {offset}: padding bits are not zero")]
    TrailingBits { offset: usize },
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parses one short-form record. Surrounding whitespace and a leading
/// `>>graph6<<` marker are ignored.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let &head = bytes.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(Graph6Error::BadHeader { offset: 0, byte: head });
    }
    if head == 126 {
        // Long form marker.
        return Err(Graph6Error::OrderOutOfRange { offset: 0, n: MAX_ORDER + 1 });
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::OrderOutOfRange { offset: 0, n });
    }
    let expected = body_len(n);
    let body = &bytes[1..];
    if let Some((i, &b)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset: i + 1, byte: b });
    }
    if body.len() != expected {
        return Err(Graph6Error::Length {
            offset: 1 + body.len().min(expected),
            n,
            expected: expected + 1,
            found: bytes.len(),
        });
    }
    let bit_count = n * (n - 1) / 2;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !bit_count.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits { offset: expected });
        }
    }
    Ok(Graph::from_adjacency(adj).expect("graph6 decoding yields a simple graph"))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((63 + n as u8) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

/// One parsed line of a graph6 stream.
#[derive(Debug, Clone)]
pub struct Record {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, Graph6Error>,
}

/// Reads a graph6 stream line by line, skipping blank lines and a leading
/// `>>graph6<<` marker line.
pub fn read_records<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<Record>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e)),
        Ok(line) => {
            let t = line.trim();
            let t = t.strip_prefix(HEADER).unwrap_or(t).trim();
            if t.is_empty() {
                return None;
            }
            Some(Ok(Record { line: i + 1, text: t.to_string(), graph: from_graph6(t) }))
        }
    })
}
