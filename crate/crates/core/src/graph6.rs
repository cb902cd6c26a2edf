//! The graph6 text encoding (header-free, one graph per line).
//!
//! A graph6 string is the order `N(n)` followed by the upper triangle of the
//! adjacency matrix read column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed big-endian into 6-bit groups, each offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("malformed length prefix")]
    BadLengthPrefix,
    #[error("expected {expected} data bytes for n = {n}, found {found}")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits in the last byte are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const BIAS: u8 = 63;
const LONG: u8 = 126;

/// Encodes `g` as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adj0(i, j) as u8;
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
    // every byte is in 63..=126, hence ASCII
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Parses one graph6 line. Surrounding ASCII whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_ascii().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(BIAS..=LONG).contains(b)) {
        return Err(Graph6Error::ByteOutOfRange {
            byte: bytes[offset],
            offset,
        });
    }
    let (n, body) = decode_order(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - bit_count;
    if pad > 0 && (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group >> (5 - k % 6) & 1 == 1 {
                g.set0(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let read = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize)
    };
    if bytes[0] != LONG {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == LONG {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadLengthPrefix);
        }
        let n = read(&bytes[2..8]);
        if n <= 258_047 {
            return Err(Graph6Error::BadLengthPrefix);
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadLengthPrefix);
    }
    let n = read(&bytes[1..4]);
    if n <= 62 {
        return Err(Graph6Error::BadLengthPrefix);
    }
    Ok((n, &bytes[4..]))
}
