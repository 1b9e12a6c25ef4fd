//! graph6 interchange format.
//!
//! One graph per line: a size prefix followed by the upper triangle of the
//! adjacency matrix packed six bits per printable byte (offset 63). Decoding
//! tolerates an optional `>>graph6<<` header; encoding never emits one.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Decode errors carry the byte offset into the input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// Byte outside the printable graph6 range `63..=126`.
    InvalidByte { offset: usize, byte: u8 },
    /// Input ended before the adjacency bits did.
    Truncated { offset: usize, expected_len: usize },
    /// Data continues past the adjacency bits.
    ExtraData { offset: usize },
    /// Unused bits in the final byte must be zero.
    NonzeroPadding { offset: usize },
    /// Vertex count beyond what this implementation materializes.
    TooLarge { n: u64 },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 input"),
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::Truncated {
                offset,
                expected_len,
            } => write!(
                f,
                "truncated graph6 line: {offset} bytes present, {expected_len} expected"
            ),
            Graph6Error::ExtraData { offset } => {
                write!(f, "unexpected trailing data at offset {offset}")
            }
            Graph6Error::NonzeroPadding { offset } => {
                write!(f, "nonzero padding bits in final byte at offset {offset}")
            }
            Graph6Error::TooLarge { n } => write!(f, "graph6 vertex count {n} too large"),
        }
    }
}

impl core::error::Error for Graph6Error {}

const HEADER: &str = ">>graph6<<";
const MAX_N: u64 = 1 << 20;

fn sixbit(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = *bytes
        .get(offset)
        .ok_or(Graph6Error::Truncated {
            offset: bytes.len(),
            expected_len: offset + 1,
        })?;
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    Ok(u64::from(byte - 63))
}

/// Decode one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (start, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let at = |off: usize| start + off;

    let pos: usize;
    let n: u64 = if bytes[0] == 126 {
        if bytes.len() > 1 && bytes[1] == 126 {
            pos = 8;
            let mut n = 0u64;
            for i in 0..6 {
                n = (n << 6) | sixbit(bytes, 2 + i).map_err(|e| bump(e, start))?;
            }
            n
        } else {
            pos = 4;
            let mut n = 0u64;
            for i in 0..3 {
                n = (n << 6) | sixbit(bytes, 1 + i).map_err(|e| bump(e, start))?;
            }
            n
        }
    } else {
        pos = 1;
        sixbit(bytes, 0).map_err(|e| bump(e, start))?
    };
    if n > MAX_N {
        return Err(Graph6Error::TooLarge { n });
    }
    let n = n as usize;

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated {
            offset: at(bytes.len()),
            expected_len: at(pos + nbytes),
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::ExtraData {
            offset: at(pos + nbytes),
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = sixbit(bytes, pos + bit / 6).map_err(|e| bump(e, start))?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 && nbytes > 0 {
        let last = sixbit(bytes, pos + nbytes - 1).map_err(|e| bump(e, start))?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: at(pos + nbytes - 1),
            });
        }
    }

    Ok(Graph::build(n, &edges).expect("decoded edges are in range and loop-free"))
}

fn bump(e: Graph6Error, start: usize) -> Graph6Error {
    match e {
        Graph6Error::InvalidByte { offset, byte } => Graph6Error::InvalidByte {
            offset: offset + start,
            byte,
        },
        Graph6Error::Truncated {
            offset,
            expected_len,
        } => Graph6Error::Truncated {
            offset: offset + start,
            expected_len: expected_len + start,
        },
        other => other,
    }
}

/// Encode a graph as a single graph6 line (no header, no newline).
pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}
