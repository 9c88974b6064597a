//! graph6 text encoding of simple undirected graphs.
//!
//! Header-less format: an order field N(n), then the column-major upper
//! triangle of the adjacency matrix packed six bits per printable byte
//! with an offset of 63. One graph per line in files.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated graph6 string at offset {offset}: expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("order {0} not supported by this encoder")]
    OrderTooLarge(usize),
}

const MAX_ORDER: usize = 258_047;

/// Encodes a graph as a single graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 encoding limited to order {MAX_ORDER}");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 line. Strict: rejects trailing bytes and
/// nonzero padding so that `encode(decode(s)) == s` for accepted inputs.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let pos: usize;
    let val = |offset: usize| -> Result<u64, Graph6Error> {
        let byte = bytes[offset];
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
        Ok(u64::from(byte - 63))
    };
    let n: usize;
    if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            if bytes.len() < 8 {
                return Err(Graph6Error::Truncated {
                    offset: bytes.len(),
                    expected: 8,
                });
            }
            let mut acc = 0u64;
            for i in 2..8 {
                acc = (acc << 6) | val(i)?;
            }
            n = acc as usize;
            pos = 8;
        } else {
            if bytes.len() < 4 {
                return Err(Graph6Error::Truncated {
                    offset: bytes.len(),
                    expected: 4,
                });
            }
            let mut acc = 0u64;
            for i in 1..4 {
                acc = (acc << 6) | val(i)?;
            }
            n = acc as usize;
            pos = 4;
        }
    } else {
        n = val(0)? as usize;
        pos = 1;
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: pos + nbytes,
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingData {
            offset: pos + nbytes,
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte_idx = pos + bit / 6;
            let shift = 5 - (bit % 6);
            let word = val(byte_idx)?;
            if (word >> shift) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // remaining pad bits in the final byte must be zero
    if nbits % 6 != 0 {
        let last = val(pos + nbytes - 1)?;
        let pad = 6 - (nbits % 6);
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: pos + nbytes - 1,
            });
        }
    }
    Graph::from_edges(n, &edges).map_err(|_| Graph6Error::InvalidByte {
        offset: pos,
        byte: bytes.get(pos).copied().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_encodes_to_expected_string() {
        assert_eq!(encode(&Graph::complete(4)), "C~");
    }

    #[test]
    fn c4_encodes_to_expected_string() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(encode(&c4), "Cl");
    }

    #[test]
    fn round_trips() {
        for g in [
            Graph::complete(1),
            Graph::complete(4),
            Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap(),
            Graph::from_edges(0, &[]).unwrap(),
        ] {
            let s = encode(&g);
            let back = decode(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(encode(&back), s);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(
            decode("C"),
            Err(Graph6Error::Truncated { .. })
        ));
        assert!(matches!(
            decode("C~~"),
            Err(Graph6Error::TrailingData { offset: 2 })
        ));
        assert!(matches!(
            decode("C\n"),
            Err(Graph6Error::InvalidByte { offset: 1, .. })
        ));
        assert!(matches!(decode("D?"), Err(Graph6Error::Truncated { .. })));
        // order 5 uses 10 data bits; low 2 bits of the second byte are padding
        assert!(matches!(
            decode("D?B"),
            Err(Graph6Error::NonzeroPadding { offset: 2 })
        ));
    }

    #[test]
    fn long_form_order() {
        let n = 100;
        let g = Graph::from_edges(n, &[(0, 99), (4, 7)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }
}
