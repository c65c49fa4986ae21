//! graph6 codec, short header form only (n <= 62).
//!
//! A graph6 string is `chr(n + 63)` followed by the upper triangle of the
//! adjacency matrix in column-major order — bits (0,1), (0,2), (1,2),
//! (0,3), ... — packed big-endian into 6-bit groups, each offset by 63
//! into the printable range. Trailing padding bits must be zero, so
//! encoding and parsing are exact inverses on canonical-length input.

use crate::error::{Graph6Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Parses one graph6 line.
pub fn parse_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\r', '\n']).as_bytes();
    let (&header, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if header == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if !(OFFSET..=126).contains(&header) {
        return Err(Graph6Error::BadHeader(header));
    }
    let n = (header - OFFSET) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    for (i, &b) in payload.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::BadChar { byte: b, position: i + 1 });
        }
    }
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, actual: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::Overlong { expected, actual: payload.len() });
    }
    let mut rows = vec![0u64; n];
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = (payload[idx / 6] - OFFSET) as u64;
            if group >> (5 - idx % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            idx += 1;
        }
    }
    // Everything after the last pair bit must be zero padding.
    if idx % 6 != 0 {
        let group = (payload[idx / 6] - OFFSET) as u64;
        if group & ((1 << (6 - idx % 6)) - 1) != 0 {
            return Err(Graph6Error::DirtyPadding);
        }
    }
    Ok(Graph::from_adjacency_rows(n, rows).expect("decoded rows are symmetric by construction"))
}

/// Encodes a graph as a short-form graph6 line.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(OFFSET + n as u8);
    let mut group = 0u8;
    let mut bits = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
            bits += 1;
            if bits == 6 {
                out.push(OFFSET + group);
                group = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(OFFSET + (group << (6 - bits)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testutil::{complete, path, petersen};

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(encode_graph6(&complete(3)).unwrap(), "Bw");
        assert_eq!(encode_graph6(&path(3)).unwrap(), "Bg");
    }

    #[test]
    fn known_parses() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        let empty2 = parse_graph6("A?").unwrap();
        assert_eq!(empty2.n(), 2);
        assert_eq!(empty2.edge_count(), 0);
    }

    #[test]
    fn round_trips() {
        for g in [complete(2), complete(3), path(3), path(4), petersen()] {
            let s = encode_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn parse_then_encode_is_identity() {
        for s in ["A_", "A?", "Bw", "Bg", "D{c", "IheA@GUAo"] {
            let g = parse_graph6(s).unwrap();
            assert_eq!(encode_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::LongForm));
        assert_eq!(parse_graph6(">"), Err(Graph6Error::BadHeader(b'>')));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::ZeroVertices));
        assert_eq!(
            parse_graph6("B"),
            Err(Graph6Error::Truncated { expected: 1, actual: 0 })
        );
        assert_eq!(
            parse_graph6("A__"),
            Err(Graph6Error::Overlong { expected: 1, actual: 2 })
        );
        assert_eq!(
            parse_graph6("A\n_"),
            Err(Graph6Error::BadChar { byte: b'\n', position: 1 })
        );
        // n = 2 uses only the top bit of the payload group.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::DirtyPadding));
    }

    #[test]
    fn encode_rejects_oversize() {
        let g = Graph::from_edges(63, &[(0, 1), (1, 2), (62, 0)]).unwrap();
        assert_eq!(encode_graph6(&g), Err(Graph6Error::TooLarge { n: 63 }));
    }

    #[test]
    fn trailing_newline_tolerated() {
        assert_eq!(parse_graph6("Bw\n").unwrap(), complete(3));
    }
}
