//! graph6 encoding and decoding (McKay's format), short form only: the
//! single-byte header covers n <= 62, which is more than the downstream
//! exponential algorithms can handle anyway.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_N: usize = 62;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes a graph6 string. Trailing padding bits must be zero and the body
/// must have exactly `ceil(n(n-1)/2 / 6)` bytes.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    let header = bytes[0];
    if !(63..=126).contains(&header) {
        return Err(parse_err(0, format!("header byte {header} outside 63..=126")));
    }
    if header == 126 {
        return Err(parse_err(0, "long-form headers (n > 62) are not supported"));
    }
    let n = (header - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let body_len = bit_count.div_ceil(6);
    if bytes.len() != 1 + body_len {
        return Err(parse_err(
            bytes.len().min(1 + body_len),
            format!(
                "body has {} bytes, expected {} for n = {}",
                bytes.len() - 1,
                body_len,
                n
            ),
        ));
    }
    let mut bits = Vec::with_capacity(body_len * 6);
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1 + k, format!("body byte {b} outside 63..=126")));
        }
        let value = b - 63;
        for shift in (0..6).rev() {
            bits.push((value >> shift) & 1 == 1);
        }
    }
    for (i, &bit) in bits.iter().enumerate().skip(bit_count) {
        if bit {
            return Err(parse_err(1 + i / 6, "nonzero padding bit"));
        }
    }
    // Bit order: x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes a graph as a graph6 string. Fails for n > 62.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::argument(format!(
            "graph6 short form supports n <= {MAX_N}, got {n}"
        )));
    }
    let mut out = vec![63 + n as u8];
    let mut bits: Vec<bool> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for &bit in chunk {
            value = (value << 1) | bit as u8;
        }
        out.push(63 + value);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k4_is_c_tilde() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(encode_graph6(&Graph::complete(4)).unwrap(), "C~");
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn truncated_body_names_offset() {
        match parse_graph6("C") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn bad_header_byte() {
        assert!(matches!(parse_graph6("\u{1}"), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn known_small_graphs() {
        // Values checked against a reference graph6 implementation.
        assert_eq!(encode_graph6(&Graph::cycle(5)).unwrap(), "Dhc");
        assert_eq!(encode_graph6(&Graph::complete_bipartite(2, 3)).unwrap(), "D]o");
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5, Graph::cycle(5));
    }

    proptest! {
        #[test]
        fn roundtrip_random_graphs(n in 0usize..=12, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let enc = encode_graph6(&g).unwrap();
            let back = parse_graph6(&enc).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(encode_graph6(&back).unwrap(), enc);
        }
    }
}
