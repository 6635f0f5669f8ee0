//! graph6 encoding as used by nauty's `geng`/`showg`.
//!
//! Bits of the upper triangle are taken column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed big-endian into 6-bit
//! groups and offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn encode_n(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode(line: &str) -> Result<Graph> {
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let digits: Vec<usize> = bytes.iter().map(|&b| (b - 63) as usize).collect();
    let (n, body) = if digits[0] < 63 {
        (digits[0], &digits[1..])
    } else if digits.len() >= 4 && digits[1] < 63 {
        (digits[1] << 12 | digits[2] << 6 | digits[3], &digits[4..])
    } else {
        return Err(Error::Graph6("unsupported size header".into()));
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && body[k / 6] & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Graph::from_edges(n, &edges)
}

/// Decodes every non-blank line that is not a `#` comment.
pub fn decode_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(decode)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn known_encodings() {
        // reference strings produced by networkx.to_graph6_bytes
        assert_eq!(encode(&families::petersen().unwrap()), "IheA@GUAo");
        assert_eq!(encode(&families::complete(5).unwrap()), "D~{");
        assert_eq!(encode(&families::complete_bipartite(3, 3).unwrap()), "EFz_");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn petgraph_reference() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn large_header() {
        let g = families::cycle(63).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("D~").is_err());
        assert!(decode("D~{{").is_err());
        assert!(decode("A ").is_err());
        assert!(decode("A_").is_ok());
        assert!(decode("A@").is_err());
        assert!(decode("Bw").is_ok());
        assert!(decode("Bx").is_err()); // padding bits set
        assert!(decode("D\u{7f}{").is_err());
    }

    #[test]
    fn header_and_comments() {
        let gs = decode_all("# catalog\n>>graph6<<D~{\n\nIheA@GUAo\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0], families::complete(5).unwrap());
    }
}
