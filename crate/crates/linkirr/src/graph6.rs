//! graph6 reading and writing.
//!
//! graph6 encodes a simple graph as printable ASCII: an order header (one
//! byte `n + 63` for `n <= 62`, a `~`-prefixed multi-byte form above), then
//! the column-major upper-triangle adjacency bits packed into 6-bit groups,
//! each offset by 63, zero-padded to a whole group. Writing always uses the
//! shortest valid header; parsing rejects oversized headers, stray bytes,
//! length mismatches, and nonzero padding, each with its own error.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

/// Optional file-header token permitted before a graph6 line.
const FORMAT_PREFIX: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 alphabet")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("graph6 body has {got} bytes, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("graph6 order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(u64),
}

/// Encodes a graph as its canonical (shortest-header, zero-padded) graph6
/// line.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        // 18-bit header, enough for every order this crate supports.
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_prefix(FORMAT_PREFIX).unwrap_or(line).trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    let (n, body) = parse_header(bytes)?;
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch { expected, got: body.len() });
    }
    let mut edges = Vec::new();
    let mut t = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let bit = (body[t / 6] - 63) >> (5 - t % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            t += 1;
            if t == nbits {
                break 'outer;
            }
        }
    }
    if !nbits.is_multiple_of(6) {
        let pad = (body[expected - 1] - 63) & ((1 << (6 - nbits % 6)) - 1);
        if pad != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::build(n, &edges).expect("decoded edges are in range"))
}

/// Decodes the order header; returns the order and the adjacency body.
fn parse_header(bytes: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    match bytes {
        [] => Err(Graph6Error::MalformedHeader("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Graph6Error::MalformedHeader("truncated 36-bit order".into()));
            }
            let n = rest[..6].iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
            if n <= 258_047 {
                return Err(Graph6Error::MalformedHeader(format!(
                    "order {n} must use a shorter header form"
                )));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader("truncated 18-bit order".into()));
            }
            let n = rest[..3].iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
            if n <= 62 {
                return Err(Graph6Error::MalformedHeader(format!(
                    "order {n} must use the single-byte header"
                )));
            }
            Ok((n, &rest[3..]))
        }
        [h, rest @ ..] => Ok(((h - 63) as u64, rest)),
    }
}

/// Parses a whole document: one graph per non-empty, non-comment line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};

    #[test]
    fn known_codes() {
        // n = 0 and n = 1 are header-only.
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6("@").unwrap().order(), 1);

        // 5-cycle in standard labeling: bits 101001 100100 -> 41, 36.
        let c5 = cycle(5).unwrap();
        assert_eq!(write_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);

        // Published sample: edges (0,2) (0,4) (1,3) (3,4).
        let g = Graph::build(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn round_trips() {
        for g in [
            complete(7).unwrap(),
            cycle(9).unwrap(),
            Graph::empty(13).unwrap(),
            crate::graph::icosahedron(),
            crate::graph::hypercube(4).unwrap(),
        ] {
            let s = write_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn long_header_orders() {
        let g = complete(63).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);

        let g = complete(64).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph6(""), Err(Graph6Error::MalformedHeader(_))));
        assert!(matches!(
            parse_graph6("D\x1f"),
            Err(Graph6Error::InvalidByte { pos: 1, byte: 0x1f })
        ));
        // D (n = 5) needs exactly 2 body bytes.
        assert!(matches!(
            parse_graph6("DqKK"),
            Err(Graph6Error::LengthMismatch { expected: 2, got: 3 })
        ));
        assert!(matches!(
            parse_graph6("D"),
            Err(Graph6Error::LengthMismatch { expected: 2, got: 0 })
        ));
    }

    #[test]
    fn rejects_nonzero_padding() {
        // n = 3 has 3 adjacency bits; the low 3 bits of the single body byte
        // are padding. `~` = 0b111111 sets them.
        assert!(matches!(parse_graph6("B~"), Err(Graph6Error::NonzeroPadding)));
        assert!(parse_graph6("Bw").is_ok()); // 0b111000: triangle
    }

    #[test]
    fn rejects_oversized_and_nonminimal() {
        // 18-bit header for order 100: valid format, too large for this crate.
        let line = "~?@c"; // 100 = 000000 000001 100100
        assert!(matches!(parse_graph6(line), Err(Graph6Error::TooLarge(100))));
        // 18-bit header used for an order that fits one byte.
        assert!(matches!(
            parse_graph6("~??@"),
            Err(Graph6Error::MalformedHeader(_))
        ));
    }

    #[test]
    fn accepts_format_prefix() {
        let c5 = cycle(5).unwrap();
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), c5);
    }
}
