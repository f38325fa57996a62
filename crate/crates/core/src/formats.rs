//! graph6 and plain edge-list encodings.
//!
//! graph6 follows the reference description shipped with nauty
//! (<https://users.cecs.anu.edu.au/~bdm/data/formats.txt>): an order header
//! followed by the upper triangle of the adjacency matrix, column by column,
//! packed six bits per printable byte (value + 63).

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (base, line) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    let mut values = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte 0x{b:02x} is not a graph6 character"),
            ));
        }
        values.push(b - 63);
    }
    if values.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }

    let (n, header_len) = if values[0] != 63 {
        (values[0] as usize, 1)
    } else if values.len() >= 2 && values[1] != 63 {
        if values.len() < 4 {
            return Err(Error::parse(
                base + values.len(),
                "truncated 18-bit length field",
            ));
        }
        (fold6(&values[1..4]), 4)
    } else {
        if values.len() < 8 {
            return Err(Error::parse(
                base + values.len(),
                "truncated 36-bit length field",
            ));
        }
        (fold6(&values[2..8]), 8)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTICES,
        });
    }

    let body_len = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let body = &values[header_len..];
    if body.len() < body_len {
        return Err(Error::parse(
            base + values.len(),
            format!("expected {body_len} adjacency bytes, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(Error::parse(
            base + header_len + body_len,
            "trailing bytes after adjacency data",
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            if (body[pos / 6] >> (5 - pos % 6)) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            pos += 1;
        }
    }
    Ok(g)
}

fn fold6(values: &[u8]) -> usize {
    values
        .iter()
        .fold(0usize, |acc, &v| (acc << 6) | v as usize)
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Vertex numbering used by an edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Indexing {
    #[default]
    ZeroBased,
    OneBased,
}

/// Parses `"n m"` followed by `m` lines `"u v"`.
///
/// Blank lines and lines starting with `#` are skipped. Duplicate edges
/// collapse; a self-loop is an error.
pub fn parse_edge_list(text: &str, indexing: Indexing) -> Result<Graph> {
    let mut lines = text
        .split_inclusive('\n')
        .scan(0usize, |offset, line| {
            let start = *offset;
            *offset += line.len();
            Some((start, line.trim()))
        })
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (off, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing \"n m\" header"))?;
    let [n, m] = parse_pair(header, off)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTICES,
        });
    }
    let mut g = Graph::empty(n)?;
    let mut seen = 0usize;
    for (off, line) in lines {
        if seen == m {
            return Err(Error::parse(
                off,
                format!("more than the declared {m} edges"),
            ));
        }
        let [a, b] = parse_pair(line, off)?;
        let (u, v) = match indexing {
            Indexing::ZeroBased => (a, b),
            Indexing::OneBased => {
                if a == 0 || b == 0 {
                    return Err(Error::parse(off, "vertex 0 in a 1-based edge list"));
                }
                (a - 1, b - 1)
            }
        };
        g.add_edge(u, v).map_err(|e| match e {
            Error::SelfLoop(_) | Error::VertexOutOfRange { .. } => Error::parse(off, e.to_string()),
            other => other,
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(
            text.len(),
            format!("declared {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

fn parse_pair(line: &str, offset: usize) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(offset, format!("expected two integers in {line:?}")))?;
        tok.parse()
            .map_err(|_| Error::parse(offset, format!("{tok:?} is not a non-negative integer")))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(Error::parse(
            offset,
            format!("unexpected trailing tokens in {line:?}"),
        ));
    }
    Ok(pair)
}

/// Emits the edge-list form, zero-based, edges sorted.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    #[test]
    fn decodes_star_example() {
        // Bits after the order byte: six zeros, then (0,4) (1,4) (2,4) (3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degrees(), vec![1, 1, 1, 1, 4]);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn decodes_tiny_graphs() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(
            parse_graph6(">>graph6<<A_\n").unwrap(),
            Graph::complete(2).unwrap()
        );
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert!(matches!(
            parse_graph6("A_x"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph6("A\u{1}"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(">>graph6<<A \n"),
            Err(Error::Parse { offset: 11, .. })
        ));
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { .. })));
    }

    #[test]
    fn long_length_header() {
        let g = Graph::path(70).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let too_big = Graph::empty(128).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&too_big)).unwrap().order(), 128);
    }

    #[test]
    fn edge_list_figure_one() {
        let g = parse_edge_list("6 5\n0 2\n2 4\n4 5\n1 3\n3 4", Indexing::ZeroBased).unwrap();
        assert_eq!(g.degrees(), vec![1, 1, 2, 2, 3, 1]);
        assert!(g.has_edge(4, 5));
    }

    #[test]
    fn edge_list_edge_cases() {
        let g = parse_edge_list("3 0", Indexing::ZeroBased).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 0);
        assert!(matches!(
            parse_edge_list("2 1\n0 0", Indexing::ZeroBased),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 2", Indexing::ZeroBased),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 x", Indexing::ZeroBased),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("", Indexing::ZeroBased),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1", Indexing::ZeroBased),
            Err(Error::Parse { .. })
        ));
        let one = parse_edge_list("3 2\n1 2\n2 3\n", Indexing::OneBased).unwrap();
        assert_eq!(one, Graph::path(3).unwrap());
        let dup = parse_edge_list("2 2\n0 1\n1 0\n", Indexing::ZeroBased).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn graph6_round_trip(g in arb_graph(32)) {
            let s = emit_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert!(back.check_invariants());
            prop_assert_eq!(back, g);
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph(32)) {
            let back = parse_edge_list(&emit_edge_list(&g), Indexing::ZeroBased).unwrap();
            prop_assert!(back.check_invariants());
            prop_assert_eq!(back, g);
        }
    }
}
