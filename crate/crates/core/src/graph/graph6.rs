//! graph6 encoding (header-less, one graph per line).
//!
//! The upper triangle is read column by column, `(0,1), (0,2), (1,2), (0,3),
//! ...`, packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, MAX_ORDER};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

/// Parses a single graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    parse_at(body.as_bytes(), base)
}

/// Parses every non-empty line. Error offsets are relative to `text`.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            graphs.push(parse_graph6(line).map_err(|e| match e {
                Error::Graph6 { offset: o, message } => err(offset + o, message),
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(graphs)
}

fn parse_at(bytes: &[u8], base: usize) -> Result<Graph> {
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }
    let (n, mut pos) = match bytes.first() {
        None => return Err(err(base, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err(base + 1, "8-byte order prefix exceeds the supported maximum"));
            }
            if bytes.len() < 4 {
                return Err(err(base + bytes.len(), "truncated order prefix"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(err(base, format!("order {n} exceeds the supported maximum of {MAX_ORDER}")));
    }
    let slots = n * n.saturating_sub(1) / 2;
    let expected = pos + slots.div_ceil(6);
    if bytes.len() != expected {
        let at = base + bytes.len().min(expected);
        return Err(err(
            at,
            format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[pos + k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.adj[i] |= 1 << j;
                g.adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        pos += k / 6;
        let pad = (bytes[pos] - 63) & ((1 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(err(base + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        // 5 vertices, edges 02 04 13 34
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn long_order_prefix() {
        let g = Graph::complete(64).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let e = Graph::empty(63).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&e)).unwrap(), e);
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("C~ x"), Err(Error::Graph6 { offset: 2, .. })));
        // n=3 uses 3 of 6 bits; low padding must be zero
        assert!(matches!(parse_graph6("B@"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?@A"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn multi_line() {
        let gs = parse_graph6_lines("C~\n\n@\nBw\n").unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[2], Graph::complete(3).unwrap());
        match parse_graph6_lines("C~\nC!\n") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
