//! graph6 text encoding (short form, up to 62 vertices).
//!
//! One byte `n + 63`, then the upper triangle in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte with the
//! first bit in the high position, each group offset by 63 and the last
//! group zero-padded.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;
pub const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(malformed("empty input"));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!("byte {:#04x} at position {pos} outside 63..=126", bytes[pos])));
    }
    if first == 126 {
        return Err(malformed("long-form orders (more than 62 vertices) are not supported"));
    }
    let n = usize::from(first - 63);
    if n == 0 {
        return Err(malformed("graphs must have at least one vertex"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(malformed(format!("expected {expected} bytes for {n} vertices, found {}", bytes.len())));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let group = bytes[1 + k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.set_edge(u, v, true);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::SizeLimitExceeded { n, limit: MAX_ORDER });
    }
    if n == 0 {
        return Err(malformed("graphs must have at least one vertex"));
    }
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses every record of a graph6 stream, skipping blank lines and the
/// optional `>>graph6<<` header. Errors carry the 1-based line number.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(malformed(format!("line {}: {e}", i + 1)))),
        };
        let rec = line.strip_prefix(HEADER).unwrap_or(&line).trim_end();
        if rec.is_empty() {
            return None;
        }
        Some(parse_graph6(rec).map_err(|e| match e {
            Error::MalformedGraph6(m) => malformed(format!("line {}: {m}", i + 1)),
            other => other,
        }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("Ch").unwrap(), Graph::path(4));
        let star = parse_graph6("Cs").unwrap();
        assert_eq!(star.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(to_graph6(&Graph::path(4)).unwrap(), "Ch");
    }

    #[test]
    fn external_reference_string() {
        // Five vertices with edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn trailing_newline_accepted() {
        assert_eq!(parse_graph6("C~\n").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("C~\r\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "C", "C~~", "C ~", "~", "?", "C\u{7f}", "Bx"] {
            assert!(matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))), "{bad:?}");
        }
        // n = 3 has 3 bits; "Bx" sets a padding bit.
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn order_limit() {
        assert!(to_graph6(&Graph::empty(62)).is_ok());
        assert_eq!(to_graph6(&Graph::empty(63)), Err(Error::SizeLimitExceeded { n: 63, limit: 62 }));
    }

    #[test]
    fn stream_reader() {
        let text = ">>graph6<<C~\n\nCh\nbad\n";
        let out: Vec<_> = read_graph6(text.as_bytes()).collect();
        assert_eq!(out.len(), 3);
        assert_eq!(out[0].as_ref().unwrap(), &Graph::complete(4));
        assert_eq!(out[1].as_ref().unwrap(), &Graph::path(4));
        assert!(matches!(&out[2], Err(Error::MalformedGraph6(m)) if m.starts_with("line 4")));
    }
}
