//! Edge-list and graph6 text formats.
//!
//! Edge lists hold one `u v` pair per line; blank lines and lines starting
//! with `#` are skipped, and an optional leading `n <count>` line declares
//! the vertex count (needed for isolated vertices).  graph6 follows the
//! standard nauty encoding: a size prefix followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use super::Graph;
use crate::error::{GraphError, ParseError};

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, (usize, usize))> = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::Malformed {
            line: line_no,
            text: raw.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (a, b) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(malformed()),
        };
        if a == "n" {
            if seen_content {
                return Err(malformed());
            }
            declared = Some(b.parse().map_err(|_| malformed())?);
        } else {
            let u = a.parse().map_err(|_| malformed())?;
            let v = b.parse().map_err(|_| malformed())?;
            edges.push((line_no, (u, v)));
        }
        seen_content = true;
    }
    let max_seen = edges.iter().map(|&(_, (u, v))| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(max_seen);
    let mut g = Graph::empty(n);
    for (line, (u, v)) in edges {
        g.add_edge(u, v)
            .map_err(|source| ParseError::Invalid { line, source })?;
    }
    Ok(g)
}

/// `n <count>` header followed by one `u v` line per edge (`u < v`).
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::InvalidByte { byte, offset });
        }
    }
    let (n, header) = decode_size(bytes)?;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let body = &bytes[header..];
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() < bytes_needed {
        return Err(ParseError::Truncated);
    }
    if body.len() > bytes_needed {
        return Err(ParseError::TrailingData(body.len() - bytes_needed));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j).expect("upper-triangle bits are simple edges");
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), ParseError> {
    let value = |range: &[u8]| {
        range
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
    };
    match bytes {
        [] => Err(ParseError::Truncated),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), 8)),
        [126, 126, ..] => Err(ParseError::Truncated),
        [126, rest @ ..] if rest.len() >= 3 => Ok((value(&rest[..3]), 4)),
        [126, ..] => Err(ParseError::Truncated),
        [b, ..] => Ok((usize::from(b - 63), 1)),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_chunks = |out: &mut Vec<u8>, value: usize, chunks: usize| {
        for c in (0..chunks).rev() {
            out.push(((value >> (6 * c)) & 0x3f) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_chunks(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_chunks(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses either format; graph6 is assumed when the text is a single
/// non-comment token.
pub fn parse_any(text: &str) -> Result<Graph, ParseError> {
    let meaningful: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    match meaningful.as_slice() {
        [single] if !single.contains(char::is_whitespace) => parse_graph6(single),
        _ => parse_edge_list(text),
    }
}

impl From<GraphError> for ParseError {
    fn from(source: GraphError) -> Self {
        ParseError::Invalid { line: 0, source }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basics() {
        let p3 = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::path(3));
        let k1 = parse_edge_list("n 1").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.m(), 0);
        let with_comments = parse_edge_list("# header\nn 4\n\n0 1\n# mid\n2 1\n").unwrap();
        assert_eq!(with_comments.n(), 4);
        assert_eq!(with_comments.m(), 2);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 1\n0 1"),
            Err(ParseError::Invalid {
                line: 2,
                source: GraphError::DuplicateEdge(0, 1)
            })
        );
        assert_eq!(
            parse_edge_list("0 1\n2 2\n"),
            Err(ParseError::Invalid {
                line: 2,
                source: GraphError::SelfLoop(2)
            })
        );
        assert!(matches!(
            parse_edge_list("0 1\nx y"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 5"),
            Err(ParseError::Invalid {
                line: 2,
                source: GraphError::VertexOutOfRange { vertex: 5, n: 2 }
            })
        ));
    }

    #[test]
    fn graph6_small_cases() {
        // 'A' = 2 vertices, '_' = 0b100000: the single pair is an edge
        assert_eq!(parse_graph6("A_").unwrap(), Graph::path(2));
        assert_eq!(parse_graph6("B?").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph6(""), Err(ParseError::Truncated));
        assert_eq!(parse_graph6("C"), Err(ParseError::Truncated));
        assert!(matches!(
            parse_graph6("A "),
            Err(ParseError::InvalidByte { byte: b' ', offset: 1 })
        ));
        assert_eq!(emit_graph6(&Graph::path(2)), "A_");
        assert_eq!(emit_graph6(&Graph::empty(3)), "B?");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::path(2));
    }

    #[test]
    fn graph6_long_size_prefix() {
        let g = Graph::path(100);
        let text = emit_graph6(&g);
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn parse_any_detects_format() {
        assert_eq!(parse_any("A_\n").unwrap(), Graph::path(2));
        assert_eq!(parse_any("0 1\n").unwrap(), Graph::path(2));
    }
}
