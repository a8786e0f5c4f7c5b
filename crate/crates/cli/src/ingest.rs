//! Graph input parsing: graph6 streams and plain edge lists.

use mbd_core::graph::Graph;
use mbd_core::graph6::graph6_decode;

/// One content line of a graph6 stream with its parse outcome.
#[derive(Clone, Debug)]
pub struct Graph6Line {
    /// 1-based position in the raw input, counting skipped lines.
    pub line_number: usize,
    pub text: String,
    pub parsed: Result<Graph, String>,
}

/// Splits a graph6 stream into per-line parse results. Blank lines and
/// `>>` header lines are skipped; bad lines are kept as errors so a
/// census can report them without aborting the run.
pub fn parse_graph6_stream(input: &str) -> Vec<Graph6Line> {
    let mut out = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let text = raw.trim_end_matches('\r');
        if text.is_empty() || text.starts_with(">>") {
            continue;
        }
        out.push(Graph6Line {
            line_number: i + 1,
            text: text.to_string(),
            parsed: graph6_decode(text).map_err(|e| e.to_string()),
        });
    }
    out
}

/// Parses an edge-list description: the first line holds the order, each
/// following line one `u v` pair. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(input: &str) -> Result<Graph, String> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if n.is_none() {
            n = Some(
                line.parse()
                    .map_err(|_| format!("line {}: expected the vertex count, got {line:?}", i + 1))?,
            );
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(format!("line {}: expected \"u v\", got {line:?}", i + 1)),
        };
        let u: usize = u
            .parse()
            .map_err(|_| format!("line {}: bad vertex {u:?}", i + 1))?;
        let v: usize = v
            .parse()
            .map_err(|_| format!("line {}: bad vertex {v:?}", i + 1))?;
        edges.push((u, v));
    }
    let n = n.ok_or("empty edge list: missing the vertex count line")?;
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbd_core::graph::{cycle, path};
    use mbd_core::graph6::graph6_encode;

    #[test]
    fn stream_skips_headers_and_keeps_bad_lines() {
        let input = format!(
            ">>graph6<<\n{}\n\n{}\nnot graph6 \u{7f}\n",
            graph6_encode(&cycle(5)),
            graph6_encode(&path(2))
        );
        let lines = parse_graph6_stream(&input);
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0].line_number, 2);
        assert_eq!(lines[0].parsed.as_ref().unwrap(), &cycle(5));
        assert_eq!(lines[1].line_number, 4);
        assert_eq!(lines[1].parsed.as_ref().unwrap(), &path(2));
        assert_eq!(lines[2].line_number, 5);
        assert!(lines[2].parsed.is_err());
    }

    #[test]
    fn edge_lists_round_trip() {
        let g = parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(g, cycle(5));
        let g = parse_edge_list("# order first\n3\n0 1 # leading edge\n\n1 2\n").unwrap();
        assert_eq!(g, path(3));
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n0\n").is_err());
        assert!(parse_edge_list("3\n0 5\n").is_err());
        assert!(parse_edge_list("x\n").is_err());
    }
}
