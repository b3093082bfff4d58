use std::collections::HashMap;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const GRAPH6_MAX_N: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one short-form graph6 line (`n <= 62`).
///
/// A trailing newline and the optional `>>graph6<<` header are accepted. Byte offsets in
/// errors are relative to the start of the encoded graph.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(g6_err(0, "empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(g6_err(0, format!("length byte {first} outside 63..=126")));
    }
    if first == 126 {
        return Err(g6_err(0, "long-form size header (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let body = &bytes[1..];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(i + 1, format!("byte {b} outside 63..=126")));
        }
    }
    if body.len() != expected {
        let offset = 1 + body.len().min(expected);
        return Err(g6_err(
            offset,
            format!("expected {expected} data bytes for n={n}, found {}", body.len()),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !bit_count.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(expected, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Encodes `g` as a short-form graph6 line (no newline). Labels are kept as-is.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::UnsupportedSize { n, max: GRAPH6_MAX_N });
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bit_count.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
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

/// Parses the edge-list format: a header line `n m` followed by `m` lines `u v`.
///
/// Endpoint tokens are labels; they are mapped to indices in first-seen order. Labels never
/// mentioned by an edge take the remaining indices. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, reason: String| Error::EdgeList { line, reason };

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header line".into()))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let parse = |s: &str| s.parse::<usize>().map_err(|_| err(hline, format!("bad count {s:?}")));
    let [n, m] = nums.as_slice() else {
        return Err(err(hline, "header must be `n m`".into()));
    };
    let (n, m) = (parse(n)?, parse(m)?);

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, line) =
            lines.next().ok_or_else(|| err(hline, format!("expected {m} edges, found {}", edges.len())))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(err(lno, "edge line must be `u v`".into()));
        };
        let mut ids = [0usize; 2];
        for (slot, label) in ids.iter_mut().zip([*a, *b]) {
            let next = index.len();
            let idx = *index.entry(label).or_insert(next);
            if idx >= n {
                return Err(err(lno, format!("more than {n} distinct vertex labels")));
            }
            *slot = idx;
        }
        let [u, v] = ids;
        if u == v {
            return Err(err(lno, format!("self-loop at {a:?}")));
        }
        edges.push((u, v));
    }
    if let Some((lno, _)) = lines.next() {
        return Err(err(lno, format!("trailing content after {m} edges")));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A graph read from an input file together with the (1-based) line it started on.
#[derive(Clone, Debug)]
pub struct GraphInput {
    pub line: usize,
    pub graph: Graph,
}

/// Reads a graph file: either graph6 (one graph per line, `>` comment lines skipped) or a
/// single edge list. The format is detected from the first content line: a line with
/// whitespace starts an edge list.
pub fn read_graphs(text: &str) -> Result<Vec<GraphInput>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !(l.starts_with('>') && !l.starts_with(GRAPH6_HEADER)));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.split_whitespace().nth(1).is_some() => {
            let line = text.lines().position(|x| x.trim() == l).map_or(1, |p| p + 1);
            let graph = parse_edge_list(text).map_err(|e| match e {
                Error::EdgeList { line, reason } => Error::Input { line, reason },
                other => Error::Input { line, reason: other.to_string() },
            })?;
            Ok(vec![GraphInput { line, graph }])
        }
        Some(_) => {
            let mut out = Vec::new();
            for (i, raw) in text.lines().enumerate() {
                let l = raw.trim();
                if l.is_empty() || (l.starts_with('>') && !l.starts_with(GRAPH6_HEADER)) {
                    continue;
                }
                let graph = parse_graph6(l).map_err(|e| Error::Input { line: i + 1, reason: e.to_string() })?;
                out.push(GraphInput { line: i + 1, graph });
            }
            Ok(out)
        }
    }
}
