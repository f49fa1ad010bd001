//! Plain-text instance formats.
//!
//! Graph: a header line `n m`, then `m` lines `u v` (0-based).
//! Hypergraph: a header line `n m` or `n m r`, then `m` lines of strictly
//! increasing vertices. Writers emit exactly this shape, so canonical files
//! round-trip byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| parse_err(line_no, format!("not a non-negative integer: {tok:?}"))))
        .collect()
}

/// Non-empty lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let h = numbers(hl, header)?;
    let [n, m] = h[..] else {
        return Err(parse_err(hl, "header must be \"n m\""));
    };
    let mut g = Graph::new(n);
    let mut count = 0;
    for (no, line) in lines {
        let xs = numbers(no, line)?;
        let [u, v] = xs[..] else {
            return Err(parse_err(no, "edge line must be \"u v\""));
        };
        if u >= n || v >= n {
            return Err(parse_err(no, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(no, "loop edge"));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(no, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        count += 1;
        if count > m {
            return Err(parse_err(no, format!("more than the declared {m} edges")));
        }
    }
    if count != m {
        return Err(parse_err(text.lines().count().max(1), format!("declared {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line \"n m [r]\""))?;
    let h = numbers(hl, header)?;
    let (n, m, r) = match h[..] {
        [n, m] => (n, m, None),
        [n, m, r] => (n, m, Some(r)),
        _ => return Err(parse_err(hl, "header must be \"n m\" or \"n m r\"")),
    };
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (no, line) in lines {
        let e = numbers(no, line)?;
        if e.is_empty() || e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(no, "edge must list strictly increasing vertices"));
        }
        if e[e.len() - 1] >= n {
            return Err(parse_err(no, format!("vertex out of range for n = {n}")));
        }
        if let Some(r) = r.filter(|&r| r != e.len()) {
            return Err(parse_err(no, format!("edge has {} vertices, header says {r}", e.len())));
        }
        if !seen.insert(e.clone()) {
            return Err(parse_err(no, "duplicate edge"));
        }
        edges.push(e);
        if edges.len() > m {
            return Err(parse_err(no, format!("more than the declared {m} edges")));
        }
    }
    if edges.len() != m {
        return Err(parse_err(text.lines().count().max(1), format!("declared {m} edges, found {}", edges.len())));
    }
    Hypergraph::new(n, edges, r)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut s = match h.uniformity() {
        Some(r) => format!("{} {} {r}\n", h.n(), h.edge_count()),
        None => format!("{} {}\n", h.n(), h.edge_count()),
    };
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn read_hypergraph(path: impl AsRef<Path>) -> Result<Hypergraph> {
    parse_hypergraph(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;

    #[test]
    fn graph_format() {
        let text = write_graph(&cycle(5));
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), cycle(5));
    }

    #[test]
    fn malformed_files_name_the_line() {
        let e = parse_graph("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_graph("3 1\n0 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_hypergraph("5 1 3\n0 2 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_hypergraph("5 2 3\n0 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn hypergraph_format() {
        let text = "7 3 3\n0 1 2\n0 3 4\n0 5 6\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h.uniformity(), Some(3));
        assert_eq!(write_hypergraph(&h), text);
        let mixed = "4 2\n0 1 2\n3\n";
        assert_eq!(write_hypergraph(&parse_hypergraph(mixed).unwrap()), mixed);
    }

    proptest! {
        #[test]
        fn graph_text_round_trips(n in 1usize..30, pairs in proptest::collection::vec((0usize..30, 0usize..30), 0..80)) {
            let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|&(u, v)| u < n && v < n && u != v).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph(&back), text);
        }

        #[test]
        fn hypergraph_text_round_trips(n in 3usize..20, raw in proptest::collection::btree_set(proptest::collection::btree_set(0usize..20, 3), 0..30)) {
            let edges: Vec<Vec<usize>> = raw.into_iter().map(|e| e.into_iter().collect::<Vec<_>>()).filter(|e: &Vec<usize>| e.iter().all(|&v| v < n)).collect();
            let h = Hypergraph::new(n, edges, Some(3)).unwrap();
            let text = write_hypergraph(&h);
            prop_assert_eq!(parse_hypergraph(&text).unwrap(), h);
        }
    }
}
