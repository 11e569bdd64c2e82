//! Text formats: graph6 lines and the `n m` edge-list format.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// graph6 with a single-byte order field.
pub const GRAPH6_MAX_ORDER: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            cap: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((chunk << (6 - nbits)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let malformed = |msg: String| Error::MalformedInput(msg);
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} outside the graph6 alphabet")));
    }
    let Some((&first, body)) = bytes.split_first() else {
        return Err(malformed("empty graph6 line".into()));
    };
    if first == 126 {
        return Err(malformed(format!(
            "orders above {GRAPH6_MAX_ORDER} are not supported"
        )));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(malformed("graph6 order 0".into()));
    }
    let nbits = n * (n - 1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(malformed(format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// `n m` followed by one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#') || t.starts_with("status:")
}

/// One or more consecutive edge-list blocks.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !is_skippable(l));
    let mut graphs = Vec::new();
    while let Some((no, header)) = lines.next() {
        let (n, m) = parse_pair(header).ok_or_else(|| {
            Error::MalformedInput(format!("line {}: expected `n m`, got `{header}`", no + 1))
        })?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (no, line) = lines.next().ok_or_else(|| {
                Error::MalformedInput(format!("expected {m} edges after line {}", no + 1))
            })?;
            edges.push(parse_pair(line).ok_or_else(|| {
                Error::MalformedInput(format!("line {}: expected `u v`, got `{line}`", no + 1))
            })?);
        }
        let g = Graph::from_edge_list(n, &edges)
            .map_err(|e| Error::MalformedInput(format!("graph at line {}: {e}", no + 1)))?;
        if g.m() != m {
            return Err(Error::MalformedInput(format!(
                "graph at line {}: declared {m} edges but {} are distinct",
                no + 1,
                g.m()
            )));
        }
        graphs.push(g);
    }
    Ok(graphs)
}

pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !is_skippable(l))
        .map(|l| from_graph6(l.trim()))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

/// Edge-list input starts with a line of two integers; anything else is
/// read as graph6.
pub fn sniff_format(text: &str) -> Format {
    match text.lines().find(|l| !is_skippable(l)) {
        Some(l) if parse_pair(l).is_some() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    match sniff_format(text) {
        Format::EdgeList => parse_edge_lists(text),
        Format::Graph6 => parse_graph6_lines(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::testutil::random_graph;
    use rand::SeedableRng;

    #[test]
    fn graph6_known_values() {
        assert_eq!(to_graph6(&path(2)).unwrap(), "A_");
        assert_eq!(from_graph6("A_").unwrap(), path(2));
        // same graph as petgraph's DQc example: edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(from_graph6(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_p6() {
        let p6 = path(6);
        assert_eq!(from_graph6(&to_graph6(&p6).unwrap()).unwrap(), p6);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(matches!(from_graph6("A "), Err(Error::MalformedInput(_))));
        assert!(matches!(from_graph6("A"), Err(Error::MalformedInput(_))));
        assert!(matches!(from_graph6(""), Err(Error::MalformedInput(_))));
        assert!(matches!(from_graph6("~??"), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let text = to_edge_list(&gstar());
        assert!(text.starts_with("12 15\n"));
        assert_eq!(parse_graphs(&text).unwrap(), vec![gstar()]);
        let two = format!("{}\nstatus: CBAABC\n\n{}", to_edge_list(&path(6)), to_edge_list(&cycle(3)));
        assert_eq!(parse_graphs(&two).unwrap(), vec![path(6), cycle(3)]);
        assert!(matches!(parse_edge_lists("3 2\n0 1\n"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_edge_lists("3 1\n0 3\n"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_edge_lists("3 1\n1 1\n"), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff_format("4 3\n0 1\n"), Format::EdgeList);
        assert_eq!(sniff_format("C~\n"), Format::Graph6);
        assert_eq!(parse_graphs("C~\nA_\n").unwrap(), vec![complete(4), path(2)]);
    }

    proptest::proptest! {
        #[test]
        fn graph6_labelled_identity(n in 1usize..=20, p in 0.0f64..1.0, seed in 0u64..10_000) {
            let g = random_graph(&mut rand::rngs::StdRng::seed_from_u64(seed), n, p);
            proptest::prop_assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        }
    }
}
