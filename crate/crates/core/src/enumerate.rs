//! Isomorphism-free generation of free trees and connected graphs.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_form_with_cap};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::vertex_set::VertexSet;

pub const MAX_TREE_ORDER: usize = 16;
pub const MAX_CONNECTED_ORDER: usize = 7;
/// Orders up to this use full Prüfer enumeration; larger ones grow leaves.
pub const PRUFER_MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StreamSource {
    GeneratedTrees,
    GeneratedConnected,
    File,
}

/// Materialised sequence of graphs of one order.
#[derive(Debug)]
pub struct GraphStream {
    pub order: usize,
    pub source: StreamSource,
    graphs: std::vec::IntoIter<Graph>,
}

impl GraphStream {
    pub fn new(order: usize, source: StreamSource, graphs: Vec<Graph>) -> Self {
        GraphStream {
            order,
            source,
            graphs: graphs.into_iter(),
        }
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.graphs.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.graphs.size_hint()
    }
}

impl ExactSizeIterator for GraphStream {}

/// Labelled tree on `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).expect("decoded tree is simple")
}

fn tree_canon(g: &Graph) -> (Vec<u8>, Graph) {
    canonical_form_with_cap(g, MAX_ORDER).expect("trees have no order cap below 64")
}

fn check_tree_order(n: usize) -> Result<()> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::OutOfRange {
            what: "tree order",
            value: n,
            lo: 1,
            hi: MAX_TREE_ORDER,
        });
    }
    Ok(())
}

/// Free trees of order `n` from every Prüfer sequence, deduplicated.
/// Costs `n^(n-2)` decodes.
pub fn enumerate_trees_prufer(n: usize) -> Result<Vec<Graph>> {
    check_tree_order(n)?;
    if n == 1 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let mut reps = BTreeMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let (code, canon) = tree_canon(&prufer_decode(&seq));
        reps.entry(code).or_insert(canon);
        // odometer
        let Some(i) = (0..seq.len()).rev().find(|&i| seq[i] + 1 < n) else {
            break;
        };
        seq[i] += 1;
        seq[i + 1..].fill(0);
    }
    Ok(reps.into_values().collect())
}

/// Free trees of order `n + 1` obtained by hanging a leaf on every vertex
/// of every tree in `trees`.
fn extend_by_leaf(trees: &[Graph]) -> Vec<Graph> {
    let mut reps = BTreeMap::new();
    for t in trees {
        for v in 0..t.n() {
            let g = t
                .with_new_vertex(VertexSet::singleton(v))
                .expect("tree orders stay below the graph cap");
            let (code, canon) = tree_canon(&g);
            reps.entry(code).or_insert(canon);
        }
    }
    reps.into_values().collect()
}

/// Free trees of order `n` grown one leaf at a time from `K1`.
pub fn enumerate_trees_by_extension(n: usize) -> Result<Vec<Graph>> {
    check_tree_order(n)?;
    let mut trees = vec![Graph::empty(1)?];
    for _ in 1..n {
        trees = extend_by_leaf(&trees);
    }
    Ok(trees)
}

/// All free trees of order `n`, one per isomorphism class, in ascending
/// canonical-code order.
pub fn enumerate_trees(n: usize) -> Result<GraphStream> {
    check_tree_order(n)?;
    let trees = if n <= PRUFER_MAX_ORDER {
        enumerate_trees_prufer(n)?
    } else {
        let mut trees = enumerate_trees_prufer(PRUFER_MAX_ORDER)?;
        for _ in PRUFER_MAX_ORDER..n {
            trees = extend_by_leaf(&trees);
        }
        trees
    };
    Ok(GraphStream::new(n, StreamSource::GeneratedTrees, trees))
}

/// All connected graphs of order `n` (2..=7), one per isomorphism class,
/// in ascending canonical-code order.
pub fn enumerate_connected_graphs(n: usize) -> Result<GraphStream> {
    if !(2..=MAX_CONNECTED_ORDER).contains(&n) {
        return Err(Error::OutOfRange {
            what: "connected graph order",
            value: n,
            lo: 2,
            hi: MAX_CONNECTED_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .collect();
    let mut reps = BTreeMap::new();
    for mask in 1u32..1 << pairs.len() {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let g = Graph::from_adjacency(adj);
        if !g.is_connected() {
            continue;
        }
        let (code, canon) = canonical_form(&g)?;
        reps.entry(code).or_insert(canon);
    }
    Ok(GraphStream::new(
        n,
        StreamSource::GeneratedConnected,
        reps.into_values().collect(),
    ))
}
