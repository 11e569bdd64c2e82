//! Simple undirected graphs on dense vertex indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Hard limit on the order of any [`Graph`]; one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

/// Undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop edge at {a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn other(self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall(0));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, cap: MAX_ORDER });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            m: 0,
        })
    }

    /// Builds a simple graph; repeated pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            g.add_edge_unchecked(a, b);
        }
        Ok(g)
    }

    /// Graph from adjacency rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(|r| r.len()).sum::<usize>() / 2;
        debug_assert!((0..n).all(|v| !adj[v].contains(v)));
        debug_assert!((0..n).all(|v| adj[v].iter().all(|w| adj[w].contains(v))));
        Graph { n, adj, m }
    }

    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        if !self.adj[a].contains(b) {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
            self.m += 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Union of open neighbourhoods of `s`.
    pub fn open_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Union of closed neighbourhoods of `s`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        self.open_neighborhood_of(s).union(s)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    /// Edges in increasing normalized order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().map(|e| (e.u, e.v)).collect()
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v].is_empty())
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n && self.is_connected()
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut seen = VertexSet::singleton(src);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.open_neighborhood_of(frontier).difference(seen);
            for v in next {
                dist[v] = Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    /// All-pairs distance matrix; `None` between components.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|v| self.distances_from(v)).collect()
    }

    /// Diameter, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Vertex adjacent to every other vertex, if any.
    pub fn universal_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) + 1 == self.n)
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        let mut new_index = vec![0; self.n];
        for (i, &old) in order.iter().enumerate() {
            new_index[old] = i;
        }
        let adj = order
            .iter()
            .map(|&old| self.adj[old].iter().map(|w| new_index[w]).collect())
            .collect();
        Graph {
            n: self.n,
            adj,
            m: self.m,
        }
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| self.adj[v].complement(self.n).without(v))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Copy of `self` with `extra` new isolated vertices appended.
    fn grown(&self, extra: usize) -> Result<Graph> {
        let n = self.n + extra;
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, cap: MAX_ORDER });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, VertexSet::EMPTY);
        Ok(Graph { n, adj, m: self.m })
    }

    fn remove_edge_unchecked(&mut self, a: usize, b: usize) {
        self.adj[a].remove(b);
        self.adj[b].remove(a);
        self.m -= 1;
    }

    /// Replaces edge `e = uv` by the path `u, x1, .., xt, v`. The new vertices
    /// get indices `n .. n+t-1` in path order; original indices are unchanged.
    pub fn subdivide(&self, e: Edge, t: usize) -> Result<Graph> {
        self.subdivide_each(&[(e, t)])
    }

    /// Subdivides several distinct edges at once; new vertices are appended
    /// edge by edge in the order given.
    pub fn subdivide_each(&self, plan: &[(Edge, usize)]) -> Result<Graph> {
        for &(e, _) in plan {
            if !self.has_edge(e.u, e.v) {
                return Err(Error::EdgeNotPresent(e));
            }
        }
        let extra = plan.iter().map(|&(_, t)| t).sum();
        let mut g = self.grown(extra)?;
        let mut next = self.n;
        for &(e, t) in plan {
            if t == 0 {
                continue;
            }
            if !g.has_edge(e.u, e.v) {
                // listed twice
                return Err(Error::EdgeNotPresent(e));
            }
            g.remove_edge_unchecked(e.u, e.v);
            let mut prev = e.u;
            for x in next..next + t {
                g.add_edge_unchecked(prev, x);
                prev = x;
            }
            g.add_edge_unchecked(prev, e.v);
            next += t;
        }
        Ok(g)
    }

    /// Subdivides every edge of `edges` exactly once.
    pub fn subdivide_once(&self, edges: &[Edge]) -> Result<Graph> {
        let plan: Vec<_> = edges.iter().map(|&e| (e, 1)).collect();
        self.subdivide_each(&plan)
    }

    /// Graph with a new vertex appended and joined to every vertex of `nbrs`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let mut g = self.grown(1)?;
        let x = self.n;
        for w in nbrs {
            g.add_edge_unchecked(x, w);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Private neighbourhood `PN[u, D] = N[u] - N[D - {u}]`.
pub fn private_neighborhood(g: &Graph, u: usize, d: VertexSet) -> Result<VertexSet> {
    if !d.contains(u) {
        return Err(Error::NotInSet(u));
    }
    Ok(private_neighborhood_unchecked(g, u, d))
}

#[inline]
pub(crate) fn private_neighborhood_unchecked(g: &Graph, u: usize, d: VertexSet) -> VertexSet {
    g.closed_neighbors(u)
        .difference(g.closed_neighborhood_of(d.without(u)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_star: bool,
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub strong_supports: VertexSet,
    pub pendant_edges: Vec<Edge>,
    pub inner_edges: Vec<Edge>,
    pub diameter: Option<usize>,
}

pub fn structure_profile(g: &Graph) -> StructureProfile {
    let leaves = g.leaves();
    let mut supports = VertexSet::EMPTY;
    let mut strong_supports = VertexSet::EMPTY;
    for v in 0..g.n() {
        match g.neighbors(v).intersection(leaves).len() {
            0 => {}
            1 => supports.insert(v),
            _ => {
                supports.insert(v);
                strong_supports.insert(v);
            }
        }
    }
    let (pendant_edges, inner_edges) = g
        .edges()
        .into_iter()
        .partition(|e| leaves.contains(e.u) || leaves.contains(e.v));
    let is_connected = g.is_connected();
    let is_tree = is_connected && g.m() + 1 == g.n();
    StructureProfile {
        is_connected,
        is_tree,
        is_star: is_star(g),
        leaves,
        supports,
        strong_supports,
        pendant_edges,
        inner_edges,
        diameter: g.diameter(),
    }
}

/// `K_{1,k}` with `k >= 1`.
pub fn is_star(g: &Graph) -> bool {
    g.n() >= 2 && g.is_tree() && g.universal_vertex().is_some()
}

/// Edges of `g` not incident to a leaf.
pub fn inner_edges(g: &Graph) -> Vec<Edge> {
    let leaves = g.leaves();
    g.edges()
        .into_iter()
        .filter(|e| !leaves.contains(e.u) && !leaves.contains(e.v))
        .collect()
}

pub mod named {
    //! Standard small graphs.

    use super::*;

    const GSTAR_EDGES: [(usize, usize); 15] = [
        (0, 1),
        (0, 2),
        (1, 2),
        (3, 4),
        (3, 5),
        (4, 5),
        (0, 6),
        (6, 7),
        (7, 3),
        (1, 8),
        (8, 9),
        (9, 4),
        (2, 10),
        (10, 11),
        (11, 5),
    ];

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("path order within cap")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle order within cap")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::from_edge_list(n, &edges).expect("complete order within cap")
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges).expect("star order within cap")
    }

    /// Wheel on `n` vertices: hub 0 joined to the cycle `1..n-1`.
    pub fn wheel(n: usize) -> Graph {
        assert!(n >= 4);
        let rim = n - 1;
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        for i in 0..rim {
            edges.push((1 + i, 1 + (i + 1) % rim));
        }
        Graph::from_edge_list(n, &edges).expect("wheel order within cap")
    }

    /// Two triangles `{0,1,2}` and `{3,4,5}` joined by the three paths
    /// `0-6-7-3`, `1-8-9-4` and `2-10-11-5`.
    pub fn gstar() -> Graph {
        Graph::from_edge_list(12, &GSTAR_EDGES).expect("fixture is valid")
    }
}
