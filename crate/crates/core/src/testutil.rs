//! Brute-force oracles for unit tests. Deliberately naive: full power-set
//! scans with no pruning, sharing nothing with the search code.

use rand::Rng;

use crate::graph::Graph;

fn dominated_by(g: &Graph, mask: u64, closed: bool) -> bool {
    (0..g.n()).all(|v| {
        (closed && mask >> v & 1 == 1) || g.neighbors(v).iter().any(|w| mask >> w & 1 == 1)
    })
}

pub fn naive_gamma(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&m| dominated_by(g, m, true))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn naive_gamma_t(g: &Graph) -> Option<usize> {
    (0u64..1 << g.n())
        .filter(|&m| dominated_by(g, m, false))
        .map(|m| m.count_ones() as usize)
        .min()
}

pub fn naive_min_tds(g: &Graph) -> Vec<u64> {
    let Some(k) = naive_gamma_t(g) else {
        return Vec::new();
    };
    (0u64..1 << g.n())
        .filter(|&m| m.count_ones() as usize == k && dominated_by(g, m, false))
        .collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}
