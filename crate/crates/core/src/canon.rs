//! Canonical codes for isomorphism-free enumeration.
//!
//! Trees are encoded by the AHU parenthesis string rooted at their centre
//! (or at their central edge). Other graphs go through colour refinement
//! seeded with degree and distance profiles, followed by backtracking over
//! individualisations of the first non-singleton cell; the code is the
//! smallest adjacency string reached at a discrete partition.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CANON_CAP: usize = 16;

const TREE_TAG: u8 = b'T';
const GENERAL_TAG: u8 = b'G';

/// Code that is equal for two graphs iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    canonical_code_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_code_with_cap(g: &Graph, cap: usize) -> Result<Vec<u8>> {
    Ok(canonical_form_with_cap(g, cap)?.0)
}

/// Canonical code together with the canonically relabelled graph.
pub fn canonical_form(g: &Graph) -> Result<(Vec<u8>, Graph)> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<(Vec<u8>, Graph)> {
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    let (code, order) = if g.is_tree() {
        tree_code(g, None)
    } else {
        general_code(g)
    };
    Ok((code, g.permuted(&order)))
}

/// Code of a tree whose vertices carry labels; equal iff there is a
/// label-preserving isomorphism.
pub fn labeled_tree_code(g: &Graph, labels: &[u8]) -> Result<Vec<u8>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    assert_eq!(labels.len(), g.n());
    Ok(tree_code(g, Some(labels)).0)
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for w in g.neighbors(leaf) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU string of the subtree at `root` away from `parent`, with the
/// preorder that lists children by increasing code.
fn rooted(g: &Graph, root: usize, parent: Option<usize>, labels: Option<&[u8]>) -> (Vec<u8>, Vec<usize>) {
    let mut kids: Vec<(Vec<u8>, Vec<usize>)> = g
        .neighbors(root)
        .iter()
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted(g, w, Some(root), labels))
        .collect();
    kids.sort();
    let mut code = vec![b'('];
    if let Some(l) = labels {
        code.push(l[root]);
    }
    let mut order = vec![root];
    for (c, o) in kids {
        code.extend_from_slice(&c);
        order.extend(o);
    }
    code.push(b')');
    (code, order)
}

fn tree_code(g: &Graph, labels: Option<&[u8]>) -> (Vec<u8>, Vec<usize>) {
    let mut code = vec![TREE_TAG, g.n() as u8];
    let centers = tree_centers(g);
    match centers[..] {
        [c] => {
            let (body, order) = rooted(g, c, None, labels);
            code.extend(body);
            (code, order)
        }
        [a, b] => {
            let mut sides = [rooted(g, a, Some(b), labels), rooted(g, b, Some(a), labels)];
            sides.sort();
            let [(c1, o1), (c2, o2)] = sides;
            code.push(b'[');
            code.extend(c1);
            code.extend(c2);
            code.push(b']');
            let mut order = o1;
            order.extend(o2);
            (code, order)
        }
        _ => unreachable!("a tree has one or two centres"),
    }
}

/// Stable ranks of `keys`: equal keys share a rank, ranks follow key order.
fn ranks<K: Ord + Clone>(keys: &[K]) -> (Vec<usize>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let r = keys
        .iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect();
    (r, sorted.len())
}

struct Refiner<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Refiner<'_> {
    /// Splits cells by the multiset of neighbour colours until stable.
    fn refine(&self, colors: &mut Vec<usize>, mut count: usize) -> usize {
        let n = self.g.n();
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = self.g.neighbors(v).iter().map(|w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let (next, next_count) = ranks(&sigs);
            *colors = next;
            if next_count == count {
                return count;
            }
            count = next_count;
        }
    }

    fn search(&mut self, colors: Vec<usize>, count: usize) {
        let n = self.g.n();
        if count == n {
            let mut order = vec![0; n];
            for v in 0..n {
                order[colors[v]] = v;
            }
            let code = adjacency_code(self.g, &order);
            if self.best.as_ref().map_or(true, |(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        }
        let mut size = vec![0usize; count];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..count).find(|&c| size[c] > 1).expect("non-discrete partition");
        for v in (0..n).filter(|&v| colors[v] == target) {
            let mut next: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + usize::from(c == target && w != v))
                .collect();
            let (r, k) = ranks(&next);
            next = r;
            let k = self.refine(&mut next, k);
            self.search(next, k);
        }
    }
}

fn adjacency_code(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = g.n();
    let mut code = vec![GENERAL_TAG, n as u8];
    let mut byte = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | u8::from(g.has_edge(order[i], order[j]));
            nbits += 1;
            if nbits == 8 {
                code.push(byte);
                byte = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        code.push(byte << (8 - nbits));
    }
    code
}

fn general_code(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let n = g.n();
    // degree, then how many vertices sit at each distance (n = unreachable)
    let keys: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut profile = vec![0usize; n + 1];
            for d in g.distances_from(v) {
                profile[d.unwrap_or(n)] += 1;
            }
            (g.degree(v), profile)
        })
        .collect();
    let (mut colors, count) = ranks(&keys);
    let mut r = Refiner { g, best: None };
    let count = r.refine(&mut colors, count);
    r.search(colors, count);
    r.best.expect("at least one leaf")
}
