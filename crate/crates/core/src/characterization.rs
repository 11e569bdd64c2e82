//! Deciding sd_γt(T) = 1 for trees from the structure of their minimum
//! total dominating sets, plus the two one-sided sufficient conditions.
//!
//! Every quantifier over minimum total dominating sets is evaluated against
//! the complete list from [`all_min_total_dominating_sets`].

use serde::Serialize;

use crate::domination::{all_min_total_dominating_sets, membership_from_sets, Membership};
use crate::error::{Error, Result};
use crate::graph::{inner_edges, private_neighborhood_unchecked as pn, Edge, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeConditionReport {
    pub edge: Edge,
    pub holds: bool,
    /// A minimum total dominating set violating the condition.
    pub failing_set: Option<VertexSet>,
}

/// Which branch of the characterization fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "branch")]
pub enum Branch {
    Leaf { vertex: usize },
    InnerEdge { edge: Edge },
    None,
}

/// How the two selectors `N(u)∩D = {v}` and `N(v)∩D = {u}` combine when
/// both endpoints of the edge are in `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectorPolicy {
    /// Some selector holds and its own requirement is met.
    EitherBranch,
    /// Some selector holds and every selector that holds has its
    /// requirement met.
    EveryBranch,
}

pub const DEFAULT_SELECTOR_POLICY: SelectorPolicy = SelectorPolicy::EitherBranch;

fn check_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 3 {
        return Err(Error::TooSmall(t.n()));
    }
    Ok(())
}

/// Minimum total dominating sets and per-vertex membership of a graph,
/// computed once and shared by the predicates below.
pub struct MinSets<'g> {
    g: &'g Graph,
    sets: Vec<VertexSet>,
    membership: Vec<Membership>,
}

impl<'g> MinSets<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        let sets = all_min_total_dominating_sets(g)?;
        let membership = membership_from_sets(g.n(), &sets);
        Ok(MinSets { g, sets, membership })
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn membership(&self) -> &[Membership] {
        &self.membership
    }

    fn leaf_in_no_set(&self) -> Option<usize> {
        self.g
            .leaves()
            .iter()
            .find(|&u| self.membership[u].in_none)
    }

    fn edge_report(&self, e: Edge, policy: SelectorPolicy) -> EdgeConditionReport {
        let failing_set = self
            .sets
            .iter()
            .copied()
            .find(|&d| !edge_condition(self.g, e, d, policy));
        EdgeConditionReport {
            edge: e,
            holds: failing_set.is_none(),
            failing_set,
        }
    }

    fn branch(&self, policy: SelectorPolicy) -> Branch {
        if let Some(u) = self.leaf_in_no_set() {
            return Branch::Leaf { vertex: u };
        }
        for e in inner_edges(self.g) {
            if self.edge_report(e, policy).holds {
                return Branch::InnerEdge { edge: e };
            }
        }
        Branch::None
    }
}

/// `N(u) ∩ D = {v}` must leave `u` a private neighbour, and `v` either a
/// private neighbour or a D-neighbour `x ≠ u` whose only D-neighbour is `v`.
fn selector_requirement(g: &Graph, u: usize, v: usize, d: VertexSet) -> bool {
    !pn(g, u, d).is_empty()
        && (!pn(g, v, d).is_empty()
            || g
                .neighbors(v)
                .intersection(d)
                .without(u)
                .iter()
                .any(|x| g.neighbors(x).intersection(d) == VertexSet::singleton(v)))
}

/// The per-set clause of the inner-edge condition for the edge `uv`.
fn edge_condition(g: &Graph, e: Edge, d: VertexSet, policy: SelectorPolicy) -> bool {
    let (u, v) = (e.u, e.v);
    match (d.contains(u), d.contains(v)) {
        (false, false) => true,
        (true, false) => pn(g, u, d).contains(v),
        (false, true) => pn(g, v, d).contains(u),
        (true, true) => {
            let sel_u = g.neighbors(u).intersection(d) == VertexSet::singleton(v);
            let sel_v = g.neighbors(v).intersection(d) == VertexSet::singleton(u);
            match policy {
                SelectorPolicy::EitherBranch => {
                    (sel_u && selector_requirement(g, u, v, d))
                        || (sel_v && selector_requirement(g, v, u, d))
                }
                SelectorPolicy::EveryBranch => {
                    (sel_u || sel_v)
                        && (!sel_u || selector_requirement(g, u, v, d))
                        && (!sel_v || selector_requirement(g, v, u, d))
                }
            }
        }
    }
}

/// A leaf lying in no minimum total dominating set (smallest index).
pub fn leaf_condition(t: &Graph) -> Result<Option<usize>> {
    check_tree(t)?;
    Ok(MinSets::new(t)?.leaf_in_no_set())
}

pub fn inner_edge_condition(t: &Graph, e: Edge) -> Result<EdgeConditionReport> {
    inner_edge_condition_with(t, e, DEFAULT_SELECTOR_POLICY)
}

pub fn inner_edge_condition_with(
    t: &Graph,
    e: Edge,
    policy: SelectorPolicy,
) -> Result<EdgeConditionReport> {
    check_tree(t)?;
    if !inner_edges(t).contains(&e) {
        return Err(Error::NotInnerEdge(e));
    }
    Ok(MinSets::new(t)?.edge_report(e, policy))
}

/// The branch certifying sd_γt(T) = 1, or `Branch::None`.
pub fn characterize(t: &Graph) -> Result<Branch> {
    characterize_with(t, DEFAULT_SELECTOR_POLICY)
}

pub fn characterize_with(t: &Graph, policy: SelectorPolicy) -> Result<Branch> {
    check_tree(t)?;
    Ok(MinSets::new(t)?.branch(policy))
}

pub fn predicts_sd_one(t: &Graph) -> Result<bool> {
    Ok(characterize(t)? != Branch::None)
}

/// An end vertex in no minimum total dominating set, or an inner edge
/// whose endpoints are both in none. Either forces sd_γt = 1.
pub fn lemma2_sufficient(g: &Graph) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let ms = MinSets::new(g)?;
    let none = |v: usize| ms.membership[v].in_none;
    Ok(ms.leaf_in_no_set().is_some() || inner_edges(g).iter().any(|e| none(e.u) && none(e.v)))
}

/// One endpoint in `D`, and the other is not its private neighbour.
fn clause_a(g: &Graph, e: Edge, d: VertexSet) -> bool {
    match (d.contains(e.u), d.contains(e.v)) {
        (true, false) => !pn(g, e.u, d).contains(e.v),
        (false, true) => !pn(g, e.v, d).contains(e.u),
        _ => false,
    }
}

/// `N(u) ∩ D = {v}` and removing `u` (or `v`) keeps `D` total dominating
/// after the edge is subdivided.
fn clause_b_branch(g: &Graph, u: usize, v: usize, d: VertexSet) -> bool {
    g.neighbors(u).intersection(d) == VertexSet::singleton(v)
        && (pn(g, u, d).is_empty()
            || (pn(g, v, d).is_empty()
                && g
                    .neighbors(v)
                    .intersection(d)
                    .without(u)
                    .iter()
                    .all(|x| g.neighbors(x).intersection(d).len() >= 2)))
}

fn clause_b(g: &Graph, e: Edge, d: VertexSet) -> bool {
    let (u, v) = (e.u, e.v);
    if !(d.contains(u) && d.contains(v)) {
        return false;
    }
    let b1 = g.neighbors(u).intersection(d).len() >= 2 && g.neighbors(v).intersection(d).len() >= 2;
    b1 || clause_b_branch(g, u, v, d) || clause_b_branch(g, v, u, d)
}

/// Every end vertex lies in some minimum total dominating set and every
/// inner edge has a minimum set meeting clause a) or b). Forces sd_γt > 1.
pub fn lemma14_sufficient_sd_gt_one(t: &Graph) -> Result<bool> {
    check_tree(t)?;
    let ms = MinSets::new(t)?;
    if ms.leaf_in_no_set().is_some() {
        return Ok(false);
    }
    Ok(inner_edges(t).into_iter().all(|e| {
        ms.sets
            .iter()
            .any(|&d| clause_a(t, e, d) || clause_b(t, e, d))
    }))
}

/// Vertex sequences of every longest path, one per unordered pair of ends
/// (listed from the smaller end), pairs in lexicographic order.
pub fn longest_paths(t: &Graph) -> Result<Vec<Vec<usize>>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let dist = t.distance_matrix();
    let diam = t.diameter().expect("trees are connected");
    let mut out = Vec::new();
    for a in 0..t.n() {
        for b in a + 1..t.n() {
            if dist[a][b] == Some(diam) {
                out.push(tree_path(t, &dist, a, b));
            }
        }
    }
    Ok(out)
}

/// Longest path between the lexicographically smallest pair of ends.
pub fn longest_path(t: &Graph) -> Result<Vec<usize>> {
    Ok(longest_paths(t)?.swap_remove(0))
}

fn tree_path(t: &Graph, dist: &[Vec<Option<usize>>], a: usize, b: usize) -> Vec<usize> {
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        cur = t
            .neighbors(cur)
            .iter()
            .find(|&w| dist[w][b] < dist[cur][b])
            .expect("a neighbour is closer to b");
        path.push(cur);
    }
    path
}

/// On every longest path `v0 .. vl` read from either end, `v1` and `v2`
/// have degree 2 and `v3` is not a support vertex.
pub fn longest_path_ends_hold(t: &Graph) -> Result<bool> {
    let leaves = t.leaves();
    let is_support = |v: usize| !t.neighbors(v).is_disjoint(leaves);
    for p in longest_paths(t)? {
        if p.len() < 6 {
            continue;
        }
        let rev: Vec<usize> = p.iter().rev().copied().collect();
        for q in [&p, &rev] {
            if t.degree(q[1]) != 2 || t.degree(q[2]) != 2 || is_support(q[3]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
