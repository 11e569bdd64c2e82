//! Exact domination and total domination numbers.
//!
//! Both problems use the same branching scheme: pick the undominated vertex
//! with the fewest admissible dominators and branch on which of them joins
//! the set, excluding earlier siblings so each set is produced at most once.
//! The search runs with a budget that grows from a counting lower bound, so
//! the first budget that succeeds is the optimum.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_star, Graph};
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`all_min_total_dominating_sets`].
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationKind {
    Domination,
    TotalDomination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub value: usize,
    pub witness: VertexSet,
    pub kind: DominationKind,
}

/// Every vertex, members included, has a neighbour in `s`.
pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    g.open_neighborhood_of(s) == g.vertices()
}

/// Every vertex outside `s` has a neighbour in `s`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of(s) == g.vertices()
}

struct Search {
    /// `cover[w]`: vertices dominated when `w` joins the set.
    cover: Vec<u64>,
    max_cover: usize,
}

impl Search {
    fn new(g: &Graph, kind: DominationKind) -> Self {
        let cover: Vec<u64> = (0..g.n())
            .map(|v| match kind {
                DominationKind::TotalDomination => g.neighbors(v).bits(),
                DominationKind::Domination => g.closed_neighbors(v).bits(),
            })
            .collect();
        let max_cover = cover.iter().map(|c| c.count_ones() as usize).max().unwrap_or(0);
        Search { cover, max_cover }
    }

    fn lower_bound(&self, n: usize, kind: DominationKind) -> usize {
        let lb = n.div_ceil(self.max_cover.max(1));
        match kind {
            DominationKind::TotalDomination => lb.max(2),
            DominationKind::Domination => lb.max(1),
        }
    }

    /// Visits sets `chosen ∪ X` with `|X| <= budget` that dominate
    /// everything, avoiding `excluded`. `visit` returns `false` to stop;
    /// the return value is `false` iff the walk was stopped.
    fn walk(
        &self,
        undominated: u64,
        chosen: u64,
        excluded: u64,
        budget: usize,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if undominated == 0 {
            return visit(VertexSet::from_bits(chosen));
        }
        if budget == 0 || undominated.count_ones() as usize > budget * self.max_cover {
            return true;
        }
        // most constrained undominated vertex; `cover` is symmetric so the
        // dominators of v are exactly cover[v]
        let mut pick = 0u64;
        let mut pick_len = u32::MAX;
        let mut rest = undominated;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cand = self.cover[v] & !excluded;
            let len = cand.count_ones();
            if len < pick_len {
                pick = cand;
                pick_len = len;
                if len <= 1 {
                    break;
                }
            }
        }
        let mut excluded = excluded;
        let mut rest = pick;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !self.walk(
                undominated & !self.cover[w],
                chosen | 1 << w,
                excluded,
                budget - 1,
                visit,
            ) {
                return false;
            }
            excluded |= 1 << w;
        }
        true
    }

    fn feasible(&self, n: usize, forced_in: u64, forced_out: u64, budget: usize) -> bool {
        let mut dominated = 0u64;
        let mut rest = forced_in;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            dominated |= self.cover[w];
        }
        let undominated = VertexSet::full(n).bits() & !dominated;
        let mut found = false;
        self.walk(undominated, forced_in, forced_out, budget, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Smallest `k` admitting a dominating set avoiding `forced_out`.
    fn optimum(&self, n: usize, kind: DominationKind, forced_out: u64) -> Option<usize> {
        (self.lower_bound(n, kind)..=n).find(|&k| self.feasible(n, 0, forced_out, k))
    }

    /// Lexicographically smallest (by sorted members) set of size `k`
    /// avoiding `forced_out`; `k` must be the optimum under that restriction.
    fn lex_min(&self, n: usize, k: usize, mut forced_out: u64) -> VertexSet {
        let mut forced_in = 0u64;
        for v in 0..n {
            if forced_in.count_ones() as usize == k {
                break;
            }
            if forced_out >> v & 1 == 1 {
                continue;
            }
            let with_v = forced_in | 1 << v;
            if self.feasible(n, with_v, forced_out, k - forced_in.count_ones() as usize - 1) {
                forced_in = with_v;
            } else {
                forced_out |= 1 << v;
            }
        }
        VertexSet::from_bits(forced_in)
    }
}

fn check_total(g: &Graph) -> Result<()> {
    match g.isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// γt(g) without a witness.
pub fn gamma_t_value(g: &Graph) -> Result<usize> {
    check_total(g)?;
    let s = Search::new(g, DominationKind::TotalDomination);
    Ok(s
        .optimum(g.n(), DominationKind::TotalDomination, 0)
        .expect("V(g) is total dominating without isolated vertices"))
}

/// γ(g) without a witness.
pub fn gamma_value(g: &Graph) -> usize {
    let s = Search::new(g, DominationKind::Domination);
    s.optimum(g.n(), DominationKind::Domination, 0)
        .expect("V(g) is dominating")
}

/// γt(g) with the lexicographically smallest minimum total dominating set.
pub fn gamma_t(g: &Graph) -> Result<DominationCertificate> {
    let value = gamma_t_value(g)?;
    let s = Search::new(g, DominationKind::TotalDomination);
    Ok(DominationCertificate {
        value,
        witness: s.lex_min(g.n(), value, 0),
        kind: DominationKind::TotalDomination,
    })
}

/// γ(g) with the lexicographically smallest minimum dominating set.
pub fn gamma(g: &Graph) -> DominationCertificate {
    let value = gamma_value(g);
    let s = Search::new(g, DominationKind::Domination);
    DominationCertificate {
        value,
        witness: s.lex_min(g.n(), value, 0),
        kind: DominationKind::Domination,
    }
}

/// Every minimum total dominating set, sorted by member list.
pub fn all_min_total_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    all_min_total_dominating_sets_with_cap(g, DEFAULT_ENUMERATION_CAP)
}

pub fn all_min_total_dominating_sets_with_cap(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    let k = gamma_t_value(g)?;
    let s = Search::new(g, DominationKind::TotalDomination);
    let mut out = Vec::new();
    s.walk(g.vertices().bits(), 0, 0, k, &mut |set| {
        out.push(set);
        true
    });
    out.sort_by_key(|s| s.to_vec());
    Ok(out)
}

/// A minimum total dominating set containing no leaf. Exists whenever `g`
/// is connected and not a star.
pub fn gamma_t_set_avoiding_leaves(g: &Graph) -> Result<VertexSet> {
    if g.n() < 2 {
        return Err(Error::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if is_star(g) {
        return Err(Error::IsStar);
    }
    let value = gamma_t_value(g)?;
    let leaves = g.leaves().bits();
    let s = Search::new(g, DominationKind::TotalDomination);
    match s.optimum(g.n(), DominationKind::TotalDomination, leaves) {
        Some(k) if k == value => Ok(s.lex_min(g.n(), k, leaves)),
        _ => Err(Error::NotFound),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub in_some: bool,
    pub in_all: bool,
    pub in_none: bool,
}

/// Per vertex: does it lie in some, every, or no minimum total dominating set.
pub fn gamma_t_membership_profile(g: &Graph) -> Result<Vec<Membership>> {
    let sets = all_min_total_dominating_sets(g)?;
    Ok(membership_from_sets(g.n(), &sets))
}

pub(crate) fn membership_from_sets(n: usize, sets: &[VertexSet]) -> Vec<Membership> {
    let some = sets.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s));
    let all = sets.iter().fold(VertexSet::full(n), |a, &s| a.intersection(s));
    (0..n)
        .map(|v| Membership {
            in_some: some.contains(v),
            in_all: all.contains(v),
            in_none: !some.contains(v),
        })
        .collect()
}
