//! Subdivision and multisubdivision numbers for γ and γt.

use std::collections::HashMap;

use serde::Serialize;

use crate::canon::canonical_code_with_cap;
use crate::domination::{gamma, gamma_t, gamma_t_value, gamma_value};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_ORDER};
use crate::vertex_set::VertexSet;

/// Every connected graph of order at least two has msd_γt at most 3.
pub const DEFAULT_MSD_CAP: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    Gamma,
    GammaT,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    MsdGammaTEdge,
    MsdGammaT,
    SdGammaT,
    MsdGamma,
    SdGamma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionResult {
    pub invariant: Invariant,
    /// `None` when no increase happens within `cap`.
    pub value: Option<usize>,
    pub cap: usize,
    pub witness_edges: Vec<Edge>,
    /// Subdivisions applied to each witness edge.
    pub witness_t: Vec<usize>,
    pub base_value: usize,
    pub increased_value: Option<usize>,
    pub base_witness: VertexSet,
    pub increased_witness: Option<VertexSet>,
}

impl SubdivisionResult {
    pub fn exceeds_cap(&self) -> bool {
        self.value.is_none()
    }

    /// Graph obtained by applying the witness subdivision.
    pub fn witness_graph(&self, g: &Graph) -> Result<Option<Graph>> {
        if self.value.is_none() {
            return Ok(None);
        }
        let plan: Vec<_> = self
            .witness_edges
            .iter()
            .copied()
            .zip(self.witness_t.iter().copied())
            .collect();
        g.subdivide_each(&plan).map(Some)
    }
}

/// Memo of γ / γt values keyed by canonical code. Only trees are cached;
/// their codes are cheap compared to the search itself.
#[derive(Debug, Default, Clone)]
pub struct ValueCache {
    map: HashMap<(Parameter, Vec<u8>), usize>,
}

impl ValueCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn insert(&mut self, param: Parameter, code: Vec<u8>, value: usize) {
        self.map.insert((param, code), value);
    }

    pub fn entries(&self) -> impl Iterator<Item = (Parameter, &[u8], usize)> {
        self.map.iter().map(|((p, c), &v)| (*p, c.as_slice(), v))
    }

    pub fn value(&mut self, g: &Graph, param: Parameter) -> Result<usize> {
        if !g.is_tree() {
            return compute(g, param);
        }
        let code = canonical_code_with_cap(g, MAX_ORDER)?;
        let key = (param, code);
        if let Some(&v) = self.map.get(&key) {
            return Ok(v);
        }
        let v = compute(g, param)?;
        self.map.insert(key, v);
        Ok(v)
    }
}

fn compute(g: &Graph, param: Parameter) -> Result<usize> {
    match param {
        Parameter::Gamma => Ok(gamma_value(g)),
        Parameter::GammaT => gamma_t_value(g),
    }
}

fn witness(g: &Graph, param: Parameter) -> Result<VertexSet> {
    Ok(match param {
        Parameter::Gamma => gamma(g).witness,
        Parameter::GammaT => gamma_t(g)?.witness,
    })
}

fn require_connected(g: &Graph, min_order: usize) -> Result<()> {
    if g.n() < min_order {
        return Err(Error::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn finish(
    g: &Graph,
    invariant: Invariant,
    param: Parameter,
    cap: usize,
    base_value: usize,
    hit: Option<(usize, Vec<(Edge, usize)>, usize)>,
) -> Result<SubdivisionResult> {
    let base_witness = witness(g, param)?;
    Ok(match hit {
        Some((value, plan, increased)) => {
            let h = g.subdivide_each(&plan)?;
            SubdivisionResult {
                invariant,
                value: Some(value),
                cap,
                witness_edges: plan.iter().map(|p| p.0).collect(),
                witness_t: plan.iter().map(|p| p.1).collect(),
                base_value,
                increased_value: Some(increased),
                base_witness,
                increased_witness: Some(witness(&h, param)?),
            }
        }
        None => SubdivisionResult {
            invariant,
            value: None,
            cap,
            witness_edges: Vec::new(),
            witness_t: Vec::new(),
            base_value,
            increased_value: None,
            base_witness,
            increased_witness: None,
        },
    })
}

fn multi_edge(
    g: &Graph,
    e: Edge,
    param: Parameter,
    cap: usize,
    cache: &mut ValueCache,
) -> Result<SubdivisionResult> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::EdgeNotPresent(e));
    }
    require_connected(g, 2)?;
    let base = cache.value(g, param)?;
    let mut hit = None;
    for t in 1..=cap {
        let after = cache.value(&g.subdivide(e, t)?, param)?;
        if after > base {
            hit = Some((t, vec![(e, t)], after));
            break;
        }
    }
    finish(g, Invariant::MsdGammaTEdge, param, cap, base, hit)
}

fn multi(
    g: &Graph,
    invariant: Invariant,
    param: Parameter,
    cap: usize,
    cache: &mut ValueCache,
) -> Result<SubdivisionResult> {
    require_connected(g, 2)?;
    let base = cache.value(g, param)?;
    let edges = g.edges();
    let mut hit = None;
    'outer: for t in 1..=cap {
        for &e in &edges {
            let after = cache.value(&g.subdivide(e, t)?, param)?;
            if after > base {
                hit = Some((t, vec![(e, t)], after));
                break 'outer;
            }
        }
    }
    finish(g, invariant, param, cap, base, hit)
}

/// Advances `idx` to the next k-combination of `0..m` in lexicographic order.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

fn single(
    g: &Graph,
    invariant: Invariant,
    param: Parameter,
    cap: usize,
    cache: &mut ValueCache,
) -> Result<SubdivisionResult> {
    require_connected(g, 3)?;
    let base = cache.value(g, param)?;
    let edges = g.edges();
    let m = edges.len();
    let mut hit = None;
    'outer: for k in 1..=cap.min(m) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let chosen: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            let after = cache.value(&g.subdivide_once(&chosen)?, param)?;
            if after > base {
                hit = Some((k, chosen.into_iter().map(|e| (e, 1)).collect(), after));
                break 'outer;
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    finish(g, invariant, param, cap, base, hit)
}

/// Fewest subdivisions of `e` alone that raise γt, if at most `cap`.
pub fn msd_gamma_t_edge(g: &Graph, e: Edge, cap: usize) -> Result<SubdivisionResult> {
    multi_edge(g, e, Parameter::GammaT, cap, &mut ValueCache::new())
}

pub fn msd_gamma_t(g: &Graph, cap: usize) -> Result<SubdivisionResult> {
    msd_gamma_t_with(g, cap, &mut ValueCache::new())
}

pub fn msd_gamma_t_with(g: &Graph, cap: usize, cache: &mut ValueCache) -> Result<SubdivisionResult> {
    multi(g, Invariant::MsdGammaT, Parameter::GammaT, cap, cache)
}

/// Fewest distinct edges, each subdivided once, that raise γt.
/// `cap` bounds the subset size; `g.m()` makes the search complete.
pub fn sd_gamma_t(g: &Graph, cap: usize) -> Result<SubdivisionResult> {
    sd_gamma_t_with(g, cap, &mut ValueCache::new())
}

pub fn sd_gamma_t_with(g: &Graph, cap: usize, cache: &mut ValueCache) -> Result<SubdivisionResult> {
    single(g, Invariant::SdGammaT, Parameter::GammaT, cap, cache)
}

pub fn msd_gamma(g: &Graph, cap: usize) -> Result<SubdivisionResult> {
    msd_gamma_with(g, cap, &mut ValueCache::new())
}

pub fn msd_gamma_with(g: &Graph, cap: usize, cache: &mut ValueCache) -> Result<SubdivisionResult> {
    multi(g, Invariant::MsdGamma, Parameter::Gamma, cap, cache)
}

pub fn sd_gamma(g: &Graph, cap: usize) -> Result<SubdivisionResult> {
    sd_gamma_with(g, cap, &mut ValueCache::new())
}

pub fn sd_gamma_with(g: &Graph, cap: usize, cache: &mut ValueCache) -> Result<SubdivisionResult> {
    single(g, Invariant::SdGamma, Parameter::Gamma, cap, cache)
}
