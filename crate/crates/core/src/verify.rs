//! Exhaustive theorem sweeps over enumerated graphs and trees.
//!
//! A sweep materialises every graph of the relevant orders in canonical
//! order, evaluates the theorem's predicate on each (in parallel, collected
//! in input order) and reports the graphs where it fails.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::characterization::{
    lemma14_sufficient_sd_gt_one, lemma2_sufficient, longest_path_ends_hold, predicts_sd_one,
};
use crate::domination::{gamma_t_value, is_total_dominating};
use crate::enumerate::{enumerate_connected_graphs, enumerate_trees, MAX_CONNECTED_ORDER, MAX_TREE_ORDER};
use crate::error::{Error, Result};
use crate::family::{generate_family, FamilyIndex};
use crate::graph::{named, structure_profile, Graph};
use crate::io::to_graph6;
use crate::subdivision::{msd_gamma_t_with, sd_gamma_t_with, ValueCache, DEFAULT_MSD_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    MsdLe3,
    TreeSdEqMsd,
    FamilySd3,
    Sd1Characterization,
    BcMinimum,
    StrongSupport,
    UniversalVertex,
    PathCycleFormulas,
    Lemma2Implies,
    Lemma14Implies,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::MsdLe3,
        Theorem::TreeSdEqMsd,
        Theorem::FamilySd3,
        Theorem::Sd1Characterization,
        Theorem::BcMinimum,
        Theorem::StrongSupport,
        Theorem::UniversalVertex,
        Theorem::PathCycleFormulas,
        Theorem::Lemma2Implies,
        Theorem::Lemma14Implies,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::MsdLe3 => "msd-le-3",
            Theorem::TreeSdEqMsd => "tree-sd-eq-msd",
            Theorem::FamilySd3 => "family-sd3",
            Theorem::Sd1Characterization => "sd1-characterization",
            Theorem::BcMinimum => "bc-minimum",
            Theorem::StrongSupport => "strong-support",
            Theorem::UniversalVertex => "universal-vertex",
            Theorem::PathCycleFormulas => "path-cycle-formulas",
            Theorem::Lemma2Implies => "lemma2-implies",
            Theorem::Lemma14Implies => "lemma14-implies",
        }
    }

    /// Smallest order swept.
    pub fn min_order(self) -> usize {
        match self {
            Theorem::MsdLe3 => 2,
            Theorem::FamilySd3 | Theorem::BcMinimum => 6,
            _ => 3,
        }
    }

    /// Order bound used when none is given; each finishes in a few minutes
    /// on one core.
    pub fn default_n_max(self) -> usize {
        match self {
            Theorem::MsdLe3 | Theorem::UniversalVertex => 7,
            Theorem::Sd1Characterization | Theorem::Lemma2Implies | Theorem::Lemma14Implies => 12,
            Theorem::PathCycleFormulas => 16,
            _ => 14,
        }
    }

    /// Largest order the generators can supply.
    pub fn max_n_max(self) -> usize {
        match self {
            Theorem::MsdLe3 | Theorem::UniversalVertex => MAX_CONNECTED_ORDER,
            Theorem::PathCycleFormulas => 32,
            _ => MAX_TREE_ORDER,
        }
    }

    /// Whether the sweep is over trees only.
    pub fn trees_only(self) -> bool {
        !matches!(
            self,
            Theorem::MsdLe3 | Theorem::UniversalVertex | Theorem::PathCycleFormulas | Theorem::Lemma2Implies
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderRange {
    pub lo: usize,
    pub hi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub expected: String,
    pub actual: String,
}

/// Result of evaluating a theorem on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub graph6: String,
    pub order: usize,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub orders_checked: OrderRange,
    pub graphs_checked: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A finished sweep: the summary plus every per-graph outcome in sweep order.
#[derive(Clone, Debug)]
pub struct Sweep {
    pub report: VerificationReport,
    pub outcomes: Vec<Outcome>,
}

fn outcome(g: &Graph, expected: String, actual: String, pass: bool) -> Result<Outcome> {
    Ok(Outcome {
        graph6: to_graph6(g)?,
        order: g.n(),
        pass,
        expected,
        actual,
    })
}

fn show(v: Option<usize>, cap: usize) -> String {
    v.map_or_else(|| format!(">{cap}"), |v| v.to_string())
}

/// sd_γt and msd_γt with complete search ranges.
fn sd_msd(g: &Graph, cache: &mut ValueCache) -> Result<(Option<usize>, Option<usize>)> {
    let sd = sd_gamma_t_with(g, g.m(), cache)?.value;
    let msd = msd_gamma_t_with(g, DEFAULT_MSD_CAP + 1, cache)?.value;
    Ok((sd, msd))
}

fn sd(g: &Graph, cache: &mut ValueCache) -> Result<Option<usize>> {
    Ok(sd_gamma_t_with(g, g.m(), cache)?.value)
}

/// The closed form shared by sd_γt and msd_γt of paths and cycles.
pub fn path_cycle_formula(n: usize) -> usize {
    match n % 4 {
        2 => 3,
        3 => 2,
        _ => 1,
    }
}

/// Per-sweep shared state built once before the parallel phase.
enum Context {
    None,
    Family(FamilyIndex),
}

/// Evaluates `theorem` on one graph; `None` when the graph is outside the
/// theorem's hypotheses.
fn check(theorem: Theorem, g: &Graph, ctx: &Context) -> Result<Option<Outcome>> {
    let mut cache = ValueCache::new();
    let n = g.n();
    if n < theorem.min_order() || !g.is_connected() || (theorem.trees_only() && !g.is_tree()) {
        return Ok(None);
    }
    let o = match theorem {
        Theorem::MsdLe3 => {
            let msd = msd_gamma_t_with(g, DEFAULT_MSD_CAP + 1, &mut cache)?.value;
            let pass = msd.is_some_and(|v| v <= 3);
            outcome(g, "<=3".into(), show(msd, DEFAULT_MSD_CAP + 1), pass)?
        }
        Theorem::TreeSdEqMsd => {
            let (sd, msd) = sd_msd(g, &mut cache)?;
            outcome(
                g,
                show(msd, DEFAULT_MSD_CAP + 1),
                show(sd, g.m()),
                sd.is_some() && sd == msd,
            )?
        }
        Theorem::FamilySd3 => {
            let Context::Family(index) = ctx else {
                unreachable!("family sweeps carry an index")
            };
            let member = index.contains(g)?;
            let sd = sd(g, &mut cache)?;
            let expected = if member { "3" } else { "!=3" };
            outcome(g, expected.into(), show(sd, g.m()), member == (sd == Some(3)))?
        }
        Theorem::Sd1Characterization => {
            let predicted = predicts_sd_one(g)?;
            let sd = sd(g, &mut cache)?;
            let expected = if predicted { "1" } else { "!=1" };
            outcome(g, expected.into(), show(sd, g.m()), predicted == (sd == Some(1)))?
        }
        Theorem::BcMinimum => unreachable!("family members are checked by check_member"),
        Theorem::StrongSupport => {
            let msd = msd_gamma_t_with(g, DEFAULT_MSD_CAP, &mut cache)?.value;
            if msd != Some(3) {
                return Ok(None);
            }
            let strong = structure_profile(g).strong_supports;
            let ends = longest_path_ends_hold(g)?;
            let actual = format!("strong_supports={strong} longest_path_ends={ends}");
            outcome(
                g,
                "strong_supports={} longest_path_ends=true".into(),
                actual,
                strong.is_empty() && ends,
            )?
        }
        Theorem::UniversalVertex => {
            if g.universal_vertex().is_none() {
                return Ok(None);
            }
            let msd = msd_gamma_t_with(g, DEFAULT_MSD_CAP + 1, &mut cache)?.value;
            outcome(g, "2".into(), show(msd, DEFAULT_MSD_CAP + 1), msd == Some(2))?
        }
        Theorem::PathCycleFormulas => {
            let (sd, msd) = sd_msd(g, &mut cache)?;
            let f = Some(path_cycle_formula(n));
            outcome(
                g,
                format!("sd={} msd={}", n_str(f), n_str(f)),
                format!("sd={} msd={}", n_str(sd), n_str(msd)),
                sd == f && msd == f,
            )?
        }
        Theorem::Lemma2Implies => {
            if !lemma2_sufficient(g)? {
                return Ok(None);
            }
            let sd = sd(g, &mut cache)?;
            outcome(g, "1".into(), show(sd, g.m()), sd == Some(1))?
        }
        Theorem::Lemma14Implies => {
            if !lemma14_sufficient_sd_gt_one(g)? {
                return Ok(None);
            }
            let sd = sd(g, &mut cache)?;
            outcome(g, ">1".into(), show(sd, g.m()), sd != Some(1))?
        }
    };
    Ok(Some(o))
}

fn n_str(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |v| v.to_string())
}

fn check_member(t: &crate::family::LabeledTree) -> Result<Outcome> {
    let bc = t.bc_set();
    let gt = gamma_t_value(&t.tree)?;
    let td = is_total_dominating(&t.tree, bc);
    outcome(
        &t.tree,
        format!("|BC|={gt} total_dominating=true"),
        format!("|BC|={} total_dominating={td}", bc.len()),
        td && bc.len() == gt,
    )
}

fn check_range(theorem: Theorem, n_max: usize) -> Result<()> {
    let (lo, hi) = (theorem.min_order(), theorem.max_n_max());
    if !(lo..=hi).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            lo,
            hi,
        });
    }
    Ok(())
}

/// Graphs swept by `theorem` for orders `min_order..=n_max`.
fn stream(theorem: Theorem, n_max: usize) -> Result<Vec<Graph>> {
    let lo = theorem.min_order();
    let mut out = Vec::new();
    match theorem {
        Theorem::MsdLe3 | Theorem::UniversalVertex => {
            for n in lo..=n_max {
                out.extend(enumerate_connected_graphs(n)?);
            }
        }
        Theorem::PathCycleFormulas => {
            for n in lo..=n_max {
                out.push(named::path(n));
                out.push(named::cycle(n));
            }
        }
        Theorem::Lemma2Implies => {
            for n in lo..=n_max {
                out.extend(enumerate_trees(n)?);
            }
            for n in lo..=n_max.min(MAX_CONNECTED_ORDER) {
                out.extend(enumerate_connected_graphs(n)?.filter(|g| !g.is_tree()));
            }
        }
        _ => {
            for n in lo..=n_max {
                out.extend(enumerate_trees(n)?);
            }
        }
    }
    Ok(out)
}

fn run_in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn evaluate(theorem: Theorem, graphs: &[Graph], n_max: usize, jobs: Option<usize>) -> Result<Vec<Outcome>> {
    let ctx = match theorem {
        Theorem::FamilySd3 => Context::Family(FamilyIndex::new(n_max)),
        _ => Context::None,
    };
    let results: Vec<Result<Option<Outcome>>> = run_in_pool(jobs, || {
        graphs.par_iter().map(|g| check(theorem, g, &ctx)).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn assemble(theorem: Theorem, range: OrderRange, outcomes: Vec<Outcome>, start: Instant) -> Sweep {
    let failures = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| Failure {
            graph6: o.graph6.clone(),
            expected: o.expected.clone(),
            actual: o.actual.clone(),
        })
        .collect();
    Sweep {
        report: VerificationReport {
            theorem_id: theorem.id().to_string(),
            orders_checked: range,
            graphs_checked: outcomes.len(),
            failures,
            elapsed: Some(start.elapsed().as_secs_f64()),
        },
        outcomes,
    }
}

/// Runs the sweep for `theorem` over orders up to `n_max` on `jobs` worker
/// threads (the global pool when `None`).
pub fn sweep(theorem: Theorem, n_max: usize, jobs: Option<usize>) -> Result<Sweep> {
    check_range(theorem, n_max)?;
    let start = Instant::now();
    let range = OrderRange {
        lo: theorem.min_order(),
        hi: n_max,
    };
    let outcomes = if theorem == Theorem::BcMinimum {
        let members = generate_family(n_max);
        let results: Vec<Result<Outcome>> =
            run_in_pool(jobs, || members.par_iter().map(check_member).collect());
        results.into_iter().collect::<Result<_>>()?
    } else {
        evaluate(theorem, &stream(theorem, n_max)?, n_max, jobs)?
    };
    Ok(assemble(theorem, range, outcomes, start))
}

pub fn verify(theorem: Theorem, n_max: usize, jobs: Option<usize>) -> Result<VerificationReport> {
    Ok(sweep(theorem, n_max, jobs)?.report)
}

/// Runs `theorem` on caller-supplied graphs; graphs outside its hypotheses
/// are skipped. `bc-minimum` needs labelled members and is rejected.
pub fn sweep_graphs(theorem: Theorem, graphs: &[Graph], jobs: Option<usize>) -> Result<Sweep> {
    if theorem == Theorem::BcMinimum {
        return Err(Error::MalformedInput(
            "bc-minimum runs on generated family members only".into(),
        ));
    }
    let start = Instant::now();
    let n_hi = graphs.iter().map(Graph::n).max().unwrap_or(0);
    let n_lo = graphs.iter().map(Graph::n).min().unwrap_or(0);
    let index_order = if theorem == Theorem::FamilySd3 {
        let hi = graphs
            .iter()
            .filter(|g| g.is_tree())
            .map(Graph::n)
            .max()
            .unwrap_or(6);
        if hi > MAX_TREE_ORDER {
            return Err(Error::OutOfRange {
                what: "tree order",
                value: hi,
                lo: 3,
                hi: MAX_TREE_ORDER,
            });
        }
        hi.max(6)
    } else {
        n_hi
    };
    let outcomes = evaluate(theorem, graphs, index_order, jobs)?;
    Ok(assemble(
        theorem,
        OrderRange { lo: n_lo, hi: n_hi },
        outcomes,
        start,
    ))
}
