//! Two-phase heuristic: pack every class on its own with a plain bin
//! packing algorithm at capacity `d - s_c`, then merge bins pairwise while
//! their union still fits.
//!
//! With an inner algorithm that is an α-approximation for bin packing the
//! result costs at most 2α times the optimum (instances whose items fit in
//! one bin excluded).

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exact::{exact_bpp, ExactConfig};
use crate::heuristics::{bpp_pack, decreasing_indices, Heuristic};
use crate::model::{Bin, Instance, Solution};

/// Bin packing algorithm used inside each class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InnerAlgorithm {
    Heuristic(Heuristic),
    Exact,
}

impl InnerAlgorithm {
    /// Absolute worst-case ratio of the inner algorithm on plain bin
    /// packing, used for reporting the `2α` bound. NF and NFD: 2; FF and
    /// BF: 17/10; FFD and BFD: 3/2; exact: 1.
    pub fn alpha(self) -> Ratio<u64> {
        match self {
            InnerAlgorithm::Exact => Ratio::from_integer(1),
            InnerAlgorithm::Heuristic(h) => match h {
                Heuristic::Nf | Heuristic::Nfd => Ratio::from_integer(2),
                Heuristic::Ff | Heuristic::Bf => Ratio::new(17, 10),
                Heuristic::Ffd | Heuristic::Bfd => Ratio::new(3, 2),
            },
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            InnerAlgorithm::Exact => "exact",
            InnerAlgorithm::Heuristic(h) => h.id(),
        }
    }
}

impl fmt::Display for InnerAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for InnerAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "exact" {
            return Ok(InnerAlgorithm::Exact);
        }
        s.parse().map(InnerAlgorithm::Heuristic)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoPhaseConfig {
    /// Largest class the exact inner algorithm accepts.
    pub exact_class_limit: usize,
    pub node_limit: u64,
}

impl Default for TwoPhaseConfig {
    fn default() -> Self {
        TwoPhaseConfig {
            exact_class_limit: 20,
            node_limit: ExactConfig::default().node_limit,
        }
    }
}

/// One merge: bins `a` and `b` were replaced by bin `merged` of load `load`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MergeEvent {
    pub a: usize,
    pub b: usize,
    pub merged: usize,
    pub load: u64,
}

/// Record of a two-phase run.
///
/// Phase-1 bins get ids `1..=k` in the order they are listed; each merge
/// creates the next id. Final bins are listed with their ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseTrace {
    pub phase1: Vec<Bin>,
    pub merges: Vec<MergeEvent>,
    pub final_bins: Vec<(usize, Bin)>,
}

impl PhaseTrace {
    /// Applies the merge log to the phase-1 bins and returns the surviving
    /// bins by id, checking every logged load against `instance`.
    pub fn replay(&self, instance: &Instance) -> Result<Vec<(usize, Bin)>> {
        let mut live: Vec<Option<Bin>> = std::iter::once(None)
            .chain(self.phase1.iter().cloned().map(Some))
            .collect();
        for ev in &self.merges {
            let mut take = |id: usize| {
                live.get_mut(id)
                    .and_then(Option::take)
                    .ok_or_else(|| Error::invalid(format!("merge refers to dead bin {id}")))
            };
            let union = take(ev.a)?.union(&take(ev.b)?);
            if ev.merged != live.len() {
                return Err(Error::invalid(format!(
                    "merge created id {} out of sequence",
                    ev.merged
                )));
            }
            let load = union.load(instance);
            if load != ev.load || load > instance.capacity {
                return Err(Error::invalid(format!(
                    "merge into {} logged load {} but union has load {load}",
                    ev.merged, ev.load
                )));
            }
            live.push(Some(union));
        }
        Ok(live
            .into_iter()
            .enumerate()
            .filter_map(|(id, b)| b.map(|b| (id, b)))
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPhaseResult {
    pub solution: Solution,
    pub trace: PhaseTrace,
    pub alpha: Ratio<u64>,
}

impl TwoPhaseResult {
    /// The `2α` guarantee.
    pub fn bound(&self) -> Ratio<u64> {
        self.alpha * 2
    }
}

/// Packs each class separately; every returned bin holds a single class.
/// Bins are listed class by class.
pub fn phase1(
    instance: &Instance,
    inner: InnerAlgorithm,
    config: &TwoPhaseConfig,
) -> Result<Vec<Bin>> {
    let mut bins = Vec::new();
    for c in 1..=instance.m() {
        let sub = instance.class_sub_instance(c);
        let local = match inner {
            InnerAlgorithm::Heuristic(h) => {
                let order: Vec<usize> = if h.is_decreasing() {
                    decreasing_indices(&sub.weights)
                } else {
                    (0..sub.weights.len()).collect()
                };
                bpp_pack(&sub.weights, sub.capacity, h.rule(), &order)?
            }
            InnerAlgorithm::Exact => {
                if sub.item_ids.len() > config.exact_class_limit {
                    return Err(Error::invalid(format!(
                        "class {c} has {} items, above the exact inner limit of {}",
                        sub.item_ids.len(),
                        config.exact_class_limit
                    )));
                }
                let exact = ExactConfig {
                    node_limit: config.node_limit,
                    max_items: config.exact_class_limit,
                };
                exact_bpp(&sub.weights, sub.capacity, &exact)?.bins
            }
        };
        bins.extend(
            local
                .into_iter()
                .map(|ks| Bin::new(ks.into_iter().map(|k| sub.item_ids[k]))),
        );
    }
    Ok(bins)
}

#[derive(Clone, Debug)]
struct Working {
    id: usize,
    bin: Bin,
    load: u64,
    classes: Vec<usize>,
}

fn union_load(instance: &Instance, a: &Working, b: &Working) -> u64 {
    let shared: u64 = a
        .classes
        .iter()
        .filter(|c| b.classes.binary_search(c).is_ok())
        .map(|&c| instance.class(c).setup_weight)
        .sum();
    a.load + b.load - shared
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeOutcome {
    pub bins: Vec<(usize, Bin)>,
    pub log: Vec<MergeEvent>,
}

/// Repeatedly merges two bins whose union fits, until no pair does.
///
/// Bins are scanned in order of non-increasing load (stable); the first
/// pair `(i, j)`, `i < j`, in lexicographic order whose union fits is
/// merged, the merged bin takes position `i`, and the scan restarts.
/// Input bins get ids `1..=k`.
pub fn merge_phase(instance: &Instance, bins: Vec<Bin>) -> MergeOutcome {
    let mut work: Vec<Working> = bins
        .into_iter()
        .enumerate()
        .map(|(k, bin)| Working {
            id: k + 1,
            load: bin.load(instance),
            classes: bin.classes(instance),
            bin,
        })
        .collect();
    let mut next_id = work.len() + 1;
    let mut log = Vec::new();

    loop {
        work.sort_by_key(|w| std::cmp::Reverse(w.load));
        let found = (0..work.len()).find_map(|i| {
            (i + 1..work.len()).find_map(|j| {
                let l = union_load(instance, &work[i], &work[j]);
                (l <= instance.capacity).then_some((i, j, l))
            })
        });
        let Some((i, j, load)) = found else { break };

        let other = work.remove(j);
        let first = &work[i];
        let mut classes = first.classes.clone();
        classes.extend(&other.classes);
        classes.sort_unstable();
        classes.dedup();
        log.push(MergeEvent {
            a: first.id,
            b: other.id,
            merged: next_id,
            load,
        });
        work[i] = Working {
            id: next_id,
            bin: first.bin.union(&other.bin),
            load,
            classes,
        };
        next_id += 1;
    }

    MergeOutcome {
        bins: work.into_iter().map(|w| (w.id, w.bin)).collect(),
        log,
    }
}

/// Runs both phases.
pub fn tp(
    instance: &Instance,
    inner: InnerAlgorithm,
    config: &TwoPhaseConfig,
) -> Result<TwoPhaseResult> {
    let phase1_bins = phase1(instance, inner, config)?;
    let merged = merge_phase(instance, phase1_bins.clone());
    let solution = Solution::new(merged.bins.iter().map(|(_, b)| b.clone()).collect());
    Ok(TwoPhaseResult {
        solution,
        trace: PhaseTrace {
            phase1: phase1_bins,
            merges: merged.log,
            final_bins: merged.bins,
        },
        alpha: inner.alpha(),
    })
}
