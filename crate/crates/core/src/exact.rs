//! Exact optimum by depth-first branch and bound over item-to-bin
//! assignments.
//!
//! Items are processed by non-increasing `w_i + s_{c_i}`. Item `k` may join
//! any open bin it fits in or open the next bin, so bins are ordered by
//! their first item and no assignment is enumerated twice. Open bins with
//! identical load and active classes are interchangeable and only one of
//! them is tried.
//!
//! The completion bound at a node counts the setups of classes that still
//! have unassigned items but are active nowhere: each will be paid at least
//! once more. Adding their setup weights to the current total load and the
//! remaining item weight gives a load no solution extending the node can
//! avoid, hence a bin count.
//!
//! The search starts from the best heuristic solution. When that already
//! meets the combinatorial lower bound, it is returned without searching,
//! whatever the instance size.

use std::cmp::Reverse;

use crate::bounds::combinatorial_lb;
use crate::error::{Error, Result};
use crate::heuristics::{run_heuristic, Heuristic};
use crate::model::{total_cost, validate_instance, Bin, Class, Instance, Item, Solution};
use crate::two_phase::{tp, InnerAlgorithm, TwoPhaseConfig};

/// Limits guarding the exponential search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactConfig {
    /// Search nodes before giving up.
    pub node_limit: u64,
    /// Largest instance the search accepts. Capped at 64.
    pub max_items: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            node_limit: 10_000_000,
            max_items: 14,
        }
    }
}

const MASK_BITS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptResult {
    pub solution: Solution,
    /// The optimal cost.
    pub value: u64,
    /// Search nodes visited; zero when the heuristic start was already optimal.
    pub nodes: u64,
    /// Optimal bin counts of each class packed alone, when requested.
    pub class_bins: Option<Vec<usize>>,
}

/// Optimal plain bin packing. Bins hold 0-based positions into the weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BppOptimum {
    pub bins: Vec<Vec<usize>>,
    pub nodes: u64,
}

impl BppOptimum {
    pub fn count(&self) -> usize {
        self.bins.len()
    }
}

/// Optimal solution of a valid instance.
pub fn exact_bpps(instance: &Instance, config: &ExactConfig) -> Result<OptResult> {
    validate_instance(instance).into_result()?;
    solve(instance, config)
}

/// Like [`exact_bpps`], also reporting each class's optimal standalone bin count.
pub fn exact_bpps_with_class_bins(instance: &Instance, config: &ExactConfig) -> Result<OptResult> {
    let mut res = exact_bpps(instance, config)?;
    let counts = (1..=instance.m())
        .map(|c| {
            let sub = instance.class_sub_instance(c);
            exact_bpp(&sub.weights, sub.capacity, config).map(|o| o.count())
        })
        .collect::<Result<Vec<_>>>()?;
    res.class_bins = Some(counts);
    Ok(res)
}

/// Minimum number of bins of size `capacity` holding `weights`.
pub fn exact_bpp(weights: &[u64], capacity: u64, config: &ExactConfig) -> Result<BppOptimum> {
    if let Some((index, &weight)) = weights.iter().enumerate().find(|(_, &w)| w > capacity) {
        return Err(Error::InfeasibleItem {
            index,
            weight,
            capacity,
        });
    }
    if weights.is_empty() {
        return Ok(BppOptimum {
            bins: Vec::new(),
            nodes: 0,
        });
    }
    let instance = Instance::new(
        capacity,
        1,
        vec![Class {
            setup_weight: 0,
            setup_cost: 0,
        }],
        weights
            .iter()
            .map(|&weight| Item { weight, class: 1 })
            .collect(),
    );
    let res = solve(&instance, config)?;
    Ok(BppOptimum {
        bins: res
            .solution
            .bins
            .iter()
            .map(|b| b.items().iter().map(|&i| i - 1).collect())
            .collect(),
        nodes: res.nodes,
    })
}

/// Cheapest of the greedy heuristics and the two-phase algorithm.
pub(crate) fn best_heuristic(instance: &Instance) -> (Solution, u64) {
    let mut candidates: Vec<Solution> = Heuristic::ALL
        .iter()
        .map(|&h| run_heuristic(h, instance))
        .collect();
    for inner in [Heuristic::Ffd, Heuristic::Bfd] {
        if let Ok(res) = tp(
            instance,
            InnerAlgorithm::Heuristic(inner),
            &TwoPhaseConfig::default(),
        ) {
            candidates.push(res.solution);
        }
    }
    candidates
        .into_iter()
        .map(|s| {
            let c = total_cost(instance, &s);
            (s, c)
        })
        .min_by_key(|(_, c)| *c)
        .expect("at least one heuristic ran")
}

fn solve(instance: &Instance, config: &ExactConfig) -> Result<OptResult> {
    let (incumbent, incumbent_cost) = best_heuristic(instance);
    if incumbent_cost <= combinatorial_lb(instance) {
        return Ok(OptResult {
            solution: incumbent,
            value: incumbent_cost,
            nodes: 0,
            class_bins: None,
        });
    }

    let limit = config.max_items.min(MASK_BITS);
    if instance.n() > limit || instance.m() > MASK_BITS {
        return Err(Error::ResourceLimit {
            reason: format!(
                "instance has {} items, above the exact search limit of {limit}",
                instance.n()
            ),
            incumbent: Some(Box::new(incumbent)),
        });
    }

    let mut search = Search::new(instance, config.node_limit, incumbent_cost);
    search.dfs(0, 0, 0, 0);

    let (solution, value) = match search.best_assign.take() {
        Some(assign) => {
            let sol = search.to_solution(&assign);
            (sol, search.best_cost)
        }
        None => (incumbent, incumbent_cost),
    };
    if search.aborted {
        return Err(Error::ResourceLimit {
            reason: format!("node limit {} exceeded", config.node_limit),
            incumbent: Some(Box::new(solution)),
        });
    }
    Ok(OptResult {
        solution,
        value,
        nodes: search.nodes,
        class_bins: None,
    })
}

struct Search {
    capacity: u64,
    bin_cost: u64,
    // Per search position.
    ids: Vec<usize>,
    weight: Vec<u64>,
    class: Vec<usize>,
    rem_weight: Vec<u64>,
    rem_classes: Vec<u64>,
    // Per class, 0-based.
    setup_weight: Vec<u64>,
    setup_cost: Vec<u64>,
    // Open bins as (load, active class mask).
    bins: Vec<(u64, u64)>,
    assign: Vec<usize>,
    best_cost: u64,
    best_assign: Option<Vec<usize>>,
    nodes: u64,
    node_limit: u64,
    aborted: bool,
}

impl Search {
    fn new(instance: &Instance, node_limit: u64, incumbent_cost: u64) -> Self {
        let n = instance.n();
        let mut ids: Vec<usize> = (1..=n).collect();
        ids.sort_by_key(|&i| Reverse(instance.standalone_load(i)));
        let weight: Vec<u64> = ids.iter().map(|&i| instance.item(i).weight).collect();
        let class: Vec<usize> = ids.iter().map(|&i| instance.item(i).class - 1).collect();

        let mut rem_weight = vec![0; n + 1];
        let mut rem_classes = vec![0u64; n + 1];
        for k in (0..n).rev() {
            rem_weight[k] = rem_weight[k + 1] + weight[k];
            rem_classes[k] = rem_classes[k + 1] | (1 << class[k]);
        }
        Search {
            capacity: instance.capacity,
            bin_cost: instance.bin_cost,
            ids,
            weight,
            class,
            rem_weight,
            rem_classes,
            setup_weight: instance.classes.iter().map(|c| c.setup_weight).collect(),
            setup_cost: instance.classes.iter().map(|c| c.setup_cost).collect(),
            bins: Vec::with_capacity(n),
            assign: vec![0; n],
            best_cost: incumbent_cost,
            best_assign: None,
            nodes: 0,
            node_limit,
            aborted: false,
        }
    }

    fn completion_bound(&self, k: usize, cost: u64, active: u64, total_load: u64) -> u64 {
        let mut fresh = self.rem_classes[k] & !active;
        let (mut s_new, mut f_new) = (0, 0);
        while fresh != 0 {
            let c = fresh.trailing_zeros() as usize;
            s_new += self.setup_weight[c];
            f_new += self.setup_cost[c];
            fresh &= fresh - 1;
        }
        let needed = (total_load + self.rem_weight[k] + s_new).div_ceil(self.capacity);
        let extra = needed.saturating_sub(self.bins.len() as u64);
        cost + self.bin_cost * extra + f_new
    }

    fn dfs(&mut self, k: usize, cost: u64, active: u64, total_load: u64) {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.aborted = true;
            return;
        }
        if k == self.ids.len() {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best_assign = Some(self.assign.clone());
            }
            return;
        }
        if self.completion_bound(k, cost, active, total_load) >= self.best_cost {
            return;
        }

        let (w, c) = (self.weight[k], self.class[k]);
        let bit = 1u64 << c;
        let mut tried: Vec<(u64, u64)> = Vec::new();
        for j in 0..self.bins.len() {
            let (load, mask) = self.bins[j];
            let active_here = mask & bit != 0;
            let need = if active_here {
                w
            } else {
                w + self.setup_weight[c]
            };
            if load + need > self.capacity || tried.contains(&(load, mask)) {
                continue;
            }
            tried.push((load, mask));
            let extra = if active_here { 0 } else { self.setup_cost[c] };
            self.bins[j] = (load + need, mask | bit);
            self.assign[k] = j;
            self.dfs(k + 1, cost + extra, active | bit, total_load + need);
            self.bins[j] = (load, mask);
            if self.aborted {
                return;
            }
        }

        let need = w + self.setup_weight[c];
        self.bins.push((need, bit));
        self.assign[k] = self.bins.len() - 1;
        self.dfs(
            k + 1,
            cost + self.bin_cost + self.setup_cost[c],
            active | bit,
            total_load + need,
        );
        self.bins.pop();
    }

    fn to_solution(&self, assign: &[usize]) -> Solution {
        let count = assign.iter().max().map_or(0, |&j| j + 1);
        let mut sets: Vec<Vec<usize>> = vec![Vec::new(); count];
        for (k, &j) in assign.iter().enumerate() {
            sets[j].push(self.ids[k]);
        }
        Solution::new(sets.into_iter().map(Bin::new).collect())
    }
}
