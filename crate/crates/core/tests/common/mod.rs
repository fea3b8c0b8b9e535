#![allow(dead_code)]

use bpps::{Class, Instance, Item, Solution};
use proptest::prelude::*;

/// Valid instances with every class non-empty: `n_max` items at most,
/// `m_max` classes, capacity in `4..=d_max`.
pub fn instances(n_max: usize, m_max: usize, d_max: u64) -> impl Strategy<Value = Instance> {
    (1..=m_max, 4..=d_max, 1u64..=4).prop_flat_map(move |(m, d, r)| {
        let classes = prop::collection::vec((0..d, 0u64..=5), m);
        (Just(m), Just(d), Just(r), classes, m..=n_max.max(m)).prop_flat_map(
            move |(m, d, r, classes, n)| {
                let cls = classes.clone();
                let items = (0..n)
                    .map(move |k| {
                        let cls = cls.clone();
                        let class = if k < m {
                            Just(k + 1).boxed()
                        } else {
                            (1..=m).boxed()
                        };
                        class
                            .prop_flat_map(move |c| {
                                let room = d - cls[c - 1].0;
                                (1..=room).prop_map(move |weight| Item { weight, class: c })
                            })
                            .boxed()
                    })
                    .collect::<Vec<_>>();
                let classes: Vec<Class> = classes
                    .into_iter()
                    .map(|(setup_weight, setup_cost)| Class {
                        setup_weight,
                        setup_cost,
                    })
                    .collect();
                items.prop_map(move |items| Instance::new(d, r, classes.clone(), items))
            },
        )
    })
}

/// Load and cost computed straight from the definitions.
pub fn naive_load(inst: &Instance, set: &[usize]) -> u64 {
    let mut seen = vec![false; inst.m() + 1];
    let mut load = 0;
    for &i in set {
        let it = inst.items[i - 1];
        load += it.weight;
        if !seen[it.class] {
            seen[it.class] = true;
            load += inst.classes[it.class - 1].setup_weight;
        }
    }
    load
}

pub fn naive_cost(inst: &Instance, set: &[usize]) -> u64 {
    let mut seen = vec![false; inst.m() + 1];
    let mut cost = inst.bin_cost;
    for &i in set {
        let c = inst.items[i - 1].class;
        if !seen[c] {
            seen[c] = true;
            cost += inst.classes[c - 1].setup_cost;
        }
    }
    cost
}

/// Optimum by enumerating every set partition of the items (restricted
/// growth strings). Exponential; meant for n <= 8.
pub fn brute_force_optimum(inst: &Instance) -> u64 {
    fn rec(inst: &Instance, k: usize, blocks: &mut Vec<Vec<usize>>, best: &mut u64) {
        if k > inst.n() {
            if blocks.iter().all(|b| naive_load(inst, b) <= inst.capacity) {
                let total = blocks.iter().map(|b| naive_cost(inst, b)).sum();
                *best = (*best).min(total);
            }
            return;
        }
        for j in 0..blocks.len() {
            blocks[j].push(k);
            rec(inst, k + 1, blocks, best);
            blocks[j].pop();
        }
        blocks.push(vec![k]);
        rec(inst, k + 1, blocks, best);
        blocks.pop();
    }
    let mut best = u64::MAX;
    rec(inst, 1, &mut Vec::new(), &mut best);
    best
}

/// True when `sol` is a partition of `1..=n` into capacity-feasible bins.
pub fn is_feasible_partition(inst: &Instance, sol: &Solution) -> bool {
    let mut seen = vec![false; inst.n() + 1];
    for bin in &sol.bins {
        if bin.is_empty() || naive_load(inst, bin.items()) > inst.capacity {
            return false;
        }
        for &i in bin.items() {
            if i == 0 || i > inst.n() || std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}
