mod common;

use bpps::heuristics::{decreasing_indices, pack_bpps};
use bpps::{
    bpp_pack, run_heuristic, validate_solution, Class, Heuristic, Instance, Item, ItemOrder, Rule,
};
use common::{instances, is_feasible_partition, naive_load};
use proptest::prelude::*;

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut ids: Vec<usize> = (1..=n).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        ids.swap(i, (s % (i as u64 + 1)) as usize);
    }
    ids
}

/// Contents of each bin just before `item` was placed, bins in creation order.
fn bins_before(sol: &bpps::Solution, order: &[usize], item: usize) -> Vec<Vec<usize>> {
    let pos = |i: usize| order.iter().position(|&x| x == i).unwrap();
    let cut = pos(item);
    sol.bins
        .iter()
        .map(|b| {
            b.items()
                .iter()
                .copied()
                .filter(|&i| pos(i) < cut)
                .collect::<Vec<_>>()
        })
        .filter(|b: &Vec<usize>| !b.is_empty())
        .collect()
}

fn fits(inst: &Instance, bin: &[usize], item: usize) -> bool {
    let mut with = bin.to_vec();
    with.push(item);
    naive_load(inst, &with) <= inst.capacity
}

proptest! {
    #[test]
    fn every_heuristic_returns_a_feasible_partition(inst in instances(12, 4, 20)) {
        for h in Heuristic::ALL {
            let sol = run_heuristic(h, &inst);
            prop_assert!(is_feasible_partition(&inst, &sol), "{h}: {sol:?}");
            prop_assert!(validate_solution(&inst, &sol).is_empty());
        }
    }

    #[test]
    fn first_fit_places_each_item_in_the_earliest_bin_with_room(
        inst in instances(10, 3, 15), seed in any::<u64>()
    ) {
        let order = shuffled(inst.n(), seed);
        let sol = pack_bpps(&inst, Rule::FirstFit, &ItemOrder::new(order.clone(), inst.n()).unwrap());
        // bins in creation order are ordered by their earliest item in `order`
        for (j, bin) in sol.bins.iter().enumerate() {
            for &x in bin.items() {
                let before = bins_before(&sol, &order, x);
                let earlier = before.iter().take(j.min(before.len()));
                for b in earlier {
                    prop_assert!(!fits(&inst, b, x), "item {x} fit an earlier bin {b:?}");
                }
            }
        }
    }

    #[test]
    fn best_fit_places_each_item_where_the_residual_is_smallest(
        inst in instances(10, 3, 15), seed in any::<u64>()
    ) {
        let order = shuffled(inst.n(), seed);
        let sol = pack_bpps(&inst, Rule::BestFit, &ItemOrder::new(order.clone(), inst.n()).unwrap());
        for bin in &sol.bins {
            for &x in bin.items() {
                let before = bins_before(&sol, &order, x);
                let mine: Vec<usize> = bin.items().iter().copied()
                    .filter(|i| before.iter().flatten().any(|b| b == i)).collect();
                let residual = |b: &[usize]| {
                    let mut w = b.to_vec();
                    w.push(x);
                    inst.capacity - naive_load(&inst, &w)
                };
                let candidates: Vec<&Vec<usize>> = before.iter().filter(|b| fits(&inst, b, x)).collect();
                if mine.is_empty() {
                    prop_assert!(candidates.is_empty(), "item {x} opened a bin but {candidates:?} had room");
                } else {
                    let best = candidates.iter().map(|b| residual(b)).min().unwrap();
                    prop_assert_eq!(residual(&mine), best);
                }
            }
        }
    }

    #[test]
    fn next_fit_only_looks_at_the_last_bin(inst in instances(10, 3, 15)) {
        let sol = run_heuristic(Heuristic::Nf, &inst);
        // identity order: bins are consecutive runs and each run's successor did not fit
        let flat: Vec<usize> = sol.bins.iter().flat_map(|b| b.items().to_vec()).collect();
        prop_assert_eq!(flat, (1..=inst.n()).collect::<Vec<_>>());
        for w in sol.bins.windows(2) {
            prop_assert!(!fits(&inst, w[0].items(), w[1].items()[0]));
        }
    }

    #[test]
    fn single_class_without_setups_reduces_to_plain_packing(
        weights in prop::collection::vec(1u64..=12, 1..14), seed in any::<u64>()
    ) {
        let inst = Instance::new(
            12,
            1,
            vec![Class::default()],
            weights.iter().map(|&weight| Item { weight, class: 1 }).collect(),
        );
        let n = weights.len();
        let order = shuffled(n, seed);
        let zero_based: Vec<usize> = order.iter().map(|i| i - 1).collect();
        for rule in [Rule::NextFit, Rule::FirstFit, Rule::BestFit] {
            let ours = pack_bpps(&inst, rule, &ItemOrder::new(order.clone(), n).unwrap());
            let mut plain = bpp_pack(&weights, 12, rule, &zero_based).unwrap();
            for b in &mut plain {
                b.sort();
            }
            let ours: Vec<Vec<usize>> = ours.to_sets().into_iter()
                .map(|b| b.into_iter().map(|i| i - 1).collect()).collect();
            prop_assert_eq!(ours, plain);
        }
        let dec = decreasing_indices(&weights);
        prop_assert!(dec.windows(2).all(|p| weights[p[0]] >= weights[p[1]]));
    }
}

#[test]
fn best_fit_trace_on_small_bpp() {
    let bins = bpp_pack(&[6, 3, 4, 1], 10, Rule::BestFit, &[0, 1, 2, 3]).unwrap();
    assert_eq!(bins, vec![vec![0, 1, 3], vec![2]]);
}
