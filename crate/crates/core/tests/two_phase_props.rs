mod common;

use bpps::two_phase::merge_phase;
use bpps::{
    exact_bpps, phase1, solution_cost, tp, Bin, ExactConfig, InnerAlgorithm, TwoPhaseConfig,
};
use common::{instances, is_feasible_partition, naive_load};
use num_rational::Ratio;
use proptest::prelude::*;

const INNERS: [&str; 7] = ["nf", "ff", "bf", "nfd", "ffd", "bfd", "exact"];

fn inners() -> impl Iterator<Item = InnerAlgorithm> {
    INNERS.iter().map(|s| s.parse().unwrap())
}

proptest! {
    #[test]
    fn phase_one_bins_are_single_class(inst in instances(12, 4, 20)) {
        for inner in inners() {
            let bins = phase1(&inst, inner, &TwoPhaseConfig::default()).unwrap();
            for b in &bins {
                let c = inst.item(b.items()[0]).class;
                prop_assert!(b.items().iter().all(|&i| inst.item(i).class == c));
                prop_assert!(b.load(&inst) <= inst.capacity);
            }
        }
    }

    #[test]
    fn merged_bins_are_maximal(inst in instances(12, 4, 20)) {
        for inner in inners() {
            let res = tp(&inst, inner, &TwoPhaseConfig::default()).unwrap();
            let bins = &res.solution.bins;
            prop_assert!(is_feasible_partition(&inst, &res.solution));
            for (i, a) in bins.iter().enumerate() {
                for b in &bins[i + 1..] {
                    let union = a.union(b);
                    prop_assert!(naive_load(&inst, union.items()) > inst.capacity);
                }
            }
            let small = bins.iter().filter(|b| 2 * b.load(&inst) <= inst.capacity).count();
            prop_assert!(small <= 1, "{small} bins at most half full");
            // each merge removes one bin
            prop_assert_eq!(res.trace.phase1.len() - res.trace.merges.len(), bins.len());
        }
    }

    #[test]
    fn merge_log_replays(inst in instances(12, 4, 20)) {
        let res = tp(&inst, InnerAlgorithm::Exact, &TwoPhaseConfig::default()).unwrap();
        let mut by_id = res.trace.final_bins.clone();
        by_id.sort_by_key(|(id, _)| *id);
        prop_assert_eq!(res.trace.replay(&inst).unwrap(), by_id);
    }

    #[test]
    fn merging_an_arbitrary_feasible_start_terminates_maximal(
        inst in instances(10, 3, 15)
    ) {
        // singletons are a valid phase-1 output for any inner packing
        let singles: Vec<Bin> = (1..=inst.n()).map(|i| Bin::new([i])).collect();
        let out = merge_phase(&inst, singles);
        prop_assert!(out.log.len() < inst.n());
        for (i, (_, a)) in out.bins.iter().enumerate() {
            for (_, b) in &out.bins[i + 1..] {
                prop_assert!(a.union(b).load(&inst) > inst.capacity);
            }
        }
    }

    #[test]
    fn cost_within_guarantee(inst in instances(8, 3, 12)) {
        prop_assume!(!inst.fits_single_bin());
        let opt = exact_bpps(&inst, &ExactConfig::default()).unwrap().value;
        for inner in inners() {
            let res = tp(&inst, inner, &TwoPhaseConfig::default()).unwrap();
            let c = solution_cost(&inst, &res.solution).unwrap();
            prop_assert!(Ratio::from_integer(c) <= res.bound() * opt, "tp-{inner}: {c} vs opt {opt}");
        }
    }
}
