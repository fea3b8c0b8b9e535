// The two-phase algorithm: per-class packing, then pairwise merging, with
// the merge log replayed as a check.

use std::error::Error;

use bpps::format::write_trace;
use bpps::{gen_random, solution_cost, tp, InnerAlgorithm, RandomParams, TwoPhaseConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut params = RandomParams::new(10, 42);
    params.classes = "4".parse()?;
    params.capacity = "20".parse()?;
    params.weight = "1..3".parse()?;
    let inst = gen_random(&params)?;
    let cfg = TwoPhaseConfig::default();

    for inner in ["ffd", "bfd", "nf", "exact"] {
        let inner: InnerAlgorithm = inner.parse()?;
        let res = tp(&inst, inner, &cfg)?;
        println!(
            "tp-{inner:<5} phase1 bins {:>2}  merges {:>2}  final bins {:>2}  cost {:>3}  guarantee {}",
            res.trace.phase1.len(),
            res.trace.merges.len(),
            res.solution.len(),
            solution_cost(&inst, &res.solution)?,
            res.bound()
        );
        let mut by_id = res.trace.final_bins.clone();
        by_id.sort_by_key(|(id, _)| *id);
        assert_eq!(res.trace.replay(&inst)?, by_id);
    }

    let res = tp(&inst, InnerAlgorithm::Exact, &cfg)?;
    print!("{}", write_trace(&inst, &res.trace));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
