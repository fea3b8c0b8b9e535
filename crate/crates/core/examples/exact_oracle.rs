// Exact optima by branch and bound, and what happens at the resource limits.

use std::error::Error;

use bpps::exact::exact_bpps_with_class_bins;
use bpps::{exact_bpp, exact_bpps, gen_ffbf_worst, gen_random, solution_cost};
use bpps::{ExactConfig, RandomParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = ExactConfig::default();

    let inst = gen_ffbf_worst(12)?;
    let opt = exact_bpps_with_class_bins(&inst, &cfg)?;
    println!(
        "ffbf n=12: optimum {} in {} nodes, per-class optima {:?}",
        opt.value, opt.nodes, opt.class_bins
    );

    for seed in 1..=5 {
        let inst = gen_random(&RandomParams::new(10, seed))?;
        let opt = exact_bpps(&inst, &cfg)?;
        assert_eq!(solution_cost(&inst, &opt.solution)?, opt.value);
        println!(
            "random seed {seed}: optimum {:>3} ({} nodes)",
            opt.value, opt.nodes
        );
    }

    let bpp = exact_bpp(&[5, 4, 4, 3, 2, 2], 10, &cfg)?;
    println!("classical packing: {} bins {:?}", bpp.count(), bpp.bins);

    let tight = ExactConfig {
        node_limit: 1,
        ..cfg
    };
    match exact_bpp(&[5, 4, 4, 3, 2, 2], 10, &tight) {
        Err(bpps::Error::ResourceLimit { reason, .. }) => println!("node limit 1: {reason}"),
        other => println!("node limit 1: {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
