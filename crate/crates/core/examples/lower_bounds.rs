// Weak and strong lower bounds next to the optimum.

use std::error::Error;

use bpps::bounds::lower_bound;
use bpps::{exact_bpps, gen_nf_worst, gen_random, BoundStrength, ExactConfig, RandomParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = ExactConfig::default();
    println!("{:>5} {:>5} {:>6} {:>4}", "seed", "weak", "strong", "opt");
    for seed in 1..=10 {
        let inst = gen_random(&RandomParams::new(9, seed))?;
        let weak = lower_bound(&inst, BoundStrength::Weak, &cfg)?;
        let strong = lower_bound(&inst, BoundStrength::Strong, &cfg)?;
        let opt = exact_bpps(&inst, &cfg)?.value;
        println!("{seed:>5} {:>5} {:>6} {opt:>4}", weak.cost, strong.cost);
        assert!(weak.cost <= strong.cost && strong.cost <= opt);
    }

    // The bound needs no search, so it scales to the large adversarial sizes.
    let big = gen_nf_worst(1000)?;
    let rep = lower_bound(&big, BoundStrength::Weak, &cfg)?;
    println!(
        "nf family n=1000: bins >= {}, cost >= {}",
        rep.bins, rep.cost
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
