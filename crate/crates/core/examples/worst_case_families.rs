// Adversarial families: NF and FF/BF costs grow with n while the optimum
// stays constant.

use std::error::Error;

use bpps::{
    combinatorial_lb, exact_bpps, gen_ffbf_worst, gen_nf_worst, run_heuristic, solution_cost,
};
use bpps::{ExactConfig, Heuristic};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = ExactConfig::default();

    println!("next fit family");
    for n in [4, 8, 12, 100] {
        let inst = gen_nf_worst(n)?;
        let nf = solution_cost(&inst, &run_heuristic(Heuristic::Nf, &inst))?;
        let opt = exact_bpps(&inst, &cfg)?.value;
        println!(
            "  n={n:<4} nf={nf:<4} opt={opt} lb={}",
            combinatorial_lb(&inst)
        );
        assert_eq!(nf, n as u64);
        assert_eq!(opt, 2);
    }

    println!("first/best fit family");
    for n in [6, 12, 60] {
        let inst = gen_ffbf_worst(n)?;
        let ff = solution_cost(&inst, &run_heuristic(Heuristic::Ff, &inst))?;
        let bf = solution_cost(&inst, &run_heuristic(Heuristic::Bf, &inst))?;
        let opt = exact_bpps(&inst, &cfg)?.value;
        println!("  n={n:<4} ff={ff:<4} bf={bf:<4} opt={opt}");
        assert_eq!(ff, n as u64 / 3 + 2);
        assert_eq!(bf, ff);
        assert_eq!(opt, 3);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
