// The six greedy heuristics on a small mixed instance, plus a custom item
// order and the single-class reduction to classical bin packing.

use std::error::Error;

use bpps::heuristics::{ff_bpps, pack_bpps};
use bpps::{bpp_pack, run_heuristic, solution_cost, validate_solution};
use bpps::{Class, Heuristic, Instance, Item, ItemOrder, Rule};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let inst = Instance::new(
        10,
        2,
        vec![
            Class {
                setup_weight: 2,
                setup_cost: 1,
            },
            Class {
                setup_weight: 1,
                setup_cost: 3,
            },
        ],
        [(4, 1), (3, 2), (5, 1), (2, 2), (1, 1), (6, 2)]
            .map(|(weight, class)| Item { weight, class })
            .to_vec(),
    );

    for h in Heuristic::ALL {
        let sol = run_heuristic(h, &inst);
        assert!(validate_solution(&inst, &sol).is_empty());
        println!(
            "{h:<4} cost {:>2}  {:?}",
            solution_cost(&inst, &sol)?,
            sol.to_sets()
        );
    }

    let reversed = ItemOrder::new((1..=inst.n()).rev().collect(), inst.n())?;
    let sol = ff_bpps(&inst, &reversed);
    println!("ff, reversed order: {:?}", sol.to_sets());

    // With one class and no setups the packing is the classical one.
    let weights = [6, 3, 4, 1, 7, 2];
    let single = Instance::new(
        10,
        1,
        vec![Class::default()],
        weights
            .iter()
            .map(|&weight| Item { weight, class: 1 })
            .collect(),
    );
    let order: Vec<usize> = (0..weights.len()).collect();
    let classic = bpp_pack(&weights, 10, Rule::BestFit, &order)?;
    let ours = pack_bpps(&single, Rule::BestFit, &ItemOrder::identity(weights.len()));
    let shifted: Vec<Vec<usize>> = ours
        .to_sets()
        .into_iter()
        .map(|b| b.into_iter().map(|i| i - 1).collect())
        .collect();
    assert_eq!(shifted, classic);
    println!("best fit, single class: {classic:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
