// Writing and reading instance and solution files.

use std::error::Error;

use bpps::{gen_nf_worst, parse_instance, parse_solution, run_heuristic, validate_solution};
use bpps::{write_instance, write_solution, Heuristic};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let inst = gen_nf_worst(6)?;
    let text = write_instance(&inst);
    print!("instance:\n{text}");
    assert_eq!(parse_instance(&text)?, inst);

    let sol = run_heuristic(Heuristic::Ffd, &inst);
    let sol_text = write_solution(&inst, &sol);
    print!("solution:\n{sol_text}");
    let (back, cost) = parse_solution(&sol_text)?;
    assert!(validate_solution(&inst, &back).is_empty());
    println!("declared cost {cost}");

    match parse_instance("2 1 3 1\n1 0\n2 1\n5 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("item 2 does not fit"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
