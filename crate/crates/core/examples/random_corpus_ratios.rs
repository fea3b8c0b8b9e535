// Observed ratios against the optimum over a seeded random corpus, written
// as CSV to standard output.

use std::error::Error;

use bpps::bench::{run_bench, BenchConfig, NamedInstance};
use bpps::generators::random_corpus;
use bpps::report::{write_csv, ReferenceKind};
use bpps::{RandomParams, SolveConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let corpus = random_corpus(1..=20, 4..=9, &RandomParams::new(0, 0))?;
    let instances: Vec<NamedInstance> = corpus
        .into_iter()
        .enumerate()
        .map(|(k, instance)| NamedInstance {
            id: format!("seed{:02}", k + 1),
            instance,
        })
        .collect();
    let config = BenchConfig {
        algorithms: ["nf", "ffd", "tp-ffd", "tp-exact"]
            .iter()
            .map(|a| a.parse())
            .collect::<Result<_, _>>()?,
        reference: ReferenceKind::Exact,
        solve: SolveConfig::default(),
        timing: false,
    };
    let rows = run_bench(&instances, &config)?;
    for row in &rows {
        if let Some(bound) = row.bound {
            assert!(row.ratio <= bound);
        }
    }
    write_csv(&rows, std::io::stdout().lock())?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
