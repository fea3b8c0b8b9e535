//! Bin packing with class setups.
//!
//! Items belong to classes; a bin that hosts any item of class `c` loses
//! `s_c` units of capacity and pays `f_c` on top of the bin cost `r`. This
//! crate provides:
//!
//! - the instance model with load and cost semantics ([`model`]);
//! - Next/First/Best Fit and their decreasing variants ([`heuristics`]);
//! - the two-phase class-wise packing plus merging algorithm ([`two_phase`]);
//! - an exact branch-and-bound oracle ([`exact`]) and lower bounds ([`bounds`]);
//! - adversarial and random instance generators ([`generators`]);
//! - text formats, ratio reports and a benchmark harness.
//!
//! ```
//! use bpps::{gen_nf_worst, run_heuristic, solution_cost, Heuristic};
//!
//! let inst = gen_nf_worst(8).unwrap();
//! let nf = run_heuristic(Heuristic::Nf, &inst);
//! assert_eq!(solution_cost(&inst, &nf).unwrap(), 8);
//! ```

pub mod algorithm;
pub mod bench;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod exact;
pub mod format;
pub mod generators;
pub mod heuristics;
pub mod model;
pub mod report;
pub mod two_phase;

pub use algorithm::{solve, AlgorithmId, SolveConfig, SolveOutcome};
pub use bounds::{class_lb, combinatorial_lb, combinatorial_lb_strong, BoundStrength};
pub use error::{Error, Result};
pub use exact::{exact_bpp, exact_bpps, ExactConfig, OptResult};
pub use format::{parse_instance, parse_solution, write_instance, write_solution};
pub use generators::{gen_ffbf_worst, gen_nf_worst, gen_random, IntRange, RandomParams};
pub use heuristics::{bpp_pack, run_heuristic, Heuristic, ItemOrder, Rule};
pub use model::{
    cost, load, solution_cost, validate_instance, validate_solution, Bin, Class, Instance, Item,
    Solution,
};
pub use two_phase::{merge_phase, phase1, tp, InnerAlgorithm, PhaseTrace, TwoPhaseConfig};
