use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exact::{exact_bpps, ExactConfig};
use crate::heuristics::{run_heuristic, Heuristic};
use crate::model::{total_cost, Instance, Solution};
use crate::two_phase::{tp, InnerAlgorithm, PhaseTrace, TwoPhaseConfig};

/// Every solver the toolkit exposes: `nf ff bf nfd ffd bfd`, `tp-<inner>`
/// for any inner heuristic or `exact`, and `exact`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmId {
    Heuristic(Heuristic),
    TwoPhase(InnerAlgorithm),
    Exact,
}

impl AlgorithmId {
    /// Proven worst-case ratio, when one exists. The greedy heuristics have none.
    pub fn guarantee(self) -> Option<Ratio<u64>> {
        match self {
            AlgorithmId::Heuristic(_) => None,
            AlgorithmId::TwoPhase(inner) => Some(inner.alpha() * 2),
            AlgorithmId::Exact => Some(Ratio::from_integer(1)),
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmId::Heuristic(h) => write!(f, "{h}"),
            AlgorithmId::TwoPhase(inner) => write!(f, "tp-{inner}"),
            AlgorithmId::Exact => f.write_str("exact"),
        }
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "exact" {
            Ok(AlgorithmId::Exact)
        } else if let Some(inner) = s.strip_prefix("tp-") {
            inner
                .parse()
                .map(AlgorithmId::TwoPhase)
                .map_err(|_| Error::invalid(format!("unknown algorithm '{s}'")))
        } else {
            s.parse()
                .map(AlgorithmId::Heuristic)
                .map_err(|_| Error::invalid(format!("unknown algorithm '{s}'")))
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveConfig {
    pub exact: ExactConfig,
    pub two_phase: TwoPhaseConfig,
}

impl SolveConfig {
    /// Applies one node limit to every exact search.
    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.exact.node_limit = limit;
        self.two_phase.node_limit = limit;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub solution: Solution,
    pub cost: u64,
    /// Present for the two-phase algorithms.
    pub trace: Option<PhaseTrace>,
}

/// Runs `algorithm` on a valid instance.
pub fn solve(
    algorithm: AlgorithmId,
    instance: &Instance,
    config: &SolveConfig,
) -> Result<SolveOutcome> {
    let (solution, trace) = match algorithm {
        AlgorithmId::Heuristic(h) => (run_heuristic(h, instance), None),
        AlgorithmId::TwoPhase(inner) => {
            let res = tp(instance, inner, &config.two_phase)?;
            (res.solution, Some(res.trace))
        }
        AlgorithmId::Exact => (exact_bpps(instance, &config.exact)?.solution, None),
    };
    Ok(SolveOutcome {
        cost: total_cost(instance, &solution),
        solution,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in [
            "nf", "ff", "bf", "nfd", "ffd", "bfd", "tp-ffd", "tp-bfd", "tp-exact", "tp-nf", "exact",
        ] {
            assert_eq!(id.parse::<AlgorithmId>().unwrap().to_string(), id);
        }
        assert!("tp-".parse::<AlgorithmId>().is_err());
        assert!("first-fit".parse::<AlgorithmId>().is_err());
    }

    #[test]
    fn guarantees() {
        let g = |s: &str| s.parse::<AlgorithmId>().unwrap().guarantee();
        assert_eq!(g("tp-ffd"), Some(Ratio::from_integer(3)));
        assert_eq!(g("tp-exact"), Some(Ratio::from_integer(2)));
        assert_eq!(g("nf"), None);
    }
}
