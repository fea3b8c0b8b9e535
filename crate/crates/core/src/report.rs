//! Per-instance ratio records and their CSV rendering.

use std::fmt;
use std::io::Write;

use num_rational::Ratio;

use crate::algorithm::AlgorithmId;
use crate::error::Result;
use crate::generators::{gen_ffbf_worst, gen_nf_worst};
use crate::heuristics::Heuristic;
use crate::model::Instance;

pub const CSV_HEADER: [&str; 9] = [
    "instance",
    "algorithm",
    "bins",
    "cost",
    "reference",
    "ref_source",
    "ratio",
    "bound",
    "wall_ms",
];

/// Decimal digits used when printing ratios.
pub const RATIO_DIGITS: u32 = 6;

/// Where the denominator of a ratio came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReferenceKind {
    /// Optimal cost from the exact oracle.
    Exact,
    /// Weak combinatorial lower bound.
    LowerBound,
}

impl fmt::Display for ReferenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReferenceKind::Exact => "exact",
            ReferenceKind::LowerBound => "lb-weak",
        })
    }
}

/// `value` with `digits` decimals, rounded half up.
pub fn format_ratio(value: Ratio<u64>, digits: u32) -> String {
    let scale = 10u128.pow(digits);
    let (num, den) = (*value.numer() as u128, *value.denom() as u128);
    let scaled = (2 * num * scale + den) / (2 * den);
    if digits == 0 {
        return scaled.to_string();
    }
    format!(
        "{}.{:0width$}",
        scaled / scale,
        scaled % scale,
        width = digits as usize
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub instance: String,
    pub algorithm: AlgorithmId,
    pub bins: usize,
    pub cost: u64,
    pub reference: u64,
    pub ref_source: ReferenceKind,
    /// `cost / reference`, exact.
    pub ratio: Ratio<u64>,
    /// Theoretical bound on the ratio, when one applies.
    pub bound: Option<Ratio<u64>>,
    /// Wall time in milliseconds, when timing was requested.
    pub wall_ms: Option<u128>,
}

impl RatioReport {
    pub fn record(&self) -> [String; 9] {
        [
            self.instance.clone(),
            self.algorithm.to_string(),
            self.bins.to_string(),
            self.cost.to_string(),
            self.reference.to_string(),
            self.ref_source.to_string(),
            format_ratio(self.ratio, RATIO_DIGITS),
            self.bound
                .map(|b| format_ratio(b, RATIO_DIGITS))
                .unwrap_or_default(),
            self.wall_ms.map(|t| t.to_string()).unwrap_or_default(),
        ]
    }
}

pub fn write_csv<W: Write>(reports: &[RatioReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.write_record(r.record())?;
    }
    w.flush()?;
    Ok(())
}

/// Bound to display next to an observed ratio: the algorithm's guarantee,
/// or for the adversarial families the exact closed-form ratio of the
/// heuristics they defeat.
pub fn theoretical_bound(instance: &Instance, algorithm: AlgorithmId) -> Option<Ratio<u64>> {
    if let Some(g) = algorithm.guarantee() {
        return Some(g);
    }
    let AlgorithmId::Heuristic(h) = algorithm else {
        return None;
    };
    let n = instance.n() as u64;
    let same_as = |other: crate::Result<Instance>| {
        other.is_ok_and(|o| o.with_bin_cost(instance.bin_cost) == *instance)
    };
    match h {
        Heuristic::Nf | Heuristic::Nfd if same_as(gen_nf_worst(instance.n())) => {
            Some(Ratio::new(n, 2))
        }
        Heuristic::Ff | Heuristic::Bf | Heuristic::Ffd | Heuristic::Bfd
            if same_as(gen_ffbf_worst(instance.n())) =>
        {
            Some(Ratio::new(n, 9) + Ratio::new(2, 3))
        }
        _ => None,
    }
}
