//! Lower bounds on the optimal cost.
//!
//! Any feasible solution activates class `c` in at least as many bins as an
//! optimal packing of that class alone at capacity `d - s_c` needs. So its
//! total load is at least `W + Σ s_c·k_c` and its setup cost at least
//! `Σ f_c·k_c`, where `k_c` is that per-class bin count. Dividing the load
//! by `d` bounds the number of bins. The weak bound replaces `k_c` by
//! `ceil(W_c / (d - s_c))`; the strong bound uses the exact `k_c`.

use std::fmt;

use crate::error::Result;
use crate::exact::{exact_bpp, ExactConfig};
use crate::model::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundStrength {
    /// Per-class counts from `ceil(W_c / d_c)`; polynomial.
    Weak,
    /// Per-class counts from an exact bin packing solve; exponential.
    Strong,
}

impl fmt::Display for BoundStrength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundStrength::Weak => "weak",
            BoundStrength::Strong => "strong",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub strength: BoundStrength,
    /// Lower bound on the bins class `c` needs on its own (index `c - 1`).
    pub class_bins: Vec<u64>,
    pub total_weight: u64,
    /// Lower bound on the number of bins of any feasible solution.
    pub bins: u64,
    /// Lower bound on the optimal cost.
    pub cost: u64,
}

fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b.max(1))
}

/// `ceil(Σ_{i in class c} w_i / (d - s_c))`.
pub fn class_lb(instance: &Instance, c: usize) -> u64 {
    let sub = instance.class_sub_instance(c);
    div_ceil(sub.weights.iter().sum(), sub.capacity)
}

fn assemble(
    instance: &Instance,
    strength: BoundStrength,
    class_bins: Vec<u64>,
) -> LowerBoundReport {
    let total_weight = instance.total_weight();
    let setup_mass: u64 = instance
        .classes
        .iter()
        .zip(&class_bins)
        .map(|(cl, &k)| cl.setup_weight * k)
        .sum();
    let setup_cost: u64 = instance
        .classes
        .iter()
        .zip(&class_bins)
        .map(|(cl, &k)| cl.setup_cost * k)
        .sum();
    let bins = div_ceil(total_weight + setup_mass, instance.capacity);
    LowerBoundReport {
        strength,
        class_bins,
        total_weight,
        bins,
        cost: instance.bin_cost * bins + setup_cost,
    }
}

/// Weak bound report.
pub fn weak_report(instance: &Instance) -> LowerBoundReport {
    let class_bins = (1..=instance.m()).map(|c| class_lb(instance, c)).collect();
    assemble(instance, BoundStrength::Weak, class_bins)
}

/// Bound report at the requested strength. Only the strong mode can fail,
/// when an exact per-class solve runs into `config`'s limits.
pub fn lower_bound(
    instance: &Instance,
    strength: BoundStrength,
    config: &ExactConfig,
) -> Result<LowerBoundReport> {
    match strength {
        BoundStrength::Weak => Ok(weak_report(instance)),
        BoundStrength::Strong => {
            let class_bins = (1..=instance.m())
                .map(|c| {
                    let sub = instance.class_sub_instance(c);
                    exact_bpp(&sub.weights, sub.capacity, config).map(|opt| opt.count() as u64)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(assemble(instance, BoundStrength::Strong, class_bins))
        }
    }
}

/// The weak combinatorial lower bound on the optimal cost.
pub fn combinatorial_lb(instance: &Instance) -> u64 {
    weak_report(instance).cost
}

/// The strong combinatorial lower bound; never below the weak one.
pub fn combinatorial_lb_strong(instance: &Instance, config: &ExactConfig) -> Result<u64> {
    Ok(lower_bound(instance, BoundStrength::Strong, config)?.cost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_ffbf_worst, gen_nf_worst};
    use crate::model::{Class, Item};

    fn one_class(d: u64, s: u64, f: u64, weights: &[u64]) -> Instance {
        Instance::new(
            d,
            1,
            vec![Class {
                setup_weight: s,
                setup_cost: f,
            }],
            weights
                .iter()
                .map(|&weight| Item { weight, class: 1 })
                .collect(),
        )
    }

    #[test]
    fn class_lb_examples() {
        assert_eq!(class_lb(&gen_nf_worst(4).unwrap(), 1), 1);
        assert_eq!(class_lb(&gen_ffbf_worst(6).unwrap(), 3), 1);
        let inst = one_class(3, 0, 0, &[2, 2, 2]);
        assert_eq!(class_lb(&inst, 1), 2);
        let strong = lower_bound(&inst, BoundStrength::Strong, &ExactConfig::default()).unwrap();
        assert_eq!(strong.class_bins, vec![3]);
    }

    #[test]
    fn combinatorial_lb_examples() {
        assert_eq!(combinatorial_lb(&gen_nf_worst(4).unwrap()), 2);
        let i6 = gen_ffbf_worst(6).unwrap();
        let rep = weak_report(&i6);
        assert_eq!(rep.total_weight, 6);
        assert_eq!(rep.class_bins, vec![1, 1, 1]);
        assert_eq!(rep.cost, 3);
        assert_eq!(combinatorial_lb(&one_class(1, 0, 5, &[1])), 6);
    }

    #[test]
    fn bound_for_large_nf_family_stays_at_two() {
        for n in [100, 1000] {
            assert_eq!(combinatorial_lb(&gen_nf_worst(n).unwrap()), 2);
        }
    }

    #[test]
    fn strong_not_below_weak() {
        let inst = one_class(5, 1, 3, &[2, 2, 2, 3]);
        let weak = combinatorial_lb(&inst);
        let strong = combinatorial_lb_strong(&inst, &ExactConfig::default()).unwrap();
        assert!(strong >= weak, "{strong} < {weak}");
    }
}
