//! Next Fit, First Fit and Best Fit, their decreasing variants, and the
//! plain bin packing versions used per class by the two-phase algorithm.
//!
//! With setups, an item whose class is not yet active in a bin needs its
//! weight plus the class setup weight; otherwise only its weight.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{Bin, Instance, Solution};

/// Online packing rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    NextFit,
    FirstFit,
    BestFit,
}

/// The six classical heuristics, adapted to class setups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heuristic {
    Nf,
    Ff,
    Bf,
    Nfd,
    Ffd,
    Bfd,
}

impl Heuristic {
    pub const ALL: [Heuristic; 6] = [
        Heuristic::Nf,
        Heuristic::Ff,
        Heuristic::Bf,
        Heuristic::Nfd,
        Heuristic::Ffd,
        Heuristic::Bfd,
    ];

    pub fn rule(self) -> Rule {
        match self {
            Heuristic::Nf | Heuristic::Nfd => Rule::NextFit,
            Heuristic::Ff | Heuristic::Ffd => Rule::FirstFit,
            Heuristic::Bf | Heuristic::Bfd => Rule::BestFit,
        }
    }

    /// Whether items are sorted by non-increasing weight first.
    pub fn is_decreasing(self) -> bool {
        matches!(self, Heuristic::Nfd | Heuristic::Ffd | Heuristic::Bfd)
    }

    pub fn id(self) -> &'static str {
        match self {
            Heuristic::Nf => "nf",
            Heuristic::Ff => "ff",
            Heuristic::Bf => "bf",
            Heuristic::Nfd => "nfd",
            Heuristic::Ffd => "ffd",
            Heuristic::Bfd => "bfd",
        }
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Heuristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Heuristic::ALL
            .into_iter()
            .find(|h| h.id() == s)
            .ok_or_else(|| Error::invalid(format!("unknown heuristic '{s}'")))
    }
}

/// A processing order over the items: a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemOrder(Vec<usize>);

impl ItemOrder {
    pub fn new(ids: Vec<usize>, n: usize) -> Result<Self> {
        check_permutation(&ids, n, 1)?;
        Ok(ItemOrder(ids))
    }

    pub fn identity(n: usize) -> Self {
        ItemOrder((1..=n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

fn check_permutation(ids: &[usize], n: usize, base: usize) -> Result<()> {
    if ids.len() != n {
        return Err(Error::invalid(format!(
            "order has {} entries, expected {n}",
            ids.len()
        )));
    }
    let mut seen = vec![false; n];
    for &i in ids {
        let Some(slot) = i.checked_sub(base).filter(|&k| k < n) else {
            return Err(Error::invalid(format!("order entry {i} out of range")));
        };
        if std::mem::replace(&mut seen[slot], true) {
            return Err(Error::invalid(format!("order repeats {i}")));
        }
    }
    Ok(())
}

/// A bin under construction with its load and active classes cached.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpenBin {
    items: Vec<usize>,
    load: u64,
    classes: BTreeSet<usize>,
}

impl OpenBin {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds the cached state for an existing set of item ids.
    pub fn with_items(instance: &Instance, ids: &[usize]) -> Self {
        let mut bin = OpenBin::new();
        for &i in ids {
            let need = required_capacity(instance, &bin, i);
            bin.push(i, need, instance.item(i).class);
        }
        bin
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }

    pub fn load(&self) -> u64 {
        self.load
    }

    pub fn has_class(&self, c: usize) -> bool {
        self.classes.contains(&c)
    }

    fn push(&mut self, item: usize, need: u64, class: usize) {
        self.items.push(item);
        self.load += need;
        self.classes.insert(class);
    }
}

/// Capacity consumed by adding `item` (1-based) to `bin`.
pub fn required_capacity(instance: &Instance, bin: &OpenBin, item: usize) -> u64 {
    let it = instance.item(item);
    if bin.has_class(it.class) {
        it.weight
    } else {
        it.weight + instance.class(it.class).setup_weight
    }
}

/// Greedy engine shared by the setup-aware heuristics and plain BPP packing.
/// `need(bin, k)` is the capacity item `k` would consume in `bin`.
fn pack_greedy(
    rule: Rule,
    order: &[usize],
    capacity: u64,
    need: impl Fn(&OpenBin, usize) -> u64,
    class_of: impl Fn(usize) -> usize,
) -> Vec<OpenBin> {
    let mut bins: Vec<OpenBin> = Vec::new();
    for &k in order {
        let fits = |b: &OpenBin| b.load + need(b, k) <= capacity;
        let target = match rule {
            Rule::NextFit => bins.last().filter(|b| fits(b)).map(|_| bins.len() - 1),
            Rule::FirstFit => bins.iter().position(fits),
            Rule::BestFit => bins
                .iter()
                .enumerate()
                .filter(|(_, b)| fits(b))
                // min_by_key keeps the first minimum, i.e. the lowest index on ties
                .min_by_key(|(_, b)| capacity - b.load - need(b, k))
                .map(|(j, _)| j),
        };
        let j = target.unwrap_or_else(|| {
            bins.push(OpenBin::new());
            bins.len() - 1
        });
        let amount = need(&bins[j], k);
        bins[j].push(k, amount, class_of(k));
    }
    bins
}

/// Packs `instance` with `rule`, processing items in `order`.
pub fn pack_bpps(instance: &Instance, rule: Rule, order: &ItemOrder) -> Solution {
    let bins = pack_greedy(
        rule,
        order.as_slice(),
        instance.capacity,
        |b, i| required_capacity(instance, b, i),
        |i| instance.item(i).class,
    );
    Solution::new(bins.into_iter().map(|b| Bin::new(b.items)).collect())
}

pub fn nf_bpps(instance: &Instance, order: &ItemOrder) -> Solution {
    pack_bpps(instance, Rule::NextFit, order)
}

pub fn ff_bpps(instance: &Instance, order: &ItemOrder) -> Solution {
    pack_bpps(instance, Rule::FirstFit, order)
}

pub fn bf_bpps(instance: &Instance, order: &ItemOrder) -> Solution {
    pack_bpps(instance, Rule::BestFit, order)
}

/// Items by non-increasing weight; ties keep instance order.
pub fn decreasing_order(instance: &Instance) -> ItemOrder {
    let mut ids: Vec<usize> = (1..=instance.n()).collect();
    ids.sort_by_key(|&i| Reverse(instance.item(i).weight));
    ItemOrder(ids)
}

/// 0-based positions of `weights` by non-increasing weight, stable.
pub fn decreasing_indices(weights: &[u64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..weights.len()).collect();
    idx.sort_by_key(|&k| Reverse(weights[k]));
    idx
}

/// Runs one of the six heuristics. Online variants use instance order.
pub fn run_heuristic(heuristic: Heuristic, instance: &Instance) -> Solution {
    let order = if heuristic.is_decreasing() {
        decreasing_order(instance)
    } else {
        ItemOrder::identity(instance.n())
    };
    pack_bpps(instance, heuristic.rule(), &order)
}

/// Plain bin packing without setups. `order` holds 0-based positions into
/// `weights`; the returned bins hold 0-based positions too.
pub fn bpp_pack(
    weights: &[u64],
    capacity: u64,
    rule: Rule,
    order: &[usize],
) -> Result<Vec<Vec<usize>>> {
    if let Some((k, &w)) = weights.iter().enumerate().find(|(_, &w)| w > capacity) {
        return Err(Error::InfeasibleItem {
            index: k,
            weight: w,
            capacity,
        });
    }
    check_permutation(order, weights.len(), 0)?;
    let bins = pack_greedy(rule, order, capacity, |_, k| weights[k], |_| 0);
    Ok(bins.into_iter().map(|b| b.items).collect())
}
