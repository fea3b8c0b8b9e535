//! Instances, bins and solutions, together with the load and cost
//! semantics everything else builds on.
//!
//! Items and classes are identified by 1-based indices, matching the text
//! file format. All quantities are non-negative integers.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A single item: a positive weight and the (1-based) class it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Item {
    pub weight: u64,
    pub class: usize,
}

/// Per-class setup data. A bin hosting at least one item of the class loses
/// `setup_weight` units of capacity and pays `setup_cost` once.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Class {
    pub setup_weight: u64,
    pub setup_cost: u64,
}

/// A bin packing instance with class setups.
///
/// Construction does not validate; call [`validate_instance`] (the parser
/// does so automatically).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    /// Bin capacity `d`.
    pub capacity: u64,
    /// Cost `r` of opening one bin.
    pub bin_cost: u64,
    pub classes: Vec<Class>,
    pub items: Vec<Item>,
}

impl Instance {
    pub fn new(capacity: u64, bin_cost: u64, classes: Vec<Class>, items: Vec<Item>) -> Self {
        Instance {
            capacity,
            bin_cost,
            classes,
            items,
        }
    }

    /// Same instance with a different bin cost.
    pub fn with_bin_cost(mut self, r: u64) -> Self {
        self.bin_cost = r;
        self
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.items.len()
    }

    /// Number of classes.
    pub fn m(&self) -> usize {
        self.classes.len()
    }

    /// Item by 1-based id. Panics when out of range.
    pub fn item(&self, id: usize) -> &Item {
        &self.items[id - 1]
    }

    /// Class by 1-based id. Panics when out of range.
    pub fn class(&self, c: usize) -> &Class {
        &self.classes[c - 1]
    }

    /// Weight plus the setup weight of the item's class.
    pub fn standalone_load(&self, id: usize) -> u64 {
        let item = self.item(id);
        item.weight + self.class(item.class).setup_weight
    }

    /// 1-based ids of the items of class `c`, in instance order.
    pub fn items_of_class(&self, c: usize) -> Vec<usize> {
        self.items
            .iter()
            .enumerate()
            .filter(|(_, it)| it.class == c)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn total_weight(&self) -> u64 {
        self.items.iter().map(|it| it.weight).sum()
    }

    /// Load of the whole item set: every weight plus every class setup once.
    pub fn total_load(&self) -> u64 {
        let setups: u64 = (1..=self.m())
            .filter(|&c| self.items.iter().any(|it| it.class == c))
            .map(|c| self.class(c).setup_weight)
            .sum();
        self.total_weight() + setups
    }

    /// True when every item fits into a single bin.
    pub fn fits_single_bin(&self) -> bool {
        self.total_load() <= self.capacity
    }

    /// The plain bin packing instance of one class, with capacity reduced by
    /// that class's setup weight.
    pub fn class_sub_instance(&self, c: usize) -> ClassSubInstance {
        let item_ids = self.items_of_class(c);
        let weights = item_ids.iter().map(|&i| self.item(i).weight).collect();
        ClassSubInstance {
            class: c,
            item_ids,
            weights,
            capacity: self.capacity.saturating_sub(self.class(c).setup_weight),
        }
    }
}

/// Items of one class viewed as a classical bin packing instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSubInstance {
    pub class: usize,
    pub item_ids: Vec<usize>,
    pub weights: Vec<u64>,
    /// `d - s_c`.
    pub capacity: u64,
}

/// A set of item ids, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bin {
    items: Vec<usize>,
}

impl Bin {
    pub fn new(items: impl IntoIterator<Item = usize>) -> Self {
        let mut items: Vec<usize> = items.into_iter().collect();
        items.sort_unstable();
        Bin { items }
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Union of two bins.
    pub fn union(&self, other: &Bin) -> Bin {
        Bin::new(self.items.iter().chain(other.items.iter()).copied())
    }
}

impl FromIterator<usize> for Bin {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Bin::new(iter)
    }
}

/// A family of bins meant to partition the item set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Solution {
    pub bins: Vec<Bin>,
}

impl Solution {
    pub fn new(bins: Vec<Bin>) -> Self {
        Solution { bins }
    }

    pub fn from_sets<I, B>(sets: I) -> Self
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        Solution {
            bins: sets.into_iter().map(Bin::new).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// Bins as plain id vectors, handy in assertions.
    pub fn to_sets(&self) -> Vec<Vec<usize>> {
        self.bins.iter().map(|b| b.items().to_vec()).collect()
    }
}

fn check_item_set(instance: &Instance, items: &[usize]) -> Result<()> {
    if items.is_empty() {
        return Err(Error::invalid("item set is empty"));
    }
    if let Some(&bad) = items.iter().find(|&&i| i == 0 || i > instance.n()) {
        return Err(Error::invalid(format!(
            "item {bad} out of range 1..{}",
            instance.n()
        )));
    }
    Ok(())
}

/// Distinct classes present among `items`, ascending. Ids must be in range.
pub fn active_classes(instance: &Instance, items: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = items.iter().map(|&i| instance.item(i).class).collect();
    set.into_iter().collect()
}

fn load_unchecked(instance: &Instance, items: &[usize]) -> u64 {
    let weights: u64 = items.iter().map(|&i| instance.item(i).weight).sum();
    let setups: u64 = active_classes(instance, items)
        .into_iter()
        .map(|c| instance.class(c).setup_weight)
        .sum();
    weights + setups
}

fn cost_unchecked(instance: &Instance, items: &[usize]) -> u64 {
    instance.bin_cost
        + active_classes(instance, items)
            .into_iter()
            .map(|c| instance.class(c).setup_cost)
            .sum::<u64>()
}

/// Item weights plus one setup weight per active class.
pub fn load(instance: &Instance, items: &[usize]) -> Result<u64> {
    check_item_set(instance, items)?;
    Ok(load_unchecked(instance, items))
}

/// Bin cost plus one setup cost per active class.
pub fn cost(instance: &Instance, items: &[usize]) -> Result<u64> {
    check_item_set(instance, items)?;
    Ok(cost_unchecked(instance, items))
}

impl Bin {
    /// Load of this bin; ids must be in range for `instance`.
    pub fn load(&self, instance: &Instance) -> u64 {
        load_unchecked(instance, &self.items)
    }

    pub fn cost(&self, instance: &Instance) -> u64 {
        cost_unchecked(instance, &self.items)
    }

    pub fn classes(&self, instance: &Instance) -> Vec<usize> {
        active_classes(instance, &self.items)
    }
}

/// A broken rule in an instance or a solution. Bins are reported 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoItems,
    NoClasses,
    ZeroCapacity,
    ZeroBinCost,
    ZeroWeight {
        item: usize,
    },
    BadClassLabel {
        item: usize,
        class: usize,
        m: usize,
    },
    ItemTooLarge {
        item: usize,
        load: u64,
        capacity: u64,
    },
    EmptyClass {
        class: usize,
    },
    EmptyBin {
        bin: usize,
    },
    UnknownItem {
        bin: usize,
        item: usize,
        n: usize,
    },
    Duplicate {
        item: usize,
    },
    Unassigned {
        item: usize,
    },
    Overloaded {
        bin: usize,
        load: u64,
        capacity: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match *self {
            NoItems => write!(f, "instance has no items"),
            NoClasses => write!(f, "instance has no classes"),
            ZeroCapacity => write!(f, "d must be at least 1"),
            ZeroBinCost => write!(f, "r must be at least 1"),
            ZeroWeight { item } => write!(f, "item {item}: weight must be at least 1"),
            BadClassLabel { item, class, m } => {
                write!(f, "item {item}: class {class} outside 1..{m}")
            }
            ItemTooLarge {
                item,
                load,
                capacity,
            } => write!(f, "item {item}: w+s = {load} > d = {capacity}"),
            EmptyClass { class } => write!(f, "class {class} has no items"),
            EmptyBin { bin } => write!(f, "bin {bin} is empty"),
            UnknownItem { bin, item, n } => write!(f, "bin {bin}: item {item} outside 1..{n}"),
            Duplicate { item } => write!(f, "item {item} assigned more than once"),
            Unassigned { item } => write!(f, "item {item} unassigned"),
            Overloaded {
                bin,
                load,
                capacity,
            } => write!(f, "bin {bin}: load {load} > d = {capacity}"),
        }
    }
}

/// Informational findings that do not make an instance invalid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Note {
    /// Every item fits into one bin; approximation guarantees exclude this case.
    SingleBin { load: u64, capacity: u64 },
}

impl fmt::Display for Note {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Note::SingleBin { load, capacity } => {
                write!(
                    f,
                    "all items fit in one bin (load {load} <= d = {capacity})"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceCheck {
    pub violations: Vec<Violation>,
    pub notes: Vec<Note>,
}

impl InstanceCheck {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<Vec<Note>> {
        if self.violations.is_empty() {
            Ok(self.notes)
        } else {
            Err(Error::Validation(self.violations))
        }
    }
}

pub fn validate_instance(instance: &Instance) -> InstanceCheck {
    let mut violations = Vec::new();
    let (n, m, d) = (instance.n(), instance.m(), instance.capacity);
    if n == 0 {
        violations.push(Violation::NoItems);
    }
    if m == 0 {
        violations.push(Violation::NoClasses);
    }
    if d == 0 {
        violations.push(Violation::ZeroCapacity);
    }
    if instance.bin_cost == 0 {
        violations.push(Violation::ZeroBinCost);
    }

    let mut class_seen = vec![false; m + 1];
    for (idx, item) in instance.items.iter().enumerate() {
        let id = idx + 1;
        if item.weight == 0 {
            violations.push(Violation::ZeroWeight { item: id });
        }
        if item.class == 0 || item.class > m {
            violations.push(Violation::BadClassLabel {
                item: id,
                class: item.class,
                m,
            });
            continue;
        }
        class_seen[item.class] = true;
        let needed = item.weight + instance.class(item.class).setup_weight;
        if needed > d {
            violations.push(Violation::ItemTooLarge {
                item: id,
                load: needed,
                capacity: d,
            });
        }
    }
    for (c, seen) in class_seen.iter().enumerate().skip(1) {
        if !seen {
            violations.push(Violation::EmptyClass { class: c });
        }
    }

    let mut notes = Vec::new();
    if violations.is_empty() && instance.fits_single_bin() {
        notes.push(Note::SingleBin {
            load: instance.total_load(),
            capacity: d,
        });
    }
    InstanceCheck { violations, notes }
}

/// Checks that `solution` partitions the items and that every bin fits.
/// Returns the list of violations; empty means valid.
pub fn validate_solution(instance: &Instance, solution: &Solution) -> Vec<Violation> {
    let n = instance.n();
    let mut violations = Vec::new();
    let mut seen = vec![0usize; n + 1];
    for (b, bin) in solution.bins.iter().enumerate() {
        let bin_no = b + 1;
        if bin.is_empty() {
            violations.push(Violation::EmptyBin { bin: bin_no });
            continue;
        }
        let mut in_range = true;
        for &i in bin.items() {
            if i == 0 || i > n {
                violations.push(Violation::UnknownItem {
                    bin: bin_no,
                    item: i,
                    n,
                });
                in_range = false;
            } else {
                seen[i] += 1;
            }
        }
        if in_range {
            let l = bin.load(instance);
            if l > instance.capacity {
                violations.push(Violation::Overloaded {
                    bin: bin_no,
                    load: l,
                    capacity: instance.capacity,
                });
            }
        }
    }
    for (i, &count) in seen.iter().enumerate().skip(1) {
        match count {
            0 => violations.push(Violation::Unassigned { item: i }),
            1 => {}
            _ => violations.push(Violation::Duplicate { item: i }),
        }
    }
    violations
}

/// Total cost `r·|bins| + Σ setup costs` of a valid solution.
pub fn solution_cost(instance: &Instance, solution: &Solution) -> Result<u64> {
    let violations = validate_solution(instance, solution);
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }
    Ok(total_cost(instance, solution))
}

/// Cost without validation. Ids must be in range.
pub(crate) fn total_cost(instance: &Instance, solution: &Solution) -> u64 {
    solution.bins.iter().map(|b| b.cost(instance)).sum()
}
