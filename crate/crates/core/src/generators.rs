//! Instance generators: the two adversarial families on which the online
//! heuristics degrade without bound, and seeded random instances.
//!
//! # Random instances
//!
//! The random generator is reproducible across implementations. It draws
//! from a SplitMix64 stream whose state starts at the seed, and maps every
//! draw to an inclusive range as `lo + next_u64() % (hi - lo + 1)`.
//! Draws happen in this order:
//!
//! 1. `m` from the class-count range, clipped above to `n`;
//! 2. `d`, then `r`;
//! 3. for each class `c = 1..m`: `s_c` from the setup-weight range clipped
//!    above to `d - w_lo`, then `f_c`;
//! 4. class labels start round-robin (`i mod m + 1`) and are shuffled by
//!    Fisher-Yates, drawing `j` in `0..=i` for `i = n-1` down to `1`;
//! 5. for each item, `w_i` from the weight range; when `w_i + s_c > d` it is
//!    redrawn once from `w_lo..=min(w_hi, d - s_c)`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::model::{Class, Instance, Item};

fn unit_items(classes: impl IntoIterator<Item = usize>) -> Vec<Item> {
    classes
        .into_iter()
        .map(|class| Item { weight: 1, class })
        .collect()
}

fn zero_cost(setup_weight: u64) -> Class {
    Class {
        setup_weight,
        setup_cost: 0,
    }
}

/// Two classes of `n/2` unit items with labels alternating `1,2,1,2,...`.
/// Next Fit opens one bin per item; the optimum uses two bins.
pub fn gen_nf_worst(n: usize) -> Result<Instance> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "n must be even and at least 4, got {n}"
        )));
    }
    let half = (n / 2) as u64;
    Ok(Instance::new(
        n as u64 - 1,
        1,
        vec![zero_cost(half - 1), zero_cost(half - 1)],
        unit_items((0..n).map(|i| i % 2 + 1)),
    ))
}

/// Three classes of `n/3` unit items. Labels follow `(1,2,3,3)` repeated
/// `n/6` times, then the remaining `n/6` class-1 items, then the remaining
/// `n/6` class-2 items. First Fit and Best Fit use `n/3 + 2` bins, the
/// optimum three.
pub fn gen_ffbf_worst(n: usize) -> Result<Instance> {
    if n < 6 || !n.is_multiple_of(6) {
        return Err(Error::invalid(format!("n must be divisible by 6, got {n}")));
    }
    let third = (n / 3) as u64;
    let sixth = n / 6;
    let labels = std::iter::repeat_n([1, 2, 3, 3], sixth)
        .flatten()
        .chain(std::iter::repeat_n(1, sixth))
        .chain(std::iter::repeat_n(2, sixth));
    Ok(Instance::new(
        2 * third - 1,
        1,
        vec![
            zero_cost(third - 1),
            zero_cost(third - 1),
            zero_cost(third - 2),
        ],
        unit_items(labels),
    ))
}

/// Inclusive integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: u64,
    pub hi: u64,
}

impl IntRange {
    pub const fn new(lo: u64, hi: u64) -> Self {
        IntRange { lo, hi }
    }

    pub const fn fixed(v: u64) -> Self {
        IntRange { lo: v, hi: v }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Accepts `v` or `lo..hi` (inclusive).
impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("bad range '{s}'")))
        };
        match s.split_once("..") {
            Some((lo, hi)) => Ok(IntRange::new(num(lo)?, num(hi.trim_start_matches('='))?)),
            None => Ok(IntRange::fixed(num(s)?)),
        }
    }
}

/// Parameters of the random generator. All ranges are inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub n: usize,
    pub seed: u64,
    pub classes: IntRange,
    pub capacity: IntRange,
    pub bin_cost: IntRange,
    pub weight: IntRange,
    pub setup_weight: IntRange,
    pub setup_cost: IntRange,
}

impl RandomParams {
    pub fn new(n: usize, seed: u64) -> Self {
        RandomParams {
            n,
            seed,
            classes: IntRange::new(1, 3),
            capacity: IntRange::fixed(12),
            bin_cost: IntRange::fixed(1),
            weight: IntRange::new(1, 6),
            setup_weight: IntRange::new(0, 3),
            setup_cost: IntRange::new(0, 4),
        }
    }

    fn check(&self) -> Result<()> {
        let named = [
            ("classes", self.classes),
            ("capacity", self.capacity),
            ("bin cost", self.bin_cost),
            ("weight", self.weight),
            ("setup weight", self.setup_weight),
            ("setup cost", self.setup_cost),
        ];
        for (name, r) in named {
            if r.lo > r.hi {
                return Err(Error::invalid(format!(
                    "{name} range {}..{} is empty",
                    r.lo, r.hi
                )));
            }
        }
        if self.n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        for (name, r) in [
            ("classes", self.classes),
            ("capacity", self.capacity),
            ("bin cost", self.bin_cost),
            ("weight", self.weight),
        ] {
            if r.lo == 0 {
                return Err(Error::invalid(format!(
                    "{name} range must start at 1 or above"
                )));
            }
        }
        if self.classes.lo as usize > self.n {
            return Err(Error::invalid(format!(
                "cannot give {} classes an item each with n = {}",
                self.classes.lo, self.n
            )));
        }
        if self.weight.lo + self.setup_weight.lo > self.capacity.lo {
            return Err(Error::invalid(format!(
                "infeasible ranges: min w + min s = {} > min d = {}",
                self.weight.lo + self.setup_weight.lo,
                self.capacity.lo
            )));
        }
        Ok(())
    }
}

struct Draws(SplitMix64);

impl Draws {
    fn new(seed: u64) -> Self {
        Draws(SplitMix64::seed_from_u64(seed))
    }

    fn range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        let span = hi - lo;
        if span == u64::MAX {
            return self.0.next_u64();
        }
        lo + self.0.next_u64() % (span + 1)
    }

    fn within(&mut self, r: IntRange) -> u64 {
        self.range(r.lo, r.hi)
    }
}

/// Seeded random instance; see the module docs for the exact procedure.
pub fn gen_random(params: &RandomParams) -> Result<Instance> {
    params.check()?;
    let mut rng = Draws::new(params.seed);
    let n = params.n;

    let m = rng.range(params.classes.lo, params.classes.hi.min(n as u64)) as usize;
    let d = rng.within(params.capacity);
    let r = rng.within(params.bin_cost);

    let w_lo = params.weight.lo;
    let classes: Vec<Class> = (0..m)
        .map(|_| {
            let s_hi = params.setup_weight.hi.min(d - w_lo);
            let setup_weight = rng.range(params.setup_weight.lo, s_hi);
            let setup_cost = rng.within(params.setup_cost);
            Class {
                setup_weight,
                setup_cost,
            }
        })
        .collect();

    let mut labels: Vec<usize> = (0..n).map(|i| i % m + 1).collect();
    for i in (1..n).rev() {
        let j = rng.range(0, i as u64) as usize;
        labels.swap(i, j);
    }

    let items = labels
        .into_iter()
        .map(|class| {
            let s = classes[class - 1].setup_weight;
            let mut weight = rng.within(params.weight);
            if weight + s > d {
                weight = rng.range(w_lo, params.weight.hi.min(d - s));
            }
            Item { weight, class }
        })
        .collect();

    Ok(Instance::new(d, r, classes, items))
}

/// Random instances for `seeds`, with `n` cycling through `n_range` by seed
/// (`n = n_lo + seed mod (n_hi - n_lo + 1)`). Other ranges come from `template`.
pub fn random_corpus(
    seeds: RangeInclusive<u64>,
    n_range: RangeInclusive<usize>,
    template: &RandomParams,
) -> Result<Vec<Instance>> {
    let (lo, hi) = (*n_range.start(), *n_range.end());
    if lo > hi {
        return Err(Error::invalid("empty n range"));
    }
    let span = (hi - lo + 1) as u64;
    seeds
        .map(|seed| {
            let params = RandomParams {
                n: lo + (seed % span) as usize,
                seed,
                ..template.clone()
            };
            gen_random(&params)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    NfWorst,
    FfbfWorst,
    Random,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nf-worst" => Ok(Family::NfWorst),
            "ffbf-worst" => Ok(Family::FfbfWorst),
            "random" => Ok(Family::Random),
            _ => Err(Error::invalid(format!("unknown family '{s}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::NfWorst => "nf-worst",
            Family::FfbfWorst => "ffbf-worst",
            Family::Random => "random",
        })
    }
}

/// Which family to build, plus the random parameters (ignored by the
/// adversarial families apart from `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub random: RandomParams,
}

pub fn generate(params: &FamilyParams) -> Result<Instance> {
    match params.family {
        Family::NfWorst => gen_nf_worst(params.random.n),
        Family::FfbfWorst => gen_ffbf_worst(params.random.n),
        Family::Random => gen_random(&params.random),
    }
}
