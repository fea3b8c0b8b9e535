//! Plain-text instance, solution and trace files.
//!
//! Instance (whitespace separated, one record per line, 1-based ids):
//!
//! ```text
//! n m d r
//! s_1 f_1          # m class lines
//! ...
//! w_1 c_1          # n item lines
//! ...
//! ```
//!
//! Solution: a header `k total_cost`, then one line per bin with its
//! sorted item ids.
//!
//! Two-phase trace:
//!
//! ```text
//! phase1 K
//! <id> <class> <load> <item ids...>     # K lines
//! merges M
//! <a> <b> <merged> <load>               # M lines
//! final F
//! <id> <load> <item ids...>             # F lines
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{validate_instance, Bin, Class, Instance, Item, Solution, Violation};
use crate::two_phase::PhaseTrace;

pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {} {}",
        instance.n(),
        instance.m(),
        instance.capacity,
        instance.bin_cost
    );
    for c in &instance.classes {
        let _ = writeln!(out, "{} {}", c.setup_weight, c.setup_cost);
    }
    for it in &instance.items {
        let _ = writeln!(out, "{} {}", it.weight, it.class);
    }
    out
}

/// Non-blank lines with their 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
}

fn numbers(line: usize, toks: &[&str], want: usize, what: &str) -> Result<Vec<u64>> {
    if toks.len() != want {
        return Err(Error::parse(
            line,
            format!("{what}: expected {want} fields, found {}", toks.len()),
        ));
    }
    toks.iter()
        .map(|t| {
            t.parse::<u64>().map_err(|_| {
                Error::parse(line, format!("{what}: '{t}' is not a non-negative integer"))
            })
        })
        .collect()
}

/// Parses and validates an instance. Violations are reported with the line
/// of the offending record.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut recs = records(text);
    let (hline, header) = recs
        .next()
        .ok_or_else(|| Error::parse(1, "empty instance file"))?;
    let h = numbers(hline, &header, 4, "header 'n m d r'")?;
    let (n, m) = (h[0] as usize, h[1] as usize);

    let mut class_lines = Vec::with_capacity(m);
    let mut classes = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, toks) = recs.next().ok_or_else(|| {
            Error::parse(
                hline,
                format!("expected {m} class lines, found {}", classes.len()),
            )
        })?;
        let v = numbers(line, &toks, 2, "class line 's f'")?;
        class_lines.push(line);
        classes.push(Class {
            setup_weight: v[0],
            setup_cost: v[1],
        });
    }

    let mut item_lines = Vec::with_capacity(n);
    let mut items = Vec::with_capacity(n);
    for (line, toks) in recs {
        let v = numbers(line, &toks, 2, "item line 'w c'")?;
        item_lines.push(line);
        items.push(Item {
            weight: v[0],
            class: v[1] as usize,
        });
    }
    if items.len() != n {
        let line = item_lines.get(n).copied().unwrap_or(hline);
        return Err(Error::parse(
            line,
            format!("expected {n} item lines, found {}", items.len()),
        ));
    }

    let instance = Instance::new(h[2], h[3], classes, items);
    let check = validate_instance(&instance);
    if let Some(first) = check.violations.first() {
        let line = match *first {
            Violation::ZeroWeight { item }
            | Violation::BadClassLabel { item, .. }
            | Violation::ItemTooLarge { item, .. } => item_lines[item - 1],
            Violation::EmptyClass { class } => class_lines[class - 1],
            _ => hline,
        };
        let all: Vec<String> = check.violations.iter().map(ToString::to_string).collect();
        return Err(Error::parse(line, all.join("; ")));
    }
    Ok(instance)
}

pub fn write_solution(instance: &Instance, solution: &Solution) -> String {
    let total: u64 = solution.bins.iter().map(|b| b.cost(instance)).sum();
    let mut out = format!("{} {}\n", solution.len(), total);
    for bin in &solution.bins {
        out.push_str(&join(bin.items()));
        out.push('\n');
    }
    out
}

/// Parses a solution file; returns the bins and the declared total cost.
pub fn parse_solution(text: &str) -> Result<(Solution, u64)> {
    let mut recs = records(text);
    let (hline, header) = recs
        .next()
        .ok_or_else(|| Error::parse(1, "empty solution file"))?;
    let h = numbers(hline, &header, 2, "header 'k total_cost'")?;
    let mut bins = Vec::new();
    for (line, toks) in recs {
        let ids = toks
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("'{t}' is not an item id")))
            })
            .collect::<Result<Vec<_>>>()?;
        bins.push(Bin::new(ids));
    }
    if bins.len() as u64 != h[0] {
        return Err(Error::parse(
            hline,
            format!("expected {} bin lines, found {}", h[0], bins.len()),
        ));
    }
    Ok((Solution::new(bins), h[1]))
}

pub fn write_trace(instance: &Instance, trace: &PhaseTrace) -> String {
    let mut out = format!("phase1 {}\n", trace.phase1.len());
    for (k, bin) in trace.phase1.iter().enumerate() {
        let class = instance.item(bin.items()[0]).class;
        let _ = writeln!(
            out,
            "{} {} {} {}",
            k + 1,
            class,
            bin.load(instance),
            join(bin.items())
        );
    }
    let _ = writeln!(out, "merges {}", trace.merges.len());
    for ev in &trace.merges {
        let _ = writeln!(out, "{} {} {} {}", ev.a, ev.b, ev.merged, ev.load);
    }
    let _ = writeln!(out, "final {}", trace.final_bins.len());
    for (id, bin) in &trace.final_bins {
        let _ = writeln!(out, "{} {} {}", id, bin.load(instance), join(bin.items()));
    }
    out
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
