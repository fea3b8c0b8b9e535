//! Ratio sweeps over instance files.

use std::path::{Path, PathBuf};
use std::time::Instant;

use log::warn;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::algorithm::{solve, AlgorithmId, SolveConfig};
use crate::bounds::combinatorial_lb;
use crate::error::{Error, Result};
use crate::exact::exact_bpps;
use crate::format::parse_instance;
use crate::model::Instance;
use crate::report::{theoretical_bound, RatioReport, ReferenceKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedInstance {
    pub id: String,
    pub instance: Instance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub algorithms: Vec<AlgorithmId>,
    pub reference: ReferenceKind,
    pub solve: SolveConfig,
    /// Fill the `wall_ms` column. Off by default so that output is reproducible.
    pub timing: bool,
}

/// Instance files named by a directory (every regular file in it) or a glob
/// pattern, sorted by path. Ids are file stems.
pub fn instance_paths(source: &str) -> Result<Vec<PathBuf>> {
    let dir = Path::new(source);
    let mut paths: Vec<PathBuf> = if dir.is_dir() {
        std::fs::read_dir(dir)?
            .map(|e| e.map(|e| e.path()))
            .collect::<std::io::Result<Vec<_>>>()?
            .into_iter()
            .filter(|p| p.is_file())
            .collect()
    } else {
        glob::glob(source)
            .map_err(|e| Error::invalid(format!("bad pattern '{source}': {e}")))?
            .filter_map(|entry| entry.ok())
            .filter(|p| p.is_file())
            .collect()
    };
    paths.sort();
    Ok(paths)
}

pub fn load_instances(source: &str) -> Result<Vec<NamedInstance>> {
    instance_paths(source)?
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path)?;
            let instance = parse_instance(&text).map_err(|e| match e {
                Error::Parse { line, message } => Error::Parse {
                    line,
                    message: format!("{}: {message}", path.display()),
                },
                other => other,
            })?;
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok(NamedInstance { id, instance })
        })
        .collect()
}

fn reference(inst: &NamedInstance, config: &BenchConfig) -> Result<Option<u64>> {
    match config.reference {
        ReferenceKind::LowerBound => Ok(Some(combinatorial_lb(&inst.instance))),
        ReferenceKind::Exact => match exact_bpps(&inst.instance, &config.solve.exact) {
            Ok(opt) => Ok(Some(opt.value)),
            Err(Error::ResourceLimit { reason, .. }) => {
                warn!("skipping {}: oracle gave up ({reason})", inst.id);
                Ok(None)
            }
            Err(e) => Err(e),
        },
    }
}

/// One report per (instance, algorithm), ordered by instance then by the
/// position of the algorithm in `config.algorithms`. Pairs are evaluated in
/// parallel. Instances the oracle cannot settle, and algorithms that hit a
/// resource limit, are skipped with a warning.
pub fn run_bench(instances: &[NamedInstance], config: &BenchConfig) -> Result<Vec<RatioReport>> {
    if instances.is_empty() {
        return Err(Error::invalid("no instances to benchmark"));
    }
    if config.algorithms.is_empty() {
        return Err(Error::invalid("no algorithms given"));
    }
    let references: Vec<Option<u64>> = instances
        .par_iter()
        .map(|inst| reference(inst, config))
        .collect::<Result<_>>()?;

    let pairs: Vec<(usize, usize)> = (0..instances.len())
        .filter(|&i| references[i].is_some())
        .flat_map(|i| (0..config.algorithms.len()).map(move |a| (i, a)))
        .collect();

    let rows: Vec<Option<RatioReport>> = pairs
        .par_iter()
        .map(|&(i, a)| {
            let inst = &instances[i];
            let algorithm = config.algorithms[a];
            let reference = references[i].expect("filtered above");
            let start = Instant::now();
            let outcome = match solve(algorithm, &inst.instance, &config.solve) {
                Ok(o) => o,
                Err(Error::ResourceLimit { reason, .. }) => {
                    warn!("skipping {algorithm} on {}: {reason}", inst.id);
                    return Ok(None);
                }
                Err(e) => return Err(e),
            };
            let wall_ms = config.timing.then(|| start.elapsed().as_millis());
            Ok(Some(RatioReport {
                instance: inst.id.clone(),
                algorithm,
                bins: outcome.solution.len(),
                cost: outcome.cost,
                reference,
                ref_source: config.reference,
                ratio: Ratio::new(outcome.cost, reference),
                bound: theoretical_bound(&inst.instance, algorithm),
                wall_ms,
            }))
        })
        .collect::<Result<_>>()?;

    Ok(rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_nf_worst;

    fn cfg(algs: &[&str], reference: ReferenceKind) -> BenchConfig {
        BenchConfig {
            algorithms: algs.iter().map(|a| a.parse().unwrap()).collect(),
            reference,
            solve: SolveConfig::default(),
            timing: false,
        }
    }

    #[test]
    fn empty_set_is_an_error() {
        assert!(run_bench(&[], &cfg(&["nf"], ReferenceKind::Exact)).is_err());
    }

    #[test]
    fn rows_follow_instance_then_algorithm_order() {
        let insts: Vec<NamedInstance> = [4, 8]
            .into_iter()
            .map(|n| NamedInstance {
                id: format!("nf{n}"),
                instance: gen_nf_worst(n).unwrap(),
            })
            .collect();
        let rows = run_bench(&insts, &cfg(&["tp-ffd", "nf"], ReferenceKind::LowerBound)).unwrap();
        let keys: Vec<(String, String)> = rows
            .iter()
            .map(|r| (r.instance.clone(), r.algorithm.to_string()))
            .collect();
        assert_eq!(
            keys,
            [
                ("nf4", "tp-ffd"),
                ("nf4", "nf"),
                ("nf8", "tp-ffd"),
                ("nf8", "nf")
            ]
            .map(|(a, b)| (a.to_string(), b.to_string()))
        );
        assert_eq!(rows[3].ratio, Ratio::from_integer(4));
        assert!(rows.iter().all(|r| r.wall_ms.is_none()));
    }

    #[test]
    fn oversized_instances_are_skipped_under_exact_reference() {
        let mut c = cfg(&["nf"], ReferenceKind::Exact);
        c.solve.exact.node_limit = 1;
        use crate::model::{Class, Item};
        let insts = vec![NamedInstance {
            id: "hard".into(),
            instance: Instance::new(
                10,
                1,
                vec![Class::default()],
                [5, 4, 4, 3, 2, 2]
                    .map(|weight| Item { weight, class: 1 })
                    .to_vec(),
            ),
        }];
        assert!(run_bench(&insts, &c).unwrap().is_empty());
    }
}
