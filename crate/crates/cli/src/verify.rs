//! Oracle checks behind `hullscan verify`.

use std::fmt;

use anyhow::Result;
use hullscan::oracle::{monotone_chain, strictly_inside_hull};
use hullscan::pipeline::full_pipeline_traced;
use hullscan::{DatasetKind, DatasetSpec, Hull, PipelineConfig, Point2};
use rayon::prelude::*;

pub const DEFAULT_KINDS: [DatasetKind; 4] = [
    DatasetKind::Square,
    DatasetKind::Disk,
    DatasetKind::Circle,
    DatasetKind::Collinear,
];
pub const DEFAULT_N: usize = 2000;
pub const DEFAULT_SEEDS: u64 = 50;

/// Chunk counts 1, 7 and `max_chunks`, the sequential walk, and the three
/// round ablations.
pub fn config_matrix(max_chunks: usize) -> Vec<PipelineConfig> {
    let mut chunks = vec![1, 7, max_chunks];
    chunks.sort_unstable();
    chunks.dedup();
    let mut out: Vec<PipelineConfig> = chunks
        .into_iter()
        .map(PipelineConfig::with_chunks)
        .collect();
    out.push(PipelineConfig::sequential());
    for (r1, r2) in [(false, true), (true, false), (false, false)] {
        out.push(PipelineConfig {
            enable_round1: r1,
            enable_round2: r2,
            chunk_count: max_chunks,
            ..PipelineConfig::default()
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum Problem {
    HullMismatch {
        missing: Vec<Point2>,
        extra: Vec<Point2>,
    },
    UnsafeDiscard {
        round: u8,
        point: Point2,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub spec: DatasetSpec,
    pub cfg: PipelineConfig,
    pub problem: Problem,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FAIL {} n={} seed={} config={}: ",
            self.spec.label(),
            self.spec.n,
            self.spec.seed,
            self.cfg.label()
        )?;
        match &self.problem {
            Problem::HullMismatch { missing, extra } => {
                write!(f, "hull mismatch, missing {missing:?}, extra {extra:?}")
            }
            Problem::UnsafeDiscard { round, point } => {
                write!(
                    f,
                    "round {round} discarded {point}, which is not strictly inside the hull"
                )
            }
        }
    }
}

fn compare(oracle: &Hull, hull: &Hull) -> Option<Problem> {
    if hull.same_vertex_set(oracle) {
        return None;
    }
    let absent = |a: &Hull, b: &Hull| -> Vec<Point2> {
        a.vertices()
            .iter()
            .copied()
            .filter(|p| !b.vertices().contains(p))
            .collect()
    };
    Some(Problem::HullMismatch {
        missing: absent(oracle, hull),
        extra: absent(hull, oracle),
    })
}

/// Checks one dataset under every configuration; returns the first failure.
pub fn verify_instance(
    spec: &DatasetSpec,
    matrix: &[PipelineConfig],
    inject_fault: bool,
) -> Result<Option<Failure>> {
    let points = spec.materialize()?;
    let oracle = monotone_chain(&points)?;
    for (k, cfg) in matrix.iter().enumerate() {
        let (mut hull, _, mut trace) = full_pipeline_traced(&points, cfg)?;
        if inject_fault && k == 0 {
            let victim = oracle.vertices()[0];
            trace.round2_discarded.push(victim);
            hull = Hull::from_ccw(
                hull.vertices()
                    .iter()
                    .copied()
                    .filter(|&p| p != victim)
                    .collect(),
            );
        }
        let fail = |problem| {
            Some(Failure {
                spec: spec.clone(),
                cfg: *cfg,
                problem,
            })
        };
        let discards = [(1u8, &trace.round1_discarded), (2, &trace.round2_discarded)];
        for (round, points) in discards {
            if let Some(&point) = points.iter().find(|&&p| !strictly_inside_hull(&oracle, p)) {
                return Ok(fail(Problem::UnsafeDiscard { round, point }));
            }
        }
        if let Some(problem) = compare(&oracle, &hull) {
            return Ok(fail(problem));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub instances: usize,
    pub configs: usize,
    pub first_failure: Option<Failure>,
    pub failures: usize,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(
                f,
                "verify: {} datasets x {} configs: all passed",
                self.instances, self.configs
            ),
            Some(first) => write!(
                f,
                "{first}\nverify: {} of {} datasets failed",
                self.failures, self.instances
            ),
        }
    }
}

/// Runs [`verify_instance`] over every spec. Only the first spec receives an
/// injected fault.
pub fn verify_all(
    specs: &[DatasetSpec],
    matrix: &[PipelineConfig],
    jobs: usize,
    inject_fault: bool,
) -> Result<Outcome> {
    let check = |(i, s): (usize, &DatasetSpec)| verify_instance(s, matrix, inject_fault && i == 0);
    let results: Vec<Option<Failure>> = if jobs <= 1 {
        specs.iter().enumerate().map(check).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        pool.install(|| {
            specs
                .par_iter()
                .enumerate()
                .map(check)
                .collect::<Result<_>>()
        })?
    };
    let failures = results.iter().filter(|r| r.is_some()).count();
    Ok(Outcome {
        instances: specs.len(),
        configs: matrix.len(),
        first_failure: results.into_iter().flatten().next(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_shape() {
        let m = config_matrix(1024);
        assert_eq!(m.len(), 7);
        assert_eq!(config_matrix(7).len(), 6);
        assert!(m.iter().any(|c| !c.chunked));
    }

    #[test]
    fn degenerate_sizes_pass() {
        let specs: Vec<DatasetSpec> = DEFAULT_KINDS
            .iter()
            .flat_map(|&k| (1..=3).map(move |n| DatasetSpec::generated(k, n, 5)))
            .collect();
        let out = verify_all(&specs, &config_matrix(1024), 1, false).unwrap();
        assert!(out.passed(), "{out}");
    }

    #[test]
    fn injected_fault_is_reported() {
        let spec = DatasetSpec::generated(DatasetKind::Disk, 500, 1);
        let victim = monotone_chain(&spec.materialize().unwrap())
            .unwrap()
            .vertices()[0];
        let out = verify_all(&[spec], &config_matrix(1024), 1, true).unwrap();
        let f = out.first_failure.expect("fault must be caught");
        assert_eq!(
            f.problem,
            Problem::UnsafeDiscard {
                round: 2,
                point: victim
            }
        );
        assert!(f.to_string().contains(&victim.to_string()));
    }
}
