use std::time::Instant;

use anyhow::Result;
use hullscan::oracle::monotone_chain;
use hullscan::{full_pipeline, DatasetSpec, PipelineConfig, StageStats};
use rayon::prelude::*;

use crate::report::RunReport;

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v[v.len() / 2]
}

/// Median wall time of the monotone-chain baseline, milliseconds.
pub fn time_baseline(points: &[hullscan::Point2], repeats: usize) -> Result<f64> {
    let mut times = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let t = Instant::now();
        let hull = monotone_chain(points)?;
        times.push(t.elapsed().as_secs_f64() * 1e3);
        drop(hull);
    }
    Ok(median(times))
}

/// Stats of the pipeline run with the median total time.
pub fn time_pipeline(
    points: &[hullscan::Point2],
    cfg: &PipelineConfig,
    repeats: usize,
) -> Result<StageStats> {
    let mut runs = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        runs.push(full_pipeline(points, cfg)?.1);
    }
    runs.sort_by(|a, b| a.t_total.total_cmp(&b.t_total));
    Ok(runs[runs.len() / 2])
}

pub fn bench_spec(spec: &DatasetSpec, cfg: &PipelineConfig, repeats: usize) -> Result<RunReport> {
    let points = spec.materialize()?;
    let baseline = time_baseline(&points, repeats)?;
    let stats = time_pipeline(&points, cfg, repeats)?;
    Ok(RunReport::new(spec.clone(), *cfg, stats, Some(baseline)))
}

/// Benchmarks every spec, `jobs` at a time, in input order.
pub fn bench_all(
    specs: &[DatasetSpec],
    cfg: &PipelineConfig,
    repeats: usize,
    jobs: usize,
) -> Result<Vec<RunReport>> {
    if jobs <= 1 {
        return specs.iter().map(|s| bench_spec(s, cfg, repeats)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    pool.install(|| {
        specs
            .par_iter()
            .map(|s| bench_spec(s, cfg, repeats))
            .collect()
    })
}
