//! End-to-end hull computation with per-stage counts and timings.

use std::time::Instant;

use crate::angular::{annotate_keep_duplicates, select_anchor, sort_dedup, split_regions};
use crate::discard::{
    discard_chunked, discard_sequential, stable_compact, ChunkConfig, DEFAULT_CHUNK_COUNT,
};
use crate::error::{HullError, Result};
use crate::geom::{check_finite, Point2};
use crate::hull::{graham_finalize, Hull};
use crate::prefilter::{classify_quad, compact, discard_interior, find_extremes};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub chunk_count: usize,
    pub enable_round1: bool,
    pub enable_round2: bool,
    /// Use the sliced walk; otherwise the single sequential walk.
    pub chunked: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            chunk_count: DEFAULT_CHUNK_COUNT,
            enable_round1: true,
            enable_round2: true,
            chunked: true,
        }
    }
}

impl PipelineConfig {
    pub fn with_chunks(chunk_count: usize) -> Self {
        Self {
            chunk_count,
            ..Self::default()
        }
    }

    pub fn sequential() -> Self {
        Self {
            chunked: false,
            ..Self::default()
        }
    }

    pub fn label(&self) -> String {
        let mut s = if self.chunked {
            format!("chunks={}", self.chunk_count)
        } else {
            "sequential".to_string()
        };
        if !self.enable_round1 {
            s.push_str(",no-round1");
        }
        if !self.enable_round2 {
            s.push_str(",no-round2");
        }
        s
    }
}

/// Survivor counts after each stage and wall times in milliseconds.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct StageStats {
    pub n_input: usize,
    pub n_after_round1: usize,
    /// Points handed to the Graham scan (after duplicate removal).
    pub n_after_round2: usize,
    pub hull_size: usize,
    pub t_round1: f64,
    pub t_annotate: f64,
    pub t_sort: f64,
    pub t_round2: f64,
    pub t_finalize: f64,
    pub t_total: f64,
}

impl StageStats {
    pub fn remaining_r1_pct(&self) -> f64 {
        pct(self.n_after_round1, self.n_input)
    }

    pub fn remaining_r2_pct(&self) -> f64 {
        pct(self.n_after_round2, self.n_input)
    }

    /// Time spent before the Graham scan.
    pub fn t_preprocess(&self) -> f64 {
        self.t_round1 + self.t_annotate + self.t_sort + self.t_round2
    }
}

fn pct(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

/// Points discarded by each round, for checking against an oracle.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PipelineTrace {
    pub round1_discarded: Vec<Point2>,
    pub round2_discarded: Vec<Point2>,
}

pub fn full_pipeline(points: &[Point2], cfg: &PipelineConfig) -> Result<(Hull, StageStats)> {
    run(points, cfg, None)
}

/// [`full_pipeline`] that also records every discarded point.
pub fn full_pipeline_traced(
    points: &[Point2],
    cfg: &PipelineConfig,
) -> Result<(Hull, StageStats, PipelineTrace)> {
    let mut trace = PipelineTrace::default();
    let (hull, stats) = run(points, cfg, Some(&mut trace))?;
    Ok((hull, stats, trace))
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn run(
    points: &[Point2],
    cfg: &PipelineConfig,
    mut trace: Option<&mut PipelineTrace>,
) -> Result<(Hull, StageStats)> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    check_finite(points)?;
    let chunks = if cfg.chunked {
        Some(ChunkConfig::new(cfg.chunk_count)?)
    } else {
        None
    };
    let mut stats = StageStats {
        n_input: points.len(),
        ..StageStats::default()
    };
    let start = Instant::now();

    let t = Instant::now();
    let survivors = if cfg.enable_round1 {
        let quad = find_extremes(points)?;
        Some(match trace.as_deref_mut() {
            Some(tr) => {
                let flags = classify_quad(points, &quad);
                tr.round1_discarded = flags.discarded().map(|i| points[i]).collect();
                compact(points, &flags)?
            }
            None => discard_interior(points, &quad),
        })
    } else {
        None
    };
    let survivors = survivors.as_deref().unwrap_or(points);
    stats.n_after_round1 = survivors.len();
    stats.t_round1 = ms(t);

    let t = Instant::now();
    let anchor = select_anchor(survivors)?;
    let buf = annotate_keep_duplicates(survivors, anchor);
    stats.t_annotate = ms(t);

    let t = Instant::now();
    let mut buf = sort_dedup(buf);
    stats.t_sort = ms(t);

    let t = Instant::now();
    if cfg.enable_round2 && buf.len() >= 3 {
        let split = split_regions(&buf)?;
        let flags = match chunks {
            Some(c) => discard_chunked(&buf, split, c)?,
            None => discard_sequential(&buf, split)?,
        };
        if let Some(tr) = trace {
            tr.round2_discarded = flags.discarded().map(|i| buf.point(i)).collect();
        }
        buf = stable_compact(&buf, &flags)?;
    }
    stats.n_after_round2 = buf.len();
    stats.t_round2 = ms(t);

    let t = Instant::now();
    let hull = graham_finalize(&buf);
    stats.t_finalize = ms(t);
    stats.hull_size = hull.len();
    stats.t_total = ms(start);
    Ok((hull, stats))
}
