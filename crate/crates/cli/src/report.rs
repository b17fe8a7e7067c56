use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use hullscan::{DatasetSpec, PipelineConfig, StageStats};
use serde::Serialize;

pub const CSV_HEADER: &str = "dataset,n,seed,chunks,n_after_r1,n_after_r2,hull_size,t_r1_ms,t_annotate_ms,t_sort_ms,t_r2_ms,t_finalize_ms,t_total_ms,baseline_ms,speedup,remaining_r1_pct,remaining_r2_pct";

/// Result of one dataset run, optionally with a baseline timing.
#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub spec: DatasetSpec,
    pub cfg: PipelineConfig,
    pub stats: StageStats,
    pub baseline_ms: Option<f64>,
    pub speedup: Option<f64>,
    pub remaining_r1_pct: f64,
    pub remaining_r2_pct: f64,
}

impl RunReport {
    pub fn new(
        spec: DatasetSpec,
        cfg: PipelineConfig,
        stats: StageStats,
        baseline_ms: Option<f64>,
    ) -> Self {
        let speedup = baseline_ms.map(|b| b / stats.t_total.max(f64::MIN_POSITIVE));
        Self {
            spec,
            cfg,
            remaining_r1_pct: stats.remaining_r1_pct(),
            remaining_r2_pct: stats.remaining_r2_pct(),
            stats,
            baseline_ms,
            speedup,
        }
    }

    pub fn summary_line(&self) -> String {
        let s = &self.stats;
        let mut line = format!(
            "{} n={} seed={} {}: r1 {} ({:.2}%), r2 {} ({:.2}%), hull {}, total {:.3} ms (preprocess {:.3}, finalize {:.3})",
            self.spec.label(),
            s.n_input,
            self.spec.seed,
            self.cfg.label(),
            s.n_after_round1,
            self.remaining_r1_pct,
            s.n_after_round2,
            self.remaining_r2_pct,
            s.hull_size,
            s.t_total,
            s.t_preprocess(),
            s.t_finalize,
        );
        if let (Some(b), Some(x)) = (self.baseline_ms, self.speedup) {
            line.push_str(&format!(", baseline {b:.3} ms, speedup {x:.2}x"));
        }
        line
    }

    pub fn csv_row(&self) -> CsvRow {
        let s = &self.stats;
        CsvRow {
            dataset: self.spec.label(),
            n: s.n_input,
            seed: self.spec.seed,
            chunks: if self.cfg.chunked {
                self.cfg.chunk_count
            } else {
                1
            },
            n_after_r1: s.n_after_round1,
            n_after_r2: s.n_after_round2,
            hull_size: s.hull_size,
            t_r1_ms: s.t_round1,
            t_annotate_ms: s.t_annotate,
            t_sort_ms: s.t_sort,
            t_r2_ms: s.t_round2,
            t_finalize_ms: s.t_finalize,
            t_total_ms: s.t_total,
            baseline_ms: self.baseline_ms,
            speedup: self.speedup,
            remaining_r1_pct: self.remaining_r1_pct,
            remaining_r2_pct: self.remaining_r2_pct,
        }
    }
}

/// One CSV record; field names are the column names.
#[derive(Clone, Debug, Serialize)]
pub struct CsvRow {
    pub dataset: String,
    pub n: usize,
    pub seed: u64,
    pub chunks: usize,
    pub n_after_r1: usize,
    pub n_after_r2: usize,
    pub hull_size: usize,
    pub t_r1_ms: f64,
    pub t_annotate_ms: f64,
    pub t_sort_ms: f64,
    pub t_r2_ms: f64,
    pub t_finalize_ms: f64,
    pub t_total_ms: f64,
    pub baseline_ms: Option<f64>,
    pub speedup: Option<f64>,
    pub remaining_r1_pct: f64,
    pub remaining_r2_pct: f64,
}

pub fn write_csv<W: Write>(w: W, reports: &[RunReport], header: bool) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().has_headers(header).from_writer(w);
    for r in reports {
        wtr.serialize(r.csv_row())?;
    }
    wtr.flush()?;
    Ok(())
}

/// Appends rows to `path`, writing the header first if the file is new or
/// empty.
pub fn append_csv(path: &Path, reports: &[RunReport]) -> Result<()> {
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    let empty = file.metadata()?.len() == 0;
    write_csv(file, reports, empty)
}

#[cfg(test)]
mod tests {
    use hullscan::DatasetKind;

    use super::*;

    fn report() -> RunReport {
        let stats = StageStats {
            n_input: 200,
            n_after_round1: 100,
            n_after_round2: 20,
            hull_size: 10,
            t_total: 2.0,
            ..StageStats::default()
        };
        RunReport::new(
            DatasetSpec::generated(DatasetKind::Disk, 200, 3),
            PipelineConfig::default(),
            stats,
            Some(5.0),
        )
    }

    #[test]
    fn header_matches_schema() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[report()], true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        assert_eq!(
            lines.next().unwrap(),
            "disk,200,3,1024,100,20,10,0.0,0.0,0.0,0.0,0.0,2.0,5.0,2.5,50.0,10.0"
        );
    }

    #[test]
    fn missing_baseline_leaves_empty_cells() {
        let mut r = report();
        r.baseline_ms = None;
        r.speedup = None;
        let mut buf = Vec::new();
        write_csv(&mut buf, &[r], false).unwrap();
        assert!(String::from_utf8(buf).unwrap().contains(",2.0,,,50.0,"));
    }

    #[test]
    fn append_writes_header_once() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        append_csv(&path, &[report()]).unwrap();
        append_csv(&path, &[report(), report()]).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert_eq!(text.lines().filter(|l| *l == CSV_HEADER).count(), 1);
    }
}
