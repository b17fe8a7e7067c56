//! Front end for the `hullscan` binary: `run`, `bench`, `verify` and `gen`.

pub mod args;
pub mod bench;
pub mod report;
pub mod verify;

use std::fs::File;
use std::io::{BufWriter, Write};

use anyhow::{bail, Context, Result};
use hullscan::datagen::write_points;
use hullscan::full_pipeline;

pub use args::{Cli, Command};
pub use report::RunReport;

/// Runs one parsed command. `Ok(false)` means the command completed but
/// reports failure (a `verify` mismatch).
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Run(a) => {
            let spec = a.source.single_spec()?;
            let cfg = a.pipeline.config();
            let points = spec.materialize()?;
            let (hull, stats) = full_pipeline(&points, &cfg)?;
            match &a.out {
                Some(path) => {
                    let f = File::create(path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_points(BufWriter::new(f), hull.vertices())?;
                }
                None => write_points(&mut *out, hull.vertices())?,
            }
            let report = RunReport::new(spec, cfg, stats, None);
            eprintln!("{}", report.summary_line());
            Ok(true)
        }
        Command::Bench(a) => {
            let specs = a.source.specs(&[], &[], &[])?;
            if specs.is_empty() {
                bail!("nothing to benchmark: pass --gen, --input or --obj");
            }
            if a.repeats == 0 {
                bail!("--repeats must be at least 1");
            }
            let cfg = a.pipeline.config();
            let reports = bench::bench_all(&specs, &cfg, a.repeats, a.jobs)?;
            report::write_csv(&mut *out, &reports, true)?;
            if let Some(path) = &a.csv {
                report::append_csv(path, &reports)?;
            }
            Ok(true)
        }
        Command::Verify(a) => {
            #[allow(clippy::single_range_in_vec_init)]
            let specs = a.source.specs(
                &verify::DEFAULT_KINDS,
                &[verify::DEFAULT_N],
                &[0..verify::DEFAULT_SEEDS],
            )?;
            let matrix = verify::config_matrix(a.chunks);
            let outcome = verify::verify_all(&specs, &matrix, a.jobs, a.inject_fault)?;
            writeln!(out, "{outcome}")?;
            Ok(outcome.passed())
        }
        Command::Gen(a) => {
            let spec = a.source.single_spec()?;
            if !spec.kind.is_generated() {
                bail!("gen needs --gen KIND");
            }
            let points = spec.materialize()?;
            match &a.out {
                Some(path) => {
                    let f = File::create(path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_points(BufWriter::new(f), &points)?;
                }
                None => write_points(&mut *out, &points)?,
            }
            Ok(true)
        }
    }
}
