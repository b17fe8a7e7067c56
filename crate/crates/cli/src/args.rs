use std::ops::Range;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hullscan::discard::DEFAULT_CHUNK_COUNT;
use hullscan::{DatasetKind, DatasetSpec, PipelineConfig};

#[derive(Debug, Parser)]
#[command(
    name = "hullscan",
    version,
    about = "Planar convex hulls with interior-point discarding"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one hull and print its vertices.
    Run(RunArgs),
    /// Time the pipeline against the monotone-chain baseline and emit CSV.
    Bench(BenchArgs),
    /// Check pipeline hulls and discards against the oracle.
    Verify(VerifyArgs),
    /// Write a generated dataset in plain-XY format.
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Square,
    Disk,
    Circle,
    Collinear,
}

impl From<GenKind> for DatasetKind {
    fn from(k: GenKind) -> Self {
        match k {
            GenKind::Square => DatasetKind::Square,
            GenKind::Disk => DatasetKind::Disk,
            GenKind::Circle => DatasetKind::Circle,
            GenKind::Collinear => DatasetKind::Collinear,
        }
    }
}

/// Parses `7` or a half-open range `0..50`.
fn parse_seeds(s: &str) -> Result<Range<u64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|e| format!("bad seed {t:?}: {e}"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a >= b {
                return Err(format!("empty seed range {s:?}"));
            }
            Ok(a..b)
        }
        None => {
            let a = num(s)?;
            Ok(a..a + 1)
        }
    }
}

fn parse_chunks(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("chunk count must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Generator(s); comma-separated for bench/verify.
    #[arg(long = "gen", visible_alias = "kind", value_enum, value_delimiter = ',', conflicts_with_all = ["input", "obj"])]
    pub gen: Vec<GenKind>,
    /// Plain-XY point file.
    #[arg(long, conflicts_with = "obj")]
    pub input: Option<PathBuf>,
    /// OBJ mesh; vertices are projected onto XY.
    #[arg(long)]
    pub obj: Option<PathBuf>,
    /// Point count(s) for generated data.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<usize>,
    /// Seed(s): a value or a range `a..b`, comma-separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_seeds)]
    pub seed: Vec<Range<u64>>,
}

impl SourceArgs {
    /// Cartesian product of generators, sizes and seeds, or the one file.
    /// Empty lists fall back to the given defaults.
    pub fn specs(
        &self,
        default_kinds: &[DatasetKind],
        default_n: &[usize],
        default_seeds: &[Range<u64>],
    ) -> Result<Vec<DatasetSpec>> {
        if let Some(p) = &self.input {
            return Ok(vec![DatasetSpec::file(p)]);
        }
        if let Some(p) = &self.obj {
            return Ok(vec![DatasetSpec::obj(p)]);
        }
        let kinds: Vec<DatasetKind> = if self.gen.is_empty() {
            default_kinds.to_vec()
        } else {
            self.gen.iter().map(|&k| k.into()).collect()
        };
        let ns = if self.n.is_empty() {
            default_n
        } else {
            &self.n[..]
        };
        let ns: Vec<usize> = if ns.is_empty() {
            vec![1000]
        } else {
            ns.to_vec()
        };
        let seeds = if self.seed.is_empty() {
            default_seeds
        } else {
            &self.seed[..]
        };
        let seeds: Vec<u64> = if seeds.is_empty() {
            vec![0]
        } else {
            seeds.iter().flat_map(|r| r.clone()).collect()
        };
        if let Some(0) = ns.iter().copied().find(|&n| n == 0) {
            bail!("--n must be at least 1");
        }
        let mut out = Vec::new();
        for &kind in &kinds {
            for &n in &ns {
                for &seed in &seeds {
                    out.push(DatasetSpec::generated(kind, n, seed));
                }
            }
        }
        Ok(out)
    }

    pub fn single_spec(&self) -> Result<DatasetSpec> {
        let mut specs = self.specs(&[], &[], &[])?;
        match specs.len() {
            0 => bail!("one of --gen, --input or --obj is required"),
            1 => Ok(specs.remove(0)),
            k => bail!("expected a single dataset, got {k}"),
        }
    }
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    /// Slices per region for the round-2 walk.
    #[arg(long, default_value_t = DEFAULT_CHUNK_COUNT, value_parser = parse_chunks)]
    pub chunks: usize,
    #[arg(long)]
    pub no_round1: bool,
    #[arg(long)]
    pub no_round2: bool,
    /// Walk each region in one sequential pass.
    #[arg(long)]
    pub sequential_discard: bool,
}

impl PipelineArgs {
    pub fn config(&self) -> PipelineConfig {
        PipelineConfig {
            chunk_count: self.chunks,
            enable_round1: !self.no_round1,
            enable_round2: !self.no_round2,
            chunked: !self.sequential_discard,
        }
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    /// Hull output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    /// Append rows to this CSV file (header written when new).
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Datasets benchmarked concurrently.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Largest chunk count in the configuration matrix.
    #[arg(long, default_value_t = DEFAULT_CHUNK_COUNT, value_parser = parse_chunks)]
    pub chunks: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Mark a hull vertex as discarded to exercise failure reporting.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
