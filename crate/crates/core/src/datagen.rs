//! Seeded point generators and point-file readers/writers.
//!
//! Generators draw from ChaCha8 seeded with the 64-bit seed, so output is a
//! pure function of `(n, seed)` for a given build.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HullError, Result};
use crate::geom::Point2;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the unit square.
pub fn gen_square(n: usize, seed: u64) -> Vec<Point2> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| Point2::new(r.random(), r.random()))
        .collect()
}

/// Uniform on the closed unit disk.
pub fn gen_disk(n: usize, seed: u64) -> Vec<Point2> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| {
            let radius = r.random::<f64>().sqrt();
            let (s, c) = (TAU * r.random::<f64>()).sin_cos();
            Point2::new(radius * c, radius * s)
        })
        .collect()
}

/// Points on the unit circle at random angles.
///
/// A candidate angle closer than `TAU / (64 n)` to an accepted one is
/// redrawn. Consecutive points then stay far enough apart that every one of
/// them is a strict hull vertex under double-precision orientation.
pub fn gen_circle(n: usize, seed: u64) -> Vec<Point2> {
    let mut r = rng(seed);
    let min_gap = TAU / (64.0 * n.max(1) as f64);
    // non-negative floats order like their bit patterns
    let mut taken: BTreeSet<u64> = BTreeSet::new();
    let too_close = |taken: &BTreeSet<u64>, t: f64| {
        let near = |lo: f64, hi: f64| {
            taken
                .range(lo.max(0.0).to_bits()..=hi.to_bits())
                .next()
                .is_some()
        };
        near(t - min_gap, t + min_gap)
            || (t < min_gap && near(t + TAU - min_gap, TAU))
            || (t > TAU - min_gap && near(0.0, t - TAU + min_gap))
    };
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let t = TAU * r.random::<f64>();
        if too_close(&taken, t) {
            continue;
        }
        taken.insert(t.to_bits());
        let (s, c) = t.sin_cos();
        out.push(Point2::new(c, s));
    }
    out
}

/// Integer points on the line `y = 2x + 1`, duplicates included.
pub fn gen_collinear(n: usize, seed: u64) -> Vec<Point2> {
    let mut r = rng(seed);
    let span = n.max(1) as i64;
    (0..n)
        .map(|_| {
            let x = r.random_range(-span..=span) as f64;
            Point2::new(x, 2.0 * x + 1.0)
        })
        .collect()
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> HullError + '_ {
    move |source| HullError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> HullError {
    HullError::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn parse_coord(tok: &str, path: &Path, line: usize) -> Result<f64> {
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(parse_err(
            path,
            line,
            format!("non-finite coordinate {tok:?}"),
        )),
        Err(_) => Err(parse_err(path, line, format!("invalid number {tok:?}"))),
    }
}

/// Parses the plain-XY format: two reals per line, blank and `#` lines
/// skipped. `path` only labels errors.
pub fn parse_points(text: &str, path: &Path) -> Result<Vec<Point2>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(
                path,
                i + 1,
                format!("expected 2 fields, found {}", toks.len()),
            ));
        }
        out.push(Point2::new(
            parse_coord(toks[0], path, i + 1)?,
            parse_coord(toks[1], path, i + 1)?,
        ));
    }
    if out.is_empty() {
        return Err(HullError::EmptyInput);
    }
    Ok(out)
}

pub fn load_points(path: impl AsRef<Path>) -> Result<Vec<Point2>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    parse_points(&text, path)
}

/// Projects the `v` records of an OBJ file onto the XY plane. Everything
/// else is ignored; a `v` line needs at least two coordinates.
pub fn parse_obj_projected(text: &str, path: &Path) -> Result<Vec<Point2>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut toks = raw.split_whitespace();
        if toks.next() != Some("v") {
            continue;
        }
        let (Some(x), Some(y)) = (toks.next(), toks.next()) else {
            return Err(parse_err(
                path,
                i + 1,
                "vertex needs at least two coordinates",
            ));
        };
        out.push(Point2::new(
            parse_coord(x, path, i + 1)?,
            parse_coord(y, path, i + 1)?,
        ));
    }
    if out.is_empty() {
        return Err(HullError::EmptyInput);
    }
    Ok(out)
}

pub fn load_obj_projected(path: impl AsRef<Path>) -> Result<Vec<Point2>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    parse_obj_projected(&text, path)
}

/// Writes points in the plain-XY format with round-trip precision.
pub fn write_points<W: Write>(mut w: W, points: &[Point2]) -> io::Result<()> {
    for p in points {
        writeln!(w, "{} {}", p.x, p.y)?;
    }
    w.flush()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DatasetKind {
    Square,
    Disk,
    Circle,
    Collinear,
    /// Plain-XY file.
    File,
    /// OBJ mesh, vertices projected onto XY.
    Obj,
}

impl DatasetKind {
    pub fn name(self) -> &'static str {
        match self {
            DatasetKind::Square => "square",
            DatasetKind::Disk => "disk",
            DatasetKind::Circle => "circle",
            DatasetKind::Collinear => "collinear",
            DatasetKind::File => "file",
            DatasetKind::Obj => "obj",
        }
    }

    pub fn is_generated(self) -> bool {
        !matches!(self, DatasetKind::File | DatasetKind::Obj)
    }
}

impl fmt::Display for DatasetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DatasetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "square" => DatasetKind::Square,
            "disk" => DatasetKind::Disk,
            "circle" => DatasetKind::Circle,
            "collinear" => DatasetKind::Collinear,
            "file" => DatasetKind::File,
            "obj" => DatasetKind::Obj,
            other => return Err(format!("unknown dataset kind {other:?}")),
        })
    }
}

/// A generated dataset `(kind, n, seed)` or a file to load.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatasetSpec {
    pub kind: DatasetKind,
    pub n: usize,
    pub seed: u64,
    pub path: Option<PathBuf>,
}

impl DatasetSpec {
    pub fn generated(kind: DatasetKind, n: usize, seed: u64) -> Self {
        assert!(kind.is_generated(), "{kind} is not a generator");
        Self {
            kind,
            n,
            seed,
            path: None,
        }
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        Self {
            kind: DatasetKind::File,
            n: 0,
            seed: 0,
            path: Some(path.into()),
        }
    }

    pub fn obj(path: impl Into<PathBuf>) -> Self {
        Self {
            kind: DatasetKind::Obj,
            ..Self::file(path)
        }
    }

    /// Short label: the kind for generated data, the path for files.
    pub fn label(&self) -> String {
        match &self.path {
            Some(p) => p.display().to_string(),
            None => self.kind.name().to_string(),
        }
    }

    pub fn materialize(&self) -> Result<Vec<Point2>> {
        if self.kind.is_generated() && self.n == 0 {
            return Err(HullError::EmptyInput);
        }
        let path = || self.path.as_deref().expect("file datasets carry a path");
        Ok(match self.kind {
            DatasetKind::Square => gen_square(self.n, self.seed),
            DatasetKind::Disk => gen_disk(self.n, self.seed),
            DatasetKind::Circle => gen_circle(self.n, self.seed),
            DatasetKind::Collinear => gen_collinear(self.n, self.seed),
            DatasetKind::File => load_points(path())?,
            DatasetKind::Obj => load_obj_projected(path())?,
        })
    }
}
