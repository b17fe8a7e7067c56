//! Round-1 discard: the four axis-extreme points span a convex quadrilateral
//! and every point strictly inside it can be dropped before sorting.

use std::cmp::Ordering;
use std::ops::Index;

use rayon::prelude::*;

use crate::error::{HullError, Result};
use crate::geom::{cross, orient, Point2, Turn};

/// Minimum items per rayon task for the per-point stages.
pub(crate) const PAR_MIN_LEN: usize = 4096;

/// Indices of the axis-extreme points. Ties resolve to the lowest index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremeQuad {
    pub min_x: usize,
    pub min_y: usize,
    pub max_x: usize,
    pub max_y: usize,
}

impl ExtremeQuad {
    /// Vertex indices in counterclockwise order.
    pub fn ccw(&self) -> [usize; 4] {
        [self.min_x, self.min_y, self.max_x, self.max_y]
    }

    fn merge(self, other: Self, points: &[Point2]) -> Self {
        let pick =
            |a: usize, b: usize, key: fn(&Point2) -> f64, want: Ordering| match key(&points[b])
                .partial_cmp(&key(&points[a]))
            {
                Some(o) if o == want => b,
                Some(Ordering::Equal) if b < a => b,
                _ => a,
            };
        let x = |p: &Point2| p.x;
        let y = |p: &Point2| p.y;
        Self {
            min_x: pick(self.min_x, other.min_x, x, Ordering::Less),
            min_y: pick(self.min_y, other.min_y, y, Ordering::Less),
            max_x: pick(self.max_x, other.max_x, x, Ordering::Greater),
            max_y: pick(self.max_y, other.max_y, y, Ordering::Greater),
        }
    }

    fn single(i: usize) -> Self {
        Self {
            min_x: i,
            min_y: i,
            max_x: i,
            max_y: i,
        }
    }
}

/// Per-point keep markers: `true` = kept, `false` = proven interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeepFlags(Vec<bool>);

impl KeepFlags {
    pub fn all_kept(len: usize) -> Self {
        Self(vec![true; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn kept_count(&self) -> usize {
        self.0.iter().filter(|&&k| k).count()
    }

    pub fn discarded(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &k)| !k)
            .map(|(i, _)| i)
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [bool] {
        &mut self.0
    }
}

impl From<Vec<bool>> for KeepFlags {
    fn from(v: Vec<bool>) -> Self {
        Self(v)
    }
}

impl Index<usize> for KeepFlags {
    type Output = bool;

    fn index(&self, i: usize) -> &bool {
        &self.0[i]
    }
}

pub fn find_extremes(points: &[Point2]) -> Result<ExtremeQuad> {
    points
        .par_chunks(PAR_MIN_LEN)
        .enumerate()
        .map(|(c, chunk)| scan_extremes(chunk, c * PAR_MIN_LEN))
        .reduce_with(|a, b| a.merge(b, points))
        .ok_or(HullError::EmptyInput)
}

/// Sequential scan of a non-empty chunk starting at global index `offset`.
fn scan_extremes(chunk: &[Point2], offset: usize) -> ExtremeQuad {
    let mut q = ExtremeQuad::single(0);
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (chunk[0], chunk[0], chunk[0], chunk[0]);
    for (i, &p) in chunk.iter().enumerate().skip(1) {
        // strict comparisons keep the first index on ties
        if p.x < lo_x.x {
            lo_x = p;
            q.min_x = i;
        }
        if p.x > hi_x.x {
            hi_x = p;
            q.max_x = i;
        }
        if p.y < lo_y.y {
            lo_y = p;
            q.min_y = i;
        }
        if p.y > hi_y.y {
            hi_y = p;
            q.max_y = i;
        }
    }
    ExtremeQuad {
        min_x: q.min_x + offset,
        min_y: q.min_y + offset,
        max_x: q.max_x + offset,
        max_y: q.max_y + offset,
    }
}

/// Marks points strictly inside the quadrilateral `quad` as discarded.
///
/// Boundary points and the extremes themselves are kept. A quadrilateral of
/// zero area or with coincident vertices discards nothing.
pub fn classify_quad(points: &[Point2], quad: &ExtremeQuad) -> KeepFlags {
    let Some(inside) = interior_test(points, quad) else {
        return KeepFlags::all_kept(points.len());
    };
    let flags = points
        .par_iter()
        .with_min_len(PAR_MIN_LEN)
        .map(|&p| !inside(p))
        .collect();
    KeepFlags(flags)
}

/// Strict-interior predicate of the quadrilateral, or `None` when it is
/// degenerate and nothing may be discarded.
fn interior_test(points: &[Point2], quad: &ExtremeQuad) -> Option<impl Fn(Point2) -> bool + Sync> {
    let [a, b, c, d] = quad.ccw().map(|i| points[i]);
    let distinct = a != b && b != c && c != d && d != a;
    let area2 = cross(a, b, c) + cross(a, c, d);
    (distinct && area2 > 0.0).then_some(move |p| {
        orient(a, b, p) == Turn::Left
            && orient(b, c, p) == Turn::Left
            && orient(c, d, p) == Turn::Left
            && orient(d, a, p) == Turn::Left
    })
}

/// Fused `compact(points, &classify_quad(points, quad))` without the flag
/// vector.
pub(crate) fn discard_interior(points: &[Point2], quad: &ExtremeQuad) -> Vec<Point2> {
    let Some(inside) = interior_test(points, quad) else {
        return points.to_vec();
    };
    let parts: Vec<Vec<Point2>> = points
        .par_chunks(PAR_MIN_LEN)
        .map(|ps| ps.iter().copied().filter(|&p| !inside(p)).collect())
        .collect();
    parts.concat()
}

/// Survivors of `flags`, in input order.
pub fn compact(points: &[Point2], flags: &KeepFlags) -> Result<Vec<Point2>> {
    if points.len() != flags.len() {
        return Err(HullError::LengthMismatch {
            expected: points.len(),
            actual: flags.len(),
        });
    }
    let parts: Vec<Vec<Point2>> = points
        .par_chunks(PAR_MIN_LEN)
        .zip(flags.0.par_chunks(PAR_MIN_LEN))
        .map(|(ps, ks)| {
            ps.iter()
                .zip(ks)
                .filter_map(|(&p, &keep)| keep.then_some(p))
                .collect()
        })
        .collect();
    Ok(parts.concat())
}
