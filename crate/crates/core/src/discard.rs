//! Round-2 discard over the angle-sorted buffer.
//!
//! In the right region (angles up to `P_l`) a point is interior when it lies
//! left of the line from the walk state `P_temp` to `P_l`; the sort order
//! already places it between `P_temp` and `P_l` in angle, so this one test
//! decides membership in the triangle `(P0, P_temp, P_l)`. The left region is
//! walked from the far end with the mirrored test. Points that survive a
//! test become the new `P_temp`.
//!
//! A point on the segment `P0 P_l`, or on `P0 P_temp` behind `P_temp`,
//! passes the walk test while lying on the triangle's boundary, possibly on
//! the hull itself. A point that passes is therefore also checked to be
//! strictly between the rays `P0 -> P_temp` and `P0 -> P_l`.

use rayon::prelude::*;

use crate::angular::{AnnotatedBuffer, PolarPoint, RegionSplit};
use crate::error::{HullError, Result};
use crate::geom::{orient, Point2, Turn};
use crate::prefilter::KeepFlags;

pub const DEFAULT_CHUNK_COUNT: usize = 1024;

/// Number of independent slices each region is cut into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChunkConfig {
    pub chunk_count: usize,
}

impl Default for ChunkConfig {
    fn default() -> Self {
        Self {
            chunk_count: DEFAULT_CHUNK_COUNT,
        }
    }
}

impl ChunkConfig {
    pub fn new(chunk_count: usize) -> Result<Self> {
        if chunk_count == 0 {
            return Err(HullError::ZeroChunks);
        }
        Ok(Self { chunk_count })
    }

    /// Slice length for a region of `m` points.
    pub fn slice_len(&self, m: usize) -> usize {
        m.div_ceil(self.chunk_count).max(1)
    }
}

#[derive(Clone, Copy)]
struct Walk {
    anchor: Point2,
    longest: Point2,
    /// `Left` for the right region, `Right` for the left region.
    side: Turn,
}

impl Walk {
    #[inline]
    fn is_interior(&self, temp: Point2, p: Point2) -> bool {
        orient(temp, self.longest, p) == self.side
            && orient(self.anchor, self.longest, p) == self.side.reverse()
            && orient(self.anchor, temp, p) == self.side
    }

    /// Walks `entries` in the given order with the first entry as the
    /// initial `P_temp`. `flags[k]` belongs to `entries[k]`.
    fn run_slice(&self, entries: &[PolarPoint], flags: &mut [bool], descending: bool) {
        let n = entries.len();
        if n < 2 {
            return;
        }
        let mut step = |k: usize, temp: &mut Point2| {
            let p = entries[k].point;
            if self.is_interior(*temp, p) {
                flags[k] = false;
            } else {
                *temp = p;
            }
        };
        if descending {
            let mut temp = entries[n - 1].point;
            (0..n - 1).rev().for_each(|k| step(k, &mut temp));
        } else {
            let mut temp = entries[0].point;
            (1..n).for_each(|k| step(k, &mut temp));
        }
    }
}

fn check_split(buf: &AnnotatedBuffer, split: RegionSplit) -> Result<()> {
    let n = buf.len();
    if split.l == 0 || split.l >= n {
        return Err(HullError::IndexOutOfRange {
            index: split.l,
            len: n,
        });
    }
    Ok(())
}

fn walks(buf: &AnnotatedBuffer, split: RegionSplit) -> (Walk, Walk) {
    let anchor = buf.anchor();
    let longest = buf.point(split.l);
    (
        Walk {
            anchor,
            longest,
            side: Turn::Left,
        },
        Walk {
            anchor,
            longest,
            side: Turn::Right,
        },
    )
}

/// Single-threaded walk over both regions.
pub fn discard_sequential(buf: &AnnotatedBuffer, split: RegionSplit) -> Result<KeepFlags> {
    discard_sequential_witnessed(buf, split, |_, _| {})
}

/// [`discard_sequential`] that reports `(index, temp_index)` for every
/// discarded point, `temp_index` being the walk state at that step.
#[allow(clippy::needless_range_loop)]
pub fn discard_sequential_witnessed(
    buf: &AnnotatedBuffer,
    split: RegionSplit,
    mut witness: impl FnMut(usize, usize),
) -> Result<KeepFlags> {
    check_split(buf, split)?;
    let n = buf.len();
    let l = split.l;
    let (right, left) = walks(buf, split);
    let mut keep = vec![true; n];

    let mut temp = 0;
    for i in 1..l {
        if right.is_interior(buf.point(temp), buf.point(i)) {
            keep[i] = false;
            witness(i, temp);
        } else {
            temp = i;
        }
    }

    let mut temp = n - 1;
    for i in (l + 1..n.saturating_sub(1)).rev() {
        if left.is_interior(buf.point(temp), buf.point(i)) {
            keep[i] = false;
            witness(i, temp);
        } else {
            temp = i;
        }
    }
    Ok(keep.into())
}

/// Each region is cut into `cfg.chunk_count` consecutive slices that are
/// walked independently, each starting from its own first element in walk
/// order. With one chunk this equals [`discard_sequential`].
pub fn discard_chunked(
    buf: &AnnotatedBuffer,
    split: RegionSplit,
    cfg: ChunkConfig,
) -> Result<KeepFlags> {
    if cfg.chunk_count == 0 {
        return Err(HullError::ZeroChunks);
    }
    check_split(buf, split)?;
    let l = split.l;
    let entries = buf.entries();
    let (right, left) = walks(buf, split);
    let mut keep = vec![true; buf.len()];
    let (head, tail) = keep.split_at_mut(l);

    let right_flags = &mut head[1..];
    let right_entries = &entries[1..l];
    let size = cfg.slice_len(right_flags.len());
    right_flags
        .par_chunks_mut(size)
        .zip(right_entries.par_chunks(size))
        .for_each(|(flags, slice)| right.run_slice(slice, flags, false));

    let left_flags = &mut tail[1..];
    let left_entries = &entries[l + 1..];
    let size = cfg.slice_len(left_flags.len());
    left_flags
        .par_rchunks_mut(size)
        .zip(left_entries.par_rchunks(size))
        .for_each(|(flags, slice)| left.run_slice(slice, flags, true));

    Ok(keep.into())
}

/// Drops discarded entries, preserving the sorted order.
pub fn stable_compact(buf: &AnnotatedBuffer, flags: &KeepFlags) -> Result<AnnotatedBuffer> {
    if buf.len() != flags.len() {
        return Err(HullError::LengthMismatch {
            expected: buf.len(),
            actual: flags.len(),
        });
    }
    if !flags.is_empty() && !flags[0] {
        return Err(HullError::AnchorDiscarded);
    }
    Ok(buf.retain_flags(flags.as_slice()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::{annotate, select_anchor, sort_by_angle, split_regions};

    fn sorted(v: &[(f64, f64)]) -> AnnotatedBuffer {
        let v: Vec<Point2> = v.iter().copied().map(Point2::from).collect();
        sort_by_angle(annotate(&v, select_anchor(&v).unwrap()).unwrap())
    }

    fn flags(k: &KeepFlags) -> Vec<u8> {
        k.as_slice().iter().map(|&b| b as u8).collect()
    }

    // Independent point-in-triangle test: strictly left of all three CCW edges.
    fn strictly_in_triangle(a: Point2, b: Point2, c: Point2, p: Point2) -> bool {
        let ccw = orient(a, b, c) == Turn::Left;
        let (b, c) = if ccw { (b, c) } else { (c, b) };
        orient(a, b, p) == Turn::Left
            && orient(b, c, p) == Turn::Left
            && orient(c, a, p) == Turn::Left
    }

    #[test]
    fn four_point_walk() {
        let buf = sorted(&[(0., 0.), (4., 1.), (2., 1.), (0., 5.)]);
        assert_eq!(
            buf.to_points(),
            vec![
                Point2::new(0., 0.),
                Point2::new(4., 1.),
                Point2::new(2., 1.),
                Point2::new(0., 5.)
            ]
        );
        let split = split_regions(&buf).unwrap();
        assert_eq!(split.l, 3);
        let seq = discard_sequential(&buf, split).unwrap();
        assert_eq!(flags(&seq), vec![1, 1, 0, 1]);
        assert!(strictly_in_triangle(
            buf.point(0),
            buf.point(1),
            buf.point(3),
            buf.point(2)
        ));

        assert_eq!(
            discard_chunked(&buf, split, ChunkConfig::new(1).unwrap()).unwrap(),
            seq
        );
        // slices {P1}, {P2}: P2 starts its own slice and is kept
        let two = discard_chunked(&buf, split, ChunkConfig::new(2).unwrap()).unwrap();
        assert_eq!(flags(&two), vec![1, 1, 1, 1]);
    }

    #[test]
    fn convex_position_discards_nothing() {
        let poly: Vec<(f64, f64)> = (0..40)
            .map(|k| {
                let t = std::f64::consts::TAU * f64::from(k) / 40.0;
                (t.cos(), t.sin())
            })
            .collect();
        let buf = sorted(&poly);
        let split = split_regions(&buf).unwrap();
        assert_eq!(
            discard_sequential(&buf, split).unwrap().kept_count(),
            buf.len()
        );
        for c in [1, 2, 3, 1024] {
            let k = discard_chunked(&buf, split, ChunkConfig::new(c).unwrap()).unwrap();
            assert_eq!(k.kept_count(), buf.len());
        }
    }

    #[test]
    fn segment_to_longest_is_not_interior() {
        // (1,1) sits on the hull edge from (3,3) back to the anchor
        let buf = sorted(&[(0., 0.), (2., 1.), (1., 1.), (3., 3.)]);
        let split = split_regions(&buf).unwrap();
        assert_eq!(buf.point(split.l), Point2::new(3., 3.));
        assert_eq!(discard_sequential(&buf, split).unwrap().kept_count(), 4);
    }

    #[test]
    fn anchor_ray_behind_temp_is_not_interior() {
        // (-12,-4) lies on the hull edge from the anchor up to (-12,0)
        let buf = sorted(&[(-12., -4.), (-12., -5.), (-12., 0.), (0., 0.)]);
        let split = split_regions(&buf).unwrap();
        assert_eq!(split.l, 1);
        assert_eq!(discard_sequential(&buf, split).unwrap().kept_count(), 4);
    }

    #[test]
    fn empty_regions() {
        // l = n - 1: left loop empty
        let buf = sorted(&[(0., 0.), (1., 0.), (0., 3.)]);
        let split = split_regions(&buf).unwrap();
        assert_eq!(split.l, 2);
        assert_eq!(discard_sequential(&buf, split).unwrap().kept_count(), 3);
        // l = 1: right loop empty
        let buf = sorted(&[(0., 0.), (3., 0.), (0., 1.), (-0.5, 0.5)]);
        let split = split_regions(&buf).unwrap();
        assert_eq!(split.l, 1);
        assert_eq!(discard_sequential(&buf, split).unwrap().kept_count(), 4);
    }

    #[test]
    fn errors() {
        let buf = sorted(&[(0., 0.), (1., 0.), (0., 3.)]);
        let bad = RegionSplit { l: 3 };
        assert!(matches!(
            discard_sequential(&buf, bad),
            Err(HullError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            discard_sequential(&buf, RegionSplit { l: 0 }),
            Err(HullError::IndexOutOfRange { .. })
        ));
        let split = RegionSplit { l: 2 };
        assert!(matches!(
            discard_chunked(&buf, split, ChunkConfig { chunk_count: 0 }),
            Err(HullError::ZeroChunks)
        ));
        assert!(ChunkConfig::new(0).is_err());
        assert!(matches!(
            stable_compact(&buf, &KeepFlags::all_kept(2)),
            Err(HullError::LengthMismatch { .. })
        ));
        assert!(matches!(
            stable_compact(&buf, &vec![false, true, true].into()),
            Err(HullError::AnchorDiscarded)
        ));
    }

    #[test]
    fn compact_keeps_order() {
        let buf = sorted(&[(0., 0.), (5., 1.), (4., 2.), (3., 3.), (1., 4.)]);
        assert_eq!(stable_compact(&buf, &KeepFlags::all_kept(5)).unwrap(), buf);
        let out = stable_compact(&buf, &vec![true, false, true, false, true].into()).unwrap();
        assert_eq!(
            out.to_points(),
            vec![buf.point(0), buf.point(2), buf.point(4)]
        );
        assert!(out.is_sorted());
    }

    #[test]
    fn slice_len_rounds_up() {
        let c = ChunkConfig::new(1024).unwrap();
        assert_eq!(c.slice_len(1), 1);
        assert_eq!(c.slice_len(1024), 1);
        assert_eq!(c.slice_len(1025), 2);
        assert_eq!(c.slice_len(0), 1);
        assert_eq!(ChunkConfig::default().chunk_count, 1024);
    }
}
