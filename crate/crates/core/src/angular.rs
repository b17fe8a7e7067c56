//! Anchor selection, polar annotation, angular sort and the region split.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{HullError, Result};
use crate::geom::{dist2_unchecked, polar_key_unchecked, Point2};
use crate::prefilter::PAR_MIN_LEN;

/// A point together with its polar key relative to the buffer's anchor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarPoint {
    pub point: Point2,
    pub angle: f64,
    pub dist2: f64,
}

impl PolarPoint {
    fn anchor(point: Point2) -> Self {
        Self {
            point,
            angle: f64::NEG_INFINITY,
            dist2: 0.0,
        }
    }

    fn from_anchor(anchor: Point2, point: Point2) -> Self {
        let key = polar_key_unchecked(anchor, point);
        Self {
            point,
            angle: key.angle,
            dist2: key.dist2,
        }
    }

    /// Key with a precomputed angle; `dist2` uses the same formula as
    /// [`Self::from_anchor`].
    fn from_angle(anchor: Point2, point: Point2, angle: f64) -> Self {
        Self {
            point,
            angle,
            dist2: dist2_unchecked(anchor, point),
        }
    }

    #[inline]
    fn cmp_key(&self, other: &Self) -> std::cmp::Ordering {
        self.angle
            .total_cmp(&other.angle)
            .then(self.dist2.total_cmp(&other.dist2))
    }
}

/// Points annotated with polar keys. Entry 0 is always the anchor; its angle
/// is a `-inf` sentinel and its squared distance is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnotatedBuffer {
    entries: Vec<PolarPoint>,
}

impl AnnotatedBuffer {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn anchor(&self) -> Point2 {
        self.entries[0].point
    }

    #[inline]
    pub fn point(&self, i: usize) -> Point2 {
        self.entries[i].point
    }

    #[inline]
    pub fn angle(&self, i: usize) -> f64 {
        self.entries[i].angle
    }

    #[inline]
    pub fn dist2(&self, i: usize) -> f64 {
        self.entries[i].dist2
    }

    pub fn entries(&self) -> &[PolarPoint] {
        &self.entries
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = Point2> + '_ {
        self.entries.iter().map(|e| e.point)
    }

    pub fn to_points(&self) -> Vec<Point2> {
        self.points().collect()
    }

    /// True when the tail is ordered by `(angle, dist2)`.
    pub fn is_sorted(&self) -> bool {
        self.entries
            .get(1..)
            .unwrap_or_default()
            .windows(2)
            .all(|w| w[0].cmp_key(&w[1]).is_le())
    }

    pub(crate) fn retain_flags(&self, keep: &[bool]) -> Self {
        let parts: Vec<Vec<PolarPoint>> = self
            .entries
            .par_chunks(PAR_MIN_LEN)
            .zip(keep.par_chunks(PAR_MIN_LEN))
            .map(|(es, ks)| {
                es.iter()
                    .zip(ks)
                    .filter_map(|(&e, &k)| k.then_some(e))
                    .collect()
            })
            .collect();
        Self {
            entries: parts.concat(),
        }
    }
}

/// Longest-distance split of a sorted buffer: the right region is `1..l`,
/// the left region is `l + 1..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionSplit {
    pub l: usize,
}

/// Lowest point, leftmost among the lowest, first index on a full tie.
pub fn select_anchor(points: &[Point2]) -> Result<usize> {
    points
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp_lowest(b))
        .map(|(i, _)| i)
        .ok_or(HullError::EmptyInput)
}

/// Moves the anchor to the front, drops exact duplicates (first occurrence
/// wins) and attaches polar keys. The rest keep their input order.
pub fn annotate(points: &[Point2], anchor_index: usize) -> Result<AnnotatedBuffer> {
    let anchor = *points.get(anchor_index).ok_or(HullError::IndexOutOfRange {
        index: anchor_index,
        len: points.len(),
    })?;
    let mut seen = HashSet::with_capacity(points.len());
    seen.insert(anchor.key());
    let rest: Vec<Point2> = points
        .iter()
        .enumerate()
        .filter(|&(i, p)| i != anchor_index && seen.insert(p.key()))
        .map(|(_, &p)| p)
        .collect();
    Ok(annotate_rest(anchor, &rest))
}

fn annotate_rest(anchor: Point2, rest: &[Point2]) -> AnnotatedBuffer {
    let mut entries = Vec::with_capacity(rest.len() + 1);
    entries.push(PolarPoint::anchor(anchor));
    entries.par_extend(
        rest.par_iter()
            .with_min_len(PAR_MIN_LEN)
            .map(|&p| PolarPoint::from_anchor(anchor, p)),
    );
    AnnotatedBuffer { entries }
}

/// Pipeline variant of [`annotate`] that defers duplicate removal to
/// [`sort_dedup`]. Only copies of the anchor are dropped here, since they
/// have no polar key.
pub(crate) fn annotate_keep_duplicates(points: &[Point2], anchor_index: usize) -> Unsorted {
    let anchor = points[anchor_index];
    let parts: Vec<Vec<(Point2, f64)>> = points
        .par_chunks(PAR_MIN_LEN)
        .map(|ps| {
            ps.iter()
                .filter(|&&p| p != anchor)
                .map(|&p| (p, polar_key_unchecked(anchor, p).angle))
                .collect()
        })
        .collect();
    let mut records = Vec::with_capacity(parts.iter().map(Vec::len).sum());
    for (point, angle) in parts.into_iter().flatten() {
        let seq = records.len() as u64;
        records.push(SortRecord { point, angle, seq });
    }
    Unsorted { anchor, records }
}

/// Sort record: the input position breaks key ties, so an unstable sort
/// reproduces the stable order. `dist2` is rebuilt from the anchor, which
/// keeps the record at 32 bytes.
#[derive(Clone, Copy)]
struct SortRecord {
    point: Point2,
    angle: f64,
    seq: u64,
}

/// Annotated tail awaiting the angular sort.
pub(crate) struct Unsorted {
    anchor: Point2,
    records: Vec<SortRecord>,
}

impl Unsorted {
    fn from_buffer(buf: AnnotatedBuffer) -> Self {
        let anchor = buf.anchor();
        let records = buf.entries[1..]
            .iter()
            .zip(0u64..)
            .map(|(e, seq)| SortRecord {
                point: e.point,
                angle: e.angle,
                seq,
            })
            .collect();
        Self { anchor, records }
    }

    fn sort(&mut self) {
        let anchor = self.anchor;
        let dist2 = |p: Point2| dist2_unchecked(anchor, p);
        let cmp = |a: &SortRecord, b: &SortRecord| {
            a.angle
                .total_cmp(&b.angle)
                .then_with(|| dist2(a.point).total_cmp(&dist2(b.point)))
                .then(a.seq.cmp(&b.seq))
        };
        if rayon::current_num_threads() > 1 {
            self.records.par_sort_unstable_by(cmp);
        } else {
            self.records.sort_unstable_by(cmp);
        }
    }

    /// Buffer of the records in their current order. With `dedup`, repeats
    /// of a point are dropped; after the sort each repeat sits in the
    /// equal-key run of its first occurrence, behind it.
    fn into_buffer(self, dedup: bool) -> AnnotatedBuffer {
        let anchor = self.anchor;
        let mut entries = Vec::with_capacity(self.records.len() + 1);
        entries.push(PolarPoint::anchor(anchor));
        let mut run_start = 1;
        for r in self.records {
            let e = PolarPoint::from_angle(anchor, r.point, r.angle);
            if dedup {
                if entries.len() > run_start && entries[run_start].cmp_key(&e).is_ne() {
                    run_start = entries.len();
                }
                // runs of equal keys are almost always of length one
                if entries[run_start..].iter().any(|k| k.point == e.point) {
                    continue;
                }
            }
            entries.push(e);
        }
        AnnotatedBuffer { entries }
    }
}

/// Stable sort of the tail by `(angle, dist2)`; the anchor stays in front.
pub fn sort_by_angle(buf: AnnotatedBuffer) -> AnnotatedBuffer {
    if buf.len() <= 2 {
        return buf;
    }
    let mut pending = Unsorted::from_buffer(buf);
    pending.sort();
    pending.into_buffer(false)
}

/// Angular sort followed by removal of exact duplicates, keeping the first
/// occurrence. `sort_dedup(annotate_keep_duplicates(..))` equals
/// `sort_by_angle(annotate(..))`.
pub(crate) fn sort_dedup(mut pending: Unsorted) -> AnnotatedBuffer {
    pending.sort();
    pending.into_buffer(true)
}

/// First index maximizing the distance to the anchor.
pub fn split_regions(buf: &AnnotatedBuffer) -> Result<RegionSplit> {
    let n = buf.len();
    if n < 2 {
        return Err(HullError::TooFewPoints { needed: 2, got: n });
    }
    // (index, dist2) of the first maximum; chunks are scanned in parallel
    let first_max = |a: (usize, f64), b: (usize, f64)| if b.1 > a.1 { b } else { a };
    let (l, _) = buf.entries[1..]
        .par_chunks(PAR_MIN_LEN)
        .enumerate()
        .map(|(c, es)| {
            es.iter()
                .enumerate()
                .map(|(i, e)| (1 + c * PAR_MIN_LEN + i, e.dist2))
                .reduce(first_max)
                .expect("chunks are non-empty")
        })
        .reduce_with(first_max)
        .expect("n >= 2");
    Ok(RegionSplit { l })
}

#[cfg(test)]
pub(crate) fn buffer_from_parts(entries: Vec<PolarPoint>) -> AnnotatedBuffer {
    AnnotatedBuffer { entries }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_4;

    use proptest::prelude::*;

    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
        v.iter().copied().map(Point2::from).collect()
    }

    #[test]
    fn anchor_examples() {
        assert_eq!(
            select_anchor(&pts(&[(1., 2.), (0., 0.), (3., 0.)])).unwrap(),
            1
        );
        assert_eq!(select_anchor(&pts(&[(5., 5.)])).unwrap(), 0);
        assert_eq!(select_anchor(&pts(&[(0., 1.), (0., 1.)])).unwrap(), 0);
        assert!(matches!(select_anchor(&[]), Err(HullError::EmptyInput)));
    }

    #[test]
    fn annotate_examples() {
        let b = annotate(&pts(&[(0., 0.), (1., 1.), (1., 0.)]), 0).unwrap();
        assert_eq!(b.to_points(), pts(&[(0., 0.), (1., 1.), (1., 0.)]));
        assert_eq!((b.angle(1), b.dist2(1)), (FRAC_PI_4, 2.0));
        assert_eq!((b.angle(2), b.dist2(2)), (0.0, 1.0));
        assert_eq!(b.dist2(0), 0.0);

        let b = annotate(&pts(&[(0., 0.), (1., 1.), (1., 1.)]), 0).unwrap();
        assert_eq!(b.len(), 2);

        let b = annotate(&pts(&[(2., 3.)]), 0).unwrap();
        assert_eq!(b.to_points(), pts(&[(2., 3.)]));
    }

    #[test]
    fn annotate_moves_anchor_and_drops_its_copies() {
        let b = annotate(&pts(&[(1., 1.), (0., 0.), (2., 0.), (0., 0.)]), 1).unwrap();
        assert_eq!(b.to_points(), pts(&[(0., 0.), (1., 1.), (2., 0.)]));
    }

    #[test]
    fn sort_composite_key() {
        let v = pts(&[(0., 0.), (-1., 1.), (3., 3.), (1., 1.), (2., 0.)]);
        let s = sort_by_angle(annotate(&v, 0).unwrap());
        assert_eq!(
            s.to_points(),
            pts(&[(0., 0.), (2., 0.), (1., 1.), (3., 3.), (-1., 1.)])
        );
        assert_eq!((s.dist2(2), s.dist2(3)), (2.0, 18.0));
        assert_eq!(sort_by_angle(s.clone()), s);
    }

    #[test]
    fn split_examples() {
        let p = Point2::new(0., 0.);
        let with = |d: &[f64]| {
            buffer_from_parts(
                d.iter()
                    .map(|&dist2| PolarPoint {
                        point: p,
                        angle: 0.0,
                        dist2,
                    })
                    .collect(),
            )
        };
        assert_eq!(split_regions(&with(&[0., 1., 25., 4.])).unwrap().l, 2);
        assert_eq!(split_regions(&with(&[0., 9., 9.])).unwrap().l, 1);
        assert_eq!(split_regions(&with(&[0., 3.])).unwrap().l, 1);
        assert!(matches!(
            split_regions(&with(&[0.])),
            Err(HullError::TooFewPoints { .. })
        ));
    }

    fn cloud() -> impl Strategy<Value = Vec<Point2>> {
        prop::collection::vec((-20i32..20, -20i32..20), 1..120).prop_map(|v| {
            v.into_iter()
                .map(|(x, y)| Point2::new(f64::from(x) * 0.5, f64::from(y) * 0.25))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn sorted_angles_non_decreasing(v in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 2..100)) {
            let v: Vec<Point2> = v.into_iter().map(Point2::from).collect();
            let a = select_anchor(&v).unwrap();
            let s = sort_by_angle(annotate(&v, a).unwrap());
            // straightforward comparison sort as reference
            let mut reference: Vec<PolarPoint> = annotate(&v, a).unwrap().entries()[1..].to_vec();
            reference.sort_by(|x, y| x.angle.partial_cmp(&y.angle).unwrap()
                .then(x.dist2.partial_cmp(&y.dist2).unwrap()));
            prop_assert_eq!(&s.entries()[1..], &reference[..]);
            prop_assert!(s.entries()[1..].windows(2).all(|w| w[0].angle <= w[1].angle));
        }

        #[test]
        fn fused_dedup_matches_composition(v in cloud()) {
            let a = select_anchor(&v).unwrap();
            let composed = sort_by_angle(annotate(&v, a).unwrap());
            let fused = sort_dedup(annotate_keep_duplicates(&v, a));
            prop_assert_eq!(fused, composed);
        }

        #[test]
        fn annotated_buffer_invariants(v in cloud()) {
            let a = select_anchor(&v).unwrap();
            let s = sort_by_angle(annotate(&v, a).unwrap());
            let keys: HashSet<_> = s.points().map(|p| p.key()).collect();
            prop_assert_eq!(keys.len(), s.len());
            for p in s.points().skip(1) {
                prop_assert!(s.anchor().cmp_lowest(&p).is_lt());
            }
            prop_assert!(s.is_sorted());
            for e in &s.entries()[1..] {
                prop_assert!((0.0..=std::f64::consts::PI).contains(&e.angle));
            }
        }
    }
}
