//! Reference hulls for verification: Andrew's monotone chain for any size
//! and an O(n^3) edge enumeration for tiny inputs. Both share
//! [`orient`](crate::geom::orient) with the pipeline.

use std::collections::{HashMap, HashSet};

use crate::error::{HullError, Result};
use crate::geom::{cross, orient, Point2, Turn};
use crate::hull::Hull;

pub const BRUTE_FORCE_CAP: usize = 64;

pub fn monotone_chain(points: &[Point2]) -> Result<Hull> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable_by(Point2::cmp_xy);
    sorted.dedup();
    if sorted.len() < 3 {
        return Ok(Hull::from_ccw(sorted));
    }

    let mut hull: Vec<Point2> = Vec::with_capacity(64);
    let half = |iter: &mut dyn Iterator<Item = &Point2>, hull: &mut Vec<Point2>| {
        let floor = hull.len();
        for &p in iter {
            while hull.len() >= floor + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    };
    half(&mut sorted.iter(), &mut hull);
    half(&mut sorted.iter().rev(), &mut hull);
    Ok(Hull::from_ccw(hull))
}

fn within_segment(a: Point2, b: Point2, c: Point2) -> bool {
    c.x >= a.x.min(b.x) && c.x <= a.x.max(b.x) && c.y >= a.y.min(b.y) && c.y <= a.y.max(b.y)
}

/// Enumerates every ordered pair and keeps `(a, b)` when all other points
/// are left of it or on the segment itself.
pub fn brute_force_hull(points: &[Point2], cap: usize) -> Result<Hull> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    if points.len() > cap {
        return Err(HullError::TooLarge {
            n: points.len(),
            cap,
        });
    }
    let mut seen = HashSet::new();
    let unique: Vec<Point2> = points
        .iter()
        .copied()
        .filter(|p| seen.insert(p.key()))
        .collect();
    if unique.len() == 1 {
        return Ok(Hull::from_ccw(unique));
    }

    let mut next: HashMap<usize, usize> = HashMap::new();
    for (i, &a) in unique.iter().enumerate() {
        for (j, &b) in unique.iter().enumerate() {
            if i == j {
                continue;
            }
            let is_edge = unique.iter().enumerate().all(|(k, &c)| {
                k == i
                    || k == j
                    || match orient(a, b, c) {
                        Turn::Left => true,
                        Turn::Collinear => within_segment(a, b, c),
                        Turn::Right => false,
                    }
            });
            if is_edge {
                next.insert(i, j);
            }
        }
    }

    let start = *next
        .keys()
        .min_by(|&&a, &&b| unique[a].cmp_lowest(&unique[b]))
        .expect("at least two distinct points give an edge");
    let mut cycle = vec![unique[start]];
    let mut at = next[&start];
    while at != start && cycle.len() <= unique.len() {
        cycle.push(unique[at]);
        at = next[&at];
    }
    Ok(Hull::from_ccw(cycle))
}

/// Strictly left of every counterclockwise edge; never true for hulls with
/// fewer than three vertices.
pub fn strictly_inside_hull(hull: &Hull, p: Point2) -> bool {
    hull.len() >= 3 && hull.edges().all(|(a, b)| orient(a, b, p) == Turn::Left)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
        v.iter().copied().map(Point2::from).collect()
    }

    #[test]
    fn monotone_examples() {
        let sq = pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.), (0.5, 0.5)]);
        assert_eq!(monotone_chain(&sq).unwrap().vertices(), &sq[..4]);
        assert_eq!(
            monotone_chain(&pts(&[(2., 0.), (0., 0.), (1., 0.)]))
                .unwrap()
                .vertices(),
            pts(&[(0., 0.), (2., 0.)])
        );
        assert_eq!(
            monotone_chain(&pts(&[(1., 1.), (1., 1.)]))
                .unwrap()
                .vertices(),
            pts(&[(1., 1.)])
        );
        assert_eq!(
            monotone_chain(&pts(&[(0., 3.), (1., 2.), (3., 0.)]))
                .unwrap()
                .vertices(),
            pts(&[(3., 0.), (0., 3.)])
        );
        assert!(matches!(monotone_chain(&[]), Err(HullError::EmptyInput)));
    }

    #[test]
    fn brute_examples() {
        let t = pts(&[(0., 0.), (4., 0.), (0., 4.), (1., 1.)]);
        assert_eq!(brute_force_hull(&t, 64).unwrap().vertices(), &t[..3]);
        assert_eq!(brute_force_hull(&t[..1], 64).unwrap().vertices(), &t[..1]);
        assert_eq!(
            brute_force_hull(&pts(&[(0., 0.), (1., 0.), (2., 0.), (1., 0.)]), 64)
                .unwrap()
                .vertices(),
            pts(&[(0., 0.), (2., 0.)])
        );
        let big = vec![Point2::default(); 65];
        assert!(matches!(
            brute_force_hull(&big, BRUTE_FORCE_CAP),
            Err(HullError::TooLarge { .. })
        ));
    }

    #[test]
    fn strictly_inside_examples() {
        let sq = monotone_chain(&pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)])).unwrap();
        assert!(strictly_inside_hull(&sq, Point2::new(0.5, 0.5)));
        assert!(!strictly_inside_hull(&sq, Point2::new(0., 0.5)));
        assert!(!strictly_inside_hull(&sq, Point2::new(2., 2.)));
        for &v in sq.vertices() {
            assert!(!strictly_inside_hull(&sq, v));
        }
    }
}
