//! Orientation predicate and polar keys.
//!
//! Orientation is the plain double-precision cross product with exact zero
//! as the collinear threshold. Every stage and every oracle goes through
//! [`orient`], so hull comparisons are consistent with one predicate.

use std::fmt;

use crate::error::{HullError, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Bit pattern identifying the point under exact equality (`-0.0` and
    /// `0.0` map to the same key).
    #[inline]
    pub fn key(&self) -> (u64, u64) {
        ((self.x + 0.0).to_bits(), (self.y + 0.0).to_bits())
    }

    /// Lexicographic order on `(y, x)`: the lowest point, leftmost on ties.
    #[inline]
    pub fn cmp_lowest(&self, other: &Self) -> std::cmp::Ordering {
        self.y.total_cmp(&other.y).then(self.x.total_cmp(&other.x))
    }

    /// Lexicographic order on `(x, y)`.
    #[inline]
    pub fn cmp_xy(&self, other: &Self) -> std::cmp::Ordering {
        self.x.total_cmp(&other.x).then(self.y.total_cmp(&other.y))
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Self { x, y }
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Returns an error naming the first point with a non-finite coordinate.
pub fn check_finite(points: &[Point2]) -> Result<()> {
    match points.iter().position(|p| !p.is_finite()) {
        Some(index) => Err(HullError::NonFinite { index }),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
    Collinear,
}

impl Turn {
    pub fn reverse(self) -> Self {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
            Turn::Collinear => Turn::Collinear,
        }
    }
}

/// `(b - a) x (c - a)`.
#[inline]
pub fn cross(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Side of `c` relative to the directed line `a -> b`.
#[inline]
pub fn orient(a: Point2, b: Point2, c: Point2) -> Turn {
    let d = cross(a, b, c);
    if d > 0.0 {
        Turn::Left
    } else if d < 0.0 {
        Turn::Right
    } else {
        Turn::Collinear
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarKey {
    /// Counterclockwise angle from the positive x-axis, radians.
    pub angle: f64,
    /// Squared distance to the anchor.
    pub dist2: f64,
}

/// Polar key of `p` seen from `anchor`. With the anchor at the lowest point
/// the angle lies in `[0, pi]`.
#[inline]
pub fn polar_key(anchor: Point2, p: Point2) -> Result<PolarKey> {
    if p == anchor {
        return Err(HullError::CoincidentWithAnchor);
    }
    Ok(polar_key_unchecked(anchor, p))
}

#[inline]
pub(crate) fn polar_key_unchecked(anchor: Point2, p: Point2) -> PolarKey {
    let dx = p.x - anchor.x;
    let dy = p.y - anchor.y;
    PolarKey {
        angle: dy.atan2(dx),
        dist2: dist2_unchecked(anchor, p),
    }
}

#[inline]
pub(crate) fn dist2_unchecked(anchor: Point2, p: Point2) -> f64 {
    let dx = p.x - anchor.x;
    let dy = p.y - anchor.y;
    dx * dx + dy * dy
}
