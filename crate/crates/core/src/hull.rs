//! Hull type and the stack-based Graham finalization.

use std::collections::HashSet;

use crate::angular::AnnotatedBuffer;
use crate::geom::{orient, Point2, Turn};

/// Strict hull vertices in counterclockwise order, starting at the lowest
/// (then leftmost) vertex. Degenerate inputs give one or two vertices.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Hull {
    vertices: Vec<Point2>,
}

impl Hull {
    /// Wraps `vertices` after rotating them to the canonical start. The
    /// caller guarantees counterclockwise order.
    pub fn from_ccw(mut vertices: Vec<Point2>) -> Self {
        if let Some(start) = vertices
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.cmp_lowest(b))
            .map(|(i, _)| i)
        {
            vertices.rotate_left(start);
        }
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point2> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed boundary edges. A two-vertex hull yields both directions.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        let count = if n < 2 { 0 } else { n };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn same_vertex_set(&self, other: &Hull) -> bool {
        let a: HashSet<_> = self.vertices.iter().map(Point2::key).collect();
        let b: HashSet<_> = other.vertices.iter().map(Point2::key).collect();
        a.len() == self.len() && b.len() == other.len() && a == b
    }

    /// Every consecutive triple turns strictly left.
    pub fn is_strictly_convex(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return true;
        }
        (0..n).all(|i| {
            let v = |k: usize| self.vertices[(i + k) % n];
            orient(v(0), v(1), v(2)) == Turn::Left
        })
    }

    /// `p` is inside or on the boundary.
    pub fn contains(&self, p: Point2) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                orient(a, b, p) == Turn::Collinear
                    && p.x >= a.x.min(b.x)
                    && p.x <= a.x.max(b.x)
                    && p.y >= a.y.min(b.y)
                    && p.y <= a.y.max(b.y)
            }
            _ => self.edges().all(|(a, b)| orient(a, b, p) != Turn::Right),
        }
    }
}

/// Graham scan over a buffer sorted by `(angle, dist2)` around its anchor.
/// Collinear boundary points are popped.
pub fn graham_finalize(buf: &AnnotatedBuffer) -> Hull {
    let n = buf.len();
    if n == 0 {
        return Hull::default();
    }
    let mut stack: Vec<Point2> = Vec::with_capacity(64);
    stack.push(buf.point(0));
    if n > 1 {
        stack.push(buf.point(1));
    }
    for p in buf.points().skip(2) {
        while stack.len() >= 2
            && orient(stack[stack.len() - 2], stack[stack.len() - 1], p) != Turn::Left
        {
            stack.pop();
        }
        stack.push(p);
    }
    // closing edge back to the anchor
    let anchor = stack[0];
    while stack.len() >= 3
        && orient(stack[stack.len() - 2], stack[stack.len() - 1], anchor) != Turn::Left
    {
        stack.pop();
    }
    Hull { vertices: stack }
}
