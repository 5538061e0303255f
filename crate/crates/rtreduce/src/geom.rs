//! Planar points in the closed unit disk.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2 { x: 0.0, y: 0.0 }
    }

    pub fn dist(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        Point2 {
            x: 0.5 * (self.x + other.x),
            y: 0.5 * (self.y + other.y),
        }
    }

    pub fn lerp(&self, other: &Point2, u: f64) -> Point2 {
        Point2 {
            x: self.x + u * (other.x - self.x),
            y: self.y + u * (other.y - self.y),
        }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn in_unit_disk(&self, slack: f64) -> bool {
        self.x * self.x + self.y * self.y <= 1.0 + slack
    }
}

/// Smallest distance between two closed planar segments.
pub fn segment_distance(a0: Point2, a1: Point2, b0: Point2, b1: Point2) -> f64 {
    if segments_intersect(a0, a1, b0, b1) {
        return 0.0;
    }
    point_segment_distance(a0, b0, b1)
        .min(point_segment_distance(a1, b0, b1))
        .min(point_segment_distance(b0, a0, a1))
        .min(point_segment_distance(b1, a0, a1))
}

pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let vx = b.x - a.x;
    let vy = b.y - a.y;
    let len2 = vx * vx + vy * vy;
    if len2 == 0.0 {
        return p.dist(&a);
    }
    let t = (((p.x - a.x) * vx + (p.y - a.y) * vy) / len2).clamp(0.0, 1.0);
    p.dist(&Point2::new(a.x + t * vx, a.y + t * vy))
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

pub fn segments_intersect(a0: Point2, a1: Point2, b0: Point2, b1: Point2) -> bool {
    let d1 = orient(b0, b1, a0);
    let d2 = orient(b0, b1, a1);
    let d3 = orient(a0, a1, b0);
    let d4 = orient(a0, a1, b1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |d: f64, p: Point2, q0: Point2, q1: Point2| {
        d == 0.0
            && p.x <= q0.x.max(q1.x)
            && p.x >= q0.x.min(q1.x)
            && p.y <= q0.y.max(q1.y)
            && p.y >= q0.y.min(q1.y)
    };
    on(d1, a0, b0, b1) || on(d2, a1, b0, b1) || on(d3, b0, a0, a1) || on(d4, b1, a0, a1)
}
