//! Planar primitives: points, angles in turns, and tolerance-aware segment
//! predicates.
//!
//! Angles follow the `R/Z` convention: one full turn is `1.0`, so the unit
//! vector at angle `t` is `(cos 2πt, sin 2πt)`.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm2(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Angle of this vector in turns, normalized to `[0, 1)`.
    pub fn angle_turns(self) -> f64 {
        let t = self.y.atan2(self.x) / TAU;
        wrap_unit(t)
    }

    /// Rotate counterclockwise by `t` turns about the origin.
    pub fn rotate(self, t: f64) -> Point {
        let (s, c) = (TAU * t).sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Unit vector at angle `t` turns.
pub fn unit(t: f64) -> Point {
    let (s, c) = (TAU * t).sin_cos();
    Point::new(c, s)
}

/// Normalize an angle in turns to `[0, 1)`.
pub fn wrap_unit(t: f64) -> f64 {
    let r = t - t.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Signed angle difference in turns, wrapped to `[-1/2, 1/2)`.
pub fn wrap_signed(t: f64) -> f64 {
    let r = wrap_unit(t);
    if r >= 0.5 {
        r - 1.0
    } else {
        r
    }
}

/// Closed segment between two endpoints.
#[derive(Clone, Copy, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    /// Segment of length `len` centered at `c` along direction `t` turns.
    pub fn centered(c: Point, t: f64, len: f64) -> Self {
        let h = unit(t) * (len / 2.0);
        Segment::new(c - h, c + h)
    }

    pub fn length(self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn midpoint(self) -> Point {
        (self.a + self.b) * 0.5
    }
}

/// Distance from a point to a closed segment.
pub fn point_segment_dist(p: Point, s: Segment) -> f64 {
    let d = s.b - s.a;
    let l2 = d.norm2();
    if l2 == 0.0 {
        return p.dist(s.a);
    }
    let t = ((p - s.a).dot(d) / l2).clamp(0.0, 1.0);
    p.dist(s.a + d * t)
}

/// Minimum distance between two closed segments (0 when they intersect).
pub fn seg_seg_dist(s: Segment, t: Segment) -> f64 {
    if segments_intersect(s, t) {
        return 0.0;
    }
    point_segment_dist(s.a, t)
        .min(point_segment_dist(s.b, t))
        .min(point_segment_dist(t.a, s))
        .min(point_segment_dist(t.b, s))
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Whether two closed segments share a point.
pub fn segments_intersect(s: Segment, t: Segment) -> bool {
    let d1 = orient(t.a, t.b, s.a);
    let d2 = orient(t.a, t.b, s.b);
    let d3 = orient(s.a, s.b, t.a);
    let d4 = orient(s.a, s.b, t.b);

    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(t.a, t.b, s.a))
        || (d2 == 0.0 && on_segment(t.a, t.b, s.b))
        || (d3 == 0.0 && on_segment(s.a, s.b, t.a))
        || (d4 == 0.0 && on_segment(s.a, s.b, t.b))
}

/// Intersection points of two circles `(c1, r1)`, `(c2, r2)`.
///
/// Returns zero, one, or two points; tangent circles give one.
pub fn circle_circle_intersections(c1: Point, r1: f64, c2: Point, r2: f64) -> Vec<Point> {
    let d = c1.dist(c2);
    if d == 0.0 {
        return Vec::new();
    }
    let sum = r1 + r2;
    let diff = (r1 - r2).abs();
    let eps = 1e-12 * (1.0 + d + sum);
    if d > sum + eps || d < diff - eps {
        return Vec::new();
    }
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h2 = r1 * r1 - a * a;
    let dir = (c2 - c1) * (1.0 / d);
    let base = c1 + dir * a;
    if h2 <= eps {
        return vec![base];
    }
    let h = h2.sqrt();
    let n = Point::new(-dir.y, dir.x) * h;
    vec![base + n, base - n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_roundtrip() {
        for k in 0..32 {
            let t = k as f64 / 32.0;
            let back = unit(t).angle_turns();
            assert!(wrap_signed(back - t).abs() < 1e-14, "t={t} back={back}");
        }
    }

    #[test]
    fn crossing_and_touching_segments() {
        let s = Segment::new(Point::new(-1.0, 0.0), Point::new(1.0, 0.0));
        let t = Segment::new(Point::new(0.0, -1.0), Point::new(0.0, 1.0));
        assert!(segments_intersect(s, t));
        assert_eq!(seg_seg_dist(s, t), 0.0);

        // touching at an endpoint
        let u = Segment::new(Point::new(0.5, 0.0), Point::new(0.5, 1.0));
        assert!(segments_intersect(s, u));

        // disjoint parallel
        let v = Segment::new(Point::new(-1.0, 0.3), Point::new(1.0, 0.3));
        assert!(!segments_intersect(s, v));
        assert!((seg_seg_dist(s, v) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn circle_intersections_count() {
        let pts = circle_circle_intersections(ORIGIN, 1.0, Point::new(1.0, 0.0), 1.0);
        assert_eq!(pts.len(), 2);
        for p in pts {
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
        // tangent
        let pts = circle_circle_intersections(ORIGIN, 1.0, Point::new(2.0, 0.0), 1.0);
        assert_eq!(pts.len(), 1);
        assert!(pts[0].dist(Point::new(1.0, 0.0)) < 1e-9);
        // disjoint
        let pts = circle_circle_intersections(ORIGIN, 1.0, Point::new(4.0, 0.0), 1.0);
        assert!(pts.is_empty());
    }
}
