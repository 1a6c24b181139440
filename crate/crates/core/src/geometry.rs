//! Exact integer geometry on the scaled lattice frame.
//!
//! The frame is an affine image of the Euclidean plane with positive determinant,
//! so orientation tests, betweenness and parity of crossings all carry over.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// The vector rotated a quarter turn counterclockwise.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn norm2(self) -> i128 {
        let (x, y) = (self.x as i128, self.y as i128);
        x * x + y * y
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<i64> for Point {
    type Output = Point;
    fn mul(self, k: i64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Div<i64> for Point {
    type Output = Point;
    /// Exact division; panics in debug builds if the coordinates are not divisible.
    fn div(self, k: i64) -> Point {
        debug_assert!(self.x % k == 0 && self.y % k == 0, "inexact division of {self:?} by {k}");
        Point::new(self.x / k, self.y / k)
    }
}

pub fn cross(a: Point, b: Point) -> i128 {
    a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
}

pub fn dot(a: Point, b: Point) -> i128 {
    a.x as i128 * b.x as i128 + a.y as i128 * b.y as i128
}

/// Counterclockwise angular order of nonzero vectors, starting at the positive x axis.
pub fn ccw_cmp(a: Point, b: Point) -> Ordering {
    let half = |p: Point| if p.y > 0 || (p.y == 0 && p.x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// Clockwise angular order of nonzero vectors, starting at the positive y axis.
pub fn cw_from_up_cmp(a: Point, b: Point) -> Ordering {
    let half = |p: Point| if p.x > 0 || (p.x == 0 && p.y > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| cross(a, b).cmp(&0))
}

/// A rational point `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatPoint {
    pub num: Point,
    pub den: i64,
}

impl RatPoint {
    pub fn centroid(points: &[Point]) -> RatPoint {
        let sum = points.iter().fold(Point::ORIGIN, |acc, &p| acc + p);
        RatPoint { num: sum, den: points.len() as i64 }
    }
}

/// Even-odd test of `q` against the closed polyline `poly`.
///
/// Uses a horizontal ray towards +x with the half-open rule on vertex heights, which
/// is the usual symbolic perturbation of the ray. The caller guarantees `q` is not on
/// the curve.
pub fn inside_even_odd(poly: &[Point], q: RatPoint) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let d = q.den as i128;
    let (qx, qy) = (q.num.x as i128, q.num.y as i128);
    let mut inside = false;
    for k in 0..n {
        let p1 = poly[k];
        let p2 = poly[(k + 1) % n];
        let (x1, y1) = (p1.x as i128 * d, p1.y as i128 * d);
        let (x2, y2) = (p2.x as i128 * d, p2.y as i128 * d);
        if (y1 > qy) == (y2 > qy) {
            continue;
        }
        // Crossing abscissa x = x1 + (qy - y1)(x2 - x1)/(y2 - y1); compare with qx.
        let lhs = (x1 - qx) * (y2 - y1) + (qy - y1) * (x2 - x1);
        let right = if y2 > y1 { lhs > 0 } else { lhs < 0 };
        if right {
            inside = !inside;
        }
    }
    inside
}

/// Whether `q` lies on the segment `a b`.
pub fn on_segment(a: Point, b: Point, q: RatPoint) -> bool {
    let d = q.den as i128;
    let ax = a.x as i128 * d;
    let ay = a.y as i128 * d;
    let bx = b.x as i128 * d;
    let by = b.y as i128 * d;
    let (qx, qy) = (q.num.x as i128, q.num.y as i128);
    let c = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax);
    c == 0 && qx >= ax.min(bx) && qx <= ax.max(bx) && qy >= ay.min(by) && qy <= ay.max(by)
}
