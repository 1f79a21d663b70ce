//! Points, rectangles and the distance predicates used by node containment.

use core::ops::{Add, Mul, Neg, Sub};

use crate::Scalar;

/// A position (or displacement) in pixels. Screen convention: `y` grows downwards.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    #[inline]
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self::new(S::zero(), S::zero())
    }

    /// Unit vector at `angle` radians, measured from +x towards +y.
    #[inline]
    pub fn polar(angle: S) -> Self {
        Self::new(angle.cos(), angle.sin())
    }

    #[inline]
    pub fn dot(self, other: Self) -> S {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2-D cross product.
    #[inline]
    pub fn cross(self, other: Self) -> S {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn length_squared(self) -> S {
        self.dot(self)
    }

    #[inline]
    pub fn length(self) -> S {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Self) -> S {
        (self - other).length()
    }

    /// Direction of the vector, in `(-pi, pi]`.
    #[inline]
    pub fn angle(self) -> S {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn translated(self, dx: S, dy: S) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }

    /// Rotation by `theta` radians about `pivot`.
    pub fn rotated_about(self, pivot: Self, theta: S) -> Self {
        let (s, c) = theta.sin_cos();
        let d = self - pivot;
        Self::new(pivot.x + d.x * c - d.y * s, pivot.y + d.x * s + d.y * c)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Distance from `self` to the closed segment `a`–`b`. A zero-length segment
    /// behaves as the point `a`.
    pub fn distance_to_segment(self, a: Self, b: Self) -> S {
        let ab = b - a;
        let len2 = ab.length_squared();
        if len2 <= S::zero() {
            return self.distance(a);
        }
        let t = ((self - a).dot(ab) / len2).clamp_to(S::zero(), S::one());
        self.distance(a + ab * t)
    }
}

impl<S: Scalar> Add for Point<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub for Point<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Mul<S> for Point<S> {
    type Output = Self;
    fn mul(self, k: S) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl<S: Scalar> Neg for Point<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// Axis-aligned rectangle: top-left corner plus non-negative size.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Rect<S> {
    pub x: S,
    pub y: S,
    pub w: S,
    pub h: S,
}

impl<S: Scalar> Rect<S> {
    #[inline]
    pub fn new(x: S, y: S, w: S, h: S) -> Self {
        Self { x, y, w, h }
    }

    pub fn from_corners(a: Point<S>, b: Point<S>) -> Self {
        let x = a.x.min(b.x);
        let y = a.y.min(b.y);
        Self::new(x, y, a.x.max(b.x) - x, a.y.max(b.y) - y)
    }

    #[inline]
    pub fn left(&self) -> S {
        self.x
    }
    #[inline]
    pub fn top(&self) -> S {
        self.y
    }
    #[inline]
    pub fn right(&self) -> S {
        self.x + self.w
    }
    #[inline]
    pub fn bottom(&self) -> S {
        self.y + self.h
    }

    pub fn origin(&self) -> Point<S> {
        Point::new(self.x, self.y)
    }

    pub fn center(&self) -> Point<S> {
        Point::new(self.x + self.w * S::half(), self.y + self.h * S::half())
    }

    /// Corners in the order top-left, top-right, bottom-right, bottom-left.
    pub fn corners(&self) -> [Point<S>; 4] {
        [
            Point::new(self.left(), self.top()),
            Point::new(self.right(), self.top()),
            Point::new(self.right(), self.bottom()),
            Point::new(self.left(), self.bottom()),
        ]
    }

    /// Closed containment.
    pub fn contains(&self, p: Point<S>) -> bool {
        p.x >= self.left() && p.x <= self.right() && p.y >= self.top() && p.y <= self.bottom()
    }

    pub fn translated(&self, dx: S, dy: S) -> Self {
        Self::new(self.x + dx, self.y + dy, self.w, self.h)
    }

    pub fn union(&self, other: &Self) -> Self {
        let x = self.left().min(other.left());
        let y = self.top().min(other.top());
        Self::new(x, y, self.right().max(other.right()) - x, self.bottom().max(other.bottom()) - y)
    }

    /// `other` lies inside `self` (closed).
    pub fn contains_rect(&self, other: &Self) -> bool {
        other.left() >= self.left()
            && other.right() <= self.right()
            && other.top() >= self.top()
            && other.bottom() <= self.bottom()
    }

    /// Converts a point to fractional frame coordinates. Degenerate axes map to 0.
    pub fn to_fraction(&self, p: Point<S>) -> Point<S> {
        let fx = if self.w > S::zero() { (p.x - self.x) / self.w } else { S::zero() };
        let fy = if self.h > S::zero() { (p.y - self.y) / self.h } else { S::zero() };
        Point::new(fx, fy)
    }

    pub fn from_fraction(&self, f: Point<S>) -> Point<S> {
        Point::new(self.x + f.x * self.w, self.y + f.y * self.h)
    }
}

/// Signed area by the shoelace formula; positive for counterclockwise order
/// in the +x/+y frame.
pub fn signed_area<S: Scalar>(pts: &[Point<S>]) -> S {
    let n = pts.len();
    if n < 3 {
        return S::zero();
    }
    let mut acc = S::zero();
    for i in 0..n {
        acc += pts[i].cross(pts[(i + 1) % n]);
    }
    acc * S::half()
}

/// Bounding rectangle of a non-empty point set.
pub fn bounds_of<S: Scalar>(pts: impl IntoIterator<Item = Point<S>>) -> Option<Rect<S>> {
    let mut it = pts.into_iter();
    let first = it.next()?;
    let (mut lo, mut hi) = (first, first);
    for p in it {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    Some(Rect::from_corners(lo, hi))
}
