//! Covers: ordered sets of sensitive nodes, and the standard cover layouts.
//!
//! A [`Cover`] fully determines how its owner can be grabbed. Node order is
//! the hit-test priority: the first node containing the pointer wins, and a
//! transparent winner makes the whole owner yield to whatever lies beneath.

use thiserror::Error;

use crate::geometry::{bounds_of, signed_area, Point, Rect};
use crate::Scalar;

/// Permitted individual movement of a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MovementType {
    None,
    /// Vertical only.
    NS,
    /// Horizontal only.
    WE,
    Any,
}

impl MovementType {
    /// Zeroes the displacement components this movement type forbids.
    pub fn mask<S: Scalar>(self, dx: S, dy: S) -> (S, S) {
        match self {
            MovementType::None => (S::zero(), S::zero()),
            MovementType::NS => (S::zero(), dy),
            MovementType::WE => (dx, S::zero()),
            MovementType::Any => (dx, dy),
        }
    }
}

/// Cursor shown while the pointer is above a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CursorTag {
    Arrow,
    Hand,
    SizeNS,
    SizeWE,
    SizeNWSE,
    SizeNESW,
    SizeAll,
}

impl CursorTag {
    pub const ALL: [CursorTag; 7] = [
        CursorTag::Arrow,
        CursorTag::Hand,
        CursorTag::SizeNS,
        CursorTag::SizeWE,
        CursorTag::SizeNWSE,
        CursorTag::SizeNESW,
        CursorTag::SizeAll,
    ];
}

/// Which sides of a rectangle can be dragged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Resizing {
    None,
    NS,
    WE,
    Any,
}

impl Resizing {
    pub fn sides(self) -> SideMask {
        match self {
            Resizing::None => SideMask::NONE,
            Resizing::NS => SideMask { top: true, bottom: true, left: false, right: false },
            Resizing::WE => SideMask { top: false, bottom: false, left: true, right: true },
            Resizing::Any => SideMask::ALL,
        }
    }

    pub fn movement(self) -> MovementType {
        match self {
            Resizing::None => MovementType::None,
            Resizing::NS => MovementType::NS,
            Resizing::WE => MovementType::WE,
            Resizing::Any => MovementType::Any,
        }
    }
}

/// Per-side flags, used for resizable sides of frames and groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SideMask {
    pub top: bool,
    pub bottom: bool,
    pub left: bool,
    pub right: bool,
}

impl SideMask {
    pub const NONE: SideMask = SideMask { top: false, bottom: false, left: false, right: false };
    pub const ALL: SideMask = SideMask { top: true, bottom: true, left: true, right: true };

    /// Sides in canonical order top, bottom, left, right.
    pub fn enabled(self) -> impl Iterator<Item = Side> {
        [(Side::Top, self.top), (Side::Bottom, self.bottom), (Side::Left, self.left), (Side::Right, self.right)]
            .into_iter()
            .filter_map(|(s, on)| on.then_some(s))
    }

    /// Corners (TL, TR, BR, BL order) whose two adjacent sides are both enabled.
    pub fn corners(self) -> impl Iterator<Item = Corner> {
        [
            (Corner::TopLeft, self.top && self.left),
            (Corner::TopRight, self.top && self.right),
            (Corner::BottomRight, self.bottom && self.right),
            (Corner::BottomLeft, self.bottom && self.left),
        ]
        .into_iter()
        .filter_map(|(c, on)| on.then_some(c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl Side {
    pub fn movement(self) -> MovementType {
        match self {
            Side::Top | Side::Bottom => MovementType::NS,
            Side::Left | Side::Right => MovementType::WE,
        }
    }

    pub fn cursor(self) -> CursorTag {
        match self {
            Side::Top | Side::Bottom => CursorTag::SizeNS,
            Side::Left | Side::Right => CursorTag::SizeWE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    TopLeft,
    TopRight,
    BottomRight,
    BottomLeft,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::TopLeft, Corner::TopRight, Corner::BottomRight, Corner::BottomLeft];

    pub fn cursor(self) -> CursorTag {
        match self {
            Corner::TopLeft | Corner::BottomRight => CursorTag::SizeNWSE,
            Corner::TopRight | Corner::BottomLeft => CursorTag::SizeNESW,
        }
    }

    pub fn of<S: Scalar>(self, r: &Rect<S>) -> Point<S> {
        r.corners()[self as usize]
    }

    /// The two sides meeting at this corner (horizontal edge first).
    pub fn sides(self) -> (Side, Side) {
        match self {
            Corner::TopLeft => (Side::Top, Side::Left),
            Corner::TopRight => (Side::Top, Side::Right),
            Corner::BottomRight => (Side::Bottom, Side::Right),
            Corner::BottomLeft => (Side::Bottom, Side::Left),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("polygon apexes are not convex")]
    NonConvex,
    #[error("polygon is degenerate (area below threshold)")]
    Degenerate,
    #[error("invalid dimensions: {0}")]
    BadDimensions(&'static str),
    #[error("a loop needs at least two points")]
    TooFewPoints,
    #[error("invalid annulus radii")]
    BadRadii,
    #[error("a regular polygon needs at least three apexes and a positive radius")]
    BadCount,
    #[error("node id {found} at position {expected}")]
    NodeIdMismatch { expected: usize, found: usize },
}

/// Geometry of one sensitive area.
#[derive(Debug, Clone, PartialEq)]
pub enum NodeShape<S> {
    Circle {
        center: Point<S>,
        radius: S,
    },
    /// Strictly convex, counterclockwise (positive signed area) apexes.
    Polygon {
        apexes: Vec<Point<S>>,
    },
    /// Segment `p1`–`p2` dilated by `radius`.
    Strip {
        p1: Point<S>,
        p2: Point<S>,
        radius: S,
    },
}

impl<S: Scalar> NodeShape<S> {
    /// Closed containment: boundary points are inside.
    pub fn contains(&self, pt: Point<S>) -> bool {
        match self {
            NodeShape::Circle { center, radius } => (pt - *center).length_squared() <= *radius * *radius,
            NodeShape::Strip { p1, p2, radius } => strip_contains(*p1, *p2, *radius, pt),
            NodeShape::Polygon { apexes } => {
                let n = apexes.len();
                (0..n).all(|i| {
                    let a = apexes[i];
                    let b = apexes[(i + 1) % n];
                    (b - a).cross(pt - a) >= S::zero()
                })
            }
        }
    }

    pub fn translated(&self, dx: S, dy: S) -> Self {
        match self {
            NodeShape::Circle { center, radius } => {
                NodeShape::Circle { center: center.translated(dx, dy), radius: *radius }
            }
            NodeShape::Polygon { apexes } => {
                NodeShape::Polygon { apexes: apexes.iter().map(|p| p.translated(dx, dy)).collect() }
            }
            NodeShape::Strip { p1, p2, radius } => {
                NodeShape::Strip { p1: p1.translated(dx, dy), p2: p2.translated(dx, dy), radius: *radius }
            }
        }
    }

    pub fn bounds(&self) -> Rect<S> {
        match self {
            NodeShape::Circle { center, radius } => {
                Rect::new(center.x - *radius, center.y - *radius, *radius * S::two(), *radius * S::two())
            }
            NodeShape::Polygon { apexes } => bounds_of(apexes.iter().copied()).unwrap_or_default(),
            NodeShape::Strip { p1, p2, radius } => {
                let r = Rect::from_corners(*p1, *p2);
                Rect::new(r.x - *radius, r.y - *radius, r.w + *radius * S::two(), r.h + *radius * S::two())
            }
        }
    }

    /// Defining points of the shape (centers, apexes, strip ends).
    pub fn points(&self) -> Vec<Point<S>> {
        match self {
            NodeShape::Circle { center, .. } => vec![*center],
            NodeShape::Polygon { apexes } => apexes.clone(),
            NodeShape::Strip { p1, p2, .. } => vec![*p1, *p2],
        }
    }

    /// Polygon from apexes already known to be convex; only the winding is fixed up.
    pub(crate) fn convex_polygon(mut apexes: Vec<Point<S>>) -> Self {
        if signed_area(&apexes) < S::zero() {
            apexes.reverse();
        }
        NodeShape::Polygon { apexes }
    }

    pub(crate) fn rect(r: Rect<S>) -> Self {
        NodeShape::Polygon { apexes: r.corners().to_vec() }
    }
}

fn strip_contains<S: Scalar>(p1: Point<S>, p2: Point<S>, radius: S, pt: Point<S>) -> bool {
    let ab = p2 - p1;
    let len2 = ab.length_squared();
    let t = if len2 > S::zero() { ((pt - p1).dot(ab) / len2).clamp_to(S::zero(), S::one()) } else { S::zero() };
    (pt - (p1 + ab * t)).length_squared() <= radius * radius
}

/// One sensitive area of a cover.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverNode<S> {
    pub id: usize,
    pub shape: NodeShape<S>,
    pub movement: MovementType,
    pub cursor: CursorTag,
    /// A transparent node makes its owner yield the pick to objects beneath.
    pub transparent: bool,
}

impl<S: Scalar> CoverNode<S> {
    pub fn new(id: usize, shape: NodeShape<S>, movement: MovementType, cursor: CursorTag) -> Self {
        Self { id, shape, movement, cursor, transparent: false }
    }

    pub fn circle(id: usize, center: Point<S>, radius: S, movement: MovementType, cursor: CursorTag) -> Self {
        Self::new(id, NodeShape::Circle { center, radius }, movement, cursor)
    }

    pub fn strip(id: usize, p1: Point<S>, p2: Point<S>, radius: S, movement: MovementType, cursor: CursorTag) -> Self {
        Self::new(id, NodeShape::Strip { p1, p2, radius }, movement, cursor)
    }

    pub fn contains(&self, pt: Point<S>) -> bool {
        self.shape.contains(pt)
    }
}

/// Builds a convex polygon node. Winding is normalized to counterclockwise
/// and collinear or repeated apexes are dropped before the convexity check.
pub fn make_polygon_node<S: Scalar>(
    id: usize,
    apexes: &[Point<S>],
    movement: MovementType,
    cursor: CursorTag,
) -> Result<CoverNode<S>, GeometryError> {
    let apexes = normalize_convex(apexes)?;
    Ok(CoverNode::new(id, NodeShape::Polygon { apexes }, movement, cursor))
}

fn normalize_convex<S: Scalar>(apexes: &[Point<S>]) -> Result<Vec<Point<S>>, GeometryError> {
    if apexes.len() < 3 || apexes.iter().any(|p| !p.is_finite()) {
        return Err(GeometryError::Degenerate);
    }
    let area = signed_area(apexes);
    if area.abs() < S::lit(1e-9) {
        return Err(GeometryError::Degenerate);
    }
    let mut pts: Vec<Point<S>> = apexes.to_vec();
    if area < S::zero() {
        pts.reverse();
    }

    // Drop repeated apexes and straight-through (collinear, same direction) apexes.
    let tol = S::epsilon() * S::lit(64.0);
    loop {
        let n = pts.len();
        if n < 3 {
            return Err(GeometryError::Degenerate);
        }
        let mut removed = false;
        for i in 0..n {
            let prev = pts[(i + n - 1) % n];
            let cur = pts[i];
            let next = pts[(i + 1) % n];
            let e1 = cur - prev;
            let e2 = next - cur;
            let l1 = e1.length();
            let l2 = e2.length();
            let straight = e1.cross(e2).abs() <= tol * l1 * l2 && e1.dot(e2) >= S::zero();
            if l1 == S::zero() || l2 == S::zero() || straight {
                pts.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }

    let n = pts.len();
    let mut turning = S::zero();
    for i in 0..n {
        let e1 = pts[i] - pts[(i + n - 1) % n];
        let e2 = pts[(i + 1) % n] - pts[i];
        let c = e1.cross(e2);
        if c <= S::zero() {
            return Err(GeometryError::NonConvex);
        }
        turning += c.atan2(e1.dot(e2));
    }
    // all left turns but winding more than once (a star polygon)
    if turning > S::PI() * S::lit(3.0) {
        return Err(GeometryError::NonConvex);
    }
    Ok(pts)
}

/// Result of hit-testing one cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hit {
    Miss,
    Node(usize),
    /// The first containing node is transparent; the owner yields.
    FallThrough(usize),
}

impl Hit {
    pub fn node(self) -> Option<usize> {
        match self {
            Hit::Node(i) => Some(i),
            _ => None,
        }
    }
}

/// Ordered sequence of nodes; node `i` has id `i`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Cover<S> {
    nodes: Vec<CoverNode<S>>,
}

impl<S: Scalar> Cover<S> {
    pub fn new() -> Self {
        Self { nodes: Vec::new() }
    }

    pub fn from_nodes(nodes: Vec<CoverNode<S>>) -> Result<Self, GeometryError> {
        for (i, n) in nodes.iter().enumerate() {
            if n.id != i {
                return Err(GeometryError::NodeIdMismatch { expected: i, found: n.id });
            }
        }
        Ok(Self { nodes })
    }

    /// Appends a node, assigning the next id.
    pub fn push(&mut self, shape: NodeShape<S>, movement: MovementType, cursor: CursorTag) -> usize {
        let id = self.nodes.len();
        self.nodes.push(CoverNode::new(id, shape, movement, cursor));
        id
    }

    pub fn push_transparent(&mut self, shape: NodeShape<S>) -> usize {
        let id = self.push(shape, MovementType::None, CursorTag::Arrow);
        self.nodes[id].transparent = true;
        id
    }

    pub fn nodes(&self) -> &[CoverNode<S>] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> Option<&CoverNode<S>> {
        self.nodes.get(i)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn hit_index(&self, pt: Point<S>) -> Hit {
        match self.nodes.iter().find(|n| n.contains(pt)) {
            None => Hit::Miss,
            Some(n) if n.transparent => Hit::FallThrough(n.id),
            Some(n) => Hit::Node(n.id),
        }
    }

    pub fn translated(&self, dx: S, dy: S) -> Self {
        Self {
            nodes: self.nodes.iter().map(|n| CoverNode { shape: n.shape.translated(dx, dy), ..n.clone() }).collect(),
        }
    }

    pub fn bounds(&self) -> Option<Rect<S>> {
        let mut it = self.nodes.iter().map(|n| n.shape.bounds());
        let first = it.next()?;
        Some(it.fold(first, |acc, r| acc.union(&r)))
    }
}

/// Free-function form of [`Cover::hit_index`].
pub fn hit_index<S: Scalar>(cover: &Cover<S>, pt: Point<S>) -> Hit {
    cover.hit_index(pt)
}

pub fn node_contains<S: Scalar>(node: &CoverNode<S>, pt: Point<S>) -> bool {
    node.contains(pt)
}

fn side_strip<S: Scalar>(rect: &Rect<S>, side: Side, half_width: S) -> Rect<S> {
    let t = half_width * S::two();
    match side {
        Side::Top => Rect::new(rect.left(), rect.top() - half_width, rect.w, t),
        Side::Bottom => Rect::new(rect.left(), rect.bottom() - half_width, rect.w, t),
        Side::Left => Rect::new(rect.left() - half_width, rect.top(), t, rect.h),
        Side::Right => Rect::new(rect.right() - half_width, rect.top(), t, rect.h),
    }
}

/// Corner circles where both adjacent sides are resizable, side strips on the
/// resizable sides, then the body. Dimensions are assumed valid.
pub(crate) fn framed_rect_nodes<S: Scalar>(
    rect: &Rect<S>,
    sides: SideMask,
    corner_radius: S,
    half_width: S,
) -> Cover<S> {
    let mut cover = Cover::new();
    for corner in sides.corners() {
        cover.push(
            NodeShape::Circle { center: corner.of(rect), radius: corner_radius },
            MovementType::Any,
            corner.cursor(),
        );
    }
    for side in sides.enabled() {
        cover.push(NodeShape::rect(side_strip(rect, side, half_width)), side.movement(), side.cursor());
    }
    cover.push(NodeShape::rect(*rect), MovementType::Any, CursorTag::SizeAll);
    cover
}

pub(crate) fn check_rect_dims<S: Scalar>(rect: &Rect<S>, corner_radius: S, half_width: S) -> Result<(), GeometryError> {
    let finite = [rect.x, rect.y, rect.w, rect.h, corner_radius, half_width].iter().all(|v| v.is_finite());
    if !finite {
        return Err(GeometryError::BadDimensions("non-finite value"));
    }
    if half_width <= S::zero() {
        return Err(GeometryError::BadDimensions("half width must be positive"));
    }
    if rect.w <= half_width * S::two() || rect.h <= half_width * S::two() {
        return Err(GeometryError::BadDimensions("rectangle thinner than its side nodes"));
    }
    if corner_radius < half_width {
        return Err(GeometryError::BadDimensions("corner radius below half width"));
    }
    Ok(())
}

/// Standard rectangle cover.
///
/// `Any`: corner circles TL, TR, BR, BL (ids 0-3), side strips top, bottom,
/// left, right (4-7), body (8). `NS`: top, bottom, body. `WE`: left, right,
/// body. `None`: body only.
pub fn rectangle_cover<S: Scalar>(
    rect: Rect<S>,
    resizing: Resizing,
    corner_radius: S,
    half_width: S,
) -> Result<Cover<S>, GeometryError> {
    check_rect_dims(&rect, corner_radius, half_width)?;
    Ok(framed_rect_nodes(&rect, resizing.sides(), corner_radius, half_width))
}

pub(crate) fn loop_nodes<S: Scalar>(points: &[Point<S>], node_radius: S, half_width: S) -> Cover<S> {
    let n = points.len();
    let mut cover = Cover::new();
    for p in points {
        cover.push(NodeShape::Circle { center: *p, radius: node_radius }, MovementType::Any, CursorTag::Hand);
    }
    for i in 0..n {
        cover.push(
            NodeShape::Strip { p1: points[i], p2: points[(i + 1) % n], radius: half_width },
            MovementType::Any,
            CursorTag::SizeAll,
        );
    }
    cover
}

/// Cover of a closed loop: one circle per point, then one strip per
/// segment including the closing one.
pub fn loop_cover<S: Scalar>(points: &[Point<S>], node_radius: S, half_width: S) -> Result<Cover<S>, GeometryError> {
    if points.len() < 2 {
        return Err(GeometryError::TooFewPoints);
    }
    if node_radius <= S::zero() || half_width <= S::zero() {
        return Err(GeometryError::BadDimensions("node sizes must be positive"));
    }
    Ok(loop_nodes(points, node_radius, half_width))
}

/// Number of border circles for a circle of radius `r` when the circle
/// centers are at most `node_radius` apart.
pub fn border_node_count<S: Scalar>(r: S, node_radius: S) -> usize {
    let k = (S::two() * S::PI() * r / node_radius).ceil();
    k.to_usize().unwrap_or(0).max(3)
}

/// Annulus nodes for explicit border counts. Requires `r_outer > r_inner > 0`.
pub(crate) fn annulus_nodes<S: Scalar>(
    center: Point<S>,
    r_outer: S,
    r_inner: S,
    node_radius: S,
    k_out: usize,
    k_in: usize,
) -> Cover<S> {
    let tau = S::two() * S::PI();
    let ring = |r: S, k: usize| -> Vec<Point<S>> {
        (0..k).map(|i| center + Point::polar(tau * S::lit(i as f64) / S::lit(k as f64)) * r).collect()
    };
    let outer = ring(r_outer, k_out);
    let inner = ring(r_inner, k_in);
    let mut cover = Cover::new();
    for p in outer.iter().chain(inner.iter()) {
        cover.push(NodeShape::Circle { center: *p, radius: node_radius }, MovementType::Any, CursorTag::Hand);
    }
    for i in 0..k_out {
        let a = Point::polar(tau * S::lit(i as f64) / S::lit(k_out as f64));
        let b = Point::polar(tau * S::lit((i + 1) as f64) / S::lit(k_out as f64));
        let quad = vec![center + a * r_inner, center + a * r_outer, center + b * r_outer, center + b * r_inner];
        cover.push(NodeShape::convex_polygon(quad), MovementType::Any, CursorTag::SizeAll);
    }
    cover
}

/// N-node ring cover: outer border circles, inner border circles, then the
/// quadrilateral sectors between the borders.
pub fn annulus_cover<S: Scalar>(
    center: Point<S>,
    r_outer: S,
    r_inner: S,
    node_radius: S,
) -> Result<Cover<S>, GeometryError> {
    if !(node_radius > S::zero() && r_inner > node_radius && r_outer > r_inner + node_radius) {
        return Err(GeometryError::BadRadii);
    }
    let k_out = border_node_count(r_outer, node_radius);
    let k_in = border_node_count(r_inner, node_radius);
    Ok(annulus_nodes(center, r_outer, r_inner, node_radius, k_out, k_in))
}

/// Apex `k` sits at `center + circumradius * (cos, sin)(phase + 2*pi*k/n)`.
pub fn regular_apexes<S: Scalar>(
    n: usize,
    center: Point<S>,
    circumradius: S,
    phase: S,
) -> Result<Vec<Point<S>>, GeometryError> {
    if n < 3 || !(circumradius > S::zero()) {
        return Err(GeometryError::BadCount);
    }
    Ok(regular_apexes_unchecked(n, center, circumradius, phase))
}

pub(crate) fn regular_apexes_unchecked<S: Scalar>(
    n: usize,
    center: Point<S>,
    circumradius: S,
    phase: S,
) -> Vec<Point<S>> {
    let step = S::two() * S::PI() / S::lit(n as f64);
    (0..n).map(|k| center + Point::polar(phase + step * S::lit(k as f64)) * circumradius).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    #[test]
    fn circle_boundary_is_inside() {
        let n = CoverNode::circle(0, p(0.0, 0.0), 10.0, MovementType::Any, CursorTag::Hand);
        assert!(n.contains(p(6.0, 8.0)));
        assert!(!n.contains(p(6.0, 8.01)));
    }

    #[test]
    fn strip_side_and_cap() {
        let n = CoverNode::strip(0, p(0.0, 0.0), p(10.0, 0.0), 2.0, MovementType::Any, CursorTag::Hand);
        assert!(n.contains(p(5.0, 1.0)));
        assert!(!n.contains(p(13.0, 0.0)));
        assert!(n.contains(p(12.0, 0.0)));
    }

    #[test]
    fn square_polygon() {
        let sq = [p(0.0, 0.0), p(10.0, 0.0), p(10.0, 10.0), p(0.0, 10.0)];
        let n = make_polygon_node(0, &sq, MovementType::Any, CursorTag::SizeAll).unwrap();
        assert!(n.contains(p(5.0, 5.0)));
        assert!(!n.contains(p(11.0, 5.0)));
        assert!(n.contains(p(10.0, 5.0)));
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let cw = [p(0.0, 0.0), p(0.0, 10.0), p(10.0, 10.0), p(10.0, 0.0)];
        let n = make_polygon_node(0, &cw, MovementType::Any, CursorTag::SizeAll).unwrap();
        let NodeShape::Polygon { apexes } = &n.shape else { unreachable!() };
        assert!(signed_area(apexes) > 0.0);
        assert!(n.contains(p(5.0, 5.0)));
    }

    #[test]
    fn chevron_is_rejected() {
        let chevron = [p(0.0, 0.0), p(10.0, 0.0), p(5.0, 3.0), p(10.0, 10.0), p(0.0, 10.0)];
        assert_eq!(make_polygon_node(0, &chevron, MovementType::Any, CursorTag::Hand), Err(GeometryError::NonConvex));
    }

    #[test]
    fn collinear_is_degenerate() {
        let line = [p(0.0, 0.0), p(5.0, 0.0), p(10.0, 0.0)];
        assert_eq!(make_polygon_node(0, &line, MovementType::Any, CursorTag::Hand), Err(GeometryError::Degenerate));
    }

    #[test]
    fn collinear_apex_dropped() {
        let sq = [p(0.0, 0.0), p(5.0, 0.0), p(10.0, 0.0), p(10.0, 10.0), p(0.0, 10.0)];
        let n = make_polygon_node(0, &sq, MovementType::Any, CursorTag::Hand).unwrap();
        assert_eq!(n.shape.points().len(), 4);
    }

    #[test]
    fn pentagram_is_rejected() {
        let star: Vec<_> = (0..5)
            .map(|k| {
                let a = core::f64::consts::TAU * (2 * k) as f64 / 5.0;
                p(a.cos() * 10.0, a.sin() * 10.0)
            })
            .collect();
        assert_eq!(make_polygon_node(0, &star, MovementType::Any, CursorTag::Hand), Err(GeometryError::NonConvex));
    }

    #[test]
    fn rectangle_layouts() {
        let r = Rect::new(0.0, 0.0, 100.0, 60.0);
        let any = rectangle_cover(r, Resizing::Any, 8.0, 3.0).unwrap();
        assert_eq!(any.len(), 9);
        assert_eq!(any.hit_index(p(0.0, 0.0)), Hit::Node(0));
        assert_eq!(any.hit_index(p(100.0, 0.0)), Hit::Node(1));
        assert_eq!(any.hit_index(p(100.0, 60.0)), Hit::Node(2));
        assert_eq!(any.hit_index(p(0.0, 60.0)), Hit::Node(3));
        assert_eq!(any.hit_index(p(50.0, 0.0)), Hit::Node(4));
        assert_eq!(any.hit_index(p(50.0, 60.0)), Hit::Node(5));
        assert_eq!(any.hit_index(p(0.0, 30.0)), Hit::Node(6));
        assert_eq!(any.hit_index(p(100.0, 30.0)), Hit::Node(7));
        assert_eq!(any.hit_index(p(50.0, 30.0)), Hit::Node(8));
        assert_eq!(any.hit_index(p(500.0, 500.0)), Hit::Miss);
        assert_eq!(any.node(0).unwrap().cursor, CursorTag::SizeNWSE);
        assert_eq!(any.node(1).unwrap().cursor, CursorTag::SizeNESW);
        assert_eq!(any.node(4).unwrap().movement, MovementType::NS);
        assert_eq!(any.node(6).unwrap().movement, MovementType::WE);

        let none = rectangle_cover(r, Resizing::None, 8.0, 3.0).unwrap();
        assert_eq!(none.len(), 1);
        for c in r.corners() {
            assert_eq!(none.hit_index(c), Hit::Node(0));
        }

        let ns = rectangle_cover(r, Resizing::NS, 8.0, 3.0).unwrap();
        assert_eq!(ns.len(), 3);
        assert!(ns.node(0).unwrap().contains(p(50.0, 0.0)));
        assert!(ns.node(1).unwrap().contains(p(50.0, 60.0)));

        let we = rectangle_cover(r, Resizing::WE, 8.0, 3.0).unwrap();
        assert_eq!(we.len(), 3);
        assert!(we.node(0).unwrap().contains(p(0.0, 30.0)));
    }

    #[test]
    fn rectangle_bad_dimensions() {
        let thin = Rect::new(0.0, 0.0, 5.0, 60.0);
        assert!(matches!(rectangle_cover(thin, Resizing::Any, 8.0, 3.0), Err(GeometryError::BadDimensions(_))));
        let r = Rect::new(0.0, 0.0, 100.0, 60.0);
        assert!(rectangle_cover(r, Resizing::Any, 2.0, 3.0).is_err());
    }

    #[test]
    fn loop_layout() {
        let pts = [p(0.0, 0.0), p(100.0, 0.0), p(50.0, 80.0)];
        let c = loop_cover(&pts, 5.0, 3.0).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.hit_index(pts[1]), Hit::Node(1));
        // midpoint of segment 1 -> 2
        assert_eq!(c.hit_index(p(75.0, 40.0)), Hit::Node(3 + 1));
        // closing segment 2 -> 0
        assert_eq!(c.hit_index(p(25.0, 40.0)), Hit::Node(3 + 2));

        let two = loop_cover(&[p(0.0, 0.0), p(10.0, 0.0)], 2.0, 1.0).unwrap();
        assert_eq!(two.len(), 4);
        assert_eq!(loop_cover(&[p(0.0, 0.0)], 2.0, 1.0), Err(GeometryError::TooFewPoints));
    }

    #[test]
    fn annulus_counts_and_regions() {
        let c = annulus_cover(p(0.0, 0.0), 40.0, 20.0, 5.0).unwrap();
        assert_eq!(border_node_count(40.0, 5.0), 51);
        assert_eq!(border_node_count(20.0, 5.0), 26);
        assert_eq!(c.len(), 128);
        assert!(matches!(c.hit_index(p(40.0, 0.0)), Hit::Node(i) if i < 51));
        assert!(matches!(c.hit_index(p(30.0, 0.0)), Hit::Node(i) if i >= 77));
        assert_eq!(c.hit_index(p(0.0, 0.0)), Hit::Miss);
        assert_eq!(annulus_cover(p(0.0, 0.0), 24.0, 20.0, 5.0), Err(GeometryError::BadRadii));
        assert_eq!(annulus_cover(p(0.0, 0.0), 40.0, 4.0, 5.0), Err(GeometryError::BadRadii));
    }

    #[test]
    fn regular_apex_positions() {
        let sq = regular_apexes(4, p(0.0, 0.0), 10.0, 0.0).unwrap();
        let want = [p(10.0, 0.0), p(0.0, 10.0), p(-10.0, 0.0), p(0.0, -10.0)];
        for (a, b) in sq.iter().zip(want) {
            assert!(a.distance(b) < 1e-12);
        }
        let r3 = 3.0_f64.sqrt();
        let hex = regular_apexes(6, p(0.0, 0.0), 2.0, 0.0).unwrap();
        let want = [p(2.0, 0.0), p(1.0, r3), p(-1.0, r3), p(-2.0, 0.0), p(-1.0, -r3), p(1.0, -r3)];
        for (a, b) in hex.iter().zip(want) {
            assert!(a.distance(b) < 1e-12);
        }
        assert_eq!(regular_apexes(2, p(0.0, 0.0), 2.0, 0.0), Err(GeometryError::BadCount));
    }

    #[test]
    fn transparent_first_hit_falls_through() {
        let mut c = Cover::new();
        c.push_transparent(NodeShape::Circle { center: p(0.0, 0.0), radius: 5.0 });
        c.push(NodeShape::rect(Rect::new(-10.0, -10.0, 20.0, 20.0)), MovementType::Any, CursorTag::SizeAll);
        assert_eq!(c.hit_index(p(1.0, 1.0)), Hit::FallThrough(0));
        assert_eq!(c.hit_index(p(9.0, 9.0)), Hit::Node(1));
    }

    #[test]
    fn ids_checked() {
        let n = CoverNode::circle(3, p(0.0, 0.0), 1.0, MovementType::Any, CursorTag::Hand);
        assert_eq!(Cover::from_nodes(vec![n]), Err(GeometryError::NodeIdMismatch { expected: 0, found: 3 }));
    }

    #[test]
    fn works_in_single_precision() {
        let c = rectangle_cover(Rect::new(0.0f32, 0.0, 100.0, 60.0), Resizing::Any, 8.0, 3.0).unwrap();
        assert_eq!(c.hit_index(Point::new(0.0f32, 0.0)), Hit::Node(0));
        assert_eq!(c.hit_index(Point::new(50.0f32, 30.0)), Hit::Node(8));
    }
}
