//! The moveable-object contract and the concrete graphical shapes.
//!
//! Every object owns its geometry plus a cover derived from it. The cover is
//! rebuilt after each mutation, so [`Moveable::cover`] always equals
//! [`Moveable::define_cover`] on the current state.

mod chatoyant;
mod closed_loop;
mod rectangle;
mod regular;
mod ring;

pub use chatoyant::ChatoyantPolygonObject;
pub use closed_loop::LoopObject;
pub use rectangle::RectangleObject;
pub use regular::{PolygonVariant, RegularPolygonObject};
pub use ring::RingObject;

use thiserror::Error;

use crate::cover::{Corner, Cover, GeometryError, Side, SideMask};
use crate::geometry::{Point, Rect};
use crate::Scalar;

/// Logical role of the pressed button: `Left` starts forward movement,
/// `Right` starts rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ButtonTag {
    #[default]
    Left,
    Right,
}

/// Optional rectangle that must keep containing an object's reference point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MoveRange<S>(pub Option<Rect<S>>);

impl<S: Scalar> MoveRange<S> {
    pub fn unbounded() -> Self {
        Self(None)
    }

    pub fn within(rect: Rect<S>) -> Result<Self, ObjectError> {
        if rect.w < S::zero() || rect.h < S::zero() {
            return Err(ObjectError::Geometry(GeometryError::BadDimensions("negative range size")));
        }
        Ok(Self(Some(rect)))
    }

    /// Clamps a translation of `reference` by `(dx, dy)` so the result stays in
    /// range. A reference point already outside may stay put or move inwards.
    pub fn clamp(&self, reference: Point<S>, dx: S, dy: S) -> (S, S) {
        let Some(r) = self.0 else { return (dx, dy) };
        let axis = |v: S, d: S, lo: S, hi: S| {
            let (min, max) = (lo - v, hi - v);
            d.clamp_to(min.min(S::zero()), max.max(S::zero()))
        };
        (axis(reference.x, dx, r.left(), r.right()), axis(reference.y, dy, r.top(), r.bottom()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ObjectError {
    #[error("node index {index} out of range for this cover ({len} nodes)")]
    BadNodeIndex { index: usize, len: usize },
    #[error("object is not resizable")]
    NotResizable,
    #[error("object is not moveable by its frame")]
    NotMoveable,
    #[error("zoom anchor coincides with the center")]
    ZeroScale,
    #[error("rotation pointer coincides with the pivot")]
    PivotSingular,
    #[error("no such part in the assembly")]
    BadTarget,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Everything an object needs to react to one pointer step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeDrag<S> {
    pub node: usize,
    /// Displacement since the anchor, already masked by the node's movement type.
    pub dx: S,
    pub dy: S,
    /// Current pointer position.
    pub mouse: Point<S>,
    /// Pointer position of the last accepted step (the grab point initially).
    pub anchor: Point<S>,
    pub button: ButtonTag,
}

impl<S: Scalar> NodeDrag<S> {
    pub fn new(node: usize, dx: S, dy: S, mouse: Point<S>, button: ButtonTag) -> Self {
        Self { node, dx, dy, mouse, anchor: mouse.translated(-dx, -dy), button }
    }

    pub fn is_zero(&self) -> bool {
        self.dx == S::zero() && self.dy == S::zero()
    }
}

/// Contract of every object the mover can drive.
pub trait Moveable<S: Scalar> {
    /// Cover for the current geometry.
    fn define_cover(&self) -> Cover<S>;

    /// The stored cover; always equal to `define_cover()`.
    fn cover(&self) -> &Cover<S>;

    /// Forward movement of the whole object.
    fn translate(&mut self, dx: S, dy: S);

    /// Individual movement of one node. `Ok(true)` iff the geometry changed.
    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError>;

    fn range(&self) -> MoveRange<S> {
        MoveRange::unbounded()
    }

    /// Whether dragging `node` with `button` moves the whole object (and so is
    /// subject to range clamping).
    fn is_translation(&self, node: usize, button: ButtonTag) -> bool;

    fn begin_drag(&mut self) {}

    fn end_drag(&mut self) {}
}

/// Objects that turn with a right-button drag.
pub trait Rotatable<S: Scalar> {
    /// Rotation about `pivot` by the angle swept from `prev` to `mouse`.
    fn rotate_about(&mut self, pivot: Point<S>, prev: Point<S>, mouse: Point<S>) -> Result<(), ObjectError>;
}

/// Swept angle from `prev` to `mouse` around `pivot`.
pub fn swept_angle<S: Scalar>(pivot: Point<S>, prev: Point<S>, mouse: Point<S>) -> Result<S, ObjectError> {
    let eps = S::lit(1e-9);
    let a = prev - pivot;
    let b = mouse - pivot;
    if a.length() <= eps || b.length() <= eps {
        return Err(ObjectError::PivotSingular);
    }
    Ok(b.angle() - a.angle())
}

/// Role of a node in a framed-rectangle layout (corners, sides, body).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RectRole {
    Corner(Corner),
    Side(Side),
    Body,
}

pub(crate) fn rect_role(sides: SideMask, index: usize) -> Option<RectRole> {
    let corners: Vec<Corner> = sides.corners().collect();
    let edges: Vec<Side> = sides.enabled().collect();
    if index < corners.len() {
        return Some(RectRole::Corner(corners[index]));
    }
    let index = index - corners.len();
    if index < edges.len() {
        return Some(RectRole::Side(edges[index]));
    }
    (index == edges.len()).then_some(RectRole::Body)
}

/// Moves one edge by `delta`, keeping the extent across it at least `min`.
pub(crate) fn move_side<S: Scalar>(rect: Rect<S>, side: Side, delta: S, min: S) -> Rect<S> {
    let mut r = rect;
    // never shrink below `min`, and never shrink at all once already below it
    match side {
        Side::Left => {
            let w = (r.w - delta).max(min.min(r.w));
            r.x += r.w - w;
            r.w = w;
        }
        Side::Right => r.w = (r.w + delta).max(min.min(r.w)),
        Side::Top => {
            let h = (r.h - delta).max(min.min(r.h));
            r.y += r.h - h;
            r.h = h;
        }
        Side::Bottom => r.h = (r.h + delta).max(min.min(r.h)),
    }
    r
}

/// Resizes through a corner or side; `min` is `(width, height)`.
pub(crate) fn resize_rect<S: Scalar>(rect: Rect<S>, role: RectRole, dx: S, dy: S, min: (S, S)) -> Rect<S> {
    let along = |r: Rect<S>, side: Side| match side {
        Side::Top | Side::Bottom => move_side(r, side, dy, min.1),
        Side::Left | Side::Right => move_side(r, side, dx, min.0),
    };
    match role {
        RectRole::Corner(c) => {
            let (h, v) = c.sides();
            along(along(rect, h), v)
        }
        RectRole::Side(s) => along(rect, s),
        RectRole::Body => rect.translated(dx, dy),
    }
}

pub(crate) fn bad_index(index: usize, len: usize) -> ObjectError {
    ObjectError::BadNodeIndex { index, len }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_clamps_translation() {
        let range = MoveRange::within(Rect::new(0.0, 0.0, 100.0, 100.0)).unwrap();
        assert_eq!(range.clamp(Point::new(90.0, 50.0), 20.0, -5.0), (10.0, -5.0));
        assert_eq!(range.clamp(Point::new(10.0, 10.0), -30.0, -30.0), (-10.0, -10.0));
        // outside already: may move inwards, never further out
        assert_eq!(range.clamp(Point::new(150.0, 50.0), 10.0, 0.0), (0.0, 0.0));
        assert_eq!(range.clamp(Point::new(150.0, 50.0), -10.0, 0.0), (-10.0, 0.0));
        assert_eq!(MoveRange::<f64>::unbounded().clamp(Point::origin(), 7.0, 8.0), (7.0, 8.0));
        assert!(MoveRange::within(Rect::new(0.0, 0.0, -1.0, 1.0)).is_err());
    }

    #[test]
    fn side_moves_respect_minimum() {
        let r = Rect::new(0.0, 0.0, 100.0, 60.0);
        assert_eq!(move_side(r, Side::Left, 95.0, 20.0), Rect::new(80.0, 0.0, 20.0, 60.0));
        assert_eq!(move_side(r, Side::Right, -95.0, 20.0), Rect::new(0.0, 0.0, 20.0, 60.0));
        assert_eq!(move_side(r, Side::Top, -10.0, 20.0), Rect::new(0.0, -10.0, 100.0, 70.0));
        assert_eq!(move_side(r, Side::Bottom, 5.0, 20.0), Rect::new(0.0, 0.0, 100.0, 65.0));
    }

    #[test]
    fn roles_follow_layout() {
        assert_eq!(rect_role(SideMask::ALL, 0), Some(RectRole::Corner(Corner::TopLeft)));
        assert_eq!(rect_role(SideMask::ALL, 7), Some(RectRole::Side(Side::Right)));
        assert_eq!(rect_role(SideMask::ALL, 8), Some(RectRole::Body));
        assert_eq!(rect_role(SideMask::ALL, 9), None);
        let we = crate::cover::Resizing::WE.sides();
        assert_eq!(rect_role(we, 0), Some(RectRole::Side(Side::Left)));
        assert_eq!(rect_role(we, 2), Some(RectRole::Body));
        assert_eq!(rect_role(SideMask::NONE, 0), Some(RectRole::Body));
    }

    #[test]
    fn swept_angle_quarter() {
        let a = swept_angle(Point::origin(), Point::new(10.0, 0.0), Point::new(0.0, 5.0)).unwrap();
        assert!((a - core::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert_eq!(
            swept_angle(Point::origin(), Point::origin(), Point::new(0.0, 5.0)),
            Err(ObjectError::PivotSingular)
        );
    }
}
