//! Control frames and moveable groups.
//!
//! Controls own their inner area, so a [`ControlProxy`] is grabbed only by a
//! frame around the control's bounds. A [`GroupObject`] is a titled frame
//! that carries child controls at fractional anchors.

use crate::cover::{
    check_rect_dims, framed_rect_nodes, Corner, Cover, CursorTag, GeometryError, MovementType, NodeShape, Resizing,
    Side, SideMask,
};
use crate::geometry::{Point, Rect};
use crate::objects::{
    bad_index, rect_role, resize_rect, ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError, RectRole,
};
use crate::Scalar;

/// Gap kept between a corner circle and a mid-side node.
const MID_NODE_CLEARANCE: f64 = 4.0;
const MID_NODE_MIN_LENGTH: f64 = 16.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ControlRole {
    Corner(Corner),
    Mid(Side),
    Frame,
}

/// Frame wrapped around a host control.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlProxy<S> {
    control_id: String,
    bounds: Rect<S>,
    resizing: Resizing,
    moveable: bool,
    frame_width: S,
    corner_radius: S,
    min_w: S,
    min_h: S,
    range: MoveRange<S>,
    cover: Cover<S>,
}

impl<S: Scalar> ControlProxy<S> {
    pub fn new(
        control_id: impl Into<String>,
        bounds: Rect<S>,
        resizing: Resizing,
        moveable: bool,
        frame_width: S,
        corner_radius: S,
    ) -> Result<Self, ObjectError> {
        let floor = (corner_radius + S::lit(MID_NODE_CLEARANCE)) * S::two() + S::one();
        let min = floor.max(S::lit(MID_NODE_MIN_LENGTH));
        Self::with_min_size(control_id, bounds, resizing, moveable, frame_width, corner_radius, (min, min))
    }

    pub fn with_min_size(
        control_id: impl Into<String>,
        bounds: Rect<S>,
        resizing: Resizing,
        moveable: bool,
        frame_width: S,
        corner_radius: S,
        (min_w, min_h): (S, S),
    ) -> Result<Self, ObjectError> {
        if !(frame_width > S::zero()) || corner_radius < frame_width * S::half() {
            return Err(GeometryError::BadDimensions("frame width and corner radius").into());
        }
        let sides = resizing.sides();
        // a side carrying a mid node must leave room beside the corner circles
        let floor = (corner_radius + S::lit(MID_NODE_CLEARANCE)) * S::two();
        if ((sides.top || sides.bottom) && !(min_w > floor)) || ((sides.left || sides.right) && !(min_h > floor)) {
            return Err(GeometryError::BadDimensions("minimum size too small for mid-side nodes").into());
        }
        if bounds.w < min_w || bounds.h < min_h || !(min_w > S::zero() && min_h > S::zero()) {
            return Err(GeometryError::BadDimensions("control below its minimum size").into());
        }
        let mut obj = Self {
            control_id: control_id.into(),
            bounds,
            resizing,
            moveable,
            frame_width,
            corner_radius,
            min_w,
            min_h,
            range: MoveRange::unbounded(),
            cover: Cover::new(),
        };
        obj.cover = obj.define_cover();
        Ok(obj)
    }

    pub fn with_range(mut self, range: MoveRange<S>) -> Self {
        self.range = range;
        self
    }

    pub fn control_id(&self) -> &str {
        &self.control_id
    }
    /// Current bounds; hosts reposition the real control from this.
    pub fn bounds(&self) -> Rect<S> {
        self.bounds
    }
    pub fn resizing(&self) -> Resizing {
        self.resizing
    }
    pub fn is_moveable(&self) -> bool {
        self.moveable
    }
    pub fn frame_width(&self) -> S {
        self.frame_width
    }
    pub fn corner_radius(&self) -> S {
        self.corner_radius
    }
    pub fn min_size(&self) -> (S, S) {
        (self.min_w, self.min_h)
    }

    fn roles(&self) -> Vec<ControlRole> {
        let mut roles = Vec::new();
        if self.resizing != Resizing::None {
            roles.extend(Corner::ALL.iter().map(|c| ControlRole::Corner(*c)));
        }
        roles.extend(self.resizing.sides().enabled().map(ControlRole::Mid));
        if self.moveable {
            roles.extend([ControlRole::Frame; 4]);
        }
        roles
    }

    fn mid_length(&self, side_length: S) -> S {
        let hi = side_length - (self.corner_radius + S::lit(MID_NODE_CLEARANCE)) * S::two();
        (side_length / S::lit(3.0)).max(S::lit(MID_NODE_MIN_LENGTH)).min(hi)
    }

    fn corner_cursor(&self, corner: Corner) -> CursorTag {
        match self.resizing {
            Resizing::NS => CursorTag::SizeNS,
            Resizing::WE => CursorTag::SizeWE,
            _ => corner.cursor(),
        }
    }
}

impl<S: Scalar> Moveable<S> for ControlProxy<S> {
    /// Corner circles (whenever resizable), mid-side nodes on the resizable
    /// sides, then four frame strips when the control is moveable. No node
    /// reaches into the control's interior.
    fn define_cover(&self) -> Cover<S> {
        let b = self.bounds;
        let fw = self.frame_width;
        let cr = self.corner_radius;
        let out = cr / S::SQRT_2();
        let mut cover = Cover::new();
        if self.resizing != Resizing::None {
            for corner in Corner::ALL {
                let (sx, sy) = match corner {
                    Corner::TopLeft => (-out, -out),
                    Corner::TopRight => (out, -out),
                    Corner::BottomRight => (out, out),
                    Corner::BottomLeft => (-out, out),
                };
                cover.push(
                    NodeShape::Circle { center: corner.of(&b).translated(sx, sy), radius: cr },
                    self.resizing.movement(),
                    self.corner_cursor(corner),
                );
            }
        }
        let c = b.center();
        for side in self.resizing.sides().enabled() {
            let r = match side {
                Side::Top | Side::Bottom => {
                    let len = self.mid_length(b.w);
                    let y = if side == Side::Top { b.top() - fw } else { b.bottom() };
                    Rect::new(c.x - len * S::half(), y, len, fw)
                }
                Side::Left | Side::Right => {
                    let len = self.mid_length(b.h);
                    let x = if side == Side::Left { b.left() - fw } else { b.right() };
                    Rect::new(x, c.y - len * S::half(), fw, len)
                }
            };
            cover.push(NodeShape::rect(r), side.movement(), side.cursor());
        }
        if self.moveable {
            let wide = b.w + fw * S::two();
            for r in [
                Rect::new(b.left() - fw, b.top() - fw, wide, fw),
                Rect::new(b.left() - fw, b.bottom(), wide, fw),
                Rect::new(b.left() - fw, b.top(), fw, b.h),
                Rect::new(b.right(), b.top(), fw, b.h),
            ] {
                cover.push(NodeShape::rect(r), MovementType::Any, CursorTag::SizeAll);
            }
        }
        cover
    }

    fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        self.bounds = self.bounds.translated(dx, dy);
        self.cover = self.define_cover();
    }

    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        let roles = self.roles();
        let role = *roles.get(drag.node).ok_or_else(|| bad_index(drag.node, roles.len()))?;
        let (dx, dy) = self.resizing.movement().mask(drag.dx, drag.dy);
        let next = match role {
            ControlRole::Frame if !self.moveable => return Err(ObjectError::NotMoveable),
            ControlRole::Frame => self.bounds.translated(drag.dx, drag.dy),
            ControlRole::Corner(c) => resize_rect(self.bounds, RectRole::Corner(c), dx, dy, (self.min_w, self.min_h)),
            ControlRole::Mid(s) => resize_rect(self.bounds, RectRole::Side(s), dx, dy, (self.min_w, self.min_h)),
        };
        if next == self.bounds {
            return Ok(false);
        }
        self.bounds = next;
        self.cover = self.define_cover();
        Ok(true)
    }

    fn range(&self) -> MoveRange<S> {
        self.range
    }

    fn is_translation(&self, node: usize, _button: ButtonTag) -> bool {
        matches!(self.roles().get(node), Some(ControlRole::Frame))
    }
}

/// Free-function form of [`ControlProxy::define_cover`].
pub fn control_frame_cover<S: Scalar>(proxy: &ControlProxy<S>) -> Cover<S> {
    proxy.define_cover()
}

/// A control held by a group at a fractional anchor of the frame.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupChild<S> {
    pub control_id: String,
    /// Top-left of the child in fractional frame coordinates.
    pub anchor: Point<S>,
    pub w: S,
    pub h: S,
}

impl<S: Scalar> GroupChild<S> {
    pub fn new(control_id: impl Into<String>, anchor: Point<S>, w: S, h: S) -> Self {
        Self { control_id: control_id.into(), anchor, w, h }
    }

    pub fn rect_in(&self, frame: &Rect<S>) -> Rect<S> {
        let o = frame.from_fraction(self.anchor);
        Rect::new(o.x, o.y, self.w, self.h)
    }
}

/// New top-left of a child control, reported after a group moves or resizes.
#[derive(Debug, Clone, PartialEq)]
pub struct ChildUpdate<S> {
    pub control_id: String,
    pub origin: Point<S>,
}

/// Titled frame moved by any inner point and resized by its resizable sides.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupObject<S> {
    frame: Rect<S>,
    title: String,
    sides: SideMask,
    children: Vec<GroupChild<S>>,
    padding: S,
    corner_radius: S,
    half_width: S,
    range: MoveRange<S>,
    cover: Cover<S>,
}

impl<S: Scalar> GroupObject<S> {
    pub fn new(
        frame: Rect<S>,
        title: impl Into<String>,
        sides: SideMask,
        children: Vec<GroupChild<S>>,
        padding: S,
        corner_radius: S,
        half_width: S,
    ) -> Result<Self, ObjectError> {
        check_rect_dims(&frame, corner_radius, half_width)?;
        if !(padding >= S::zero()) {
            return Err(GeometryError::BadDimensions("negative padding").into());
        }
        let in_unit = |v: S| v >= S::zero() && v <= S::one();
        if children.iter().any(|c| !in_unit(c.anchor.x) || !in_unit(c.anchor.y) || c.w < S::zero() || c.h < S::zero()) {
            return Err(GeometryError::BadDimensions("child anchor outside the frame").into());
        }
        let obj = Self {
            frame,
            title: title.into(),
            sides,
            children,
            padding,
            corner_radius,
            half_width,
            range: MoveRange::unbounded(),
            cover: Cover::new(),
        };
        if !obj.contains_children(&frame, S::zero()) {
            return Err(GeometryError::BadDimensions("frame does not contain its children").into());
        }
        let mut obj = obj;
        obj.cover = obj.define_cover();
        Ok(obj)
    }

    pub fn with_range(mut self, range: MoveRange<S>) -> Self {
        self.range = range;
        self
    }

    pub fn frame(&self) -> Rect<S> {
        self.frame
    }
    pub fn title(&self) -> &str {
        &self.title
    }
    pub fn resizable_sides(&self) -> SideMask {
        self.sides
    }
    pub fn children(&self) -> &[GroupChild<S>] {
        &self.children
    }
    pub fn padding(&self) -> S {
        self.padding
    }
    pub fn corner_radius(&self) -> S {
        self.corner_radius
    }
    pub fn half_width(&self) -> S {
        self.half_width
    }

    pub fn child_rects(&self) -> Vec<Rect<S>> {
        self.children.iter().map(|c| c.rect_in(&self.frame)).collect()
    }

    /// Every child, grown by the padding, lies in `frame` (up to `tol`).
    pub fn contains_children(&self, frame: &Rect<S>, tol: S) -> bool {
        let p = self.padding;
        self.children.iter().all(|c| {
            let r = c.rect_in(frame);
            r.left() - p >= frame.left() - tol
                && r.top() - p >= frame.top() - tol
                && r.right() + p <= frame.right() + tol
                && r.bottom() + p <= frame.bottom() + tol
        })
    }

    /// Smallest frame extent along one axis that keeps children and padding inside.
    fn min_extent(&self, horizontal: bool) -> S {
        let p = self.padding;
        let mut min = self.half_width * S::two() + S::one();
        for c in &self.children {
            let (a, size) = if horizontal { (c.anchor.x, c.w) } else { (c.anchor.y, c.h) };
            if a > S::zero() {
                min = min.max(p / a);
            }
            if a < S::one() {
                min = min.max((size + p) / (S::one() - a));
            }
        }
        min
    }

    fn updates(&self) -> Vec<ChildUpdate<S>> {
        self.children
            .iter()
            .map(|c| ChildUpdate { control_id: c.control_id.clone(), origin: c.rect_in(&self.frame).origin() })
            .collect()
    }

    /// [`Moveable::move_node`] that also reports where each child went.
    pub fn move_node_reporting(&mut self, drag: &NodeDrag<S>) -> Result<(bool, Vec<ChildUpdate<S>>), ObjectError> {
        let role = rect_role(self.sides, drag.node).ok_or_else(|| bad_index(drag.node, self.cover.len()))?;
        let min = (self.min_extent(true), self.min_extent(false));
        let next = resize_rect(self.frame, role, drag.dx, drag.dy, min);
        if next == self.frame {
            return Ok((false, Vec::new()));
        }
        self.frame = next;
        self.cover = self.define_cover();
        Ok((true, self.updates()))
    }
}

impl<S: Scalar> Moveable<S> for GroupObject<S> {
    fn define_cover(&self) -> Cover<S> {
        framed_rect_nodes(&self.frame, self.sides, self.corner_radius, self.half_width)
    }

    fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        self.frame = self.frame.translated(dx, dy);
        self.cover = self.define_cover();
    }

    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        self.move_node_reporting(drag).map(|(moved, _)| moved)
    }

    fn range(&self) -> MoveRange<S> {
        self.range
    }

    fn is_translation(&self, node: usize, _button: ButtonTag) -> bool {
        matches!(rect_role(self.sides, node), Some(RectRole::Body))
    }
}

/// Free-function form of [`GroupObject::define_cover`].
pub fn group_cover<S: Scalar>(group: &GroupObject<S>) -> Cover<S> {
    group.define_cover()
}
