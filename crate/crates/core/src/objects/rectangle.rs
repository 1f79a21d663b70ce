use crate::cover::{check_rect_dims, framed_rect_nodes, Cover, GeometryError, Resizing};
use crate::geometry::Rect;
use crate::objects::{
    bad_index, rect_role, resize_rect, ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError, RectRole,
};
use crate::Scalar;

/// Axis-aligned rectangle resizable according to [`Resizing`].
#[derive(Debug, Clone, PartialEq)]
pub struct RectangleObject<S> {
    rect: Rect<S>,
    resizing: Resizing,
    corner_radius: S,
    half_width: S,
    min_w: S,
    min_h: S,
    fill: String,
    range: MoveRange<S>,
    cover: Cover<S>,
}

impl<S: Scalar> RectangleObject<S> {
    pub fn new(rect: Rect<S>, resizing: Resizing, corner_radius: S, half_width: S) -> Result<Self, ObjectError> {
        let ten = S::lit(10.0);
        let min = (ten.max(half_width * S::two() + S::one()), ten.max(half_width * S::two() + S::one()));
        Self::with_min_size(rect, resizing, corner_radius, half_width, min)
    }

    pub fn with_min_size(
        rect: Rect<S>,
        resizing: Resizing,
        corner_radius: S,
        half_width: S,
        (min_w, min_h): (S, S),
    ) -> Result<Self, ObjectError> {
        check_rect_dims(&rect, corner_radius, half_width)?;
        let floor = half_width * S::two();
        if !(min_w > floor && min_h > floor) {
            return Err(GeometryError::BadDimensions("minimum size must exceed the side nodes").into());
        }
        if rect.w < min_w || rect.h < min_h {
            return Err(GeometryError::BadDimensions("rectangle below its minimum size").into());
        }
        let mut obj = Self {
            rect,
            resizing,
            corner_radius,
            half_width,
            min_w,
            min_h,
            fill: String::from("none"),
            range: MoveRange::unbounded(),
            cover: Cover::new(),
        };
        obj.rebuild();
        Ok(obj)
    }

    pub fn with_fill(mut self, fill: impl Into<String>) -> Self {
        self.fill = fill.into();
        self
    }

    pub fn with_range(mut self, range: MoveRange<S>) -> Self {
        self.range = range;
        self
    }

    pub fn rect(&self) -> Rect<S> {
        self.rect
    }
    pub fn resizing(&self) -> Resizing {
        self.resizing
    }
    pub fn corner_radius(&self) -> S {
        self.corner_radius
    }
    pub fn half_width(&self) -> S {
        self.half_width
    }
    pub fn min_size(&self) -> (S, S) {
        (self.min_w, self.min_h)
    }
    pub fn fill(&self) -> &str {
        &self.fill
    }

    fn rebuild(&mut self) {
        self.cover = self.define_cover();
    }

    fn role(&self, index: usize) -> Result<RectRole, ObjectError> {
        rect_role(self.resizing.sides(), index).ok_or_else(|| bad_index(index, self.cover.len()))
    }
}

impl<S: Scalar> Moveable<S> for RectangleObject<S> {
    fn define_cover(&self) -> Cover<S> {
        framed_rect_nodes(&self.rect, self.resizing.sides(), self.corner_radius, self.half_width)
    }

    fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        self.rect = self.rect.translated(dx, dy);
        self.rebuild();
    }

    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        let role = self.role(drag.node)?;
        let next = resize_rect(self.rect, role, drag.dx, drag.dy, (self.min_w, self.min_h));
        if next == self.rect {
            return Ok(false);
        }
        self.rect = next;
        self.rebuild();
        Ok(true)
    }

    fn range(&self) -> MoveRange<S> {
        self.range
    }

    fn is_translation(&self, node: usize, _button: ButtonTag) -> bool {
        matches!(self.role(node), Ok(RectRole::Body))
    }
}
