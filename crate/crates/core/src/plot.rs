//! Plot area with scales and comments that move as one assembly.

use crate::cover::{Cover, CursorTag, GeometryError, MovementType, NodeShape, Resizing};
use crate::geometry::{Point, Rect};
use crate::objects::{swept_angle, ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError, RectangleObject};
use crate::Scalar;

/// Allowed disagreement between a restored comment's center and its anchor.
const ANCHOR_TOLERANCE: f64 = 1e-4;

/// Frame a comment is anchored to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommentParent {
    Area,
    Scale(usize),
}

/// Rotatable text label; its cover is one rotated rectangle.
#[derive(Debug, Clone, PartialEq)]
pub struct CommentObject<S> {
    text: String,
    center: Point<S>,
    angle: S,
    w: S,
    h: S,
    parent: CommentParent,
    /// Center in fractional coordinates of the parent frame.
    anchor: Point<S>,
    cover: Cover<S>,
}

impl<S: Scalar> CommentObject<S> {
    /// Comment at `anchor` of `parent_frame`.
    pub fn new(
        text: impl Into<String>,
        parent: CommentParent,
        parent_frame: &Rect<S>,
        anchor: Point<S>,
        (w, h): (S, S),
        angle: S,
    ) -> Result<Self, ObjectError> {
        if !(w > S::zero() && h > S::zero()) || !anchor.is_finite() || !angle.is_finite() {
            return Err(GeometryError::BadDimensions("comment extent").into());
        }
        let mut c = Self {
            text: text.into(),
            center: parent_frame.from_fraction(anchor),
            angle,
            w,
            h,
            parent,
            anchor,
            cover: Cover::new(),
        };
        c.cover = c.define_cover();
        Ok(c)
    }

    /// Comment restored with an explicit center; no anchor arithmetic.
    pub fn restore(
        text: impl Into<String>,
        parent: CommentParent,
        center: Point<S>,
        anchor: Point<S>,
        (w, h): (S, S),
        angle: S,
    ) -> Result<Self, ObjectError> {
        let mut c =
            Self::new(text, parent, &Rect::new(S::zero(), S::zero(), S::zero(), S::zero()), anchor, (w, h), angle)?;
        if !center.is_finite() {
            return Err(GeometryError::BadDimensions("comment center").into());
        }
        c.center = center;
        c.cover = c.define_cover();
        Ok(c)
    }

    pub fn text(&self) -> &str {
        &self.text
    }
    pub fn center(&self) -> Point<S> {
        self.center
    }
    pub fn angle(&self) -> S {
        self.angle
    }
    pub fn extent(&self) -> (S, S) {
        (self.w, self.h)
    }
    pub fn parent(&self) -> CommentParent {
        self.parent
    }
    pub fn anchor(&self) -> Point<S> {
        self.anchor
    }

    /// Corners of the rotated rectangle.
    pub fn corners(&self) -> [Point<S>; 4] {
        let (hw, hh) = (self.w * S::half(), self.h * S::half());
        let c = self.center;
        [(-hw, -hh), (hw, -hh), (hw, hh), (-hw, hh)].map(|(x, y)| c.translated(x, y).rotated_about(c, self.angle))
    }

    fn define_cover(&self) -> Cover<S> {
        let mut cover = Cover::new();
        cover.push(NodeShape::convex_polygon(self.corners().to_vec()), MovementType::Any, CursorTag::SizeAll);
        cover
    }

    pub fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        self.center = self.center.translated(dx, dy);
        self.cover = self.define_cover();
    }

    fn place(&mut self, frame: &Rect<S>) {
        self.center = frame.from_fraction(self.anchor);
        self.cover = self.define_cover();
    }

    /// Turns about the comment's own center.
    pub fn rotate(&mut self, prev: Point<S>, mouse: Point<S>) -> Result<(), ObjectError> {
        self.angle += swept_angle(self.center, prev, mouse)?;
        self.cover = self.define_cover();
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Scale strip glued to one side of the plot area.
///
/// A horizontal scale spans the area's width and sits `area_offset` below
/// the area's bottom edge; a vertical one spans its height at `area_offset`
/// from the area's left edge. Users move scales only across their length.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleObject<S> {
    rect: Rect<S>,
    orientation: Orientation,
    area_offset: S,
    cover: Cover<S>,
}

impl<S: Scalar> ScaleObject<S> {
    pub fn new(area: &Rect<S>, orientation: Orientation, area_offset: S, thickness: S) -> Result<Self, ObjectError> {
        if !(thickness > S::zero()) || !area_offset.is_finite() {
            return Err(GeometryError::BadDimensions("scale thickness").into());
        }
        let mut s = Self {
            rect: Rect::new(S::zero(), S::zero(), thickness, thickness),
            orientation,
            area_offset,
            cover: Cover::new(),
        };
        s.fit(area);
        Ok(s)
    }

    /// Scale restored with an explicit rectangle.
    pub fn restore(rect: Rect<S>, orientation: Orientation, area_offset: S) -> Result<Self, ObjectError> {
        if !(rect.w > S::zero() && rect.h > S::zero()) || !area_offset.is_finite() {
            return Err(GeometryError::BadDimensions("scale rectangle").into());
        }
        Ok(Self { rect, orientation, area_offset, cover: Cover::new() })
    }

    pub fn rect(&self) -> Rect<S> {
        self.rect
    }
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }
    pub fn area_offset(&self) -> S {
        self.area_offset
    }
    pub fn thickness(&self) -> S {
        match self.orientation {
            Orientation::Horizontal => self.rect.h,
            Orientation::Vertical => self.rect.w,
        }
    }
    pub fn length(&self) -> S {
        match self.orientation {
            Orientation::Horizontal => self.rect.w,
            Orientation::Vertical => self.rect.h,
        }
    }

    fn movement(&self) -> MovementType {
        match self.orientation {
            Orientation::Horizontal => MovementType::NS,
            Orientation::Vertical => MovementType::WE,
        }
    }

    /// Matches the area side and restores the stored offset.
    fn fit(&mut self, area: &Rect<S>) {
        let t = self.thickness();
        self.rect = match self.orientation {
            Orientation::Horizontal => Rect::new(area.x, area.bottom() + self.area_offset, area.w, t),
            Orientation::Vertical => Rect::new(area.x + self.area_offset, area.y, t, area.h),
        };
    }

    fn define_cover(&self, area: &RectangleObject<S>) -> Cover<S> {
        let mut cover = Cover::new();
        let radius = area.corner_radius();
        let r = self.rect;
        for corner in area.rect().corners() {
            let near = Point::new(corner.x.clamp_to(r.left(), r.right()), corner.y.clamp_to(r.top(), r.bottom()));
            if (near - corner).length() <= radius {
                cover.push_transparent(NodeShape::Circle { center: corner, radius });
            }
        }
        cover.push(NodeShape::rect(self.rect), self.movement(), CursorTag::SizeAll);
        cover
    }

    pub fn cover(&self) -> &Cover<S> {
        &self.cover
    }
}

/// Free-function form of the scale cover: windows for area corners it overlaps, then the body.
pub fn scale_cover<S: Scalar>(scale: &ScaleObject<S>, area: &RectangleObject<S>) -> Cover<S> {
    scale.define_cover(area)
}

/// One independently registered part of an assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlotPart {
    Area,
    Scale(usize),
    Comment(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotAssembly<S> {
    area: RectangleObject<S>,
    scales: Vec<ScaleObject<S>>,
    comments: Vec<CommentObject<S>>,
}

impl<S: Scalar> PlotAssembly<S> {
    pub fn new(
        area: RectangleObject<S>,
        scales: Vec<ScaleObject<S>>,
        comments: Vec<CommentObject<S>>,
    ) -> Result<Self, ObjectError> {
        if area.resizing() != Resizing::Any {
            return Err(GeometryError::BadDimensions("plot area must be resizable in both directions").into());
        }
        for c in &comments {
            if let CommentParent::Scale(i) = c.parent {
                if i >= scales.len() {
                    return Err(ObjectError::BadTarget);
                }
            }
        }
        let mut plot = Self { area, scales, comments };
        let frame = plot.area.rect();
        for i in 0..plot.scales.len() {
            plot.scales[i].fit(&frame);
            plot.rebuild_scale(i);
        }
        for c in &plot.comments {
            let parent = plot.parent_frame(c.parent).ok_or(ObjectError::BadTarget)?;
            let back = parent.to_fraction(c.center);
            let tol = S::lit(ANCHOR_TOLERANCE);
            if !((back.x - c.anchor.x).abs() <= tol && (back.y - c.anchor.y).abs() <= tol) {
                return Err(GeometryError::BadDimensions("comment center disagrees with its anchor").into());
            }
        }
        Ok(plot)
    }

    pub fn area(&self) -> &RectangleObject<S> {
        &self.area
    }
    pub fn scales(&self) -> &[ScaleObject<S>] {
        &self.scales
    }
    pub fn comments(&self) -> &[CommentObject<S>] {
        &self.comments
    }

    /// Indexes of the comments attached to scale `i`.
    pub fn scale_comments(&self, i: usize) -> Vec<usize> {
        (0..self.comments.len()).filter(|&c| self.comments[c].parent == CommentParent::Scale(i)).collect()
    }

    pub fn parent_frame(&self, parent: CommentParent) -> Option<Rect<S>> {
        match parent {
            CommentParent::Area => Some(self.area.rect()),
            CommentParent::Scale(i) => self.scales.get(i).map(|s| s.rect),
        }
    }

    /// Registration order: comments, scales, then the area.
    pub fn parts(&self) -> Vec<PlotPart> {
        let comments = (0..self.comments.len()).map(PlotPart::Comment);
        let scales = (0..self.scales.len()).map(PlotPart::Scale);
        comments.chain(scales).chain([PlotPart::Area]).collect()
    }

    pub fn has_part(&self, part: PlotPart) -> bool {
        match part {
            PlotPart::Area => true,
            PlotPart::Scale(i) => i < self.scales.len(),
            PlotPart::Comment(i) => i < self.comments.len(),
        }
    }

    pub fn part_cover(&self, part: PlotPart) -> Option<&Cover<S>> {
        match part {
            PlotPart::Area => Some(self.area.cover()),
            PlotPart::Scale(i) => self.scales.get(i).map(|s| &s.cover),
            PlotPart::Comment(i) => self.comments.get(i).map(|c| &c.cover),
        }
    }

    pub fn range(&self) -> MoveRange<S> {
        self.area.range()
    }

    pub fn part_is_translation(&self, part: PlotPart, node: usize, button: ButtonTag) -> bool {
        match part {
            PlotPart::Area => self.area.is_translation(node, button),
            PlotPart::Scale(i) => self.scales.get(i).is_some_and(|s| node + 1 == s.cover.len()),
            PlotPart::Comment(i) => i < self.comments.len() && node == 0 && button == ButtonTag::Left,
        }
    }

    fn rebuild_scale(&mut self, i: usize) {
        self.scales[i].cover = self.scales[i].define_cover(&self.area);
    }

    /// Translates every part rigidly.
    pub fn translate(&mut self, dx: S, dy: S) {
        self.area.translate(dx, dy);
        for i in 0..self.scales.len() {
            self.scales[i].rect = self.scales[i].rect.translated(dx, dy);
            self.rebuild_scale(i);
        }
        for c in &mut self.comments {
            c.translate(dx, dy);
        }
    }

    /// Moves one node of one part and propagates to the related parts.
    /// Returns every part whose geometry changed; empty when nothing moved.
    pub fn move_part(&mut self, part: PlotPart, drag: &NodeDrag<S>) -> Result<Vec<PlotPart>, ObjectError> {
        if !self.has_part(part) {
            return Err(ObjectError::BadTarget);
        }
        let len = self.part_cover(part).map_or(0, Cover::len);
        if drag.node >= len {
            return Err(ObjectError::BadNodeIndex { index: drag.node, len });
        }
        match part {
            PlotPart::Area if self.area.is_translation(drag.node, drag.button) => {
                if drag.is_zero() {
                    return Ok(Vec::new());
                }
                self.translate(drag.dx, drag.dy);
                Ok(self.parts())
            }
            PlotPart::Area => {
                if !self.area.move_node(drag)? {
                    return Ok(Vec::new());
                }
                let area = self.area.rect();
                for i in 0..self.scales.len() {
                    self.scales[i].fit(&area);
                    self.rebuild_scale(i);
                }
                for c in 0..self.comments.len() {
                    let frame = self.parent_frame(self.comments[c].parent).ok_or(ObjectError::BadTarget)?;
                    self.comments[c].place(&frame);
                }
                Ok(self.parts())
            }
            PlotPart::Scale(i) => {
                if drag.node + 1 != len {
                    // windows never take a drag
                    return Ok(Vec::new());
                }
                let (dx, dy) = self.scales[i].movement().mask(drag.dx, drag.dy);
                if dx == S::zero() && dy == S::zero() {
                    return Ok(Vec::new());
                }
                let s = &mut self.scales[i];
                s.area_offset += match s.orientation {
                    Orientation::Horizontal => dy,
                    Orientation::Vertical => dx,
                };
                s.rect = s.rect.translated(dx, dy);
                self.rebuild_scale(i);
                let mut changed = vec![PlotPart::Scale(i)];
                for c in self.scale_comments(i) {
                    self.comments[c].translate(dx, dy);
                    changed.push(PlotPart::Comment(c));
                }
                Ok(changed)
            }
            PlotPart::Comment(i) => {
                match drag.button {
                    ButtonTag::Right => {
                        if drag.mouse == drag.anchor {
                            return Ok(Vec::new());
                        }
                        self.comments[i].rotate(drag.anchor, drag.mouse)?;
                    }
                    ButtonTag::Left => {
                        if drag.is_zero() {
                            return Ok(Vec::new());
                        }
                        let frame = self.parent_frame(self.comments[i].parent).ok_or(ObjectError::BadTarget)?;
                        let c = &mut self.comments[i];
                        c.translate(drag.dx, drag.dy);
                        c.anchor = frame.to_fraction(c.center);
                    }
                }
                Ok(vec![part])
            }
        }
    }

    /// Registers all parts at `index` in [`PlotAssembly::parts`] order.
    pub fn into_mover<K>(
        &self,
        mover: &mut crate::mover::Mover<K, S>,
        index: usize,
        key: impl Fn(PlotPart) -> K,
    ) -> Result<(), crate::mover::MoverError>
    where
        K: Copy + Eq + core::fmt::Debug,
    {
        let keys: Vec<K> = self.parts().into_iter().map(key).collect();
        mover.insert_all(index, &keys)
    }

    /// Every stored part cover matches the current geometry.
    pub fn covers_fresh(&self) -> bool {
        self.area.cover() == &self.area.define_cover()
            && self.scales.iter().all(|s| s.cover == s.define_cover(&self.area))
            && self.comments.iter().all(|c| c.cover == c.define_cover())
    }

    pub fn begin_drag(&mut self) {}

    pub fn end_drag(&mut self) {}
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::Hit;

    fn plot() -> PlotAssembly<f64> {
        let area = RectangleObject::new(Rect::new(0.0, 0.0, 200.0, 100.0), Resizing::Any, 8.0, 3.0).unwrap();
        let r = area.rect();
        let below = ScaleObject::new(&r, Orientation::Horizontal, -10.0, 30.0).unwrap();
        let left = ScaleObject::new(&r, Orientation::Vertical, -50.0, 40.0).unwrap();
        let c0 =
            CommentObject::new("peak", CommentParent::Area, &r, Point::new(0.25, 0.25), (30.0, 10.0), 0.0).unwrap();
        let c1 =
            CommentObject::new("t", CommentParent::Scale(0), &below.rect(), Point::new(0.5, 0.5), (20.0, 8.0), 0.0)
                .unwrap();
        PlotAssembly::new(area, vec![below, left], vec![c0, c1]).unwrap()
    }

    fn drag(node: usize, dx: f64, dy: f64, button: ButtonTag) -> NodeDrag<f64> {
        NodeDrag::new(node, dx, dy, Point::new(dx, dy), button)
    }

    #[test]
    fn windows_come_first() {
        let p = plot();
        // horizontal scale overlaps both bottom corners, vertical one none
        let s0 = p.part_cover(PlotPart::Scale(0)).unwrap();
        assert_eq!(s0.len(), 3);
        assert!(s0.node(0).unwrap().transparent && s0.node(1).unwrap().transparent);
        assert_eq!(p.part_cover(PlotPart::Scale(1)).unwrap().len(), 1);
        assert_eq!(s0.hit_index(Point::new(2.0, 98.0)), Hit::FallThrough(1));
        assert_eq!(s0.hit_index(Point::new(100.0, 110.0)), Hit::Node(2));
    }

    #[test]
    fn windows_open_where_the_corner_circle_reaches() {
        let area = RectangleObject::new(Rect::new(0.0, 0.0, 200.0, 100.0), Resizing::Any, 8.0, 3.0).unwrap();
        let r = area.rect();
        // ends 5 short of the top edge, still inside the corner radius
        let above = ScaleObject::new(&r, Orientation::Horizontal, -130.0, 25.0).unwrap();
        let plot = PlotAssembly::new(area, vec![above], vec![]).unwrap();
        let cover = plot.part_cover(PlotPart::Scale(0)).unwrap();
        assert_eq!(cover.len(), 3);
        assert_eq!(cover.hit_index(Point::new(3.0, -4.0)), Hit::FallThrough(0));
    }

    #[test]
    fn parts_order() {
        let p = plot();
        use PlotPart::*;
        assert_eq!(p.parts(), vec![Comment(0), Comment(1), Scale(0), Scale(1), Area]);
    }

    #[test]
    fn body_move_is_synchronous() {
        let mut p = plot();
        let before = p.clone();
        p.move_part(PlotPart::Area, &drag(8, 7.0, 0.0, ButtonTag::Left)).unwrap();
        for (a, b) in p.scales.iter().zip(&before.scales) {
            assert_eq!(a.rect, b.rect.translated(7.0, 0.0));
        }
        for (a, b) in p.comments.iter().zip(&before.comments) {
            assert_eq!(a.center, b.center.translated(7.0, 0.0));
        }
    }

    #[test]
    fn resize_keeps_relative_positions() {
        let mut p = plot();
        // right side strip of an Any rectangle is node 7
        p.move_part(PlotPart::Area, &drag(7, 200.0, 0.0, ButtonTag::Left)).unwrap();
        assert_eq!(p.area.rect(), Rect::new(0.0, 0.0, 400.0, 100.0));
        assert_eq!(p.comments[0].center, Point::new(100.0, 25.0));
        assert_eq!(p.scales[0].length(), 400.0);
        assert_eq!(p.scales[1].length(), 100.0);
        assert_eq!(p.comments[1].center, Point::new(200.0, 105.0));
    }

    #[test]
    fn scale_moves_across_only() {
        let mut p = plot();
        let changed = p.move_part(PlotPart::Scale(0), &drag(2, 5.0, 4.0, ButtonTag::Left)).unwrap();
        assert_eq!(changed, vec![PlotPart::Scale(0), PlotPart::Comment(1)]);
        assert_eq!(p.scales[0].rect, Rect::new(0.0, 94.0, 200.0, 30.0));
        assert_eq!(p.scales[0].area_offset, -6.0);
        assert_eq!(p.comments[1].center, Point::new(100.0, 109.0));
        assert!(p.move_part(PlotPart::Scale(0), &drag(0, 5.0, 4.0, ButtonTag::Left)).unwrap().is_empty());
    }

    #[test]
    fn comment_free_move_updates_anchor() {
        let mut p = plot();
        p.move_part(PlotPart::Comment(0), &drag(0, 50.0, 25.0, ButtonTag::Left)).unwrap();
        assert_eq!(p.comments[0].anchor, Point::new(0.5, 0.5));
    }

    #[test]
    fn comment_rotates_about_center() {
        let mut p = plot();
        let c = p.comments[0].center;
        let d = NodeDrag {
            node: 0,
            dx: 0.0,
            dy: 0.0,
            anchor: c.translated(10.0, 0.0),
            mouse: c.translated(0.0, 10.0),
            button: ButtonTag::Right,
        };
        p.move_part(PlotPart::Comment(0), &d).unwrap();
        assert!((p.comments[0].angle - core::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert_eq!(p.comments[0].center, c);
    }

    #[test]
    fn bad_targets() {
        let mut p = plot();
        assert_eq!(p.move_part(PlotPart::Scale(9), &drag(0, 1.0, 0.0, ButtonTag::Left)), Err(ObjectError::BadTarget));
        assert!(matches!(
            p.move_part(PlotPart::Comment(0), &drag(1, 1.0, 0.0, ButtonTag::Left)),
            Err(ObjectError::BadNodeIndex { .. })
        ));
    }
}
