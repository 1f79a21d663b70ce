use crate::cover::{loop_cover, loop_nodes, Cover};
use crate::geometry::Point;
use crate::objects::{bad_index, ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError};
use crate::Scalar;

/// Closed loop of points. Points move individually; any connection moves the loop.
#[derive(Debug, Clone, PartialEq)]
pub struct LoopObject<S> {
    points: Vec<Point<S>>,
    node_radius: S,
    half_width: S,
    fill: String,
    range: MoveRange<S>,
    cover: Cover<S>,
}

impl<S: Scalar> LoopObject<S> {
    pub fn new(points: Vec<Point<S>>, node_radius: S, half_width: S) -> Result<Self, ObjectError> {
        let cover = loop_cover(&points, node_radius, half_width)?;
        Ok(Self { points, node_radius, half_width, fill: String::from("none"), range: MoveRange::unbounded(), cover })
    }

    pub fn with_fill(mut self, fill: impl Into<String>) -> Self {
        self.fill = fill.into();
        self
    }

    pub fn with_range(mut self, range: MoveRange<S>) -> Self {
        self.range = range;
        self
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }
    pub fn node_radius(&self) -> S {
        self.node_radius
    }
    pub fn half_width(&self) -> S {
        self.half_width
    }
    pub fn fill(&self) -> &str {
        &self.fill
    }
}

impl<S: Scalar> Moveable<S> for LoopObject<S> {
    fn define_cover(&self) -> Cover<S> {
        loop_nodes(&self.points, self.node_radius, self.half_width)
    }

    fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        for p in &mut self.points {
            *p = p.translated(dx, dy);
        }
        self.cover = self.define_cover();
    }

    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        let n = self.points.len();
        if drag.node >= 2 * n {
            return Err(bad_index(drag.node, 2 * n));
        }
        if drag.is_zero() {
            return Ok(false);
        }
        if drag.node < n {
            let p = &mut self.points[drag.node];
            *p = p.translated(drag.dx, drag.dy);
            self.cover = self.define_cover();
        } else {
            self.translate(drag.dx, drag.dy);
        }
        Ok(true)
    }

    fn range(&self) -> MoveRange<S> {
        self.range
    }

    fn is_translation(&self, node: usize, _button: ButtonTag) -> bool {
        let n = self.points.len();
        node >= n && node < 2 * n
    }
}
