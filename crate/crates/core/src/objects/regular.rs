use crate::cover::{
    regular_apexes, regular_apexes_unchecked, Cover, CursorTag, GeometryError, MovementType, NodeShape,
};
use crate::geometry::Point;
use crate::objects::{bad_index, ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError};
use crate::Scalar;

/// How a regular polygon can be resized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolygonVariant {
    /// Moveable only: a single body node.
    Fixed,
    /// Circles on the apexes zoom the polygon.
    ByApex,
    /// Strips on the edges zoom the polygon.
    ByBorder,
}

/// Regular polygon kept regular under every operation: the apexes are always
/// recomputed from center, circumradius and phase.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularPolygonObject<S> {
    center: Point<S>,
    radius: S,
    apex_count: usize,
    phase: S,
    variant: PolygonVariant,
    min_radius: S,
    node_radius: S,
    fill: String,
    range: MoveRange<S>,
    cover: Cover<S>,
}

impl<S: Scalar> RegularPolygonObject<S> {
    pub fn new(
        apex_count: usize,
        center: Point<S>,
        radius: S,
        phase: S,
        variant: PolygonVariant,
    ) -> Result<Self, ObjectError> {
        regular_apexes(apex_count, center, radius, phase)?;
        let mut obj = Self {
            center,
            radius,
            apex_count,
            phase,
            variant,
            min_radius: S::lit(10.0).min(radius),
            node_radius: S::lit(5.0),
            fill: String::from("none"),
            range: MoveRange::unbounded(),
            cover: Cover::new(),
        };
        obj.cover = obj.define_cover();
        Ok(obj)
    }

    pub fn with_min_radius(mut self, min_radius: S) -> Result<Self, ObjectError> {
        if !(min_radius > S::zero()) || min_radius > self.radius {
            return Err(GeometryError::BadDimensions("minimum radius out of range").into());
        }
        self.min_radius = min_radius;
        Ok(self)
    }

    pub fn with_node_radius(mut self, node_radius: S) -> Result<Self, ObjectError> {
        if !(node_radius > S::zero()) {
            return Err(GeometryError::BadDimensions("node radius must be positive").into());
        }
        self.node_radius = node_radius;
        self.cover = self.define_cover();
        Ok(self)
    }

    pub fn with_fill(mut self, fill: impl Into<String>) -> Self {
        self.fill = fill.into();
        self
    }

    pub fn with_range(mut self, range: MoveRange<S>) -> Self {
        self.range = range;
        self
    }

    pub fn center(&self) -> Point<S> {
        self.center
    }
    pub fn radius(&self) -> S {
        self.radius
    }
    pub fn apex_count(&self) -> usize {
        self.apex_count
    }
    pub fn phase(&self) -> S {
        self.phase
    }
    pub fn variant(&self) -> PolygonVariant {
        self.variant
    }
    pub fn min_radius(&self) -> S {
        self.min_radius
    }
    pub fn node_radius(&self) -> S {
        self.node_radius
    }
    pub fn fill(&self) -> &str {
        &self.fill
    }

    pub fn apexes(&self) -> Vec<Point<S>> {
        regular_apexes_unchecked(self.apex_count, self.center, self.radius, self.phase)
    }

    /// Distance from the center to each edge midpoint.
    pub fn apothem(&self) -> S {
        self.radius * (S::PI() / S::lit(self.apex_count as f64)).cos()
    }

    fn body_index(&self) -> usize {
        match self.variant {
            PolygonVariant::Fixed => 0,
            _ => self.apex_count,
        }
    }

    fn set_radius(&mut self, r: S) -> bool {
        let r = r.max(self.min_radius);
        if r == self.radius {
            return false;
        }
        self.radius = r;
        self.cover = self.define_cover();
        true
    }
}

impl<S: Scalar> Moveable<S> for RegularPolygonObject<S> {
    fn define_cover(&self) -> Cover<S> {
        let pts = self.apexes();
        let n = self.apex_count;
        let mut cover = Cover::new();
        match self.variant {
            PolygonVariant::Fixed => {}
            PolygonVariant::ByApex => {
                for p in &pts {
                    cover.push(
                        NodeShape::Circle { center: *p, radius: self.node_radius },
                        MovementType::Any,
                        CursorTag::Hand,
                    );
                }
            }
            PolygonVariant::ByBorder => {
                for i in 0..n {
                    cover.push(
                        NodeShape::Strip { p1: pts[i], p2: pts[(i + 1) % n], radius: self.node_radius },
                        MovementType::Any,
                        CursorTag::Hand,
                    );
                }
            }
        }
        cover.push(NodeShape::convex_polygon(pts), MovementType::Any, CursorTag::SizeAll);
        cover
    }

    fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        self.center = self.center.translated(dx, dy);
        self.cover = self.define_cover();
    }

    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        let body = self.body_index();
        let i = drag.node;
        if i == body {
            if drag.is_zero() {
                return Ok(false);
            }
            self.translate(drag.dx, drag.dy);
            return Ok(true);
        }
        match self.variant {
            PolygonVariant::Fixed if i <= self.apex_count => Err(ObjectError::NotResizable),
            _ if i > body => Err(bad_index(i, body + 1)),
            PolygonVariant::Fixed => unreachable!(),
            PolygonVariant::ByApex => Ok(self.set_radius((drag.mouse - self.center).length())),
            PolygonVariant::ByBorder => {
                let step = S::two() * S::PI() / S::lit(self.apex_count as f64);
                let normal = Point::polar(self.phase + step * (S::lit(i as f64) + S::half()));
                let apothem = (drag.mouse - self.center).dot(normal);
                let scale = apothem / self.apothem();
                Ok(self.set_radius(self.radius * scale))
            }
        }
    }

    fn range(&self) -> MoveRange<S> {
        self.range
    }

    fn is_translation(&self, node: usize, _button: ButtonTag) -> bool {
        node == self.body_index()
    }
}
