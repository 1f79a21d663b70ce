use crate::cover::{regular_apexes, Cover, CursorTag, GeometryError, MovementType, NodeShape};
use crate::geometry::{signed_area, Point};
use crate::objects::{bad_index, swept_angle, ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError, Rotatable};
use crate::Scalar;

/// Triangles below this area (px²) get no node.
const DEGENERATE_AREA: f64 = 1e-6;

/// Free-form polygon fanned into triangles around a center point.
///
/// Cover layout for `n` apexes: apex circles `0..n`, the center circle `n`,
/// edge strips `n+1..=2n`, then one node per non-degenerate fan triangle.
/// Apexes and the center reshape, edges zoom about the center, triangles
/// translate (left button) or rotate (right button).
#[derive(Debug, Clone, PartialEq)]
pub struct ChatoyantPolygonObject<S> {
    center: Point<S>,
    apexes: Vec<Point<S>>,
    node_radius: S,
    fill: String,
    range: MoveRange<S>,
    cover: Cover<S>,
}

impl<S: Scalar> ChatoyantPolygonObject<S> {
    pub fn new(center: Point<S>, apexes: Vec<Point<S>>) -> Result<Self, ObjectError> {
        if apexes.len() < 3 {
            return Err(GeometryError::BadCount.into());
        }
        if !center.is_finite() || apexes.iter().any(|p| !p.is_finite()) {
            return Err(GeometryError::BadDimensions("non-finite apex").into());
        }
        let mut obj = Self {
            center,
            apexes,
            node_radius: S::lit(5.0),
            fill: String::from("none"),
            range: MoveRange::unbounded(),
            cover: Cover::new(),
        };
        obj.rebuild();
        Ok(obj)
    }

    /// Starts life as a regular polygon.
    pub fn regular(n: usize, center: Point<S>, radius: S, phase: S) -> Result<Self, ObjectError> {
        Self::new(center, regular_apexes(n, center, radius, phase)?)
    }

    pub fn with_node_radius(mut self, node_radius: S) -> Result<Self, ObjectError> {
        if !(node_radius > S::zero()) {
            return Err(GeometryError::BadDimensions("node radius must be positive").into());
        }
        self.node_radius = node_radius;
        self.rebuild();
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
    pub fn apexes(&self) -> &[Point<S>] {
        &self.apexes
    }
    pub fn node_radius(&self) -> S {
        self.node_radius
    }
    pub fn fill(&self) -> &str {
        &self.fill
    }

    fn rebuild(&mut self) {
        self.cover = self.define_cover();
    }

    fn zoom(&mut self, anchor: Point<S>, mouse: Point<S>) -> Result<bool, ObjectError> {
        let eps = S::lit(1e-9);
        let from = (anchor - self.center).length();
        let to = (mouse - self.center).length();
        if from <= eps || to <= eps {
            return Err(ObjectError::ZeroScale);
        }
        let scale = to / from;
        if scale == S::one() {
            return Ok(false);
        }
        let c = self.center;
        for a in &mut self.apexes {
            *a = c + (*a - c) * scale;
        }
        self.rebuild();
        Ok(true)
    }
}

impl<S: Scalar> Moveable<S> for ChatoyantPolygonObject<S> {
    fn define_cover(&self) -> Cover<S> {
        let n = self.apexes.len();
        let r = self.node_radius;
        let mut cover = Cover::new();
        for a in &self.apexes {
            cover.push(NodeShape::Circle { center: *a, radius: r }, MovementType::Any, CursorTag::Hand);
        }
        cover.push(NodeShape::Circle { center: self.center, radius: r }, MovementType::Any, CursorTag::Hand);
        for i in 0..n {
            cover.push(
                NodeShape::Strip { p1: self.apexes[i], p2: self.apexes[(i + 1) % n], radius: r },
                MovementType::Any,
                CursorTag::SizeNWSE,
            );
        }
        let min_area = S::lit(DEGENERATE_AREA);
        for i in 0..n {
            let tri = vec![self.center, self.apexes[i], self.apexes[(i + 1) % n]];
            if signed_area(&tri).abs() >= min_area {
                cover.push(NodeShape::convex_polygon(tri), MovementType::Any, CursorTag::SizeAll);
            }
        }
        cover
    }

    fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        self.center = self.center.translated(dx, dy);
        for a in &mut self.apexes {
            *a = a.translated(dx, dy);
        }
        self.rebuild();
    }

    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        let n = self.apexes.len();
        let i = drag.node;
        match i {
            _ if i > 3 * n => Err(bad_index(i, self.cover.len())),
            _ if i <= n => {
                if drag.is_zero() {
                    return Ok(false);
                }
                let p = if i < n { &mut self.apexes[i] } else { &mut self.center };
                *p = p.translated(drag.dx, drag.dy);
                self.rebuild();
                Ok(true)
            }
            _ if i <= 2 * n => self.zoom(drag.anchor, drag.mouse),
            _ => match drag.button {
                ButtonTag::Left => {
                    if drag.is_zero() {
                        return Ok(false);
                    }
                    self.translate(drag.dx, drag.dy);
                    Ok(true)
                }
                ButtonTag::Right => {
                    let before = self.apexes.clone();
                    self.rotate_about(self.center, drag.anchor, drag.mouse)?;
                    Ok(before != self.apexes)
                }
            },
        }
    }

    fn range(&self) -> MoveRange<S> {
        self.range
    }

    fn is_translation(&self, node: usize, button: ButtonTag) -> bool {
        let n = self.apexes.len();
        node > 2 * n && node <= 3 * n && button == ButtonTag::Left
    }
}

impl<S: Scalar> Rotatable<S> for ChatoyantPolygonObject<S> {
    fn rotate_about(&mut self, pivot: Point<S>, prev: Point<S>, mouse: Point<S>) -> Result<(), ObjectError> {
        let theta = swept_angle(pivot, prev, mouse)?;
        self.center = self.center.rotated_about(pivot, theta);
        for a in &mut self.apexes {
            *a = a.rotated_about(pivot, theta);
        }
        self.rebuild();
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> ChatoyantPolygonObject<f64> {
        ChatoyantPolygonObject::regular(4, Point::origin(), 10.0, 0.0).unwrap()
    }

    fn drag(node: usize, dx: f64, dy: f64, anchor: Point<f64>, mouse: Point<f64>, button: ButtonTag) -> NodeDrag<f64> {
        NodeDrag { node, dx, dy, mouse, anchor, button }
    }

    #[test]
    fn layout() {
        use crate::cover::Hit;
        let sq = ChatoyantPolygonObject::regular(4, Point::origin(), 40.0, 0.0).unwrap();
        // 4 apexes + center + 4 edges + 4 triangles
        assert_eq!(sq.cover().len(), 13);
        assert_eq!(sq.cover().hit_index(Point::new(40.0, 0.0)), Hit::Node(0));
        assert_eq!(sq.cover().hit_index(Point::new(0.0, 0.0)), Hit::Node(4));
        assert_eq!(sq.cover().hit_index(Point::new(20.0, 20.0)), Hit::Node(5));
        assert_eq!(sq.cover().hit_index(Point::new(12.0, 12.0)), Hit::Node(9));
    }

    #[test]
    fn edge_zoom_scales_about_center() {
        let mut sq = square();
        let d = drag(5, 0.0, 2.0, Point::new(10.0, 0.0), Point::new(12.0, 0.0), ButtonTag::Left);
        assert_eq!(sq.move_node(&d), Ok(true));
        assert!(sq.apexes()[0].distance(Point::new(12.0, 0.0)) < 1e-12);
        assert!(sq.apexes()[1].distance(Point::new(0.0, 12.0)) < 1e-12);
        assert_eq!(sq.center(), Point::origin());
    }

    #[test]
    fn zero_scale_is_rejected() {
        let mut sq = square();
        let d = drag(5, 1.0, 1.0, Point::origin(), Point::new(1.0, 1.0), ButtonTag::Left);
        assert_eq!(sq.move_node(&d), Err(ObjectError::ZeroScale));
    }

    #[test]
    fn apex_and_center_reshape() {
        let mut sq = square();
        let before = sq.apexes().to_vec();
        assert_eq!(sq.move_node(&drag(0, 3.0, 4.0, Point::origin(), Point::origin(), ButtonTag::Left)), Ok(true));
        assert_eq!(sq.apexes()[0], Point::new(13.0, 4.0));
        assert_eq!(&sq.apexes()[1..], &before[1..]);

        let apexes = sq.apexes().to_vec();
        assert_eq!(sq.move_node(&drag(4, 3.0, 4.0, Point::origin(), Point::origin(), ButtonTag::Left)), Ok(true));
        assert_eq!(sq.center(), Point::new(3.0, 4.0));
        assert_eq!(sq.apexes(), &apexes[..]);
        assert_eq!(sq.cover(), &sq.define_cover());
    }

    #[test]
    fn degenerate_triangles_are_skipped() {
        // apexes 0 and 1 collinear with the center
        let obj = ChatoyantPolygonObject::new(
            Point::origin(),
            vec![Point::new(10.0, 0.0), Point::new(20.0, 0.0), Point::new(0.0, 10.0)],
        )
        .unwrap();
        assert_eq!(obj.cover().len(), 3 + 1 + 3 + 2);
    }

    #[test]
    fn triangle_buttons() {
        let mut sq = square();
        let left = drag(10, 5.0, 0.0, Point::new(2.0, 2.0), Point::new(7.0, 2.0), ButtonTag::Left);
        assert_eq!(sq.move_node(&left), Ok(true));
        assert_eq!(sq.center(), Point::new(5.0, 0.0));

        let mut sq = square();
        let right = drag(9, 0.0, 0.0, Point::new(5.0, 0.0), Point::new(0.0, 5.0), ButtonTag::Right);
        assert_eq!(sq.move_node(&right), Ok(true));
        assert!(sq.apexes()[0].distance(Point::new(0.0, 10.0)) < 1e-12);
        assert!(sq.is_translation(9, ButtonTag::Left));
        assert!(!sq.is_translation(9, ButtonTag::Right));
    }

    #[test]
    fn rotations_compose() {
        let deg = |d: f64| d.to_radians();
        let mut a = square();
        let mut b = square();
        let at = |t: f64| Point::new(t.cos(), t.sin());
        a.rotate_about(Point::origin(), at(0.0), at(deg(30.0))).unwrap();
        a.rotate_about(Point::origin(), at(0.0), at(deg(30.0))).unwrap();
        b.rotate_about(Point::origin(), at(0.0), at(deg(60.0))).unwrap();
        for (p, q) in a.apexes().iter().zip(b.apexes()) {
            assert!(p.distance(*q) < 1e-9);
        }
        assert_eq!(a.rotate_about(Point::origin(), Point::origin(), at(1.0)), Err(ObjectError::PivotSingular));
    }
}
