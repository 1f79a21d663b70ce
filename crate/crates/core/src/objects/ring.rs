use crate::cover::{annulus_nodes, border_node_count, Cover, GeometryError};
use crate::geometry::Point;
use crate::objects::{bad_index, ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError};
use crate::Scalar;

/// Smallest clearance kept between the inner radius and the node radius.
const INNER_CLEARANCE: f64 = 1e-3;

/// Ring with an N-node cover: moved by the sectors, resized by either border.
///
/// While a drag is in progress the border node counts stay frozen, so the
/// caught node index keeps its meaning; they are re-derived on release.
#[derive(Debug, Clone, PartialEq)]
pub struct RingObject<S> {
    center: Point<S>,
    r_outer: S,
    r_inner: S,
    node_radius: S,
    min_gap: S,
    fill: String,
    range: MoveRange<S>,
    frozen: Option<(usize, usize)>,
    cover: Cover<S>,
}

impl<S: Scalar> RingObject<S> {
    pub fn new(center: Point<S>, r_outer: S, r_inner: S, node_radius: S) -> Result<Self, ObjectError> {
        Self::with_min_gap(center, r_outer, r_inner, node_radius, S::two())
    }

    pub fn with_min_gap(
        center: Point<S>,
        r_outer: S,
        r_inner: S,
        node_radius: S,
        min_gap: S,
    ) -> Result<Self, ObjectError> {
        let valid = center.is_finite()
            && node_radius > S::zero()
            && min_gap >= S::zero()
            && r_inner > node_radius
            && r_inner + min_gap <= r_outer
            && r_outer > r_inner
            && r_outer.is_finite();
        if !valid {
            return Err(GeometryError::BadRadii.into());
        }
        let mut obj = Self {
            center,
            r_outer,
            r_inner,
            node_radius,
            min_gap,
            fill: String::from("none"),
            range: MoveRange::unbounded(),
            frozen: None,
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

    pub fn center(&self) -> Point<S> {
        self.center
    }
    pub fn outer_radius(&self) -> S {
        self.r_outer
    }
    pub fn inner_radius(&self) -> S {
        self.r_inner
    }
    pub fn node_radius(&self) -> S {
        self.node_radius
    }
    pub fn min_gap(&self) -> S {
        self.min_gap
    }
    pub fn fill(&self) -> &str {
        &self.fill
    }

    /// Border node counts `(outer, inner)` of the current layout.
    pub fn node_counts(&self) -> (usize, usize) {
        self.frozen.unwrap_or_else(|| {
            (border_node_count(self.r_outer, self.node_radius), border_node_count(self.r_inner, self.node_radius))
        })
    }

    pub fn is_frozen(&self) -> bool {
        self.frozen.is_some()
    }

    fn rebuild(&mut self) {
        self.cover = self.define_cover();
    }

    fn set_radii(&mut self, r_outer: S, r_inner: S) -> bool {
        if r_outer == self.r_outer && r_inner == self.r_inner {
            return false;
        }
        self.r_outer = r_outer;
        self.r_inner = r_inner;
        self.rebuild();
        true
    }
}

impl<S: Scalar> Moveable<S> for RingObject<S> {
    fn define_cover(&self) -> Cover<S> {
        let (k_out, k_in) = self.node_counts();
        annulus_nodes(self.center, self.r_outer, self.r_inner, self.node_radius, k_out, k_in)
    }

    fn cover(&self) -> &Cover<S> {
        &self.cover
    }

    fn translate(&mut self, dx: S, dy: S) {
        self.center = self.center.translated(dx, dy);
        self.rebuild();
    }

    fn move_node(&mut self, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        let (k_out, k_in) = self.node_counts();
        let i = drag.node;
        let dist = (drag.mouse - self.center).length();
        if i < k_out {
            let r = dist.max(self.r_inner + self.min_gap);
            Ok(self.set_radii(r, self.r_inner))
        } else if i < k_out + k_in {
            let mut hi = self.r_outer - self.min_gap;
            if hi + self.min_gap > self.r_outer {
                hi -= self.r_outer * S::epsilon();
            }
            let lo = self.node_radius + S::lit(INNER_CLEARANCE);
            let r = if hi < lo { self.r_inner } else { dist.clamp_to(lo, hi) };
            Ok(self.set_radii(self.r_outer, r))
        } else if i < 2 * k_out + k_in {
            if drag.is_zero() {
                return Ok(false);
            }
            self.translate(drag.dx, drag.dy);
            Ok(true)
        } else {
            Err(bad_index(i, 2 * k_out + k_in))
        }
    }

    fn range(&self) -> MoveRange<S> {
        self.range
    }

    fn is_translation(&self, node: usize, _button: ButtonTag) -> bool {
        let (k_out, k_in) = self.node_counts();
        node >= k_out + k_in && node < 2 * k_out + k_in
    }

    fn begin_drag(&mut self) {
        self.frozen = Some(self.node_counts());
    }

    fn end_drag(&mut self) {
        if self.frozen.take().is_some() {
            self.rebuild();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingObject<f64> {
        RingObject::new(Point::origin(), 40.0, 20.0, 5.0).unwrap()
    }

    fn to(node: usize, mouse: Point<f64>) -> NodeDrag<f64> {
        NodeDrag::new(node, 0.0, 1.0, mouse, ButtonTag::Left)
    }

    #[test]
    fn outer_border_follows_pointer() {
        let mut r = ring();
        assert_eq!(r.move_node(&to(0, Point::new(0.0, 50.0))), Ok(true));
        assert_eq!(r.outer_radius(), 50.0);
    }

    #[test]
    fn outer_border_clamped_by_gap() {
        let mut r = ring();
        assert_eq!(r.move_node(&to(3, Point::new(0.0, 21.0))), Ok(true));
        assert_eq!(r.outer_radius(), 22.0);
        assert!(r.inner_radius() + r.min_gap() <= r.outer_radius());
    }

    #[test]
    fn inner_border_clamped_both_ways() {
        let mut r = ring();
        let inner = 51;
        assert_eq!(r.move_node(&to(inner, Point::new(39.5, 0.0))), Ok(true));
        assert!(r.inner_radius() <= 38.0);
        assert_eq!(r.move_node(&to(inner, Point::new(0.5, 0.0))), Ok(true));
        assert!(r.inner_radius() > r.node_radius());
    }

    #[test]
    fn sector_moves_ring() {
        let mut r = ring();
        let sector = 51 + 26;
        assert_eq!(r.move_node(&NodeDrag::new(sector, -5.0, 0.0, Point::new(25.0, 0.0), ButtonTag::Left)), Ok(true));
        assert_eq!(r.center(), Point::new(-5.0, 0.0));
        assert_eq!((r.outer_radius(), r.inner_radius()), (40.0, 20.0));
        assert!(r.is_translation(sector, ButtonTag::Left));
    }

    #[test]
    fn layout_frozen_during_drag() {
        let mut r = ring();
        r.begin_drag();
        r.move_node(&to(0, Point::new(80.0, 0.0))).unwrap();
        assert_eq!(r.node_counts(), (51, 26));
        assert_eq!(r.cover().len(), 128);
        assert_eq!(r.cover(), &r.define_cover());
        r.end_drag();
        assert_eq!(r.node_counts(), (border_node_count(80.0, 5.0), 26));
        assert_eq!(r.cover(), &r.define_cover());
    }

    #[test]
    fn thin_ring_is_valid() {
        let r = RingObject::new(Point::origin(), 22.0, 20.0, 5.0).unwrap();
        assert_eq!(r.cover().len(), 2 * border_node_count(22.0, 5.0) + border_node_count(20.0, 5.0));
        assert!(RingObject::new(Point::origin(), 21.0, 20.0, 5.0).is_err());
        assert!(RingObject::new(Point::origin(), 40.0, 5.0, 5.0).is_err());
    }
}
