use core::f64::consts::TAU;

use moveable_core::cover::{make_polygon_node, CoverNode, CursorTag, Hit, MovementType, NodeShape, Resizing};
use moveable_core::geometry::{Point, Rect};
use moveable_core::mover::{Mover, Store};
use moveable_core::objects::{
    ButtonTag, ChatoyantPolygonObject, MoveRange, Moveable, NodeDrag, PolygonVariant, RectangleObject,
    RegularPolygonObject, RingObject, Rotatable,
};
use proptest::prelude::*;

type P = Point<f64>;

fn pt() -> impl Strategy<Value = P> {
    (-200.0..200.0f64, -200.0..200.0f64).prop_map(|(x, y)| Point::new(x, y))
}

/// Signed distance to the shape boundary computed without the crate's
/// containment code: negative inside.
fn oracle(shape: &NodeShape<f64>, p: P) -> f64 {
    match shape {
        NodeShape::Circle { center, radius } => (p - *center).length() - radius,
        NodeShape::Strip { p1, p2, radius } => {
            let (a, b) = (*p1, *p2);
            let ab = b - a;
            let t =
                if ab.length_squared() == 0.0 { 0.0 } else { ((p - a).dot(ab) / ab.length_squared()).clamp(0.0, 1.0) };
            (p - (a + ab * t)).length() - radius
        }
        NodeShape::Polygon { apexes } => {
            let n = apexes.len();
            let mut inside = false;
            let mut dist = f64::INFINITY;
            for i in 0..n {
                let (a, b) = (apexes[i], apexes[(i + 1) % n]);
                let ab = b - a;
                let t = ((p - a).dot(ab) / ab.length_squared()).clamp(0.0, 1.0);
                dist = dist.min((p - (a + ab * t)).length());
                if (a.y > p.y) != (b.y > p.y) && p.x < a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y) {
                    inside = !inside;
                }
            }
            if inside {
                -dist
            } else {
                dist
            }
        }
    }
}

fn shape() -> impl Strategy<Value = CoverNode<f64>> {
    let circle = (pt(), 0.5..80.0f64).prop_map(|(c, r)| CoverNode::circle(0, c, r, MovementType::Any, CursorTag::Hand));
    let strip = (pt(), pt(), 0.5..40.0f64).prop_map(|(a, b, r)| {
        CoverNode::new(0, NodeShape::Strip { p1: a, p2: b, radius: r }, MovementType::Any, CursorTag::Hand)
    });
    let polygon = (pt(), 5.0..120.0f64, prop::collection::vec((0.0..1.0f64, 0.6..1.0f64), 3..9)).prop_filter_map(
        "degenerate polygon",
        |(c, r, raw)| {
            let mut angles: Vec<(f64, f64)> = raw.into_iter().map(|(a, k)| (a * TAU, k)).collect();
            angles.sort_by(|a, b| a.0.total_cmp(&b.0));
            // keep a subset in convex position: points on one circle
            let pts: Vec<P> = angles.iter().map(|(a, _)| c + Point::polar(*a) * r).collect();
            make_polygon_node(0, &pts, MovementType::Any, CursorTag::SizeAll).ok()
        },
    );
    prop_oneof![circle, strip, polygon]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn containment_matches_distance_oracle(node in shape(), pts in prop::collection::vec(pt(), 64)) {
        for p in pts {
            let d = oracle(&node.shape, p);
            if d.abs() > 1e-9 {
                prop_assert_eq!(node.contains(p), d < 0.0, "point {:?} distance {}", p, d);
            }
        }
    }

    #[test]
    fn rectangle_priority(
        x in -50.0..50.0f64, y in -50.0..50.0f64, w in 40.0..200.0f64, h in 40.0..200.0f64,
        cr in 3.0..12.0f64, hw_frac in 0.2..1.0f64, pts in prop::collection::vec(pt(), 64),
    ) {
        let hw = cr * hw_frac;
        let rect = Rect::new(x, y, w, h);
        let obj = RectangleObject::new(rect, Resizing::Any, cr, hw).unwrap();
        for p in pts {
            let corner = rect.corners().iter().position(|c| (p - *c).length() <= cr);
            let strips = [
                p.x >= rect.left() && p.x <= rect.right() && (p.y - rect.top()).abs() <= hw,
                p.x >= rect.left() && p.x <= rect.right() && (p.y - rect.bottom()).abs() <= hw,
                p.y >= rect.top() && p.y <= rect.bottom() && (p.x - rect.left()).abs() <= hw,
                p.y >= rect.top() && p.y <= rect.bottom() && (p.x - rect.right()).abs() <= hw,
            ];
            let expect = corner
                .or_else(|| strips.iter().position(|s| *s).map(|i| i + 4))
                .or_else(|| rect.contains(p).then_some(8));
            let hit = obj.cover().hit_index(p);
            let near_boundary = obj.cover().nodes().iter().any(|n| oracle(&n.shape, p).abs() < 1e-9);
            if !near_boundary {
                prop_assert_eq!(hit, expect.map_or(Hit::Miss, Hit::Node));
            }
        }
    }

    #[test]
    fn hit_is_translation_equivariant(
        x in -50i32..50, y in -50i32..50, w in 30i32..150, h in 30i32..150,
        dx in -300i32..300, dy in -300i32..300, px in -100i32..250, py in -100i32..250,
    ) {
        let f = |v: i32| f64::from(v);
        let obj = RectangleObject::new(Rect::new(f(x), f(y), f(w), f(h)), Resizing::Any, 8.0, 3.0).unwrap();
        let moved = obj.cover().translated(f(dx), f(dy));
        let p = Point::new(f(px), f(py));
        prop_assert_eq!(obj.cover().hit_index(p), moved.hit_index(p.translated(f(dx), f(dy))));
    }

    #[test]
    fn zooms_keep_polygon_regular(
        by_apex in any::<bool>(),
        steps in prop::collection::vec((0usize..11, 0.0..400.0f64, 0.0..TAU), 1..40),
    ) {
        let variant = if by_apex { PolygonVariant::ByApex } else { PolygonVariant::ByBorder };
        let center = Point::new(13.0, -7.0);
        let mut poly = RegularPolygonObject::new(11, center, 60.0, 0.3, variant).unwrap();
        for (i, dist, angle) in steps {
            let mouse = center + Point::polar(angle) * dist;
            let _ = poly.move_node(&NodeDrag::new(i, 1.0, 1.0, mouse, ButtonTag::Left));
            let r = poly.radius();
            let apexes = poly.apexes();
            let step = TAU / 11.0;
            for (k, a) in apexes.iter().enumerate() {
                prop_assert!(((*a - center).length() - r).abs() <= 1e-9 * r);
                let expect = poly.phase() + step * k as f64;
                let got = (*a - center).angle();
                let diff = (got - expect).rem_euclid(TAU);
                prop_assert!(diff.min(TAU - diff) <= 1e-9);
            }
            prop_assert!(r >= poly.min_radius());
        }
    }

    #[test]
    fn ring_keeps_radii_ordered(
        events in prop::collection::vec((0.0..TAU, 0.0..300.0f64, -40.0..40.0f64, -40.0..40.0f64), 1..30),
        gap in 0.0..20.0f64,
    ) {
        let ring = RingObject::with_min_gap(Point::new(0.0, 0.0), 90.0, 50.0, 5.0, gap).unwrap();
        let mut store: Vec<Box<dyn Moveable<f64>>> = vec![Box::new(ring)];
        let mut mover = Mover::new();
        mover.add(0).unwrap();
        for (angle, r, mx, my) in events {
            let down = Point::polar(angle) * r;
            if mover.catch(&mut store, down, ButtonTag::Left).unwrap() {
                mover.move_to(&mut store, down.translated(mx, my));
                mover.move_to(&mut store, down.translated(mx * 3.0, -my));
                mover.release(&mut store);
            }
            let cover = store.cover(0).unwrap();
            let bounds = cover.bounds().unwrap();
            let c = bounds.center();
            // the outer border circles reach furthest out
            let ro = bounds.w / 2.0 - 5.0;
            let inner_circle = cover.nodes().iter().filter(|n| matches!(n.shape, NodeShape::Circle { .. }))
                .map(|n| match n.shape { NodeShape::Circle { center, .. } => (center - c).length(), _ => 0.0 })
                .fold(f64::INFINITY, f64::min);
            prop_assert!(inner_circle + gap <= ro + 1e-9);
            for k in 0..256 {
                let a = TAU * f64::from(k) / 256.0;
                for r in [ro, inner_circle] {
                    prop_assert!(cover.hit_index(c + Point::polar(a) * r) != Hit::Miss);
                }
            }
        }
    }

    #[test]
    fn rotation_is_an_isometry(
        n in 3usize..9, radius in 10.0..100.0f64, phase in 0.0..TAU,
        pivot in pt(), prev in pt(), mouse in pt(),
    ) {
        let mut chat = ChatoyantPolygonObject::regular(n, Point::new(5.0, 9.0), radius, phase).unwrap();
        let before: Vec<P> = chat.apexes().iter().copied().chain([chat.center()]).collect();
        prop_assume!((prev - pivot).length() > 1e-3 && (mouse - pivot).length() > 1e-3);
        chat.rotate_about(pivot, prev, mouse).unwrap();
        let after: Vec<P> = chat.apexes().iter().copied().chain([chat.center()]).collect();
        for i in 0..before.len() {
            for j in 0..before.len() {
                prop_assert!((before[i].distance(before[j]) - after[i].distance(after[j])).abs() <= 1e-9);
            }
        }
        chat.rotate_about(pivot, mouse, prev).unwrap();
        let back: Vec<P> = chat.apexes().iter().copied().chain([chat.center()]).collect();
        for (a, b) in before.iter().zip(&back) {
            prop_assert!(a.distance(*b) <= 1e-6);
        }
    }

    #[test]
    fn mover_masks_by_movement_type(
        resizing in prop_oneof![Just(Resizing::NS), Just(Resizing::WE), Just(Resizing::Any), Just(Resizing::None)],
        down in (-10.0..110.0f64, -10.0..70.0f64),
        moves in prop::collection::vec((-50.0..50.0f64, -50.0..50.0f64), 1..10),
    ) {
        let obj = RectangleObject::new(Rect::new(0.0, 0.0, 100.0, 60.0), resizing, 8.0, 3.0).unwrap();
        let mut store: Vec<Box<dyn Moveable<f64>>> = vec![Box::new(obj)];
        let mut mover = Mover::new();
        mover.add(0).unwrap();
        let down = Point::new(down.0, down.1);
        prop_assume!(mover.catch(&mut store, down, ButtonTag::Left).unwrap());
        for (x, y) in moves {
            mover.move_to(&mut store, down.translated(x, y));
            let d = mover.last_dispatch().unwrap();
            match d.movement {
                MovementType::NS => prop_assert_eq!(d.dx, 0.0),
                MovementType::WE => prop_assert_eq!(d.dy, 0.0),
                MovementType::None => prop_assert!(d.dx == 0.0 && d.dy == 0.0),
                MovementType::Any => {}
            }
        }
    }

    #[test]
    fn clamped_drag_keeps_anchor(moves in prop::collection::vec((-300.0..-1.0f64, -300.0..300.0f64), 1..20)) {
        // the reference point starts on the left edge of the range, so moving left is always rejected
        let range = MoveRange::within(Rect::new(50.0, -1000.0, 100.0, 2000.0)).unwrap();
        let obj = RectangleObject::new(Rect::new(0.0, 0.0, 100.0, 60.0), Resizing::None, 8.0, 3.0).unwrap().with_range(range);
        let mut store: Vec<Box<dyn Moveable<f64>>> = vec![Box::new(obj)];
        let mut mover = Mover::new();
        mover.add(0).unwrap();
        let grab = Point::new(50.0, 30.0);
        mover.catch(&mut store, grab, ButtonTag::Left).unwrap();
        for (x, _) in &moves {
            prop_assert!(!mover.move_to(&mut store, grab.translated(*x, 0.0)).moved);
            prop_assert_eq!(mover.drag().unwrap().anchor, grab);
        }
        prop_assert!(mover.move_to(&mut store, grab.translated(5.0, 0.0)).moved);
        let body = store.cover(0).unwrap().nodes()[0].shape.bounds();
        prop_assert_eq!(body, Rect::new(5.0, 0.0, 100.0, 60.0));
    }
}
