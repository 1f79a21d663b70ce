use moveable_core::cover::{Resizing, SideMask};
use moveable_core::geometry::{Point, Rect};
use moveable_core::objects::{ButtonTag, Moveable, NodeDrag, RectangleObject};
use moveable_core::plot::{CommentObject, CommentParent, Orientation, PlotAssembly, PlotPart, ScaleObject};
use moveable_core::scene::{Part, Scene, SceneObject};
use moveable_core::widgets::{GroupChild, GroupObject};
use proptest::prelude::*;

fn assembly() -> PlotAssembly<f64> {
    let area = RectangleObject::new(Rect::new(40.0, 20.0, 300.0, 200.0), Resizing::Any, 8.0, 3.0).unwrap();
    let r = area.rect();
    let bottom = ScaleObject::new(&r, Orientation::Horizontal, -12.0, 30.0).unwrap();
    let left = ScaleObject::new(&r, Orientation::Vertical, -20.0, 30.0).unwrap();
    let comments = vec![
        CommentObject::new("a", CommentParent::Area, &r, Point::new(0.3, 0.7), (40.0, 12.0), 0.2).unwrap(),
        CommentObject::new("b", CommentParent::Area, &r, Point::new(0.9, 0.1), (30.0, 10.0), 0.0).unwrap(),
        CommentObject::new("c", CommentParent::Scale(0), &bottom.rect(), Point::new(0.5, 0.5), (20.0, 8.0), 0.0)
            .unwrap(),
        CommentObject::new("d", CommentParent::Scale(1), &left.rect(), Point::new(0.5, 0.2), (20.0, 8.0), 1.0).unwrap(),
    ];
    PlotAssembly::new(area, vec![bottom, left], comments).unwrap()
}

fn recovered(p: &PlotAssembly<f64>, i: usize) -> Point<f64> {
    let c = &p.comments()[i];
    p.parent_frame(c.parent()).unwrap().to_fraction(c.center())
}

proptest! {
    #[test]
    fn area_resize_keeps_comment_anchors(steps in prop::collection::vec((0usize..8, -150.0..150.0f64, -150.0..150.0f64), 1..20)) {
        let mut p = assembly();
        let anchors: Vec<_> = (0..p.comments().len()).map(|i| recovered(&p, i)).collect();
        for (node, dx, dy) in steps {
            p.move_part(PlotPart::Area, &NodeDrag::new(node, dx, dy, Point::origin(), ButtonTag::Left)).unwrap();
            let area = p.area().rect();
            for (i, a) in anchors.iter().enumerate() {
                let r = recovered(&p, i);
                prop_assert!((r.x - a.x).abs() <= 1e-9 && (r.y - a.y).abs() <= 1e-9);
            }
            for s in p.scales() {
                let side = match s.orientation() { Orientation::Horizontal => area.w, Orientation::Vertical => area.h };
                prop_assert_eq!(s.length(), side);
            }
        }
    }

    #[test]
    fn body_move_is_rigid(dx in -500i32..500, dy in -500i32..500) {
        let mut p = assembly();
        let before = p.clone();
        let (dx, dy) = (f64::from(dx), f64::from(dy));
        p.move_part(PlotPart::Area, &NodeDrag::new(8, dx, dy, Point::origin(), ButtonTag::Left)).unwrap();
        prop_assert_eq!(p.area().rect(), before.area().rect().translated(dx, dy));
        for (a, b) in p.scales().iter().zip(before.scales()) {
            prop_assert_eq!(a.rect(), b.rect().translated(dx, dy));
        }
        for (a, b) in p.comments().iter().zip(before.comments()) {
            prop_assert_eq!(a.center(), b.center().translated(dx, dy));
        }
    }

    #[test]
    fn windows_always_reach_the_area(offset in -29.0..0.0f64, k in 0.0..1.0f64, angle in 0.0..core::f64::consts::TAU) {
        let area = RectangleObject::new(Rect::new(0.0, 0.0, 200.0, 100.0), Resizing::Any, 8.0, 3.0).unwrap();
        let r = area.rect();
        let scale = ScaleObject::new(&r, Orientation::Horizontal, offset, 30.0).unwrap();
        let plot = PlotAssembly::new(area, vec![scale], vec![]).unwrap();
        let mut scene = Scene::new();
        scene.add_top(SceneObject::Plot(plot));
        for corner in [r.corners()[2], r.corners()[3]] {
            let p = corner + Point::polar(angle) * (k * 8.0);
            let (key, node) = scene.pick(p).unwrap();
            prop_assert_eq!(key.part, Part::Plot(PlotPart::Area));
            prop_assert!(node < 4);
        }
    }

    #[test]
    fn group_resize_contains_children(steps in prop::collection::vec((0usize..9, -300.0..300.0f64, -300.0..300.0f64), 1..30)) {
        let children = vec![
            GroupChild::new("a", Point::new(0.1, 0.2), 40.0, 20.0),
            GroupChild::new("b", Point::new(0.6, 0.5), 60.0, 30.0),
        ];
        let mut g = GroupObject::new(Rect::new(0.0, 0.0, 300.0, 200.0), "g", SideMask::ALL, children, 4.0, 8.0, 3.0).unwrap();
        let anchors: Vec<_> = g.children().iter().map(|c| c.anchor).collect();
        for (node, dx, dy) in steps {
            g.move_node(&NodeDrag::new(node, dx, dy, Point::origin(), ButtonTag::Left)).unwrap();
            prop_assert!(g.contains_children(&g.frame(), 1e-9));
            let now: Vec<_> = g.children().iter().map(|c| c.anchor).collect();
            prop_assert_eq!(&now, &anchors);
        }
    }
}
