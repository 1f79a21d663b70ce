//! Render lists and SVG output.

use std::fmt::Write as _;

use moveable_core::cover::{Cover, NodeShape};
use moveable_core::geometry::{Point, Rect};
use moveable_core::plot::PlotPart;
use moveable_core::scene::{Part, Scene, SceneObject};
use serde::Serialize;

use crate::names;
use crate::scene_file::scene_bounds;
use crate::text::num;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "shape", rename_all = "camelCase")]
pub enum Shape {
    Rect { x: f64, y: f64, w: f64, h: f64 },
    Polygon { points: Vec<[f64; 2]> },
    Ring { cx: f64, cy: f64, outer: f64, inner: f64 },
    Circle { cx: f64, cy: f64, r: f64 },
    Capsule { x1: f64, y1: f64, x2: f64, y2: f64, r: f64 },
}

/// One drawable: an object outline or a cover node outline.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Item {
    pub object: u32,
    pub part: String,
    pub kind: &'static str,
    pub fill: String,
    /// Set on cover nodes only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<usize>,
    pub transparent: bool,
    #[serde(flatten)]
    pub shape: Shape,
}

fn rect_shape(r: Rect<f64>) -> Shape {
    Shape::Rect { x: r.x, y: r.y, w: r.w, h: r.h }
}

fn poly(points: &[Point<f64>]) -> Shape {
    Shape::Polygon { points: points.iter().map(|p| [p.x, p.y]).collect() }
}

fn node_shape(shape: &NodeShape<f64>) -> Shape {
    match shape {
        NodeShape::Circle { center, radius } => Shape::Circle { cx: center.x, cy: center.y, r: *radius },
        NodeShape::Polygon { apexes } => poly(apexes),
        NodeShape::Strip { p1, p2, radius } => Shape::Capsule { x1: p1.x, y1: p1.y, x2: p2.x, y2: p2.y, r: *radius },
    }
}

/// Object shapes for one registered part, with their fill.
fn part_shapes(obj: &SceneObject<f64>, part: Part) -> Vec<(Shape, String)> {
    let none = || "none".to_string();
    match (obj, part) {
        (SceneObject::Rectangle(o), _) => vec![(rect_shape(o.rect()), o.fill().to_string())],
        (SceneObject::Loop(o), _) => vec![(poly(o.points()), o.fill().to_string())],
        (SceneObject::Regular(o), _) => vec![(poly(&o.apexes()), o.fill().to_string())],
        (SceneObject::Chatoyant(o), _) => vec![(poly(o.apexes()), o.fill().to_string())],
        (SceneObject::Ring(o), _) => vec![(
            Shape::Ring { cx: o.center().x, cy: o.center().y, outer: o.outer_radius(), inner: o.inner_radius() },
            o.fill().to_string(),
        )],
        (SceneObject::Group(o), _) => vec![(rect_shape(o.frame()), none())],
        (SceneObject::Control(o), _) => vec![(rect_shape(o.bounds()), none())],
        (SceneObject::Plot(p), Part::Plot(pp)) => match pp {
            PlotPart::Area => vec![(rect_shape(p.area().rect()), p.area().fill().to_string())],
            PlotPart::Scale(i) => p.scales().get(i).map(|s| (rect_shape(s.rect()), none())).into_iter().collect(),
            PlotPart::Comment(i) => p.comments().get(i).map(|c| (poly(&c.corners()), none())).into_iter().collect(),
        },
        (SceneObject::Plot(_), Part::Whole) => Vec::new(),
    }
}

/// Items bottom-to-top. Each part's node outlines follow its shapes.
pub fn render_list(scene: &Scene, show_covers: bool) -> Vec<Item> {
    let mut items = Vec::new();
    for key in scene.mover().entries().iter().rev() {
        let Some(obj) = scene.get(key.id) else { continue };
        let part = names::part(key.part);
        for (shape, fill) in part_shapes(obj, key.part) {
            items.push(Item {
                object: key.id.0,
                part: part.clone(),
                kind: obj.kind(),
                fill,
                node: None,
                transparent: false,
                shape,
            });
        }
        if show_covers {
            let cover: Option<&Cover<f64>> = obj.cover(key.part);
            for (i, n) in cover.map(|c| c.nodes()).unwrap_or_default().iter().enumerate() {
                items.push(Item {
                    object: key.id.0,
                    part: part.clone(),
                    kind: obj.kind(),
                    fill: "none".into(),
                    node: Some(i),
                    transparent: n.transparent,
                    shape: node_shape(&n.shape),
                });
            }
        }
    }
    items
}

fn attr(s: &str) -> String {
    s.replace('&', "&amp;").replace('"', "&quot;").replace('<', "&lt;").replace('>', "&gt;")
}

fn points_attr(points: &[[f64; 2]]) -> String {
    points.iter().map(|[x, y]| format!("{},{}", num(*x), num(*y))).collect::<Vec<_>>().join(" ")
}

fn circle_path(cx: f64, cy: f64, r: f64) -> String {
    format!(
        "M {} {} A {r} {r} 0 1 0 {} {} A {r} {r} 0 1 0 {} {} Z",
        num(cx + r),
        num(cy),
        num(cx - r),
        num(cy),
        num(cx + r),
        num(cy),
        r = num(r)
    )
}

fn capsule_path(a: Point<f64>, b: Point<f64>, r: f64) -> String {
    let d = b - a;
    let len = d.length();
    if len == 0.0 {
        return circle_path(a.x, a.y, r);
    }
    let n = Point::new(-d.y / len, d.x / len) * r;
    let (p1, p2, p3, p4) = (a + n, b + n, b - n, a - n);
    format!(
        "M {} {} L {} {} A {r} {r} 0 0 0 {} {} L {} {} A {r} {r} 0 0 0 {} {} Z",
        num(p1.x),
        num(p1.y),
        num(p2.x),
        num(p2.y),
        num(p3.x),
        num(p3.y),
        num(p4.x),
        num(p4.y),
        num(p1.x),
        num(p1.y),
        r = num(r)
    )
}

fn element(item: &Item) -> String {
    let is_node = item.node.is_some();
    let class = if is_node { "node" } else { "object" };
    let mut style = if is_node {
        String::from(r#"fill="none" stroke="red" stroke-width="1""#)
    } else {
        format!(r#"fill="{}" stroke="black" stroke-width="1""#, attr(&item.fill))
    };
    if item.transparent {
        style.push_str(r#" stroke-dasharray="3 2""#);
    }
    let mut data = format!(r#"data-id="{}" data-part="{}""#, item.object, attr(&item.part));
    if let Some(i) = item.node {
        let _ = write!(data, r#" data-node="{i}""#);
    }
    let head = format!(r#"class="{class}" {data}"#);
    match &item.shape {
        Shape::Rect { x, y, w, h } => {
            format!(
                r#"<rect {head} x="{}" y="{}" width="{}" height="{}" {style}/>"#,
                num(*x),
                num(*y),
                num(*w),
                num(*h)
            )
        }
        Shape::Polygon { points } => format!(r#"<polygon {head} points="{}" {style}/>"#, points_attr(points)),
        Shape::Circle { cx, cy, r } => {
            format!(r#"<circle {head} cx="{}" cy="{}" r="{}" {style}/>"#, num(*cx), num(*cy), num(*r))
        }
        Shape::Ring { cx, cy, outer, inner } => format!(
            r#"<path {head} fill-rule="evenodd" d="{} {}" {style}/>"#,
            circle_path(*cx, *cy, *outer),
            circle_path(*cx, *cy, *inner)
        ),
        Shape::Capsule { x1, y1, x2, y2, r } => {
            format!(r#"<path {head} d="{}" {style}/>"#, capsule_path(Point::new(*x1, *y1), Point::new(*x2, *y2), *r))
        }
    }
}

/// Standalone SVG document; objects are drawn bottom-to-top.
pub fn render_svg(scene: &Scene, show_covers: bool) -> String {
    let view = scene_bounds(scene)
        .map(|b| Rect::new(b.x - 10.0, b.y - 10.0, b.w + 20.0, b.h + 20.0))
        .unwrap_or(Rect::new(0.0, 0.0, 100.0, 100.0));
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">\n",
        num(view.x),
        num(view.y),
        num(view.w),
        num(view.h),
        num(view.w),
        num(view.h)
    );
    for item in render_list(scene, show_covers) {
        out.push_str("  ");
        out.push_str(&element(&item));
        out.push('\n');
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene_file::parse_scene;

    const RECT: &str = "moveable-scene 1\nrectangle id=1 rect=0,0,100,60 resizing=any corner=8 half=3 min=20,20 fill=\"none\" range=none\n";

    #[test]
    fn element_counts() {
        let scene = parse_scene(RECT).unwrap();
        let off = render_svg(&scene, false);
        assert_eq!(off.matches("class=\"object\"").count(), 1);
        assert_eq!(off.matches("class=\"node\"").count(), 0);
        let on = render_svg(&scene, true);
        assert_eq!(on.matches("class=\"object\"").count(), 1);
        assert_eq!(on.matches("class=\"node\"").count(), 9);
    }

    #[test]
    fn empty_scene_is_valid_svg() {
        let svg = render_svg(&Scene::new(), true);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("class="));
    }

    #[test]
    fn deterministic() {
        let scene = parse_scene(RECT).unwrap();
        assert_eq!(render_svg(&scene, true), render_svg(&scene, true));
    }
}
