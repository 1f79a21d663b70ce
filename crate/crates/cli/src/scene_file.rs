//! Text scene format.
//!
//! ```text
//! moveable-scene 1
//! rectangle id=1 rect=0.000000,0.000000,100.000000,60.000000 resizing=any ...
//! plot id=2 area=... corner=... half=... min=... fill="none" range=none
//! +scale orientation=horizontal rect=... offset=...
//! +comment text="peak" parent=area center=... anchor=... size=... angle=...
//! ```
//!
//! One record per object, topmost first. Lines starting with `+` belong to
//! the object above them. Blank lines and `#` comments are ignored.

use moveable_core::geometry::Rect;
use moveable_core::objects::{
    ChatoyantPolygonObject, LoopObject, MoveRange, Moveable, ObjectError, RectangleObject, RegularPolygonObject,
    RingObject,
};
use moveable_core::plot::{CommentObject, PlotAssembly, ScaleObject};
use moveable_core::scene::{ObjectId, Scene, SceneObject};
use moveable_core::widgets::{ControlProxy, GroupChild, GroupObject};

use crate::error::{Error, Result};
use crate::names;
use crate::text::{num, point, points, quote, rect, Record};

pub const SCENE_HEADER: &str = "moveable-scene 1";

fn range(r: MoveRange<f64>) -> String {
    r.0.map_or_else(|| "none".to_string(), rect)
}

/// Record lines for one object.
pub fn object_lines(id: ObjectId, obj: &SceneObject<f64>) -> Vec<String> {
    match obj {
        SceneObject::Rectangle(o) => vec![format!(
            "rectangle id={id} rect={} resizing={} corner={} half={} min={} fill={} range={}",
            rect(o.rect()),
            names::resizing(o.resizing()),
            num(o.corner_radius()),
            num(o.half_width()),
            pair(o.min_size()),
            quote(o.fill()),
            range(o.range()),
        )],
        SceneObject::Loop(o) => vec![format!(
            "loop id={id} points={} node-radius={} half={} fill={} range={}",
            points(o.points()),
            num(o.node_radius()),
            num(o.half_width()),
            quote(o.fill()),
            range(o.range()),
        )],
        SceneObject::Regular(o) => vec![format!(
            "regular id={id} apexes={} center={} radius={} phase={} variant={} min-radius={} node-radius={} fill={} range={}",
            o.apex_count(),
            point(o.center()),
            num(o.radius()),
            num(o.phase()),
            names::variant(o.variant()),
            num(o.min_radius()),
            num(o.node_radius()),
            quote(o.fill()),
            range(o.range()),
        )],
        SceneObject::Chatoyant(o) => vec![format!(
            "chatoyant id={id} center={} apexes={} node-radius={} fill={} range={}",
            point(o.center()),
            points(o.apexes()),
            num(o.node_radius()),
            quote(o.fill()),
            range(o.range()),
        )],
        SceneObject::Ring(o) => vec![format!(
            "ring id={id} center={} outer={} inner={} node-radius={} gap={} fill={} range={}",
            point(o.center()),
            num(o.outer_radius()),
            num(o.inner_radius()),
            num(o.node_radius()),
            num(o.min_gap()),
            quote(o.fill()),
            range(o.range()),
        )],
        SceneObject::Group(o) => {
            let mut lines = vec![format!(
                "group id={id} frame={} title={} sides={} padding={} corner={} half={} range={}",
                rect(o.frame()),
                quote(o.title()),
                names::sides(o.resizable_sides()),
                num(o.padding()),
                num(o.corner_radius()),
                num(o.half_width()),
                range(o.range()),
            )];
            for c in o.children() {
                lines.push(format!(
                    "+child control={} anchor={} size={}",
                    quote(&c.control_id),
                    point(c.anchor),
                    pair((c.w, c.h))
                ));
            }
            lines
        }
        SceneObject::Control(o) => vec![format!(
            "control id={id} control={} bounds={} resizing={} moveable={} frame={} corner={} min={} range={}",
            quote(o.control_id()),
            rect(o.bounds()),
            names::resizing(o.resizing()),
            o.is_moveable(),
            num(o.frame_width()),
            num(o.corner_radius()),
            pair(o.min_size()),
            range(o.range()),
        )],
        SceneObject::Plot(p) => {
            let a = p.area();
            let mut lines = vec![format!(
                "plot id={id} area={} corner={} half={} min={} fill={} range={}",
                rect(a.rect()),
                num(a.corner_radius()),
                num(a.half_width()),
                pair(a.min_size()),
                quote(a.fill()),
                range(a.range()),
            )];
            for s in p.scales() {
                lines.push(format!(
                    "+scale orientation={} rect={} offset={}",
                    names::orientation(s.orientation()),
                    rect(s.rect()),
                    num(s.area_offset())
                ));
            }
            for c in p.comments() {
                lines.push(format!(
                    "+comment text={} parent={} center={} anchor={} size={} angle={}",
                    quote(c.text()),
                    names::parent(c.parent()),
                    point(c.center()),
                    point(c.anchor()),
                    pair(c.extent()),
                    num(c.angle())
                ));
            }
            lines
        }
    }
}

fn pair((a, b): (f64, f64)) -> String {
    format!("{},{}", num(a), num(b))
}

/// Object records in stacking order, topmost first.
pub fn scene_body(scene: &Scene) -> Vec<String> {
    scene.objects().into_iter().flat_map(|(id, o)| object_lines(id, o)).collect()
}

pub fn write_scene(scene: &Scene) -> String {
    let mut out = String::from(SCENE_HEADER);
    out.push('\n');
    for line in scene_body(scene) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn obj_err(e: ObjectError) -> String {
    format!("invalid geometry: {e}")
}

fn read_range(r: &mut Record) -> std::result::Result<MoveRange<f64>, String> {
    match r.opt_rect("range")? {
        None => Ok(MoveRange::unbounded()),
        Some(rect) => MoveRange::within(rect).map_err(obj_err),
    }
}

fn check_subs(kind: &str, subs: &[Record], allowed: &[&str]) -> std::result::Result<(), String> {
    match subs.iter().find(|s| !allowed.contains(&s.kind.as_str())) {
        Some(s) => Err(format!("`+{}` line not allowed under `{kind}`", s.kind)),
        None => Ok(()),
    }
}

/// Builds an object from its record and sub-records.
pub fn build_object(mut r: Record, subs: Vec<Record>) -> std::result::Result<SceneObject<f64>, String> {
    let kind = r.kind.clone();
    let obj = match kind.as_str() {
        "rectangle" => {
            check_subs(&kind, &subs, &[])?;
            let o = RectangleObject::with_min_size(
                r.rect("rect")?,
                names::parse_resizing(&r.str("resizing")?)?,
                r.num("corner")?,
                r.num("half")?,
                r.pair("min")?,
            )
            .map_err(obj_err)?;
            SceneObject::Rectangle(o.with_fill(r.str("fill")?).with_range(read_range(&mut r)?))
        }
        "loop" => {
            check_subs(&kind, &subs, &[])?;
            let o = LoopObject::new(r.points("points")?, r.num("node-radius")?, r.num("half")?).map_err(obj_err)?;
            SceneObject::Loop(o.with_fill(r.str("fill")?).with_range(read_range(&mut r)?))
        }
        "regular" => {
            check_subs(&kind, &subs, &[])?;
            let n = usize::try_from(r.uint("apexes")?).map_err(|_| "too many apexes")?;
            let (min_radius, node_radius) = (r.num("min-radius")?, r.num("node-radius")?);
            let o = RegularPolygonObject::new(
                n,
                r.point("center")?,
                r.num("radius")?,
                r.num("phase")?,
                names::parse_variant(&r.str("variant")?)?,
            )
            .and_then(|o| o.with_min_radius(min_radius))
            .and_then(|o| o.with_node_radius(node_radius))
            .map_err(obj_err)?;
            SceneObject::Regular(o.with_fill(r.str("fill")?).with_range(read_range(&mut r)?))
        }
        "chatoyant" => {
            check_subs(&kind, &subs, &[])?;
            let node_radius = r.num("node-radius")?;
            let o = ChatoyantPolygonObject::new(r.point("center")?, r.points("apexes")?)
                .and_then(|o| o.with_node_radius(node_radius))
                .map_err(obj_err)?;
            SceneObject::Chatoyant(o.with_fill(r.str("fill")?).with_range(read_range(&mut r)?))
        }
        "ring" => {
            check_subs(&kind, &subs, &[])?;
            let o = RingObject::with_min_gap(
                r.point("center")?,
                r.num("outer")?,
                r.num("inner")?,
                r.num("node-radius")?,
                r.num("gap")?,
            )
            .map_err(obj_err)?;
            SceneObject::Ring(o.with_fill(r.str("fill")?).with_range(read_range(&mut r)?))
        }
        "group" => {
            check_subs(&kind, &subs, &["child"])?;
            let mut children = Vec::new();
            for mut s in subs {
                let (w, h) = s.pair("size")?;
                children.push(GroupChild::new(s.str("control")?, s.point("anchor")?, w, h));
                s.finish()?;
            }
            let o = GroupObject::new(
                r.rect("frame")?,
                r.str("title")?,
                names::parse_sides(&r.str("sides")?)?,
                children,
                r.num("padding")?,
                r.num("corner")?,
                r.num("half")?,
            )
            .map_err(obj_err)?;
            SceneObject::Group(o.with_range(read_range(&mut r)?))
        }
        "control" => {
            check_subs(&kind, &subs, &[])?;
            let o = ControlProxy::with_min_size(
                r.str("control")?,
                r.rect("bounds")?,
                names::parse_resizing(&r.str("resizing")?)?,
                r.bool("moveable")?,
                r.num("frame")?,
                r.num("corner")?,
                r.pair("min")?,
            )
            .map_err(obj_err)?;
            SceneObject::Control(o.with_range(read_range(&mut r)?))
        }
        "plot" => {
            check_subs(&kind, &subs, &["scale", "comment"])?;
            let area = RectangleObject::with_min_size(
                r.rect("area")?,
                moveable_core::cover::Resizing::Any,
                r.num("corner")?,
                r.num("half")?,
                r.pair("min")?,
            )
            .map_err(obj_err)?
            .with_fill(r.str("fill")?)
            .with_range(read_range(&mut r)?);
            let mut scales = Vec::new();
            let mut comments = Vec::new();
            for mut s in subs {
                if s.kind == "scale" {
                    let o = names::parse_orientation(&s.str("orientation")?)?;
                    scales.push(ScaleObject::restore(s.rect("rect")?, o, s.num("offset")?).map_err(obj_err)?);
                } else {
                    comments.push(
                        CommentObject::restore(
                            s.str("text")?,
                            names::parse_parent(&s.str("parent")?)?,
                            s.point("center")?,
                            s.point("anchor")?,
                            s.pair("size")?,
                            s.num("angle")?,
                        )
                        .map_err(obj_err)?,
                    );
                }
                s.finish()?;
            }
            SceneObject::Plot(PlotAssembly::new(area, scales, comments).map_err(obj_err)?)
        }
        other => return Err(format!("unknown kind tag `{other}`")),
    };
    r.finish()?;
    Ok(obj)
}

struct Pending {
    line: usize,
    id: ObjectId,
    record: Record,
    subs: Vec<Record>,
}

fn flush(scene: &mut Scene, pending: Option<Pending>) -> Result<()> {
    let Some(p) = pending else { return Ok(()) };
    let obj = build_object(p.record, p.subs).map_err(|m| Error::scene(p.line, m))?;
    scene.add_with_id(p.id, obj).map_err(|_| Error::scene(p.line, format!("duplicate object id {}", p.id)))
}

/// Meaningful lines with their 1-based numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses scene records (no header) in stacking order.
pub(crate) fn parse_records<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Scene> {
    let mut scene = Scene::new();
    let mut pending: Option<Pending> = None;
    for (n, line) in lines {
        if let Some(sub) = line.strip_prefix('+') {
            let rec = Record::parse(sub).map_err(|m| Error::scene(n, m))?;
            match pending.as_mut() {
                Some(p) => p.subs.push(rec),
                None => return Err(Error::scene(n, "`+` line without an object above it")),
            }
            continue;
        }
        flush(&mut scene, pending.take())?;
        let mut record = Record::parse(line).map_err(|m| Error::scene(n, m))?;
        let id = record.uint("id").map_err(|m| Error::scene(n, m))?;
        let id = u32::try_from(id).map_err(|_| Error::scene(n, "object id too large"))?;
        pending = Some(Pending { line: n, id: ObjectId(id), record, subs: Vec::new() });
    }
    flush(&mut scene, pending)?;
    Ok(scene)
}

pub fn parse_scene(text: &str) -> Result<Scene> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, SCENE_HEADER)) => {}
        Some((n, other)) => return Err(Error::scene(n, format!("expected `{SCENE_HEADER}`, found `{other}`"))),
        None => return Err(Error::scene(1, "empty file")),
    }
    parse_records(lines)
}

/// Bounding box of every cover in the scene.
pub fn scene_bounds(scene: &Scene) -> Option<Rect<f64>> {
    scene
        .objects()
        .into_iter()
        .flat_map(|(_, o)| o.covers().into_iter().filter_map(|c| c.bounds()).collect::<Vec<_>>())
        .reduce(|a, b| a.union(&b))
}
