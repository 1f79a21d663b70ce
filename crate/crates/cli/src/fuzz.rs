//! Seeded random pointer sessions with invariant checks after every event.

use std::fmt::Write as _;

use moveable_core::cover::{Hit, MovementType};
use moveable_core::geometry::{Point, Rect};
use moveable_core::objects::ButtonTag;
use moveable_core::plot::Orientation;
use moveable_core::scene::{ObjectId, Scene, SceneObject};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::replay::Player;
use crate::scene_file::scene_bounds;
use crate::text::quote;
use crate::trace::{EventKind, Trace, TraceEvent};

/// Border samples per ring circle.
const RING_SAMPLES: u32 = 256;
const RELATIVE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub seq: u64,
    pub invariant: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzReport {
    pub seed: u64,
    pub events: usize,
    pub violations: Vec<Violation>,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("fuzz seed={} events={} violations={}\n", self.seed, self.events, self.violations.len());
        for v in &self.violations {
            let _ = writeln!(
                out,
                "violation seq={} invariant={} reproduce=\"--seed {} --events {}\" detail={}",
                v.seq,
                v.invariant,
                self.seed,
                v.seq,
                quote(&v.detail)
            );
        }
        out
    }
}

/// Three decimals, so traces written at six decimals replay bit-exactly.
fn snap(v: f64) -> f64 {
    (v * 1000.0).round() / 1000.0
}

fn uniform(rng: &mut ChaCha8Rng, r: &Rect<f64>) -> Point<f64> {
    Point::new(rng.random_range(r.left()..=r.right()), rng.random_range(r.top()..=r.bottom()))
}

/// A point inside some node most of the time, anywhere in `area` otherwise.
fn biased_point(rng: &mut ChaCha8Rng, scene: &Scene, area: &Rect<f64>) -> Point<f64> {
    let entries = scene.mover().entries();
    if !entries.is_empty() && rng.random_bool(0.85) {
        let key = entries[rng.random_range(0..entries.len())];
        if let Some(cover) = scene.get(key.id).and_then(|o| o.cover(key.part)) {
            if !cover.is_empty() {
                let node = &cover.nodes()[rng.random_range(0..cover.len())];
                let b = node.shape.bounds();
                for _ in 0..4 {
                    let p = uniform(rng, &b);
                    if node.contains(p) {
                        return p;
                    }
                }
                return b.center();
            }
        }
    }
    uniform(rng, area)
}

fn next_event(
    rng: &mut ChaCha8Rng,
    scene: &Scene,
    area: &Rect<f64>,
    last: Point<f64>,
    down: bool,
    seq: u64,
) -> TraceEvent {
    let (kind, p) = if !down {
        if rng.random_bool(0.6) {
            let button = if rng.random_bool(0.8) { ButtonTag::Left } else { ButtonTag::Right };
            (EventKind::Down(button), biased_point(rng, scene, area))
        } else {
            (EventKind::Move, biased_point(rng, scene, area))
        }
    } else if rng.random_bool(0.15) {
        (EventKind::Up, last)
    } else if rng.random_bool(0.1) {
        let wide = Rect::new(area.x - area.w / 2.0, area.y - area.h / 2.0, area.w * 2.0, area.h * 2.0);
        (EventKind::Move, uniform(rng, &wide))
    } else {
        (EventKind::Move, last.translated(rng.random_range(-25.0..25.0), rng.random_range(-25.0..25.0)))
    };
    TraceEvent { seq, kind, x: snap(p.x), y: snap(p.y) }
}

/// Scene-wide invariants that must hold after every event.
pub fn check_scene(scene: &Scene) -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    let idle = !scene.mover().is_dragging();
    for (id, obj) in scene.objects() {
        check_object(id, obj, idle, &mut out);
    }
    out
}

fn check_object(id: ObjectId, obj: &SceneObject<f64>, idle: bool, out: &mut Vec<(&'static str, String)>) {
    if !obj.covers_fresh() {
        out.push(("cover-freshness", format!("object {id} holds a stale cover")));
    }
    let finite = obj
        .covers()
        .iter()
        .all(|c| c.bounds().is_none_or(|b| b.origin().is_finite() && b.w.is_finite() && b.h.is_finite()));
    if !finite {
        out.push(("finite-geometry", format!("object {id} has non-finite coordinates")));
    }
    match obj {
        SceneObject::Ring(r) => {
            if r.inner_radius() + r.min_gap() > r.outer_radius() {
                out.push((
                    "ring-order",
                    format!(
                        "object {id}: inner {} + gap {} > outer {}",
                        r.inner_radius(),
                        r.min_gap(),
                        r.outer_radius()
                    ),
                ));
            }
            if idle {
                let cover = obj.cover(moveable_core::scene::Part::Whole).expect("ring cover");
                for k in 0..RING_SAMPLES {
                    let a = std::f64::consts::TAU * f64::from(k) / f64::from(RING_SAMPLES);
                    for radius in [r.outer_radius(), r.inner_radius()] {
                        let p = r.center() + Point::polar(a) * radius;
                        if cover.hit_index(p) == Hit::Miss {
                            out.push(("ring-border", format!("object {id}: border point {p:?} not covered")));
                            return;
                        }
                    }
                }
            }
        }
        SceneObject::Group(g) => {
            if !g.contains_children(&g.frame(), RELATIVE_TOL * g.frame().w.abs().max(g.frame().h.abs()).max(1.0)) {
                out.push(("group-containment", format!("object {id}: a child leaves frame {:?}", g.frame())));
            }
        }
        SceneObject::Regular(p) => {
            let r = p.radius();
            let step = std::f64::consts::TAU / p.apex_count() as f64;
            for (k, a) in p.apexes().iter().enumerate() {
                let d = *a - p.center();
                let turn = (d.angle() - p.phase() - step * k as f64).rem_euclid(std::f64::consts::TAU);
                if (d.length() - r).abs() > RELATIVE_TOL * r || turn.min(std::f64::consts::TAU - turn) > RELATIVE_TOL {
                    out.push(("regularity", format!("object {id}: apex {k} off the regular layout")));
                    break;
                }
            }
        }
        SceneObject::Plot(p) => {
            let area = p.area().rect();
            for (i, s) in p.scales().iter().enumerate() {
                let side = match s.orientation() {
                    Orientation::Horizontal => area.w,
                    Orientation::Vertical => area.h,
                };
                if s.length() != side {
                    out.push(("scale-length", format!("object {id}: scale {i} length {} != {side}", s.length())));
                }
            }
            for (i, c) in p.comments().iter().enumerate() {
                if p.parent_frame(c.parent()).is_none() {
                    out.push(("comment-parent", format!("object {id}: comment {i} has no parent")));
                }
            }
        }
        _ => {}
    }
}

/// Stored anchor and the anchor recovered from the center, per comment.
fn comment_anchors(scene: &Scene) -> Vec<(ObjectId, usize, Point<f64>, Point<f64>)> {
    let mut out = Vec::new();
    for (id, obj) in scene.objects() {
        if let SceneObject::Plot(p) = obj {
            for (i, c) in p.comments().iter().enumerate() {
                if let Some(frame) = p.parent_frame(c.parent()) {
                    out.push((id, i, c.anchor(), frame.to_fraction(c.center())));
                }
            }
        }
    }
    out
}

/// Comments whose stored anchor did not change must keep their recovered position.
fn check_anchors(before: &[(ObjectId, usize, Point<f64>, Point<f64>)], scene: &Scene) -> Vec<(&'static str, String)> {
    let after = comment_anchors(scene);
    let mut out = Vec::new();
    for (id, i, stored, recovered) in before {
        let Some((_, _, s, r)) = after.iter().find(|(a, b, _, _)| a == id && b == i) else { continue };
        if s == stored && ((r.x - recovered.x).abs() > RELATIVE_TOL || (r.y - recovered.y).abs() > RELATIVE_TOL) {
            out.push(("relative-position", format!("object {id}: comment {i} drifted from its anchor")));
        }
    }
    out
}

/// Generates and plays `events` events; the trace depends only on the
/// scene, the seed and the count.
pub fn fuzz(scene: Scene, seed: u64, events: usize) -> (Trace, FuzzReport, Scene) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let area = scene_bounds(&scene)
        .map(|b| Rect::new(b.x - 40.0, b.y - 40.0, b.w + 80.0, b.h + 80.0))
        .unwrap_or(Rect::new(0.0, 0.0, 400.0, 400.0));
    let mut player = Player::new(scene);
    let mut trace = Trace::default();
    let mut violations = Vec::new();
    let mut last = area.center();
    let mut down = false;
    for seq in 1..=events as u64 {
        let e = next_event(&mut rng, &player.scene, &area, last, down, seq);
        last = e.point();
        down = match e.kind {
            EventKind::Down(_) => true,
            EventKind::Up => false,
            EventKind::Move => down,
        };
        let before = player.scene.mover().drag().copied();
        let anchors = comment_anchors(&player.scene);
        let moved = player.apply(&e);
        trace.events.push(e);
        let mut found = check_scene(&player.scene);
        found.extend(check_anchors(&anchors, &player.scene));
        if let (EventKind::Move, Some(b)) = (e.kind, before) {
            let after = player.scene.mover().drag().map(|d| d.anchor);
            let expect = if moved { e.point() } else { b.anchor };
            if after != Some(expect) {
                found.push(("anchor-stability", format!("anchor {after:?}, expected {expect:?}")));
            }
            if let Some(d) = player.scene.mover().last_dispatch() {
                let masked = match d.movement {
                    MovementType::NS => d.dx == 0.0,
                    MovementType::WE => d.dy == 0.0,
                    MovementType::None => d.dx == 0.0 && d.dy == 0.0,
                    MovementType::Any => true,
                };
                if !masked {
                    found.push(("masking", format!("{:?} node received ({}, {})", d.movement, d.dx, d.dy)));
                }
            }
        }
        violations.extend(found.into_iter().map(|(invariant, detail)| Violation { seq, invariant, detail }));
    }
    (trace, FuzzReport { seed, events, violations }, player.scene)
}
