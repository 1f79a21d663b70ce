//! Deterministic replay of traces against a scene, with snapshots.

use moveable_core::cover::CursorTag;
use moveable_core::scene::Scene;

use crate::names;
use crate::scene_file::scene_body;
use crate::text::point;
use crate::trace::{EventKind, Trace, TraceEvent};

pub const SNAPSHOT_HEADER: &str = "snapshot 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Checkpoint {
    EveryEvent,
    End,
}

/// A scene being driven by pointer events, with the last sensed cursor.
#[derive(Debug, Clone)]
pub struct Player {
    pub scene: Scene,
    pub cursor: CursorTag,
}

impl Player {
    pub fn new(scene: Scene) -> Self {
        Self { scene, cursor: CursorTag::Arrow }
    }

    /// Applies one event; returns whether any geometry changed.
    pub fn apply(&mut self, e: &TraceEvent) -> bool {
        let pt = e.point();
        match e.kind {
            EventKind::Down(button) => {
                let caught = self.scene.catch(pt, button).unwrap_or(false);
                self.cursor = match self.scene.mover().drag() {
                    Some(d) if caught => d.cursor,
                    _ => self.scene.sense(pt),
                };
                false
            }
            EventKind::Move => {
                let r = self.scene.move_to(pt);
                self.cursor = r.cursor;
                r.moved
            }
            EventKind::Up => {
                self.scene.release();
                self.cursor = self.scene.sense(pt);
                false
            }
        }
    }

    /// One checkpoint block: stacking, drag state, cursor and all objects.
    pub fn checkpoint(&self, label: &str) -> String {
        let scene = &self.scene;
        let mut out = format!("checkpoint {label}\n");
        let stack: String = scene.order().iter().map(|id| format!(" {id}")).collect();
        out.push_str(&format!("stack{stack}\n"));
        match scene.mover().drag() {
            None => out.push_str("drag none\n"),
            Some(d) => out.push_str(&format!(
                "drag id={} part={} node={} button={} anchor={}\n",
                d.key.id,
                names::part(d.key.part),
                d.node,
                names::button(d.button),
                point(d.anchor)
            )),
        }
        out.push_str(&format!("cursor {}\n", names::cursor(self.cursor)));
        for line in scene_body(scene) {
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str("end\n");
        out
    }
}

fn kind_name(k: EventKind) -> &'static str {
    match k {
        EventKind::Down(_) => "down",
        EventKind::Move => "move",
        EventKind::Up => "up",
    }
}

/// Replays `trace` and returns the snapshot text. The trace must be valid.
pub fn replay(scene: Scene, trace: &Trace, checkpoint: Checkpoint) -> (Scene, String) {
    let mut player = Player::new(scene);
    let mut out = String::from(SNAPSHOT_HEADER);
    out.push('\n');
    for e in &trace.events {
        player.apply(e);
        if checkpoint == Checkpoint::EveryEvent {
            out.push_str(&player.checkpoint(&format!("seq={} kind={}", e.seq, kind_name(e.kind))));
        }
    }
    if checkpoint == Checkpoint::End {
        let seq = trace.events.last().map_or(0, |e| e.seq);
        out.push_str(&player.checkpoint(&format!("seq={seq} kind=final")));
    }
    (player.scene, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene_file::{parse_scene, write_scene};
    use crate::trace::parse_trace;

    const SCENE: &str = "moveable-scene 1\nrectangle id=1 rect=0,0,100,60 resizing=any corner=8 half=3 min=20,20 fill=\"none\" range=none\n";

    #[test]
    fn body_drag() {
        let trace = parse_trace("trace 1\n1 down left 50 30\n2 move 60 27\n3 up 60 27\n").unwrap();
        let (scene, snap) = replay(parse_scene(SCENE).unwrap(), &trace, Checkpoint::End);
        assert!(write_scene(&scene).contains("rect=10.000000,-3.000000,100.000000,60.000000"));
        assert!(snap.starts_with("snapshot 1\ncheckpoint seq=3 kind=final\nstack 1\ndrag none\ncursor size-all\n"));
        assert!(snap.ends_with("end\n"));
    }

    #[test]
    fn every_event_checkpoints() {
        let trace = parse_trace("trace 1\n1 down left 0 0\n2 move 5 5\n").unwrap();
        let (_, snap) = replay(parse_scene(SCENE).unwrap(), &trace, Checkpoint::EveryEvent);
        assert_eq!(snap.matches("checkpoint ").count(), 2);
        assert!(snap.contains("drag id=1 part=whole node=0 button=left anchor=5.000000,5.000000"));
        assert!(snap.contains("cursor size-nwse"));
    }

    #[test]
    fn empty_trace_and_empty_space() {
        let scene = parse_scene(SCENE).unwrap();
        let (_, snap) = replay(scene.clone(), &Trace::default(), Checkpoint::End);
        let body: String = write_scene(&scene).lines().skip(1).map(|l| format!("{l}\n")).collect();
        assert!(snap.contains(&body));
        let trace = parse_trace("trace 1\n1 down left 500 500\n2 move 600 600\n3 up 600 600\n").unwrap();
        let (after, _) = replay(scene.clone(), &trace, Checkpoint::End);
        assert_eq!(after, scene);
    }
}
