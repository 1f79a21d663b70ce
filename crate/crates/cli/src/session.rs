//! JSON command/frame protocol for interactive front ends.
//!
//! Each [`UiCommand`] is applied to the engine and answered with a
//! [`UiFrame`]. Pointer commands are recorded so a session can be exported
//! as a trace and replayed headlessly.

use moveable_core::cover::{CursorTag, Resizing, SideMask};
use moveable_core::geometry::{Point, Rect};
use moveable_core::mover::Restack;
use moveable_core::objects::{
    ButtonTag, ChatoyantPolygonObject, LoopObject, PolygonVariant, RectangleObject, RegularPolygonObject, RingObject,
};
use moveable_core::plot::{CommentObject, CommentParent, Orientation, PlotAssembly, ScaleObject};
use moveable_core::scene::{ObjectId, Scene, SceneObject};
use moveable_core::widgets::{ControlProxy, GroupChild, GroupObject};
use serde::{Deserialize, Serialize};

use crate::names;
use crate::render::{render_list, Item};
use crate::replay::Player;
use crate::scene_file::{build_object, parse_scene, write_scene};
use crate::text::Record;
use crate::trace::{write_trace, EventKind, Trace, TraceEvent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Button {
    Left,
    Right,
}

impl From<Button> for ButtonTag {
    fn from(b: Button) -> Self {
        match b {
            Button::Left => ButtonTag::Left,
            Button::Right => ButtonTag::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StackTarget {
    Top,
    Bottom,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum UiCommand {
    PointerDown {
        button: Button,
        x: f64,
        y: f64,
    },
    PointerMove {
        x: f64,
        y: f64,
    },
    PointerUp {
        x: f64,
        y: f64,
    },
    /// `params`, when given, is a scene record body (`key=value ...`) for `kind`.
    AddObject {
        kind: String,
        #[serde(default)]
        params: Option<String>,
    },
    Restack {
        id: u32,
        to: StackTarget,
    },
    Delete {
        id: u32,
    },
    ToggleCovers,
    SaveScene,
    LoadScene {
        payload: String,
    },
    ExportTrace,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct UiFrame {
    /// Object shapes, bottom to top.
    pub shapes: Vec<Item>,
    /// Cover node outlines; empty while covers are hidden.
    pub nodes: Vec<Item>,
    pub cursor: &'static str,
    /// Whether anything visible changed since the previous frame.
    pub repaint: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub added: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scene: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub struct Session {
    player: Player,
    show_covers: bool,
    button_down: bool,
    recorded: Trace,
    initial: String,
}

impl Session {
    pub fn new(scene: Scene) -> Self {
        let initial = write_scene(&scene);
        Self { player: Player::new(scene), show_covers: false, button_down: false, recorded: Trace::default(), initial }
    }

    pub fn scene(&self) -> &Scene {
        &self.player.scene
    }

    /// Pointer events applied so far, as a trace against the scene the
    /// recording started from.
    pub fn recorded(&self) -> &Trace {
        &self.recorded
    }

    /// The scene file the current recording starts from.
    pub fn recording_base(&self) -> &str {
        &self.initial
    }

    fn pointer(&mut self, kind: EventKind, x: f64, y: f64) -> bool {
        let seq = self.recorded.events.last().map_or(1, |e| e.seq + 1);
        let e = TraceEvent { seq, kind, x, y };
        self.recorded.events.push(e);
        self.player.apply(&e)
    }

    fn restart_recording(&mut self) {
        self.initial = write_scene(&self.player.scene);
        self.recorded = Trace::default();
    }

    pub fn frame(&self, repaint: bool) -> UiFrame {
        let (nodes, shapes) =
            render_list(&self.player.scene, self.show_covers).into_iter().partition(|i| i.node.is_some());
        UiFrame {
            shapes,
            nodes,
            cursor: names::cursor(self.player.cursor),
            repaint,
            added: None,
            scene: None,
            trace: None,
            error: None,
        }
    }

    pub fn handle(&mut self, cmd: UiCommand) -> UiFrame {
        let cursor_before = self.player.cursor;
        let mut extra: (Option<u32>, Option<String>, Option<String>) = (None, None, None);
        let mut error = None;
        let changed = match cmd {
            UiCommand::PointerDown { button, x, y } => {
                if self.button_down {
                    self.pointer(EventKind::Up, x, y);
                }
                self.button_down = true;
                self.pointer(EventKind::Down(button.into()), x, y)
            }
            UiCommand::PointerMove { x, y } => self.pointer(EventKind::Move, x, y),
            UiCommand::PointerUp { x, y } => {
                if self.button_down {
                    self.button_down = false;
                    self.pointer(EventKind::Up, x, y);
                }
                false
            }
            UiCommand::AddObject { kind, params } => match make_object(&kind, params.as_deref()) {
                Ok(obj) => {
                    let id = self.player.scene.add_top(obj);
                    extra.0 = Some(id.0);
                    self.restart_recording();
                    true
                }
                Err(e) => {
                    error = Some(e);
                    false
                }
            },
            UiCommand::Restack { id, to } => {
                let to = match to {
                    StackTarget::Top => Restack::Top,
                    StackTarget::Bottom => Restack::Bottom,
                };
                match self.player.scene.restack(ObjectId(id), to) {
                    Ok(()) => {
                        self.restart_recording();
                        true
                    }
                    Err(e) => {
                        error = Some(e.to_string());
                        false
                    }
                }
            }
            UiCommand::Delete { id } => match self.player.scene.remove(ObjectId(id)) {
                Ok(_) => {
                    self.restart_recording();
                    true
                }
                Err(e) => {
                    error = Some(e.to_string());
                    false
                }
            },
            UiCommand::ToggleCovers => {
                self.show_covers = !self.show_covers;
                true
            }
            UiCommand::SaveScene => {
                extra.1 = Some(write_scene(&self.player.scene));
                false
            }
            UiCommand::LoadScene { payload } => match parse_scene(&payload) {
                Ok(scene) => {
                    self.player = Player::new(scene);
                    self.button_down = false;
                    self.restart_recording();
                    true
                }
                Err(e) => {
                    error = Some(e.to_string());
                    false
                }
            },
            UiCommand::ExportTrace => {
                extra.2 = Some(write_trace(&self.recorded));
                false
            }
        };
        let mut frame = self.frame(changed || self.player.cursor != cursor_before);
        (frame.added, frame.scene, frame.trace) = extra;
        frame.error = error;
        frame
    }

    /// Parses one JSON command and answers with one JSON frame.
    pub fn handle_json(&mut self, line: &str) -> String {
        let frame = match serde_json::from_str::<UiCommand>(line) {
            Ok(cmd) => self.handle(cmd),
            Err(e) => {
                let mut f = self.frame(false);
                f.error = Some(format!("bad command: {e}"));
                f
            }
        };
        serde_json::to_string(&frame).expect("frames always serialize")
    }
}

/// New object of `kind`, from palette defaults or from a record body.
pub fn make_object(kind: &str, params: Option<&str>) -> Result<SceneObject<f64>, String> {
    if let Some(params) = params {
        let mut lines = params.lines().map(str::trim).filter(|l| !l.is_empty());
        let head = lines.next().unwrap_or("");
        let record = Record::parse(&format!("{kind} {head}"))?;
        let subs = lines
            .map(|l| Record::parse(l.strip_prefix('+').ok_or_else(|| format!("expected a `+` line, found `{l}`"))?))
            .collect::<Result<Vec<_>, _>>()?;
        return build_object(record, subs);
    }
    palette_object(kind).ok_or_else(|| format!("unknown kind `{kind}`"))
}

/// Default object for each palette entry.
pub fn palette_object(kind: &str) -> Option<SceneObject<f64>> {
    let origin = Point::new(40.0, 40.0);
    let rect = |resizing| {
        RectangleObject::new(Rect::new(40.0, 40.0, 160.0, 100.0), resizing, 8.0, 3.0)
            .map(|o| SceneObject::Rectangle(o.with_fill("#cfe2f3")))
            .ok()
    };
    let regular = |variant| {
        RegularPolygonObject::new(6, Point::new(120.0, 120.0), 70.0, 0.0, variant)
            .map(|o| SceneObject::Regular(o.with_fill("#d9ead3")))
            .ok()
    };
    match kind {
        "rectangle" | "rectangle-any" => rect(Resizing::Any),
        "rectangle-ns" => rect(Resizing::NS),
        "rectangle-we" => rect(Resizing::WE),
        "rectangle-none" => rect(Resizing::None),
        "loop" => {
            let pts = [(0.0, 0.0), (120.0, 20.0), (160.0, 110.0), (60.0, 150.0), (-20.0, 80.0)]
                .map(|(x, y)| origin.translated(x, y))
                .to_vec();
            LoopObject::new(pts, 5.0, 3.0).map(|o| SceneObject::Loop(o.with_fill("#fff2cc"))).ok()
        }
        "regular" | "regular-by-apex" => regular(PolygonVariant::ByApex),
        "regular-by-border" => regular(PolygonVariant::ByBorder),
        "regular-fixed" => regular(PolygonVariant::Fixed),
        "chatoyant" => ChatoyantPolygonObject::regular(5, Point::new(120.0, 120.0), 80.0, 0.3)
            .map(|o| SceneObject::Chatoyant(o.with_fill("#f4cccc")))
            .ok(),
        "ring" => RingObject::new(Point::new(130.0, 130.0), 90.0, 45.0, 5.0)
            .map(|o| SceneObject::Ring(o.with_fill("#d0e0e3")))
            .ok(),
        "group" => GroupObject::new(
            Rect::new(40.0, 40.0, 220.0, 140.0),
            "Group",
            SideMask::ALL,
            vec![
                GroupChild::new("first", Point::new(0.1, 0.2), 80.0, 24.0),
                GroupChild::new("second", Point::new(0.1, 0.6), 80.0, 24.0),
            ],
            4.0,
            8.0,
            3.0,
        )
        .map(SceneObject::Group)
        .ok(),
        "control" => ControlProxy::new("control", Rect::new(40.0, 40.0, 120.0, 40.0), Resizing::Any, true, 6.0, 5.0)
            .map(SceneObject::Control)
            .ok(),
        "plot" => {
            let area = RectangleObject::new(Rect::new(80.0, 40.0, 300.0, 200.0), Resizing::Any, 8.0, 3.0).ok()?;
            let r = area.rect();
            let bottom = ScaleObject::new(&r, Orientation::Horizontal, -10.0, 30.0).ok()?;
            let left = ScaleObject::new(&r, Orientation::Vertical, -40.0, 50.0).ok()?;
            let comments = vec![
                CommentObject::new("peak", CommentParent::Area, &r, Point::new(0.3, 0.2), (60.0, 16.0), 0.0).ok()?,
                CommentObject::new(
                    "time",
                    CommentParent::Scale(0),
                    &bottom.rect(),
                    Point::new(0.5, 0.6),
                    (40.0, 12.0),
                    0.0,
                )
                .ok()?,
            ];
            PlotAssembly::new(area, vec![bottom, left], comments).map(SceneObject::Plot).ok()
        }
        _ => None,
    }
}

/// Every palette entry name.
pub const PALETTE: [&str; 13] = [
    "rectangle-any",
    "rectangle-ns",
    "rectangle-we",
    "rectangle-none",
    "loop",
    "regular-by-apex",
    "regular-by-border",
    "regular-fixed",
    "chatoyant",
    "ring",
    "group",
    "control",
    "plot",
];

/// Cursor names a front end must map onto native cursors.
pub fn cursor_names() -> [&'static str; 7] {
    CursorTag::ALL.map(names::cursor)
}
