//! Pointer traces: `trace 1` followed by one `seq kind ...` line per event.
//!
//! ```text
//! trace 1
//! 1 down left 50.000000 30.000000
//! 2 move 60.000000 27.000000
//! 3 up 60.000000 27.000000
//! ```

use moveable_core::geometry::Point;
use moveable_core::objects::ButtonTag;

use crate::error::{Error, Result};
use crate::names;
use crate::scene_file::content_lines;
use crate::text::{num, parse_num};

pub const TRACE_HEADER: &str = "trace 1";

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EventKind {
    Down(ButtonTag),
    Move,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEvent {
    pub seq: u64,
    pub kind: EventKind,
    pub x: f64,
    pub y: f64,
}

impl TraceEvent {
    pub fn point(&self) -> Point<f64> {
        Point::new(self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Trace {
    pub events: Vec<TraceEvent>,
}

impl Trace {
    /// Checks sequence order and down/up alternation.
    pub fn validate(&self) -> std::result::Result<(), (usize, String)> {
        let mut down = false;
        let mut last: Option<u64> = None;
        for (i, e) in self.events.iter().enumerate() {
            if last.is_some_and(|l| e.seq <= l) {
                return Err((i, format!("sequence number {} does not increase", e.seq)));
            }
            last = Some(e.seq);
            match e.kind {
                EventKind::Down(_) if down => return Err((i, "down while a button is already down".into())),
                EventKind::Down(_) => down = true,
                EventKind::Up if !down => return Err((i, "up without a matching down".into())),
                EventKind::Up => down = false,
                EventKind::Move => {}
            }
        }
        Ok(())
    }
}

pub fn write_trace(trace: &Trace) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for e in &trace.events {
        let (x, y) = (num(e.x), num(e.y));
        let line = match e.kind {
            EventKind::Down(b) => format!("{} down {} {x} {y}", e.seq, names::button(b)),
            EventKind::Move => format!("{} move {x} {y}", e.seq),
            EventKind::Up => format!("{} up {x} {y}", e.seq),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn parse_event(line: &str) -> std::result::Result<TraceEvent, (Option<u64>, String)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let seq: u64 = tokens[0].parse().map_err(|_| (None, format!("bad sequence number `{}`", tokens[0])))?;
    let err = |m: String| (Some(seq), m);
    let (kind, coords) = match tokens.get(1).copied() {
        Some("down") => {
            let b = tokens.get(2).ok_or_else(|| err("down without a button".into()))?;
            (EventKind::Down(names::parse_button(b).map_err(err)?), &tokens[3..])
        }
        Some("move") => (EventKind::Move, &tokens[2..]),
        Some("up") => (EventKind::Up, &tokens[2..]),
        Some(other) => return Err(err(format!("unknown event kind `{other}`"))),
        None => return Err(err("missing event kind".into())),
    };
    if coords.len() != 2 {
        return Err(err(format!("expected x and y, found {} values", coords.len())));
    }
    let x = parse_num(coords[0]).map_err(err)?;
    let y = parse_num(coords[1]).map_err(err)?;
    Ok(TraceEvent { seq, kind, x, y })
}

pub fn parse_trace(text: &str) -> Result<Trace> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, TRACE_HEADER)) => {}
        Some((n, other)) => return Err(Error::trace(n, None, format!("expected `{TRACE_HEADER}`, found `{other}`"))),
        None => return Err(Error::trace(1, None, "empty file")),
    }
    let mut trace = Trace::default();
    let mut line_of = Vec::new();
    for (n, line) in lines {
        let e = parse_event(line).map_err(|(seq, m)| Error::trace(n, seq, m))?;
        trace.events.push(e);
        line_of.push(n);
    }
    trace.validate().map_err(|(i, m)| Error::trace(line_of[i], Some(trace.events[i].seq), m))?;
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "trace 1\n1 down left 50.000000 30.000000\n2 move 60.000000 27.000000\n3 up 60.000000 27.000000\n";
        let t = parse_trace(text).unwrap();
        assert_eq!(t.events.len(), 3);
        assert_eq!(t.events[0].kind, EventKind::Down(ButtonTag::Left));
        assert_eq!(write_trace(&t), text);
    }

    #[test]
    fn rejects_bad_traces() {
        let cases = [
            ("trace 1\n2 move 0 0\n1 move 0 0\n", "does not increase"),
            ("trace 1\n1 up 0 0\n", "without a matching down"),
            ("trace 1\n1 down left 0 0\n2 down right 0 0\n", "already down"),
            ("trace 1\n1 hover 0 0\n", "unknown event kind"),
            ("trace 1\n1 down middle 0 0\n", "unknown button"),
            ("trace 1\n1 move 0\n", "expected x and y"),
            ("trace 2\n", "expected `trace 1`"),
        ];
        for (text, needle) in cases {
            let e = parse_trace(text).unwrap_err().to_string();
            assert!(e.contains(needle), "{e}");
        }
        let e = parse_trace("trace 1\n1 move 0 0\n7 up 0 0\n").unwrap_err().to_string();
        assert!(e.contains("event 7") && e.contains("line 3"), "{e}");
    }
}
