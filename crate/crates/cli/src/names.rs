//! Stable text names for enum values in files and messages.

use moveable_core::cover::{CursorTag, Resizing, SideMask};
use moveable_core::objects::{ButtonTag, PolygonVariant};
use moveable_core::plot::{CommentParent, Orientation, PlotPart};
use moveable_core::scene::Part;

fn unknown(what: &str, v: &str) -> String {
    format!("unknown {what} `{v}`")
}

pub fn resizing(r: Resizing) -> &'static str {
    match r {
        Resizing::None => "none",
        Resizing::NS => "ns",
        Resizing::WE => "we",
        Resizing::Any => "any",
    }
}

pub fn parse_resizing(s: &str) -> Result<Resizing, String> {
    Ok(match s {
        "none" => Resizing::None,
        "ns" => Resizing::NS,
        "we" => Resizing::WE,
        "any" => Resizing::Any,
        _ => return Err(unknown("resizing", s)),
    })
}

pub fn variant(v: PolygonVariant) -> &'static str {
    match v {
        PolygonVariant::Fixed => "fixed",
        PolygonVariant::ByApex => "by-apex",
        PolygonVariant::ByBorder => "by-border",
    }
}

pub fn parse_variant(s: &str) -> Result<PolygonVariant, String> {
    Ok(match s {
        "fixed" => PolygonVariant::Fixed,
        "by-apex" => PolygonVariant::ByApex,
        "by-border" => PolygonVariant::ByBorder,
        _ => return Err(unknown("polygon variant", s)),
    })
}

pub fn orientation(o: Orientation) -> &'static str {
    match o {
        Orientation::Horizontal => "horizontal",
        Orientation::Vertical => "vertical",
    }
}

pub fn parse_orientation(s: &str) -> Result<Orientation, String> {
    Ok(match s {
        "horizontal" => Orientation::Horizontal,
        "vertical" => Orientation::Vertical,
        _ => return Err(unknown("orientation", s)),
    })
}

pub fn parent(p: CommentParent) -> String {
    match p {
        CommentParent::Area => "area".into(),
        CommentParent::Scale(i) => format!("scale:{i}"),
    }
}

fn indexed(s: &str, prefix: &str) -> Option<Result<usize, String>> {
    let rest = s.strip_prefix(prefix)?.strip_prefix(':')?;
    Some(rest.parse().map_err(|_| format!("bad index in `{s}`")))
}

pub fn parse_parent(s: &str) -> Result<CommentParent, String> {
    if s == "area" {
        return Ok(CommentParent::Area);
    }
    match indexed(s, "scale") {
        Some(i) => Ok(CommentParent::Scale(i?)),
        None => Err(unknown("comment parent", s)),
    }
}

pub fn sides(m: SideMask) -> String {
    let s: String = [(m.top, 't'), (m.bottom, 'b'), (m.left, 'l'), (m.right, 'r')]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, c)| *c)
        .collect();
    if s.is_empty() {
        "none".into()
    } else {
        s
    }
}

pub fn parse_sides(s: &str) -> Result<SideMask, String> {
    let mut m = SideMask::NONE;
    if s == "none" {
        return Ok(m);
    }
    for c in s.chars() {
        let slot = match c {
            't' => &mut m.top,
            'b' => &mut m.bottom,
            'l' => &mut m.left,
            'r' => &mut m.right,
            _ => return Err(unknown("side set", s)),
        };
        if *slot {
            return Err(format!("repeated side in `{s}`"));
        }
        *slot = true;
    }
    Ok(m)
}

pub fn part(p: Part) -> String {
    match p {
        Part::Whole => "whole".into(),
        Part::Plot(PlotPart::Area) => "area".into(),
        Part::Plot(PlotPart::Scale(i)) => format!("scale:{i}"),
        Part::Plot(PlotPart::Comment(i)) => format!("comment:{i}"),
    }
}

pub fn button(b: ButtonTag) -> &'static str {
    match b {
        ButtonTag::Left => "left",
        ButtonTag::Right => "right",
    }
}

pub fn parse_button(s: &str) -> Result<ButtonTag, String> {
    Ok(match s {
        "left" => ButtonTag::Left,
        "right" => ButtonTag::Right,
        _ => return Err(unknown("button", s)),
    })
}

pub fn cursor(c: CursorTag) -> &'static str {
    match c {
        CursorTag::Arrow => "arrow",
        CursorTag::Hand => "hand",
        CursorTag::SizeNS => "size-ns",
        CursorTag::SizeWE => "size-we",
        CursorTag::SizeNWSE => "size-nwse",
        CursorTag::SizeNESW => "size-nesw",
        CursorTag::SizeAll => "size-all",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for r in [Resizing::None, Resizing::NS, Resizing::WE, Resizing::Any] {
            assert_eq!(parse_resizing(resizing(r)), Ok(r));
        }
        for v in [PolygonVariant::Fixed, PolygonVariant::ByApex, PolygonVariant::ByBorder] {
            assert_eq!(parse_variant(variant(v)), Ok(v));
        }
        for p in [CommentParent::Area, CommentParent::Scale(3)] {
            assert_eq!(parse_parent(&parent(p)), Ok(p));
        }
        let lr = SideMask { left: true, right: true, ..SideMask::NONE };
        for m in [SideMask::NONE, SideMask::ALL, lr] {
            assert_eq!(parse_sides(&sides(m)), Ok(m));
        }
        assert!(parse_sides("tt").is_err());
        assert!(parse_parent("scale:x").is_err());
        let distinct: std::collections::BTreeSet<_> = CursorTag::ALL.iter().map(|c| cursor(*c)).collect();
        assert_eq!(distinct.len(), 7);
    }
}
