//! Heterogeneous object table wired to a mover.

use crate::cover::{Cover, CursorTag};
use crate::geometry::Point;
use crate::mover::{MoveResult, Mover, MoverError, Released, Restack, Store};
use crate::objects::{
    ButtonTag, ChatoyantPolygonObject, LoopObject, MoveRange, Moveable, NodeDrag, ObjectError, RectangleObject,
    RegularPolygonObject, RingObject,
};
use crate::plot::{PlotAssembly, PlotPart};
use crate::widgets::{ControlProxy, GroupObject};
use crate::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub enum SceneObject<S> {
    Rectangle(RectangleObject<S>),
    Loop(LoopObject<S>),
    Regular(RegularPolygonObject<S>),
    Chatoyant(ChatoyantPolygonObject<S>),
    Ring(RingObject<S>),
    Group(GroupObject<S>),
    Control(ControlProxy<S>),
    Plot(PlotAssembly<S>),
}

/// Which registered piece of an object a key refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Whole,
    Plot(PlotPart),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId(pub u32);

impl core::fmt::Display for ObjectId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SceneKey {
    pub id: ObjectId,
    pub part: Part,
}

impl<S: Scalar> SceneObject<S> {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Rectangle(_) => "rectangle",
            Self::Loop(_) => "loop",
            Self::Regular(_) => "regular",
            Self::Chatoyant(_) => "chatoyant",
            Self::Ring(_) => "ring",
            Self::Group(_) => "group",
            Self::Control(_) => "control",
            Self::Plot(_) => "plot",
        }
    }

    fn single(&self) -> Option<&dyn Moveable<S>> {
        Some(match self {
            Self::Rectangle(o) => o,
            Self::Loop(o) => o,
            Self::Regular(o) => o,
            Self::Chatoyant(o) => o,
            Self::Ring(o) => o,
            Self::Group(o) => o,
            Self::Control(o) => o,
            Self::Plot(_) => return None,
        })
    }

    fn single_mut(&mut self) -> Option<&mut dyn Moveable<S>> {
        Some(match self {
            Self::Rectangle(o) => o,
            Self::Loop(o) => o,
            Self::Regular(o) => o,
            Self::Chatoyant(o) => o,
            Self::Ring(o) => o,
            Self::Group(o) => o,
            Self::Control(o) => o,
            Self::Plot(_) => return None,
        })
    }

    /// Registered parts, topmost first.
    pub fn parts(&self) -> Vec<Part> {
        match self {
            Self::Plot(p) => p.parts().into_iter().map(Part::Plot).collect(),
            _ => vec![Part::Whole],
        }
    }

    pub fn cover(&self, part: Part) -> Option<&Cover<S>> {
        match (self, part) {
            (Self::Plot(p), Part::Plot(pp)) => p.part_cover(pp),
            (o, Part::Whole) => o.single().map(|m| m.cover()),
            _ => None,
        }
    }

    /// Covers of every part, topmost first.
    pub fn covers(&self) -> Vec<&Cover<S>> {
        self.parts().into_iter().filter_map(|p| self.cover(p)).collect()
    }

    pub fn range(&self) -> MoveRange<S> {
        match self {
            Self::Plot(p) => p.range(),
            o => o.single().map_or_else(MoveRange::unbounded, |m| m.range()),
        }
    }

    pub fn is_translation(&self, part: Part, node: usize, button: ButtonTag) -> bool {
        match (self, part) {
            (Self::Plot(p), Part::Plot(pp)) => p.part_is_translation(pp, node, button),
            (o, Part::Whole) => o.single().is_some_and(|m| m.is_translation(node, button)),
            _ => false,
        }
    }

    pub fn move_node(&mut self, part: Part, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        match (self, part) {
            (Self::Plot(p), Part::Plot(pp)) => p.move_part(pp, drag).map(|changed| !changed.is_empty()),
            (o, Part::Whole) => o.single_mut().ok_or(ObjectError::BadTarget)?.move_node(drag),
            _ => Err(ObjectError::BadTarget),
        }
    }

    /// Stored covers equal freshly defined ones.
    pub fn covers_fresh(&self) -> bool {
        match self {
            Self::Plot(p) => p.covers_fresh(),
            o => o.single().is_some_and(|m| m.cover() == &m.define_cover()),
        }
    }

    /// Whole-object translation.
    pub fn translate(&mut self, dx: S, dy: S) {
        match self {
            Self::Plot(p) => p.translate(dx, dy),
            o => {
                if let Some(m) = o.single_mut() {
                    m.translate(dx, dy);
                }
            }
        }
    }

    fn begin_drag(&mut self) {
        match self {
            Self::Plot(p) => p.begin_drag(),
            o => {
                if let Some(m) = o.single_mut() {
                    m.begin_drag();
                }
            }
        }
    }

    fn end_drag(&mut self) {
        match self {
            Self::Plot(p) => p.end_drag(),
            o => {
                if let Some(m) = o.single_mut() {
                    m.end_drag();
                }
            }
        }
    }
}

/// Objects by id, independent of stacking.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SceneTable<S> {
    objects: Vec<(ObjectId, SceneObject<S>)>,
}

impl<S: Scalar> SceneTable<S> {
    pub fn get(&self, id: ObjectId) -> Option<&SceneObject<S>> {
        self.objects.iter().find(|(i, _)| *i == id).map(|(_, o)| o)
    }

    pub fn get_mut(&mut self, id: ObjectId) -> Option<&mut SceneObject<S>> {
        self.objects.iter_mut().find(|(i, _)| *i == id).map(|(_, o)| o)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }
}

impl<S: Scalar> Store<S> for SceneTable<S> {
    type Key = SceneKey;

    fn cover(&self, key: SceneKey) -> Option<&Cover<S>> {
        self.get(key.id)?.cover(key.part)
    }

    fn range(&self, key: SceneKey) -> MoveRange<S> {
        self.get(key.id).map_or_else(MoveRange::unbounded, SceneObject::range)
    }

    fn is_translation(&self, key: SceneKey, node: usize, button: ButtonTag) -> bool {
        self.get(key.id).is_some_and(|o| o.is_translation(key.part, node, button))
    }

    fn move_node(&mut self, key: SceneKey, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        self.get_mut(key.id).ok_or(ObjectError::BadTarget)?.move_node(key.part, drag)
    }

    fn begin_drag(&mut self, key: SceneKey) {
        if let Some(o) = self.get_mut(key.id) {
            o.begin_drag();
        }
    }

    fn end_drag(&mut self, key: SceneKey) {
        if let Some(o) = self.get_mut(key.id) {
            o.end_drag();
        }
    }
}

/// Objects plus the mover that stacks and drives them.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene<S = f64> {
    table: SceneTable<S>,
    mover: Mover<SceneKey, S>,
    next_id: u32,
}

impl<S: Scalar> Default for Scene<S> {
    fn default() -> Self {
        Self { table: SceneTable { objects: Vec::new() }, mover: Mover::new(), next_id: 1 }
    }
}

impl<S: Scalar> Scene<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn table(&self) -> &SceneTable<S> {
        &self.table
    }

    pub fn mover(&self) -> &Mover<SceneKey, S> {
        &self.mover
    }

    pub fn mover_mut(&mut self) -> &mut Mover<SceneKey, S> {
        &mut self.mover
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, id: ObjectId) -> Option<&SceneObject<S>> {
        self.table.get(id)
    }

    /// Adds above everything else.
    pub fn add_top(&mut self, obj: SceneObject<S>) -> ObjectId {
        let id = ObjectId(self.next_id);
        self.insert(id, obj, 0).expect("fresh id");
        id
    }

    /// Adds beneath everything else.
    pub fn add_bottom(&mut self, obj: SceneObject<S>) -> ObjectId {
        let id = ObjectId(self.next_id);
        self.insert(id, obj, self.mover.len()).expect("fresh id");
        id
    }

    /// Adds beneath everything else under a caller-chosen id.
    pub fn add_with_id(&mut self, id: ObjectId, obj: SceneObject<S>) -> Result<(), MoverError> {
        self.insert(id, obj, self.mover.len())
    }

    fn insert(&mut self, id: ObjectId, obj: SceneObject<S>, index: usize) -> Result<(), MoverError> {
        if self.table.get(id).is_some() {
            return Err(MoverError::DuplicateObject);
        }
        let keys: Vec<SceneKey> = obj.parts().into_iter().map(|part| SceneKey { id, part }).collect();
        match &obj {
            SceneObject::Plot(p) => p.into_mover(&mut self.mover, index, |pp| SceneKey { id, part: Part::Plot(pp) })?,
            _ => self.mover.insert_all(index, &keys)?,
        }
        self.table.objects.push((id, obj));
        self.next_id = self.next_id.max(id.0.saturating_add(1));
        Ok(())
    }

    pub fn remove(&mut self, id: ObjectId) -> Result<SceneObject<S>, MoverError> {
        self.mover.remove_where(|k| k.id == id)?;
        let at = self.table.objects.iter().position(|(i, _)| *i == id).ok_or(MoverError::UnknownObject)?;
        Ok(self.table.objects.remove(at).1)
    }

    /// Brings all parts of an object to the top or sends them to the bottom.
    pub fn restack(&mut self, id: ObjectId, to: Restack) -> Result<(), MoverError> {
        self.mover.restack_where(|k| k.id == id, to)
    }

    /// Object ids in stacking order, topmost first.
    pub fn order(&self) -> Vec<ObjectId> {
        let mut ids: Vec<ObjectId> = Vec::new();
        for k in self.mover.entries() {
            if !ids.contains(&k.id) {
                ids.push(k.id);
            }
        }
        ids
    }

    /// Objects in stacking order, topmost first.
    pub fn objects(&self) -> Vec<(ObjectId, &SceneObject<S>)> {
        self.order().into_iter().filter_map(|id| self.table.get(id).map(|o| (id, o))).collect()
    }

    pub fn catch(&mut self, pt: Point<S>, button: ButtonTag) -> Result<bool, MoverError> {
        self.mover.catch(&mut self.table, pt, button)
    }

    pub fn move_to(&mut self, pt: Point<S>) -> MoveResult {
        self.mover.move_to(&mut self.table, pt)
    }

    pub fn release(&mut self) -> Option<Released<SceneKey>> {
        self.mover.release(&mut self.table)
    }

    pub fn sense(&self, pt: Point<S>) -> CursorTag {
        self.mover.sense(&self.table, pt)
    }

    pub fn pick(&self, pt: Point<S>) -> Option<(SceneKey, usize)> {
        self.mover.pick(&self.table, pt)
    }
}
