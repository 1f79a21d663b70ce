//! Catch / move / release state machine over registered covers.
//!
//! The mover never sees object geometry. It reads covers and move ranges
//! through a [`Store`] and forwards node drags back to it.

use core::fmt::Debug;

use thiserror::Error;

use crate::cover::{Cover, CursorTag, Hit, MovementType};
use crate::geometry::Point;
use crate::objects::{ButtonTag, MoveRange, Moveable, NodeDrag, ObjectError};
use crate::Scalar;

/// Where the mover finds the objects its keys refer to.
pub trait Store<S: Scalar> {
    type Key: Copy + Eq + Debug;

    fn cover(&self, key: Self::Key) -> Option<&Cover<S>>;

    fn range(&self, key: Self::Key) -> MoveRange<S>;

    fn is_translation(&self, key: Self::Key, node: usize, button: ButtonTag) -> bool;

    fn move_node(&mut self, key: Self::Key, drag: &NodeDrag<S>) -> Result<bool, ObjectError>;

    fn begin_drag(&mut self, _key: Self::Key) {}

    fn end_drag(&mut self, _key: Self::Key) {}
}

impl<S: Scalar> Store<S> for Vec<Box<dyn Moveable<S>>> {
    type Key = usize;

    fn cover(&self, key: usize) -> Option<&Cover<S>> {
        self.get(key).map(|o| o.cover())
    }

    fn range(&self, key: usize) -> MoveRange<S> {
        self.get(key).map_or_else(MoveRange::unbounded, |o| o.range())
    }

    fn is_translation(&self, key: usize, node: usize, button: ButtonTag) -> bool {
        self.get(key).is_some_and(|o| o.is_translation(node, button))
    }

    fn move_node(&mut self, key: usize, drag: &NodeDrag<S>) -> Result<bool, ObjectError> {
        match self.get_mut(key) {
            Some(o) => o.move_node(drag),
            None => Err(ObjectError::BadTarget),
        }
    }

    fn begin_drag(&mut self, key: usize) {
        if let Some(o) = self.get_mut(key) {
            o.begin_drag();
        }
    }

    fn end_drag(&mut self, key: usize) {
        if let Some(o) = self.get_mut(key) {
            o.end_drag();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoverError {
    #[error("object is already registered")]
    DuplicateObject,
    #[error("index {index} out of range ({len} entries)")]
    BadIndex { index: usize, len: usize },
    #[error("a drag is in progress")]
    DragInProgress,
    #[error("object is not registered")]
    UnknownObject,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restack {
    Top,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DragState<K, S> {
    pub key: K,
    pub node: usize,
    /// Logical button, after any swap.
    pub button: ButtonTag,
    pub anchor: Point<S>,
    pub movement: MovementType,
    pub cursor: CursorTag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveResult {
    pub moved: bool,
    pub cursor: CursorTag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Released<K> {
    pub key: K,
    pub node: usize,
    pub button: ButtonTag,
}

/// The last drag step handed to an object, for inspection by tests and tools.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dispatch<K, S> {
    pub key: K,
    pub node: usize,
    pub movement: MovementType,
    pub dx: S,
    pub dy: S,
    pub moved: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mover<K, S = f64> {
    entries: Vec<K>,
    drag: Option<DragState<K, S>>,
    last: Option<Dispatch<K, S>>,
    swap_buttons: bool,
}

impl<K, S> Default for Mover<K, S> {
    fn default() -> Self {
        Self { entries: Vec::new(), drag: None, last: None, swap_buttons: false }
    }
}

impl<K: Copy + Eq + Debug, S: Scalar> Mover<K, S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exchanges the roles of the two buttons.
    pub fn with_swapped_buttons(mut self, swap: bool) -> Self {
        self.swap_buttons = swap;
        self
    }

    pub fn set_swap_buttons(&mut self, swap: bool) {
        self.swap_buttons = swap;
    }

    pub fn swaps_buttons(&self) -> bool {
        self.swap_buttons
    }

    /// Registered keys, topmost first.
    pub fn entries(&self) -> &[K] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, key: K) -> Option<usize> {
        self.entries.iter().position(|k| *k == key)
    }

    pub fn drag(&self) -> Option<&DragState<K, S>> {
        self.drag.as_ref()
    }

    pub fn is_dragging(&self) -> bool {
        self.drag.is_some()
    }

    pub fn last_dispatch(&self) -> Option<&Dispatch<K, S>> {
        self.last.as_ref()
    }

    /// Registers `key` beneath everything else.
    pub fn add(&mut self, key: K) -> Result<(), MoverError> {
        self.insert(self.entries.len(), key)
    }

    pub fn insert(&mut self, index: usize, key: K) -> Result<(), MoverError> {
        self.insert_all(index, &[key])
    }

    /// Inserts `keys` as a block starting at `index`; all or nothing.
    pub fn insert_all(&mut self, index: usize, keys: &[K]) -> Result<(), MoverError> {
        if index > self.entries.len() {
            return Err(MoverError::BadIndex { index, len: self.entries.len() });
        }
        for (i, k) in keys.iter().enumerate() {
            if self.entries.contains(k) || keys[..i].contains(k) {
                return Err(MoverError::DuplicateObject);
            }
        }
        self.entries.splice(index..index, keys.iter().copied());
        Ok(())
    }

    pub fn remove(&mut self, key: K) -> Result<(), MoverError> {
        self.remove_where(|k| *k == key)
    }

    /// Unregisters every key matching `pred`.
    pub fn remove_where(&mut self, pred: impl Fn(&K) -> bool) -> Result<(), MoverError> {
        if !self.entries.iter().any(&pred) {
            return Err(MoverError::UnknownObject);
        }
        if self.drag.as_ref().is_some_and(|d| pred(&d.key)) {
            return Err(MoverError::DragInProgress);
        }
        self.entries.retain(|k| !pred(k));
        Ok(())
    }

    pub fn restack(&mut self, index: usize, to: Restack) -> Result<(), MoverError> {
        let key = *self.entries.get(index).ok_or(MoverError::BadIndex { index, len: self.entries.len() })?;
        self.restack_where(|k| *k == key, to)
    }

    /// Moves every key matching `pred` to the top or bottom as one block,
    /// keeping relative order on both sides.
    pub fn restack_where(&mut self, pred: impl Fn(&K) -> bool, to: Restack) -> Result<(), MoverError> {
        if !self.entries.iter().any(&pred) {
            return Err(MoverError::UnknownObject);
        }
        if self.drag.as_ref().is_some_and(|d| pred(&d.key)) {
            return Err(MoverError::DragInProgress);
        }
        let (mut picked, rest): (Vec<K>, Vec<K>) = self.entries.iter().partition(|k| pred(k));
        self.entries = match to {
            Restack::Top => {
                picked.extend(rest);
                picked
            }
            Restack::Bottom => rest.into_iter().chain(picked).collect(),
        };
        Ok(())
    }

    fn logical(&self, button: ButtonTag) -> ButtonTag {
        match (self.swap_buttons, button) {
            (false, b) => b,
            (true, ButtonTag::Left) => ButtonTag::Right,
            (true, ButtonTag::Right) => ButtonTag::Left,
        }
    }

    /// Topmost opaque node under `pt`, skipping objects whose hit is transparent.
    pub fn pick<St: Store<S, Key = K>>(&self, store: &St, pt: Point<S>) -> Option<(K, usize)> {
        self.entries.iter().find_map(|&key| match store.cover(key)?.hit_index(pt) {
            Hit::Node(i) => Some((key, i)),
            Hit::Miss | Hit::FallThrough(_) => None,
        })
    }

    /// Cursor for a pointer hovering at `pt`.
    pub fn sense<St: Store<S, Key = K>>(&self, store: &St, pt: Point<S>) -> CursorTag {
        self.pick(store, pt)
            .and_then(|(key, i)| store.cover(key)?.node(i).map(|n| n.cursor))
            .unwrap_or(CursorTag::Arrow)
    }

    /// Pointer down: grabs the topmost opaque node under `pt`.
    pub fn catch<St: Store<S, Key = K>>(
        &mut self,
        store: &mut St,
        pt: Point<S>,
        button: ButtonTag,
    ) -> Result<bool, MoverError> {
        if self.drag.is_some() {
            return Err(MoverError::DragInProgress);
        }
        let Some((key, node)) = self.pick(store, pt) else {
            return Ok(false);
        };
        let Some(n) = store.cover(key).and_then(|c| c.node(node)) else {
            return Ok(false);
        };
        self.drag = Some(DragState {
            key,
            node,
            button: self.logical(button),
            anchor: pt,
            movement: n.movement,
            cursor: n.cursor,
        });
        store.begin_drag(key);
        Ok(true)
    }

    /// Pointer move: senses the cursor when idle, otherwise drives the caught node.
    pub fn move_to<St: Store<S, Key = K>>(&mut self, store: &mut St, pt: Point<S>) -> MoveResult {
        let Some(drag) = self.drag else {
            return MoveResult { moved: false, cursor: self.sense(store, pt) };
        };
        let (mut dx, mut dy) = drag.movement.mask(pt.x - drag.anchor.x, pt.y - drag.anchor.y);
        if store.is_translation(drag.key, drag.node, drag.button) {
            let reference = store.cover(drag.key).and_then(Cover::bounds).map(|b| b.center());
            if let Some(reference) = reference {
                (dx, dy) = store.range(drag.key).clamp(reference, dx, dy);
            }
        }
        let step = NodeDrag { node: drag.node, dx, dy, mouse: pt, anchor: drag.anchor, button: drag.button };
        let moved = store.move_node(drag.key, &step).unwrap_or(false);
        self.last = Some(Dispatch { key: drag.key, node: drag.node, movement: drag.movement, dx, dy, moved });
        if moved {
            if let Some(d) = self.drag.as_mut() {
                d.anchor = pt;
            }
        }
        MoveResult { moved, cursor: drag.cursor }
    }

    /// Pointer up: ends any drag.
    pub fn release<St: Store<S, Key = K>>(&mut self, store: &mut St) -> Option<Released<K>> {
        let drag = self.drag.take()?;
        store.end_drag(drag.key);
        Some(Released { key: drag.key, node: drag.node, button: drag.button })
    }
}
