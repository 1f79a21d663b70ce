//! Cover-based direct manipulation of 2D screen objects.
//!
//! Every object describes its sensitive areas as a [`cover::Cover`]: an
//! ordered list of nodes where earlier nodes win. A [`mover::Mover`] turns
//! pointer events into node drags using nothing but those covers.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cover;
pub mod geometry;
pub mod mover;
pub mod objects;
pub mod plot;
mod scalar;
pub mod scene;
pub mod widgets;

pub use scalar::Scalar;

pub type Point = geometry::Point<f64>;
pub type Rect = geometry::Rect<f64>;
pub type Cover = cover::Cover<f64>;
pub type CoverNode = cover::CoverNode<f64>;
pub type NodeShape = cover::NodeShape<f64>;
pub type NodeDrag = objects::NodeDrag<f64>;
pub type MoveRange = objects::MoveRange<f64>;
pub type RectangleObject = objects::RectangleObject<f64>;
pub type LoopObject = objects::LoopObject<f64>;
pub type RegularPolygonObject = objects::RegularPolygonObject<f64>;
pub type ChatoyantPolygonObject = objects::ChatoyantPolygonObject<f64>;
pub type RingObject = objects::RingObject<f64>;
pub type ControlProxy = widgets::ControlProxy<f64>;
pub type GroupObject = widgets::GroupObject<f64>;
pub type CommentObject = plot::CommentObject<f64>;
pub type ScaleObject = plot::ScaleObject<f64>;
pub type PlotAssembly = plot::PlotAssembly<f64>;
pub type SceneObject = scene::SceneObject<f64>;
pub type Scene = scene::Scene<f64>;
