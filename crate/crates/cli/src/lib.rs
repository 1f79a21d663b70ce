//! File formats, replay, rendering and fuzzing for `moveable-core` scenes.

pub mod error;
pub mod fuzz;
pub mod names;
pub mod render;
pub mod replay;
pub mod scene_file;
pub mod session;
pub mod text;
pub mod trace;

pub use error::{Error, Result};
pub use fuzz::{fuzz, FuzzReport};
pub use render::render_svg;
pub use replay::{replay, Checkpoint};
pub use scene_file::{parse_scene, write_scene};
pub use session::{Session, UiCommand, UiFrame};
pub use trace::{parse_trace, write_trace, Trace};

/// Saves then reloads; `Ok((reloaded, text))` when reloading reproduces the scene.
pub fn round_trip(scene: &moveable_core::Scene) -> Result<(moveable_core::Scene, String)> {
    let text = write_scene(scene);
    let back = parse_scene(&text)?;
    Ok((back, text))
}
