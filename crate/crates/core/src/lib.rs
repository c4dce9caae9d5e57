//! Low visual-complexity drawings of planar graphs.

pub mod arc_draw;
pub mod error;
pub mod graph;
pub mod grid;
pub mod grid_draw;
pub mod real;
pub mod realizer;
pub mod rng;
pub mod svg;
pub mod tree_draw;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{FaceSet, GraphClass, OuterFace, PlanarEmbedding};
pub use grid::GridDrawing;
pub use realizer::{CanonicalOrder, Direction, Realizer, Tree};
