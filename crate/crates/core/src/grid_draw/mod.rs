//! Grid drawings of planar 3-trees and maximal outerplanar graphs.

mod outerplanar;
mod planar3tree;

pub use outerplanar::{draw_outerplanar, OuterplanarDrawing};
pub use planar3tree::{
    draw_planar3tree, draw_with_realizer, prepared_realizer, replay, ContourState, InsertCase,
    InvariantReport, Planar3TreeDrawing, Step, StepTrace,
};
