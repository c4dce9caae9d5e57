//! Maximal outerplanar graphs via the 3-tree drawer.
//!
//! An apex joined to the whole outer cycle turns the graph into a planar
//! 3-tree whose `T1` and `T2` hold the original edges. Mirroring the
//! embedding and swapping `v1` and `v2` exchanges the roles of `T1` and `T2`;
//! the variant whose `T1` has fewer leaves is drawn. The apex is then removed
//! and a mirrored drawing is reflected back.

use super::planar3tree::{draw_with_realizer, StepTrace};
use crate::error::Result;
use crate::graph::PlanarEmbedding;
use crate::grid::GridDrawing;
use crate::realizer::{outerplanar_augment, outerplanar_augment_at, Tree};

#[derive(Debug, Clone)]
pub struct OuterplanarDrawing {
    pub drawing: GridDrawing,
    pub trace: StepTrace,
    /// Leaves of `T1` including the ones removed with the apex.
    pub lambda: usize,
    /// Whether the mirror embedding was drawn.
    pub mirrored: bool,
}

/// Draws a maximal outerplanar graph with `n >= 3`.
pub fn draw_outerplanar(emb: &PlanarEmbedding, check: bool) -> Result<OuterplanarDrawing> {
    let n = emb.n();
    let a = outerplanar_augment(emb)?;
    let m = outerplanar_augment_at(&emb.mirrored(), a.realizer.outer.v2)?;
    let leaves = |r: &crate::Realizer| r.leaf_counts()[Tree::T1.index()];
    let mirrored = leaves(&m.realizer) < leaves(&a.realizer);
    let aug = if mirrored { m } else { a };
    let out = draw_with_realizer(&aug.embedding, &aug.realizer, check, None)?;
    let full = out.drawing;
    let w = full.points[..n].iter().map(|p| p.0).max().unwrap_or(0);
    let points = full.points[..n]
        .iter()
        .map(|&(x, y)| if mirrored { (w - x, y) } else { (x, y) })
        .collect();
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for (i, &(u, v)) in full.edges.iter().enumerate() {
        if u != aug.apex && v != aug.apex {
            edges.push((u, v));
            labels.push(full.labels[i]);
        }
    }
    let mut drawing = GridDrawing::new("outerplanar", points, edges);
    drawing.labels = labels;
    Ok(OuterplanarDrawing {
        drawing,
        trace: out.trace,
        lambda: out.lambda,
        mirrored,
    })
}
