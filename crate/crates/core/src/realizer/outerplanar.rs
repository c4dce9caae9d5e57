//! Turning a maximal outerplanar graph into a planar 3-tree.

use super::{planar3tree_realizer, Realizer, Tree};
use crate::error::{Error, Result};
use crate::graph::{classify, GraphClass, OuterFace, PlanarEmbedding};

/// A maximal outerplanar graph with an added apex `vn` (index `n`) joined to
/// every vertex inside the old outer face.
#[derive(Debug, Clone)]
pub struct Augmented {
    pub embedding: PlanarEmbedding,
    pub realizer: Realizer,
    /// Index of the added vertex.
    pub apex: usize,
}

impl Augmented {
    /// Tree of an edge of the augmented graph, with the outer edges
    /// `(v2, v1)` and `(vn, v1)` in `T1` and `(vn, v2)` in `T2`. Returns the
    /// tree and the child endpoint.
    pub fn extended_tree(&self, u: usize, v: usize) -> Option<(Tree, usize)> {
        let OuterFace { v1, v2, vn } = self.realizer.outer;
        let is = |a: usize, b: usize| (u, v) == (a, b) || (u, v) == (b, a);
        if is(v2, v1) {
            Some((Tree::T1, v2))
        } else if is(vn, v1) {
            Some((Tree::T1, vn))
        } else if is(vn, v2) {
            Some((Tree::T2, vn))
        } else {
            self.realizer.edge_tree(u, v)
        }
    }
}

/// Adds the apex inside the outer face, with `v1 = 0`, `v2` its predecessor
/// on the outer cycle, and returns the unique realizer of the result.
pub fn outerplanar_augment(emb: &PlanarEmbedding) -> Result<Augmented> {
    outerplanar_augment_at(emb, 0)
}

/// As [`outerplanar_augment`] with `v1` given.
pub fn outerplanar_augment_at(emb: &PlanarEmbedding, v1: usize) -> Result<Augmented> {
    if v1 >= emb.n() || classify(emb) != GraphClass::MaximalOuterplanar {
        return Err(Error::NotMaximalOuterplanar);
    }
    let n = emb.n();
    let faces = emb.faces().faces;
    let big = faces
        .iter()
        .rposition(|f| f.len() == n)
        .ok_or(Error::NotMaximalOuterplanar)?;
    let f = &faces[big];
    let start = f.iter().position(|&x| x == v1).unwrap();
    let cyc: Vec<usize> = (0..n).map(|i| f[(start + i) % n]).collect();
    let apex = n;
    let mut rot = emb.rotations().to_vec();
    for i in 0..n {
        let a = cyc[(i + n - 1) % n];
        let u = cyc[i];
        let b = cyc[(i + 1) % n];
        debug_assert_eq!(emb.face_next(a, u), b);
        let j = rot[u].iter().position(|&x| x == b).unwrap();
        rot[u].insert(j + 1, apex);
    }
    rot.push(cyc.clone());
    let aug = PlanarEmbedding::new(rot)?;
    let outer = OuterFace {
        v1,
        v2: cyc[n - 1],
        vn: apex,
    };
    let realizer = planar3tree_realizer(&aug, outer)?;
    Ok(Augmented {
        embedding: aug,
        realizer,
        apex,
    })
}
