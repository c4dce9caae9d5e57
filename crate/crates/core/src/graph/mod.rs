//! Embedded planar graphs given as rotation systems.
//!
//! Rotations list neighbors counterclockwise. Walking a face from dart
//! `u -> v` continues with `v -> w` where `w` precedes `u` in the rotation of
//! `v`, so bounded faces are traversed counterclockwise and the outer face
//! clockwise.

mod classify;
mod generate;
mod io;
mod triangulate;

pub use classify::{classify, is_planar_3tree, GraphClass};
pub use generate::{
    generate_class, generate_maximal_outerplanar, generate_planar, generate_planar3tree,
    generate_tree, generate_triangulation, Stacking,
};
pub use io::{format_graph, parse_graph};
pub use triangulate::{triangulate, Chord, Triangulated};

use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};

/// A simple graph with a counterclockwise rotation at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rot: Vec<Vec<usize>>,
    offset: Vec<usize>,
    rev: Vec<usize>,
    pos: HashMap<(usize, usize), usize>,
    outer_hint: Option<[usize; 3]>,
}

/// Directed face cycles; every dart lies in exactly one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }
}

/// Outer triangle of a triangulation. The outer face is traversed
/// `v1 -> vn -> v2`; in drawings `v1` is bottom left, `v2` bottom right and
/// `vn` on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OuterFace {
    pub v1: usize,
    pub v2: usize,
    pub vn: usize,
}

impl PlanarEmbedding {
    /// Validates a rotation system and builds the embedding.
    pub fn new(rotations: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotations.len();
        let mut pos = HashMap::new();
        for (u, r) in rotations.iter().enumerate() {
            for (i, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidRotation(format!(
                        "vertex {u} lists unknown vertex {v}"
                    )));
                }
                if v == u {
                    return Err(Error::InvalidRotation(format!("self-loop at {u}")));
                }
                if pos.insert((u, v), i).is_some() {
                    return Err(Error::MultiEdge(u, v));
                }
            }
        }
        for (u, r) in rotations.iter().enumerate() {
            for &v in r {
                if !pos.contains_key(&(v, u)) {
                    return Err(Error::InvalidRotation(format!(
                        "{u} lists {v} but {v} does not list {u}"
                    )));
                }
            }
        }
        let mut offset = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for r in &rotations {
            offset.push(acc);
            acc += r.len();
        }
        offset.push(acc);
        let mut rev = vec![0; acc];
        for (u, r) in rotations.iter().enumerate() {
            for (i, &v) in r.iter().enumerate() {
                rev[offset[u] + i] = offset[v] + pos[&(v, u)];
            }
        }
        let emb = PlanarEmbedding {
            rot: rotations,
            offset,
            rev,
            pos,
            outer_hint: None,
        };
        let faces = emb.faces().len();
        let (comps, isolated) = emb.component_stats();
        let expected = emb.num_edges() + 2 * comps - n - isolated;
        if faces != expected {
            return Err(Error::NotPlanarEmbedding { faces, expected });
        }
        Ok(emb)
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn num_edges(&self) -> usize {
        self.rev.len() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.pos.contains_key(&(u, v))
    }

    /// Index of `v` in the rotation of `u`.
    pub fn position(&self, u: usize, v: usize) -> Option<usize> {
        self.pos.get(&(u, v)).copied()
    }

    /// Neighbor following `v` counterclockwise around `u`.
    pub fn ccw_next(&self, u: usize, v: usize) -> usize {
        let r = &self.rot[u];
        r[(self.pos[&(u, v)] + 1) % r.len()]
    }

    /// Neighbor preceding `v` counterclockwise around `u`.
    pub fn ccw_prev(&self, u: usize, v: usize) -> usize {
        let r = &self.rot[u];
        r[(self.pos[&(u, v)] + r.len() - 1) % r.len()]
    }

    /// Third vertex of the face to the left of dart `u -> v`.
    pub fn face_next(&self, u: usize, v: usize) -> usize {
        self.ccw_prev(v, u)
    }

    /// Undirected edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .rot
            .iter()
            .enumerate()
            .flat_map(|(u, r)| r.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn outer_hint(&self) -> Option<[usize; 3]> {
        self.outer_hint
    }

    pub fn with_outer_hint(mut self, outer: Option<[usize; 3]>) -> Self {
        self.outer_hint = outer;
        self
    }

    /// Face cycles, scanning darts by tail vertex then rotation index.
    pub fn faces(&self) -> FaceSet {
        let mut seen = vec![false; self.rev.len()];
        let mut faces = Vec::new();
        for u in 0..self.n() {
            for i in 0..self.rot[u].len() {
                let start = self.offset[u] + i;
                if seen[start] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut ai) = (u, i);
                loop {
                    let d = self.offset[a] + ai;
                    if seen[d] {
                        break;
                    }
                    seen[d] = true;
                    face.push(a);
                    let b = self.rot[a][ai];
                    let back = self.rev[d] - self.offset[b];
                    let len = self.rot[b].len();
                    ai = (back + len - 1) % len;
                    a = b;
                }
                faces.push(face);
            }
        }
        FaceSet { faces }
    }

    fn component_stats(&self) -> (usize, usize) {
        let comps = self.components();
        let count = comps.iter().copied().max().map_or(0, |m| m + 1);
        let isolated = self.rot.iter().filter(|r| r.is_empty()).count();
        (count, isolated)
    }

    /// Component id per vertex, numbered in order of lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.rot[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// True when every face is a triangle and `e = 3n - 6`.
    pub fn is_triangulation(&self) -> bool {
        let n = self.n();
        n >= 3
            && self.num_edges() == 3 * n - 6
            && self.is_connected()
            && self.faces().faces.iter().all(|f| f.len() == 3)
    }

    /// Outer triangle from the hint, else face 0 rotated to start at its
    /// lowest vertex.
    pub fn outer_face(&self) -> Result<OuterFace> {
        if !self.is_triangulation() {
            return Err(Error::NotTriangulation(format!(
                "n = {}, e = {}",
                self.n(),
                self.num_edges()
            )));
        }
        match self.outer_hint {
            Some([a, b, c]) => self.outer_from_vertices(a, b, c),
            None => {
                let f = &self.faces().faces[0];
                let k = (0..3).min_by_key(|&i| f[i]).unwrap();
                Ok(OuterFace {
                    v1: f[k],
                    vn: f[(k + 1) % 3],
                    v2: f[(k + 2) % 3],
                })
            }
        }
    }

    /// Outer triangle with `v1 = a`. Prefers the face traversed `a -> c -> b`
    /// (so `v2 = b`, `vn = c`), else the face `a -> b -> c`.
    pub fn outer_from_vertices(&self, a: usize, b: usize, c: usize) -> Result<OuterFace> {
        let is_face = |x: usize, y: usize, z: usize| {
            self.has_edge(x, y) && self.face_next(x, y) == z && self.face_next(y, z) == x
        };
        if is_face(a, c, b) {
            Ok(OuterFace {
                v1: a,
                v2: b,
                vn: c,
            })
        } else if is_face(a, b, c) {
            Ok(OuterFace {
                v1: a,
                v2: c,
                vn: b,
            })
        } else {
            Err(Error::NotTriangulation(format!(
                "{a} {b} {c} is not a face"
            )))
        }
    }

    /// All outer-triangle choices, one per face, in face order.
    pub fn all_outer_faces(&self) -> Vec<OuterFace> {
        self.faces()
            .faces
            .iter()
            .filter(|f| f.len() == 3)
            .map(|f| OuterFace {
                v1: f[0],
                vn: f[1],
                v2: f[2],
            })
            .collect()
    }

    /// Same graph with every rotation reversed (the mirror image).
    pub fn mirrored(&self) -> PlanarEmbedding {
        let rot = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlanarEmbedding::new(rot).expect("mirror of a valid embedding")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn k4() -> PlanarEmbedding {
        // 3 inside triangle 0 1 2 (ccw).
        PlanarEmbedding::new(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ])
        .unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let e = PlanarEmbedding::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        let f = e.faces();
        assert_eq!(f.sizes(), vec![3, 3]);
    }

    #[test]
    fn k4_has_four_triangles() {
        let e = k4();
        assert_eq!(e.num_edges(), 6);
        assert_eq!(e.faces().sizes(), vec![3, 3, 3, 3]);
        assert!(e.is_triangulation());
    }

    #[test]
    fn reversed_rotation_breaks_k4() {
        let r = vec![vec![2, 3, 1], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        match PlanarEmbedding::new(r) {
            Err(Error::NotPlanarEmbedding { faces, expected }) => {
                assert_eq!(expected, 4);
                assert_ne!(faces, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn asymmetric_and_duplicate_rejected() {
        assert!(matches!(
            PlanarEmbedding::new(vec![vec![1], vec![]]),
            Err(Error::InvalidRotation(_))
        ));
        assert!(matches!(
            PlanarEmbedding::new(vec![vec![1, 1], vec![0]]),
            Err(Error::MultiEdge(0, 1))
        ));
        assert!(matches!(
            PlanarEmbedding::new(vec![vec![0]]),
            Err(Error::InvalidRotation(_))
        ));
    }

    #[test]
    fn hexagon_has_two_faces() {
        let rot = (0..6).map(|i| vec![(i + 1) % 6, (i + 5) % 6]).collect();
        let e = PlanarEmbedding::new(rot).unwrap();
        assert_eq!(e.faces().sizes(), vec![6, 6]);
    }

    #[test]
    fn every_dart_in_one_face() {
        let e = k4();
        let mut darts: Vec<(usize, usize)> = e
            .faces()
            .faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i], f[(i + 1) % f.len()])))
            .collect();
        darts.sort_unstable();
        let mut all: Vec<_> = e
            .edges()
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect();
        all.sort_unstable();
        assert_eq!(darts, all);
    }

    #[test]
    fn default_outer_face_contains_vertex_zero() {
        let o = k4().outer_face().unwrap();
        assert_eq!(o.v1, 0);
        let e = k4();
        assert_eq!(e.face_next(o.v1, o.vn), o.v2);
    }

    #[test]
    fn outer_hint_orientation() {
        let e = k4();
        // Faces of K4: 0->1->3 is interior ccw, 0->2->1 is clockwise outer.
        let o = e.outer_from_vertices(0, 1, 2).unwrap();
        assert_eq!(
            o,
            OuterFace {
                v1: 0,
                v2: 1,
                vn: 2
            }
        );
        let o = e.outer_from_vertices(0, 2, 1).unwrap();
        assert_eq!(
            o,
            OuterFace {
                v1: 0,
                v2: 1,
                vn: 2
            }
        );
    }
}
