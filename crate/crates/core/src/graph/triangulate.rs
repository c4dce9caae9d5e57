//! Fan triangulation of every face from a single preferred apex.

use super::PlanarEmbedding;
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashSet};

/// An added edge and the id of the original face it subdivides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chord {
    pub u: usize,
    pub v: usize,
    pub face: usize,
}

#[derive(Debug, Clone)]
pub struct Triangulated {
    pub embedding: PlanarEmbedding,
    pub chords: Vec<Chord>,
}

struct State {
    rot: Vec<Vec<usize>>,
    adj: HashSet<(usize, usize)>,
    chords: Vec<Chord>,
}

impl State {
    fn valid(&self, a: usize, b: usize) -> bool {
        a != b && !self.adj.contains(&(a, b))
    }

    /// Adds chord `poly[i] poly[j]` inside the face corner at each end.
    fn add(&mut self, poly: &[usize], i: usize, j: usize, face: usize) {
        let k = poly.len();
        let (a, b) = (poly[i], poly[j]);
        let a_prev = poly[(i + k - 1) % k];
        let b_prev = poly[(j + k - 1) % k];
        let ia = self.rot[a].iter().position(|&x| x == a_prev).unwrap();
        self.rot[a].insert(ia, b);
        let ib = self.rot[b].iter().position(|&x| x == b_prev).unwrap();
        self.rot[b].insert(ib, a);
        self.adj.insert((a, b));
        self.adj.insert((b, a));
        self.chords.push(Chord { u: a, v: b, face });
    }

    /// Number of distinct polygon vertices other than `w` not adjacent to it.
    fn score(&self, poly: &[usize], w: usize) -> usize {
        poly.iter()
            .filter(|&&x| x != w && !self.adj.contains(&(w, x)))
            .collect::<BTreeSet<_>>()
            .len()
    }

    fn first_chord(&self, poly: &[usize], apex: usize) -> Option<(usize, usize)> {
        let k = poly.len();
        for i in (0..k).filter(|&i| poly[i] == apex) {
            for d in 2..k - 1 {
                let j = (i + d) % k;
                if self.valid(apex, poly[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn split(&mut self, poly: Vec<usize>, apex: Option<usize>, face: usize) -> Result<()> {
        let k = poly.len();
        if k <= 3 {
            return Ok(());
        }
        let mut found = apex.and_then(|a| self.first_chord(&poly, a).map(|c| (a, c)));
        if found.is_none() {
            let mut cands: Vec<usize> = poly
                .iter()
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            cands.sort_by_key(|&w| (std::cmp::Reverse(self.score(&poly, w)), w));
            found = cands
                .into_iter()
                .find_map(|w| self.first_chord(&poly, w).map(|c| (w, c)));
        }
        let Some((a, (i, j))) = found else {
            return Err(Error::NotTriangulation(format!(
                "face {face} admits no simple chord"
            )));
        };
        self.add(&poly, i, j, face);
        let (lo, hi) = (i.min(j), i.max(j));
        let inner: Vec<usize> = poly[lo..=hi].to_vec();
        let outer: Vec<usize> = poly[hi..].iter().chain(&poly[..=lo]).copied().collect();
        self.split(inner, Some(a), face)?;
        self.split(outer, Some(a), face)
    }
}

/// Triangulates every face by chords from one apex per face: the face vertex
/// with the most distinct non-adjacent face vertices (ties to the lowest id),
/// re-chosen inside a sub-polygon when its chord would duplicate an edge.
pub fn triangulate(emb: &PlanarEmbedding) -> Result<Triangulated> {
    let n = emb.n();
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    if !emb.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut st = State {
        rot: emb.rotations().to_vec(),
        adj: emb
            .edges()
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect(),
        chords: Vec::new(),
    };
    for (id, face) in emb.faces().faces.into_iter().enumerate() {
        st.split(face, None, id)?;
    }
    let embedding = PlanarEmbedding::new(st.rot)?;
    debug_assert_eq!(st.chords.len() + emb.num_edges(), 3 * n - 6);
    Ok(Triangulated {
        embedding: embedding.with_outer_hint(emb.outer_hint()),
        chords: st.chords,
    })
}
