//! Canonical orders and Schnyder realizers of triangulations.
//!
//! Tree index 0 is `T1` (rooted at `v1`), 1 is `T2` (rooted at `v2`) and 2
//! is `Tn` (rooted at `vn`). Around every interior vertex the counterclockwise
//! pattern is: out 1, in n*, out 2, in 1*, out n, in 2*.

mod canonical;
mod minimal;
mod outerplanar;

pub use canonical::{canonical_order, validate_canonical_order, CanonicalOrder};
pub use minimal::{ccw_triangles, minimize_realizer};
pub use outerplanar::{outerplanar_augment, outerplanar_augment_at, Augmented};

use crate::error::{Error, Result};
use crate::graph::{is_planar_3tree, OuterFace, PlanarEmbedding};
use std::fmt::{self, Write as _};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    T1 = 0,
    T2 = 1,
    Tn = 2,
}

impl Tree {
    pub const ALL: [Tree; 3] = [Tree::T1, Tree::T2, Tree::Tn];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Cyclic successor 1 -> 2 -> n -> 1.
    pub fn next(self) -> Tree {
        Tree::ALL[(self.index() + 1) % 3]
    }

    pub fn prev(self) -> Tree {
        Tree::ALL[(self.index() + 2) % 3]
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tree::T1 => "1",
            Tree::T2 => "2",
            Tree::Tn => "n",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Cw,
    Ccw,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    pub outer: OuterFace,
    /// `parent[t][v]`: parent of interior vertex `v` in tree `t`.
    pub parent: [Vec<Option<usize>>; 3],
    /// Cyclic (clockwise) facial triangles; 0 unless minimized.
    pub delta0: usize,
}

/// Role of a neighbor `u` of `v`: whether `v -> u` or `u -> v`, and the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Out(Tree),
    In(Tree),
    Outer,
}

impl Realizer {
    pub fn n(&self) -> usize {
        self.parent[0].len()
    }

    pub fn root(&self, t: Tree) -> usize {
        match t {
            Tree::T1 => self.outer.v1,
            Tree::T2 => self.outer.v2,
            Tree::Tn => self.outer.vn,
        }
    }

    pub fn is_outer(&self, v: usize) -> bool {
        v == self.outer.v1 || v == self.outer.v2 || v == self.outer.vn
    }

    pub fn parent(&self, t: Tree, v: usize) -> Option<usize> {
        self.parent[t.index()][v]
    }

    /// Role of `u` as seen from `v`.
    pub fn label(&self, v: usize, u: usize) -> Option<Label> {
        for t in Tree::ALL {
            if self.parent(t, v) == Some(u) {
                return Some(Label::Out(t));
            }
            if self.parent(t, u) == Some(v) {
                return Some(Label::In(t));
            }
        }
        (self.is_outer(u) && self.is_outer(v)).then_some(Label::Outer)
    }

    /// Tree and child endpoint of an interior edge.
    pub fn edge_tree(&self, u: usize, v: usize) -> Option<(Tree, usize)> {
        match self.label(u, v)? {
            Label::Out(t) => Some((t, u)),
            Label::In(t) => Some((t, v)),
            Label::Outer => None,
        }
    }

    pub fn children(&self, t: Tree, v: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&u| self.parent(t, u) == Some(v))
            .collect()
    }

    /// Interior vertices without children, per tree.
    pub fn leaf_counts(&self) -> [usize; 3] {
        let n = self.n();
        let mut has_child = [vec![false; n], vec![false; n], vec![false; n]];
        for (seen, parent) in has_child.iter_mut().zip(&self.parent) {
            for &p in parent.iter().flatten() {
                seen[p] = true;
            }
        }
        let mut out = [0; 3];
        for t in 0..3 {
            out[t] = (0..n)
                .filter(|&v| !self.is_outer(v) && !has_child[t][v])
                .count();
        }
        out
    }

    /// Tree with the fewest leaves; ties go to the lower index.
    pub fn fewest_leaves(&self) -> Tree {
        let l = self.leaf_counts();
        Tree::ALL.into_iter().min_by_key(|t| l[t.index()]).unwrap()
    }

    /// Relabels 1 -> 2 -> n -> 1, `times` times. The outer face keeps its
    /// traversal; the roots rotate along.
    pub fn rotated(&self, times: usize) -> Realizer {
        let mut r = self.clone();
        for _ in 0..times % 3 {
            let [p1, p2, pn] = r.parent;
            r.parent = [pn, p1, p2];
            let OuterFace { v1, v2, vn } = r.outer;
            r.outer = OuterFace {
                v1: vn,
                v2: v1,
                vn: v2,
            };
        }
        r
    }

    /// Relabeled so that tree `t` becomes `target`.
    pub fn with_tree_as(&self, t: Tree, target: Tree) -> Realizer {
        self.rotated((target.index() + 3 - t.index()) % 3)
    }

    /// Checks spanning, acyclicity and the local edge pattern.
    pub fn check(&self, emb: &PlanarEmbedding) -> std::result::Result<(), String> {
        let n = emb.n();
        if self.n() != n {
            return Err("vertex count mismatch".into());
        }
        for t in Tree::ALL {
            for v in 0..n {
                let p = self.parent(t, v);
                if self.is_outer(v) {
                    if p.is_some() {
                        return Err(format!("outer vertex {v} has a T{t} parent"));
                    }
                    continue;
                }
                let Some(p) = p else {
                    return Err(format!("interior vertex {v} has no T{t} parent"));
                };
                if !emb.has_edge(v, p) {
                    return Err(format!("T{t} parent {p} of {v} is not a neighbor"));
                }
                // Walk to the root.
                let (mut x, mut steps) = (v, 0);
                while let Some(px) = self.parent(t, x) {
                    x = px;
                    steps += 1;
                    if steps > n {
                        return Err(format!("T{t} has a cycle through {v}"));
                    }
                }
                if x != self.root(t) {
                    return Err(format!("T{t} path from {v} ends at {x}"));
                }
            }
        }
        for (u, v) in emb.edges() {
            let roles = Tree::ALL
                .iter()
                .filter(|&&t| self.parent(t, u) == Some(v) || self.parent(t, v) == Some(u))
                .count();
            let outer_edge = self.is_outer(u) && self.is_outer(v);
            if roles != usize::from(!outer_edge) {
                return Err(format!("edge {u}-{v} is in {roles} trees"));
            }
        }
        for v in (0..n).filter(|&v| !self.is_outer(v)) {
            check_pattern(self, emb, v)?;
        }
        Ok(())
    }

    /// One `edge` line per interior edge and a `leaves` footer.
    pub fn dump(&self, emb: &PlanarEmbedding) -> String {
        let mut out = String::new();
        for (u, v) in emb.edges() {
            if let Some((t, child)) = self.edge_tree(u, v) {
                let parent = if child == u { v } else { u };
                let _ = writeln!(out, "edge {u} {v} tree={t} parent={parent}");
            }
        }
        let [l1, l2, ln] = self.leaf_counts();
        let _ = writeln!(out, "leaves {l1} {l2} {ln} delta0 {}", self.delta0);
        out
    }
}

fn check_pattern(r: &Realizer, emb: &PlanarEmbedding, v: usize) -> std::result::Result<(), String> {
    let rot = emb.rotation(v);
    let p1 = r.parent(Tree::T1, v).unwrap();
    let start = emb.position(v, p1).unwrap();
    // Expected blocks in ccw order starting at out 1.
    let blocks = [
        (Label::Out(Tree::T1), false),
        (Label::In(Tree::Tn), true),
        (Label::Out(Tree::T2), false),
        (Label::In(Tree::T1), true),
        (Label::Out(Tree::Tn), false),
        (Label::In(Tree::T2), true),
    ];
    let seq = (0..rot.len())
        .map(|i| {
            let u = rot[(start + i) % rot.len()];
            r.label(v, u)
                .ok_or_else(|| format!("edge {v}-{u} unlabeled"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut it = seq.into_iter().peekable();
    for (lab, star) in blocks {
        if star {
            while it.peek() == Some(&lab) {
                it.next();
            }
        } else if it.next() != Some(lab) {
            return Err(format!("pattern broken at {v}"));
        }
    }
    if it.next().is_some() {
        return Err(format!("pattern broken at {v}"));
    }
    Ok(())
}

/// Realizer from a canonical order: `v_k` points to its leftmost earlier
/// neighbor in `T1`, its rightmost in `T2`, and is the `Tn` parent of the
/// neighbors in between.
pub fn schnyder_from_order(emb: &PlanarEmbedding, co: &CanonicalOrder) -> Realizer {
    let n = emb.n();
    let rank = co.ranks();
    let OuterFace { v1, v2, vn } = co.outer;
    let mut parent = [vec![None; n], vec![None; n], vec![None; n]];
    for k in 2..n {
        let vk = co.order[k];
        let rot = emb.rotation(vk);
        let d = rot.len();
        let start = if vk == vn {
            emb.position(vk, v1).unwrap()
        } else {
            (0..d)
                .find(|&i| rank[rot[i]] < k && rank[rot[(i + d - 1) % d]] > k)
                .expect("earlier neighbors form a run")
        };
        let mut run = Vec::new();
        for i in 0..d {
            let u = rot[(start + i) % d];
            if rank[u] >= k {
                break;
            }
            run.push(u);
            if vk == vn && u == v2 {
                break;
            }
        }
        let last = run.len() - 1;
        if vk != vn {
            parent[0][vk] = Some(run[0]);
            parent[1][vk] = Some(run[last]);
        }
        for &u in &run[1..last] {
            parent[2][u] = Some(vk);
        }
    }
    Realizer {
        outer: co.outer,
        parent,
        delta0: 0,
    }
}

/// The unique realizer of a planar 3-tree.
pub fn planar3tree_realizer(emb: &PlanarEmbedding, outer: OuterFace) -> Result<Realizer> {
    if !is_planar_3tree(emb) {
        return Err(Error::Not3Tree);
    }
    let co = canonical_order(emb, outer)?;
    let r = schnyder_from_order(emb, &co);
    if !union_is_acyclic(&r) {
        return Err(Error::Not3Tree);
    }
    Ok(r)
}

/// True when the union of the three trees, oriented to parents, is a DAG.
pub fn union_is_acyclic(r: &Realizer) -> bool {
    let n = r.n();
    let mut indeg = vec![0usize; n];
    for t in 0..3 {
        for p in r.parent[t].iter().flatten() {
            indeg[*p] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for t in 0..3 {
            if let Some(p) = r.parent[t][v] {
                indeg[p] -= 1;
                if indeg[p] == 0 {
                    stack.push(p);
                }
            }
        }
    }
    seen == n
}

/// Children of `v` in tree `t`, walking the rotation of `v` in direction
/// `dir` starting after the parent edge (for the root, after the outer
/// neighbor whose successor is interior).
fn ordered_children(
    r: &Realizer,
    emb: &PlanarEmbedding,
    t: Tree,
    v: usize,
    dir: Direction,
) -> Vec<usize> {
    let rot = emb.rotation(v);
    let d = rot.len();
    let step = |i: usize| match dir {
        Direction::Ccw => (i + 1) % d,
        Direction::Cw => (i + d - 1) % d,
    };
    let start = match r.parent(t, v) {
        Some(p) => emb.position(v, p).unwrap(),
        None => (0..d)
            .find(|&i| r.is_outer(rot[i]) && !r.is_outer(rot[step(i)]))
            .unwrap_or(0),
    };
    let mut out = Vec::new();
    let mut i = step(start);
    for _ in 1..d {
        let u = rot[i];
        if r.parent(t, u) == Some(v) {
            out.push(u);
        }
        i = step(i);
    }
    out
}

fn preorder(r: &Realizer, emb: &PlanarEmbedding, t: Tree, dir: Direction) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = vec![r.root(t)];
    while let Some(v) = stack.pop() {
        out.push(v);
        let kids = ordered_children(r, emb, t, v, dir);
        stack.extend(kids.into_iter().rev());
    }
    out
}

/// Canonical order induced by a pre-order walk of one tree. A
/// counterclockwise walk treats the tree as `T1` and a clockwise walk as
/// `T2`, relabeling the roots cyclically when needed; the returned order
/// carries the matching outer face. With roles fixed the order is
/// `v1, v2, walk of T1 below v1, vn` or `v1, walk of T2 from v2, vn`.
pub fn order_from_tree(
    r: &Realizer,
    emb: &PlanarEmbedding,
    which: Tree,
    dir: Direction,
) -> CanonicalOrder {
    let role = match dir {
        Direction::Ccw => Tree::T1,
        Direction::Cw => Tree::T2,
    };
    let r = r.with_tree_as(which, role);
    let OuterFace { v1, v2, vn } = r.outer;
    let walk = preorder(&r, emb, role, dir);
    let mut order = match role {
        Tree::T1 => {
            let mut o = vec![v1, v2];
            o.extend(&walk[1..]);
            o
        }
        _ => {
            let mut o = vec![v1];
            o.extend(walk);
            o
        }
    };
    order.push(vn);
    CanonicalOrder {
        outer: r.outer,
        order,
    }
}
