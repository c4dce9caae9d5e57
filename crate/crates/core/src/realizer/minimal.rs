//! Minimal realizer by reversing counterclockwise directed triangles.
//!
//! Reversal works on the orientation alone (every interior vertex keeps
//! out-degree 3); tree labels are recomputed from the final orientation.

use super::{Realizer, Tree};
use crate::graph::{OuterFace, PlanarEmbedding};
use std::collections::{HashMap, HashSet, VecDeque};

/// A triangle listed counterclockwise (its bounded side on the left).
#[derive(Debug, Clone, Copy)]
struct Tri {
    v: [usize; 3],
    facial: bool,
}

/// All triangles except the outer one, each oriented counterclockwise.
fn triangles(emb: &PlanarEmbedding, outer: OuterFace) -> Vec<Tri> {
    let outer_set = {
        let mut s = [outer.v1, outer.v2, outer.vn];
        s.sort_unstable();
        s
    };
    let mut out = Vec::new();
    for (a, b) in emb.edges() {
        for &c in emb.rotation(a) {
            if c <= b || !emb.has_edge(b, c) {
                continue;
            }
            if [a, b, c] == outer_set {
                continue;
            }
            let is_face =
                |x: usize, y: usize, z: usize| emb.face_next(x, y) == z && emb.face_next(y, z) == x;
            let tri = if is_face(a, b, c) {
                Tri {
                    v: [a, b, c],
                    facial: true,
                }
            } else if is_face(a, c, b) {
                Tri {
                    v: [a, c, b],
                    facial: true,
                }
            } else {
                let left_is_outside = reaches_outer(emb, outer, emb.ccw_next(a, b), [a, b, c]);
                Tri {
                    v: if left_is_outside {
                        [a, c, b]
                    } else {
                        [a, b, c]
                    },
                    facial: false,
                }
            };
            out.push(tri);
        }
    }
    out
}

fn reaches_outer(emb: &PlanarEmbedding, outer: OuterFace, s: usize, cut: [usize; 3]) -> bool {
    let targets = [outer.v1, outer.v2, outer.vn];
    let mut seen = HashSet::from([s]);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if targets.contains(&u) {
            return true;
        }
        for &w in emb.rotation(u) {
            if !cut.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    false
}

fn arcs_of(r: &Realizer) -> HashSet<(usize, usize)> {
    let mut arcs = HashSet::new();
    for t in 0..3 {
        for (v, p) in r.parent[t].iter().enumerate() {
            if let Some(p) = p {
                arcs.insert((v, *p));
            }
        }
    }
    arcs
}

fn directed_ccw(arcs: &HashSet<(usize, usize)>, [a, b, c]: [usize; 3]) -> bool {
    arcs.contains(&(a, b)) && arcs.contains(&(b, c)) && arcs.contains(&(c, a))
}

fn directed_cw(arcs: &HashSet<(usize, usize)>, [a, b, c]: [usize; 3]) -> bool {
    arcs.contains(&(b, a)) && arcs.contains(&(c, b)) && arcs.contains(&(a, c))
}

/// Counterclockwise directed triangles (facial or separating).
pub fn ccw_triangles(emb: &PlanarEmbedding, r: &Realizer) -> Vec<[usize; 3]> {
    let arcs = arcs_of(r);
    triangles(emb, r.outer)
        .into_iter()
        .filter(|t| directed_ccw(&arcs, t.v))
        .map(|t| t.v)
        .collect()
}

/// Reverses counterclockwise directed triangles until none remain and
/// records the number of cyclic faces in `delta0`.
pub fn minimize_realizer(emb: &PlanarEmbedding, r: &Realizer) -> Realizer {
    let tris = triangles(emb, r.outer);
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        let [a, b, c] = t.v;
        for (x, y) in [(a, b), (b, c), (c, a)] {
            by_edge.entry((x.min(y), x.max(y))).or_default().push(i);
        }
    }
    let mut arcs = arcs_of(r);
    let mut queue: VecDeque<usize> = (0..tris.len()).collect();
    let mut queued = vec![true; tris.len()];
    while let Some(i) = queue.pop_front() {
        queued[i] = false;
        let [a, b, c] = tris[i].v;
        if !directed_ccw(&arcs, [a, b, c]) {
            continue;
        }
        for (x, y) in [(a, b), (b, c), (c, a)] {
            arcs.remove(&(x, y));
            arcs.insert((y, x));
            for &j in &by_edge[&(x.min(y), x.max(y))] {
                if !queued[j] {
                    queued[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    let mut out = from_orientation(emb, r.outer, &arcs);
    out.delta0 = tris
        .iter()
        .filter(|t| t.facial && directed_cw(&arcs, t.v))
        .count();
    out
}

/// Tree labels implied by a 3-orientation of the interior edges.
fn from_orientation(
    emb: &PlanarEmbedding,
    outer: OuterFace,
    arcs: &HashSet<(usize, usize)>,
) -> Realizer {
    let n = emb.n();
    let mut parent = [vec![None; n], vec![None; n], vec![None; n]];
    let is_outer = |v: usize| v == outer.v1 || v == outer.v2 || v == outer.vn;
    let mut done = vec![false; n];
    let mut queue = VecDeque::new();
    // Labels the out-edges of `v` scanning ccw from neighbor `u`; the first
    // out-edge met gets `t`.
    let assign = |parent: &mut [Vec<Option<usize>>; 3], v: usize, u: usize, t: Tree| {
        let rot = emb.rotation(v);
        let d = rot.len();
        let s = emb.position(v, u).unwrap();
        let mut label = t;
        for i in 0..d {
            let w = rot[(s + i) % d];
            if arcs.contains(&(v, w)) {
                parent[label.index()][v] = Some(w);
                label = label.next();
            }
        }
    };
    for (t, root) in [
        (Tree::T1, outer.v1),
        (Tree::T2, outer.v2),
        (Tree::Tn, outer.vn),
    ] {
        for &u in emb.rotation(root) {
            if !is_outer(u) && !done[u] && arcs.contains(&(u, root)) {
                assign(&mut parent, u, root, t);
                done[u] = true;
                queue.push_back(u);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        let rot = emb.rotation(v);
        let d = rot.len();
        for (i, &w) in rot.iter().enumerate() {
            if is_outer(w) || done[w] {
                continue;
            }
            if arcs.contains(&(v, w)) {
                // `w` sees an incoming edge with the label of `v -> w`.
                let t = Tree::ALL
                    .into_iter()
                    .find(|t| parent[t.index()][v] == Some(w))
                    .unwrap();
                let wr = emb.rotation(w);
                let k = emb.position(w, v).unwrap();
                let first_out = (1..wr.len())
                    .map(|j| wr[(k + j) % wr.len()])
                    .find(|&x| arcs.contains(&(w, x)))
                    .unwrap();
                assign(&mut parent, w, first_out, t.prev());
            } else {
                // Edge `w -> v` sits after out(t+1) in the ccw order at `v`.
                let prev_out = (1..d)
                    .map(|j| rot[(i + d - j) % d])
                    .find(|&x| arcs.contains(&(v, x)))
                    .unwrap();
                let s = Tree::ALL
                    .into_iter()
                    .find(|t| parent[t.index()][v] == Some(prev_out))
                    .unwrap();
                assign(&mut parent, w, v, s.prev());
            }
            done[w] = true;
            queue.push_back(w);
        }
    }
    Realizer {
        outer,
        parent,
        delta0: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_triangulation;
    use crate::realizer::{canonical_order, schnyder_from_order};

    fn initial(n: usize, seed: u64) -> (PlanarEmbedding, Realizer) {
        let e = generate_triangulation(n, seed, 3 * n).unwrap();
        let co = canonical_order(&e, e.outer_face().unwrap()).unwrap();
        let r = schnyder_from_order(&e, &co);
        (e, r)
    }

    #[test]
    fn relabeling_round_trips() {
        for seed in 0..10 {
            let (e, r) = initial(25, seed);
            assert_eq!(from_orientation(&e, r.outer, &arcs_of(&r)).parent, r.parent);
        }
    }

    #[test]
    fn minimal_has_no_ccw_triangle() {
        for seed in 0..10 {
            let (e, r) = initial(40, seed);
            let m = minimize_realizer(&e, &r);
            m.check(&e).unwrap();
            assert!(ccw_triangles(&e, &m).is_empty());
            let total: usize = m.leaf_counts().iter().sum();
            assert!(total + m.delta0 <= 2 * 40 - 5);
        }
    }

    #[test]
    fn minimize_is_idempotent() {
        let (e, r) = initial(30, 4);
        let m = minimize_realizer(&e, &r);
        assert_eq!(minimize_realizer(&e, &m), m);
    }

    #[test]
    fn k4_unchanged() {
        let e = crate::graph::tests::k4();
        let co = canonical_order(&e, e.outer_from_vertices(0, 1, 2).unwrap()).unwrap();
        let r = schnyder_from_order(&e, &co);
        let m = minimize_realizer(&e, &r);
        assert_eq!(m.parent, r.parent);
        assert_eq!(m.delta0, 0);
    }
}
