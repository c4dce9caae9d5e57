//! Seeded random instances.

use super::{GraphClass, PlanarEmbedding};
use crate::error::{Error, Result};
use crate::rng::Rng;

/// Face `(a, b, c)` (counterclockwise) into which each vertex `3..n` was
/// stacked, in insertion order.
pub type Stacking = Vec<[usize; 3]>;

fn pos(r: &[usize], x: usize) -> usize {
    r.iter().position(|&y| y == x).expect("neighbor present")
}

/// Inserts `w` into the rotation of `at` immediately before `before`.
fn insert_before(rot: &mut [Vec<usize>], at: usize, before: usize, w: usize) {
    let i = pos(&rot[at], before);
    rot[at].insert(i, w);
}

/// Inserts `w` into the rotation of `at` immediately after `after`.
fn insert_after(rot: &mut [Vec<usize>], at: usize, after: usize, w: usize) {
    let i = pos(&rot[at], after);
    rot[at].insert(i + 1, w);
}

fn remove(rot: &mut [Vec<usize>], at: usize, x: usize) {
    let i = pos(&rot[at], x);
    rot[at].remove(i);
}

fn triangle() -> Vec<Vec<usize>> {
    vec![vec![1, 2], vec![2, 0], vec![0, 1]]
}

/// Stacks `w` into the counterclockwise face `(a, b, c)`.
fn stack(rot: &mut Vec<Vec<usize>>, [a, b, c]: [usize; 3]) -> usize {
    let w = rot.len();
    insert_before(rot, a, c, w);
    insert_before(rot, b, a, w);
    insert_before(rot, c, b, w);
    rot.push(vec![a, b, c]);
    w
}

fn stacked_rotations(n: usize, seed: u64) -> Result<(Vec<Vec<usize>>, Stacking)> {
    if n < 4 {
        return Err(Error::NTooSmall { n, min: 4 });
    }
    let mut rng = Rng::new(seed);
    let mut rot = triangle();
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut seq = Vec::with_capacity(n - 3);
    for step in 3..n {
        let fi = if step == 3 { 0 } else { rng.below(faces.len()) };
        let f = faces[fi];
        let w = stack(&mut rot, f);
        let [a, b, c] = f;
        faces[fi] = [a, b, w];
        faces.push([b, c, w]);
        faces.push([c, a, w]);
        seq.push(f);
    }
    Ok((rot, seq))
}

/// Random planar 3-tree: a triangle, vertex 3 stacked into it, then each
/// further vertex stacked into a uniformly chosen face.
pub fn generate_planar3tree(n: usize, seed: u64) -> Result<(PlanarEmbedding, Stacking)> {
    let (rot, seq) = stacked_rotations(n, seed)?;
    Ok((PlanarEmbedding::new(rot)?, seq))
}

/// Random maximal outerplanar graph built by repeatedly adding an ear on a
/// uniformly chosen outer edge.
pub fn generate_maximal_outerplanar(n: usize, seed: u64) -> Result<PlanarEmbedding> {
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    let mut rng = Rng::new(seed);
    let mut rot = triangle();
    // Outer face traversal.
    let mut cycle = vec![0, 2, 1];
    for w in 3..n {
        let i = rng.below(cycle.len());
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        insert_after(&mut rot, a, b, w);
        insert_before(&mut rot, b, a, w);
        rot.push(vec![a, b]);
        cycle.insert(i + 1, w);
    }
    PlanarEmbedding::new(rot)
}

/// Random triangulation: a random planar 3-tree followed by up to `flips`
/// random edge flips that keep the graph simple.
pub fn generate_triangulation(n: usize, seed: u64, flips: usize) -> Result<PlanarEmbedding> {
    let (mut rot, _) = stacked_rotations(n, seed)?;
    let mut rng = Rng::new(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut done = 0;
    let mut attempts = 0;
    while done < flips && attempts < 100 * flips + 100 {
        attempts += 1;
        let u = rng.below(n);
        let v = rot[u][rng.below(rot[u].len())];
        if try_flip(&mut rot, u, v) {
            done += 1;
        }
    }
    PlanarEmbedding::new(rot)
}

/// Replaces edge `u v` by the other diagonal of its two incident triangles.
fn try_flip(rot: &mut [Vec<usize>], u: usize, v: usize) -> bool {
    let prev = |r: &[usize], x: usize| r[(pos(r, x) + r.len() - 1) % r.len()];
    let x = prev(&rot[v], u);
    let y = prev(&rot[u], v);
    if x == y || rot[x].contains(&y) || rot[u].len() < 4 || rot[v].len() < 4 {
        return false;
    }
    remove(rot, u, v);
    remove(rot, v, u);
    insert_before(rot, x, v, y);
    insert_before(rot, y, u, x);
    true
}

/// Uniform random labeled tree on `n` vertices from a Prüfer sequence.
pub fn generate_tree(n: usize, seed: u64) -> Result<PlanarEmbedding> {
    if n == 0 {
        return Err(Error::NTooSmall { n, min: 1 });
    }
    let mut adj = vec![Vec::new(); n];
    if n == 2 {
        adj[0].push(1);
        adj[1].push(0);
    } else if n > 2 {
        let mut rng = Rng::new(seed);
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
        let mut degree = vec![1; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut leaves: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| degree[v] == 1).collect();
        for &s in &seq {
            let leaf = leaves.pop_first().expect("a leaf exists");
            adj[leaf].push(s);
            adj[s].push(leaf);
            degree[s] -= 1;
            if degree[s] == 1 {
                leaves.insert(s);
            }
        }
        let a = leaves.pop_first().unwrap();
        let b = leaves.pop_first().unwrap();
        adj[a].push(b);
        adj[b].push(a);
    }
    for r in &mut adj {
        r.sort_unstable();
    }
    PlanarEmbedding::new(adj)
}

/// Connected planar graph: a random triangulation from which random edges
/// are deleted, skipping bridges, until `target_edges` remain or no edge can
/// go.
pub fn generate_planar(
    n: usize,
    seed: u64,
    flips: usize,
    target_edges: usize,
) -> Result<PlanarEmbedding> {
    let base = generate_triangulation(n, seed, flips)?;
    let mut rot = base.rotations().to_vec();
    let mut edges = base.edges();
    let mut rng = Rng::new(seed ^ 0xd1b5_4a32_d192_ed03);
    for i in (1..edges.len()).rev() {
        edges.swap(i, rng.below(i + 1));
    }
    let mut e = edges.len();
    for (u, v) in edges {
        if e <= target_edges {
            break;
        }
        remove(&mut rot, u, v);
        remove(&mut rot, v, u);
        if connected(&rot, u, v) {
            e -= 1;
        } else {
            // Restore the bridge in its original slot.
            let r = base.rotation(u);
            let after = r[(pos(r, v) + r.len() - 1) % r.len()];
            restore(&mut rot, u, v, base.rotation(u), after);
            let r = base.rotation(v);
            let after = r[(pos(r, u) + r.len() - 1) % r.len()];
            restore(&mut rot, v, u, base.rotation(v), after);
        }
    }
    PlanarEmbedding::new(rot)
}

/// Puts `w` back into the rotation of `at`, after the nearest preceding
/// neighbor that is still present.
fn restore(rot: &mut [Vec<usize>], at: usize, w: usize, original: &[usize], mut after: usize) {
    if rot[at].is_empty() {
        rot[at].push(w);
        return;
    }
    while !rot[at].contains(&after) {
        let i = pos(original, after);
        after = original[(i + original.len() - 1) % original.len()];
    }
    insert_after(rot, at, after, w);
}

fn connected(rot: &[Vec<usize>], s: usize, t: usize) -> bool {
    let mut seen = vec![false; rot.len()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        if u == t {
            return true;
        }
        for &v in &rot[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// Random graph of a class with the default generator settings: `3n` flips
/// for triangulations, and for other planar graphs a triangulation with `3n`
/// flips thinned to `2n - 3` edges.
pub fn generate_class(class: GraphClass, n: usize, seed: u64) -> Result<PlanarEmbedding> {
    match class {
        GraphClass::Tree => generate_tree(n, seed),
        GraphClass::MaximalOuterplanar => generate_maximal_outerplanar(n, seed),
        GraphClass::Planar3Tree => generate_planar3tree(n, seed).map(|g| g.0),
        GraphClass::Triangulation => generate_triangulation(n, seed, 3 * n),
        GraphClass::PlanarOther => generate_planar(n, seed, 3 * n, (2 * n).saturating_sub(3)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;

    #[test]
    fn k4_from_four() {
        for seed in 0..5 {
            let (e, seq) = generate_planar3tree(4, seed).unwrap();
            assert_eq!(e.num_edges(), 6);
            assert_eq!(seq, vec![[0, 1, 2]]);
        }
    }

    #[test]
    fn five_vertices() {
        let (e, _) = generate_planar3tree(5, 11).unwrap();
        assert_eq!(e.num_edges(), 9);
        assert_eq!(e.degree(4), 3);
    }

    #[test]
    fn stacking_is_deterministic() {
        let a = generate_planar3tree(50, 7).unwrap();
        let b = generate_planar3tree(50, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.1, generate_planar3tree(50, 8).unwrap().1);
    }

    #[test]
    fn too_small() {
        assert_eq!(
            generate_planar3tree(3, 0).unwrap_err(),
            Error::NTooSmall { n: 3, min: 4 }
        );
        assert!(generate_maximal_outerplanar(2, 0).is_err());
        assert!(generate_triangulation(3, 0, 1).is_err());
        assert!(generate_tree(0, 0).is_err());
    }

    #[test]
    fn outerplanar_counts() {
        let e = generate_maximal_outerplanar(3, 0).unwrap();
        assert_eq!(e.num_edges(), 3);
        for seed in 0..10 {
            let e = generate_maximal_outerplanar(6, seed).unwrap();
            assert_eq!(e.num_edges(), 9);
            assert_eq!(classify(&e), GraphClass::MaximalOuterplanar);
        }
    }

    #[test]
    fn outerplanar_last_ear_removal() {
        let e = generate_maximal_outerplanar(20, 3).unwrap();
        assert_eq!(e.degree(19), 2);
        let rot: Vec<Vec<usize>> = e.rotations()[..19]
            .iter()
            .map(|r| r.iter().copied().filter(|&x| x != 19).collect())
            .collect();
        let smaller = PlanarEmbedding::new(rot).unwrap();
        assert_eq!(smaller.num_edges(), 2 * 19 - 3);
        assert_eq!(classify(&smaller), GraphClass::MaximalOuterplanar);
    }

    #[test]
    fn flips_leave_triangulations() {
        let e = generate_triangulation(10, 1, 0).unwrap();
        assert_eq!(classify(&e), GraphClass::Planar3Tree);
        let mut non_3tree = false;
        for seed in 0..10 {
            let e = generate_triangulation(10, seed, 30).unwrap();
            assert!(e.is_triangulation());
            non_3tree |= classify(&e) == GraphClass::Triangulation;
        }
        assert!(non_3tree);
    }

    #[test]
    fn trees() {
        assert_eq!(generate_tree(1, 0).unwrap().num_edges(), 0);
        for n in [2, 3, 10, 57] {
            let t = generate_tree(n, n as u64).unwrap();
            assert_eq!(classify(&t), GraphClass::Tree);
        }
    }

    #[test]
    fn planar_by_deletion_stays_connected() {
        for seed in 0..10 {
            let g = generate_planar(20, seed, 20, 30).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.num_edges(), 30);
        }
    }
}
