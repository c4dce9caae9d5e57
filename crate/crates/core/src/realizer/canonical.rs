//! Canonical orders of triangulations.

use crate::error::{Error, Result};
use crate::graph::{OuterFace, PlanarEmbedding};
use std::collections::BTreeSet;

/// Vertex sequence `v1, v2, ..., vn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrder {
    pub outer: OuterFace,
    pub order: Vec<usize>,
}

impl CanonicalOrder {
    /// Position of every vertex in the order.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            rank[v] = i;
        }
        rank
    }

    /// Contour of `G_k` (first `k` vertices) from `v1` to `v2`.
    pub fn contour(&self, emb: &PlanarEmbedding, k: usize) -> Vec<usize> {
        prefix_contour(emb, &self.ranks(), self.outer, k).unwrap_or_default()
    }
}

/// Builds the order backwards by peeling chord-free contour vertices,
/// lowest id first.
pub fn canonical_order(emb: &PlanarEmbedding, outer: OuterFace) -> Result<CanonicalOrder> {
    if !emb.is_triangulation() {
        return Err(Error::NotTriangulation(format!(
            "n = {}, e = {}",
            emb.n(),
            emb.num_edges()
        )));
    }
    let OuterFace { v1, v2, vn } = outer;
    emb.outer_from_vertices(v1, v2, vn)?;
    let n = emb.n();
    let mut on = vec![false; n];
    let mut left = vec![usize::MAX; n];
    let mut right = vec![usize::MAX; n];
    let mut cnt = vec![0usize; n];
    for v in [v1, v2, vn] {
        on[v] = true;
        cnt[v] = 2;
    }
    right[v1] = vn;
    left[vn] = v1;
    right[vn] = v2;
    left[v2] = vn;
    let mut removable = BTreeSet::from([vn]);
    let mut removed = vec![false; n];
    let mut rev = Vec::with_capacity(n);
    let is_free = |v: usize, on: &[bool], cnt: &[usize], removed: &[bool]| {
        v != v1 && v != v2 && on[v] && !removed[v] && cnt[v] == 2
    };
    while rev.len() < n - 2 {
        let v = removable
            .pop_first()
            .ok_or_else(|| Error::NotTriangulation("no removable contour vertex".into()))?;
        let (a, b) = (left[v], right[v]);
        removed[v] = true;
        on[v] = false;
        rev.push(v);
        let mut fresh = Vec::new();
        let mut x = emb.ccw_next(v, a);
        while x != b {
            fresh.push(x);
            x = emb.ccw_next(v, x);
        }
        for &u in emb.rotation(v) {
            if on[u] {
                cnt[u] -= 1;
            }
        }
        let mut prev = a;
        for &w in &fresh {
            on[w] = true;
            right[prev] = w;
            left[w] = prev;
            prev = w;
        }
        right[prev] = b;
        left[b] = prev;
        for &w in &fresh {
            for &x in emb.rotation(w) {
                if on[x] {
                    cnt[w] += 1;
                    if !fresh.contains(&x) {
                        cnt[x] += 1;
                    }
                }
            }
        }
        let touched: BTreeSet<usize> = emb
            .rotation(v)
            .iter()
            .chain(fresh.iter().flat_map(|&w| emb.rotation(w)))
            .copied()
            .collect();
        for u in touched {
            if is_free(u, &on, &cnt, &removed) {
                removable.insert(u);
            } else {
                removable.remove(&u);
            }
        }
    }
    let mut order = vec![v1, v2];
    order.extend(rev.into_iter().rev());
    Ok(CanonicalOrder { outer, order })
}

/// Contour of the subgraph induced by vertices of rank `< k`, read off the
/// face containing dart `v2 -> v1`. `None` if that face is not a simple cycle.
fn prefix_contour(
    emb: &PlanarEmbedding,
    rank: &[usize],
    outer: OuterFace,
    k: usize,
) -> Option<Vec<usize>> {
    let (v1, v2) = (outer.v1, outer.v2);
    if k == 2 {
        return Some(vec![v1, v2]);
    }
    let inside = |x: usize| rank[x] < k;
    // Next vertex of the face of G_k left of dart a -> b.
    let step = |a: usize, b: usize| {
        let mut c = emb.ccw_prev(b, a);
        while !inside(c) {
            c = emb.ccw_prev(b, c);
        }
        c
    };
    let mut cyc = vec![v1];
    let (mut a, mut b) = (v2, v1);
    loop {
        let c = step(a, b);
        if c == v2 {
            break;
        }
        if cyc.len() > k {
            return None;
        }
        cyc.push(c);
        a = b;
        b = c;
    }
    if step(b, v2) != v1 {
        return None;
    }
    cyc.push(v2);
    let distinct: BTreeSet<usize> = cyc.iter().copied().collect();
    (distinct.len() == cyc.len()).then_some(cyc)
}

/// Checks every prefix condition of a canonical order.
pub fn validate_canonical_order(
    emb: &PlanarEmbedding,
    co: &CanonicalOrder,
) -> std::result::Result<(), String> {
    let n = emb.n();
    let OuterFace { v1, v2, vn } = co.outer;
    if co.order.len() != n {
        return Err(format!(
            "order has {} entries, expected {n}",
            co.order.len()
        ));
    }
    let mut seen = vec![false; n];
    for &v in &co.order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(format!("vertex {v} repeated or out of range"));
        }
    }
    if co.order[0] != v1 || co.order[1] != v2 || co.order[n - 1] != vn {
        return Err("order must start with v1, v2 and end with vn".into());
    }
    if emb.outer_from_vertices(v1, v2, vn) != Ok(co.outer) {
        return Err("v1 vn v2 is not the outer face".into());
    }
    let rank = co.ranks();
    let mut prev = vec![v1, v2];
    for k in 3..=n {
        let vk = co.order[k - 1];
        let cur = prefix_contour(emb, &rank, co.outer, k)
            .ok_or_else(|| format!("G_{k} outer boundary is not a simple cycle"))?;
        if !cur.contains(&vk) {
            return Err(format!("v_{k} = {vk} not on contour of G_{k}"));
        }
        // Bounded faces of G_k must be triangles for G_k to be biconnected
        // and internally triangulated.
        if !inner_faces_are_triangles(emb, &rank, k, &cur) {
            return Err(format!("G_{k} has a non-triangular inner face"));
        }
        let idx: Vec<usize> = prev
            .iter()
            .enumerate()
            .filter(|(_, &u)| emb.has_edge(vk, u))
            .map(|(i, _)| i)
            .collect();
        let earlier = emb
            .rotation(vk)
            .iter()
            .filter(|&&u| rank[u] < k - 1)
            .count();
        if idx.len() < 2 || idx.len() != earlier || idx[idx.len() - 1] - idx[0] + 1 != idx.len() {
            return Err(format!(
                "neighbors of v_{k} = {vk} in G_{} are not a contour subpath",
                k - 1
            ));
        }
        prev = cur;
    }
    Ok(())
}

fn inner_faces_are_triangles(
    emb: &PlanarEmbedding,
    rank: &[usize],
    k: usize,
    contour: &[usize],
) -> bool {
    // Counting argument: G_k has e_k edges; with an outer cycle of length
    // c and triangular inner faces, e_k = 3k - 3 - c.
    let e: usize = (0..emb.n())
        .filter(|&v| rank[v] < k)
        .map(|v| emb.rotation(v).iter().filter(|&&u| rank[u] < k).count())
        .sum::<usize>()
        / 2;
    e + contour.len() == 3 * k - 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_planar3tree, generate_triangulation};

    #[test]
    fn triangle_order() {
        let e = PlanarEmbedding::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        let o = e.outer_from_vertices(0, 1, 2).unwrap();
        let co = canonical_order(&e, o).unwrap();
        assert_eq!(co.order, vec![0, 1, 2]);
        validate_canonical_order(&e, &co).unwrap();
    }

    #[test]
    fn k4_interior_vertex_third() {
        let e = crate::graph::tests::k4();
        let o = e.outer_from_vertices(0, 1, 2).unwrap();
        let co = canonical_order(&e, o).unwrap();
        assert_eq!(co.order, vec![0, 1, 3, 2]);
        validate_canonical_order(&e, &co).unwrap();
    }

    #[test]
    fn random_orders_validate() {
        for seed in 0..20 {
            for n in [5, 20, 57] {
                let e = generate_triangulation(n, seed, 2 * n).unwrap();
                let co = canonical_order(&e, e.outer_face().unwrap()).unwrap();
                validate_canonical_order(&e, &co).unwrap();
            }
        }
    }

    #[test]
    fn validator_rejects_bad_orders() {
        let (e, _) = generate_planar3tree(12, 3).unwrap();
        let co = canonical_order(&e, e.outer_face().unwrap()).unwrap();
        for i in 2..10 {
            let mut bad = co.clone();
            bad.order.swap(i, i + 1);
            if bad.order == co.order {
                continue;
            }
            // Swapping may coincidentally stay valid; it must never panic.
            let _ = validate_canonical_order(&e, &bad);
        }
        let mut bad = co.clone();
        bad.order.swap(2, 11);
        assert!(validate_canonical_order(&e, &bad).is_err());
    }

    #[test]
    fn non_triangulation_rejected() {
        let c =
            PlanarEmbedding::new((0..5).map(|i| vec![(i + 1) % 5, (i + 4) % 5]).collect()).unwrap();
        let o = OuterFace {
            v1: 0,
            v2: 1,
            vn: 2,
        };
        assert!(matches!(
            canonical_order(&c, o),
            Err(Error::NotTriangulation(_))
        ));
    }
}
