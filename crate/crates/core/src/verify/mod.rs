//! Independent checks recomputed from raw coordinates.

mod arcs;
mod report;

pub use arcs::{
    angular_resolution_arcs, check_planarity_tol, count_arcs, dof, primitive_counts,
    tn_chain_collinear, ArcViolation, Tolerances,
};
pub use report::{format_report_csv, parse_report, parse_report_csv, Check, DrawingReport};

use crate::error::{Error, Result};
use crate::grid::GridDrawing;
use std::collections::HashMap;
use std::fmt;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn direction(d: &GridDrawing, from: usize, to: usize) -> (i64, i64) {
    let (x0, y0) = d.points[from];
    let (x1, y1) = d.points[to];
    let (dx, dy) = (x1 - x0, y1 - y0);
    let g = gcd(dx, dy).max(1);
    (dx / g, dy / g)
}

/// Minimum number of segments covering the edges: edges pair up at a vertex
/// when they leave it along opposite rays.
pub fn count_segments(d: &GridDrawing) -> Result<usize> {
    let mut rays: Vec<HashMap<(i64, i64), usize>> = vec![HashMap::new(); d.n()];
    for &(u, v) in &d.edges {
        for (a, b) in [(u, v), (v, u)] {
            if let Some(prev) = rays[a].insert(direction(d, a, b), b) {
                return Err(Error::OverlappingEdges(a, prev, b));
            }
        }
    }
    let pairs: usize = rays
        .iter()
        .map(|r| {
            r.keys()
                .filter(|&&(x, y)| r.contains_key(&(-x, -y)))
                .count()
                / 2
        })
        .sum();
    Ok(d.edges.len() - pairs)
}

/// Exact minimum partition of the edges into straight chains, found by
/// dynamic programming over edge subsets. Only for up to 16 edges.
pub fn min_segment_cover_bruteforce(d: &GridDrawing) -> Option<usize> {
    let e = d.edges.len();
    if e > 16 {
        return None;
    }
    let full = (1usize << e) - 1;
    let valid: Vec<bool> = (0..=full).map(|m| is_chain(d, m)).collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        // Submasks of `rest`, each combined with the lowest edge.
        let mut s = rest;
        loop {
            let part = s | low;
            if valid[part] && best[m ^ part] != usize::MAX {
                best[m] = best[m].min(best[m ^ part] + 1);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
    }
    Some(best[full])
}

/// Edges of `mask` lie on one line and form a path without overlaps.
fn is_chain(d: &GridDrawing, mask: usize) -> bool {
    if mask == 0 {
        return false;
    }
    let idx: Vec<usize> = (0..d.edges.len()).filter(|&i| mask >> i & 1 == 1).collect();
    let p = |v: usize| d.points[v];
    let (a, b) = d.edges[idx[0]];
    let (ax, ay) = p(a);
    let (dx, dy) = (p(b).0 - ax, p(b).1 - ay);
    let on_line = |v: usize| (p(v).0 - ax) * dy - (p(v).1 - ay) * dx == 0;
    let proj = |v: usize| (p(v).0 - ax) * dx + (p(v).1 - ay) * dy;
    let mut iv: Vec<(i64, i64)> = Vec::with_capacity(idx.len());
    for &i in &idx {
        let (u, v) = d.edges[i];
        if !on_line(u) || !on_line(v) {
            return false;
        }
        let (s, t) = (proj(u), proj(v));
        iv.push((s.min(t), s.max(t)));
    }
    iv.sort_unstable();
    iv.windows(2).all(|w| w[0].1 == w[1].0)
}

/// First reason a straight-line drawing is not plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CoincidentVertices(usize, usize),
    VertexOnEdge { vertex: usize, edge: (usize, usize) },
    Overlap((usize, usize), (usize, usize)),
    Crossing((usize, usize), (usize, usize)),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CoincidentVertices(u, v) => write!(f, "vertices {u} and {v} coincide"),
            Violation::VertexOnEdge { vertex, edge } => {
                write!(f, "vertex {vertex} lies on edge {}-{}", edge.0, edge.1)
            }
            Violation::Overlap(a, b) => {
                write!(f, "edges {}-{} and {}-{} overlap", a.0, a.1, b.0, b.1)
            }
            Violation::Crossing(a, b) => {
                write!(f, "edges {}-{} and {}-{} cross", a.0, a.1, b.0, b.1)
            }
        }
    }
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let (abx, aby) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
    let (acx, acy) = ((c.0 - a.0) as i128, (c.1 - a.1) as i128);
    abx * acy - aby * acx
}

/// `c` lies on the closed segment `ab`.
fn on_segment(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> bool {
    orient(a, b, c) == 0
        && c.0 >= a.0.min(b.0)
        && c.0 <= a.0.max(b.0)
        && c.1 >= a.1.min(b.1)
        && c.1 <= a.1.max(b.1)
}

/// All-pairs test with exact integer predicates.
pub fn check_planarity_exact(d: &GridDrawing) -> Option<Violation> {
    let n = d.n();
    let mut seen: HashMap<(i64, i64), usize> = HashMap::new();
    for v in 0..n {
        if let Some(u) = seen.insert(d.points[v], v) {
            return Some(Violation::CoincidentVertices(u, v));
        }
    }
    let pts = &d.points;
    let span = |&(u, v): &(usize, usize)| (pts[u].0.min(pts[v].0), pts[u].0.max(pts[v].0));
    // Only pairs whose x-ranges overlap can meet.
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by_key(|&v| pts[v].0);
    for &(u, v) in &d.edges {
        let (lo, hi) = span(&(u, v));
        let first = by_x.partition_point(|&w| pts[w].0 < lo);
        for &w in by_x[first..].iter().take_while(|&&w| pts[w].0 <= hi) {
            if w != u && w != v && on_segment(pts[u], pts[v], pts[w]) {
                return Some(Violation::VertexOnEdge {
                    vertex: w,
                    edge: (u, v),
                });
            }
        }
    }
    let mut order: Vec<usize> = (0..d.edges.len()).collect();
    order.sort_by_key(|&i| span(&d.edges[i]));
    for (k, &i) in order.iter().enumerate() {
        let (a, b) = d.edges[i];
        let hi = span(&(a, b)).1;
        for &j in &order[k + 1..] {
            let (c, e) = d.edges[j];
            if span(&(c, e)).0 > hi {
                break;
            }
            let shared = [a, b].iter().filter(|x| **x == c || **x == e).count();
            let (pa, pb, pc, pe) = (pts[a], pts[b], pts[c], pts[e]);
            if shared == 2 {
                return Some(Violation::Overlap((a, b), (c, e)));
            }
            if shared == 1 {
                // Only a common ray can make them meet again.
                let s = if a == c || a == e { a } else { b };
                let x = if s == a { b } else { a };
                let y = if s == c { e } else { c };
                let (ps, px, py) = (pts[s], pts[x], pts[y]);
                let same_ray = orient(ps, px, py) == 0
                    && ((px.0 - ps.0) as i128 * (py.0 - ps.0) as i128
                        + (px.1 - ps.1) as i128 * (py.1 - ps.1) as i128)
                        > 0;
                if same_ray {
                    return Some(Violation::Overlap((a, b), (c, e)));
                }
                continue;
            }
            let o1 = orient(pa, pb, pc).signum();
            let o2 = orient(pa, pb, pe).signum();
            let o3 = orient(pc, pe, pa).signum();
            let o4 = orient(pc, pe, pb).signum();
            if o1 == 0 && o2 == 0 {
                // Collinear and disjoint endpoints: overlap iff a vertex lies
                // on the other edge, which was reported above.
                continue;
            }
            if o1 * o2 < 0 && o3 * o4 < 0 {
                return Some(Violation::Crossing((a, b), (c, e)));
            }
        }
    }
    None
}

/// Trivial lower bounds on the number of segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBounds {
    /// Half the number of odd-degree vertices.
    pub odd_half: usize,
    /// Largest `ceil(deg / 2)`.
    pub half_degree: usize,
    /// `ceil(e / (n - 1))`.
    pub slope: usize,
}

impl LowerBounds {
    pub fn max(&self) -> usize {
        self.odd_half.max(self.half_degree).max(self.slope)
    }
}

pub fn lower_bounds(n: usize, edges: &[(usize, usize)]) -> LowerBounds {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let e = edges.len();
    LowerBounds {
        odd_half: deg.iter().filter(|&&d| d % 2 == 1).count() / 2,
        half_degree: deg.iter().map(|d| d.div_ceil(2)).max().unwrap_or(0),
        slope: if n > 1 { e.div_ceil(n - 1) } else { 0 },
    }
}

/// Smallest angle between consecutive edges around any vertex, in radians.
pub fn angular_resolution(d: &GridDrawing) -> Option<f64> {
    let mut dirs: Vec<Vec<f64>> = vec![Vec::new(); d.n()];
    for &(u, v) in &d.edges {
        let (x0, y0) = d.points[u];
        let (x1, y1) = d.points[v];
        dirs[u].push(((y1 - y0) as f64).atan2((x1 - x0) as f64));
        dirs[v].push(((y0 - y1) as f64).atan2((x0 - x1) as f64));
    }
    min_gap(dirs)
}

pub(crate) fn min_gap(dirs: Vec<Vec<f64>>) -> Option<f64> {
    let mut best: Option<f64> = None;
    for mut a in dirs {
        if a.len() < 2 {
            continue;
        }
        a.sort_by(f64::total_cmp);
        let wrap = a[0] + std::f64::consts::TAU - a[a.len() - 1];
        let g = a.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::min);
        best = Some(best.map_or(g, |b| b.min(g)));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn drawing(points: &[(i64, i64)], edges: &[(usize, usize)]) -> GridDrawing {
        GridDrawing::new("test", points.to_vec(), edges.to_vec())
    }

    #[test]
    fn segment_examples() {
        let path = drawing(&[(0, 0), (1, 0), (2, 0), (3, 0)], &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(count_segments(&path).unwrap(), 1);
        let tri = drawing(&[(0, 0), (2, 0), (1, 1)], &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(count_segments(&tri).unwrap(), 3);
        let cross = drawing(
            &[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)],
            &[(0, 1), (0, 2), (0, 3), (0, 4)],
        );
        assert_eq!(count_segments(&cross).unwrap(), 2);
        assert_eq!(min_segment_cover_bruteforce(&cross), Some(2));
        assert_eq!(min_segment_cover_bruteforce(&path), Some(1));
    }

    #[test]
    fn overlapping_edges_rejected() {
        let d = drawing(&[(0, 0), (1, 1), (2, 2)], &[(0, 1), (0, 2)]);
        assert_eq!(
            count_segments(&d).unwrap_err(),
            Error::OverlappingEdges(0, 1, 2)
        );
    }

    #[test]
    fn planarity_examples() {
        let square = drawing(
            &[(0, 0), (1, 0), (1, 1), (0, 1)],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
        );
        assert!(matches!(
            check_planarity_exact(&square),
            Some(Violation::Crossing(..))
        ));
        let on_edge = drawing(&[(0, 0), (2, 0), (1, 0), (1, 1)], &[(0, 1), (2, 3)]);
        assert!(matches!(
            check_planarity_exact(&on_edge),
            Some(Violation::VertexOnEdge { vertex: 2, .. })
        ));
        let tri = drawing(&[(0, 0), (2, 0), (1, 1)], &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(check_planarity_exact(&tri), None);
    }

    #[test]
    fn lower_bound_examples() {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(
            lower_bounds(4, &k4),
            LowerBounds {
                odd_half: 2,
                half_degree: 2,
                slope: 2
            }
        );
        let p5 = [(0, 1), (1, 2), (2, 3), (3, 4)];
        assert_eq!(lower_bounds(5, &p5).odd_half, 1);
        let star = [(0, 1), (0, 2), (0, 3)];
        assert_eq!(
            lower_bounds(4, &star),
            LowerBounds {
                odd_half: 2,
                half_degree: 2,
                slope: 1
            }
        );
    }
}
