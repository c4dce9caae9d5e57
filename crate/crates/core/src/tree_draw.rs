//! Trees drawn with few segments via heavy paths and L-shaped boxes.
//!
//! A box in canonical orientation has its top node at the origin and covers
//! `[-l, r] x [-b, t]` minus the open upper-left quadrant. Heavy paths run
//! straight down from the top node. At every path vertex `v` the light
//! subtrees are paired; the first box of a pair goes into a staircase in
//! the rectangle below-left of `v` (mirrored horizontally), the second into
//! the point reflection of that staircase above-right of `v` (mirrored
//! vertically). Both anchors are reflections of each other through `v`, so
//! the two light edges form one segment.

use crate::error::{Error, Result};
use crate::graph::PlanarEmbedding;
use crate::grid::GridDrawing;
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyPathDecomposition {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    /// Children sorted by id.
    pub children: Vec<Vec<usize>>,
    pub size: Vec<usize>,
    pub heavy: Vec<Option<usize>>,
    /// Heavy paths listed top-down; `paths[i][0]` is the top node.
    pub paths: Vec<Vec<usize>>,
    pub path_of: Vec<usize>,
    /// Depth per path.
    pub depth: Vec<usize>,
}

impl HeavyPathDecomposition {
    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }
}

fn check_tree(emb: &PlanarEmbedding) -> Result<()> {
    let n = emb.n();
    if n == 0 || emb.num_edges() != n - 1 || !emb.is_connected() {
        return Err(Error::NotATree);
    }
    Ok(())
}

pub fn heavy_path_decompose(emb: &PlanarEmbedding, root: usize) -> Result<HeavyPathDecomposition> {
    check_tree(emb)?;
    let n = emb.n();
    if root >= n {
        return Err(Error::NotATree);
    }
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in emb.rotation(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                children[u].push(w);
                queue.push_back(w);
            }
        }
    }
    for c in &mut children {
        c.sort_unstable();
    }
    let mut size = vec![1; n];
    for &u in order.iter().rev() {
        if let Some(p) = parent[u] {
            size[p] += size[u];
        }
    }
    let heavy: Vec<Option<usize>> = (0..n)
        .map(|u| {
            // max_by_key keeps the last maximum; iterate in reverse for lowest id.
            children[u].iter().rev().copied().max_by_key(|&c| size[c])
        })
        .collect();
    let mut paths = Vec::new();
    let mut path_of = vec![0; n];
    for &u in &order {
        if parent[u].is_some_and(|p| heavy[p] == Some(u)) {
            continue;
        }
        let mut path = vec![u];
        let mut cur = u;
        while let Some(h) = heavy[cur] {
            path.push(h);
            cur = h;
        }
        for &v in &path {
            path_of[v] = paths.len();
        }
        paths.push(path);
    }
    // Paths are created top-down, so children paths have larger indices.
    let mut depth = vec![0; paths.len()];
    for i in (0..paths.len()).rev() {
        let p = &paths[i];
        if p.len() == 1 {
            continue;
        }
        let below = p
            .iter()
            .flat_map(|&v| children[v].iter())
            .filter(|&&c| path_of[c] != i)
            .map(|&c| depth[path_of[c]])
            .max()
            .unwrap_or(0);
        depth[i] = 1 + below;
    }
    Ok(HeavyPathDecomposition {
        root,
        parent,
        children,
        size,
        heavy,
        paths,
        path_of,
        depth,
    })
}

/// Extents of an L-shaped box around its top node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LBox {
    pub l: i64,
    pub r: i64,
    pub t: i64,
    pub b: i64,
}

impl LBox {
    pub const UNIT: LBox = LBox {
        l: 1,
        r: 1,
        t: 1,
        b: 1,
    };

    pub fn w(&self) -> i64 {
        self.l + self.r
    }

    pub fn h(&self) -> i64 {
        self.t + self.b
    }

    fn max(self, o: LBox) -> LBox {
        LBox {
            l: self.l.max(o.l),
            r: self.r.max(o.r),
            t: self.t.max(o.t),
            b: self.b.max(o.b),
        }
    }
}

/// Componentwise maximum of consecutive pairs; an odd count pairs the last
/// box with a copy of itself.
pub fn merge_boxes(boxes: &[LBox]) -> Vec<LBox> {
    boxes
        .chunks(2)
        .map(|c| if c.len() == 2 { c[0].max(c[1]) } else { c[0] })
        .collect()
}

/// Axis-parallel rectangle `(x0, y0, x1, y1)` with `x0 < x1`, `y0 < y1`.
pub type Rect = (i64, i64, i64, i64);

/// A box as placed in the final drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacedBox {
    pub top: usize,
    pub depth: usize,
    pub dims: LBox,
    /// The L as two rectangles with disjoint interiors.
    pub rects: [Rect; 2],
}

#[derive(Debug, Clone)]
pub struct TreeDrawing {
    pub drawing: GridDrawing,
    pub decomposition: HeavyPathDecomposition,
    pub boxes: Vec<PlacedBox>,
    /// Light-edge pairs `(v, a, a2)` drawn as one segment through `v`.
    pub pairs: Vec<(usize, usize, usize)>,
}

/// Maps `p` to `(sx * p.x + dx, sy * p.y + dy)`.
#[derive(Debug, Clone, Copy)]
struct Tf {
    sx: i64,
    sy: i64,
    dx: i64,
    dy: i64,
}

impl Tf {
    fn pt(&self, (x, y): (i64, i64)) -> (i64, i64) {
        (self.sx * x + self.dx, self.sy * y + self.dy)
    }

    fn rect(&self, (x0, y0, x1, y1): Rect) -> Rect {
        let (a, b) = self.pt((x0, y0));
        let (c, d) = self.pt((x1, y1));
        (a.min(c), b.min(d), a.max(c), b.max(d))
    }
}

/// A laid-out subtree in canonical orientation.
struct Layout {
    top: usize,
    dims: LBox,
    pts: Vec<(usize, i64, i64)>,
    boxes: Vec<PlacedBox>,
}

impl Layout {
    fn unit(v: usize) -> Layout {
        let dims = LBox::UNIT;
        Layout {
            top: v,
            dims,
            pts: vec![(v, 0, 0)],
            boxes: vec![placed(v, 0, dims)],
        }
    }

    fn absorb(&mut self, child: Layout, tf: Tf) {
        self.pts.extend(child.pts.into_iter().map(|(v, x, y)| {
            let (x, y) = tf.pt((x, y));
            (v, x, y)
        }));
        self.boxes.extend(child.boxes.into_iter().map(|mut b| {
            b.rects = [tf.rect(b.rects[0]), tf.rect(b.rects[1])];
            b
        }));
    }
}

fn placed(top: usize, depth: usize, d: LBox) -> PlacedBox {
    PlacedBox {
        top,
        depth,
        dims: d,
        rects: [(-d.l, -d.b, d.r, 0), (0, 0, d.r, d.t)],
    }
}

struct Builder<'a> {
    hpd: &'a HeavyPathDecomposition,
    pairs: Vec<(usize, usize, usize)>,
}

impl Builder<'_> {
    fn layout(&mut self, top: usize) -> Layout {
        let hpd = self.hpd;
        let pi = hpd.path_of[top];
        let mut path = hpd.paths[pi].clone();
        let mut attached: Vec<Vec<Layout>> = path
            .iter()
            .map(|&v| {
                hpd.children[v]
                    .iter()
                    .filter(|&&c| hpd.heavy[v] != Some(c))
                    .map(|&c| self.layout(c))
                    .collect()
            })
            .collect();
        let m = path.len();
        if m == 1 {
            return Layout::unit(top);
        }
        // With an even out-degree at v_{m-1}, v_m becomes a unit box there.
        if hpd.children[path[m - 2]].len().is_multiple_of(2) {
            let last = path.pop().unwrap();
            attached.pop();
            attached[m - 2].push(Layout::unit(last));
        }

        // Per path vertex: anchors relative to the vertex and side extents.
        struct Slot {
            width: i64,
            below: i64,
            above: i64,
            place: Vec<(Layout, Tf)>,
        }
        let mut slots = Vec::with_capacity(path.len());
        for (h, mut boxes) in attached.into_iter().enumerate() {
            boxes.sort_by_key(|b| (-b.dims.b, b.top));
            let dims: Vec<LBox> = boxes.iter().map(|b| b.dims).collect();
            let merged = merge_boxes(&dims);
            let width: i64 = merged.iter().map(LBox::w).sum();
            let mut left = -width;
            let mut drop = 0;
            let (mut below, mut above) = (0, 0);
            let mut place = Vec::with_capacity(boxes.len());
            let mut it = boxes.into_iter();
            for mb in &merged {
                drop += mb.t;
                let ax = left + mb.r;
                let ay = -drop;
                let first = it.next().unwrap();
                below = below.max(drop + first.dims.b);
                // Lower-left copy, mirrored horizontally.
                let tf1 = Tf {
                    sx: -1,
                    sy: 1,
                    dx: ax,
                    dy: ay,
                };
                let a1 = first.top;
                place.push((first, tf1));
                if let Some(second) = it.next() {
                    above = above.max(drop + second.dims.b);
                    // Upper-right copy, mirrored vertically.
                    let tf2 = Tf {
                        sx: 1,
                        sy: -1,
                        dx: -ax,
                        dy: -ay,
                    };
                    self.pairs.push((path[h], a1, second.top));
                    place.push((second, tf2));
                }
                left += mb.w();
            }
            slots.push(Slot {
                width,
                below,
                above,
                place,
            });
        }

        let k = path.len();
        let mut ys = vec![0i64; k];
        for h in 1..k {
            let gap = slots[h - 1].below.max(slots[h].above).max(1);
            ys[h] = ys[h - 1] - gap;
        }
        let width = slots.iter().map(|s| s.width).max().unwrap_or(0).max(1);
        let t = slots[0].above.max(1);
        let mut b = -ys[k - 1] + slots[k - 1].below.max(1);
        for h in 0..k {
            b = b.max(-ys[h] + slots[h].below);
        }
        let dims = LBox {
            l: width,
            r: width,
            t,
            b,
        };
        let mut out = Layout {
            top,
            dims,
            pts: path.iter().zip(&ys).map(|(&v, &y)| (v, 0, y)).collect(),
            boxes: vec![placed(top, hpd.depth[pi], dims)],
        };
        for (slot, y) in slots.into_iter().zip(ys) {
            for (child, mut tf) in slot.place {
                tf.dy += y;
                out.absorb(child, tf);
            }
        }
        out
    }
}

/// Draws a tree rooted at `root` (default vertex 0).
pub fn draw_tree(emb: &PlanarEmbedding, root: Option<usize>) -> Result<TreeDrawing> {
    let root = root.unwrap_or(0);
    let hpd = heavy_path_decompose(emb, root)?;
    let mut builder = Builder {
        hpd: &hpd,
        pairs: Vec::new(),
    };
    let lay = builder.layout(root);
    let pairs = builder.pairs;
    let n = emb.n();
    let min_x = lay.pts.iter().map(|p| p.1).min().unwrap();
    let min_y = lay.pts.iter().map(|p| p.2).min().unwrap();
    let shift = Tf {
        sx: 1,
        sy: 1,
        dx: -min_x,
        dy: -min_y,
    };
    let mut points = vec![(0, 0); n];
    for &(v, x, y) in &lay.pts {
        points[v] = shift.pt((x, y));
    }
    let boxes = lay
        .boxes
        .into_iter()
        .map(|mut b| {
            b.rects = [shift.rect(b.rects[0]), shift.rect(b.rects[1])];
            b
        })
        .collect();
    let drawing = GridDrawing::new("tree", points, emb.edges());
    Ok(TreeDrawing {
        drawing,
        decomposition: hpd,
        boxes,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_tree;

    fn path(n: usize) -> PlanarEmbedding {
        let rot = (0..n)
            .map(|i| {
                let mut r = Vec::new();
                if i > 0 {
                    r.push(i - 1);
                }
                if i + 1 < n {
                    r.push(i + 1);
                }
                r
            })
            .collect();
        PlanarEmbedding::new(rot).unwrap()
    }

    pub(crate) fn star(k: usize) -> PlanarEmbedding {
        let mut rot = vec![(1..=k).collect::<Vec<_>>()];
        rot.extend((0..k).map(|_| vec![0]));
        PlanarEmbedding::new(rot).unwrap()
    }

    #[test]
    fn path_is_one_heavy_path() {
        let h = heavy_path_decompose(&path(5), 0).unwrap();
        assert_eq!(h.paths, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(h.depth, vec![1]);
    }

    #[test]
    fn star_ties_to_lowest_id() {
        let h = heavy_path_decompose(&star(4), 0).unwrap();
        assert_eq!(h.paths, vec![vec![0, 1], vec![2], vec![3], vec![4]]);
        assert_eq!(h.depth, vec![1, 0, 0, 0]);
    }

    #[test]
    fn binary_tree_depth() {
        let rot = (0..15)
            .map(|i: usize| {
                let mut r = Vec::new();
                if i > 0 {
                    r.push((i - 1) / 2);
                }
                for c in [2 * i + 1, 2 * i + 2] {
                    if c < 15 {
                        r.push(c);
                    }
                }
                r
            })
            .collect();
        let h = heavy_path_decompose(&PlanarEmbedding::new(rot).unwrap(), 0).unwrap();
        assert!(h.max_depth() <= 4);
    }

    #[test]
    fn rejects_non_trees() {
        let k4 = crate::graph::tests::k4();
        assert_eq!(heavy_path_decompose(&k4, 0).unwrap_err(), Error::NotATree);
        assert_eq!(draw_tree(&k4, None).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn merge_examples() {
        assert_eq!(merge_boxes(&[LBox::UNIT, LBox::UNIT]), vec![LBox::UNIT]);
        let a = LBox {
            l: 1,
            r: 2,
            t: 1,
            b: 3,
        };
        let b = LBox {
            l: 2,
            r: 1,
            t: 2,
            b: 2,
        };
        assert_eq!(
            merge_boxes(&[a, b]),
            vec![LBox {
                l: 2,
                r: 2,
                t: 2,
                b: 3
            }]
        );
        assert_eq!(merge_boxes(&[a, b, a]).len(), 2);
    }

    #[test]
    fn path_drawn_vertically() {
        let d = draw_tree(&path(9), None).unwrap().drawing;
        assert!(d.points.iter().all(|p| p.0 == d.points[0].0));
    }

    #[test]
    fn pairs_are_collinear() {
        for seed in 0..20 {
            let t = generate_tree(60, seed).unwrap();
            let td = draw_tree(&t, None).unwrap();
            let p = &td.drawing.points;
            for &(v, a, c) in &td.pairs {
                let (ux, uy) = (p[a].0 - p[v].0, p[a].1 - p[v].1);
                let (wx, wy) = (p[c].0 - p[v].0, p[c].1 - p[v].1);
                assert_eq!(ux * wy - uy * wx, 0);
                assert!(ux * wx + uy * wy < 0, "pair on the same side of {v}");
            }
        }
    }

    #[test]
    fn boxes_well_formed() {
        for seed in 0..20 {
            let t = generate_tree(80, seed).unwrap();
            let td = draw_tree(&t, None).unwrap();
            for b in &td.boxes {
                assert!(b.dims.b >= b.dims.t, "box at {} has b < t", b.top);
            }
            for (i, x) in td.boxes.iter().enumerate() {
                for y in &td.boxes[i + 1..] {
                    if x.depth != y.depth {
                        continue;
                    }
                    for p in x.rects {
                        for q in y.rects {
                            let overlap = p.0 < q.2 && q.0 < p.2 && p.1 < q.3 && q.1 < p.3;
                            assert!(!overlap, "boxes {} and {} overlap", x.top, y.top);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_vertex() {
        let t = PlanarEmbedding::new(vec![vec![]]).unwrap();
        let td = draw_tree(&t, None).unwrap();
        assert_eq!(td.drawing.points, vec![(0, 0)]);
    }

    #[test]
    fn bounds_hold_on_random_trees() {
        use crate::verify::{check_planarity_exact, count_segments, lower_bounds};
        for n in [2usize, 3, 10, 50, 200] {
            let depth = (n as f64).log2().ceil() as i32;
            for seed in 0..5 {
                let g = generate_tree(n, seed).unwrap();
                let d = draw_tree(&g, None).unwrap().drawing;
                assert_eq!(check_planarity_exact(&d), None, "n={n} seed={seed}");
                let s = count_segments(&d).unwrap();
                assert!(s <= (3 * (n - 1)).div_ceil(4), "n={n} seed={seed}: {s}");
                assert!(s >= lower_bounds(n, &d.edges).odd_half);
                assert!(d.width() as f64 <= 2.0 * 2f64.powi(depth) * n as f64);
                assert!(d.height() as f64 <= 2.0 * 1.5f64.powi(depth) * n as f64);
            }
        }
        assert_eq!(
            count_segments(&draw_tree(&path(9), None).unwrap().drawing).unwrap(),
            1
        );
    }
}
