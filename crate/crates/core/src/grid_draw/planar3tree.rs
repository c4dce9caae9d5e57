//! Planar 3-trees on the grid with one `T1` segment per leaf.
//!
//! Vertices are inserted in the order of a clockwise pre-order walk of `T2`.
//! `v_k` goes into the column of its 2-parent `v_r`, the edge to its 1-parent
//! `v_l` gets an integer slope, and the contour from `v_r` to `v2` then moves
//! one column right along each vertex's outgoing 1-edge.
//!
//! `T1` is extended with `v2 -> v1` (slope 0) and `vn -> v1`, `T2` with
//! `vn -> v2`, so that the final step is an ordinary insertion.

use crate::error::{Error, Result};
use crate::graph::{OuterFace, PlanarEmbedding};
use crate::grid::GridDrawing;
use crate::realizer::{order_from_tree, planar3tree_realizer, Direction, Realizer, Tree};
use crate::verify::{check_planarity_exact, count_segments};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertCase {
    /// `v_l` has no incoming 1-edge: continue its outgoing 1-edge.
    I,
    /// `v_l` and `v_r` are the only drawn neighbors: `inl(l) + 1`.
    II,
    /// Otherwise: `eta + 1`.
    III,
}

impl fmt::Display for InsertCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InsertCase::I => "i",
            InsertCase::II => "ii",
            InsertCase::III => "iii",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// Number of placed vertices after this step.
    pub k: usize,
    pub vertex: usize,
    pub case: InsertCase,
    /// Insertion point, before shifting.
    pub place: (i64, i64),
    /// Contour vertices moved by the shifting step.
    pub shifted: usize,
    /// Names of invariants that failed after the step, when checked.
    pub failed: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StepTrace {
    pub steps: Vec<Step>,
}

impl StepTrace {
    /// One line per step: `step k case c place x y vertex v shift m`, followed
    /// by `invariants ok` or `invariants fail I..` when they were checked.
    pub fn format(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!(
                "step {} case {} place {} {} vertex {} shift {}",
                s.k, s.case, s.place.0, s.place.1, s.vertex, s.shifted
            ));
            match &s.failed {
                Some(f) if f.is_empty() => out.push_str(" invariants ok"),
                Some(f) => out.push_str(&format!(" invariants fail {}", f.join(","))),
                None => {}
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<StepTrace> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let t: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::parse(i + 1, format!("bad trace line `{line}`"));
            if t.len() < 11
                || t[0] != "step"
                || t[2] != "case"
                || t[4] != "place"
                || t[7] != "vertex"
                || t[9] != "shift"
            {
                return Err(bad());
            }
            let num = |s: &str| s.parse::<i64>().map_err(|_| bad());
            let case = match t[3] {
                "i" => InsertCase::I,
                "ii" => InsertCase::II,
                "iii" => InsertCase::III,
                _ => return Err(bad()),
            };
            let failed = match t.get(11..) {
                Some(["invariants", "ok"]) => Some(Vec::new()),
                Some(["invariants", "fail", names]) => {
                    Some(names.split(',').map(String::from).collect())
                }
                Some([]) | None => None,
                _ => return Err(bad()),
            };
            steps.push(Step {
                k: num(t[1])? as usize,
                vertex: num(t[8])? as usize,
                case,
                place: (num(t[5])?, num(t[6])?),
                shifted: num(t[10])? as usize,
                failed,
            });
        }
        Ok(StepTrace { steps })
    }
}

/// Result of each invariant after a step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub results: Vec<(&'static str, std::result::Result<(), String>)>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.1.is_ok())
    }

    pub fn failed(&self) -> Vec<String> {
        self.results
            .iter()
            .filter(|r| r.1.is_err())
            .map(|r| r.0.to_string())
            .collect()
    }

    pub fn first_error(&self) -> Option<(&'static str, String)> {
        self.results
            .iter()
            .find_map(|(n, r)| r.as_ref().err().map(|e| (*n, e.clone())))
    }
}

/// Drawing state between steps.
#[derive(Debug, Clone)]
pub struct ContourState {
    pub outer: OuterFace,
    /// Insertion order `v1, v2, v3, ..., vn`.
    pub order: Vec<usize>,
    /// Placed vertices so far.
    pub k: usize,
    pub pos: Vec<Option<(i64, i64)>>,
    /// `C_k` from `v1` to `v2`.
    pub contour: Vec<usize>,
    pub has_in1: Vec<bool>,
    /// Highest slope of an incoming 1-edge.
    pub inl: Vec<i64>,
    /// Highest 1-edge slope.
    pub eta: i64,
    /// Leaves of the drawn part of `T1`.
    pub lambda: usize,
    /// Extended parent pointers per tree.
    parent: [Vec<Option<usize>>; 3],
    depth1: Vec<usize>,
    emb: PlanarEmbedding,
}

fn slope_cmp(dy: i64, dx: i64, s: i64) -> std::cmp::Ordering {
    // Compares dy/dx with s for dx > 0.
    (dy as i128).cmp(&(s as i128 * dx as i128))
}

impl ContourState {
    /// Places `v1`, `v2`, `v3` at `(0,0)`, `(2,0)`, `(1,1)`.
    pub fn start(emb: &PlanarEmbedding, r: &Realizer, order: Vec<usize>) -> Result<ContourState> {
        let n = emb.n();
        let outer = r.outer;
        let mut parent = r.parent.clone();
        parent[0][outer.v2] = Some(outer.v1);
        parent[0][outer.vn] = Some(outer.v1);
        parent[1][outer.vn] = Some(outer.v2);
        let mut depth1 = vec![usize::MAX; n];
        depth1[outer.v1] = 0;
        for &v in &order {
            if let Some(p) = parent[0][v] {
                depth1[v] = depth1[p] + 1;
            }
        }
        let (v1, v2, v3) = (order[0], order[1], order[2]);
        if parent[0][v3] != Some(v1) || parent[1][v3] != Some(v2) {
            return Err(invariant(3, "order", "v3 is not adjacent to v1 and v2"));
        }
        let mut pos = vec![None; n];
        pos[v1] = Some((0, 0));
        pos[v2] = Some((2, 0));
        pos[v3] = Some((1, 1));
        let mut has_in1 = vec![false; n];
        let mut inl = vec![0; n];
        has_in1[v1] = true;
        inl[v1] = 1;
        Ok(ContourState {
            outer,
            order,
            k: 3,
            pos,
            contour: vec![v1, v3, v2],
            has_in1,
            inl,
            eta: 1,
            lambda: 1,
            parent,
            depth1,
            emb: emb.clone(),
        })
    }

    fn p(&self, t: Tree, v: usize) -> Option<usize> {
        self.parent[t.index()][v]
    }

    fn at(&self, v: usize) -> (i64, i64) {
        self.pos[v].expect("placed vertex")
    }

    /// `(dy, dx)` from `a` to `b`.
    fn delta(&self, a: usize, b: usize) -> (i64, i64) {
        let (pa, pb) = (self.at(a), self.at(b));
        (pb.1 - pa.1, pb.0 - pa.0)
    }

    /// Slope of the outgoing 1-edge, if integral.
    pub fn outl1(&self, v: usize) -> Option<i64> {
        let p = self.p(Tree::T1, v)?;
        let (dy, dx) = self.delta(p, v);
        (dx > 0 && dy % dx == 0).then(|| dy / dx)
    }

    /// `C_k` from the latest vertex to `v2`.
    pub fn right_contour(&self) -> &[usize] {
        let last = self.order[self.k - 1];
        let i = self.contour.iter().position(|&x| x == last).unwrap_or(0);
        &self.contour[i..]
    }

    /// Insertion and shifting for the next vertex in the order.
    pub fn step(&mut self, forced: Option<(i64, i64)>) -> Result<Step> {
        let k = self.k + 1;
        let vk = self.order[self.k];
        let vl = self
            .p(Tree::T1, vk)
            .ok_or_else(|| invariant(k, "order", "no 1-parent"))?;
        let vr = self
            .p(Tree::T2, vk)
            .ok_or_else(|| invariant(k, "order", "no 2-parent"))?;
        let find = |v: usize| self.contour.iter().position(|&x| x == v);
        let (il, ir) = match (find(vl), find(vr)) {
            (Some(a), Some(b)) if a < b => (a, b),
            _ => return Err(invariant(k, "order", "parents not on the contour in order")),
        };
        let (case, slope) = if !self.has_in1[vl] {
            let s = self
                .outl1(vl)
                .ok_or_else(|| invariant(k, "I2", format!("1-out-slope of {vl} not integral")))?;
            (InsertCase::I, s)
        } else if ir == il + 1 {
            (InsertCase::II, self.inl[vl] + 1)
        } else {
            (InsertCase::III, self.eta + 1)
        };
        let (xl, yl) = self.at(vl);
        let (xr, _) = self.at(vr);
        let place = forced.unwrap_or((xr, yl + slope * (xr - xl)));
        self.pos[vk] = Some(place);
        self.has_in1[vl] = true;
        self.inl[vl] = self.inl[vl].max(slope);
        self.eta = self.eta.max(slope);
        if case != InsertCase::I {
            self.lambda += 1;
        }
        self.contour.splice(il + 1..ir, [vk]);
        self.k += 1;
        // Shift v_r .. v2 along their outgoing 1-edges; their parents stay.
        let moving: Vec<usize> = self.contour[il + 2..].to_vec();
        let mut moves = Vec::with_capacity(moving.len());
        for &v in &moving {
            let s = self
                .outl1(v)
                .ok_or_else(|| invariant(k, "I2", format!("1-out-slope of {v} not integral")))?;
            moves.push(s);
        }
        for (&v, s) in moving.iter().zip(moves) {
            let (x, y) = self.at(v);
            self.pos[v] = Some((x + 1, y + s));
        }
        Ok(Step {
            k,
            vertex: vk,
            case,
            place,
            shifted: moving.len(),
            failed: None,
        })
    }

    fn placed(&self) -> Vec<usize> {
        self.order[..self.k].to_vec()
    }

    /// Drawn 1-edges `(child, parent)` other than `(v2, v1)`.
    fn one_edges(&self) -> Vec<(usize, usize)> {
        self.placed()
            .into_iter()
            .filter(|&v| v != self.outer.v2)
            .filter_map(|v| self.p(Tree::T1, v).map(|p| (v, p)))
            .collect()
    }

    /// Drawing of the placed vertices with edges labeled by extended tree.
    fn subdrawing(&self, only: Option<Tree>) -> GridDrawing {
        let placed = self.placed();
        let mut idx = vec![usize::MAX; self.pos.len()];
        for (i, &v) in placed.iter().enumerate() {
            idx[v] = i;
        }
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for (u, v) in self.emb.edges() {
            if idx[u] == usize::MAX || idx[v] == usize::MAX {
                continue;
            }
            let l = self.label(u, v);
            if only.is_some() && l != only {
                continue;
            }
            edges.push((idx[u], idx[v]));
            labels.push(l);
        }
        let mut d = GridDrawing::new("3tree", placed.iter().map(|&v| self.at(v)).collect(), edges);
        d.labels = labels;
        d
    }

    /// Extended tree of an edge; the edge `v1 v2` has none.
    pub fn label(&self, u: usize, v: usize) -> Option<Tree> {
        let o = self.outer;
        if (u, v) == (o.v1, o.v2) || (u, v) == (o.v2, o.v1) {
            return None;
        }
        Tree::ALL
            .into_iter()
            .find(|&t| self.p(t, u) == Some(v) || self.p(t, v) == Some(u))
    }

    fn lca1(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth1[a] > self.depth1[b] {
            a = self.p(Tree::T1, a).unwrap();
        }
        while self.depth1[b] > self.depth1[a] {
            b = self.p(Tree::T1, b).unwrap();
        }
        while a != b {
            a = self.p(Tree::T1, a).unwrap();
            b = self.p(Tree::T1, b).unwrap();
        }
        a
    }

    pub fn check_invariants(&self) -> InvariantReport {
        InvariantReport {
            results: vec![
                ("I1", self.check_i1()),
                ("I2", self.check_i2()),
                ("I3", self.check_i3()),
                ("I4", self.check_i4()),
                ("I5", self.check_i5()),
                ("I6", self.check_i6()),
            ],
        }
    }

    fn check_i1(&self) -> std::result::Result<(), String> {
        for w in self.contour.windows(2) {
            if self.at(w[0]).0 >= self.at(w[1]).0 {
                return Err(format!("contour not x-monotone at {}-{}", w[0], w[1]));
            }
        }
        for w in self.right_contour().windows(2) {
            if self.at(w[1]).0 - self.at(w[0]).0 != 1 {
                return Err(format!("x-step between {} and {} is not 1", w[0], w[1]));
            }
        }
        Ok(())
    }

    fn check_i2(&self) -> std::result::Result<(), String> {
        for (v, p) in self.one_edges() {
            let (dy, dx) = self.delta(p, v);
            if dx <= 0 || dy % dx != 0 {
                return Err(format!("1-edge {v}-{p} has slope {dy}/{dx}"));
            }
            let s = dy / dx;
            if s < 1 || s > self.eta {
                return Err(format!(
                    "1-edge {v}-{p} slope {s} outside [1, {}]",
                    self.eta
                ));
            }
        }
        if self.eta > self.lambda as i64 {
            return Err(format!("eta {} > lambda {}", self.eta, self.lambda));
        }
        let t1 = self.subdrawing(Some(Tree::T1));
        let s = count_segments(&t1).map_err(|e| e.to_string())?;
        if s != self.lambda {
            return Err(format!(
                "1-edges use {s} segments, lambda is {}",
                self.lambda
            ));
        }
        Ok(())
    }

    fn check_i3(&self) -> std::result::Result<(), String> {
        let ones = self.one_edges();
        for w in self.right_contour().windows(2) {
            let (vi, vj) = (w[0], w[1]);
            let pj = self
                .p(Tree::T1, vj)
                .ok_or("contour vertex without 1-parent")?;
            let lca = self.lca1(vi, vj);
            if lca != pj {
                return Err(format!("lca({vi},{vj}) = {lca}, 1-parent of {vj} is {pj}"));
            }
            let oj = self.outl1(vj).ok_or("1-out-slope not integral")?;
            let mut poly = vec![vi];
            let mut x = vi;
            while x != lca {
                x = self.p(Tree::T1, x).unwrap();
                poly.push(x);
            }
            poly.push(vj);
            let pts: Vec<(i64, i64)> = poly.iter().map(|&v| self.at(v)).collect();
            for &(a, b) in &ones {
                if a == vj {
                    continue;
                }
                let (pa, pb) = (self.at(a), self.at(b));
                let mid = (pa.0 + pb.0, pa.1 + pb.1);
                if !in_closed_polygon(&pts, mid) {
                    continue;
                }
                let (dy, dx) = self.delta(b, a);
                if slope_cmp(dy, dx, oj).is_le() {
                    return Err(format!(
                        "1-edge {a}-{b} in dom({vi},{vj}) is not steeper than {oj}"
                    ));
                }
            }
        }
        Ok(())
    }

    fn check_i4(&self) -> std::result::Result<(), String> {
        for &v in self.right_contour() {
            if v == self.outer.v2 {
                continue;
            }
            let o1 = self.outl1(v).ok_or("1-out-slope not integral")?;
            let p2 = self
                .p(Tree::T2, v)
                .ok_or("contour vertex without 2-parent")?;
            let (dy, dx) = self.delta(v, p2);
            if dx <= 0 || slope_cmp(dy, dx, o1).is_ge() {
                return Err(format!("at {v}: 2-out-slope {dy}/{dx} not below {o1}"));
            }
        }
        Ok(())
    }

    fn check_i5(&self) -> std::result::Result<(), String> {
        if let Some(v) = check_planarity_exact(&self.subdrawing(None)) {
            return Err(v.to_string());
        }
        for v in self.placed() {
            let Some(p) = self.p(Tree::Tn, v) else {
                continue;
            };
            if self.pos[p].is_none() {
                continue;
            }
            let o = self.outl1(p).ok_or("1-out-slope not integral")?;
            let (dy, dx) = self.delta(v, p);
            let steeper = match dx.signum() {
                1 => slope_cmp(dy, dx, o).is_gt(),
                -1 => slope_cmp(-dy, -dx, o).is_gt(),
                _ => false,
            };
            if !steeper {
                return Err(format!("n-edge {v}-{p} slope {dy}/{dx} not above {o}"));
            }
        }
        Ok(())
    }

    fn check_i6(&self) -> std::result::Result<(), String> {
        let w = self.k as i64 - 1;
        let h = w * self.lambda as i64;
        if self.at(self.outer.v1) != (0, 0) || self.at(self.outer.v2) != (w, 0) {
            return Err(format!(
                "v1 or v2 misplaced, v2 at {:?}",
                self.at(self.outer.v2)
            ));
        }
        for v in self.placed() {
            let (x, y) = self.at(v);
            if x < 0 || x > w || y < 0 || y > h {
                return Err(format!("{v} at ({x},{y}) outside {w}x{h}"));
            }
        }
        Ok(())
    }

    /// Final drawing of all vertices.
    pub fn drawing(&self) -> GridDrawing {
        let points = self.pos.iter().map(|p| p.unwrap_or((0, 0))).collect();
        let edges = self.emb.edges();
        let labels = edges.iter().map(|&(u, v)| self.label(u, v)).collect();
        let mut d = GridDrawing::new("3tree", points, edges);
        d.labels = labels;
        d
    }
}

/// Closed point-in-polygon test with the point given in doubled coordinates.
fn in_closed_polygon(poly: &[(i64, i64)], q2: (i64, i64)) -> bool {
    let m = poly.len();
    let mut inside = false;
    for i in 0..m {
        let a = (poly[i].0 * 2, poly[i].1 * 2);
        let b = (poly[(i + 1) % m].0 * 2, poly[(i + 1) % m].1 * 2);
        let cross =
            (b.0 - a.0) as i128 * (q2.1 - a.1) as i128 - (b.1 - a.1) as i128 * (q2.0 - a.0) as i128;
        let within = q2.0 >= a.0.min(b.0)
            && q2.0 <= a.0.max(b.0)
            && q2.1 >= a.1.min(b.1)
            && q2.1 <= a.1.max(b.1);
        if cross == 0 && within {
            return true;
        }
        if (a.1 > q2.1) != (b.1 > q2.1) {
            // x of the edge at height q.y, compared without division.
            let lhs = (q2.0 - a.0) as i128 * (b.1 - a.1) as i128;
            let rhs = (b.0 - a.0) as i128 * (q2.1 - a.1) as i128;
            let right_of_edge = if b.1 > a.1 { lhs < rhs } else { lhs > rhs };
            if right_of_edge {
                inside = !inside;
            }
        }
    }
    inside
}

fn invariant(step: usize, name: &str, detail: impl Into<String>) -> Error {
    Error::InvariantViolation {
        step,
        invariant: name.into(),
        detail: detail.into(),
    }
}

/// Output of the 3-tree drawer.
#[derive(Debug, Clone)]
pub struct Planar3TreeDrawing {
    pub drawing: GridDrawing,
    pub trace: StepTrace,
    /// Realizer used, with `T1` the tree with fewest leaves.
    pub realizer: Realizer,
    pub order: Vec<usize>,
    pub lambda: usize,
}

/// Realizer with the fewest-leaf tree as `T1`; ties go to the lower index.
pub fn prepared_realizer(emb: &PlanarEmbedding, outer: OuterFace) -> Result<Realizer> {
    let r = planar3tree_realizer(emb, outer)?;
    Ok(r.with_tree_as(r.fewest_leaves(), Tree::T1))
}

/// Runs all steps from a given realizer. `check` evaluates the invariants
/// after every step and aborts on the first failure. `forced` replays
/// recorded insertion points.
pub fn draw_with_realizer(
    emb: &PlanarEmbedding,
    r: &Realizer,
    check: bool,
    forced: Option<&StepTrace>,
) -> Result<Planar3TreeDrawing> {
    let order = order_from_tree(r, emb, Tree::T2, Direction::Cw).order;
    let mut st = ContourState::start(emb, r, order.clone())?;
    let mut trace = StepTrace::default();
    if check {
        if let Some((name, detail)) = st.check_invariants().first_error() {
            return Err(invariant(3, name, detail));
        }
    }
    for (i, &v) in order.iter().enumerate().skip(3) {
        let place = match forced {
            Some(t) => {
                let s = t
                    .steps
                    .get(i - 3)
                    .ok_or_else(|| invariant(i + 1, "trace", "trace too short"))?;
                if s.vertex != v {
                    return Err(invariant(i + 1, "trace", "trace vertex differs"));
                }
                Some(s.place)
            }
            None => None,
        };
        let mut step = st.step(place)?;
        if check {
            let rep = st.check_invariants();
            if let Some((name, detail)) = rep.first_error() {
                return Err(invariant(step.k, name, detail));
            }
            step.failed = Some(Vec::new());
        }
        trace.steps.push(step);
    }
    Ok(Planar3TreeDrawing {
        drawing: st.drawing(),
        trace,
        realizer: r.clone(),
        order,
        lambda: st.lambda,
    })
}

fn outer_of(emb: &PlanarEmbedding) -> Result<OuterFace> {
    emb.outer_face().map_err(|_| Error::Not3Tree)
}

/// Draws a planar 3-tree; `check` verifies I1-I6 after every step.
pub fn draw_planar3tree(emb: &PlanarEmbedding, check: bool) -> Result<Planar3TreeDrawing> {
    let n = emb.n();
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    if n == 3 {
        if emb.num_edges() != 3 {
            return Err(Error::Not3Tree);
        }
        let d = GridDrawing::new("3tree", vec![(0, 0), (2, 0), (1, 1)], emb.edges());
        return Ok(Planar3TreeDrawing {
            drawing: d,
            trace: StepTrace::default(),
            realizer: Realizer {
                outer: OuterFace {
                    v1: 0,
                    v2: 1,
                    vn: 2,
                },
                parent: [vec![None; 3], vec![None; 3], vec![None; 3]],
                delta0: 0,
            },
            order: vec![0, 1, 2],
            lambda: 1,
        });
    }
    let r = prepared_realizer(emb, outer_of(emb)?)?;
    draw_with_realizer(emb, &r, check, None)
}

/// Rebuilds a drawing from its trace; errors if the trace does not fit.
pub fn replay(emb: &PlanarEmbedding, trace: &StepTrace) -> Result<GridDrawing> {
    let r = prepared_realizer(emb, outer_of(emb)?)?;
    Ok(draw_with_realizer(emb, &r, false, Some(trace))?.drawing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_planar3tree;

    #[test]
    fn k4_final_positions() {
        let g = crate::graph::tests::k4();
        let out = draw_planar3tree(&g, true).unwrap();
        let d = &out.drawing;
        let o = out.realizer.outer;
        assert_eq!(d.points[o.v1], (0, 0));
        assert_eq!(d.points[o.v2], (3, 0));
        assert_eq!(d.width(), 3);
        assert_eq!(out.trace.steps.len(), 1);
        assert_eq!(d.edges.len(), 6);
    }

    #[test]
    fn start_state_passes() {
        let (g, _) = generate_planar3tree(10, 1).unwrap();
        let r = prepared_realizer(&g, g.outer_face().unwrap()).unwrap();
        let order = order_from_tree(&r, &g, Tree::T2, Direction::Cw).order;
        let st = ContourState::start(&g, &r, order).unwrap();
        assert!(
            st.check_invariants().passed(),
            "{:?}",
            st.check_invariants()
        );
    }

    #[test]
    fn invariants_hold_every_step() {
        for n in [5, 10, 30, 50] {
            for seed in 0..5 {
                let (g, _) = generate_planar3tree(n, seed).unwrap();
                let out = draw_planar3tree(&g, true).unwrap();
                assert_eq!(out.trace.steps.len(), n - 3);
                assert_eq!(out.drawing.width(), n as i64 - 1);
            }
        }
    }

    #[test]
    fn final_bounds() {
        for n in [10, 50, 200] {
            for seed in 0..5 {
                let (g, _) = generate_planar3tree(n, seed).unwrap();
                let out = draw_planar3tree(&g, false).unwrap();
                let d = &out.drawing;
                let s = count_segments(d).unwrap();
                assert!(3 * s <= 8 * n - 17, "n={n} seed={seed} segments={s}");
                assert_eq!(
                    count_segments(&d.restricted_to(Tree::T1)).unwrap(),
                    out.lambda
                );
                assert!(d.height() <= (n as i64 - 1) * out.lambda as i64);
                assert!(check_planarity_exact(d).is_none());
            }
        }
    }

    #[test]
    fn shift_moves_contour_by_one_column() {
        let (g, _) = generate_planar3tree(10, 3).unwrap();
        let r = prepared_realizer(&g, g.outer_face().unwrap()).unwrap();
        let order = order_from_tree(&r, &g, Tree::T2, Direction::Cw).order;
        let mut st = ContourState::start(&g, &r, order).unwrap();
        while st.k < 10 {
            st.step(None).unwrap();
            let xs: Vec<i64> = st.right_contour().iter().map(|&v| st.at(v).0).collect();
            assert!(xs.windows(2).all(|w| w[1] == w[0] + 1), "{xs:?}");
        }
    }

    #[test]
    fn case_slopes() {
        for seed in 0..5 {
            let (g, _) = generate_planar3tree(20, seed).unwrap();
            let r = prepared_realizer(&g, g.outer_face().unwrap()).unwrap();
            let order = order_from_tree(&r, &g, Tree::T2, Direction::Cw).order;
            let mut st = ContourState::start(&g, &r, order).unwrap();
            while st.k < 20 {
                let vk = st.order[st.k];
                let vl = st.p(Tree::T1, vk).unwrap();
                let (eta, inl, out_l, segs) = (st.eta, st.inl[vl], st.outl1(vl), st.lambda);
                let step = st.step(None).unwrap();
                let (dy, dx) = st.delta(vl, vk);
                let s = dy / dx;
                match step.case {
                    InsertCase::I => {
                        assert_eq!(Some(s), out_l);
                        assert_eq!(st.lambda, segs);
                    }
                    InsertCase::II => assert!(s > inl),
                    InsertCase::III => assert_eq!(s, eta + 1),
                }
            }
        }
    }

    #[test]
    fn perturbation_detected() {
        let (g, _) = generate_planar3tree(12, 2).unwrap();
        let r = prepared_realizer(&g, g.outer_face().unwrap()).unwrap();
        let order = order_from_tree(&r, &g, Tree::T2, Direction::Cw).order;
        let mut st = ContourState::start(&g, &r, order).unwrap();
        while st.k < 12 {
            st.step(None).unwrap();
        }
        assert!(st.check_invariants().passed());
        let mut caught = 0;
        for &v in &st.order[2..] {
            let mut bad = st.clone();
            let (x, y) = bad.at(v);
            bad.pos[v] = Some((x, y + 1));
            if !bad.check_invariants().passed() {
                caught += 1;
            }
        }
        assert!(caught > 0);
    }

    #[test]
    fn trace_replays_exactly() {
        let (g, _) = generate_planar3tree(25, 7).unwrap();
        let out = draw_planar3tree(&g, true).unwrap();
        let text = out.trace.format();
        let back = StepTrace::parse(&text).unwrap();
        assert_eq!(back, out.trace);
        assert_eq!(replay(&g, &back).unwrap(), out.drawing);
        assert!(text.starts_with("step 4 case "));
    }

    #[test]
    fn rejects_non_3trees() {
        let g = crate::graph::generate_triangulation(12, 1, 40).unwrap();
        if !crate::graph::is_planar_3tree(&g) {
            assert_eq!(draw_planar3tree(&g, false).unwrap_err(), Error::Not3Tree);
        }
    }

    #[test]
    fn polygon_test() {
        let sq = [(0, 0), (2, 0), (2, 2), (0, 2)];
        assert!(in_closed_polygon(&sq, (2, 2)));
        assert!(in_closed_polygon(&sq, (0, 1)));
        assert!(!in_closed_polygon(&sq, (5, 2)));
        assert!(!in_closed_polygon(&sq, (-1, 1)));
    }
}
