//! Checks on drawings made of circular arcs and segments.

use crate::arc_draw::{Arc, ArcDrawing, Point, Primitive};
use crate::real::{with_precision, Real};
use crate::realizer::Tree;
use std::collections::VecDeque;
use std::fmt;

/// Tolerances in unit-circle scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Intersections closer than this to a shared endpoint are ignored.
    pub eps_x: f64,
    /// Relative tolerance for two arcs lying on one circle.
    pub eps_on: f64,
    /// Tolerance on the sine of the angle between collinear directions.
    pub eps_dir: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_x: 1e-9,
            eps_on: 1e-9,
            eps_dir: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn uniform(eps: f64) -> Self {
        Tolerances {
            eps_x: eps,
            eps_on: eps,
            eps_dir: eps,
        }
    }
}

/// Geometry of one edge, oriented from `edges[i].0` to `edges[i].1`.
enum Geo {
    Seg(Point, Point),
    Arc(Arc),
}

fn geometry(d: &ArcDrawing, i: usize) -> Geo {
    let (u, v) = d.edges[i];
    let (pu, pv) = (d.points[u].clone(), d.points[v].clone());
    match &d.prims[i] {
        Primitive::Segment => Geo::Seg(pu, pv),
        Primitive::Arc {
            center,
            radius,
            ccw,
        } => {
            let mut arc = Arc {
                center: center.clone(),
                radius: radius.clone(),
                ccw: *ccw,
                start: pu.sub(center).angle(),
                sweep: Real::zero(),
            };
            arc.sweep = arc.param(&pv);
            if arc.sweep.is_zero() {
                // Start and end coincide: a full circle.
                arc.sweep = two_pi();
            }
            Geo::Arc(arc)
        }
    }
}

fn two_pi() -> Real {
    Real::pi() * Real::from_i64(2)
}

/// Unit direction leaving vertex `x` along edge `i`.
fn leaving(d: &ArcDrawing, g: &Geo, i: usize, x: usize) -> Point {
    let (u, v) = d.edges[i];
    let other = if x == u { v } else { u };
    let t = match g {
        Geo::Seg(..) => d.points[other].sub(&d.points[x]),
        Geo::Arc(a) => {
            let t = a.tangent(&d.points[x]);
            if x == u {
                t
            } else {
                t.scale(&Real::from_i64(-1))
            }
        }
    };
    let n = t.norm();
    Point::new(&t.x / &n, &t.y / &n)
}

fn same_circle(a: &Arc, b: &Arc, eps: &Real) -> bool {
    let tol = eps * &a.radius;
    b.center.sub(&a.center).norm() <= tol && (&a.radius - &b.radius).abs() <= tol
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Union of primitives that continue each other through a vertex.
fn merged(d: &ArcDrawing, tol: &Tolerances) -> (Vec<usize>, Vec<Geo>) {
    let e = d.edges.len();
    let geo: Vec<Geo> = (0..e).map(|i| geometry(d, i)).collect();
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); d.n()];
    for (i, &(u, v)) in d.edges.iter().enumerate() {
        at[u].push(i);
        at[v].push(i);
    }
    let eps_dir = Real::from_f64(tol.eps_dir);
    let eps_on = Real::from_f64(tol.eps_on);
    let zero = Real::zero();
    let mut parent: Vec<usize> = (0..e).collect();
    for (x, inc) in at.iter().enumerate() {
        let dirs: Vec<Point> = inc.iter().map(|&i| leaving(d, &geo[i], i, x)).collect();
        for a in 0..inc.len() {
            for b in a + 1..inc.len() {
                let (i, j) = (inc[a], inc[b]);
                let joins = match (&geo[i], &geo[j]) {
                    (Geo::Seg(..), Geo::Seg(..)) => {
                        dirs[a].cross(&dirs[b]).abs() <= eps_dir && dirs[a].dot(&dirs[b]) < zero
                    }
                    (Geo::Arc(p), Geo::Arc(q)) => {
                        same_circle(p, q, &eps_on) && dirs[a].dot(&dirs[b]) < zero
                    }
                    _ => false,
                };
                if joins {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    let roots = (0..e).map(|i| find(&mut parent, i)).collect();
    (roots, geo)
}

/// Number of maximal arcs and segments after merging.
pub fn count_arcs(d: &ArcDrawing, tol: &Tolerances) -> usize {
    let (arcs, segs) = primitive_counts(d, tol);
    arcs + segs
}

/// `(arcs, segments)` after merging; a closed circle counts once.
pub fn primitive_counts(d: &ArcDrawing, tol: &Tolerances) -> (usize, usize) {
    with_precision(d.precision, || {
        let (roots, geo) = merged(d, tol);
        let mut arcs = 0;
        let mut segs = 0;
        for (i, &r) in roots.iter().enumerate() {
            if r == i {
                match geo[i] {
                    Geo::Seg(..) => segs += 1,
                    Geo::Arc(_) => arcs += 1,
                }
            }
        }
        (arcs, segs)
    })
}

/// Degrees of freedom: five per arc, four per segment.
pub fn dof(d: &ArcDrawing, tol: &Tolerances) -> usize {
    let (a, s) = primitive_counts(d, tol);
    5 * a + 4 * s
}

/// Every non-leaf vertex of the `Tn` segment tree, other than its root, has
/// exactly one child segment continuing its parent segment.
pub fn tn_chain_collinear(d: &ArcDrawing, tol: &Tolerances) -> std::result::Result<(), String> {
    let root = d.outer.ok_or("drawing has no outer face header")?.vn;
    with_precision(d.precision, || {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); d.n()];
        for (i, &(u, v)) in d.edges.iter().enumerate() {
            if d.labels[i] == Some(Tree::Tn) && d.prims[i] == Primitive::Segment {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut parent = vec![usize::MAX; d.n()];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        let mut order = Vec::new();
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let eps = Real::from_f64(tol.eps_dir);
        let zero = Real::zero();
        let unit = |a: usize, b: usize| {
            let t = d.points[b].sub(&d.points[a]);
            let n = t.norm();
            Point::new(&t.x / &n, &t.y / &n)
        };
        for &x in &order {
            if x == root {
                continue;
            }
            let kids: Vec<usize> = adj[x]
                .iter()
                .copied()
                .filter(|&y| parent[y] == x && y != parent[x])
                .collect();
            if kids.is_empty() {
                continue;
            }
            let out = unit(x, parent[x]);
            let aligned = kids
                .iter()
                .filter(|&&c| {
                    let inc = unit(c, x);
                    inc.cross(&out).abs() <= eps && inc.dot(&out) > zero
                })
                .count();
            if aligned != 1 {
                return Err(format!(
                    "vertex {x}: {aligned} incoming segments continue the outgoing one"
                ));
            }
        }
        Ok(())
    })
}

/// Two primitives meeting away from their shared endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcViolation {
    pub e1: (usize, usize),
    pub e2: (usize, usize),
    /// Witness point.
    pub at: (f64, f64),
    /// Distance from the witness to the nearest shared endpoint, or to the
    /// nearest endpoint when none is shared.
    pub distance: f64,
    pub overlap: bool,
}

impl fmt::Display for ArcViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = if self.overlap { "overlap" } else { "meet" };
        write!(
            f,
            "edges {}-{} and {}-{} {what} at ({:.3e}, {:.3e}), {:.3e} from an endpoint",
            self.e1.0, self.e1.1, self.e2.0, self.e2.1, self.at.0, self.at.1, self.distance
        )
    }
}

/// Floating bounding box, padded to absorb conversion error.
fn bbox(g: &Geo) -> [f64; 4] {
    const PAD: f64 = 1e-12;
    let (a, b, extra) = match g {
        Geo::Seg(a, b) => (a.clone(), b.clone(), 0.0),
        Geo::Arc(arc) => {
            let a = arc.at(&Real::zero());
            let b = arc.at(&arc.sweep);
            let r = arc.radius.to_f64();
            let sweep = arc.sweep.to_f64();
            let extra = if sweep <= std::f64::consts::PI {
                let half = b.sub(&a).norm() / Real::from_i64(2);
                let rr = &arc.radius;
                (rr - (rr * rr - &half * &half).sqrt()).to_f64()
            } else {
                2.0 * r
            };
            (a, b, extra)
        }
    };
    let (ax, ay, bx, by) = (a.x.to_f64(), a.y.to_f64(), b.x.to_f64(), b.y.to_f64());
    [
        ax.min(bx) - extra - PAD,
        ay.min(by) - extra - PAD,
        ax.max(bx) + extra + PAD,
        ay.max(by) + extra + PAD,
    ]
}

struct Ctx {
    /// Length below rounding noise.
    tiny: Real,
    zero: Real,
    two_pi: Real,
}

impl Ctx {
    fn on_arc(&self, a: &Arc, x: &Point) -> bool {
        let tol = &self.tiny / &a.radius;
        let phi = a.param(x);
        phi <= &a.sweep + &tol || phi >= &self.two_pi - &tol
    }

    fn on_seg(&self, p: &Point, q: &Point, x: &Point) -> bool {
        let dir = q.sub(p);
        let len2 = dir.dot(&dir);
        let t = x.sub(p).dot(&dir) / &len2;
        let tol = &self.tiny / len2.sqrt();
        t >= -&tol && t <= Real::one() + tol
    }

    fn on(&self, g: &Geo, x: &Point) -> bool {
        match g {
            Geo::Seg(p, q) => self.on_seg(p, q, x),
            Geo::Arc(a) => self.on_arc(a, x),
        }
    }

    /// Candidate common points of the supporting curves, plus an overlap
    /// flag with its length when the curves coincide.
    fn meet(&self, g: &Geo, h: &Geo) -> (Vec<Point>, Option<(Real, Point)>) {
        match (g, h) {
            (Geo::Seg(a, b), Geo::Seg(c, e)) => self.seg_seg(a, b, c, e),
            (Geo::Seg(a, b), Geo::Arc(arc)) | (Geo::Arc(arc), Geo::Seg(a, b)) => {
                (self.line_circle(a, b, arc), None)
            }
            (Geo::Arc(p), Geo::Arc(q)) => self.circle_circle(p, q),
        }
    }

    fn seg_seg(
        &self,
        a: &Point,
        b: &Point,
        c: &Point,
        e: &Point,
    ) -> (Vec<Point>, Option<(Real, Point)>) {
        let d1 = b.sub(a);
        let d2 = e.sub(c);
        let l1 = d1.norm();
        let l2 = d2.norm();
        let den = d1.cross(&d2);
        let ca = c.sub(a);
        if den.abs() <= &self.tiny * &l2 {
            if (d1.cross(&ca) / &l1).abs() > self.tiny {
                return (vec![], None);
            }
            // Collinear: overlap of the projections onto `ab`.
            let u = Point::new(&d1.x / &l1, &d1.y / &l1);
            let tc = ca.dot(&u);
            let te = e.sub(a).dot(&u);
            let lo = tc.clone().min(te.clone()).max(self.zero.clone());
            let hi = tc.max(te).min(l1);
            if hi < lo {
                return (vec![], None);
            }
            let mid = a.add(&u.scale(&((&lo + &hi) / Real::from_i64(2))));
            return (
                vec![a.add(&u.scale(&lo)), a.add(&u.scale(&hi))],
                Some((hi - lo, mid)),
            );
        }
        let s = ca.cross(&d2) / &den;
        (vec![a.add(&d1.scale(&s))], None)
    }

    fn line_circle(&self, a: &Point, b: &Point, arc: &Arc) -> Vec<Point> {
        let dir = b.sub(a);
        let f = a.sub(&arc.center);
        let qa = dir.dot(&dir);
        let qb = dir.dot(&f);
        let qc = f.dot(&f) - &arc.radius * &arc.radius;
        let disc = &qb * &qb - &qa * &qc;
        if disc.is_negative() {
            // Tangency lost to rounding still counts as one touching point.
            if disc.abs() > &self.tiny * &qa * &arc.radius {
                return vec![];
            }
            return vec![a.add(&dir.scale(&(-&qb / &qa)))];
        }
        let s = disc.sqrt();
        [(-&qb - &s) / &qa, (-&qb + &s) / &qa]
            .iter()
            .map(|t| a.add(&dir.scale(t)))
            .collect()
    }

    fn circle_circle(&self, p: &Arc, q: &Arc) -> (Vec<Point>, Option<(Real, Point)>) {
        let dc = q.center.sub(&p.center);
        let d = dc.norm();
        let r1 = &p.radius;
        let r2 = &q.radius;
        if d <= self.tiny && (r1 - r2).abs() <= self.tiny {
            return self.same_circle_overlap(p, q);
        }
        if d > r1 + r2 + &self.tiny || d < (r1 - r2).abs() - &self.tiny || d.is_zero() {
            return (vec![], None);
        }
        let a = (&d * &d + r1 * r1 - r2 * r2) / (Real::from_i64(2) * &d);
        let h2 = r1 * r1 - &a * &a;
        let h = if h2.is_negative() {
            Real::zero()
        } else {
            h2.sqrt()
        };
        let ex = Point::new(&dc.x / &d, &dc.y / &d);
        let base = p.center.add(&ex.scale(&a));
        let perp = Point::new(-&ex.y, ex.x.clone());
        (
            vec![base.add(&perp.scale(&h)), base.sub(&perp.scale(&h))],
            None,
        )
    }

    /// Arcs on one circle: their angular intervals may overlap.
    fn same_circle_overlap(&self, p: &Arc, q: &Arc) -> (Vec<Point>, Option<(Real, Point)>) {
        // Counterclockwise start angle of each arc.
        let ccw_start = |a: &Arc| {
            if a.ccw {
                a.start.clone()
            } else {
                &a.start - &a.sweep
            }
        };
        let (s1, s2) = (ccw_start(p), ccw_start(q));
        let mut off = &s2 - &s1;
        while off.is_negative() {
            off = off + &self.two_pi;
        }
        while off >= self.two_pi {
            off = off - &self.two_pi;
        }
        let mut best: Option<(Real, Real)> = None;
        for shift in [off.clone(), &off - &self.two_pi] {
            let lo = shift.clone().max(self.zero.clone());
            let hi = (&shift + &q.sweep).min(p.sweep.clone());
            if hi >= lo && best.as_ref().is_none_or(|(b, _)| &hi - &lo > *b) {
                best = Some((&hi - &lo, lo));
            }
        }
        let Some((len, lo)) = best else {
            return (vec![], None);
        };
        let at = |phi: &Real| Point::polar(&p.center, &p.radius, &(&s1 + phi));
        let hi = &lo + &len;
        let mid = at(&((&lo + &hi) / Real::from_i64(2)));
        (vec![at(&lo), at(&hi)], Some((len * &p.radius, mid)))
    }
}

/// Pairwise intersection test; returns the first violation found.
pub fn check_planarity_tol(d: &ArcDrawing, tol: &Tolerances) -> Option<ArcViolation> {
    with_precision(d.precision, || check_at_precision(d, tol))
}

fn check_at_precision(d: &ArcDrawing, tol: &Tolerances) -> Option<ArcViolation> {
    let e = d.edges.len();
    let geo: Vec<Geo> = (0..e).map(|i| geometry(d, i)).collect();
    let boxes: Vec<[f64; 4]> = geo.iter().map(bbox).collect();
    let ctx = Ctx {
        tiny: Real::pow2(-(d.precision as i32 - 32)),
        zero: Real::zero(),
        two_pi: two_pi(),
    };
    let eps = Real::from_f64(tol.eps_x);
    let mut order: Vec<usize> = (0..e).collect();
    order.sort_by(|&a, &b| boxes[a][0].total_cmp(&boxes[b][0]));
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if boxes[j][0] > boxes[i][2] {
                break;
            }
            if boxes[j][1] > boxes[i][3] || boxes[i][1] > boxes[j][3] {
                continue;
            }
            let (a, b) = d.edges[i];
            let (c, f) = d.edges[j];
            let shared: Vec<usize> = [a, b].into_iter().filter(|&x| x == c || x == f).collect();
            let refs: Vec<usize> = if shared.is_empty() {
                vec![a, b, c, f]
            } else {
                shared.clone()
            };
            let dist = |x: &Point| {
                refs.iter()
                    .map(|&v| x.sub(&d.points[v]).norm())
                    .reduce(Real::min)
                    .unwrap()
            };
            let (pts, overlap) = ctx.meet(&geo[i], &geo[j]);
            let (e1, e2) = (d.edges[i].min(d.edges[j]), d.edges[i].max(d.edges[j]));
            if let Some((len, mid)) = overlap {
                if len > eps {
                    return Some(ArcViolation {
                        e1,
                        e2,
                        at: (mid.x.to_f64(), mid.y.to_f64()),
                        distance: dist(&mid).to_f64(),
                        overlap: true,
                    });
                }
            }
            for x in pts {
                if !ctx.on(&geo[i], &x) || !ctx.on(&geo[j], &x) {
                    continue;
                }
                let r = dist(&x);
                if shared.is_empty() || r >= eps {
                    return Some(ArcViolation {
                        e1,
                        e2,
                        at: (x.x.to_f64(), x.y.to_f64()),
                        distance: r.to_f64(),
                        overlap: false,
                    });
                }
            }
        }
    }
    None
}

/// Smallest angle between consecutive curve directions at any vertex.
pub fn angular_resolution_arcs(d: &ArcDrawing) -> Option<f64> {
    with_precision(d.precision, || {
        let e = d.edges.len();
        let geo: Vec<Geo> = (0..e).map(|i| geometry(d, i)).collect();
        let mut dirs: Vec<Vec<Real>> = vec![Vec::new(); d.n()];
        for (i, &(u, v)) in d.edges.iter().enumerate() {
            for x in [u, v] {
                dirs[x].push(leaving(d, &geo[i], i, x).angle());
            }
        }
        let tau = two_pi();
        let mut best: Option<Real> = None;
        for mut a in dirs {
            if a.len() < 2 {
                continue;
            }
            a.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
            let mut g = &a[0] + &tau - &a[a.len() - 1];
            for w in a.windows(2) {
                g = g.min(&w[1] - &w[0]);
            }
            best = Some(match best {
                Some(b) => b.min(g),
                None => g,
            });
        }
        best.map(|b| b.to_f64())
    })
}
