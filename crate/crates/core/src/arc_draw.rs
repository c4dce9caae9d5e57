//! Triangulations drawn with few circular arcs.
//!
//! The canonical order is processed backwards. The undrawn region starts as
//! the unit disk with `v1`, `v2`, `vn` on its boundary and shrinks each time
//! a horizon vertex is processed: a new arc replaces the two boundary pieces
//! around it and its undrawn neighbors are placed on that arc.

use crate::error::{Error, Result};
use crate::graph::{classify, triangulate, OuterFace, PlanarEmbedding};
use crate::real::{precision, with_precision, Real, DEFAULT_PRECISION};
use crate::realizer::{
    canonical_order, minimize_realizer, order_from_tree, schnyder_from_order,
    validate_canonical_order, CanonicalOrder, Direction, Tree,
};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub x: Real,
    pub y: Real,
}

impl Point {
    pub fn new(x: Real, y: Real) -> Point {
        Point { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Point {
        Point::new(Real::from_f64(x), Real::from_f64(y))
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, s: &Real) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn dot(&self, o: &Point) -> Real {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Point) -> Real {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm(&self) -> Real {
        self.dot(self).sqrt()
    }

    pub fn angle(&self) -> Real {
        Real::atan2(&self.y, &self.x)
    }

    pub fn polar(c: &Point, r: &Real, a: &Real) -> Point {
        Point::new(&c.x + r * a.cos(), &c.y + r * a.sin())
    }
}

/// Edge geometry relative to the stored edge orientation `(u, v)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Primitive {
    Segment,
    /// Circular arc from `u` to `v`, counterclockwise around `center` when
    /// `ccw` is set.
    Arc {
        center: Point,
        radius: Real,
        ccw: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcDrawing {
    pub algo: String,
    pub precision: usize,
    pub points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
    pub prims: Vec<Primitive>,
    pub labels: Vec<Option<Tree>>,
    pub outer: Option<OuterFace>,
}

impl ArcDrawing {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Drops the given edges (in either orientation).
    pub fn without_edges(&self, drop: &[(usize, usize)]) -> ArcDrawing {
        let gone = |&(u, v): &(usize, usize)| drop.contains(&(u, v)) || drop.contains(&(v, u));
        let keep: Vec<usize> = (0..self.edges.len())
            .filter(|&i| !gone(&self.edges[i]))
            .collect();
        ArcDrawing {
            algo: self.algo.clone(),
            precision: self.precision,
            points: self.points.clone(),
            edges: keep.iter().map(|&i| self.edges[i]).collect(),
            prims: keep.iter().map(|&i| self.prims[i].clone()).collect(),
            labels: keep.iter().map(|&i| self.labels[i]).collect(),
            outer: self.outer,
        }
    }

    pub fn format(&self) -> String {
        let mut out = format!("# algo {}\n# precision {}\n", self.algo, self.precision);
        if let Some(o) = self.outer {
            let _ = writeln!(out, "# outer {} {} {}", o.v1, o.v2, o.vn);
        }
        for (i, p) in self.points.iter().enumerate() {
            let _ = writeln!(out, "v {i} {} {}", p.x, p.y);
        }
        for ((&(u, v), prim), label) in self.edges.iter().zip(&self.prims).zip(&self.labels) {
            match prim {
                Primitive::Segment => {
                    let _ = write!(out, "seg {u} {v}");
                }
                Primitive::Arc {
                    center,
                    radius,
                    ccw,
                } => {
                    let dir = if *ccw { "ccw" } else { "cw" };
                    let _ = write!(out, "arc {u} {v} {} {} {radius} {dir}", center.x, center.y);
                }
            }
            match label {
                Some(t) => {
                    let _ = writeln!(out, " tree={t}");
                }
                None => out.push('\n'),
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<ArcDrawing> {
        let mut prec = DEFAULT_PRECISION;
        for line in text.lines() {
            if let Some(p) = line.trim().strip_prefix("# precision ") {
                prec = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(0, "bad precision header"))?;
            }
        }
        with_precision(prec, || parse_at_precision(text, prec))
    }
}

fn parse_at_precision(text: &str, prec: usize) -> Result<ArcDrawing> {
    let mut algo = String::from("unknown");
    let mut outer = None;
    let mut pts: Vec<Option<Point>> = Vec::new();
    let mut edges = Vec::new();
    let mut prims = Vec::new();
    let mut labels = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("# algo ") {
            algo = rest.trim().to_string();
            continue;
        }
        let id = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::parse(ln, format!("bad vertex id `{s}`")))
        };
        if let Some(rest) = line.strip_prefix("# outer ") {
            let v: Vec<usize> = rest.split_whitespace().map(id).collect::<Result<_>>()?;
            if v.len() != 3 {
                return Err(Error::parse(ln, "outer needs three vertices"));
            }
            outer = Some(OuterFace {
                v1: v[0],
                v2: v[1],
                vn: v[2],
            });
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let real =
            |s: &str| Real::parse(s).ok_or_else(|| Error::parse(ln, format!("bad number `{s}`")));
        let mut toks: Vec<&str> = line.split_whitespace().collect();
        let label = match toks.last().and_then(|t| t.strip_prefix("tree=")) {
            Some(l) => {
                let t = match l {
                    "1" => Tree::T1,
                    "2" => Tree::T2,
                    "n" => Tree::Tn,
                    _ => return Err(Error::parse(ln, format!("bad label `{l}`"))),
                };
                toks.pop();
                Some(t)
            }
            None => None,
        };
        match (toks[0], toks.len()) {
            ("v", 4) => {
                let v = id(toks[1])?;
                if pts.len() <= v {
                    pts.resize(v + 1, None);
                }
                if pts[v]
                    .replace(Point::new(real(toks[2])?, real(toks[3])?))
                    .is_some()
                {
                    return Err(Error::parse(ln, format!("vertex {v} listed twice")));
                }
            }
            ("seg", 3) => {
                edges.push((id(toks[1])?, id(toks[2])?));
                prims.push(Primitive::Segment);
                labels.push(label);
            }
            ("arc", 7) => {
                let ccw = match toks[6] {
                    "ccw" => true,
                    "cw" => false,
                    d => return Err(Error::parse(ln, format!("bad direction `{d}`"))),
                };
                edges.push((id(toks[1])?, id(toks[2])?));
                prims.push(Primitive::Arc {
                    center: Point::new(real(toks[3])?, real(toks[4])?),
                    radius: real(toks[5])?,
                    ccw,
                });
                labels.push(label);
            }
            _ => return Err(Error::parse(ln, format!("unrecognized line `{line}`"))),
        }
    }
    let points = pts
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::parse(0, format!("vertex {i} missing"))))
        .collect::<Result<Vec<_>>>()?;
    for &(u, v) in &edges {
        if u >= points.len() || v >= points.len() || u == v {
            return Err(Error::parse(0, format!("edge {u} {v} has a bad endpoint")));
        }
    }
    Ok(ArcDrawing {
        algo,
        precision: prec,
        points,
        edges,
        prims,
        labels,
        outer,
    })
}

/// Arc from `p` to `q`: the points `center + radius * (cos a, sin a)` with
/// `a = start + phi` (`ccw`) or `a = start - phi`, `phi` in `[0, sweep]`.
#[derive(Debug, Clone)]
pub struct Arc {
    pub center: Point,
    pub radius: Real,
    pub ccw: bool,
    pub start: Real,
    pub sweep: Real,
}

impl Arc {
    pub fn at(&self, phi: &Real) -> Point {
        let a = if self.ccw {
            &self.start + phi
        } else {
            &self.start - phi
        };
        Point::polar(&self.center, &self.radius, &a)
    }

    /// Parameter of a point on the circle, in `[0, 2 pi)`.
    pub fn param(&self, p: &Point) -> Real {
        let a = p.sub(&self.center).angle();
        let d = if self.ccw {
            a - &self.start
        } else {
            &self.start - a
        };
        norm_angle(d)
    }

    /// Unit tangent in the direction of travel at point `p` of the circle.
    pub fn tangent(&self, p: &Point) -> Point {
        let d = p.sub(&self.center);
        let t = if self.ccw {
            Point::new(-&d.y, d.x.clone())
        } else {
            Point::new(d.y.clone(), -&d.x)
        };
        let n = t.norm();
        Point::new(&t.x / &n, &t.y / &n)
    }

    /// Smallest `t > 0` with `origin + t * dir` on the circle.
    pub fn ray_hit(&self, origin: &Point, dir: &Point) -> Option<Real> {
        let f = origin.sub(&self.center);
        let a = dir.dot(dir);
        let b = dir.dot(&f);
        let c = f.dot(&f) - &self.radius * &self.radius;
        let disc = &b * &b - &a * &c;
        if disc.is_negative() {
            return None;
        }
        let s = disc.sqrt();
        let zero = Real::zero();
        let t1 = (-&b - &s) / &a;
        if t1 > zero {
            return Some(t1);
        }
        let t2 = (-&b + &s) / &a;
        (t2 > zero).then_some(t2)
    }
}

fn norm_angle(mut a: Real) -> Real {
    let two_pi = Real::pi() * Real::from_i64(2);
    let zero = Real::zero();
    while a.is_negative() {
        a = a + &two_pi;
    }
    while a >= two_pi {
        a = a - &two_pi;
    }
    if a < zero {
        zero
    } else {
        a
    }
}

/// Relative curvature backoff applied to every new arc.
pub fn curvature_backoff() -> Real {
    Real::pow2(-20)
}

/// Lowest working precision with a precision floor below 2^-8.
pub const MIN_PRECISION: usize = 72;

/// Smallest distance treated as nonzero at the working precision.
pub fn precision_floor() -> Real {
    Real::pow2(-(precision() as i32 - 64))
}

/// The arc from `p` to `q` inside triangle `p q apex` with the largest
/// curvature, relaxed by the curvature backoff so that it stays strictly
/// inside.
pub fn max_curvature_arc(p: &Point, q: &Point, apex: &Point) -> Result<Arc> {
    let chord = q.sub(p);
    let cross = chord.cross(&apex.sub(p));
    let l = chord.norm();
    let floor = precision_floor();
    if cross.abs() <= &floor * &l || l <= floor {
        return Err(Error::DegenerateTriangle);
    }
    // The circle tangent at the sharper corner has the larger radius:
    // R = L^2 * |apex - T| / (2 |cross|).
    let far = apex.sub(p).norm().max(apex.sub(q).norm());
    let r = &l * &l * far / (Real::from_i64(2) * cross.abs());
    let r = r / (Real::one() - curvature_backoff());
    let half = &l / Real::from_i64(2);
    let h = (&r * &r - &half * &half).sqrt();
    // Unit normal of the chord pointing toward the apex.
    let mut nu = Point::new(-&chord.y / &l, &chord.x / &l);
    if cross.is_negative() {
        nu = nu.scale(&Real::from_i64(-1));
    }
    let mid = p.add(q).scale(&Real::from_f64(0.5));
    let center = mid.sub(&nu.scale(&h));
    let start = p.sub(&center).angle();
    let sweep = Real::atan2(&half, &h) * Real::from_i64(2);
    Ok(Arc {
        center,
        radius: r,
        ccw: cross.is_negative(),
        start,
        sweep,
    })
}

/// Horizon `h_1 = v1, ..., h_k = v2` with the boundary piece between
/// consecutive horizon vertices, each traversed left to right.
#[derive(Debug, Clone)]
pub struct HorizonState {
    pub horizon: Vec<usize>,
    pub pieces: Vec<Arc>,
    /// Upper endpoint of the alignment segment of every placed vertex.
    pub ell: Vec<Option<usize>>,
}

struct Drawer {
    outer: OuterFace,
    points: Vec<Option<Point>>,
    edges: Vec<DrawnEdge>,
    state: HorizonState,
}

fn arc_prim(arc: &Arc, from: usize, to: usize) -> (usize, usize, Primitive) {
    let (u, v, ccw) = if from < to {
        (from, to, arc.ccw)
    } else {
        (to, from, !arc.ccw)
    };
    (
        u,
        v,
        Primitive::Arc {
            center: arc.center.clone(),
            radius: arc.radius.clone(),
            ccw,
        },
    )
}

/// Edge `(u, v)` with its primitive.
pub type DrawnEdge = (usize, usize, Primitive);

/// Places `v1`, `v2`, `vn` on the unit circle at 210, 330 and 90 degrees;
/// the circle covers the three outer edges.
pub fn init_canvas(
    n: usize,
    outer: OuterFace,
) -> (HorizonState, Vec<Option<Point>>, Vec<DrawnEdge>) {
    let s = Real::from_i64(3).sqrt() / Real::from_i64(2);
    let half = Real::from_f64(0.5);
    let mut points = vec![None; n];
    let OuterFace { v1, v2, vn } = outer;
    points[v1] = Some(Point::new(-&s, -&half));
    points[v2] = Some(Point::new(s.clone(), -&half));
    points[vn] = Some(Point::new(Real::zero(), Real::one()));
    let unit = |from: usize, to: usize, ccw: bool| {
        let a = points[from].clone().unwrap();
        let b = points[to].clone().unwrap();
        let start = a.angle();
        let end = b.angle();
        let sweep = if ccw {
            norm_angle(end - &start)
        } else {
            norm_angle(&start - end)
        };
        Arc {
            center: Point::new(Real::zero(), Real::zero()),
            radius: Real::one(),
            ccw,
            start,
            sweep,
        }
    };
    let left = unit(v1, vn, false);
    let right = unit(vn, v2, false);
    let bottom = unit(v1, v2, true);
    let edges = vec![
        arc_prim(&bottom, v1, v2),
        arc_prim(&left, v1, vn),
        arc_prim(&right, vn, v2),
    ];
    let state = HorizonState {
        horizon: vec![v1, vn, v2],
        pieces: vec![left, right],
        ell: vec![None; n],
    };
    (state, points, edges)
}

fn breakdown(step: usize, detail: impl Into<String>) -> Error {
    Error::GeometryBreakdown {
        step,
        detail: detail.into(),
    }
}

fn violation(step: usize, invariant: &str, detail: impl Into<String>) -> Error {
    Error::InvariantViolation {
        step,
        invariant: invariant.into(),
        detail: detail.into(),
    }
}

impl Drawer {
    fn pt(&self, v: usize) -> &Point {
        self.points[v].as_ref().expect("vertex drawn")
    }

    /// Processes horizon vertex `h` whose undrawn neighbors are `kids`, in
    /// order from left to right.
    fn process(&mut self, step: usize, h: usize, kids: &[usize]) -> Result<()> {
        let st = &self.state;
        let i = st
            .horizon
            .iter()
            .position(|&x| x == h)
            .ok_or_else(|| violation(step, "horizon", format!("{h} not on the horizon")))?;
        if i == 0 || i + 1 == st.horizon.len() {
            return Err(violation(step, "horizon", "processing v1 or v2"));
        }
        let (p, q) = (st.horizon[i - 1], st.horizon[i + 1]);
        let (pp, qp, hp) = (self.pt(p).clone(), self.pt(q).clone(), self.pt(h).clone());
        let arc = max_curvature_arc(&pp, &qp, &hp).map_err(|_| breakdown(step, "flat triangle"))?;
        let floor = precision_floor();
        let zero = Real::zero();

        // Designated part of the arc, cut by the segments h-v1 and h-v2.
        let cut = |target: usize, end: &Point| -> Result<Real> {
            let dir = end.sub(&hp);
            match arc.ray_hit(&hp, &dir) {
                Some(t) if t <= Real::one() => {
                    let phi = arc.param(&hp.add(&dir.scale(&t)));
                    if phi <= arc.sweep {
                        return Ok(phi);
                    }
                }
                _ => {}
            }
            Err(breakdown(
                step,
                format!("segment to {target} misses the arc"),
            ))
        };
        let o = self.outer;
        let phi_s = if p == o.v1 {
            zero.clone()
        } else {
            cut(o.v1, &self.pt(o.v1).clone())?
        };
        let phi_e = if q == o.v2 {
            arc.sweep.clone()
        } else {
            cut(o.v2, &self.pt(o.v2).clone())?
        };
        if (&phi_e - &phi_s) * &arc.radius <= floor {
            return Err(breakdown(step, "designated part collapsed"));
        }

        // Continuation of the alignment segment of h.
        let aligned = match st.ell[h] {
            Some(a) => {
                let dir = hp.sub(self.pt(a));
                let t = arc
                    .ray_hit(&hp, &dir)
                    .ok_or_else(|| violation(step, "alignment", "extension misses the arc"))?;
                let x = hp.add(&dir.scale(&t));
                let phi = arc.param(&x);
                if !(phi > phi_s && phi < phi_e) {
                    return Err(violation(
                        step,
                        "alignment",
                        format!("extension of the segment into {h} leaves the designated part"),
                    ));
                }
                Some((phi, x))
            }
            None => None,
        };

        let m = kids.len();
        let mut placed: Vec<Point> = Vec::with_capacity(m);
        let mut params: Vec<Real> = Vec::with_capacity(m);
        let frac = |a: &Real, b: &Real, num: usize, den: usize| {
            a + (b - a) * Real::from_i64(num as i64) / Real::from_i64(den as i64)
        };
        match &aligned {
            Some((phi_a, xa)) if m > 0 => {
                let g = (phi_a - &phi_s) / (&phi_e - &phi_s);
                let jf = (g * Real::from_i64(m as i64)).to_f64().floor();
                let j = (jf.max(0.0) as usize).min(m - 1);
                for k in 0..m {
                    if k == j {
                        params.push(phi_a.clone());
                        placed.push(xa.clone());
                        continue;
                    }
                    let phi = if k < j {
                        frac(&phi_s, phi_a, k + 1, j + 1)
                    } else {
                        frac(phi_a, &phi_e, k - j, m - j)
                    };
                    placed.push(arc.at(&phi));
                    params.push(phi);
                }
            }
            _ => {
                for k in 0..m {
                    let phi = frac(&phi_s, &phi_e, k + 1, m + 1);
                    placed.push(arc.at(&phi));
                    params.push(phi);
                }
            }
        }
        let mut prev = zero.clone();
        for phi in params.iter().chain(std::iter::once(&arc.sweep)) {
            if (phi - &prev) * &arc.radius <= floor {
                return Err(breakdown(step, "neighbors too close on the arc"));
            }
            prev = phi.clone();
        }

        // Commit.
        let mut chain = vec![p];
        chain.extend_from_slice(kids);
        chain.push(q);
        for w in chain.windows(2) {
            self.edges.push(arc_prim(&arc, w[0], w[1]));
        }
        for (&k, x) in kids.iter().zip(placed) {
            self.points[k] = Some(x);
            self.edges.push((h.min(k), h.max(k), Primitive::Segment));
        }
        let st = &mut self.state;
        for &k in kids {
            st.ell[k] = Some(h);
        }
        st.horizon.splice(i..=i, kids.iter().copied());
        let pieces = std::iter::repeat_n(arc, m + 1);
        st.pieces.splice(i - 1..=i, pieces);
        self.check_state(step, kids)
    }

    /// Convexity of the undrawn region and the alignment invariant for the
    /// newly placed vertices.
    fn check_state(&self, step: usize, fresh: &[usize]) -> Result<()> {
        let st = &self.state;
        let tol = Real::pow2(-(precision() as i32 / 2));
        for j in 1..st.horizon.len() - 1 {
            let x = self.pt(st.horizon[j]);
            if st.pieces[j - 1].ccw || st.pieces[j].ccw {
                return Err(violation(step, "convexity", "boundary arc bulges inward"));
            }
            let tin = st.pieces[j - 1].tangent(x);
            let tout = st.pieces[j].tangent(x);
            if tin.cross(&tout) > tol {
                return Err(violation(
                    step,
                    "convexity",
                    format!("reflex corner at {}", st.horizon[j]),
                ));
            }
        }
        let unit = Arc {
            center: Point::new(Real::zero(), Real::zero()),
            radius: Real::one(),
            ccw: true,
            start: Real::zero(),
            sweep: Real::zero(),
        };
        let low = Real::from_f64(-0.5);
        for &v in fresh {
            let a = st.ell[v].unwrap();
            let x = self.pt(v);
            let dir = x.sub(self.pt(a));
            let ok = unit
                .ray_hit(x, &dir)
                .map(|t| x.add(&dir.scale(&t)).y < low)
                .unwrap_or(false);
            if !ok {
                return Err(violation(
                    step,
                    "alignment",
                    format!("extension below {v} misses the bottom arc"),
                ));
            }
        }
        Ok(())
    }
}

/// Default order: minimal realizer, fewest-leaf tree as `Tn`, clockwise
/// pre-order walk of `T2`.
pub fn default_order(emb: &PlanarEmbedding) -> Result<CanonicalOrder> {
    let outer = emb.outer_face()?;
    let co = canonical_order(emb, outer)?;
    let r = schnyder_from_order(emb, &co);
    let m = minimize_realizer(emb, &r);
    let r = m.with_tree_as(m.fewest_leaves(), Tree::Tn);
    Ok(order_from_tree(&r, emb, Tree::T2, Direction::Cw))
}

/// Draws a triangulation at the current working precision.
pub fn draw_triangulation_arcs(
    emb: &PlanarEmbedding,
    order: Option<&CanonicalOrder>,
) -> Result<ArcDrawing> {
    let n = emb.n();
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    if precision() < MIN_PRECISION {
        return Err(breakdown(
            0,
            format!(
                "{} bits is below the minimum of {MIN_PRECISION}",
                precision()
            ),
        ));
    }
    if !emb.is_triangulation() {
        return Err(Error::NotTriangulation(format!("class {}", classify(emb))));
    }
    let co = match order {
        Some(co) => {
            validate_canonical_order(emb, co).map_err(|e| violation(0, "canonical order", e))?;
            co.clone()
        }
        None => default_order(emb)?,
    };
    let rank = co.ranks();
    let (state, points, edges) = init_canvas(n, co.outer);
    let mut d = Drawer {
        outer: co.outer,
        points,
        edges,
        state,
    };
    for k in (3..n).rev() {
        let h = co.order[k];
        // Earlier neighbors of h form a ccw run; its inner part is undrawn.
        let rot = emb.rotation(h);
        let deg = rot.len();
        let start = (0..deg)
            .find(|&j| {
                let before = rot[(j + deg - 1) % deg];
                rank[rot[j]] < k && (rank[before] > k || (k == n - 1 && rot[j] == co.outer.v1))
            })
            .ok_or_else(|| violation(n - k, "canonical order", format!("{h} has no lower run")))?;
        let run: Vec<usize> = (0..deg)
            .map(|j| rot[(start + j) % deg])
            .take_while(|&w| rank[w] < k)
            .collect();
        let kids = &run[1..run.len() - 1];
        if let Some(&w) = kids.iter().find(|&&w| d.points[w].is_some()) {
            return Err(violation(
                n - k,
                "canonical order",
                format!("{w} drawn twice"),
            ));
        }
        d.process(n - k, h, kids)?;
    }
    let r = schnyder_from_order(emb, &co);
    let mut edges = d.edges;
    edges.sort_by_key(|e| (e.0, e.1));
    let labels = edges
        .iter()
        .map(|&(u, v, _)| r.edge_tree(u, v).map(|(t, _)| t))
        .collect();
    Ok(ArcDrawing {
        algo: "tri-arcs".into(),
        precision: precision(),
        points: d
            .points
            .into_iter()
            .map(|p| p.expect("all vertices drawn"))
            .collect(),
        edges: edges.iter().map(|e| (e.0, e.1)).collect(),
        prims: edges.into_iter().map(|e| e.2).collect(),
        labels,
        outer: Some(co.outer),
    })
}

/// Face-size reduction `R = sum over faces of max(0, |f| - 5)` together
/// with `max(0, 5n - 3e)`.
pub fn reduction_r(emb: &PlanarEmbedding) -> (usize, usize) {
    let r = emb
        .faces()
        .sizes()
        .iter()
        .map(|&s| s.saturating_sub(5))
        .sum();
    let lower = (5 * emb.n()).saturating_sub(3 * emb.num_edges());
    (r, lower)
}

/// Triangulates with face fans, draws, and deletes the chords again.
pub fn draw_planar_arcs(emb: &PlanarEmbedding) -> Result<ArcDrawing> {
    let n = emb.n();
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    if !emb.is_connected() {
        return Err(Error::NotConnected);
    }
    let tri = triangulate(emb)?;
    let d = draw_triangulation_arcs(&tri.embedding, None)?;
    let chords: Vec<(usize, usize)> = tri.chords.iter().map(|c| (c.u, c.v)).collect();
    let mut out = d.without_edges(&chords);
    out.algo = "planar-arcs".into();
    Ok(out)
}
