//! SVG export with a 5% margin and the y-axis pointing up.
//!
//! With `color` set, `T1`, `T2` and `Tn` edges are drawn red, blue and
//! green; unlabeled edges are black.

use crate::arc_draw::{ArcDrawing, Primitive};
use crate::grid::GridDrawing;
use crate::real::with_precision;
use crate::realizer::Tree;
use std::f64::consts::PI;
use std::fmt::Write;

fn stroke(label: Option<Tree>, color: bool) -> &'static str {
    match (color, label) {
        (true, Some(Tree::T1)) => "red",
        (true, Some(Tree::T2)) => "blue",
        (true, Some(Tree::Tn)) => "green",
        _ => "black",
    }
}

/// Maps drawing coordinates to screen coordinates.
struct Frame {
    min_x: f64,
    max_y: f64,
    size: f64,
    margin: f64,
}

impl Frame {
    fn new(pts: &[(f64, f64)]) -> Frame {
        let fold = |f: fn(f64, f64) -> f64, init: f64, g: fn(&(f64, f64)) -> f64| {
            pts.iter().map(g).fold(init, f)
        };
        let min_x = fold(f64::min, f64::INFINITY, |p| p.0);
        let max_x = fold(f64::max, f64::NEG_INFINITY, |p| p.0);
        let min_y = fold(f64::min, f64::INFINITY, |p| p.1);
        let max_y = fold(f64::max, f64::NEG_INFINITY, |p| p.1);
        if !min_x.is_finite() {
            return Frame {
                min_x: 0.0,
                max_y: 0.0,
                size: 1.0,
                margin: 0.05,
            };
        }
        let size = (max_x - min_x).max(max_y - min_y);
        let size = if size > 0.0 { size } else { 1.0 };
        Frame {
            min_x,
            max_y,
            size,
            margin: 0.05 * size,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (x - self.min_x + self.margin, self.max_y - y + self.margin)
    }

    fn header(&self, pts: &[(f64, f64)]) -> String {
        let w = pts.iter().map(|p| p.0 - self.min_x).fold(0.0, f64::max);
        let h = pts.iter().map(|p| self.max_y - p.1).fold(0.0, f64::max);
        let (w, h) = (w + 2.0 * self.margin, h + 2.0 * self.margin);
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" width=\"{}\" height=\"{}\">\n",
            num(w),
            num(h),
            num(800.0 * w / w.max(h)),
            num(800.0 * h / w.max(h))
        )
    }

    fn vertices(&self, out: &mut String, pts: &[(f64, f64)]) {
        let r = 0.008 * self.size;
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = writeln!(
                out,
                "<circle id=\"v{i}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
                num(x),
                num(y),
                num(r)
            );
        }
    }

    fn width(&self) -> String {
        num(0.003 * self.size)
    }
}

fn num(v: f64) -> String {
    if v.is_finite() {
        let s = format!("{v:.6}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.into()
        }
    } else {
        "0".into()
    }
}

pub fn grid_svg(d: &GridDrawing, color: bool) -> String {
    let pts: Vec<(f64, f64)> = d
        .points
        .iter()
        .map(|&(x, y)| (x as f64, y as f64))
        .collect();
    let f = Frame::new(&pts);
    let mut out = f.header(&pts);
    for (i, &(u, v)) in d.edges.iter().enumerate() {
        let (a, b) = (f.map(pts[u]), f.map(pts[v]));
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>",
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1),
            stroke(d.labels.get(i).copied().flatten(), color),
            f.width()
        );
    }
    f.vertices(&mut out, &pts);
    out.push_str("</svg>\n");
    out
}

pub fn arc_svg(d: &ArcDrawing, color: bool) -> String {
    with_precision(d.precision, || {
        let pts: Vec<(f64, f64)> = d
            .points
            .iter()
            .map(|p| (p.x.to_f64(), p.y.to_f64()))
            .collect();
        let f = Frame::new(&pts);
        let mut out = f.header(&pts);
        for (i, (&(u, v), prim)) in d.edges.iter().zip(&d.prims).enumerate() {
            let (a, b) = (f.map(pts[u]), f.map(pts[v]));
            let mut path = format!("M {} {} ", num(a.0), num(a.1));
            match prim {
                Primitive::Arc {
                    center,
                    radius,
                    ccw,
                } => {
                    let c = (center.x.to_f64(), center.y.to_f64());
                    let r = radius.to_f64();
                    let a0 = (pts[u].1 - c.1).atan2(pts[u].0 - c.0);
                    let a1 = (pts[v].1 - c.1).atan2(pts[v].0 - c.0);
                    let sweep = if *ccw { a1 - a0 } else { a0 - a1 }.rem_euclid(2.0 * PI);
                    if r.is_finite() && r > 0.0 && c.0.is_finite() && c.1.is_finite() {
                        // Flipping y turns counterclockwise into the positive sweep.
                        let _ = write!(
                            path,
                            "A {} {} 0 {} {} {} {}",
                            num(r),
                            num(r),
                            u8::from(sweep > PI),
                            u8::from(*ccw),
                            num(b.0),
                            num(b.1)
                        );
                    } else {
                        let _ = write!(path, "L {} {}", num(b.0), num(b.1));
                    }
                }
                Primitive::Segment => {
                    let _ = write!(path, "L {} {}", num(b.0), num(b.1));
                }
            }
            let _ = writeln!(
                out,
                "<path d=\"{path}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>",
                stroke(d.labels.get(i).copied().flatten(), color),
                f.width()
            );
        }
        f.vertices(&mut out, &pts);
        out.push_str("</svg>\n");
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_flips_y_with_margin() {
        let mut d = GridDrawing::new("t", vec![(0, 0), (10, 0), (5, 10)], vec![(0, 1), (1, 2)]);
        d.labels = vec![Some(Tree::T1), None];
        let s = grid_svg(&d, true);
        assert!(s.contains("viewBox=\"0 0 11 11\""));
        assert!(s.contains("x1=\"0.5\" y1=\"10.5\" x2=\"10.5\" y2=\"10.5\" stroke=\"red\""));
        assert!(s.contains("cx=\"5.5\" cy=\"0.5\""));
        assert!(!grid_svg(&d, false).contains("red"));
    }

    #[test]
    fn arcs_are_paths() {
        let g = crate::graph::generate_triangulation(7, 3, 20).unwrap();
        let d = crate::arc_draw::draw_triangulation_arcs(&g, None).unwrap();
        let s = arc_svg(&d, true);
        assert!(s.contains(" A "));
        assert_eq!(s.matches("<path").count(), d.edges.len());
        assert!(!s.contains("NaN") && !s.contains("inf"));
    }

    #[test]
    fn numbers_are_compact() {
        assert_eq!(num(2.0), "2");
        assert_eq!(num(-0.0000001), "0");
        assert_eq!(num(0.25), "0.25");
        assert_eq!(num(f64::NAN), "0");
    }
}
