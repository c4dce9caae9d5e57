//! Verification reports: human-readable lines plus a `key=value` block.

use super::arcs::{
    angular_resolution_arcs, check_planarity_tol, primitive_counts, tn_chain_collinear, Tolerances,
};
use super::{angular_resolution, check_planarity_exact, count_segments, lower_bounds, LowerBounds};
use crate::arc_draw::ArcDrawing;
use crate::error::{Error, Result};
use crate::grid::GridDrawing;
use crate::real::with_precision;
use crate::realizer::Tree;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    /// `value <= bound`, with the bound given as a rational `num / den`.
    fn at_most(name: &str, value: i64, num: i64, den: i64) -> Check {
        let bound = num as f64 / den as f64;
        Check::new(name, value * den <= num, format!("{value} <= {bound:.3}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DrawingReport {
    pub algo: String,
    pub n: usize,
    pub e: usize,
    /// Maximal straight segments.
    pub segments: usize,
    /// Maximal circular arcs; zero for grid drawings.
    pub arcs: usize,
    pub planar: bool,
    pub violation: Option<String>,
    pub width: f64,
    pub height: f64,
    pub lower: LowerBounds,
    pub dof: usize,
    pub angular_resolution: Option<f64>,
    /// Working precision and tolerances of arc drawings.
    pub precision: Option<usize>,
    pub tolerances: Option<Tolerances>,
    pub checks: Vec<Check>,
    /// Further `key=value` facts supplied by the caller.
    pub extra: Vec<(String, String)>,
}

impl DrawingReport {
    /// Visual complexity: segments plus arcs.
    pub fn primitives(&self) -> usize {
        self.segments + self.arcs
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Report for an integer drawing, with the bounds implied by its algorithm.
    pub fn for_grid(d: &GridDrawing) -> DrawingReport {
        let n = d.n();
        let e = d.edges.len();
        let violation = check_planarity_exact(d).map(|v| v.to_string());
        let (segments, overlap) = match count_segments(d) {
            Ok(s) => (s, None),
            Err(err) => (e, Some(err.to_string())),
        };
        let violation = violation.or(overlap);
        let mut r = DrawingReport {
            algo: d.algo.clone(),
            n,
            e,
            segments,
            arcs: 0,
            planar: violation.is_none(),
            violation,
            width: d.width() as f64,
            height: d.height() as f64,
            lower: lower_bounds(n, &d.edges),
            dof: 4 * segments,
            angular_resolution: angular_resolution(d),
            precision: None,
            tolerances: None,
            checks: Vec::new(),
            extra: Vec::new(),
        };
        r.checks.push(Check::new(
            "planar",
            r.planar,
            r.violation.clone().unwrap_or_else(|| "exact".into()),
        ));
        r.checks.push(Check::new(
            "segments>= lower bounds",
            segments >= r.lower.max(),
            format!("{segments} >= {}", r.lower.max()),
        ));
        let (n_i, s_i) = (n as i64, segments as i64);
        let (w, h) = (d.width(), d.height());
        match d.algo.as_str() {
            "tree" if n >= 2 => {
                let depth = (n as f64).log2().ceil() as i32;
                let wb = 2.0 * 2f64.powi(depth) * n as f64;
                let hb = 2.0 * 1.5f64.powi(depth) * n as f64;
                r.checks.push(Check::at_most(
                    "segments<= ceil(3(n-1)/4)",
                    s_i,
                    (3 * (n_i - 1) + 3) / 4,
                    1,
                ));
                r.checks.push(Check::new(
                    "width<= 2*2^ceil(log2 n)*n",
                    w as f64 <= wb,
                    format!("{w} <= {wb}"),
                ));
                r.checks.push(Check::new(
                    "height<= 2*(3/2)^ceil(log2 n)*n",
                    h as f64 <= hb,
                    format!("{h} <= {hb:.3}"),
                ));
            }
            "3tree" | "outerplanar" => {
                let lambda = t1_segments(d);
                if d.algo == "3tree" {
                    r.checks
                        .push(Check::at_most("segments<= (8n-17)/3", s_i, 8 * n_i - 17, 3));
                    r.checks.push(Check::new(
                        "width= n-1",
                        w == n_i - 1,
                        format!("{w} = {}", n_i - 1),
                    ));
                } else {
                    r.checks
                        .push(Check::at_most("segments<= 3n/2", s_i, 3 * n_i, 2));
                    // The augmented 3-tree has one more vertex.
                    r.checks.push(Check::at_most("width<= n", w, n_i, 1));
                }
                if let Some(l) = lambda {
                    // The apex edge to v1 was a T1 segment of its own.
                    let l = if d.algo == "3tree" { l } else { l + 1 };
                    r.extra.push(("lambda_n".into(), l.to_string()));
                    let rows = if d.algo == "3tree" { n_i - 1 } else { n_i };
                    let name = if d.algo == "3tree" {
                        "height<= (n-1)*lambda_n"
                    } else {
                        "height<= n*lambda_n"
                    };
                    r.checks.push(Check::at_most(name, h, rows * l as i64, 1));
                }
            }
            _ => {}
        }
        r
    }

    /// Report for an arc drawing at its own precision.
    pub fn for_arcs(d: &ArcDrawing, tol: &Tolerances) -> DrawingReport {
        let n = d.n();
        let e = d.edges.len();
        let violation = check_planarity_tol(d, tol).map(|v| v.to_string());
        let (arcs, segments) = primitive_counts(d, tol);
        let (width, height) = with_precision(d.precision, || {
            let xs: Vec<f64> = d.points.iter().map(|p| p.x.to_f64()).collect();
            let ys: Vec<f64> = d.points.iter().map(|p| p.y.to_f64()).collect();
            let ext = |v: &[f64]| {
                v.iter().copied().fold(f64::NEG_INFINITY, f64::max)
                    - v.iter().copied().fold(f64::INFINITY, f64::min)
            };
            if n == 0 {
                (0.0, 0.0)
            } else {
                (ext(&xs), ext(&ys))
            }
        });
        let mut r = DrawingReport {
            algo: d.algo.clone(),
            n,
            e,
            segments,
            arcs,
            planar: violation.is_none(),
            violation,
            width,
            height,
            lower: lower_bounds(n, &d.edges),
            dof: 5 * arcs + 4 * segments,
            angular_resolution: angular_resolution_arcs(d),
            precision: Some(d.precision),
            tolerances: Some(*tol),
            checks: Vec::new(),
            extra: Vec::new(),
        };
        r.checks.push(Check::new(
            "planar",
            r.planar,
            r.violation
                .clone()
                .unwrap_or_else(|| format!("eps={:e}", tol.eps_x)),
        ));
        let (n_i, e_i, p_i) = (n as i64, e as i64, r.primitives() as i64);
        match d.algo.as_str() {
            "tri-arcs" => {
                r.checks
                    .push(Check::at_most("arcs<= (5n-11)/3", p_i, 5 * n_i - 11, 3));
                r.checks.push(Check::at_most(
                    "dof<= (23n-50)/3",
                    r.dof as i64,
                    23 * n_i - 50,
                    3,
                ));
                let tn = tn_chain_collinear(d, tol);
                r.checks.push(Check::new(
                    "tn-chains collinear",
                    tn.is_ok(),
                    tn.err().unwrap_or_else(|| "ok".into()),
                ));
            }
            "planar-arcs" => {
                r.checks.push(Check::at_most(
                    "arcs<= 14n/3-e-29/3",
                    p_i,
                    14 * n_i - 3 * e_i - 29,
                    3,
                ));
            }
            _ => {}
        }
        r
    }

    /// Adds the face-size reduction facts of a planar-arc drawing.
    pub fn add_reduction(&mut self, r: usize, lower: usize) {
        self.extra.push(("reduction_r".into(), r.to_string()));
        self.extra
            .push(("reduction_lower".into(), lower.to_string()));
        self.checks.push(Check::new(
            "R>= max(0,5n-3e)",
            r >= lower,
            format!("{r} >= {lower}"),
        ));
    }

    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut kv: Vec<(String, String)> = vec![
            ("algo".into(), self.algo.clone()),
            ("n".into(), self.n.to_string()),
            ("e".into(), self.e.to_string()),
            ("segments".into(), self.segments.to_string()),
            ("arcs".into(), self.arcs.to_string()),
            ("primitives".into(), self.primitives().to_string()),
            ("planar".into(), self.planar.to_string()),
            ("width".into(), self.width.to_string()),
            ("height".into(), self.height.to_string()),
            ("lower_odd_half".into(), self.lower.odd_half.to_string()),
            (
                "lower_half_degree".into(),
                self.lower.half_degree.to_string(),
            ),
            ("lower_slope".into(), self.lower.slope.to_string()),
            ("dof".into(), self.dof.to_string()),
            (
                "angular_resolution".into(),
                self.angular_resolution
                    .map_or_else(|| "none".into(), |a| format!("{a:e}")),
            ),
        ];
        if let Some(p) = self.precision {
            kv.push(("precision".into(), p.to_string()));
        }
        if let Some(t) = self.tolerances {
            kv.push(("eps_x".into(), format!("{:e}", t.eps_x)));
            kv.push(("eps_on".into(), format!("{:e}", t.eps_on)));
            kv.push(("eps_dir".into(), format!("{:e}", t.eps_dir)));
        }
        kv.extend(self.extra.iter().cloned());
        kv.push(("pass".into(), self.passed().to_string()));
        kv
    }

    pub fn format(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algorithm: {}", self.algo);
        let _ = writeln!(out, "vertices: {}  edges: {}", self.n, self.e);
        let _ = writeln!(
            out,
            "primitives: {} ({} segments, {} arcs), dof {}",
            self.primitives(),
            self.segments,
            self.arcs,
            self.dof
        );
        let _ = writeln!(
            out,
            "lower bounds: odd/2 = {}, max ceil(deg/2) = {}, ceil(e/(n-1)) = {}",
            self.lower.odd_half, self.lower.half_degree, self.lower.slope
        );
        let _ = writeln!(out, "extent: {} x {}", self.width, self.height);
        if let Some(a) = self.angular_resolution {
            let _ = writeln!(out, "angular resolution: {a:e} rad");
        }
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{}: {verdict} ({})", c.name, c.detail);
        }
        out.push_str("[report]\n");
        for (k, v) in self.key_values() {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }
}

/// Segments covering the `T1` edges, when the drawing carries labels.
fn t1_segments(d: &GridDrawing) -> Option<usize> {
    if d.labels.iter().all(Option::is_none) {
        return None;
    }
    count_segments(&d.restricted_to(Tree::T1)).ok()
}

/// Reads the `key=value` block following a `[report]` line.
pub fn parse_report(text: &str) -> Result<BTreeMap<String, String>> {
    let mut lines = text.lines().enumerate();
    if !lines.any(|(_, l)| l.trim() == "[report]") {
        return Err(Error::parse(0, "missing [report] block"));
    }
    let mut kv = BTreeMap::new();
    for (i, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::parse(i + 1, format!("expected key=value, got `{line}`")))?;
        kv.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(kv)
}

/// CSV with one row per key-value list; the header is the union of keys in
/// order of first appearance, missing values are empty.
pub fn format_report_csv(rows: &[Vec<(String, String)>]) -> String {
    let mut header: Vec<&str> = Vec::new();
    for row in rows {
        for (k, _) in row {
            if !header.contains(&k.as_str()) {
                header.push(k);
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("write to memory");
    for row in rows {
        let rec = header.iter().map(|h| {
            row.iter()
                .find(|(k, _)| k == h)
                .map_or("", |(_, v)| v.as_str())
        });
        w.write_record(rec).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

/// Reads CSV written by [`format_report_csv`]; empty cells are omitted.
pub fn parse_report_csv(text: &str) -> Result<Vec<BTreeMap<String, String>>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r
        .headers()
        .map_err(|e| Error::parse(1, e.to_string()))?
        .clone();
    let mut rows = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::parse(i + 2, e.to_string()))?;
        rows.push(
            header
                .iter()
                .zip(rec.iter())
                .filter(|(_, v)| !v.is_empty())
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        );
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_tree;
    use crate::tree_draw::draw_tree;

    #[test]
    fn csv_round_trips() {
        let rows: Vec<Vec<(String, String)>> = [5, 9]
            .iter()
            .map(|&n| {
                let g = generate_tree(n, 1).unwrap();
                DrawingReport::for_grid(&draw_tree(&g, None).unwrap().drawing).key_values()
            })
            .collect();
        let text = format_report_csv(&rows);
        let back = parse_report_csv(&text).unwrap();
        assert_eq!(back.len(), 2);
        for (row, map) in rows.iter().zip(&back) {
            let want: BTreeMap<String, String> = row.iter().cloned().collect();
            assert_eq!(&want, map);
        }
        assert!(parse_report_csv("a,b\n1\n").is_err());
    }

    #[test]
    fn tree_report_round_trips() {
        let g = generate_tree(30, 4).unwrap();
        let d = draw_tree(&g, None).unwrap().drawing;
        let rep = DrawingReport::for_grid(&d);
        assert!(rep.passed(), "{}", rep.format());
        let text = rep.format();
        assert!(text.contains("segments<= ceil(3(n-1)/4): PASS"));
        let kv = parse_report(&text).unwrap();
        assert_eq!(kv["segments"], rep.segments.to_string());
        assert_eq!(kv["pass"], "true");
        for key in ["lower_odd_half", "lower_half_degree", "lower_slope"] {
            assert!(kv.contains_key(key));
        }
    }

    #[test]
    fn tampered_drawing_fails() {
        let mut d = GridDrawing::new(
            "test",
            vec![(0, 0), (2, 2), (0, 2), (2, 0)],
            vec![(0, 1), (2, 3)],
        );
        let rep = DrawingReport::for_grid(&d);
        assert!(!rep.passed());
        assert!(rep.violation.unwrap().contains("cross"));
        d.points[1] = (-1, 1);
        assert!(DrawingReport::for_grid(&d).passed());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_report("no block").is_err());
        assert!(parse_report("[report]\nbad line\n").is_err());
    }
}
