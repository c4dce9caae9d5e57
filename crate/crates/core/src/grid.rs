//! Integer drawings shared by all segment algorithms.
//!
//! Text format: `# algo <tag>`, then `v <id> <x> <y>` per vertex and
//! `e <u> <v>` per edge, optionally followed by `tree=1|2|n`.

use crate::error::{Error, Result};
use crate::realizer::Tree;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDrawing {
    pub algo: String,
    pub points: Vec<(i64, i64)>,
    pub edges: Vec<(usize, usize)>,
    /// Optional tree label per edge.
    pub labels: Vec<Option<Tree>>,
}

impl GridDrawing {
    pub fn new(algo: &str, points: Vec<(i64, i64)>, edges: Vec<(usize, usize)>) -> Self {
        let labels = vec![None; edges.len()];
        GridDrawing {
            algo: algo.to_string(),
            points,
            edges,
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `(min_x, min_y, max_x, max_y)`; all zero when empty.
    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        let xs = self.points.iter().map(|p| p.0);
        let ys = self.points.iter().map(|p| p.1);
        (
            xs.clone().min().unwrap_or(0),
            ys.clone().min().unwrap_or(0),
            xs.max().unwrap_or(0),
            ys.max().unwrap_or(0),
        )
    }

    pub fn width(&self) -> i64 {
        let (x0, _, x1, _) = self.bounds();
        x1 - x0
    }

    pub fn height(&self) -> i64 {
        let (_, y0, _, y1) = self.bounds();
        y1 - y0
    }

    /// Subdrawing keeping only edges with the given label.
    pub fn restricted_to(&self, t: Tree) -> GridDrawing {
        let keep: Vec<usize> = (0..self.edges.len())
            .filter(|&i| self.labels[i] == Some(t))
            .collect();
        GridDrawing {
            algo: self.algo.clone(),
            points: self.points.clone(),
            edges: keep.iter().map(|&i| self.edges[i]).collect(),
            labels: keep.iter().map(|&i| self.labels[i]).collect(),
        }
    }

    pub fn format(&self) -> String {
        let mut out = format!("# algo {}\n", self.algo);
        for (v, (x, y)) in self.points.iter().enumerate() {
            let _ = writeln!(out, "v {v} {x} {y}");
        }
        for (&(u, v), l) in self.edges.iter().zip(&self.labels) {
            match l {
                Some(t) => {
                    let _ = writeln!(out, "e {u} {v} tree={t}");
                }
                None => {
                    let _ = writeln!(out, "e {u} {v}");
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<GridDrawing> {
        let mut algo = String::from("unknown");
        let mut pts: Vec<Option<(i64, i64)>> = Vec::new();
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if let Some(rest) = line.strip_prefix("# algo ") {
                algo = rest.trim().to_string();
                continue;
            }
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let int = |s: &str| -> Result<i64> {
                s.parse()
                    .map_err(|_| Error::parse(line_no, format!("bad integer `{s}`")))
            };
            match toks[0] {
                "v" if toks.len() == 4 => {
                    let id = usize::try_from(int(toks[1])?)
                        .map_err(|_| Error::parse(line_no, "negative id"))?;
                    if pts.len() <= id {
                        pts.resize(id + 1, None);
                    }
                    if pts[id].replace((int(toks[2])?, int(toks[3])?)).is_some() {
                        return Err(Error::parse(line_no, format!("vertex {id} listed twice")));
                    }
                }
                "e" if toks.len() == 3 || toks.len() == 4 => {
                    let u = usize::try_from(int(toks[1])?)
                        .map_err(|_| Error::parse(line_no, "negative id"))?;
                    let v = usize::try_from(int(toks[2])?)
                        .map_err(|_| Error::parse(line_no, "negative id"))?;
                    let label = match toks.get(3) {
                        None => None,
                        Some(&"tree=1") => Some(Tree::T1),
                        Some(&"tree=2") => Some(Tree::T2),
                        Some(&"tree=n") => Some(Tree::Tn),
                        Some(other) => {
                            return Err(Error::parse(line_no, format!("bad label `{other}`")))
                        }
                    };
                    edges.push((u, v));
                    labels.push(label);
                }
                _ => return Err(Error::parse(line_no, format!("unrecognized line `{line}`"))),
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
        Ok(GridDrawing {
            algo,
            points,
            edges,
            labels,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut d = GridDrawing::new("test", vec![(0, 0), (2, 0), (1, 1)], vec![(0, 1), (1, 2)]);
        d.labels[1] = Some(Tree::Tn);
        let text = d.format();
        assert_eq!(
            text,
            "# algo test\nv 0 0 0\nv 1 2 0\nv 2 1 1\ne 0 1\ne 1 2 tree=n\n"
        );
        assert_eq!(GridDrawing::parse(&text).unwrap(), d);
        assert_eq!(d.width(), 2);
        assert_eq!(d.height(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(GridDrawing::parse("v 0 0 x\n").is_err());
        assert!(GridDrawing::parse("v 0 0 0\ne 0 1\n").is_err());
        assert!(GridDrawing::parse("v 1 0 0\n").is_err());
        assert!(GridDrawing::parse("q\n").is_err());
    }
}
