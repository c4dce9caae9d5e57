//! Text format: `n m`, then `v <id>: <ccw neighbors>` per vertex, then an
//! optional `outer: a b c`. `#` starts a comment.

use super::PlanarEmbedding;
use crate::error::{Error, Result};
use std::fmt::Write as _;

pub fn parse_graph(text: &str) -> Result<PlanarEmbedding> {
    let mut header: Option<(usize, usize)> = None;
    let mut rot: Vec<Option<Vec<usize>>> = Vec::new();
    let mut outer = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((n, _)) = header else {
            let nums = parse_ints(line, line_no)?;
            if nums.len() != 2 {
                return Err(Error::parse(line_no, "expected `n m`"));
            }
            header = Some((nums[0], nums[1]));
            rot = vec![None; nums[0]];
            continue;
        };
        if let Some(rest) = line.strip_prefix("outer:") {
            let nums = parse_ints(rest, line_no)?;
            if nums.len() != 3 || nums.iter().any(|&x| x >= n) {
                return Err(Error::parse(
                    line_no,
                    "expected `outer: a b c` with valid ids",
                ));
            }
            outer = Some([nums[0], nums[1], nums[2]]);
        } else if let Some(rest) = line.strip_prefix('v') {
            let (id, nbrs) = rest
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `v <id>: ...`"))?;
            let id: usize = id
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad vertex id `{}`", id.trim())))?;
            if id >= n {
                return Err(Error::parse(
                    line_no,
                    format!("vertex id {id} out of range"),
                ));
            }
            if rot[id].is_some() {
                return Err(Error::parse(line_no, format!("vertex {id} listed twice")));
            }
            rot[id] = Some(parse_ints(nbrs, line_no)?);
        } else {
            return Err(Error::parse(line_no, format!("unrecognized line `{line}`")));
        }
    }
    let (_, m) = header.ok_or_else(|| Error::parse(0, "empty input"))?;
    let rot: Vec<Vec<usize>> = rot.into_iter().map(Option::unwrap_or_default).collect();
    let emb = PlanarEmbedding::new(rot)?;
    if emb.num_edges() != m {
        return Err(Error::parse(
            1,
            format!("header says {m} edges, rotations give {}", emb.num_edges()),
        ));
    }
    Ok(emb.with_outer_hint(outer))
}

fn parse_ints(s: &str, line: usize) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(line, format!("bad integer `{t}`")))
        })
        .collect()
}

pub fn format_graph(emb: &PlanarEmbedding) -> String {
    let mut out = format!("{} {}\n", emb.n(), emb.num_edges());
    for (v, r) in emb.rotations().iter().enumerate() {
        let _ = write!(out, "v {v}:");
        for u in r {
            let _ = write!(out, " {u}");
        }
        out.push('\n');
    }
    if let Some([a, b, c]) = emb.outer_hint() {
        let _ = writeln!(out, "outer: {a} {b} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# K4\n4 6\nv 0: 1 3 2\nv 1: 2 3 0\nv 2: 0 3 1\nv 3: 0 1 2\nouter: 0 1 2\n";
        let e = parse_graph(text).unwrap();
        assert_eq!(e.outer_hint(), Some([0, 1, 2]));
        assert_eq!(parse_graph(&format_graph(&e)).unwrap(), e);
        assert_eq!(format_graph(&e), text.trim_start_matches("# K4\n"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("2 1\nv 0: 1\nv 1: x\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "bad integer `x`"));
        assert!(matches!(
            parse_graph("2 2\nv 0: 1\nv 1: 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn isolated_vertices_may_be_omitted() {
        let e = parse_graph("3 1\nv 0: 1\nv 1: 0\n").unwrap();
        assert_eq!(e.degree(2), 0);
    }
}
