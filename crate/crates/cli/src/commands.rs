use crate::{Algo, BenchArgs, Class, DrawArgs, DrawOptions, GenerateArgs, SvgArgs, VerifyArgs};
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;
use vcdraw::arc_draw::{draw_planar_arcs, draw_triangulation_arcs, reduction_r, ArcDrawing};
use vcdraw::graph::{classify, format_graph, generate_class, parse_graph};
use vcdraw::grid_draw::{
    draw_outerplanar, draw_planar3tree, draw_with_realizer, prepared_realizer, StepTrace,
};
use vcdraw::real::with_precision;
use vcdraw::svg::{arc_svg, grid_svg};
use vcdraw::tree_draw::draw_tree;
use vcdraw::verify::{
    count_segments, format_report_csv, primitive_counts, DrawingReport, Tolerances,
};
use vcdraw::{Error, GraphClass, GridDrawing, PlanarEmbedding};

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::GeometryBreakdown { .. }) => 3,
            CliError::Lib(Error::InvariantViolation { .. }) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(p.into(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn graph_class(c: Class) -> GraphClass {
    match c {
        Class::Tree => GraphClass::Tree,
        Class::ThreeTree => GraphClass::Planar3Tree,
        Class::Outerplanar => GraphClass::MaximalOuterplanar,
        Class::Triangulation => GraphClass::Triangulation,
        Class::Planar => GraphClass::PlanarOther,
    }
}

fn algo_name(a: Algo) -> &'static str {
    match a {
        Algo::Tree => "tree",
        Algo::ThreeTree => "3tree",
        Algo::Outerplanar => "outerplanar",
        Algo::TriArcs => "tri-arcs",
        Algo::PlanarArcs => "planar-arcs",
    }
}

/// Class generated for an algorithm by `bench`.
fn bench_class(a: Algo) -> GraphClass {
    match a {
        Algo::Tree => GraphClass::Tree,
        Algo::ThreeTree => GraphClass::Planar3Tree,
        Algo::Outerplanar => GraphClass::MaximalOuterplanar,
        Algo::TriArcs => GraphClass::Triangulation,
        Algo::PlanarArcs => GraphClass::PlanarOther,
    }
}

pub fn generate(a: &GenerateArgs) -> Result<u8> {
    let g = generate_class(graph_class(a.class), a.n, a.seed)?;
    write_out(a.output.as_deref(), &format_graph(&g))?;
    Ok(0)
}

pub enum Drawing {
    Grid(GridDrawing),
    Arcs(ArcDrawing),
}

impl Drawing {
    fn format(&self) -> String {
        match self {
            Drawing::Grid(d) => d.format(),
            Drawing::Arcs(d) => d.format(),
        }
    }

    fn svg(&self, color: bool) -> String {
        match self {
            Drawing::Grid(d) => grid_svg(d, color),
            Drawing::Arcs(d) => arc_svg(d, color),
        }
    }

    fn report(&self, tol: &Tolerances, graph: Option<&PlanarEmbedding>) -> DrawingReport {
        match self {
            Drawing::Grid(d) => DrawingReport::for_grid(d),
            Drawing::Arcs(d) => {
                let mut r = DrawingReport::for_arcs(d, tol);
                if let Some(g) = graph {
                    if d.algo == "planar-arcs" && g.faces().sizes().iter().any(|&s| s >= 6) {
                        let (red, lower) = reduction_r(g);
                        r.add_reduction(red, lower);
                    }
                }
                r
            }
        }
    }

    /// Arc drawings carry a precision header or `seg`/`arc` edge lines.
    fn parse(text: &str) -> Result<Drawing> {
        let arcs = text.lines().any(|l| {
            let l = l.trim_start();
            l.starts_with("# precision") || l.starts_with("seg ") || l.starts_with("arc ")
        });
        Ok(if arcs {
            Drawing::Arcs(ArcDrawing::parse(text)?)
        } else {
            Drawing::Grid(GridDrawing::parse(text)?)
        })
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let e = match self {
            Drawing::Grid(d) => &d.edges,
            Drawing::Arcs(d) => &d.edges,
        };
        let mut e: Vec<(usize, usize)> = e.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }

    fn n(&self) -> usize {
        match self {
            Drawing::Grid(d) => d.n(),
            Drawing::Arcs(d) => d.n(),
        }
    }
}

fn tolerances(eps: f64) -> Result<Tolerances> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {eps}"
        )));
    }
    Ok(Tolerances {
        eps_x: eps,
        eps_on: eps,
        eps_dir: eps,
    })
}

fn check_class(g: &PlanarEmbedding, algo: Algo) -> Result<()> {
    let class = classify(g);
    let ok = match algo {
        Algo::Tree => class == GraphClass::Tree,
        Algo::ThreeTree => class == GraphClass::Planar3Tree || (g.n() == 3 && g.num_edges() == 3),
        Algo::Outerplanar => class == GraphClass::MaximalOuterplanar,
        Algo::TriArcs => g.is_triangulation(),
        Algo::PlanarArcs => g.is_connected() && g.n() >= 3,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ClassMismatch {
            algo: algo_name(algo).into(),
            found: class.to_string(),
        }
        .into())
    }
}

fn total_primitives(d: &ArcDrawing, tol: &Tolerances) -> usize {
    let (a, s) = primitive_counts(d, tol);
    a + s
}

/// Draws `g`; returns the drawing and, for the grid drawers, the step trace.
pub fn run_drawer(
    g: &PlanarEmbedding,
    o: &DrawOptions,
    check: bool,
) -> Result<(Drawing, Option<StepTrace>)> {
    check_class(g, o.algo)?;
    let tol = tolerances(o.tolerance)?;
    Ok(match o.algo {
        Algo::Tree => (Drawing::Grid(draw_tree(g, o.root)?.drawing), None),
        Algo::ThreeTree if o.best_outer_face && g.n() > 3 => {
            let mut best: Option<(usize, vcdraw::grid_draw::Planar3TreeDrawing)> = None;
            for outer in g.all_outer_faces() {
                let Ok(r) = prepared_realizer(g, outer) else {
                    continue;
                };
                let out = draw_with_realizer(g, &r, check, None)?;
                let s = count_segments(&out.drawing)?;
                if best.as_ref().is_none_or(|b| s < b.0) {
                    best = Some((s, out));
                }
            }
            let out = best.ok_or(Error::Not3Tree)?.1;
            (Drawing::Grid(out.drawing), Some(out.trace))
        }
        Algo::ThreeTree => {
            let out = draw_planar3tree(g, check)?;
            (Drawing::Grid(out.drawing), Some(out.trace))
        }
        Algo::Outerplanar => {
            let out = draw_outerplanar(g, check)?;
            (Drawing::Grid(out.drawing), Some(out.trace))
        }
        Algo::TriArcs => with_precision(o.precision, || -> Result<_> {
            if !o.best_outer_face {
                return Ok((Drawing::Arcs(draw_triangulation_arcs(g, None)?), None));
            }
            let mut best: Option<(usize, ArcDrawing)> = None;
            for outer in g.all_outer_faces() {
                let h = g
                    .clone()
                    .with_outer_hint(Some([outer.v1, outer.v2, outer.vn]));
                let d = draw_triangulation_arcs(&h, None)?;
                let p = total_primitives(&d, &tol);
                if best.as_ref().is_none_or(|b| p < b.0) {
                    best = Some((p, d));
                }
            }
            let d = best
                .ok_or_else(|| Error::NotTriangulation("no faces".into()))?
                .1;
            Ok((Drawing::Arcs(d), None))
        })?,
        Algo::PlanarArcs => {
            let d = with_precision(o.precision, || draw_planar_arcs(g))?;
            (Drawing::Arcs(d), None)
        }
    })
}

pub fn draw(a: &DrawArgs) -> Result<u8> {
    let g = parse_graph(&read(&a.input)?)?;
    let (d, trace) = run_drawer(&g, &a.opts, a.verify)?;
    write_out(a.output.as_deref(), &d.format())?;
    if let Some(p) = &a.trace {
        let text = trace.map(|t| t.format()).unwrap_or_default();
        write_out(Some(p), &text)?;
    }
    if let Some(p) = &a.svg {
        write_out(Some(p), &d.svg(a.color))?;
    }
    if a.verify {
        let rep = d.report(&tolerances(a.opts.tolerance)?, Some(&g));
        eprint!("{}", rep.format());
        if !rep.passed() {
            return Ok(1);
        }
    }
    Ok(0)
}

pub fn verify(a: &VerifyArgs) -> Result<u8> {
    let d = Drawing::parse(&read(&a.input)?)?;
    let graph = match &a.graph {
        Some(p) => Some(parse_graph(&read(p)?)?),
        None => None,
    };
    let rep = d.report(&tolerances(a.tolerance)?, graph.as_ref());
    let mut text = rep.format();
    let mut pass = rep.passed();
    if let Some(g) = &graph {
        let mut ge = g.edges();
        ge.sort_unstable();
        if g.n() != d.n() || ge != d.edges() {
            text.insert_str(0, "graph: FAIL (drawing edges differ from the graph)\n");
            pass = false;
        }
    }
    write_out(a.output.as_deref(), &text)?;
    Ok(if pass { 0 } else { 1 })
}

pub fn svg(a: &SvgArgs) -> Result<u8> {
    let d = Drawing::parse(&read(&a.input)?)?;
    write_out(a.output.as_deref(), &d.svg(a.color))?;
    Ok(0)
}

/// Upper bound on primitives, rounded down.
fn bound(algo: Algo, n: i64, e: i64) -> i64 {
    match algo {
        Algo::Tree => (3 * (n - 1) + 3) / 4,
        Algo::ThreeTree => (8 * n - 17).div_euclid(3),
        Algo::Outerplanar => 3 * n / 2,
        Algo::TriArcs => (5 * n - 11).div_euclid(3),
        Algo::PlanarArcs => (14 * n - 3 * e - 29).div_euclid(3),
    }
}

pub fn bench(a: &BenchArgs) -> Result<u8> {
    let opts = DrawOptions {
        algo: a.algo,
        root: None,
        precision: a.precision,
        tolerance: a.tolerance,
        best_outer_face: false,
    };
    let tol = tolerances(a.tolerance)?;
    let mut ns = a.n.clone();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::new();
    let mut all_pass = true;
    println!(
        "{:>6} {:>5} {:>6} {:>6} {:>6} {:>6} {:>12} {:>12} {:>7} {:>10}",
        "n", "seed", "e", "prims", "bound", "slack", "width", "height", "dof", "ms"
    );
    for &n in &ns {
        let mut slacks = Vec::new();
        let mut times = Vec::new();
        for seed in 0..a.seeds {
            let g = generate_class(bench_class(a.algo), n, seed)?;
            let t = Instant::now();
            let (d, _) = run_drawer(&g, &opts, false)?;
            let ms = t.elapsed().as_secs_f64() * 1e3;
            let rep = d.report(&tol, Some(&g));
            let b = bound(a.algo, n as i64, rep.e as i64);
            let slack = b - rep.primitives() as i64;
            all_pass &= rep.passed();
            println!(
                "{:>6} {:>5} {:>6} {:>6} {:>6} {:>6} {:>12} {:>12} {:>7} {:>10.2}",
                n,
                seed,
                rep.e,
                rep.primitives(),
                b,
                slack,
                fmt_extent(rep.width),
                fmt_extent(rep.height),
                rep.dof,
                ms
            );
            slacks.push(slack);
            times.push(ms);
            let mut kv = vec![("seed".to_string(), seed.to_string())];
            kv.extend(rep.key_values());
            kv.push(("bound".into(), b.to_string()));
            kv.push(("slack".into(), slack.to_string()));
            rows.push(kv);
        }
        let k = slacks.len().max(1) as f64;
        println!(
            "# n={n} slack mean {:.2} min {} | ms mean {:.2} max {:.2}",
            slacks.iter().sum::<i64>() as f64 / k,
            slacks.iter().min().copied().unwrap_or(0),
            times.iter().sum::<f64>() / k,
            times.iter().copied().fold(0.0, f64::max)
        );
    }
    if let Some(p) = &a.csv {
        write_out(Some(p), &format_report_csv(&rows))?;
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn fmt_extent(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{v:.0}")
    } else {
        format!("{v:.6}")
    }
}
