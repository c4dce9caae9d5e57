mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "vcdraw",
    version,
    about = "Planar graph drawings with few segments or arcs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a random graph of a class.
    Generate(GenerateArgs),
    /// Draw a graph file.
    Draw(DrawArgs),
    /// Check a drawing file and print its report.
    Verify(VerifyArgs),
    /// Draw random instances and tabulate primitive counts against bounds.
    Bench(BenchArgs),
    /// Render a drawing file as SVG.
    Svg(SvgArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Tree,
    #[value(name = "3tree")]
    ThreeTree,
    Outerplanar,
    TriArcs,
    PlanarArcs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Tree,
    #[value(name = "3tree")]
    ThreeTree,
    Outerplanar,
    Triangulation,
    Planar,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    class: Class,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct DrawOptions {
    #[arg(long)]
    algo: Algo,
    /// Root vertex for trees.
    #[arg(long)]
    root: Option<usize>,
    /// Working precision in bits for arc drawings.
    #[arg(long = "n-precision", default_value_t = vcdraw::real::DEFAULT_PRECISION)]
    precision: usize,
    /// Verifier tolerance for arc drawings.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Try every outer face and keep the drawing with fewest primitives.
    #[arg(long = "best-outer-face")]
    best_outer_face: bool,
}

#[derive(Args, Debug)]
pub struct DrawArgs {
    /// Graph file.
    input: PathBuf,
    #[command(flatten)]
    opts: DrawOptions,
    /// Drawing output path; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the step trace of the grid drawers here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Check invariants while drawing and print the report to standard error.
    #[arg(long)]
    verify: bool,
    /// Also write an SVG rendering here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Color T1, T2 and Tn edges red, blue and green in the SVG.
    #[arg(long)]
    color: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Drawing file.
    input: PathBuf,
    /// Graph the drawing must match.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Report output path; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    algo: Algo,
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Seeds 0..seeds per vertex count.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long = "n-precision", default_value_t = vcdraw::real::DEFAULT_PRECISION)]
    precision: usize,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Write per-instance report values as CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SvgArgs {
    /// Drawing file.
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    color: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Generate(a) => commands::generate(&a),
        Command::Draw(a) => commands::draw(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Bench(a) => commands::bench(&a),
        Command::Svg(a) => commands::svg(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
