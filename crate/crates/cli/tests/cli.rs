use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use vcdraw::graph::{generate_class, parse_graph};
use vcdraw::tree_draw::draw_tree;
use vcdraw::verify::{parse_report, parse_report_csv, DrawingReport};
use vcdraw::{GraphClass, GridDrawing};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcdraw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Dir(tempfile::TempDir);

impl Dir {
    fn new() -> Dir {
        Dir(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn s(&self, name: &str) -> String {
        self.path(name).to_string_lossy().into_owned()
    }
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

fn header_edges(text: &str) -> usize {
    text.split_whitespace().nth(1).unwrap().parse().unwrap()
}

#[test]
fn generate_counts_and_determinism() {
    let d = Dir::new();
    let o = run(&[
        "generate",
        "--class",
        "3tree",
        "--n",
        "10",
        "--seed",
        "1",
        "-o",
        &d.s("a"),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(header_edges(&read(&d.path("a"))), 24);
    run(&[
        "generate",
        "--class",
        "3tree",
        "--n",
        "10",
        "--seed",
        "1",
        "-o",
        &d.s("b"),
    ]);
    assert_eq!(read(&d.path("a")), read(&d.path("b")));
    let o = run(&["generate", "--class", "outerplanar", "--n", "8"]);
    assert_eq!(header_edges(&stdout(&o)), 13);
    let o = run(&["generate", "--class", "3tree", "--n", "2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn draw_k4_with_3tree() {
    let d = Dir::new();
    std::fs::write(
        d.path("k4"),
        "4 6\nv 0: 1 3 2\nv 1: 2 3 0\nv 2: 0 3 1\nv 3: 0 1 2\n",
    )
    .unwrap();
    let o = run(&["draw", &d.s("k4"), "--algo", "3tree"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 4);
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 6);
}

#[test]
fn tri_arcs_svg_has_no_nan() {
    let d = Dir::new();
    run(&[
        "generate",
        "--class",
        "triangulation",
        "--n",
        "7",
        "--seed",
        "3",
        "-o",
        &d.s("g"),
    ]);
    let o = run(&[
        "draw",
        &d.s("g"),
        "--algo",
        "tri-arcs",
        "--n-precision",
        "256",
        "--svg",
        &d.s("s.svg"),
        "--color",
        "-o",
        &d.s("d"),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let svg = read(&d.path("s.svg"));
    assert!(svg.contains("<path d=\"M") && svg.contains(" A "));
    assert!(!svg.contains("NaN") && !svg.contains("inf"));
    let o = run(&["svg", &d.s("d")]);
    assert_eq!(stdout(&o).lines().count(), svg.lines().count());
}

#[test]
fn path_tree_is_one_segment() {
    let d = Dir::new();
    let mut g = String::from("9 8\n");
    for v in 0..9 {
        let nb: Vec<String> = [v as i64 - 1, v as i64 + 1]
            .iter()
            .filter(|&&u| (0..9).contains(&u))
            .map(|u| u.to_string())
            .collect();
        g.push_str(&format!("v {v}: {}\n", nb.join(" ")));
    }
    std::fs::write(d.path("p9"), g).unwrap();
    assert_eq!(
        code(&run(&[
            "draw",
            &d.s("p9"),
            "--algo",
            "tree",
            "-o",
            &d.s("d")
        ])),
        0
    );
    let o = run(&["verify", &d.s("d"), "--graph", &d.s("p9")]);
    assert_eq!(code(&o), 0);
    let kv = parse_report(&stdout(&o)).unwrap();
    assert_eq!(kv["segments"], "1");
    for key in ["lower_odd_half", "lower_half_degree", "lower_slope"] {
        assert!(kv.contains_key(key));
    }
}

#[test]
fn verify_3tree_and_tampering() {
    let d = Dir::new();
    run(&[
        "generate",
        "--class",
        "3tree",
        "--n",
        "10",
        "--seed",
        "1",
        "-o",
        &d.s("g"),
    ]);
    let o = run(&[
        "draw",
        &d.s("g"),
        "--algo",
        "3tree",
        "--verify",
        "-o",
        &d.s("d"),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["verify", &d.s("d"), "--graph", &d.s("g")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("segments<= (8n-17)/3: PASS"));

    let mut dr = GridDrawing::parse(&read(&d.path("d"))).unwrap();
    let (x, y) = dr.points[dr.edges[0].0];
    dr.points[dr.edges[0].1] = (x, y);
    std::fs::write(d.path("bad"), dr.format()).unwrap();
    let o = run(&["verify", &d.s("bad")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("planar: FAIL"));
}

#[test]
fn graph_mismatch_fails_verification() {
    let d = Dir::new();
    run(&[
        "generate",
        "--class",
        "tree",
        "--n",
        "12",
        "--seed",
        "1",
        "-o",
        &d.s("g"),
    ]);
    run(&[
        "generate",
        "--class",
        "tree",
        "--n",
        "12",
        "--seed",
        "2",
        "-o",
        &d.s("h"),
    ]);
    run(&["draw", &d.s("g"), "--algo", "tree", "-o", &d.s("d")]);
    let o = run(&["verify", &d.s("d"), "--graph", &d.s("h")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("graph: FAIL"));
}

#[test]
fn exit_codes() {
    let d = Dir::new();
    run(&["generate", "--class", "3tree", "--n", "8", "-o", &d.s("g")]);
    assert_eq!(code(&run(&["draw", &d.s("g"), "--algo", "tree"])), 2);
    assert_eq!(code(&run(&["draw", &d.s("g"), "--algo", "outerplanar"])), 2);
    assert_eq!(code(&run(&["draw", &d.s("g"), "--algo", "bogus"])), 2);
    assert_eq!(code(&run(&["draw", &d.s("missing"), "--algo", "tree"])), 2);
    std::fs::write(d.path("junk"), "3 2\nv 0: x\n").unwrap();
    assert_eq!(code(&run(&["draw", &d.s("junk"), "--algo", "tree"])), 2);
    assert_eq!(code(&run(&["verify", &d.s("junk")])), 2);
    assert_eq!(code(&run(&[])), 2);
    let o = run(&[
        "draw",
        &d.s("g"),
        "--algo",
        "tri-arcs",
        "--n-precision",
        "40",
    ]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("geometry breakdown"));
}

#[test]
fn trace_written_and_marked() {
    let d = Dir::new();
    run(&[
        "generate",
        "--class",
        "3tree",
        "--n",
        "12",
        "--seed",
        "4",
        "-o",
        &d.s("g"),
    ]);
    let o = run(&[
        "draw",
        &d.s("g"),
        "--algo",
        "3tree",
        "--verify",
        "--trace",
        &d.s("t"),
        "-o",
        &d.s("d"),
    ]);
    assert_eq!(code(&o), 0);
    let t = read(&d.path("t"));
    assert_eq!(t.lines().count(), 9);
    assert!(t
        .lines()
        .all(|l| l.starts_with("step ") && l.ends_with("invariants ok")));
}

#[test]
fn draw_outputs_are_deterministic() {
    let d = Dir::new();
    for (class, algo) in [
        ("tree", "tree"),
        ("3tree", "3tree"),
        ("outerplanar", "outerplanar"),
        ("triangulation", "tri-arcs"),
        ("planar", "planar-arcs"),
    ] {
        run(&[
            "generate",
            "--class",
            class,
            "--n",
            "12",
            "--seed",
            "9",
            "-o",
            &d.s("g"),
        ]);
        let mut outs = Vec::new();
        for i in 0..2 {
            let (dr, sv) = (format!("d{i}"), format!("s{i}"));
            let o = run(&[
                "draw",
                &d.s("g"),
                "--algo",
                algo,
                "-o",
                &d.s(&dr),
                "--svg",
                &d.s(&sv),
            ]);
            assert_eq!(
                code(&o),
                0,
                "{algo}: {}",
                String::from_utf8_lossy(&o.stderr)
            );
            let rep = stdout(&run(&["verify", &d.s(&dr)]));
            outs.push((read(&d.path(&dr)), read(&d.path(&sv)), rep));
        }
        assert_eq!(outs[0], outs[1], "{algo}");
    }
}

#[test]
fn best_outer_face_never_worse() {
    let d = Dir::new();
    run(&[
        "generate",
        "--class",
        "3tree",
        "--n",
        "15",
        "--seed",
        "2",
        "-o",
        &d.s("g"),
    ]);
    let count = |extra: &[&str]| {
        let mut args = vec!["draw", "--algo", "3tree", "-o"];
        let out = d.s("d");
        let g = d.s("g");
        args.push(&out);
        args.push(&g);
        args.extend_from_slice(extra);
        assert_eq!(code(&run(&args)), 0);
        let kv = parse_report(&stdout(&run(&["verify", &d.s("d")]))).unwrap();
        kv["segments"].parse::<usize>().unwrap()
    };
    assert!(count(&["--best-outer-face"]) <= count(&[]));
}

#[test]
fn bench_csv_round_trips() {
    let d = Dir::new();
    let o = run(&[
        "bench",
        "--algo",
        "tree",
        "--n",
        "10,20",
        "--seeds",
        "3",
        "--csv",
        &d.s("b.csv"),
    ]);
    assert_eq!(code(&o), 0);
    let rows = parse_report_csv(&read(&d.path("b.csv"))).unwrap();
    assert_eq!(rows.len(), 6);
    for row in &rows {
        let n: usize = row["n"].parse().unwrap();
        let seed: u64 = row["seed"].parse().unwrap();
        let g = generate_class(GraphClass::Tree, n, seed).unwrap();
        let rep = DrawingReport::for_grid(&draw_tree(&g, None).unwrap().drawing);
        for (k, v) in rep.key_values() {
            assert_eq!(row[&k], v, "n={n} seed={seed} key={k}");
        }
    }
    let order: Vec<(String, String)> = rows
        .iter()
        .map(|r| (r["n"].clone(), r["seed"].clone()))
        .collect();
    assert_eq!(order[0], ("10".into(), "0".into()));
    assert_eq!(order[5], ("20".into(), "2".into()));
}

#[test]
fn bench_tree_slack_nonnegative() {
    let ns: Vec<String> = (1..=10).map(|i| (10 * i).to_string()).collect();
    let d = Dir::new();
    let o = run(&[
        "bench",
        "--algo",
        "tree",
        "--n",
        &ns.join(","),
        "--seeds",
        "10",
        "--csv",
        &d.s("b"),
    ]);
    assert_eq!(code(&o), 0);
    let rows = parse_report_csv(&read(&d.path("b"))).unwrap();
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r["slack"].parse::<i64>().unwrap() >= 0));
}

#[test]
fn bench_3tree_width_is_n_minus_1() {
    let d = Dir::new();
    run(&[
        "bench",
        "--algo",
        "3tree",
        "--n",
        "10,30,60",
        "--seeds",
        "5",
        "--csv",
        &d.s("b"),
    ]);
    let rows = parse_report_csv(&read(&d.path("b"))).unwrap();
    assert_eq!(rows.len(), 15);
    for r in rows {
        let n: i64 = r["n"].parse().unwrap();
        assert_eq!(r["width"], (n - 1).to_string());
    }
}

#[test]
fn bench_tri_arcs_dof_bound() {
    let d = Dir::new();
    let o = run(&[
        "bench",
        "--algo",
        "tri-arcs",
        "--n",
        "5,10,15,20,25,30",
        "--seeds",
        "2",
        "--csv",
        &d.s("b"),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let rows = parse_report_csv(&read(&d.path("b"))).unwrap();
    for r in rows {
        let n: i64 = r["n"].parse().unwrap();
        let dof: i64 = r["dof"].parse().unwrap();
        assert!(3 * dof <= 23 * n - 50, "n={n} dof={dof}");
    }
}

#[test]
fn generated_graphs_parse_back() {
    for class in ["tree", "3tree", "outerplanar", "triangulation", "planar"] {
        let o = run(&["generate", "--class", class, "--n", "9", "--seed", "5"]);
        let g = parse_graph(&stdout(&o)).unwrap();
        assert_eq!(g.n(), 9, "{class}");
    }
}
