use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use dpm_core::graph::families::{cycle, hypercube};
use dpm_core::Graph;

fn dpm(args: &[&str], stdin: Option<&[u8]>) -> Output {
    dpm_env(args, stdin, &[])
}

fn dpm_env(args: &[&str], stdin: Option<&[u8]>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dpm"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.env_remove("PM_TIME_BUDGET_SECS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(bytes) = stdin {
        child.stdin.take().unwrap().write_all(bytes).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_out(args: &[&str], stdin: Option<&[u8]>) -> Graph {
    let o = dpm(args, stdin);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    Graph::from_json(&stdout(&o)).unwrap()
}

fn write(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    std::fs::write(&path, g.to_json()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn odd_cycle_sphere_pipeline_prints_three() {
    let sphere = dpm(&["construct", "sphere", "--cycles", "5"], None);
    let o = dpm(&["chromatic", "--exact"], Some(&sphere.stdout));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn complete_graph_rejection_names_the_link() {
    let k4 = dpm(&["construct", "complete", "--n", "4"], None);
    let o = dpm(&["verify", "--dim", "3"], Some(&k4.stdout));
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("link of vertex a is C₃"), "{out}");
    assert!(out.contains("\"verdict\":\"reject\""), "{out}");
}

#[test]
fn cross_polytope_dual_is_the_cube() {
    let cp = dpm(&["construct", "cross-polytope", "--k", "2"], None);
    let dual = graph_out(&["dual"], Some(&cp.stdout));
    assert_eq!(dual.len(), 8);
    assert!(dual.is_isomorphic(&hypercube(3)));
}

#[test]
fn table_report_has_six_rows_and_a_note() {
    let o = dpm(&["report", "table1"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8, "{out}");
    assert!(lines[7].starts_with("note:"));
    assert!(lines[6].contains("C5 + C5 + C5"));
}

#[test]
fn construct_output_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["construct", "sphere", "--cycles", "4,5", "--suspend", "1"],
        vec!["construct", "cross-polytope", "--k", "3"],
        vec!["construct", "wheel", "--n", "6"],
        vec!["construct", "random", "--n", "9", "--p", "0.4", "--seed", "7"],
    ] {
        let path = dir.path().join("g.json");
        let mut full = args.clone();
        full.extend(["-o", path.to_str().unwrap()]);
        let o = dpm(&full, None);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
        let text = std::fs::read_to_string(&path).unwrap();
        let g = Graph::from_json(&text).unwrap();
        assert_eq!(g.to_json(), text, "{args:?}");
        assert_eq!(stdout(&dpm(&args, None)), text, "{args:?}");
    }
}

#[test]
fn edge_list_input_is_accepted() {
    let o = dpm(
        &["chromatic", "--exact"],
        Some(b"# pentagon\na b\nb c\nc d\nd e\ne a\n"),
    );
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn producers_feed_every_consumer() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.json", &cycle(4).unwrap());
    let c5 = write(dir.path(), "c5.json", &cycle(5).unwrap());
    let producers: Vec<Vec<&str>> = vec![
        vec!["construct", "sphere", "--cycles", "4", "--suspend", "1"],
        vec!["construct", "cross-polytope", "--k", "2"],
        vec!["construct", "cycle", "--n", "6"],
        vec!["join", &c4, &c5],
        vec!["product", &c4, &c4],
        vec!["refine", &c5],
        vec!["suspend", &c5],
    ];
    let consumers: Vec<Vec<&str>> = vec![
        vec!["verify"],
        vec!["chromatic"],
        vec!["chromatic", "--exact"],
        vec!["color", "--method", "exact"],
        vec!["color", "--method", "greedy"],
        vec!["color", "--method", "forest"],
        vec!["dual"],
        vec!["codual", "--vertices", "a"],
        vec!["fisk"],
        vec!["bounds"],
        vec!["refine"],
        vec!["suspend"],
    ];
    for p in &producers {
        let produced = dpm(p, None);
        assert_eq!(produced.status.code(), Some(0), "{p:?}");
        let g = Graph::from_json(&stdout(&produced)).unwrap();
        let first = g.label(0).to_string();
        for c in &consumers {
            let mut args = c.clone();
            if args[0] == "codual" {
                args[2] = &first;
            }
            let o = dpm(&args, Some(&produced.stdout));
            assert_eq!(
                o.status.code(),
                Some(0),
                "{p:?} | {args:?}: {}",
                String::from_utf8_lossy(&o.stderr)
            );
        }
    }
}

#[test]
fn graph_consumers_chain() {
    let oct = dpm(&["construct", "sphere", "--cycles", "4", "--suspend", "1"], None);
    let refined = dpm(&["refine"], Some(&oct.stdout));
    let dual = dpm(&["dual"], Some(&refined.stdout));
    let g = Graph::from_json(&stdout(&dual)).unwrap();
    // refined octahedron has 48 triangles
    assert_eq!(g.len(), 48);
    assert!((0..g.len()).all(|v| g.degree(v) == 3));
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.json", &cycle(4).unwrap());
    let c5 = write(dir.path(), "c5.json", &cycle(5).unwrap());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"vertices\":[\"a\"],\"edges\":[[\"a\",\"z\"]]}").unwrap();
    let bad = bad.to_str().unwrap();
    let missing = dir.path().join("missing.json");
    let missing = missing.to_str().unwrap();
    let triangle = b"a b\nb c\nc a\n".as_slice();
    let non_pure = b"a b\nb c\nc a\nc d\n".as_slice();

    type Case<'a> = (Vec<&'a str>, Option<&'a [u8]>, i32);
    let cases: Vec<Case> = vec![
        (vec!["verify", &c4], None, 0),
        (vec!["verify", "--dim", "1", &c4], None, 0),
        (vec!["bounds", "--sphere-spec", "4", "--remainder", &c5], None, 0),
        (vec!["report", "sphere", "--cycles", "4", "--suspend", "1"], None, 0),
        (vec!["verify", "--dim", "2", &c4], None, 1),
        (vec!["verify"], Some(triangle), 1),
        (vec!["color", "--method", "forest"], Some(triangle), 1),
        (vec!["fisk", &c4, "--join-check", &c5], None, 0),
        (vec!["verify", bad], None, 2),
        (vec!["verify", missing], None, 2),
        (vec!["verify"], Some(b"{not json"), 2),
        (vec!["verify"], Some(b"a a\n"), 2),
        (vec!["dual"], Some(non_pure), 2),
        (vec!["codual", "--vertices", "q", &c4], None, 2),
        (vec!["fisk"], Some(triangle), 2),
        (vec!["construct", "cycle", "--n", "2"], None, 2),
        (vec!["construct", "random", "--n", "4", "--p", "1.5"], None, 2),
        (vec!["construct", "sphere"], None, 2),
        (vec!["--jobs", "0", "verify", &c4], None, 2),
        (vec!["frobnicate"], None, 2),
        (vec!["color", "--method", "psychic", &c4], None, 2),
        (vec!["bounds", "--sphere-spec", "4", &c4], None, 2),
    ];
    for (args, stdin, code) in cases {
        let o = dpm(&args, stdin);
        assert_eq!(
            o.status.code(),
            Some(code),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let o = dpm_env(&["chromatic", "--exact", &c5], None, &[("PM_TIME_BUDGET_SECS", "soon")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn outputs_are_reproducible() {
    for args in [
        vec!["construct", "random", "--n", "12", "--p", "0.5"],
        vec!["report", "table1"],
    ] {
        assert_eq!(dpm(&args, None).stdout, dpm(&args, None).stdout);
    }
    let g = dpm(&["construct", "random", "--n", "14", "--p", "0.5", "--seed", "3"], None);
    let a = dpm(&["color", "--method", "exact"], Some(&g.stdout));
    let b = dpm(&["--jobs", "1", "color", "--method", "exact"], Some(&g.stdout));
    assert_eq!(a.stdout, b.stdout);
    let c = dpm(&["--deterministic", "false", "chromatic", "--exact"], Some(&g.stdout));
    let d = dpm(&["chromatic", "--exact"], Some(&g.stdout));
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn seeds_change_random_graphs() {
    let a = dpm(&["construct", "random", "--n", "10", "--p", "0.5", "--seed", "1"], None);
    let b = dpm(&["construct", "random", "--n", "10", "--p", "0.5", "--seed", "2"], None);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn zero_budget_reports_an_interval_or_value() {
    let g = dpm(&["construct", "sphere", "--cycles", "5,5,5"], None);
    let o = dpm_env(
        &["chromatic", "--exact"],
        Some(&g.stdout),
        &[("PM_TIME_BUDGET_SECS", "0")],
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let text = out.trim();
    let ok = text == "9"
        || text
            .split_once("..")
            .is_some_and(|(l, u)| l.parse::<usize>().unwrap() <= 9 && 9 <= u.parse().unwrap());
    assert!(ok, "{text}");
}

#[test]
fn analysis_json_goes_to_the_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.json", &cycle(5).unwrap());
    let out = dir.path().join("cert.json");
    let o = dpm(&["verify", &c5, "-o", out.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        "{\"dimension\":1,\"verdict\":\"accept\",\"witness\":null}\n"
    );
    assert_eq!(stdout(&o), "accepted as a 1-pseudomanifold\n");
}

#[test]
fn join_check_shows_both_sides() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.json", &cycle(4).unwrap());
    let c5 = write(dir.path(), "c5.json", &cycle(5).unwrap());
    let o = dpm(&["fisk", &c4, "--join-check", &c5], None);
    let out = stdout(&o);
    assert!(out.contains("odd part of the join: 4 vertices"), "{out}");
    assert!(out.contains("formula side: 9 vertices"), "{out}");
    assert!(out.contains("sides equal: false"), "{out}");
}
