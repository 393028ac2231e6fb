use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use strongcol::{EdgeColoring, Graph};

const BIN: &str = env!("CARGO_BIN_EXE_strongcol");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("STRONGCOL_BUDGET")
        .output()
        .expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("strongcol-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("write");
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().expect("utf8 path")
}

#[test]
fn gen_round_trips() {
    let families: [&[&str]; 8] = [
        &["cayley", "12"],
        &["cycle", "7"],
        &["path", "4"],
        &["star", "5"],
        &["hypercube", "3"],
        &["jellyfish", "5", "1,0,2,0,1"],
        &["random-tree", "9", "4"],
        &["tree", "0-1,1-2,1-3"],
    ];
    for family in families {
        let out = run(&[&["gen"], family].concat());
        assert_eq!(out.status.code(), Some(0), "{family:?}");
        let text = stdout(&out);
        let g = Graph::from_json_str(text.trim()).expect("graph json");
        assert_eq!(g.to_json_string(), text.trim());
        let mut edges: Vec<_> = g.edges().map(|e| (e.u(), e.v())).collect();
        let sorted = {
            let mut s = edges.clone();
            s.sort();
            s
        };
        assert_eq!(edges, sorted, "canonical edge order");
        edges.dedup();
        assert_eq!(edges.len(), g.edge_count());
    }
    let out = run(&["gen", "cartesian", "--left", "star 3", "--right", "cycle 4"]);
    let g = Graph::from_json_str(stdout(&out).trim()).expect("graph json");
    assert_eq!((g.vertex_count(), g.edge_count()), (16, 28));
}

#[test]
fn colorings_reverify() {
    let tree = scratch(
        "tree.json",
        &stdout(&run(&["gen", "tree", "0-1,1-2,1-3,3-4"])),
    );
    let cases: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (vec!["color", "cayley", "30"], vec!["gen", "cayley", "30"]),
        (
            vec!["color", "star-product", "3", "2"],
            vec!["gen", "cartesian", "--left", "star 3", "--right", "star 2"],
        ),
        (
            vec![
                "color",
                "tree-product",
                "--tree",
                arg(&tree),
                "--tree",
                arg(&tree),
            ],
            vec![
                "gen",
                "cartesian",
                "--left",
                "tree 0-1,1-2,1-3,3-4",
                "--right",
                "tree 0-1,1-2,1-3,3-4",
            ],
        ),
        (
            vec!["color", "tree-cycle", "--tree", arg(&tree), "--cycle", "9"],
            vec![
                "gen",
                "cartesian",
                "--left",
                "tree 0-1,1-2,1-3,3-4",
                "--right",
                "cycle 9",
            ],
        ),
    ];
    for (k, (color, gen)) in cases.iter().enumerate() {
        let out = run(color);
        assert_eq!(out.status.code(), Some(0), "{color:?}");
        let text = stdout(&out);
        let mut lines = text.lines();
        let coloring = scratch(&format!("c{k}.json"), lines.next().expect("coloring line"));
        let summary = lines.next().expect("summary line");
        assert!(summary.ends_with("verified=true"), "{summary}");
        let graph = scratch(&format!("g{k}.json"), &stdout(&run(gen)));
        let verify = run(&[
            "verify",
            "--graph",
            arg(&graph),
            "--coloring",
            arg(&coloring),
        ]);
        assert_eq!(verify.status.code(), Some(0), "{}", stdout(&verify));
        let report: serde_json::Value =
            serde_json::from_str(stdout(&verify).trim()).expect("report");
        assert_eq!(report["valid"], true);
    }
}

#[test]
fn summary_lines() {
    let text = stdout(&run(&["color", "cayley", "12"]));
    assert_eq!(
        text.lines().last(),
        Some("colors=12 formula=12 verified=true")
    );
    let text = stdout(&run(&["color", "star-product", "3", "3"]));
    assert_eq!(
        text.lines().last(),
        Some("colors=11 budget=11 verified=true")
    );
}

#[test]
fn corrupted_coloring_fails_verification() {
    let graph = scratch("c5.json", &stdout(&run(&["gen", "cycle", "5"])));
    let mut c = EdgeColoring::from_json_str(
        stdout(&run(&["color", "cayley", "5"]))
            .lines()
            .next()
            .unwrap(),
    )
    .expect("coloring");
    c = c.map_colors(|_| 1);
    let coloring = scratch("bad.json", &c.to_json_string());
    let out = run(&[
        "verify",
        "--graph",
        arg(&graph),
        "--coloring",
        arg(&coloring),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("report");
    assert_eq!(report["valid"], false);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["gen", "cycle", "2"],
        &["gen", "nothing", "3"],
        &["color", "cayley"],
        &["color", "tree-cycle", "--cycle", "5"],
        &[
            "verify",
            "--graph",
            "/nonexistent/g.json",
            "--coloring",
            "/nonexistent/c.json",
        ],
        &["exact"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exact_output_and_budget_env() {
    let c5 = scratch("exact-c5.json", &stdout(&run(&["gen", "cycle", "5"])));
    let out = run(&["exact", "--graph", arg(&c5)]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("json");
    assert_eq!(v["chi"], 5);
    assert_eq!(v["optimal"], true);
    assert!(v["nodes"].is_u64());
    assert_eq!(v["witness"]["num_colors"], 5);

    let prism = scratch(
        "prism.json",
        &stdout(&run(&[
            "gen",
            "cartesian",
            "--left",
            "cycle 6",
            "--right",
            "path 2",
        ])),
    );
    let starved = Command::new(BIN)
        .args(["exact", "--graph", arg(&prism)])
        .env("STRONGCOL_BUDGET", "1")
        .output()
        .expect("spawn");
    assert_eq!(starved.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&starved).trim()).expect("json");
    assert_eq!(v["optimal"], false);
    let full = run(&["exact", "--graph", arg(&prism)]);
    assert_eq!(full.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&full).trim()).expect("json");
    assert_eq!(v["chi"], 8);
}

#[test]
fn output_formats() {
    let dot = run(&["gen", "cycle", "4", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("graph"));
    let colored = run(&["color", "cayley", "6", "--format", "dot"]);
    assert_eq!(colored.status.code(), Some(0));
    assert!(stdout(&colored).starts_with("graph"));
    assert!(String::from_utf8_lossy(&colored.stderr).contains("colors=3 formula=3 verified=true"));
    let text = stdout(&run(&["gen", "path", "3", "--format", "text"]));
    assert_eq!(text, "n=3 m=2\n0 1\n1 2\n");
}

#[test]
fn bounds_and_table() {
    let tree = scratch("claw.json", &stdout(&run(&["gen", "star", "3"])));
    let out = run(&["bounds", "--tree", arg(&tree), "--cycle", "6", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("json");
    assert_eq!(v["exact"], 11);
    assert_eq!(v["lower"]["value"], 10);
    assert_eq!(v["upper"]["value"], 12);

    let out = run(&["table", "cayley", "--to", "20", "--jobs", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("row"))
        .collect();
    assert_eq!(rows.len(), 19);
    for (n, row) in (2..).zip(&rows) {
        assert_eq!(row["instance"], format!("cayley n={n}"));
        assert_eq!(row["gap"], 0);
    }
}

fn color_then_verify(
    color: &[&str],
    gen: &[&str],
    tag: &str,
) -> Result<(), proptest::test_runner::TestCaseError> {
    let out = run(color);
    if out.status.code() != Some(0) {
        return Ok(());
    }
    let text = stdout(&out);
    let coloring = scratch(
        &format!("{tag}-c.json"),
        text.lines().next().unwrap_or_default(),
    );
    let graph = scratch(&format!("{tag}-g.json"), &stdout(&run(gen)));
    let verify = run(&[
        "verify",
        "--graph",
        arg(&graph),
        "--coloring",
        arg(&coloring),
    ]);
    proptest::prop_assert_eq!(verify.status.code(), Some(0), "{:?}", color);
    Ok(())
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

    #[test]
    fn successful_colorings_reverify(n in 2usize..80, size in 2usize..12, seed in 0u64..1000, len in 3usize..21) {
        let n = n.to_string();
        color_then_verify(&["color", "cayley", &n], &["gen", "cayley", &n], &format!("x{n}"))?;
        let tree_spec = format!("random-tree {size} {seed}");
        let tree = scratch(&format!("t{size}-{seed}.json"), &stdout(&run(&["gen", "random-tree", &size.to_string(), &seed.to_string()])));
        let cycle_spec = format!("cycle {len}");
        color_then_verify(
            &["color", "tree-cycle", "--tree", arg(&tree), "--cycle", &len.to_string()],
            &["gen", "cartesian", "--left", &tree_spec, "--right", &cycle_spec],
            &format!("tc{size}-{seed}-{len}"),
        )?;
    }
}
