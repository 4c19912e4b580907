use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn commdetect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commdetect"))
        .args(args)
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = commdetect(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fails(args: &[&str]) -> String {
    let out = commdetect(args);
    assert!(!out.status.success(), "{args:?} should fail");
    String::from_utf8(out.stderr).unwrap()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn louvain_run_writes_partition() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let stdout = ok(&[
        "run",
        "--algorithm",
        "louvain",
        "--dataset",
        "karate",
        "--variant",
        "normal",
        "--seed",
        "7",
        "--out",
        s(&out),
    ]);
    assert!(stdout.contains("communities:"));
    let v = json(&out);
    assert_eq!(v["labels"].as_array().unwrap().len(), 34);
    let q = v["modularity"].as_f64().unwrap();
    assert!(q > -0.5 && q <= 1.0);
    assert_eq!(v["algorithm"], "louvain");
}

#[test]
fn runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        ok(&[
            "run",
            "--algorithm",
            "louvain",
            "--seed",
            "3",
            "--out",
            s(out),
        ]);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn girvan_newman_eight_with_cuts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gn.json");
    ok(&[
        "run",
        "--algorithm",
        "girvan-newman",
        "--target-communities",
        "8",
        "--out",
        s(&out),
    ]);
    assert_eq!(json(&out)["num_communities"], 8);
    let cuts = json(&dir.path().join("gn.cuts.json"));
    let first = cuts[0].as_array().unwrap();
    assert_eq!((first[0].as_u64(), first[1].as_u64()), (Some(0), Some(31)));
}

#[test]
fn agglomerative_self_neighboring_not_more_clusters() {
    let dir = tempfile::tempdir().unwrap();
    let count = |sn: bool| {
        let out = dir.path().join(format!("agg-{sn}.json"));
        let mut args = vec![
            "run",
            "--algorithm",
            "agglomerative",
            "--linkage",
            "complete",
            "--hsl-value",
            "0.3",
            "--out",
            s(&out),
        ];
        if sn {
            args.push("--self-neighboring");
        }
        ok(&args);
        assert!(dir
            .path()
            .join(format!("agg-{sn}.dendrogram.json"))
            .exists());
        json(&out)["num_communities"].as_u64().unwrap()
    };
    assert!(count(true) <= count(false));
}

#[test]
fn fastgreedy_trace_to_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fg.json");
    ok(&["run", "--algorithm", "fastgreedy", "--out", s(&out)]);
    let trace = dir.path().join("fg.trace.json");
    let csv = dir.path().join("fg.csv");
    ok(&["plot-data", s(&trace), "--out", s(&csv)]);
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 34);
    assert_eq!(text.lines().next().unwrap(), "step,q,num_communities");
}

#[test]
fn bench_report_table_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.json");
    let stdout = ok(&[
        "bench",
        "--variant",
        "normal,Exp",
        "--runs",
        "10",
        "--out",
        s(&out),
    ]);
    assert!(stdout.contains("normal") && stdout.contains("Exp"));
    let report = json(&out);
    let records = report["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["q_values"].as_array().unwrap().len(), 10);
    assert_eq!(records[1]["max"], records[1]["min"]);
    assert!(report["environment"].is_string());
    assert!(dir.path().join("bench.txt").exists());

    let csv = dir.path().join("bench.csv");
    ok(&["plot-data", s(&out), "--out", s(&csv)]);
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 21);
}

#[test]
fn thread_cap_does_not_change_scores() {
    let dir = tempfile::tempdir().unwrap();
    let mut scores = Vec::new();
    for threads in ["1", "4"] {
        let out = dir.path().join(format!("b{threads}.json"));
        let st = Command::new(env!("CARGO_BIN_EXE_commdetect"))
            .args([
                "bench",
                "--variant",
                "normal",
                "--runs",
                "8",
                "--out",
                s(&out),
            ])
            .env("COMMDETECT_THREADS", threads)
            .status()
            .unwrap();
        assert!(st.success());
        scores.push(json(&out)["records"][0]["q_values"].clone());
    }
    assert_eq!(scores[0], scores[1]);
}

#[test]
fn edgelist_dataset() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    fs::write(&graph, "# two triangles\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n").unwrap();
    let out = dir.path().join("p.json");
    let dataset = format!("edgelist:{}", s(&graph));
    ok(&[
        "run",
        "--algorithm",
        "fastgreedy",
        "--dataset",
        &dataset,
        "--out",
        s(&out),
    ]);
    assert_eq!(json(&out)["modularity"], 0.5);
}

#[test]
fn error_paths_leave_no_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let o = s(&out);
    let missing = format!("edgelist:{}", s(&dir.path().join("nope.txt")));
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 1\n1 x\n").unwrap();
    let bad = format!("edgelist:{}", s(&bad));

    assert!(fails(&[
        "run",
        "--algorithm",
        "louvain",
        "--dataset",
        &missing,
        "--out",
        o
    ])
    .contains("nope.txt"));
    assert!(fails(&[
        "run",
        "--algorithm",
        "louvain",
        "--dataset",
        &bad,
        "--out",
        o
    ])
    .contains("line 2"));
    assert!(fails(&[
        "run",
        "--algorithm",
        "louvain",
        "--target-communities",
        "3",
        "--out",
        o
    ])
    .contains("target-communities"));
    fails(&[
        "run",
        "--algorithm",
        "fastgreedy",
        "--runs",
        "3",
        "--out",
        o,
    ]);
    fails(&["run", "--algorithm", "girvan-newman", "--out", o]);
    fails(&[
        "run",
        "--algorithm",
        "girvan-newman",
        "--target-communities",
        "99",
        "--out",
        o,
    ]);
    fails(&[
        "run",
        "--algorithm",
        "agglomerative",
        "--hsl-value",
        "2",
        "--out",
        o,
    ]);
    fails(&[
        "run",
        "--algorithm",
        "louvain",
        "--dataset",
        "random:5,0,1",
        "--out",
        o,
    ]);
    fails(&["run", "--algorithm", "leiden", "--out", o]);
    fails(&["bench", "--runs", "0"]);
    fails(&["plot-data", o, "--out", s(&dir.path().join("x.csv"))]);
    assert_eq!(
        fs::read_dir(dir.path()).unwrap().count(),
        1,
        "only bad.txt remains"
    );
}
