use std::io::Write;
use std::process::Command;

use nichekit::io;
use nichekit::niche::niche_graph;
use nichekit::props::isomorphic;
use nichekit::Graph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nichekit"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("nichekit-cli-{}-{name}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn realize_witness_round_trips_through_niche() {
    let c5 = write_temp("c5.g", "graph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n");
    let out = bin().args(["realize"]).arg(&c5).args(["--k", "5"]).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let (first, rest) = stdout.split_once('\n').unwrap();
    assert!(first.starts_with("YES ("), "{first}");
    let witness = io::parse_tournament(rest).unwrap();
    assert!(isomorphic(&niche_graph(witness.digraph()), &Graph::cycle(5)).is_some());
}

#[test]
fn exit_codes_cover_no_unknown_and_input_errors() {
    let k4 = write_temp(
        "k4.g",
        "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n",
    );
    let out = bin().args(["realize"]).arg(&k4).args(["--k", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("NO ("));

    // Paw graph above a tiny guard: connected, has a triangle, not
    // complete, passes every screen, too big to brute-force.
    let paw = write_temp("paw.g", "graph 4\ne 0 1\ne 0 2\ne 1 2\ne 2 3\n");
    let out = bin()
        .args(["realize"])
        .arg(&paw)
        .args(["--k", "3", "--guard", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("UNKNOWN"));

    let bad = write_temp("bad.g", "graph 3\ne 0 9\n");
    let out = bin().args(["realize"]).arg(&bad).args(["--k", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_verdict_and_env_guard() {
    let k4 = write_temp(
        "k4j.g",
        "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n",
    );
    let out = bin()
        .args(["realize"])
        .arg(&k4)
        .args(["--k", "3", "--json"])
        .output()
        .unwrap();
    let value: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    assert_eq!(value["answer"], "no");
    assert_eq!(value["citation"], "Thm4.1(complete)");

    let paw = write_temp("pawenv.g", "graph 4\ne 0 1\ne 0 2\ne 1 2\ne 2 3\n");
    let out = bin()
        .args(["realize"])
        .arg(&paw)
        .args(["--k", "3"])
        .env("NICHEKIT_GUARD", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_and_enumerate_are_deterministic() {
    let run = || {
        bin()
            .args(["verify", "thm2.2", "--max-n", "5", "--threads", "2"])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("PASS: thm2.2"));

    let out = bin()
        .args(["enumerate", "--parts", "1,1,1", "--count-only"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "8");
}
