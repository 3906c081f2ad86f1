use std::fs;
use std::process::{Command, Output};

use topo_compat::topology::hypercube;
use topo_compat::{edgelist, TopologySpec};

fn topo_compat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topo-compat"))
        .args(args)
        .env_remove("TOPO_COMPAT_TIME_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn star_table_matches_golden_csv() {
    let out = topo_compat(&[
        "table", "--task", "star", "--s", "2..8", "--reach", "1..3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let golden = include_str!("data/star_table.csv");
    assert_eq!(stdout(&out), golden);
}

#[test]
fn ring_table_is_fully_compatible() {
    let out = topo_compat(&["table", "--task", "ring", "--s", "2..4", "--reach", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "ring hypercube:2 reach=1 n=4 p=4 c=1.0000\n\
         ring hypercube:3 reach=1 n=8 p=8 c=1.0000\n\
         ring hypercube:4 reach=1 n=16 p=16 c=1.0000\n"
    );
}

#[test]
fn power_at_reach_one_equals_gen() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["hypercube:5", "ring:9", "star:6", "complete:5"] {
        let generated = dir.path().join("gen.txt");
        let powered = dir.path().join("power.txt");
        assert!(
            topo_compat(&["gen", spec, "-o", generated.to_str().unwrap()])
                .status
                .success()
        );
        assert!(topo_compat(&[
            "power",
            spec,
            "--reach",
            "1",
            "-o",
            powered.to_str().unwrap()
        ])
        .status
        .success());
        assert_eq!(
            fs::read(&generated).unwrap(),
            fs::read(&powered).unwrap(),
            "{spec}"
        );
    }
}

#[test]
fn gen_writes_to_stdout() {
    let out = topo_compat(&["gen", "hypercube:2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4 4\n0 1\n0 2\n1 3\n2 3\n");
}

#[test]
fn power_of_file_topology() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.txt");
    fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let spec = format!("file:{}", path.display());
    let out = topo_compat(&["power", &spec, "--reach", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3 3\n0 1\n0 2\n1 2\n");
}

#[test]
fn ring_witness_is_a_hamiltonian_cycle() {
    let out = topo_compat(&[
        "potential",
        "--task",
        "ring",
        "--system",
        "hypercube:4",
        "--reach",
        "1",
        "--witness",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p=16 c=1.0000"));
    let cycle: Vec<usize> = lines
        .next()
        .unwrap()
        .strip_prefix("cycle: ")
        .unwrap()
        .split(' ')
        .map(|v| v.parse().unwrap())
        .collect();
    let h4 = hypercube(4).unwrap();
    assert_eq!(cycle.len(), 16);
    assert!((0..16).all(|i| h4.has_edge(cycle[i], cycle[(i + 1) % 16])));
}

#[test]
fn generic_ring_potential() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lollipop.txt");
    fs::write(&path, "6 6\n0 1\n1 2\n2 3\n3 0\n3 4\n4 5\n").unwrap();
    let spec = format!("file:{}", path.display());
    let out = topo_compat(&[
        "potential",
        "--task",
        "ring",
        "--system",
        &spec,
        "--reach",
        "1",
    ]);
    assert_eq!(stdout(&out), "p=4 c=0.6667\n");
    let out = topo_compat(&[
        "potential",
        "--task",
        "ring",
        "--system",
        &spec,
        "--reach",
        "2",
    ]);
    assert_eq!(stdout(&out), "p=6 c=1.0000\n");
}

#[test]
fn large_hypercubes_use_closed_forms() {
    let out = topo_compat(&[
        "potential",
        "--task",
        "star",
        "--system",
        "hypercube:20",
        "--reach",
        "3",
    ]);
    assert_eq!(stdout(&out), "p=1351 c=0.0013\n");
    let out = topo_compat(&[
        "potential",
        "--task",
        "ring",
        "--system",
        "hypercube:20",
        "--reach",
        "1",
    ]);
    assert_eq!(stdout(&out), "p=1048576 c=1.0000\n");
}

#[test]
fn time_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_topo-compat"))
        .args([
            "embed",
            "--task",
            "ring:3",
            "--system",
            "hypercube:3",
            "--reach",
            "1",
        ])
        .env("TOPO_COMPAT_TIME_LIMIT", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_topo-compat"))
        .args([
            "embed",
            "--task",
            "ring:3",
            "--system",
            "hypercube:3",
            "--reach",
            "1",
        ])
        .env("TOPO_COMPAT_TIME_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "no embedding\n");
}

#[test]
fn exit_codes() {
    let bad = topo_compat(&[
        "potential",
        "--task",
        "star",
        "--system",
        "hypercube:0",
        "--reach",
        "1",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let unknown = topo_compat(&[
        "embed",
        "--task",
        "ring:7",
        "--system",
        "hypercube:4",
        "--reach",
        "1",
        "--max-nodes",
        "3",
    ]);
    assert_eq!(unknown.status.code(), Some(1));
    let decided = topo_compat(&[
        "embed",
        "--task",
        "ring:7",
        "--system",
        "hypercube:4",
        "--reach",
        "1",
    ]);
    assert_eq!(decided.status.code(), Some(0));
    assert_eq!(stdout(&decided), "no embedding\n");
}

#[test]
fn round_trip_through_library_reader() {
    for text in ["hypercube:6", "ring:3", "star:2", "complete:1"] {
        let out = topo_compat(&["gen", text]);
        let graph = edgelist::parse(&stdout(&out)).unwrap();
        assert_eq!(
            graph,
            text.parse::<TopologySpec>().unwrap().build().unwrap()
        );
    }
}
