use std::path::PathBuf;
use std::process::{Command, Output};

fn hamcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hamcycle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_then_count() {
    let file = scratch("p10.txt");
    let o = hamcycle(&["gen", "--family", "petersen", "--params", "10,2", "--out", file.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(text.lines().next(), Some("20 30"));
    let o = hamcycle(&["count", file.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "30");
}

#[test]
fn count_family_with_options() {
    let o = hamcycle(&["count", "--family", "rl", "--params", "5,4"]);
    assert_eq!(stdout(&o).trim(), "542");
    let o = hamcycle(&["count", "--family", "nanotube", "--params", "6,4", "--by-type"]);
    assert_eq!(stdout(&o), "type 2: 96\ntype 4: 1104\ntype 6: 32\n");
    let o = hamcycle(&["count", "--family", "petersen", "--params", "5,1", "--per-edge"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 16);
    assert!(lines[1..].iter().all(|l| l.split(' ').nth(2).unwrap().parse::<u64>().unwrap() % 2 == 0));
}

#[test]
fn formulas() {
    assert_eq!(stdout(&hamcycle(&["formula", "petersen", "32"])).trim(), "4412");
    assert_eq!(stdout(&hamcycle(&["formula", "rl", "5", "4"])).trim(), "542");
    assert_eq!(stdout(&hamcycle(&["formula", "nanotube5", "5"])).trim(), "3040");
}

#[test]
fn transfer_commands() {
    let o = hamcycle(&["tm", "--width", "5", "--pairs", "2", "--length", "3", "--show-system"]);
    let out = stdout(&o);
    assert!(out.contains("M =\n  0 3\n  4 0\n"), "{out}");
    assert!(out.ends_with("typed_count(5,2,3) = 240\n"));
    let o = hamcycle(&["tm", "--width", "6", "--pairs", "2", "--length", "4", "--full"]);
    assert_eq!(stdout(&o).trim(), "typed_count(6,2,4) = 1104");
    let o = hamcycle(&["asym", "--width", "6", "--pairs", "2"]);
    let out = stdout(&o);
    assert!(out.contains("recurrence = 1 -4 -4 8"), "{out}");
    assert!(out.contains("dominant_root = 4.4939592074"), "{out}");
}

#[test]
fn fixture_survey_and_connectivity() {
    let edge_file = scratch("cc5a.txt");
    assert!(hamcycle(&["fixture", "cc5_64_a", "--out", edge_file.to_str().unwrap()]).status.success());
    let o = hamcycle(&["check-cc", edge_file.to_str().unwrap(), "--k", "5"]);
    assert_eq!(stdout(&o).trim(), "graph 0: cyclically 5-edge-connected: yes");

    let base = scratch("base38.txt");
    hamcycle(&["fixture", "base38", "--out", base.to_str().unwrap()]);
    let o = hamcycle(&["check-cc", base.to_str().unwrap(), "--k", "5"]);
    assert!(stdout(&o).contains(": no (cut "));

    // A planar_code corpus holding the dodecahedron twice.
    let g = hamcycle::generators::generalized_petersen(10, 2).unwrap();
    let mut bytes = Vec::new();
    hamcycle::io::write_planar_code(&[g.clone(), g], &mut bytes).unwrap();
    let corpus = scratch("corpus.pc");
    std::fs::write(&corpus, bytes).unwrap();
    let csv = scratch("survey.csv");
    let o = hamcycle(&["survey", corpus.to_str().unwrap(), "--cc", "5", "--csv", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text, "n,graphs,hamiltonian,min,max,argmax_id,timeouts\n20,2,2,30,30,0,0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(hamcycle(&["formula", "petersen", "9"]).status.code(), Some(1));
    assert_eq!(hamcycle(&["tm", "--width", "14", "--pairs", "2", "--length", "1"]).status.code(), Some(1));
    assert_eq!(hamcycle(&["fixture", "nope"]).status.code(), Some(1));
    assert_eq!(hamcycle(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(hamcycle(&["count", "/nonexistent/file"]).status.code(), Some(1));
    let o = hamcycle(&["count", "--family", "petersen", "--params", "40,2", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let bad = scratch("bad.txt");
    std::fs::write(&bad, "2 1\na b\n").unwrap();
    assert_eq!(hamcycle(&["count", bad.to_str().unwrap()]).status.code(), Some(1));
}
