use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: &str) -> Out {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cubecover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Out {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn generate(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend(args);
    let o = run(&full, "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    o.stdout
}

fn json_lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("cubecover-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

// two 5-vertex blocks joined by the bridge 4-9
const BRIDGED: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 4\n3 4\n4 9\n5 6\n5 7\n5 8\n6 7\n6 8\n7 9\n8 9\n";

#[test]
fn petersen_report() {
    let g6 = generate(&["petersen"]);
    let o = run(&["analyze", "-", "--json", "--no-timing"], &g6);
    assert_eq!(o.code, 0);
    let r = &json_lines(&o.stdout)[0];
    assert_eq!(r["scc"], 21);
    assert_eq!(r["tau"], serde_json::json!({"kind": "exact", "value": 5}));
    assert_eq!(r["oddness"], 2);
    assert_eq!(r["circumference"], 9);
    assert_eq!(r["girth"], 5);
    assert_eq!(r["three_edge_colourable"], false);
    assert!(r.get("timing_ms").is_none());
    let text = run(&["analyze", "-"], &g6).stdout;
    assert!(text.contains("scc: 21") && text.contains("tau: 5") && text.contains("timing:"));
}

#[test]
fn tau4_construction_round_trips_through_verify() {
    let g6 = generate(&["flower", "5"]);
    let o = run(&["construct", "--via", "tau4", "-"], &g6);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let r = &json_lines(&o.stdout)[0];
    let len: u64 =
        r["cover"]["circuits"].as_array().unwrap().iter().map(|c| c["edges"].as_array().unwrap().len() as u64).sum();
    assert_eq!(len, 40);
    assert_eq!(r["claimed_bound"], 40);
    let cover = temp("j5-cover.json", &o.stdout);
    let v = run(&["analyze", "-", "--json", "--no-timing", "--verify-cover", cover.to_str().unwrap()], &g6);
    assert_eq!(v.code, 0);
    let check = &json_lines(&v.stdout)[0]["cover_check"];
    assert_eq!(check["valid"], true);
    assert_eq!(check["is_one_two_cover"], true);
    assert_eq!(check["length"], 40);
}

#[test]
fn bridged_graph() {
    let o = run(&["analyze", "-", "--json", "--no-timing"], BRIDGED);
    assert_eq!(o.code, 0);
    let r = &json_lines(&o.stdout)[0];
    assert_eq!(r["bridgeless"], false);
    assert!(r["scc"].is_null());
    assert!(r["notes"][0].as_str().unwrap().contains("bridge"));
    let o = run(&["scc", "-"], BRIDGED);
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["scc", "-"], "this is not a graph\n").code, 1);
    assert_eq!(run(&["scc", "/nonexistent/file"], "").code, 1);
    assert_eq!(run(&["frobnicate"], "").code, 1);
    assert_eq!(run(&["--help"], "").code, 0);
    let g6 = generate(&["petersen"]);
    assert_eq!(run(&["construct", "--via", "tau4", "-"], &g6).code, 2);
    let j7 = generate(&["flower", "7"]);
    let o = run(&["--node-limit", "1", "pcolour", "find", "-"], &j7);
    assert_eq!(o.code, 3, "{}", o.stderr);
    let o = run(&["--node-limit", "1", "scc", "-"], &j7);
    assert_eq!(o.code, 3, "{}", o.stderr);
}

#[test]
fn seed_order_and_repeat_runs_are_byte_identical() {
    let mut stream = generate(&["petersen"]);
    stream.push_str(&generate(&["flower", "5"]));
    stream.push_str(&generate(&["permutation", "0,2,4,1,3"]));
    let base = run(&["analyze", "-", "--json", "--no-timing"], &stream);
    assert_eq!(base.code, 0);
    assert_eq!(base.stdout.lines().count(), 3);
    for seed in ["1", "99"] {
        let o = run(&["--seed-order", seed, "analyze", "-", "--json", "--no-timing"], &stream);
        assert_eq!(o.stdout, base.stdout);
    }
    let again = run(&["analyze", "-", "--json", "--no-timing"], &stream);
    assert_eq!(again.stdout, base.stdout);
    let sources: Vec<String> =
        json_lines(&base.stdout).iter().map(|r| r["source"].as_str().unwrap().to_string()).collect();
    assert_eq!(sources, ["stdin:1", "stdin:2", "stdin:3"]);
}

#[test]
fn constructions_on_petersen() {
    let g6 = generate(&["petersen"]);
    for (via, len) in [("circumference", 21), ("oddness2", 21), ("petersen", 21)] {
        let o = run(&["construct", "--via", via, "-"], &g6);
        assert_eq!(o.code, 0, "{via}: {}", o.stderr);
        let r = &json_lines(&o.stdout)[0];
        let total: usize =
            r["cover"]["circuits"].as_array().unwrap().iter().map(|c| c["edges"].as_array().unwrap().len()).sum();
        assert_eq!(total, len, "{via}");
    }
    let o = run(&["construct", "--via", "oddness2", "--no-refine", "-"], &g6);
    assert_eq!(json_lines(&o.stdout)[0]["claimed_bound"], 22);
}

#[test]
fn petersen_colouring_files() {
    let g6 = generate(&["flower", "5"]);
    let file = std::env::temp_dir().join(format!("cubecover-{}-j5.pcol", std::process::id()));
    let f = file.to_str().unwrap();
    let o = run(&["pcolour", "find", "-", "--out", f], &g6);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(json_lines(&o.stdout)[0]["balanced"], false);
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(text.lines().count(), 30);
    assert!(text.lines().all(|l| l.contains(" -> ")));
    assert_eq!(run(&["pcolour", "verify", "-", f], &g6).code, 0);
    let o = run(&["pcolour", "pullback", "-", "--colouring", f], &g6);
    assert_eq!(o.code, 0);
    let r = &json_lines(&o.stdout)[0];
    assert_eq!(r["claimed_bound"], 41);
    assert_eq!(r["theorem"], "petersen_unbalanced");
    // break the colouring: send the first edge somewhere else
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let (lhs, _) = lines[0].split_once("->").unwrap();
    lines[0] = format!("{lhs}-> 7 9");
    let bad = temp("bad.pcol", &(lines.join("\n") + "\n"));
    let o = run(&["pcolour", "verify", "-", bad.to_str().unwrap()], &g6);
    assert!(o.code == 2, "{}", o.stderr);
}

#[test]
fn generated_formats_read_back() {
    let adj = run(&["--format", "adj", "generate", "goldberg", "5"], "").stdout;
    let g6 = generate(&["goldberg", "5"]);
    let a = run(&["tau", "-"], &adj);
    let b = run(&["tau", "-"], &g6);
    assert_eq!(json_lines(&a.stdout)[0]["tau"], json_lines(&b.stdout)[0]["tau"]);
    assert_eq!(json_lines(&a.stdout)[0]["tau"]["value"], 4);
}

#[test]
fn cdc_and_spectrum_commands() {
    let g6 = generate(&["petersen"]);
    let o = run(&["cdc", "-", "--contains", "0,1,2,3,4"], &g6);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(json_lines(&o.stdout)[0]["kind"], "circuits");
    let o = run(&["cdc", "-", "--k", "5", "--two-factor-class"], &g6);
    assert_eq!(json_lines(&o.stdout)[0]["kind"], "infeasible");
    let o = run(&["cdc", "-", "--contains", "0,1,7"], &g6);
    assert_eq!(o.code, 1);
    let o = run(&["spectrum", "-"], &g6);
    let r = &json_lines(&o.stdout)[0];
    assert_eq!(r["optimal_length"], 21);
    assert_eq!(r["forced_edges"].as_array().unwrap().len(), 0);
    let o = run(&["oddness", "-"], &g6);
    assert_eq!(json_lines(&o.stdout)[0]["oddness"], 2);
    let o = run(&["circ", "-"], &g6);
    assert_eq!(json_lines(&o.stdout)[0]["circumference"], 9);
}
