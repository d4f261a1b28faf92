use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn chromacore(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chromacore")).args(args).env_remove("CHROMACORE_SEARCH_LIMIT").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn gen_prints_graph6() {
    assert_eq!(chromacore(&["gen", "cycle:5"]), (0, "Dhc\n".to_string(), String::new()));
    assert_eq!(chromacore(&["gen", "complete:4"]).1, "C~\n");
}

#[test]
fn core_of_odd_cycle_is_whole() {
    let (code, out, _) = chromacore(&["core", "cycle:7"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["si"], 14);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(v["minimality"], "pruned_search");
}

#[test]
fn core_all_and_oracle() {
    let (code, out, _) = chromacore(&["core", "--all", "cycle:6"]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap().as_array().unwrap().len(), 6);
    let (code, out, _) = chromacore(&["core", "--oracle", "wheel:5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["si"].as_u64(), v["minimality"].as_str()), (Some(16), Some("oracle_verified")));
}

#[test]
fn chi_reports_witness() {
    let (code, out, _) = chromacore(&["chi", "mycielski(cycle:5)"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["chi"], 4);
    assert_eq!(v["coloring"].as_array().unwrap().len(), 11);
}

#[test]
fn edge_list_file_input() {
    let dir = std::env::temp_dir().join(format!("chromacore-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# a five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
    let (code, out, _) = chromacore(&["chi", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["chi"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_theorem_exits_zero_and_is_deterministic() {
    let a = chromacore(&["verify", "prop-2.2-v"]);
    assert_eq!(a.0, 0);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!((v["corpus_size"].as_u64(), v["passes"].as_u64()), (Some(3), Some(3)));
    assert!(v.get("runtime_ms").is_none());
    assert_eq!(a, chromacore(&["verify", "prop-2.2-v"]));
    let b = chromacore(&["verify", "line-graph-trees", "--seed", "5", "--limit", "trees=30"]);
    assert_eq!(b, chromacore(&["verify", "line-graph-trees", "--seed", "5", "--limit", "trees=30"]));
    assert_eq!(serde_json::from_str::<Value>(&b.1).unwrap()["corpus_size"], 33);
}

#[test]
fn verify_hypothesis_with_counterexample_exits_one() {
    let (code, out, _) = chromacore(&["verify", "strong-odd-cycles-k5"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["counterexamples"].as_array().unwrap().iter().all(|c| c["reverified"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(chromacore(&["bogus"]).0, 2);
    assert_eq!(chromacore(&["chi", "Bx"]).0, 2);
    assert_eq!(chromacore(&["verify", "conj-9.9"]).0, 2);
    assert_eq!(chromacore(&["verify", "prop-2.2-v", "--limit", "depth=3"]).0, 2);
    let (code, _, err) = chromacore(&["core", "cycle:21"]);
    assert_eq!(code, 3);
    assert!(err.contains("best known si 42"), "{err}");
    let out = Command::new(env!("CARGO_BIN_EXE_chromacore"))
        .args(["core", "cycle:21"])
        .env("CHROMACORE_SEARCH_LIMIT", "24")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
