use std::io::Write;
use std::process::{Command, Output};

fn indom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indom")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = indom(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("indom-cli-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn path_three_polynomial() {
    let out = indom(&["poly", "--family", "path", "--n", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"coeffs\":[\"0\",\"1\",\"1\"]}\n");
}

#[test]
fn analyze_single_edge() {
    let v = json(&["analyze", "--graph6", "A_", "--json"]);
    assert_eq!(v["gamma_i"], 1);
    assert_eq!(v["alpha"], 1);
    assert_eq!(v["well_covered"], true);
    assert_eq!(v["di"]["coeffs"], serde_json::json!(["0", "2"]));
    let human = stdout(&indom(&["analyze", "--graph6", "A_"]));
    assert!(human.contains("D_i(G, x)        2x"));
}

#[test]
fn verify_flags_flower_erratum() {
    let args = ["verify", "--family", "generalized_friendship_paper", "--q", "4", "--n", "2", "--json"];
    let out = indom(&args);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["match"], false);
    assert_eq!(v[0]["oracle"]["coeffs"], serde_json::json!(["0", "0", "0", "3", "1"]));
    assert_eq!(v[0]["closed_form"]["coeffs"], serde_json::json!(["0", "0", "0", "3", "2"]));
    let mut allowed = args.to_vec();
    allowed.push("--allow-mismatch");
    assert_eq!(indom(&allowed).status.code(), Some(0));
}

#[test]
fn verify_matching_ranges_exit_zero() {
    let v = json(&["verify", "--family", "book", "--n", "2..6", "--json"]);
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert!(v.as_array().unwrap().iter().all(|r| r["match"] == true));
    let v = json(&["verify", "--family", "path", "--json"]);
    assert_eq!(v.as_array().unwrap().len(), 18);
    let v = json(&["verify", "--family", "generalized_book", "--n", "2,3", "--m", "5..=9", "--json"]);
    assert_eq!(v.as_array().unwrap().len(), 10);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(indom(&["poly"]).status.code(), Some(1));
    assert_eq!(indom(&["poly", "--graph6", "A_", "--family", "path", "--n", "3"]).status.code(), Some(1));
    assert_eq!(indom(&["bogus"]).status.code(), Some(1));
    assert_eq!(indom(&["verify", "--family", "nonsense"]).status.code(), Some(1));
    assert_eq!(indom(&["verify", "--family", "path", "--n", "4..2"]).status.code(), Some(1));
    assert_eq!(indom(&["product", "--op", "join", "--graph6", "A_"]).status.code(), Some(1));
    assert_eq!(indom(&["construct"]).status.code(), Some(1));
    assert_eq!(indom(&["--help"]).status.code(), Some(0));
}

#[test]
fn computation_errors_exit_two() {
    let out = indom(&["poly", "--family", "path", "--n", "70"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("64"));
    assert_eq!(indom(&["poly", "--graph6", "~~~~~~~~"]).status.code(), Some(2));
    assert_eq!(indom(&["poly", "--family", "cycle", "--n", "2"]).status.code(), Some(2));
    assert_eq!(indom(&["construct", "--integer-root", "0"]).status.code(), Some(2));
    assert_eq!(indom(&["analyze", "--family", "path", "--n", "30"]).status.code(), Some(2));
    let missing = std::env::temp_dir().join("indom-cli-definitely-missing");
    assert_eq!(indom(&["poly", "--file", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn max_n_raises_exhaustive_limit_with_warning() {
    let out = indom(&["analyze", "--family", "path", "--n", "30", "--max-n", "30", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["gamma"], 10);
}

#[test]
fn file_inputs() {
    let edges = temp_file("p4.txt", "# path on four vertices\n4\n0 1\n1 2\n2 3\n");
    let g6 = temp_file("p4.g6", "Ch\n");
    let a = json(&["poly", "--file", edges.to_str().unwrap(), "--json"]);
    let b = json(&["poly", "--file", g6.to_str().unwrap(), "--json"]);
    assert_eq!(a, b);
    assert_eq!(a["coeffs"], serde_json::json!(["0", "0", "3"]));
    let bad = temp_file("loop.txt", "3\n0 0\n");
    assert_eq!(indom(&["poly", "--file", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn products_match_predictions() {
    for op in ["join", "lex", "corona", "compound"] {
        let v = json(&["product", "--op", op, "--family", "path", "--n", "4", "--h-graph6", "A?", "--json"]);
        assert_eq!(v["match"], true, "{op}");
    }
    let v = json(&["product", "--op", "expansion", "--family", "path", "--n", "3", "--r", "2", "--json"]);
    assert_eq!(v["predicted"]["coeffs"], serde_json::json!(["0", "2", "4"]));
    assert_eq!(v["match"], true);
    let cover = temp_file("cover.txt", "0 1\n2 3\n");
    let v = json(&[
        "product", "--op", "compound", "--family", "path", "--n", "4", "--h-graph6", "A?", "--cover",
        cover.to_str().unwrap(), "--json",
    ]);
    let h4 = json(&["family", "--family", "h_graph", "--n", "4", "--json"]);
    assert_eq!(v["graph6"], h4["graph6"]);
    let bad = temp_file("badcover.txt", "0 2\n1 3\n");
    let out = indom(&["product", "--op", "compound", "--family", "path", "--n", "4", "--h-graph6", "A?", "--cover", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_output_formats() {
    assert_eq!(stdout(&indom(&["family", "--family", "cycle", "--n", "5"])), "Dhc\n");
    assert_eq!(stdout(&indom(&["family", "--family", "path", "--n", "3", "--format", "edge-list"])), "3\n0 1\n1 2\n");
    let v = json(&["family", "--family", "complete_multipartite", "--parts", "2,1,1", "--json"]);
    assert_eq!(v["size"], 5);
    assert_eq!(v["family"], "complete_multipartite(2,1,1)");
}

#[test]
fn constructions() {
    let v = json(&["construct", "--alternating-sum", "-4", "--json"]);
    assert_eq!(v["value_at_minus_one"], "-4");
    let v = json(&["construct", "--alternating-sum", "2", "--json"]);
    assert_eq!(v["value_at_minus_one"], "2");
    let v = json(&["construct", "--integer-root", "7", "--json"]);
    assert_eq!(v["di"]["coeffs"], serde_json::json!(["0", "7", "1"]));
    assert_eq!(v["real_roots"][0]["lo"], "-7");
    assert_eq!(v["real_roots"][0]["exact"], true);
}

#[test]
fn roots_report() {
    let v = json(&["roots", "--family", "friendship", "--n", "3", "--json"]);
    assert_eq!(v["real_rooted"], false);
    assert_eq!(v["certification"], "sturm");
    assert_eq!(v["complex_roots"].as_array().unwrap().len(), 3);
    let v = json(&["roots", "--family", "cycle", "--n", "5", "--of", "i", "--json"]);
    assert_eq!(v["real_rooted"], true);
}

#[test]
fn output_is_identical_across_worker_counts() {
    for args in [
        &["analyze", "--family", "h_graph", "--n", "9"][..],
        &["verify", "--family", "generalized_friendship", "--allow-mismatch"][..],
        &["roots", "--family", "book", "--n", "5"][..],
    ] {
        let mut one = args.to_vec();
        one.extend(["--workers", "1"]);
        let mut four = args.to_vec();
        four.extend(["--workers", "4"]);
        let (a, b) = (indom(&one), indom(&four));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        for json_flag in [&one, &four] {
            let mut with_json = json_flag.clone();
            with_json.push("--json");
            assert_eq!(indom(&with_json).stdout, indom(&with_json).stdout);
        }
    }
}
