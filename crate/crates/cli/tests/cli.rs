use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tdmsd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdmsd"))
        .args(args)
        .env_remove("TDMSD_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

#[test]
fn compute_msd_t_on_k4() {
    let out = tdmsd(&["compute", "--input", &fixture("k4.edges"), "--invariant", "msd_t"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["invariant"], "msd_t");
    assert_eq!(rec["value"], 2);
    assert_eq!(rec["base_value"], 2);
    assert_eq!(rec["witness"][0]["t"], 2);
}

#[test]
fn compute_sd_t_on_gstar() {
    let out = tdmsd(&["compute", "--input", &fixture("gstar.edges"), "--invariant", "sd_t"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["value"], 2);
    assert_eq!(rec["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn compute_gamma_t_on_p6_graph6_literal() {
    // P6 in graph6
    let out = tdmsd(&["compute", "--input", "EhCG", "--invariant", "gamma_t"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["value"], 4);
    assert_eq!(rec["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(tdmsd(&["compute", "--input", "A", "--invariant", "gamma"]).status.code(), Some(2));
    assert_eq!(tdmsd(&["compute", "--invariant", "nope", "--input", "A_"]).status.code(), Some(2));
    // two isolated vertices
    assert_eq!(tdmsd(&["compute", "--input", "A?", "--invariant", "gamma_t"]).status.code(), Some(3));
    assert_eq!(tdmsd(&["compute", "--input", "B?", "--invariant", "sd_t"]).status.code(), Some(3));
    assert_eq!(tdmsd(&["verify", "--theorem", "nope"]).status.code(), Some(2));
    assert_eq!(tdmsd(&["verify", "--theorem", "msd-le-3", "--n-max", "9"]).status.code(), Some(2));
}

#[test]
fn verify_reports_are_reproducible() {
    let run = |jobs: &str| {
        tdmsd(&[
            "verify", "--theorem", "tree-sd-eq-msd", "--n-max", "9", "--jobs", jobs, "--no-elapsed",
        ])
    };
    let a = run("1");
    let b = run("3");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let rec = &json_lines(&a)[0];
    assert_eq!(rec["theorem_id"], "tree-sd-eq-msd");
    assert_eq!(rec["graphs_checked"], 1 + 2 + 3 + 6 + 11 + 23 + 47);
    assert_eq!(rec["failures"].as_array().unwrap().len(), 0);
    assert!(rec.get("elapsed").is_none());
}

#[test]
fn verify_verbose_prints_summary_last() {
    let out = tdmsd(&["verify", "--theorem", "path-cycle-formulas", "--n-max", "6", "-v"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 8 + 1);
    assert_eq!(lines[0]["pass"], true);
    assert!(lines.last().unwrap()["elapsed"].is_number());
}

#[test]
fn verify_on_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("in.g6");
    // P6 is a member with sd 3, P7 is not and has sd 2, C5 is skipped
    std::fs::write(&file, "EhCG\nFhCGG\nDhc\n").unwrap();
    let out = tdmsd(&["verify", "--theorem", "family-sd3", "--input", file.to_str().unwrap(), "-v"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["expected"], "3");
    assert_eq!(lines[1]["actual"], "2");
    assert_eq!(lines[2]["graphs_checked"], 2);
}

#[test]
fn family_generate_and_test() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("family.txt");
    let gen = tdmsd(&["family", "generate", "--n-max", "10", "--out", out.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("6 5\n"));
    assert!(text.contains("status: CBAABC"));

    let test = tdmsd(&["family", "test", "--input", out.to_str().unwrap()]);
    assert_eq!(test.status.code(), Some(0));
    let recs = json_lines(&test);
    assert!(recs.len() >= 3);
    assert!(recs.iter().all(|r| r["in_family"] == true));

    let p7 = tdmsd(&["family", "test", "--input", "FhCGG"]);
    assert_eq!(json_lines(&p7)[0]["in_family"], false);
}

#[test]
fn characterize_prints_branch_and_sd() {
    // P4
    let out = tdmsd(&["characterize", "--input", "Ch"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["fired"]["branch"], "leaf");
    assert_eq!(rec["sd_t"], 1);
    assert_eq!(rec["predicts_sd_one"], true);
    // a cycle is no tree
    assert_eq!(tdmsd(&["characterize", "--input", "Bw"]).status.code(), Some(3));
}

#[test]
fn enum_counts() {
    let out = tdmsd(&["enum", "trees", "--n-max", "7"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 11);
    let out = tdmsd(&["enum", "connected", "--n-min", "2", "--n-max", "5"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1 + 2 + 6 + 21);
    assert_eq!(tdmsd(&["enum", "trees", "--n-max", "17"]).status.code(), Some(2));
}

#[test]
fn fixtures_match_shipped_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = tdmsd(&["fixtures", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["k4.edges", "gstar.edges"] {
        let fresh = std::fs::read_to_string(dir.path().join(name)).unwrap();
        let shipped = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(fresh.lines().skip(1).collect::<Vec<_>>(), shipped.lines().skip(1).collect::<Vec<_>>());
    }
}

#[test]
fn cache_dir_persists_values() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_tdmsd"))
            .args(["compute", "--input", "EhCG", "--invariant", "sd_t"])
            .env("TDMSD_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let cache = std::fs::read_to_string(dir.path().join("values.tsv")).unwrap();
    assert!(cache.lines().count() > 1);
    assert!(cache.lines().all(|l| l.starts_with("gamma_t\t")));
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}
