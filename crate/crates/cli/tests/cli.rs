use std::process::{Command, Output};

fn ffhyper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffhyper"))
        .args(args)
        .env_remove("FFHYPER_MAX_Q")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn jacobi_value() {
    let o = ffhyper(&["eval", "jacobi", "--q", "5", "--chi", "2", "--lam", "2"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "-1");
}

#[test]
fn binomial_of_trivial_characters() {
    let o = ffhyper(&["eval", "binom", "--q", "7", "--A", "0", "--B", "0"]);
    assert_eq!(first_line(&o), "5");
}

#[test]
fn fd_vanishes_when_a_point_is_zero() {
    let o = ffhyper(&["eval", "fd", "--q", "7", "--A", "1", "--B", "2,3", "--C", "4", "--x", "0,3"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "0");
}

#[test]
fn fd_paths_agree() {
    for q in ["7", "3^2"] {
        let args = ["--q", q, "--A", "1", "--B", "2,3", "--C", "4", "--x", "2,5"];
        let def = ffhyper(&[&["eval", "fd"][..], &args].concat());
        let sum = ffhyper(&[&["eval", "fd-charsum"][..], &args].concat());
        assert!(def.status.success() && sum.status.success());
        assert_eq!(stdout(&def), stdout(&sum));
    }
}

#[test]
fn fd_without_variables_is_the_binomial() {
    let fd = ffhyper(&["eval", "fd", "--q", "9", "--A", "3", "--C", "5"]);
    let binom = ffhyper(&["eval", "binom", "--q", "9", "--A", "3", "--B", "5"]);
    assert_eq!(stdout(&fd), stdout(&binom));
}

#[test]
fn greene_normalization_divides_by_q() {
    let o = ffhyper(&[
        "eval", "2f1", "--q", "7", "--A", "1", "--B", "2", "--C", "3", "--x", "3", "--normalization", "greene",
    ]);
    assert!(first_line(&o).ends_with(" / 7"), "{}", stdout(&o));
}

#[test]
fn sampled_verify_counts_exactly() {
    let o = ffhyper(&[
        "verify", "--id", "t2.1", "--q", "11", "--n", "1", "--mode", "sampled", "--count", "500", "--seed", "42",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "ffhyper/1");
    let r = &v["reports"][0];
    assert_eq!(r["tested"], 500);
    assert_eq!(r["failed"], 0);
    assert_eq!(r["seed"], 42);
    assert!(r["ms"].is_null());
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = [
        "verify", "--id", "t5.gf2,t4.pfaff", "--q", "7,8", "--mode", "sampled", "--count", "50", "--seed", "9",
    ];
    let (a, b) = (ffhyper(&args), ffhyper(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = ffhyper(&["verify", "--id", "binom.sym", "--q", "3^1,4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn errata_fail_with_replayable_counterexample() {
    let o = ffhyper(&["verify", "--id", "t5.gf1.printed", "--q", "5", "--n", "1", "--failure-limit", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &v["reports"][0];
    assert_eq!(r["failures_truncated"], true);
    let replay = r["failures"][0]["replay"].as_str().unwrap();
    let args: Vec<&str> = replay.split_whitespace().skip(1).collect();
    let again = ffhyper(&args);
    assert_eq!(again.status.code(), Some(1));
    assert!(stdout(&again).contains("equal    false"));
}

#[test]
fn replay_of_a_true_identity() {
    let o = ffhyper(&["replay", "--id", "binom.eps", "--q", "7", "--chars", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("equal    true"));
}

#[test]
fn all_respects_n_filter() {
    let o = ffhyper(&["verify", "--id", "all", "--q", "3", "--n", "3", "--format", "text"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("t3.ff-beta q=3 n=3"));
    assert!(!text.contains("t5.gf3"));
    assert!(!text.contains(" n=1 "));
}

#[test]
fn list_includes_registry_and_errata() {
    let o = ffhyper(&["list", "--format", "json", "--errata"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|d| d["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"t2.1"));
    assert!(ids.contains(&"t5.gf3.printed"));
}

#[test]
fn exit_codes() {
    assert_eq!(ffhyper(&["verify", "--id", "bogus"]).status.code(), Some(2));
    assert!(String::from_utf8_lossy(&ffhyper(&["verify", "--id", "bogus"]).stderr).contains("unknown identity"));
    assert_eq!(ffhyper(&["eval", "jacobi", "--q", "5"]).status.code(), Some(2));
    assert_eq!(ffhyper(&["eval", "jacobi", "--q", "6", "--chi", "1", "--lam", "1"]).status.code(), Some(3));
    assert_eq!(ffhyper(&["eval", "jacobi", "--q", "5", "--chi", "4", "--lam", "1"]).status.code(), Some(3));
    assert_eq!(ffhyper(&["eval", "fd", "--q", "5", "--A", "1", "--C", "1", "--B", "1", "--x", "9"]).status.code(), Some(3));
    let genfn = ["eval", "genfn", "--q", "7", "--A", "1", "--B", "2", "--C", "3", "--x", "2", "--t", "1"];
    assert_eq!(ffhyper(&[&genfn[..], &["--variant", "t42"]].concat()).status.code(), Some(3));
    assert_eq!(
        ffhyper(&["verify", "--id", "t2.1", "--q", "5", "--n", "3", "--cap", "10"]).status.code(),
        Some(2)
    );
}

#[test]
fn max_q_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ffhyper"))
        .args(["eval", "binom", "--q", "7", "--A", "0", "--B", "0"])
        .env("FFHYPER_MAX_Q", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = ffhyper(&["--max-q", "16384", "eval", "jacobi", "--q", "8192", "--chi", "0", "--lam", "0"]);
    assert_eq!(first_line(&o), "8190");
}

#[test]
fn classical_checks_pass() {
    for args in [
        &["classical", "integral"][..],
        &["classical", "integral", "--n", "3"],
        &["classical", "ksum", "--xn", "0"],
        &["classical", "ksum", "--n", "3"],
        &["classical", "mr", "--a", "1.3", "--b", "0.5,0.6,0.7", "--x", "0.1,-0.2,0.3"],
    ] {
        let o = ffhyper(args);
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"));
    }
    assert_eq!(ffhyper(&["classical", "integral", "--n", "1"]).status.code(), Some(3));
    assert_eq!(ffhyper(&["classical", "ksum", "--x", "0.5,1.2"]).status.code(), Some(3));
}
