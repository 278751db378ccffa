use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_audioactive"))
        .args(args)
        .env_remove("AUDIOACTIVE_GOLDEN")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

#[test]
fn derive_chains() {
    let o = run(&["derive", "55555", "-n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "55\n25\n1215\n");
    assert_eq!(stdout(&run(&["derive", "22", "--steps", "5"])), "22\n".repeat(5));
    assert_eq!(stdout(&run(&["derive", "2222222222", "-n", "1"])), "[10]2\n");
    assert_eq!(run(&["derive", "12a"]).status.code(), Some(1));
}

#[test]
fn audio_matches_derive() {
    let o = run(&["audio", "1", "-n", "5"]);
    assert_eq!(stdout(&o), "11\n21\n1211\n111221\n312211\n");
    assert_eq!(run(&["audio", "1111"]).status.code(), Some(1));
}

#[test]
fn splitting_queries() {
    assert_eq!(stdout(&run(&["split", "3*2212"])), "valid splitting\n");
    assert_eq!(stdout(&run(&["split", "3◊2212"])), "valid splitting\n");
    assert_eq!(stdout(&run(&["split", "3*133"])), "not a splitting (fails at depth 9)\n");
    assert_eq!(stdout(&run(&["split", "11*11"])), "not a splitting (not a day-one word)\n");
    assert_eq!(run(&["split", "3*1*2"]).status.code(), Some(1));
}

#[test]
fn factorization() {
    assert_eq!(stdout(&run(&["factorize", "32211"])), "32211 (atom)\n");
    assert_eq!(stdout(&run(&["factorize", "3113"])), "3113 = Ac\n");
    let both = [run(&["factorize", "32213"]), run(&["factorize", "32213", "--depth", "30"])];
    for o in &both {
        assert!(stdout(o).starts_with("32213 = 3 · 22 · 13\n"));
    }
    assert_eq!(run(&["factorize", "1111"]).status.code(), Some(1));
}

#[test]
fn elements_and_growth() {
    let o = stdout(&run(&["elements"]));
    assert_eq!(o.lines().count(), 94);
    assert!(o.lines().any(|l| l.contains("He") && l.ends_with("Hf Pa H Ca Li")));
    let csv = stdout(&run(&["elements", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 95);
    let g = stdout(&run(&["growth"]));
    assert!(g.starts_with("lambda = 1.3035"), "{g}");
    let j: serde_json::Value = serde_json::from_str(&stdout(&run(&["growth", "--format", "json"]))).unwrap();
    assert!(j["residual"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn export_formats() {
    let o = stdout(&run(&["export", "audio", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!(v["num_states"], 28);
    let c2: serde_json::Value = serde_json::from_str(&stdout(&run(&["export", "counter2", "--format", "json"]))).unwrap();
    assert_eq!(c2["num_states"], 6);
    let dot = stdout(&run(&["export", "splitting", "--format", "dot"]));
    assert_eq!(dot.lines().filter(|l| l.trim_start().starts_with('q') && l.contains("shape=")).count(), 21);
    assert_eq!(run(&["export", "audio", "--format", "csv"]).status.code(), Some(1));
    assert_eq!(run(&["export", "nosuch"]).status.code(), Some(1));
}

#[test]
fn export_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("audio.json");
    let text = stdout(&run(&["export", "audio+", "--format", "json"]));
    std::fs::write(&path, &text).unwrap();
    let back = audioactive_json(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(back, text);
}

fn audioactive_json(text: &str) -> String {
    let t = audioactive::fst::io::from_json(text).unwrap();
    audioactive::fst::io::to_json(&t)
}

#[test]
fn prove_splitting_passes() {
    let o = run(&["prove", "splitting"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("fixed point n=9"));
}

#[test]
fn prove_cosmological_passes_and_checks_bounds() {
    let o = run(&["prove", "cosmological"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("E stabilizes at n=24 with 94 elements"));
    let o = run(&["prove", "cosmological", "--max-n", "20"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("no fixed point within bound"));
}

#[test]
fn prove_against_golden_files() {
    let golden = golden_dir();
    let o = run(&["prove", "splitting", "--golden", golden.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_audioactive"))
        .args(["prove", "cosmological", "--format", "json"])
        .env("AUDIOACTIVE_GOLDEN", &golden)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"]["passed"], true);
    assert_eq!(v["fixed_point_n"], 24);

    let tampered = tempfile::tempdir().unwrap();
    let mut report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden.join("splitting.json")).unwrap()).unwrap();
    report["sizes"][0] = 14.into();
    std::fs::write(tampered.path().join("splitting.json"), report.to_string()).unwrap();
    let o = run(&["prove", "splitting", "--golden", tampered.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let empty = tempfile::tempdir().unwrap();
    assert_eq!(run(&["prove", "splitting", "--golden", empty.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_table_and_audit() {
    let o = run(&["verify-table"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("94 elements enumerated, table verified"));
    let o = run(&["audit-audio-src", "-n", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,states\n1,10\n2,35\n3,85\n");
    assert_eq!(run(&["audit-audio-src", "-n", "12", "--limit-states", "100"]).status.code(), Some(3));
    assert_eq!(run(&["audit-audio-src", "-n", "0"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["prove", "lemma"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
