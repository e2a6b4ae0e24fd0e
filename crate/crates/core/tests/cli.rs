use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use forge::cli::build::TARGETS;
use forge::cli::export::{fixture_json, FIXTURE_NAMES};
use forge::cli::manifest::{Manifest, Model};
use forge::cli::report::ANCHORS;

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn forge(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_forge"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("FORGE_THREADS", t),
        None => cmd.env_remove("FORGE_THREADS"),
    };
    cmd.output().expect("forge runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn shipped_fixtures_match_the_generator() {
    for name in FIXTURE_NAMES {
        let shipped = std::fs::read_to_string(fixtures_dir().join(format!("{name}.json"))).unwrap();
        assert_eq!(shipped, fixture_json(name).unwrap(), "fixtures/{name}.json is stale");
        let out = forge(&["fixtures", name], None);
        assert!(out.status.success());
        assert_eq!(stdout(&out), shipped);
    }
}

#[test]
fn fixtures_follow_the_schema() {
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(fixtures_dir().join("manifest.schema.json")).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for name in FIXTURE_NAMES {
        let doc: serde_json::Value = serde_json::from_str(&fixture_json(name).unwrap()).unwrap();
        assert!(validator.is_valid(&doc), "{name}");
    }
    let bad = serde_json::json!({ "version": 1, "algebras": [{ "name": "a", "basis": ["x"], "form": [{ "index": ["x", "x"], "value": "0.5" }] }] });
    assert!(!validator.is_valid(&bad));
}

#[test]
fn manifests_round_trip() {
    for name in FIXTURE_NAMES {
        let text = fixture_json(name).unwrap();
        let doc = Manifest::from_json(&text).unwrap();
        assert_eq!(Model::from_manifest(&doc).unwrap().to_manifest().to_json(), text, "{name}");
    }
}

#[test]
fn verify_passes_on_good_fixtures_with_anchored_lines() {
    for name in ["abelian", "axb", "sl2"] {
        let path = fixtures_dir().join(format!("{name}.json"));
        let out = forge(&["verify", path.to_str().unwrap(), "--profile", "small"], None);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
        let text = stdout(&out);
        assert!(!text.is_empty());
        for line in text.lines() {
            assert!(line.starts_with("PASS ["), "{line}");
            let anchor = &line[6..line.find(']').unwrap()];
            assert!(ANCHORS.contains(&anchor), "{line}");
        }
    }
}

#[test]
fn broken_jacobi_exits_one_and_names_the_identity() {
    let path = fixtures_dir().join("broken-jacobi.json");
    let out = forge(&["verify", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL [subsec-Lie-bialgebras] jacobi sl2_broken: Jacobi identity"));
}

#[test]
fn input_errors_exit_two() {
    let sl2 = fixtures_dir().join("sl2.json");
    let sl2 = sl2.to_str().unwrap();
    assert_eq!(forge(&["verify", "no/such/file.json"], None).status.code(), Some(2));
    assert_eq!(forge(&["verify", sl2, "--suite", "nonsense"], None).status.code(), Some(2));
    assert_eq!(forge(&["verify", sl2, "--profile", "huge"], None).status.code(), Some(2));
    assert_eq!(forge(&["verify", sl2], Some("zero")).status.code(), Some(2));
    assert_eq!(forge(&["fixtures", "nope"], None).status.code(), Some(2));
    assert_eq!(forge(&["build", "nope"], None).status.code(), Some(2));
    assert_eq!(forge(&["frobnicate"], None).status.code(), Some(2));

    let bad = scratch("bad-rational.json");
    std::fs::write(&bad, fixture_json("sl2").unwrap().replacen("\"2\"", "\"2/0\"", 1)).unwrap();
    let out = forge(&["verify", bad.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero denominator"));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let path = fixtures_dir().join("sl2.json");
    let path = path.to_str().unwrap();
    let one = forge(&["verify", path, "--profile", "small"], Some("1"));
    let four = forge(&["verify", path, "--profile", "small"], Some("4"));
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn json_report_matches_text() {
    let path = fixtures_dir().join("axb.json");
    let report = scratch("axb-report.json");
    let out = forge(&["verify", path.to_str().unwrap(), "--suite", "cybe", "--suite", "double", "--report", report.to_str().unwrap()], None);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let checks = json["checks"].as_array().unwrap();
    assert_eq!(checks.len(), stdout(&out).lines().count());
    assert_eq!(json["failed"], 0);
    assert_eq!(json["suites"], serde_json::json!(["cybe", "double"]));
    assert!(checks.iter().all(|c| c["suite"] == "cybe" || c["suite"] == "double"));
}

#[test]
fn every_build_target_produces_a_loadable_manifest() {
    for target in TARGETS {
        let n = if target == "r-angle" { "3" } else { "2" };
        let out = forge(&["build", target, "--n", n], None);
        assert!(out.status.success(), "{target}: {}", String::from_utf8_lossy(&out.stderr));
        let model = Model::from_manifest(&Manifest::from_json(&stdout(&out)).unwrap()).unwrap();
        assert!(!model.algebras.is_empty(), "{target}");
    }
}

#[test]
fn built_structures_verify() {
    for (target, suites) in [("rn", &["jacobi", "cybe"][..]), ("double", &["jacobi", "cocycle", "cybe"]), ("mixed-bivector", &["fields"]), ("fusion", &["fields"]), ("quasi", &["fields"])] {
        let path = scratch(&format!("built-{target}.json"));
        let out = forge(&["build", target, "--n", "2", "--out", path.to_str().unwrap()], None);
        assert!(out.status.success(), "{target}");
        let mut args = vec!["verify", path.to_str().unwrap(), "--profile", "small"];
        for s in suites {
            args.extend(["--suite", s]);
        }
        let out = forge(&args, None);
        assert_eq!(out.status.code(), Some(0), "{target}: {}", stdout(&out));
    }
}

#[test]
fn build_rejects_small_n() {
    assert_eq!(forge(&["build", "r-angle", "--n", "2"], None).status.code(), Some(2));
    assert_eq!(forge(&["build", "rn", "--n", "1"], None).status.code(), Some(2));
}
