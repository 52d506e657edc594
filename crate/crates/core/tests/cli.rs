use std::path::{Path, PathBuf};
use std::process::Command as Process;

use quadtex::app::{
    basis_cap_from_env, run, AnalyzeReport, Command, Format, KappaChoice, KappaReport, RunConfig, SubshiftReport,
    VerifyReport, WangTile,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn config(file: &str, command: Command) -> RunConfig {
    RunConfig::new(data(file), command)
}

fn json(mut c: RunConfig) -> (i32, String) {
    c.format = Format::Json;
    let out = run(&c);
    (out.exit_code, out.stdout)
}

fn roundtrip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let value: T = serde_json::from_str(text).unwrap();
    let mut again = serde_json::to_string_pretty(&value).unwrap();
    again.push('\n');
    assert_eq!(again, text, "re-serialized report differs");
    value
}

#[test]
fn analyze_t1() {
    let out = run(&config("t1.json", Command::Analyze));
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.contains("K0 = Z/8Z, K1 = 0"));
    let (code, text) = json(config("t1.json", Command::Analyze));
    assert_eq!(code, 0);
    let r: AnalyzeReport = roundtrip(&text);
    assert_eq!(r.n, 6);
    assert_eq!(r.k0.torsion, ["8"]);
    assert_eq!(r.k1.free_rank, 0);
    assert_eq!(r.cross_check, "ok");
    assert_eq!(r.h_kappa.len(), 12);
}

#[test]
fn analyze_t2_lex() {
    let (code, text) = json(config("t2.json", Command::Analyze));
    assert_eq!(code, 0);
    let r: AnalyzeReport = roundtrip(&text);
    assert_eq!(r.n, 3);
    assert_eq!(r.groups, "K0 = Z/5Z, K1 = 0");
    assert!(r.structure.irreducible);
}

#[test]
fn text_and_json_agree() {
    let text = run(&config("t2.json", Command::Analyze)).stdout;
    let r: AnalyzeReport = serde_json::from_str(&json(config("t2.json", Command::Analyze)).1).unwrap();
    assert!(text.contains(&format!("n = {}", r.n)));
    assert!(text.contains(&r.groups));
    for p in &r.omega {
        assert!(text.contains(p.as_str()));
    }
    for row in &r.h_kappa {
        let line = row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        assert!(text.contains(&line));
    }
    assert!(text.contains(&format!("irreducible = {}", r.structure.irreducible)));
    assert!(text.contains(&format!("condition (I) (matrix level) = {}", r.structure.condition_i)));
    assert!(text.contains(&format!("essential = {}", r.essentiality.essential)));

    let text = run(&config("t1.json", Command::Verify)).stdout;
    let v: VerifyReport = serde_json::from_str(&json(config("t1.json", Command::Verify)).1).unwrap();
    for e in &v.identities {
        assert!(text.contains(&e.identity_id), "{}", e.identity_id);
        assert!(text.contains(&e.paper_ref));
    }
    assert!(text.contains(&format!(
        "passed {}, failed {}, skipped {}",
        v.passed, v.failed, v.skipped
    )));
}

#[test]
fn verify_exit_codes() {
    let (code, text) = json(config("t1.json", Command::Verify));
    assert_eq!(code, 0);
    let r: VerifyReport = roundtrip(&text);
    assert_eq!((r.failed, r.skipped), (0, 0));
    assert!(r.passed > 40);

    let mut c = config("t0.json", Command::Verify);
    c.level = 3;
    let (code, text) = json(c);
    assert_eq!(code, 2);
    let r: VerifyReport = roundtrip(&text);
    assert!(r.skipped > 0);
    let skipped: Vec<_> = r.identities.iter().filter(|e| e.notice.is_some()).collect();
    assert!(skipped
        .iter()
        .all(|e| e.notice.as_ref().unwrap().contains("truncation too shallow")));

    let mut c = config("t2.json", Command::Verify);
    c.level = 5;
    c.kappa = Some(KappaChoice::Lex);
    assert_eq!(run(&c).exit_code, 0);
}

#[test]
fn kappa_listing() {
    let out = run(&config("t1.json", Command::Kappa));
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.starts_with("720 specifications\n"));
    let mut c = config("t2.json", Command::Kappa);
    c.limit = 100;
    let r: KappaReport = roundtrip(&json(c).1);
    assert_eq!(r.specifications, "2");
    assert_eq!(r.listed, 2);
}

#[test]
fn tiles_and_wang_output() {
    let out = run(&config("t0.json", Command::Tiles));
    assert!(out.stdout.starts_with("1 tiles\n"));
    let mut c = config("t1.json", Command::Tiles);
    c.emit_wang = true;
    let out = run(&c);
    let tiles: Vec<WangTile> = roundtrip(&out.stdout);
    assert_eq!(tiles.len(), 6);
    assert!(tiles
        .iter()
        .all(|t| t.vertex == 1 && t.top.starts_with("A:") && t.left.starts_with("B:")));
}

#[test]
fn subshift_counts() {
    let mut c = config("t1.json", Command::Subshift);
    c.rows = 1;
    c.cols = 2;
    c.limit = 100;
    let r: SubshiftReport = roundtrip(&json(c.clone()).1);
    assert_eq!(r.count, "12");
    assert_eq!(r.listed, 12);
    assert!(run(&c).stdout.starts_with("12 rectangles of shape 1x2"));
    c.rows = 2;
    c.cols = 1;
    let r: SubshiftReport = roundtrip(&json(c.clone()).1);
    assert_eq!(r.count, "18");
    c.rows = 1;
    c.cols = 6;
    c.pattern_cap = 10;
    assert_eq!(run(&c).exit_code, 2);
}

#[test]
fn validation_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("quadtex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("noncommuting.json");
    std::fs::write(&bad, r#"{"A": [[1, 1], [0, 1]], "B": [[1, 0], [1, 1]]}"#).unwrap();
    let out = run(&RunConfig::new(&bad, Command::Analyze));
    assert_eq!(out.exit_code, 2);
    assert!(out.stderr.contains("do not commute"));

    let out = run(&RunConfig::new(dir.join("missing.json"), Command::Analyze));
    assert_eq!(out.exit_code, 2);

    let mut c = config("t2.json", Command::Analyze);
    c.kappa = Some(KappaChoice::Exchange);
    assert_eq!(run(&c).exit_code, 2);
    c.kappa = Some(KappaChoice::Explicit);
    assert_eq!(run(&c).exit_code, 2);

    let mut c = config("t1.json", Command::Verify);
    c.basis_cap = 5;
    assert_eq!(run(&c).exit_code, 2);
    c.level = 0;
    assert_eq!(run(&c).exit_code, 2);

    assert_eq!(basis_cap_from_env(Some("12")).unwrap(), Some(12));
    assert!(basis_cap_from_env(Some("zero")).is_err());
    assert!(basis_cap_from_env(Some("0")).is_err());
}

#[test]
fn binary_front_end() {
    let bin = env!("CARGO_BIN_EXE_quadtex");
    let out = Process::new(bin)
        .args(["analyze"])
        .arg(data("t1.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("K0 = Z/8Z, K1 = 0"));

    let out = Process::new(bin)
        .args(["subshift", "--rows", "1", "--cols", "2", "--format", "json"])
        .arg(data("t1.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r: SubshiftReport = roundtrip(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(r.count, "12");

    let out = Process::new(bin)
        .args(["verify", "--level", "3"])
        .arg(data("t0.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("skipped"));

    let out = Process::new(bin)
        .args(["verify"])
        .arg(data("t1.json"))
        .env("QUADTEX_BASIS_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("above the cap of 5"));

    let out = Process::new(bin)
        .args(["tiles", "--emit", "wang"])
        .arg(data("t0.json"))
        .output()
        .unwrap();
    let tiles: Vec<WangTile> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(tiles.len(), 1);
}
