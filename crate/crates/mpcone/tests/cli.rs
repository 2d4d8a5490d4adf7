use std::process::{Command, Output};

use mpcone::cache::{Cache, Lookup, CACHE_ENV};
use mpcone::config::RunConfig;
use mpcone::eval::{family_poly, Family};
use mpcone::polyjson::PolyJson;

fn mpcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpcone")).args(args).env_remove(CACHE_ENV).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_examples() {
    let o = mpcone(&["eval", "--family", "q", "--m", "2", "--nu", "3", "--point", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
    let o = mpcone(&["eval", "--family", "Q", "--rank", "2", "--d", "2", "--nu", "3", "--m", "1,0", "--point", "1,1"]);
    assert_eq!(stdout(&o), "-1\n");
    let o = mpcone(&["eval", "--family", "Phi", "--rank", "2", "--d", "2", "--m", "1,1", "--point", "1,1"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn eval_float_point_prints_decimal() {
    let o = mpcone(&["eval", "--family", "q", "--m", "2", "--nu", "3", "--point", "0.5"]);
    assert_eq!(stdout(&o), "2.0\n");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["eval", "--family", "Q", "--rank", "2", "--nu", "3", "--m", "1,1,1", "--point", "1,1"][..],
        &["eval", "--family", "q", "--m", "2", "--nu", "abc", "--point", "1"][..],
        &["eval", "--family", "Q", "--rank", "2", "--nu", "3", "--m", "1", "--point", "1"][..],
        &["verify", "--suite", "nonsense"][..],
        &["moments", "--rank", "1"][..],
        &["frobnicate"][..],
    ] {
        assert_eq!(mpcone(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn moments_examples() {
    let o = mpcone(&["moments", "--rank", "1", "--kappa", "3", "--m", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let e = &v["entries"][0];
    assert_eq!(e["formula"], "(-1)^|m| 2^-|m| (nu)_m");
    assert_eq!(e["exact"], "3");
    let o = mpcone(&["moments", "--rank", "1", "--chi", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["entries"][0]["quadrature"][0].as_f64(), Some(1.0));
}

#[test]
fn moments_f1_rank_two() {
    let o = mpcone(&["moments", "--rank", "2", "--d", "2", "--kappa", "3", "--f1", "--z", "0.5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["entries"][0]["error"].as_f64().unwrap() < 1e-6);
}

#[test]
fn tolerance_breach_exits_1() {
    let o = mpcone(&["moments", "--rank", "1", "--kappa", "3", "--m", "2", "--order", "2", "--radius", "3", "--max-doublings", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gue_examples() {
    let o = mpcone(&["gue", "--n", "4", "--m", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["estimate"].as_f64(), Some(1.0));
    let o = mpcone(&["gue", "--n", "1", "--m", "1", "--samples", "200000", "--seed", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["z_score"].as_f64().unwrap().abs() <= 3.0);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "univariate", "--max-m", "12", "--seed", "42", "--format", "json"];
    let a = mpcone(&args);
    let b = mpcone(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_determinantal_reports_orientation() {
    let o = mpcone(&["verify", "--suite", "determinantal", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n=2, nu=3: -1"));
}

#[test]
fn config_round_trip_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let o = mpcone(&["config", "--rank", "2", "--d", "5/2", "--nu", "-1/3", "--m", "2,1"]);
    let text = stdout(&o);
    std::fs::write(&path, &text).unwrap();
    let again = mpcone(&["--config", path.to_str().unwrap(), "config"]);
    assert_eq!(stdout(&again), text);
    let cfg = RunConfig::from_json(&text).unwrap();
    assert_eq!(cfg.rank, 2);
    assert_eq!(cfg.partition.to_string(), "(2,1)");
}

fn q_config() -> RunConfig {
    let mut cfg = RunConfig::default();
    cfg.rank = 2;
    cfg.nu = mpcone_core::rational::int(3);
    cfg.partition = "2,1".parse().unwrap();
    cfg
}

#[test]
fn cache_round_trip_and_hit() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let cfg = q_config();
    let (cold, l1) = family_poly(Family::Q, &cfg, &cache).unwrap();
    assert_eq!(l1, Lookup::Miss);
    let (warm, l2) = family_poly(Family::Q, &cfg, &cache).unwrap();
    assert_eq!(l2, Lookup::Hit);
    assert_eq!(cold, warm);
    let (plain, l3) = family_poly(Family::Q, &cfg, &Cache::disabled()).unwrap();
    assert_eq!(l3, Lookup::Disabled);
    assert_eq!(plain.to_json(), warm.to_json());
    let path = cache.path_for(&warm.provenance).unwrap();
    assert_eq!(std::fs::read_to_string(path).unwrap(), warm.to_json());
}

#[test]
fn cache_recovers_from_bad_entries() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let cfg = q_config();
    let (good, _) = family_poly(Family::Q, &cfg, &cache).unwrap();
    let path = cache.path_for(&good.provenance).unwrap();

    std::fs::write(&path, "{ not json").unwrap();
    let (j, l) = family_poly(Family::Q, &cfg, &cache).unwrap();
    assert_eq!(l, Lookup::Corrupt);
    assert_eq!(j, good);

    let mut old = good.clone();
    old.schema = 0;
    std::fs::write(&path, old.to_json()).unwrap();
    let (j, l) = family_poly(Family::Q, &cfg, &cache).unwrap();
    assert_eq!(l, Lookup::VersionMismatch);
    assert_eq!(j, good);
    assert_eq!(PolyJson::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap(), good);
}

#[test]
fn cli_output_same_with_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["eval", "--family", "L", "--rank", "2", "--d", "1", "--nu", "5/2", "--m", "2,1", "--point", "1/3,2"];
    let cold = mpcone(&args);
    let run = || Command::new(env!("CARGO_BIN_EXE_mpcone")).args(args).env(CACHE_ENV, dir.path()).output().unwrap();
    let first = run();
    let second = run();
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
