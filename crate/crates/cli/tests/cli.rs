//! Exit-code and artifact behavior of the `rotspec` binary. The heavy
//! `verify` path is covered by the core crate's acceptance suite; these
//! stay under a few seconds.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rotspec"))
}

fn temp_out(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rotspec_cli_{tag}_{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn rotation_set_small_period_passes() {
    let out = temp_out("rs");
    let result = bin()
        .args(["rotation-set", "--max-period", "3", "--out"])
        .arg(&out)
        .output()
        .expect("binary runs");
    assert_eq!(result.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&result.stderr));
    assert!(out.join("hull_3.csv").exists());
    assert!(out.join("hull_3.svg").exists());
    let csv = std::fs::read_to_string(out.join("hull_3.csv")).unwrap();
    assert!(csv.contains("winf,0,0"));
    assert!(csv.contains("w0,1,0"));
}

#[test]
fn spectrum_rejects_memory_below_lambda() {
    let result = bin().args(["spectrum", "--memory", "2"]).output().expect("binary runs");
    assert_eq!(result.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("memory below lambda+1"), "stderr: {stderr}");
}

#[test]
fn unknown_flag_exits_2() {
    let result = bin().args(["rotation-set", "--bogus"]).output().expect("binary runs");
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn uniqueness_small_case() {
    let out = temp_out("uni");
    let result = bin()
        .args(["uniqueness", "--k", "1", "--max-period", "6", "--out"])
        .arg(&out)
        .output()
        .expect("binary runs");
    assert_eq!(result.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&result.stderr));
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("1112"), "stdout: {stdout}");
}

#[test]
fn uniqueness_violating_precondition_exits_2() {
    let result = bin()
        .args(["uniqueness", "--k", "9", "--max-period", "6"])
        .output()
        .expect("binary runs");
    assert_eq!(result.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("k"), "stderr: {stderr}");
}

#[test]
fn gkr_rejects_tiny_sample_count() {
    let result = bin().args(["gkr", "--samples", "10"]).output().expect("binary runs");
    assert_eq!(result.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("samples"), "stderr: {stderr}");
}

#[test]
fn gkr_passes_with_default_samples() {
    let result = bin().args(["gkr"]).output().expect("binary runs");
    assert_eq!(result.status.code(), Some(0));
}

#[test]
fn malformed_param_file_exits_2() {
    let dir = temp_out("params");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.params");
    std::fs::write(&path, "nonsense = 1\n").unwrap();
    let result = bin()
        .args(["rotation-set", "--max-period", "3", "--params"])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(result.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("unknown key"), "stderr: {stderr}");
}

#[test]
fn custom_params_change_the_hull() {
    let dir = temp_out("custom");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wide.params");
    std::fs::write(&path, "a = 2\nC1 = 2\n").unwrap();
    let result = bin()
        .args(["rotation-set", "--max-period", "4", "--params"])
        .arg(&path)
        .arg("--out")
        .arg(dir.join("out"))
        .output()
        .expect("binary runs");
    assert_eq!(result.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&result.stderr));
    let csv = std::fs::read_to_string(dir.join("out/hull_4.csv")).unwrap();
    assert!(csv.contains("w0,2,0"), "csv: {csv}");
}

#[test]
fn env_var_sets_output_dir() {
    let out = temp_out("env");
    let result = bin()
        .args(["rotation-set", "--max-period", "3"])
        .env("ROTSPEC_OUT", &out)
        .output()
        .expect("binary runs");
    assert_eq!(result.status.code(), Some(0));
    assert!(out.join("hull_3.csv").exists());
}

#[test]
fn no_svg_suppresses_the_figure() {
    let out = temp_out("nosvg");
    let result = bin()
        .args(["rotation-set", "--max-period", "3", "--no-svg", "--out"])
        .arg(&out)
        .output()
        .expect("binary runs");
    assert_eq!(result.status.code(), Some(0));
    assert!(out.join("hull_3.csv").exists());
    assert!(!out.join("hull_3.svg").exists());
}

#[test]
fn verify_rejects_custom_params() {
    let dir = temp_out("verify_params");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("other.params");
    std::fs::write(&path, "a = 2\nC1 = 2\n").unwrap();
    let result = bin().args(["verify", "--params"]).arg(&path).output().expect("binary runs");
    assert_eq!(result.status.code(), Some(2));
}
