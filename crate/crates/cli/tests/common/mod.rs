//! Runs the golden cases in `tests/golden`: each `<name>.args` (one argument
//! per line) is executed with optional `<name>.stdin` and `<name>.env`, and
//! checked against `<name>.stdout`, `<name>.stderr` and `<name>.code`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run_case(dir: &Path, name: &str) -> Outcome {
    let args: Vec<String> = fs::read_to_string(dir.join(format!("{name}.args")))
        .unwrap()
        .lines()
        .filter(|l| !l.is_empty())
        .map(str::to_owned)
        .collect();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rotaxis"));
    cmd.args(&args).env_remove("AXIS_TOL").stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    if let Ok(env) = fs::read_to_string(dir.join(format!("{name}.env"))) {
        for line in env.lines().filter(|l| !l.is_empty()) {
            let (k, v) = line.split_once('=').unwrap();
            cmd.env(k, v);
        }
    }
    let mut child = cmd.spawn().unwrap();
    let input = fs::read(dir.join(format!("{name}.stdin"))).unwrap_or_default();
    child.stdin.take().unwrap().write_all(&input).unwrap();
    let out = child.wait_with_output().unwrap();
    Outcome {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

pub fn cases(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "args").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
}

/// Mismatches between a fresh run and the stored expectations; with
/// `update`, the expectations are rewritten instead.
pub fn compare_case(dir: &Path, name: &str, update: bool) -> Vec<String> {
    let got = run_case(dir, name);
    let files = [
        (format!("{name}.stdout"), got.stdout),
        (format!("{name}.stderr"), got.stderr),
        (format!("{name}.code"), format!("{}\n", got.code)),
    ];
    let mut failures = Vec::new();
    for (file, actual) in files {
        let path = dir.join(&file);
        if update {
            fs::write(&path, &actual).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            Ok(expected) => failures.push(format!("{file}:\n--- expected\n{expected}--- actual\n{actual}")),
            Err(_) => failures.push(format!("missing {file}")),
        }
    }
    failures
}

/// Exit codes recorded across all cases, sorted and deduplicated.
pub fn recorded_exit_codes(dir: &Path) -> Vec<i32> {
    let mut seen: Vec<i32> = cases(dir)
        .iter()
        .filter_map(|n| fs::read_to_string(dir.join(format!("{n}.code"))).ok())
        .map(|c| c.trim().parse().unwrap())
        .collect();
    seen.sort();
    seen.dedup();
    seen
}
