//! Golden-file tests for every subcommand. Set `UPDATE_GOLDEN=1` to rewrite
//! the expectations.

mod common;

use common::{cases, compare_case, golden_dir, recorded_exit_codes, run_case};

#[test]
fn golden_outputs() {
    let dir = golden_dir();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let failures: Vec<String> = cases(&dir).iter().flat_map(|n| compare_case(&dir, n, update)).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = golden_dir();
    for name in cases(&dir) {
        assert_eq!(run_case(&dir, &name), run_case(&dir, &name), "{name}");
    }
}

#[test]
fn every_exit_code_is_covered() {
    assert_eq!(recorded_exit_codes(&golden_dir()), vec![0, 1, 2, 3, 4]);
}
