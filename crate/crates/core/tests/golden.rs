use std::fs;
use std::path::PathBuf;

use z2z2u::examples::{example_report, worked_examples};
use z2z2u::workbench::{run_verify, to_text, Settings};
use z2z2u::CodeSpec;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares against the stored file; `UPDATE_GOLDEN=1` rewrites it.
fn check(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from the stored report");
}

#[test]
fn example_reports_match_golden() {
    for ex in worked_examples() {
        let text = to_text(&example_report(&ex).unwrap()).unwrap();
        check(&format!("worked-{}-{}.txt", ex.alpha, ex.beta), &text);
    }
}

#[test]
fn example_spec_files_verify() {
    for (file, params) in [
        ("worked-2-3.spec", "[8,6,2]"),
        ("worked-2-3-case1.spec", "[8,5,2]"),
        ("worked-7-7.spec", "[21,6,8]"),
        ("worked-7-7-separable.spec", "[21,9,4]"),
    ] {
        let spec = CodeSpec::parse(&fs::read_to_string(golden(file)).unwrap()).unwrap();
        let r = run_verify(&spec, Settings::default()).unwrap();
        assert_eq!(r.gray_parameters.as_deref(), Some(params), "{file}");
        let stem = file.trim_end_matches(".spec");
        check(&format!("verify-{stem}.txt"), &to_text(&r).unwrap());
    }
}
