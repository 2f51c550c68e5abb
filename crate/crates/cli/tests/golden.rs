use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("mon_package.json", &["package", "--input", "mon_example.json"]),
    ("mon_package.txt", &["package", "--input", "mon_example.json", "--format", "text"]),
    ("mon_package.tex", &["package", "--input", "mon_example.json", "--format", "latex"]),
    ("mon_ratpow.json", &["ratpow", "--w", "3/2", "--generators", "--input", "mon_example.json"]),
    ("mon_member.json", &["ratpow", "--w", "3/2", "--point", "4,4", "--input", "mon_example.json"]),
    ("det_package.txt", &["package", "--input", "det_example.json", "--format", "text"]),
    ("det_symbolic.json", &["ratpow", "--w", "2", "--symbolic", "--input", "det_example.json"]),
    ("det_ratpow.txt", &["ratpow", "--w", "3/2", "--input", "det_example.json", "--format", "text"]),
    ("hankel_package.json", &["package", "--input", "hankel.json"]),
    ("reeses_join.txt", &["join", "--input", "reeses.json", "--format", "text"]),
    ("reeses_join.tex", &["join", "--input", "reeses.json", "--format", "latex"]),
    ("reeses_star.json", &["star", "--input", "reeses_star.json"]),
    ("cool_sum.json", &["sum-check", "--w", "3/2", "--input", "cool.json"]),
    ("cool_sum.txt", &["sum-check", "--w", "3/2", "--input", "cool.json", "--format", "text"]),
    ("powers_sandwich.json", &["sandwich", "--w", "2", "--input", "powers.json"]),
    ("counterexample_1.json", &["counterexample", "--n", "1"]),
    ("counterexample_3.txt", &["counterexample", "--n", "3", "--format", "text"]),
    ("resurgence.tex", &["resurgence", "--m", "5", "--t", "3", "--format", "latex"]),
];

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_reeskit")).args(args).current_dir(dir()).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (name, args) in CASES {
        let got = run(args);
        let path = dir().join("expected").join(name);
        if update {
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(&path, &got).unwrap();
            continue;
        }
        let want = fs::read_to_string(&path).unwrap_or_default();
        if got != want {
            stale.push(format!("{name}:\n--- expected\n{want}--- got\n{got}"));
        }
    }
    assert!(stale.is_empty(), "{}", stale.join("\n"));
}

#[test]
fn output_is_reproducible() {
    for args in [&["package", "--seed", "11"][..], &["sum-check", "--w", "5/3", "--seed", "4"]] {
        assert_eq!(run(args), run(args));
    }
}
