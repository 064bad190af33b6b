//! Command-line regression surface: golden reports, determinism and exit
//! codes. Set `UPDATE_GOLDEN=1` to rewrite the golden files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("prime_char_2_2_d2", &["prime-char", "--p", "2", "--m", "2", "--d", "2"]),
    ("prime_char_3_1", &["prime-char", "--p", "3", "--m", "1"]),
    ("number_field_gaussian", &["number-field", "--disc", "-1", "--p", "3"]),
    ("number_field_sqrt2", &["number-field", "--disc", "2", "--p", "5"]),
    ("number_field_sqrt_minus5", &["number-field", "--disc", "-5"]),
    ("number_field_poly", &["number-field", "--poly", "1,1,1", "--q", "7", "--subgroup", "1"]),
    ("tame_check_triangle", &["tame-check", "--set", "tests/golden/inputs/triangle.json", "--m", "3"]),
    ("tame_check_hexagon", &["tame-check", "--set", "tests/golden/inputs/hexagon.json", "--m", "2"]),
    ("bounds_6_2_3", &["bounds", "--n", "6", "--s", "2", "--c", "3"]),
    (
        "conv_check_units",
        &[
            "conv-check",
            "--sub",
            "tests/golden/inputs/units.json",
            "--set",
            "tests/golden/inputs/triangle.json",
            "--t",
            "2",
        ],
    ),
    ("lattice_cycle3", &["lattice", "--action", "tests/golden/inputs/cycle3.json", "--character", "1,0,0"]),
];

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the real binary from the crate directory.
fn run_bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sigmatame"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_report(args: &[&str]) -> String {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--json", "-"]);
    let (code, stdout, stderr) = run_bin(&full);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    // The summary precedes the report, which starts at the first '{' line.
    let start = stdout.find("\n{\n").map(|i| i + 1).unwrap_or(0);
    stdout[start..].to_string()
}

#[test]
fn golden_reports() {
    let dir = crate_dir().join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in CASES {
        let report = json_report(args);
        serde_json::from_str::<serde_json::Value>(&report).unwrap_or_else(|e| panic!("{name}: {e}"));
        let path = dir.join(format!("{name}.json"));
        if update || !path.exists() {
            fs::write(&path, &report).unwrap();
        }
        let golden = fs::read_to_string(&path).unwrap();
        assert_eq!(report, golden, "{name} differs from {}", path.display());
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for (_, args) in CASES {
        assert_eq!(json_report(args), json_report(args));
    }
}

#[test]
fn json_file_matches_stdout_report() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("out.json");
    let path_str = path.to_str().unwrap();
    let args = ["bounds", "--n", "6", "--s", "2", "--c", "3"];
    let mut with_file = args.to_vec();
    with_file.extend(["--json", path_str]);
    let (code, stdout, _) = run_bin(&with_file);
    assert_eq!(code, 0);
    assert!(stdout.contains("bredon: floor(6/2) = 3"));
    assert!(stdout.contains("nilpotent_conjecture: floor(6/(2*3)) = 1 (CONJECTURAL)"));
    let written = fs::read_to_string(&path).unwrap();
    let echoed = json_report(&args);
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("command");
        v
    };
    assert_eq!(strip(&written), strip(&echoed));
    let v: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["command"][0], "bounds");
    assert_eq!(v["values"][2]["status"], "CONJECTURAL");
}

#[test]
fn summaries_match_the_documented_examples() {
    let (_, out, _) = run_bin(CASES[0].1);
    assert!(out.contains("Sigma^c: 5 rays"));
    assert!(out.contains("tame degree 4"));
    assert!(out.contains("is of type FP_2") && out.contains("is not of type FP_3"));
    let (code, out, _) = run_bin(CASES[6].1);
    assert_eq!(code, 0);
    assert!(out.starts_with("not 3-tame\nwitness: "));
}

#[test]
fn exit_codes() {
    let missing = Path::new("tests/golden/inputs/no_such_file.json").to_str().unwrap();
    let invalid: &[&[&str]] = &[
        &["prime-char", "--p", "4", "--m", "1"],
        &["prime-char", "--p", "2", "--m", "0"],
        &["prime-char", "--p", "2", "--m", "2", "--d", "3"],
        &["number-field", "--poly", "-2,0,0,1"],
        &["number-field", "--poly", "-4,0,1"],
        &["number-field", "--disc", "-1", "--q", "3"],
        &["number-field", "--disc", "-1", "--p", "5", "--q", "5"],
        &["number-field"],
        &["bounds", "--n", "0", "--s", "1"],
        &["tame-check", "--set", missing, "--m", "2"],
        &["lattice", "--action", "tests/golden/inputs/cycle3.json", "--group-cap", "2"],
        &["no-such-command"],
        &["bounds", "--n", "x", "--s", "1"],
    ];
    for args in invalid {
        let (code, _, stderr) = run_bin(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
        assert!(!stderr.is_empty());
    }
    let (code, _, stderr) = run_bin(&["number-field", "--disc", "94", "--q", "3", "--principal-cap", "10"]);
    assert_eq!(code, 3, "{stderr}");
    assert_eq!(run_bin(&["--help"]).0, 0);
    assert_eq!(run_bin(&["--version"]).0, 0);
}
