//! Golden command lines shared by the golden and acceptance targets.

use std::path::PathBuf;
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("validate_zxz", &["validate", "zxz"]),
    ("validate_taxicab", &["validate", "taxicab"]),
    ("validate_s3", &["validate", "s3"]),
    ("validate_z6", &["validate", "z6"]),
    ("validate_q8", &["validate", "q8"]),
    ("validate_cycle4", &["validate", "cycle4"]),
    ("validate_cycle5", &["validate", "cycle5"]),
    ("validate_broken_closure", &["validate", "broken_closure"]),
    ("validate_broken_closure_records", &["--format", "records", "validate", "broken_closure"]),
    ("axioms_zxz", &["axioms", "zxz"]),
    ("axioms_cycle4", &["axioms", "cycle4"]),
    ("axioms_cycle5", &["axioms", "cycle5"]),
    ("axioms_broken_closure", &["axioms", "broken_closure"]),
    ("reduce_strip", &["reduce", "zxz", "(0,1) (1,1) (1,0)", "--trace"]),
    ("reduce_identity_records", &["--format", "records", "reduce", "zxz", "(0,1) (1,0) (-1,-1)", "--trace"]),
    ("solve_letter", &["solve", "zxz", "(0,1)"]),
    ("solve_square_oracle", &["solve", "zxz", "(1,0) (0,1) (-1,0) (0,-1)", "--oracle"]),
    ("solve_cycle4_oracle", &["solve", "cycle4", "x1 x2", "--oracle", "--bound", "6"]),
    ("solve_bad_word", &["solve", "zxz", "(5,5)"]),
    ("geodesic_yes", &["geodesic", "zxz", "(1,1) (1,1) (0,1)"]),
    ("geodesic_no", &["geodesic", "zxz", "(0,1) (1,1) (1,0)"]),
    ("comb_zxz", &["comb", "zxz", "--enumerate", "3"]),
    ("comb_zxz_literal_records", &["--format", "records", "comb", "zxz", "--enumerate", "2", "--reading", "literal"]),
    ("comb_s3", &["comb", "s3"]),
    ("comb_q8", &["comb", "q8"]),
    ("ball_zxz", &["ball", "zxz", "-r", "2"]),
    ("ball_taxicab_records", &["--format", "records", "ball", "taxicab", "-r", "2"]),
    ("ball_z6", &["ball", "z6", "-r", "2"]),
    ("fellow_zxz", &["fellow", "zxz", "-r", "6", "-k", "5"]),
    ("fellow_zxz_geodesic", &["fellow", "zxz", "-r", "5", "-k", "5", "--language", "geodesic"]),
    ("fellow_zxz_zero", &["--format", "records", "fellow", "zxz", "-r", "3", "-k", "0"]),
    ("diagram_strip", &["diagram", "zxz", "--boundary", "(0,1) (1,1) (1,0) (-1,-1) (-1,-1)"]),
    ("diagram_cancellation_records", &["--format", "records", "diagram", "zxz", "--boundary", "(1,1) (-1,-1)"]),
    ("diagram_nontrivial", &["diagram", "zxz", "--boundary", "(1,1) (0,1)"]),
    ("diagram_taxicab_commutator", &["diagram", "taxicab", "--boundary", "(1,0) (0,1) (-1,0) (0,-1)"]),
    ("export_geodesic_s3", &["export-fsa", "s3", "--which", "geodesic"]),
    ("export_combing_zxz", &["export-fsa", "zxz", "--which", "combing"]),
    ("export_pair_z6", &["export-fsa", "z6", "--which", "pair"]),
    ("verify_zxz", &["verify", "zxz"]),
    ("verify_zxz_records", &["--format", "records", "verify", "zxz"]),
    ("verify_taxicab", &["verify", "taxicab", "-r", "4"]),
    ("verify_s3", &["verify", "s3"]),
    ("verify_z6", &["verify", "z6"]),
    ("verify_q8", &["verify", "q8"]),
    ("verify_cycle4", &["verify", "cycle4"]),
    ("verify_cycle5", &["verify", "cycle5"]),
    ("verify_broken_closure", &["verify", "broken_closure"]),
    ("usage_error", &["reduce", "zxz"]),
];

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Fixture names expand to paths relative to the workspace root so the
/// recorded stderr does not depend on where the checkout lives.
pub fn run(args: &[&str]) -> String {
    let workspace = root().join("../..");
    let fixtures: Vec<String> = std::fs::read_dir(workspace.join("fixtures"))
        .unwrap()
        .map(|e| e.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    let args: Vec<String> = args
        .iter()
        .map(|a| {
            if fixtures.iter().any(|f| f == a) {
                format!("fixtures/{a}.pree")
            } else {
                a.to_string()
            }
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_prees"))
        .args(&args)
        .current_dir(&workspace)
        .output()
        .unwrap();
    format!(
        "$ prees {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// Fresh output of every case that differs from its recorded file.
#[allow(dead_code)]
pub fn golden_mismatches() -> Vec<String> {
    let dir = root().join("tests/golden");
    CASES
        .iter()
        .filter(|(name, args)| std::fs::read_to_string(dir.join(format!("{name}.txt"))).unwrap_or_default() != run(args))
        .map(|(name, _)| name.to_string())
        .collect()
}
