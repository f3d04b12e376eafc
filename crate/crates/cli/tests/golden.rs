//! Byte-for-byte output checks. Run with `UPDATE_GOLDEN=1` to rewrite the
//! expected files after an intended change.

mod common;

use common::{root, run, CASES};

#[test]
fn golden_outputs() {
    let dir = root().join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let path = dir.join(format!("{name}.txt"));
        let actual = run(args);
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &actual).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if expected != actual {
            mismatches.push(format!("{name}:\n{actual}"));
        }
    }
    assert!(mismatches.is_empty(), "golden mismatches:\n{}", mismatches.join("\n"));
}

#[test]
fn every_fixture_is_exercised() {
    let fixtures = std::fs::read_dir(root().join("../../fixtures")).unwrap();
    for f in fixtures {
        let stem = f.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned();
        assert!(
            CASES.iter().any(|(_, args)| args.contains(&stem.as_str())),
            "{stem} has no golden case"
        );
    }
}

#[test]
fn output_is_deterministic() {
    for args in [&["verify", "zxz"][..], &["fellow", "zxz", "-r", "6", "-k", "5"]] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    let code = |args: &[&str]| run(args).lines().nth(1).unwrap().to_string();
    assert_eq!(code(&["verify", "zxz"]), "exit: 0");
    assert_eq!(code(&["solve", "zxz", "(0,1)"]), "exit: 1");
    assert_eq!(code(&["frobnicate"]), "exit: 2");
    assert_eq!(code(&["validate", "broken_closure"]), "exit: 3");
}
