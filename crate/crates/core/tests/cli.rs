use std::process::Command;

fn nilhecke(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nilhecke")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn rank2_tables_match_golden_files() {
    for ty in ["A2", "C2", "G2"] {
        let (code, out, _) = nilhecke(&["table-rank2", "--type", ty]);
        assert_eq!(code, 0);
        assert_eq!(out, golden(&format!("table-rank2-{ty}.txt")), "{ty}");
    }
}

#[test]
fn codim1_tables_match_golden_files() {
    for ty in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"] {
        let (code, out, _) = nilhecke(&["codim1", "--type", ty]);
        assert_eq!(code, 0);
        assert_eq!(out, golden(&format!("codim1-{ty}.txt")), "{ty}");
    }
}

#[test]
fn smooth_verdict_for_c2() {
    let (code, out, _) = nilhecke(&["smooth", "--type", "C2", "--w", "121", "--v", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "X_121 at 1: not smooth; rationally smooth; d=2; #S=3, l(w)=3\n");

    let (_, json, _) = nilhecke(&["smooth", "--type", "C2", "--w", "1,2,1", "--v", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["smooth"], false);
    assert_eq!(v["rationally_smooth"], true);
    assert_eq!(v["d"], "2");
    assert_eq!(v["s_size"], 3);
    assert_eq!(v["length"], 3);
}

#[test]
fn coeff_entry_as_json() {
    // 1 / (a1 (a1 + a2)): numerator 1, denominator a1 * (a1+a2).
    let (code, out, _) = nilhecke(&["coeff", "--type", "A2", "--w", "12", "--v", "12", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    let value = &v["entries"][0]["value"];
    assert_eq!(value["numerator"], serde_json::json!([["1", [0, 0]]]));
    assert_eq!(value["denominator"], serde_json::json!([[[1, 0], 1], [[1, 1], 1]]));

    let (_, text, _) = nilhecke(&["coeff", "--type", "A2", "--w", "12", "--v", "12"]);
    assert_eq!(text, "x_12 at 12: 1 / (a1)(a1+a2)\n");
}

#[test]
fn words_are_echoed_in_canonical_form() {
    let (_, out, _) = nilhecke(&["interval", "--type", "A3", "--w", "1,3", "--v", "e"]);
    assert_eq!(out, "e\n1\n3\n31\n");
}

#[test]
fn input_errors_exit_with_one_and_name_the_token() {
    let cases: [(&[&str], &str); 8] = [
        (&["smooth", "--type", "C2", "--w", "1", "--v", "2"], "2 is not below 1"),
        (&["smooth", "--type", "C2", "--w", "1x", "--v", "e"], "`x`"),
        (&["smooth", "--type", "Q7", "--w", "1", "--v", "e"], "`Q7`"),
        (&["coeff", "--type", "A2", "--w", "13"], "`3`"),
        (&["coeff", "--w", "1"], "--type"),
        (&["verify", "everything"], "`everything`"),
        (&["codim1", "--type", "A2", "--i", "3"], "`3`"),
        (&["frobnicate"], "frobnicate"),
    ];
    for (args, needle) in cases {
        let (code, out, err) = nilhecke(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn infinite_type_needs_explicit_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let gcm = dir.path().join("affine_a1.gcm");
    std::fs::write(&gcm, "2\n2 -2\n-2 2\n").unwrap();
    let gcm = gcm.to_str().unwrap();

    let (code, _, err) = nilhecke(&["codim1", "--gcm", gcm]);
    assert_eq!(code, 1);
    assert!(err.contains("finite type"), "{err}");

    let (code, _, err) = nilhecke(&["sset", "--gcm", gcm, "--w", "1212", "--v", "2", "--all-roots"]);
    assert_eq!(code, 1);
    assert!(err.contains("--max-length"), "{err}");

    let bounded = nilhecke(&["sset", "--gcm", gcm, "--w", "1212", "--v", "2", "--all-roots", "--max-length", "12"]);
    let by_interval = nilhecke(&["sset", "--gcm", gcm, "--w", "1212", "--v", "2"]);
    assert_eq!(bounded.0, 0);
    assert_eq!(bounded.1, by_interval.1);
}

#[test]
fn bad_gcm_file_cites_row_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let gcm = dir.path().join("bad.gcm");
    std::fs::write(&gcm, "2\n2 -1\n0 2\n").unwrap();
    let (code, _, err) = nilhecke(&["interval", "--gcm", gcm.to_str().unwrap(), "--w", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("row") && err.contains("column"), "{err}");
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    for args in [
        vec!["coeff", "--type", "B3", "--w", "32312321"],
        vec!["coeff", "--type", "G2", "--w", "121212", "--b", "--json"],
        vec!["singular-locus", "--type", "C3", "--w", "321232"],
    ] {
        let plain = nilhecke(&args);
        let mut cached = args.clone();
        cached.extend(["--cache-dir", cache]);
        let cold = nilhecke(&cached);
        let warm = nilhecke(&cached);
        assert_eq!(plain, cold, "{args:?}");
        assert_eq!(plain, warm, "{args:?}");
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn verify_suites_pass() {
    for suite in ["rank2", "bridge", "kacmoody"] {
        let (code, out, _) = nilhecke(&["verify", suite]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().last().unwrap().starts_with("PASS"));
    }
}
