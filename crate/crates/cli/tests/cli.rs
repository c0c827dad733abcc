use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiinf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn machine_lines(text: &str, keys: &[&str]) -> Vec<String> {
    text.lines().filter(|l| keys.iter().any(|k| l.starts_with(k))).map(str::to_string).collect()
}

#[test]
fn bgg_example_passes() {
    let o = run(&["bgg", "--type", "A1", "--lambda", "Λ0", "--N", "8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("EULER bgg 1,0 8 PASS\n"));
    assert!(text.ends_with("RESULT PASS\n"));
}

#[test]
fn clifford_example_passes() {
    let o = run(&["clifford", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "SUITE clifford\nGENERATORS 3\nDIM 64\nCHECK clifford_dimension PASS\nCHECK clifford_associativity PASS\n\
         CHECK clifford_matrix_units PASS\nCHECK clifford_ident PASS\nRESULT PASS\n"
    );
}

#[test]
fn weyl_maxlen_zero_lists_identity_only() {
    let o = run(&["weyl", "--type", "A1", "--maxlen", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(machine_lines(&text, &["COUNT", "ELT"]), vec!["COUNT 1", "ELT e LEN 0 SILEN 0 PAIR (0 1; 0)"]);
}

#[test]
fn marks_golden_lines() {
    let expect = [
        ("A1", ["D 1", "COMARKS 1 1", "MARKS 1 1"]),
        ("A2", ["D 1", "COMARKS 1 1 1", "MARKS 1 1 1"]),
        ("C2", ["D 2", "COMARKS 1 1 1", "MARKS 1 2 1"]),
        ("G2", ["D 3", "COMARKS 1 1 2", "MARKS 1 3 2"]),
    ];
    for (t, lines) in expect {
        let o = run(&["marks", "--type", t]);
        assert!(o.status.success(), "{t}");
        assert_eq!(machine_lines(&stdout(&o), &["D ", "COMARKS", "MARKS"]), lines, "{t}");
    }
}

#[test]
fn suite_flag_and_matrix_file() {
    let dir = std::env::temp_dir().join(format!("semiinf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let m = dir.join("a1.txt");
    std::fs::write(&m, "2 -2\n-2 2\n").unwrap();
    let from_file = run(&["--suite", "marks", "--matrix-file", m.to_str().unwrap()]);
    let from_type = run(&["marks", "--type", "A1"]);
    assert!(from_file.status.success());
    let keys = ["D ", "SYMMETRIZER", "COMARKS", "MARKS", "CHECK"];
    assert_eq!(machine_lines(&stdout(&from_file), &keys), machine_lines(&stdout(&from_type), &keys));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn all_suites_pass_and_output_is_deterministic() {
    let a = run(&["all", "--N", "6"]);
    let b = run(&["all", "--N", "6"]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    for suite in ["marks", "weyl", "char", "bgg", "twisted-bgg", "si-window", "clifford", "semiregular"] {
        assert!(text.contains(&format!("SUITE {suite}\n")), "{suite}");
    }
    assert!(!text.contains(" FAIL"));
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("semiinf-out-{}.txt", std::process::id()));
    let o = run(&["semiregular", "--algebra", "sl2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, run(&["semiregular", "--algebra", "sl2"]).stdout);
}

#[test]
fn semiregular_reports_each_identity() {
    let o = run(&["semiregular"]);
    assert!(o.status.success());
    let checks = machine_lines(&stdout(&o), &["CHECK", "SKIP"]);
    assert_eq!(
        checks,
        vec![
            "CHECK validate PASS",
            "SKIP exp_action (n is not abelian)",
            "CHECK comult_phi PASS",
            "CHECK iterate_dimensions PASS",
            "CHECK iterate_action PASS",
            "CHECK dg_square_dual PASS",
            "CHECK dg_square_regular PASS",
            "CHECK dg_sigma PASS",
            "CHECK dg_eta_theta PASS",
            "CHECK koszul PASS",
        ]
    );
}

#[test]
fn failing_check_exits_nonzero_with_first_counterexample() {
    let path = std::env::temp_dir().join(format!("semiinf-alg-{}.txt", std::process::id()));
    std::fs::write(&path, "deg a : -1\ndeg b : -1\ndeg c : -1\nbracket a b : (c, 1)\nn : a b c\n").unwrap();
    let o = run(&["semiregular", "--algebra", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("RESULT FAIL\nFIRST_FAILURE validate FAIL"), "{text}");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["bgg", "--lambda", "L0-L1"],
        vec!["bgg", "--lambda", "-1,0"],
        vec!["marks", "--type", "X9"],
        vec!["frobnicate"],
        vec!["clifford", "--n", "0"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn rank_two_root_cone_statement_is_reported() {
    let o = run(&["weyl", "--type", "A2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("MAINCOMB_ROOT_CONE fails at"));
    assert!(text.contains("CHECK maincomb PASS"));
}

#[test]
fn algebra_file_matches_builtin() {
    let path = std::env::temp_dir().join(format!("semiinf-sl2-{}.txt", std::process::id()));
    std::fs::write(
        &path,
        "# sl2 with n spanned by f\ndeg e : 1\ndeg h : 0\ndeg f : -1\n\
         bracket e f : (h, 1)\nbracket h e : (e, 2)\nbracket h f : (f, -2)\nn : f\n",
    )
    .unwrap();
    let from_file = run(&["semiregular", "--algebra", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    let builtin = run(&["semiregular", "--algebra", "sl2"]);
    assert!(from_file.status.success());
    let keys = ["CHECK", "DIM_", "ITERATE", "FILTRATION"];
    assert_eq!(machine_lines(&stdout(&from_file), &keys), machine_lines(&stdout(&builtin), &keys));
}
