use std::process::{Command, Output};

fn ordgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordgap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ordgap(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn line(args: &[&str]) -> String {
    stdout(args).trim_end().to_string()
}

#[test]
fn compare_prints_the_relation() {
    assert_eq!(line(&["compare", "--system", "theta", "v0 0", "v0 v0 0"]), "<");
    assert_eq!(line(&["compare", "--system", "theta", "v1 0", "v0 0"]), ">");
    assert_eq!(line(&["compare", "--system", "cnf", "w + 1", "w + 1"]), "=");
    assert_eq!(line(&["compare", "--system", "pi", "D0(D1(0))", "D1(0)"]), "<");
    assert_eq!(line(&["compare", "--system", "veblen", "phi(1, 0)", "phi(0, phi(1, 0))"]), "<");
    assert_eq!(line(&["compare", "--system", "btheta", "th1(0, 0)", "th0(th1(0, 0), 0)"]), ">");
    assert_eq!(line(&["compare", "--system", "gapseq", "--mode", "weak", "1", "01"]), "<");
    assert_eq!(line(&["compare", "--system", "gapseq", "1", "01"]), "incomparable");
}

#[test]
fn translate_along_each_map() {
    assert_eq!(line(&["translate", "--map", "e", "v2 v1 0"]), "21");
    assert_eq!(line(&["translate", "--map", "chi", "phi(0, 0)"]), "v0 0");
    assert_eq!(line(&["translate", "--map", "chi-std", "w"]), "v0 v1 v0 v1 v0 0");
    assert_eq!(line(&["translate", "--map", "psi", "phi(D0(0), 0)"]), "v0 0");
    assert_eq!(line(&["translate", "--map", "psi-prime", "--n", "2", "v0 0"]), "v0 v1 0");
    assert_eq!(line(&["translate", "--map", "tau", "--n", "1", "v0 v0 0"]), "w + 1");
    assert_eq!(line(&["translate", "--map", "h", "--n", "3", "102"]), "(0, [1])");
    assert_eq!(line(&["translate", "--map", "f-embed", "210"]), "th2(0, th1(0, th0(0, 0)))");
    assert_eq!(line(&["translate", "--map", "o-value", "--n", "1", "th0(0, th0(0, 0))"]), "2");
}

#[test]
fn embed_prints_a_boolean() {
    assert_eq!(line(&["embed", "--mode", "strong", "--n", "2", "1", "01"]), "false");
    assert_eq!(line(&["embed", "--mode", "weak", "--n", "2", "1", "01"]), "true");
    assert_eq!(line(&["embed", "ε", "0"]), "true");
}

#[test]
fn enumerate_streams_one_term_per_line() {
    assert_eq!(stdout(&["enumerate", "--system", "theta", "--n", "1", "--max-lh", "2"]), "0\nv0 0\nv0 v0 0\n");
    assert_eq!(
        stdout(&["enumerate", "--system", "gapseq", "--variant", "bar", "--n", "3", "--max-len", "1"]),
        "ε\n0\n1\n2\n"
    );
}

#[test]
fn parse_round_trips_enumerated_terms() {
    let cases: &[(&str, &[&str])] = &[
        ("cnf", &["--max-size", "3"]),
        ("veblen", &["--n", "2", "--max-size", "3"]),
        ("pi", &["--n", "3", "--max-size", "3"]),
        ("theta", &["--n", "3", "--max-size", "3"]),
        ("gapseq", &["--n", "3", "--max-size", "3"]),
        ("btheta", &["--n", "2", "--max-size", "2"]),
    ];
    for (system, extra) in cases {
        let mut args = vec!["enumerate", "--system", system];
        args.extend_from_slice(extra);
        let listing = stdout(&args);
        assert!(listing.lines().count() > 3, "{system}");
        for term in listing.lines() {
            let mut args = vec!["parse", "--system", system];
            if *system == "gapseq" {
                args.extend_from_slice(&["--n", "3"]);
            }
            args.push(term);
            assert_eq!(line(&args), term, "{system}");
        }
    }
}

#[test]
fn parse_canonicalises_spacing() {
    assert_eq!(line(&["parse", "--system", "btheta", "th0( 0,0 )"]), "th0(0, 0)");
    assert_eq!(line(&["parse", "--system", "theta", "v0   v1 0"]), "v0 v1 0");
}

#[test]
fn syntax_errors_exit_2_with_a_caret() {
    let out = ordgap(&["parse", "--system", "theta", "v0 x 0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column 4"), "{err}");
    assert!(err.contains("\n     ^"), "{err}");
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["parse", "--system", "theta", "--n", "1", "v1 0"][..],
        &["parse", "--system", "theta", "--variant", "prime", "--n", "2", "v0 0"],
        &["parse", "--system", "btheta", "--n", "2", "--variant", "ot", "th1(th1(0, 0), 0)"],
        &["translate", "--map", "chi-std", "w^(w^(w))"],
        &["translate", "--map", "tau", "v0 0"],
        &["embed", "--n", "2", "2", "0"],
        &["enumerate", "--system", "theta", "--max-lh", "3"],
        &["check", "--suite", "no-such-suite"],
        &["compare", "--system", "nope", "0", "0"],
    ] {
        assert_eq!(ordgap(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn check_emits_reproducible_records() {
    let args = ["check", "--suite", "e-iso", "--suite", "gap-orders", "--max-size", "3", "--no-timing"];
    let first = ordgap(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.starts_with("{\"suite\":") && l.contains("\"failures\":0")));
    assert!(String::from_utf8(first.stderr).unwrap().contains("2 of 2 suites passed"));
    assert_eq!(ordgap(&args).stdout, first.stdout);
}

#[test]
fn check_lists_suites() {
    let listing = stdout(&["check", "--list"]);
    assert!(listing.lines().any(|l| l.starts_with("tau-monotone")));
}
