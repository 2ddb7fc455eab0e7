use std::process::{Command, Output};

use perfover::Count;
use perfover_cli::bfile::parse_bfile;
use perfover_cli::commands::{sequence, SequenceKind};
use perfover_cli::CliError;

fn perfover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfover"))
        .args(args)
        .output()
        .expect("spawn perfover")
}

fn code(args: &[&str]) -> i32 {
    perfover(args).status.code().expect("exit status")
}

#[test]
fn identical_runs_are_byte_identical() {
    let runs: [&[&str]; 5] = [
        &["verify", "all", "--nmax", "24", "--format", "json"],
        &["table", "t3", "--format", "csv"],
        &["enumerate", "overperfect", "47", "--format", "json"],
        &["count", "pop", "479", "--xcheck"],
        &["enumerate", "factorizations", "720", "--unicode"],
    ];
    for args in runs {
        let first = perfover(args);
        assert!(first.status.success(), "{args:?}");
        assert!(!first.stdout.is_empty(), "{args:?}");
        assert_eq!(first.stdout, perfover(args).stdout, "{args:?}");
    }
}

#[test]
fn bfile_round_trips() {
    for (name, kind) in [
        ("pop", SequenceKind::Pop),
        ("pop_even", SequenceKind::PopEven),
        ("pop_odd", SequenceKind::PopOdd),
    ] {
        let out = perfover(&["sequence", name, "300", "--bfile"]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.ends_with('\n'));
        let parsed = parse_bfile(&text).unwrap();
        let expected: Vec<(u64, Count)> = (1..).zip(sequence(kind, 300).unwrap()).collect();
        assert_eq!(parsed, expected, "{name}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "pop", "479"]), 0);
    assert_eq!(code(&["--help"]), 0);
    // Malformed or incomplete arguments.
    assert_eq!(code(&["count", "fv", "12"]), CliError::EXIT_USAGE);
    assert_eq!(code(&["count", "pop_r", "11"]), CliError::EXIT_USAGE);
    assert_eq!(code(&["count", "f", "0"]), CliError::EXIT_USAGE);
    assert_eq!(code(&["count", "f", "-3"]), CliError::EXIT_USAGE);
    assert_eq!(code(&["count", "nope", "3"]), CliError::EXIT_USAGE);
    assert_eq!(code(&["table", "t2", "--n", "478"]), CliError::EXIT_USAGE);
    assert_eq!(code(&["sequence", "pop", "0"]), CliError::EXIT_USAGE);
    // Size guard, and its overrides.
    assert_eq!(
        code(&["enumerate", "perfect", "10001"]),
        CliError::EXIT_GUARD
    );
    assert_eq!(
        code(&["enumerate", "perfect", "100", "--limit", "50"]),
        CliError::EXIT_GUARD
    );
    assert_eq!(code(&["enumerate", "perfect", "10001", "--force"]), 0);
    assert_eq!(code(&["enumerate", "perfect", "100", "--limit", "200"]), 0);
}

#[test]
fn help_documents_exit_codes() {
    let help = String::from_utf8(perfover(&["--help"]).stdout).unwrap();
    for line in [
        "0  success",
        "2  bad arguments",
        "3  --xcheck",
        "4  enumeration refused",
    ] {
        assert!(help.contains(line), "missing `{line}` in:\n{help}");
    }
}

#[test]
fn enumerations_match_counts() {
    let lines = |args: &[&str]| {
        String::from_utf8(perfover(args).stdout)
            .unwrap()
            .lines()
            .count()
    };
    assert_eq!(lines(&["enumerate", "factorizations", "12"]), 8);
    assert_eq!(lines(&["enumerate", "perfect", "5"]), 3);
    assert_eq!(lines(&["enumerate", "overperfect", "11", "--r", "2"]), 3);
    assert_eq!(lines(&["enumerate", "overperfect", "479"]), 5898);
}

#[test]
fn plain_and_unicode_overlines() {
    let plain = String::from_utf8(perfover(&["enumerate", "overperfect", "1"]).stdout).unwrap();
    assert_eq!(plain, "(1)\n(1~)\n");
    let uni = perfover(&["enumerate", "overperfect", "1", "--unicode"]).stdout;
    assert_eq!(String::from_utf8(uni).unwrap(), "(1)\n(1\u{305})\n");
}

#[test]
fn xcheck_reports_every_path() {
    let out = perfover(&["count", "fnk", "105", "--k", "2", "--xcheck"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for path in ["inclusion-exclusion", "enumeration", "squarefree-stirling"] {
        assert!(text.contains(&format!("f(105, 2) = 6  [{path}]")), "{text}");
    }
}
