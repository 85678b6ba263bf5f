//! End-to-end checks of the `fca` binary: exit codes, stream handling,
//! and byte-exact output for the shipped fixtures.

mod common;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use fca::lattice::enumerate_concepts;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fca"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).unwrap()
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).unwrap()
}

fn crime_cxt_arg() -> String {
    fixture_path("crime.cxt").to_str().unwrap().to_owned()
}

#[test]
fn scale_reproduces_the_frozen_cxt_fixtures() {
    let csv = fixture_path("crime.csv");
    let scheme = fixture_path("crime.scheme");
    let out = run(
        &[
            "scale",
            "-i",
            csv.to_str().unwrap(),
            "--scheme",
            scheme.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), fixture("crime.cxt"));

    // the scheme file and the builtin give identical bytes
    let builtin = run(
        &[
            "scale",
            "-i",
            csv.to_str().unwrap(),
            "--scheme",
            "builtin-crime",
        ],
        None,
    );
    assert_eq!(out.stdout, builtin.stdout);

    let geo = run(
        &[
            "scale",
            "-i",
            fixture_path("geo.csv").to_str().unwrap(),
            "--scheme",
            "builtin-geo",
        ],
        None,
    );
    assert!(geo.status.success());
    assert_eq!(stdout_of(&geo), fixture("geo.cxt"));
}

#[test]
fn scale_reads_stdin_and_writes_output_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("ctx.cxt");
    let out = run(
        &[
            "scale",
            "--scheme",
            "builtin-crime",
            "-o",
            out_path.to_str().unwrap(),
        ],
        Some(&fixture("crime.csv")),
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&out_path).unwrap(),
        fixture("crime.cxt")
    );
}

#[test]
fn concepts_lists_the_minimal_context() {
    let out = run(&["concepts"], Some("B\n\n1\n1\n\no1\nm1\n.\n"));
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0: {o1} / {}\n1: {} / {m1}\ntotal: 2\n");
}

#[test]
fn concepts_counts_the_crime_lattice() {
    let expected = enumerate_concepts(&common::crime_context()).unwrap().len();
    let out = run(&["concepts", "-i", &crime_cxt_arg()], None);
    assert!(out.status.success());
    let last = stdout_of(&out).lines().last().unwrap().to_owned();
    assert_eq!(last, format!("total: {}", expected));

    // identical invocations give identical bytes
    let again = run(&["concepts", "-i", &crime_cxt_arg()], None);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn concepts_respects_the_concept_limit() {
    let out = run(
        &["concepts", "--max-concepts", "3", "-i", &crime_cxt_arg()],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(stderr_of(&out).starts_with("ERROR CapacityExceeded:"));
}

#[test]
fn derive_matches_the_published_row() {
    let out = run(&["derive", "--objects", "P1", "-i", &crime_cxt_arg()], None);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "a,m,c1,c3,g1\n");

    let out = run(
        &["derive", "--attributes", "c1,g1", "-i", &crime_cxt_arg()],
        None,
    );
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "P1,P5\n");

    let out = run(
        &["derive", "--objects", "P1,P5", "-i", &crime_cxt_arg()],
        None,
    );
    assert_eq!(stdout_of(&out), "m,c1,g1\n");
}

#[test]
fn derive_requires_exactly_one_side() {
    let neither = run(&["derive", "-i", &crime_cxt_arg()], None);
    assert_eq!(neither.status.code(), Some(2));
    assert!(neither.stdout.is_empty());

    let both = run(
        &[
            "derive",
            "--objects",
            "P1",
            "--attributes",
            "c1",
            "-i",
            &crime_cxt_arg(),
        ],
        None,
    );
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn derive_reports_unknown_names_as_domain_errors() {
    let out = run(&["derive", "--objects", "zz", "-i", &crime_cxt_arg()], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_of(&out), "ERROR UnknownName: unknown name: zz\n");
}

#[test]
fn crosstab_reproduces_the_published_totals() {
    let out = run(
        &[
            "crosstab",
            "-i",
            &crime_cxt_arg(),
            "--locations",
            "g1,g2,g3,g4,g5",
            "--crimes",
            "c1,c2,c3,c4",
        ],
        None,
    );
    assert!(out.status.success());
    let expected = "\
,c1,c2,c3,c4,Total
g1,2,2,2,1,7
g2,0,0,0,1,1
g3,2,1,0,1,4
g4,1,0,0,1,2
g5,1,0,1,0,2
Total,6,3,3,4,16
";
    assert_eq!(stdout_of(&out), expected);
}

#[test]
fn crosstab_rejects_non_partitions() {
    let out = run(
        &[
            "crosstab",
            "-i",
            &crime_cxt_arg(),
            "--locations",
            "g1,g2",
            "--crimes",
            "c1",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).starts_with("ERROR NonPartition:"));
}

#[test]
fn hotspots_rank_g1_first() {
    let out = run(
        &[
            "hotspots",
            "-i",
            &crime_cxt_arg(),
            "--locations",
            "g1,g2,g3,g4,g5",
            "--crimes",
            "c1,c2,c3,c4",
        ],
        None,
    );
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "location,score\ng1,7\ng3,4\ng4,2\ng5,2\ng2,1\n"
    );
}

#[test]
fn plotdata_keeps_location_order() {
    let out = run(
        &[
            "plotdata",
            "-i",
            &crime_cxt_arg(),
            "--locations",
            "g1,g2,g3,g4,g5",
            "--crimes",
            "c1,c2,c3,c4",
        ],
        None,
    );
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "location,count\ng1,7\ng2,1\ng3,4\ng4,2\ng5,2\n"
    );
}

#[test]
fn implication_verdicts() {
    let holds = run(
        &[
            "implication",
            "-i",
            &crime_cxt_arg(),
            "--premise",
            "c2",
            "--conclusion",
            "m",
        ],
        None,
    );
    assert!(holds.status.success());
    assert_eq!(stdout_of(&holds), "holds\n");

    let fails = run(
        &[
            "implication",
            "-i",
            &crime_cxt_arg(),
            "--premise",
            "c3",
            "--conclusion",
            "c1",
        ],
        None,
    );
    assert!(fails.status.success());
    assert_eq!(stdout_of(&fails), "fails\n");

    // an omitted premise is the empty premise
    let empty = run(
        &["implication", "-i", &crime_cxt_arg(), "--conclusion", "c1"],
        None,
    );
    assert!(empty.status.success());
    assert_eq!(stdout_of(&empty), "fails\n");
}

#[test]
fn lattice_emits_dot() {
    let reduced = run(&["lattice", "-i", &crime_cxt_arg()], None);
    assert!(reduced.status.success());
    let text = stdout_of(&reduced);
    assert!(text.starts_with("digraph concept_lattice {\n"));
    assert!(text.ends_with("}\n"));
    assert!(text.contains("  0 [label="));

    let full = run(
        &["lattice", "--labels", "full", "-i", &crime_cxt_arg()],
        None,
    );
    assert!(full.status.success());
    assert_ne!(reduced.stdout, full.stdout);
    assert!(stdout_of(&full).contains("{P1,P2,P3,P4,P5,P6,P7,P8,P9}"));
}

#[test]
fn malformed_input_is_a_domain_error() {
    let out = run(&["concepts"], Some("not a context\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).starts_with("ERROR MalformedHeader:"));

    let out = run(
        &["scale", "--scheme", "no-such-file.scheme"],
        Some(&fixture("crime.csv")),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).starts_with("ERROR Io:"));
}

#[test]
fn usage_errors_exit_with_code_2() {
    let missing_flag = run(&["crosstab", "-i", &crime_cxt_arg()], None);
    assert_eq!(missing_flag.status.code(), Some(2));

    let unknown = run(&["frobnicate"], None);
    assert_eq!(unknown.status.code(), Some(2));

    let bad_label = run(
        &["lattice", "--labels", "fancy", "-i", &crime_cxt_arg()],
        None,
    );
    assert_eq!(bad_label.status.code(), Some(2));
}
