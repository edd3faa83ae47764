//! End-to-end tests against the compiled binary: argument handling, exit
//! codes, output formats and determinism, exactly as a shell user sees them.

use std::path::PathBuf;
use std::process::{Command, Output};

fn trilat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trilat"))
        .args(args)
        .output()
        .expect("failed to spawn the binary")
}

fn stdout_of(args: &[&str]) -> String {
    let out = trilat(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout is UTF-8")
}

fn exit_code(args: &[&str]) -> i32 {
    trilat(args).status.code().expect("no exit code")
}

#[test]
fn centers_prints_the_exact_values() {
    let s = stdout_of(&["centers", "0", "0", "2", "0", "2", "3"]);
    assert!(s.contains("circumcenter F = (1, 3/2)"), "{s}");
    assert!(s.contains("centroid     G = (4/3, 1)"), "{s}");
    assert!(s.contains("orthocenter  H = (2, 0)"), "{s}");
    assert!(s.contains("euler line: 3x + 2y = 6"), "{s}");
}

#[test]
fn centers_json_round_trips() {
    let s = stdout_of(&["centers", "0", "0", "19", "17", "11", "23", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["F"]["x"]["num"], "39");
    assert_eq!(v["F"]["x"]["den"], "5");
    assert_eq!(v["R2"]["num"], "169");
    assert_eq!(v["R2"]["den"], "1");
    assert_eq!(v["area2"], 250);
}

#[test]
fn classify_reports_the_conditions_and_gcd() {
    let s = stdout_of(&["classify", "0", "0", "12", "0", "12", "18"]);
    assert!(s.contains("= 111011"), "{s}");
    assert!(s.contains("side gcd: 6"), "{s}");
}

#[test]
fn negative_coordinates_parse() {
    let s = stdout_of(&["centers", "0", "0", "3", "3", "-3", "3"]);
    assert!(s.contains("circumcenter F = (0, 3)"), "{s}");
    assert!(s.contains("centroid     G = (0, 2)"), "{s}");
}

#[test]
fn collinear_vertices_exit_3() {
    let out = trilat(&["centers", "0", "0", "1", "1", "2", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("collinear"), "{err}");
}

#[test]
fn wrong_argument_count_exits_2() {
    assert_eq!(exit_code(&["centers", "1", "2", "3"]), 2);
    assert_eq!(exit_code(&["centers"]), 2);
    assert_eq!(exit_code(&["scan"]), 2);
    assert_eq!(exit_code(&["scan", "--bound", "0"]), 2);
    assert_eq!(exit_code(&["no-such-command"]), 2);
}

#[test]
fn scan_filters_and_limits() {
    let s = stdout_of(&["scan", "--bound", "5", "--where", "h & !f", "--limit", "4"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 4, "{s}");
    // Bit order f g h …: every row must show h set and f clear.
    for l in lines {
        let bits = l.split('[').nth(1).unwrap();
        assert!(bits.starts_with("0"), "{l}");
        assert_eq!(bits.as_bytes()[2], b'1', "{l}");
    }
}

#[test]
fn scan_dedupe_lists_congruence_class_representatives() {
    let all = stdout_of(&["scan", "--bound", "2"]).lines().count();
    let classes = stdout_of(&["scan", "--bound", "2", "--dedupe"]).lines().count();
    assert!(classes < all, "{classes} !< {all}");
    // Placements of each class within the box outnumber the classes by far.
    assert!(all >= 8 * classes, "{classes} classes, {all} placements");
}

#[test]
fn malformed_filter_expression_exits_2() {
    let out = trilat(&["scan", "--bound", "3", "--where", "h &&& f"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad condition expression"), "{err}");
    assert_eq!(exit_code(&["scan", "--bound", "3", "--where", "nonsense"]), 2);
}

#[test]
fn verify_passes_and_prints_one_line_per_claim() {
    let out = trilat(&["verify", "--bound", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8_lossy(&out.stdout);
    assert_eq!(s.matches("PASS ").count(), 5, "{s}");
    // Timing goes to stderr, never into the report.
    assert!(!s.contains("thread"), "{s}");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("verify: bound 4"), "{err}");
}

#[test]
fn verify_output_is_identical_across_thread_counts() {
    let serial = stdout_of(&["verify", "--bound", "6", "--format", "json"]);
    let parallel = stdout_of(&["verify", "--bound", "6", "--threads", "4", "--format", "json"]);
    assert_eq!(serial, parallel);
}

#[test]
fn implications_json_has_all_192_cells() {
    let s = stdout_of(&["implications", "--bound", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["bound"], 3);
    assert_eq!(v["entries"].as_array().unwrap().len(), 192);
}

#[test]
fn implications_runs_are_byte_identical() {
    let a = stdout_of(&["implications", "--bound", "4", "--format", "json"]);
    let b = stdout_of(&["implications", "--bound", "4", "--format", "json", "--threads", "3"]);
    assert_eq!(a, b);
}

#[test]
fn figure_is_deterministic_and_respects_hide() {
    let a = stdout_of(&["figure", "0", "0", "6", "0", "8", "4"]);
    let b = stdout_of(&["figure", "0", "0", "6", "0", "8", "4"]);
    assert_eq!(a, b);
    assert!(a.starts_with("<svg "), "{a}");
    assert!(a.trim_end().ends_with("</svg>"), "{a}");
    let bare = stdout_of(&[
        "figure", "0", "0", "6", "0", "8", "4", "--hide", "grid,axes,labels",
    ]);
    assert!(!bare.contains("<text"), "{bare}");
    assert!(bare.len() < a.len());
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join("fig.svg");
    let out = trilat(&[
        "figure", "0", "0", "2", "0", "2", "3", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let direct = stdout_of(&["figure", "0", "0", "2", "0", "2", "3"]);
    assert_eq!(written, direct);
}

#[test]
fn unwritable_out_path_exits_5() {
    let out = trilat(&[
        "centers", "0", "0", "2", "0", "2", "3", "--out", "/nonexistent-dir/x.txt",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn csv_scan_has_a_header() {
    let s = stdout_of(&["scan", "--bound", "2", "--limit", "2", "--format", "csv"]);
    let mut lines = s.lines();
    assert_eq!(
        lines.next().unwrap(),
        "x1,y1,x2,y2,x3,y3,f_lattice,g_lattice,h_lattice,circumradius_integer,area_integer,even_side_sums"
    );
    assert_eq!(lines.count(), 2);
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
    assert_eq!(exit_code(&["centers", "--help"]), 0);
}
