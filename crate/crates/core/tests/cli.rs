use std::io::Write;
use std::process::{Command, Output};

fn srtk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srtk"))
        .args(args)
        .env_remove("SRTK_CHAR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    assert_eq!(srtk(&["check", "bstar", "--builtin", "torus7"]).status.code(), Some(0));
    assert_eq!(srtk(&["check", "cm", "--builtin", "rp2_6", "--char", "2"]).status.code(), Some(1));
    assert_eq!(srtk(&["check", "cm", "--builtin", "rp2_6", "--char", "3"]).status.code(), Some(0));
    assert_eq!(srtk(&["check", "2cm", "--builtin", "simplex_boundary:3"]).status.code(), Some(0));
    assert_eq!(srtk(&["check", "buchsbaum", "--builtin", "bowtie_filled"]).status.code(), Some(1));
    assert_eq!(srtk(&["check", "bstar", "--builtin", "wedge_two_circles", "--seeds", "3"]).status.code(), Some(1));
    assert_eq!(srtk(&["check", "level", "--builtin", "rp2_6", "--char", "2"]).status.code(), Some(0));
}

#[test]
fn environment_sets_the_characteristic() {
    let run = |p: &str| {
        Command::new(env!("CARGO_BIN_EXE_srtk"))
            .args(["check", "cm", "--builtin", "rp2_6"])
            .env("SRTK_CHAR", p)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("2"), Some(1));
    assert_eq!(run("3"), Some(0));
}

#[test]
fn facet_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# octahedron\n6 3").unwrap();
    for a in [1, 2] {
        for b in [3, 4] {
            for c in [5, 6] {
                writeln!(file, "{a} {b} {c}").unwrap();
            }
        }
    }
    let path = file.path().to_str().unwrap();
    let o = srtk(&["check", "2cm", path]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "3 2\n1 x").unwrap();
    let o = srtk(&["report", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(srtk(&["report", "/nonexistent/facets.txt"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(srtk(&["check", "cm"]).status.code(), Some(2));
    assert_eq!(srtk(&["check", "nope", "--builtin", "torus7"]).status.code(), Some(2));
    assert_eq!(srtk(&["report", "--builtin", "klein_bottle"]).status.code(), Some(2));
    assert_eq!(srtk(&["report", "--builtin", "torus7", "--char", "9"]).status.code(), Some(2));
    assert_eq!(srtk(&["report", "--builtin", "torus7", "--seeds", "0"]).status.code(), Some(2));
    assert_eq!(srtk(&["--help"]).status.code(), Some(0));
}

#[test]
fn report_is_byte_identical_across_runs() {
    let args = ["report", "--builtin", "torus7", "--json", "--seed", "4", "--seeds", "3"];
    let a = srtk(&args);
    let b = srtk(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seeds"], serde_json::json!([4, 5, 6]));
    assert_eq!(v["seeds_agree"], true);
    assert_eq!(v["classification"]["buchsbaum_star"], true);
    assert_eq!(v["level_quotient"]["dims"], serde_json::json!([1, 4, 4, 1]));
}

#[test]
fn expand_and_bounds() {
    let o = srtk(&["expand", "7", "3", "2"]);
    assert!(stdout(&o).contains("7 = 1·C(4,2) + C(2,2)"));
    assert!(stdout(&o).contains("7^<2> = 11"));
    let o = srtk(&["expand", "13", "3", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["growth"], "21");

    let o = srtk(&["bounds", "--builtin", "torus7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2:6405"), "{}", stdout(&o));
}

#[test]
fn builtins_are_listed() {
    let o = srtk(&["builtins"]);
    let out = stdout(&o);
    for name in ["torus7", "rp2_6", "wedge_two_circles"] {
        assert!(out.contains(name));
    }
}
