use hksym::cli::{parse_angle, parse_matrix, run, EXIT_CHECK_FAILED, EXIT_MALFORMED, EXIT_OK};
use hksym::exactalg::Scalar;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hk(args: &[&str], stdin: &str) -> Out {
    let mut o = Vec::new();
    let mut e = Vec::new();
    let argv = std::iter::once("hksym").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut o, &mut e);
    Out { code, stdout: String::from_utf8(o).unwrap(), stderr: String::from_utf8(e).unwrap() }
}

fn catalog(name: &str) -> String {
    let r = hk(&["catalog", name], "");
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    r.stdout
}

fn tmp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("hksym-cli-{}-{name}", std::process::id()))
}

#[test]
fn verify_example1() {
    let r = hk(&["verify"], &catalog("example1"));
    assert_eq!(r.code, EXIT_OK, "{}", r.stdout);
    assert!(r.stdout.contains("signature: (4, 12)"));
    assert!(r.stdout.contains("holonomy: non-abelian, dim 6"));
}

#[test]
fn accheck_builtin() {
    let r = hk(&["accheck", "--builtin"], "");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("crux: satisfied, tame: no"), "{}", r.stdout);
    assert!(r.stdout.contains("dim h_S: 6"));
    assert!(r.stdout.contains("span{p1, p2}"));
}

#[test]
fn accheck_file() {
    let p = tmp("ac.json");
    std::fs::write(&p, catalog("ac")).unwrap();
    let r = hk(&["--format", "json", "accheck", p.to_str().unwrap()], "");
    std::fs::remove_file(&p).ok();
    assert_eq!(r.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["facts"]["tame"], false);
    assert_eq!(v["facts"]["dim h_S"], 6);
}

#[test]
fn broken_jacobi_names_the_triple() {
    let built = hk(&["build"], &catalog("example1"));
    assert_eq!(built.code, EXIT_OK);
    let mut v: serde_json::Value = serde_json::from_str(&built.stdout).unwrap();
    for b in v["lie_algebra"]["brackets"].as_array_mut().unwrap() {
        if b["x"] == "I*" && b["y"] == "1" {
            b["out"] = serde_json::json!({"i*": "2/1"});
        }
    }
    let r = hk(&["verify"], &v.to_string());
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    assert!(r.stdout.contains("Jacobi identity fails on ("), "{}", r.stdout);
}

#[test]
fn malformed_input_exits_2() {
    for input in ["{", "{\"module\": 3}", "not json", "[1, 2]"] {
        let r = hk(&["verify"], input);
        assert_eq!(r.code, EXIT_MALFORMED, "{input}");
        assert!(r.stderr.starts_with("error:"), "{}", r.stderr);
    }
    let r = hk(&["verify"], "{\n\"module\": }");
    assert!(r.stderr.contains("line 2, column"), "{}", r.stderr);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hk(&["frobnicate"], "").code, EXIT_MALFORMED);
    assert_eq!(hk(&[], "").code, EXIT_MALFORMED);
    assert_eq!(hk(&["catalog", "nothing"], "").code, EXIT_MALFORMED);
    assert_eq!(hk(&["catalog", "a-r", "--angle", "1/2,1/2"], "").code, EXIT_MALFORMED);
    assert_eq!(hk(&["catalog", "example2", "--matrix", "1,0,0;0,1,0;0,0,1"], "").code, EXIT_MALFORMED);
    assert_eq!(hk(&["verify", "/nonexistent/file.json"], "").code, EXIT_MALFORMED);
    assert_eq!(hk(&["accheck", "--builtin", "x.json"], "").code, EXIT_MALFORMED);
    assert_eq!(hk(&["--help"], "").code, EXIT_OK);
}

#[test]
fn wrong_document_kind() {
    assert_eq!(hk(&["verify"], &catalog("ac")).code, EXIT_MALFORMED);
    assert_eq!(hk(&["admissible"], &catalog("ac")).code, EXIT_MALFORMED);
    let t = hk(&["build"], &catalog("example1")).stdout;
    assert_eq!(hk(&["build"], &t).code, EXIT_MALFORMED);
}

#[test]
fn p1_is_not_admissible() {
    let r = hk(&["admissible"], &catalog("p1-algebra"));
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    assert!(r.stdout.contains("check A1: FAIL"), "{}", r.stdout);
    assert!(r.stdout.contains("witness: X"));
}

#[test]
fn classification_rows_are_admissible() {
    for n in ["example1", "example2", "a-prime", "a-r", "a-s", "flat"] {
        let r = hk(&["admissible"], &catalog(n));
        assert_eq!(r.code, EXIT_OK, "{n}: {}", r.stdout);
    }
}

#[test]
fn catalog_parameters() {
    let r = hk(&["catalog", "example2", "--n", "2"], "");
    assert_eq!(r.code, EXIT_OK);
    let v = hk(&["verify"], &r.stdout);
    assert!(v.stdout.contains("signature: (12, 20)"), "{}", v.stdout);

    let r = hk(&["catalog", "example2", "--matrix", "1,0,0;0,2,0;0,0,-3"], "");
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(hk(&["verify"], &r.stdout).code, EXIT_OK);

    let r = hk(&["catalog", "a-s", "--angle", "5/13,12/13"], "");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("5/13"));
    assert_eq!(hk(&["admissible"], &r.stdout).code, EXIT_OK);
}

#[test]
fn build_extract_tangent_with_out_files() {
    let (t, x, tt) = (tmp("t.json"), tmp("x.json"), tmp("tt.json"));
    let b = hk(&["build", "--out", t.to_str().unwrap()], &catalog("example1"));
    assert_eq!(b.code, EXIT_OK);
    assert!(b.stdout.contains("signature: (4, 12)"));
    let e = hk(&["extract", t.to_str().unwrap(), "--out", x.to_str().unwrap()], "");
    assert_eq!(e.code, EXIT_OK, "{}", e.stdout);
    assert!(e.stdout.contains("extracted admissible: yes"), "{}", e.stdout);
    let back = hk(&["verify", x.to_str().unwrap()], "");
    assert_eq!(back.code, EXIT_OK);
    assert!(back.stdout.contains("signature: (4, 12)"));
    let g = hk(&["tangent", t.to_str().unwrap(), "-n", "1", "--out", tt.to_str().unwrap()], "");
    assert_eq!(g.code, EXIT_OK, "{}", g.stdout);
    assert!(g.stdout.contains("T^1 signature: (16, 16)"), "{}", g.stdout);
    assert_eq!(hk(&["verify", tt.to_str().unwrap()], "").code, EXIT_OK);
    for p in [t, x, tt] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn document_on_stdout_report_on_stderr() {
    let r = hk(&["build"], &catalog("flat"));
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.trim_start().starts_with('{'));
    assert!(r.stderr.contains("signature: (4, 0)"));
}

#[test]
fn report_json() {
    let r = hk(&["--format", "json", "report"], &catalog("example1"));
    assert_eq!(r.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["facts"]["signature"], serde_json::json!([4, 12]));
    assert_eq!(v["facts"]["admissible"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"]["status"] == "pass"));

    let r = hk(&["--format", "json", "report"], &catalog("p1-algebra"));
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let a1 = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "A1").unwrap();
    assert_eq!(a1["verdict"]["status"], "fail");
    assert_eq!(a1["witness"], "X");
}

#[test]
fn report_on_triple_extracts() {
    let t = hk(&["build"], &catalog("example1")).stdout;
    let r = hk(&["report"], &t);
    assert_eq!(r.code, EXIT_OK, "{}", r.stdout);
    assert!(r.stdout.contains("extracted dim l: 7"));
    assert!(r.stdout.contains("extracted dim a: 8"));
}

#[test]
fn matrix_and_angle_parsers() {
    let m = parse_matrix("1,0;0,-1/2").unwrap();
    assert_eq!(m[(1, 1)], Scalar::frac(-1, 2));
    assert!(parse_matrix("1,0;0").is_err());
    assert!(parse_matrix("a,b").is_err());
    let a = parse_angle("3/5,4/5").unwrap();
    assert_eq!(a.s(), &Scalar::frac(3, 5));
    assert!(parse_angle("3/5").is_err());
    assert!(parse_angle("1,1").is_err());
}
