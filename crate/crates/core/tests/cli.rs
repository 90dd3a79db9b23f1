use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poisson3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn resonances_example() {
    let o = run(&["resonances", "--tau", "-2/3", "--c", "1", "--dmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1,0) (3,3) (5,6) (7,9)\n");
}

#[test]
fn json_table_is_deterministic() {
    let args = [
        "cohomology",
        "--algebra",
        "heisenberg",
        "--dmax",
        "6",
        "--format",
        "json",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["algebra"], "heisenberg");
    assert!(v["tau"].is_null());
    assert_eq!(v["cells"].as_array().unwrap().len(), 28);
    for key in ["0", "1", "2", "3"] {
        assert!(v["totals"][key].is_u64());
    }
}

#[test]
fn csv_rows_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = run(&[
        "cohomology",
        "--algebra",
        "book",
        "--tau",
        "1/3",
        "--dmax",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut r = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(r.records().count(), 20);
}

#[test]
fn q_filter() {
    let o = run(&[
        "cohomology",
        "--algebra",
        "so3",
        "--dmax",
        "2",
        "--q",
        "1,2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let qs: Vec<u64> = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["q"].as_u64().unwrap())
        .collect();
    assert_eq!(qs, [1, 1, 1, 2, 2, 2]);
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--id", "open_book_tau_1", "--dmax", "10"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("open_book_tau_1 (dmax 10): pass"));
    let short = run(&["verify", "--id", "open_book_tau_1_3", "--dmax", "2"]);
    assert_eq!(short.status.code(), Some(1));
    let unknown = run(&["verify", "--id", "nothing"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["cohomology", "--algebra", "book"]).status.code(), Some(2));
    assert_eq!(
        run(&["cohomology", "--algebra", "martian"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["cohomology", "--algebra", "book", "--tau", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["schouten", "x +", "dx"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn small_verbs() {
    assert_eq!(stdout(&run(&["schouten", "x*dy", "y*dx"])), "x*dx - y*dy\n");
    assert_eq!(
        stdout(&run(&["dpi", "--algebra", "heisenberg", "x"])),
        "-1*z*dy\n"
    );
    let m = run(&["modular", "--algebra", "aff_x_r"]);
    assert_eq!(m.status.code(), Some(0));
    assert!(stdout(&m).contains("modular field -1*dy"));
    let j = stdout(&run(&["jacobi", "--algebra", "sl2"]));
    assert_eq!(j, "jacobi defect: 0\n[pi, pi]: 0\n");
    let s = stdout(&run(&["show", "--algebra", "heisenberg"]));
    assert!(s.ends_with("pi = z*dx^dy\n"), "{s}");
    assert!(stdout(&run(&["list"])).contains("hyperbolic_2_3"));
}

#[test]
fn custom_bivector() {
    let o = run(&[
        "cohomology",
        "--bivector",
        "z*dx^dy",
        "--dmax",
        "2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["algebra"], "custom");
    assert_eq!(v["totals"]["0"], 3);
}

#[test]
fn invariant_matches_full_for_euclidean() {
    let o = run(&[
        "invariant-cohomology",
        "--algebra",
        "euclidean",
        "--dmax",
        "3",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let mut r = csv::Reader::from_reader(text.as_bytes());
    for rec in r.records() {
        let rec = rec.unwrap();
        assert_eq!(rec[5], rec[6]);
    }
}
