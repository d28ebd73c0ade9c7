use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phdual"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("phdual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn sphere_barcodes() {
    let s = data("sphere.cells");
    let s = s.to_str().unwrap();
    let o = run(&["barcode", s, "--field", "11", "--algorithm", "phcol"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 inf\n0 2 3\n1 4 5\n2 6 inf\n");
    let o = run(&[
        "barcode",
        s,
        "--field",
        "11",
        "--module",
        "rel_coh",
        "--algorithm",
        "pcoh",
        "--oracle",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 -inf 1\n1 2 3\n2 -inf 6\n2 4 5\n");
    let o = run(&["barcode", s, "--field", "11", "--indices"]);
    assert_eq!(stdout(&o), "0 1 6\n0 2 2\n1 4 4\n2 6 6\n");
}

#[test]
fn generator_listing() {
    let s = data("sphere.cells");
    let o = run(&[
        "generators",
        s.to_str().unwrap(),
        "--field",
        "11",
        "--module",
        "abs_coh",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("generator").count(), 4);
    assert!(text.contains("V_perp[1*] = 1*:1 2*:1"));
    let v = scratch("vertex.cells", "0 0\n");
    let o = run(&["generators", v.to_str().unwrap()]);
    assert_eq!(stdout(&o), "[0, inf)_0  <1, 1>\n  generator V[1] = 1:1\n");
}

#[test]
fn input_errors_exit_2() {
    let empty = scratch("empty.cells", "# nothing\n");
    let o = run(&["barcode", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no cells"));
    let bad = scratch("bad.cells", "0 0\n1 1 1:1 2:1\n");
    let o = run(&["barcode", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let s = data("sphere.cells");
    let o = run(&[
        "generators",
        s.to_str().unwrap(),
        "--module",
        "rel_hom",
        "--algorithm",
        "pcoh",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["barcode", s.to_str().unwrap(), "--field", "12"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simplicial_and_point_input() {
    let tri = scratch("tri.simp", "0 a\n0 b\n0 c\n1 a b\n1 b c\n1 a c\n2 a b c\n");
    let o = run(&[
        "barcode",
        tri.to_str().unwrap(),
        "--format",
        "simplicial",
        "--oracle",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 0 1\n0 0 1\n0 0 inf\n1 1 2\n");
    let pts = scratch("pts.txt", "0 0\n1 0\n0 1\n1 1\n");
    let o = run(&[
        "barcode",
        pts.to_str().unwrap(),
        "--format",
        "points",
        "--maxdim",
        "1",
        "--module",
        "abs_coh",
        "--algorithm",
        "pcoh",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 0 1\n0 0 1\n0 0 1\n0 0 inf\n1 1 inf\n1 1.4142135623730951 inf\n1 1.4142135623730951 inf\n");
}

#[test]
fn oracle_check_command() {
    let s = data("sphere.cells");
    let o = run(&["oracle-check", s.to_str().unwrap(), "--field", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.ends_with(" ok")).count(),
        12
    );
}

#[test]
fn bench_command() {
    let o = run(&[
        "bench",
        "--random",
        "10",
        "--ambient",
        "3",
        "--maxdim",
        "2",
        "--repeat",
        "2",
        "--csv",
        "-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("algorithm,ops,peak_elements,seconds\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("pcoh,")).count(), 2);
    let o = run(&["bench", "--random", "12", "--maxdim", "3", "--limit", "50"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["bench"]);
    assert_eq!(o.status.code(), Some(2));
}
