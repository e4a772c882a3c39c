use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn nbcss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbcss")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn extend(out: &Path, extra: &[&str]) -> Output {
    let hx = data("small_hgp_hx.txt");
    let hz = data("small_hgp_hz.txt");
    let out = out.display().to_string();
    let mut args = vec!["extend", "--hc", &hx, "--hd", &hz, "--out-dir", &out];
    args.extend_from_slice(extra);
    nbcss(&args)
}

#[test]
fn check_small_hgp_is_applicable() {
    let o = nbcss(&["check", "--hc", &data("small_hgp_hx.txt"), "--hd", &data("small_hgp_hz.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("F2 orthogonality: ok"));
    assert!(s.contains("overlap histogram: 2:16"));
    assert!(s.contains("applicable (all overlaps 0 or 2): yes"));
}

#[test]
fn check_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "1 1 0\n0 1 1\n");
    let b = write(dir.path(), "b.txt", "0 1 1\n");
    let o = nbcss(&["check", "--hc", &a, "--hd", &b]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("odd overlap at (0, 0): size 1"));
}

#[test]
fn check_flags_overlap_four() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "1 1 1 1\n");
    let o = nbcss(&["check", "--hc", &a, "--hd", &a]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("applicable (all overlaps 0 or 2): no"));
    assert!(s.contains("csa"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "1 2 0\n");
    let o = nbcss(&["check", "--hc", &a, "--hd", &a]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));
    let o = nbcss(&["check", "--hc", "/nonexistent/x.txt", "--hd", &a]);
    assert_eq!(o.status.code(), Some(2));
    let o = nbcss(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hgp_writes_small_hgp() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("hx.txt");
    let z = dir.path().join("hz.alist");
    let o = nbcss(&[
        "hgp",
        "--h1",
        &data("small_hgp_h1.txt"),
        "--h2",
        &data("small_hgp_h2.txt"),
        "--out-x",
        x.to_str().unwrap(),
        "--out-z",
        z.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&x).unwrap(), fs::read_to_string(data("small_hgp_hx.txt")).unwrap());
    let hz_alist = nbcss::formats::parse_alist(&fs::read_to_string(&z).unwrap()).unwrap();
    let hz_dense = nbcss::formats::parse_dense(&fs::read_to_string(data("small_hgp_hz.txt")).unwrap()).unwrap();
    assert_eq!(hz_alist, hz_dense);
}

#[test]
fn extend_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = extend(dir.path(), &["--dump-congruences", "--trace-elimination", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("(0,0,0,9) : +e[0,0] -e[0,9] +f[0,0] -f[0,9] (mod 255)"));
    assert!(s.contains("GF(2^8) orthogonality: ok"));
    for f in ["gamma.hex", "delta.hex", "congruences.txt", "elimination_trace.txt", "manifest.json"] {
        assert!(dir.path().join(f).exists(), "{f} missing");
    }
    let gamma = fs::read_to_string(dir.path().join("gamma.hex")).unwrap();
    assert!(gamma.starts_with("GF(2^8) poly=0x11d\n# seed=5 solver=eliminate\n"));
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["seed"], 5);
    assert_eq!(manifest["solver"], "eliminate");
    assert_eq!(manifest["field_degree"], 8);

    let g = dir.path().join("gamma.hex").display().to_string();
    let d = dir.path().join("delta.hex").display().to_string();
    let o = nbcss(&[
        "verify",
        "--hc",
        &data("small_hgp_hx.txt"),
        "--hd",
        &data("small_hgp_hz.txt"),
        "--gamma",
        &g,
        "--delta",
        &d,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn extend_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for solver in ["eliminate", "snf", "heuristic"] {
        assert_eq!(extend(a.path(), &["--solver", solver, "--seed", "17"]).status.code(), Some(0));
        assert_eq!(extend(b.path(), &["--solver", solver, "--seed", "17"]).status.code(), Some(0));
        for f in ["gamma.hex", "delta.hex", "congruences.txt"] {
            assert_eq!(fs::read(a.path().join(f)).unwrap(), fs::read(b.path().join(f)).unwrap(), "{solver} {f}");
        }
    }
    // different seeds give different matrices
    assert_eq!(extend(b.path(), &["--seed", "18"]).status.code(), Some(0));
    assert_eq!(extend(a.path(), &["--seed", "17"]).status.code(), Some(0));
    assert_ne!(fs::read(a.path().join("gamma.hex")).unwrap(), fs::read(b.path().join("gamma.hex")).unwrap());
}

#[test]
fn tampered_entry_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(extend(dir.path(), &[]).status.code(), Some(0));
    let path = dir.path().join("gamma.hex");
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    // first data line, first entry (column 0 is in the support of row 0)
    let row = lines.iter().position(|l| !l.starts_with('#') && !l.starts_with("GF")).unwrap();
    let first = &lines[row][..2];
    let replacement = if first == "01" { "02" } else { "01" };
    lines[row].replace_range(..2, replacement);
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    let o = nbcss(&[
        "verify",
        "--hc",
        &data("small_hgp_hx.txt"),
        "--hd",
        &data("small_hgp_hz.txt"),
        "--gamma",
        path.to_str().unwrap(),
        "--delta",
        dir.path().join("delta.hex").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    // row 0 of H_X meets rows 0..5 of H_Z; those containing column 0 are 0 and 1
    assert!(s.contains("nonzero inner product at (0, 0)"), "{s}");
    assert!(s.contains("nonzero inner product at (0, 1)"), "{s}");
}

#[test]
fn verify_paper_hex() {
    let o = nbcss(&[
        "verify",
        "--paper-hex",
        "--hc",
        &data("small_hgp_hx.txt"),
        "--hd",
        &data("small_hgp_hz.txt"),
        "--gamma",
        &data("small_hgp_gamma.paperhex"),
        "--delta",
        &data("small_hgp_delta.paperhex"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("16 of 16 satisfied"));
}

#[test]
fn verify_paper_hex_needs_gf256() {
    let o = nbcss(&[
        "verify",
        "--paper-hex",
        "--field-degree",
        "4",
        "--hc",
        &data("small_hgp_hx.txt"),
        "--hd",
        &data("small_hgp_hz.txt"),
        "--gamma",
        &data("small_hgp_gamma.paperhex"),
        "--delta",
        &data("small_hgp_delta.paperhex"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn trivial_pair_gets_nonzero_entries() {
    let dir = tempfile::tempdir().unwrap();
    let hc = write(dir.path(), "hc.txt", "1\n");
    let hd = write(dir.path(), "hd.txt", "# cols=1\n");
    let out = dir.path().join("out");
    let o = nbcss(&["extend", "--hc", &hc, "--hd", &hd, "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let g = nbcss::formats::parse_hex_grid(&fs::read_to_string(out.join("gamma.hex")).unwrap()).unwrap();
    assert_eq!((g.rows(), g.cols()), (1, 1));
    assert!(!g.get(0, 0).is_zero());
    let d = nbcss::formats::parse_hex_grid(&fs::read_to_string(out.join("delta.hex")).unwrap()).unwrap();
    assert_eq!((d.rows(), d.cols()), (0, 1));
}

#[test]
fn overlap_four_needs_csa() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "1 1 1 1 0 0\n0 0 1 1 1 1\n");
    let b = write(dir.path(), "b.txt", "1 1 1 1 1 1\n");
    let out = dir.path().join("out");
    let out = out.to_str().unwrap();
    let o = nbcss(&["extend", "--hc", &a, "--hd", &b, "--out-dir", out]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("overlap in 4 columns"));

    let o = nbcss(&["extend", "--csa", "--hc", &a, "--hd", &b, "--out-dir", out, "--field-degree", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let params: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(Path::new(out).join("csa_params.json")).unwrap()).unwrap();
    assert_eq!(params["modulus"], 15);
    assert_eq!(params["c"].as_array().unwrap().len(), 6);

    let o = nbcss(&["csa", "--hc", &a, "--hd", &b, "--out-dir", out, "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("GF(2^8) orthogonality: ok"));
}

#[test]
fn solver_errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // prime-field needs a prime modulus; 255 is not
    let o = extend(dir.path(), &["--solver", "prime-field"]);
    assert_eq!(o.status.code(), Some(2));
    // GF(8): modulus 7 is prime
    let o = extend(dir.path(), &["--solver", "prime-field", "--field-degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // a zero heuristic budget cannot repair a random start
    let o = extend(dir.path(), &["--solver", "heuristic", "--max-sweeps", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("did not converge"));
    // a reducible or non-primitive polynomial is a usage error
    let o = extend(dir.path(), &["--poly", "0x11b"]);
    assert_eq!(o.status.code(), Some(2));
    let o = extend(dir.path(), &["--poly", "0x12b"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn kernel_basis() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.txt");
    let o = nbcss(&["kernel", "--matrix", &data("small_hgp_hx.txt"), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("kernel dimension: 7 (rank 6)"));
    let hx = nbcss::formats::parse_dense(&fs::read_to_string(data("small_hgp_hx.txt")).unwrap()).unwrap();
    let k = nbcss::formats::parse_dense(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(k.rows(), 7);
    for x in k.to_dense() {
        assert!(hx.mul_vec_f2(&x).unwrap().iter().all(|&s| s == 0));
    }
}
