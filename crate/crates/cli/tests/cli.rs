use std::path::PathBuf;

use foolset::format::to_fsm;
use foolset::{construct, Matrix, PrimeField};
use foolset_cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use tempfile::TempDir;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("foolset").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn gen_emits_golden_fsm() {
    let (code, out, _) = call(&["gen", "--p", "2", "--t", "1", "--format", "fsm"]);
    assert_eq!(code, EXIT_OK);
    let expected = "FSM 1 2 7 7\n\
                    1 1 1 0 1 0 0\n\
                    0 1 1 1 0 1 0\n\
                    0 0 1 1 1 0 1\n\
                    1 0 0 1 1 1 0\n\
                    0 1 0 0 1 1 1\n\
                    1 0 1 0 0 1 1\n\
                    1 1 0 1 0 0 1\n";
    assert_eq!(out, expected);
    assert_eq!(out, to_fsm(&construct(2, 1).unwrap().matrix));
}

#[test]
fn gen_csv_has_no_header() {
    let (code, out, _) = call(&["gen", "--p", "3", "--t", "1", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 13);
    // f(0), f(-1), ..., f(-12) = f(0), f(12), f(11), ..., f(1)
    assert_eq!(lines[0], "1,2,1,2,0,1,1,0,0,2,0,0,0");
}

#[test]
fn table_prints_exact_ratios() {
    let (code, out, _) = call(&["table", "--p", "2", "--t-max", "3"]);
    assert_eq!(code, EXIT_OK);
    let ratios: Vec<&str> = out.lines().skip(1).map(|l| l.split(' ').nth(5).unwrap()).collect();
    assert_eq!(ratios, vec!["7/9", "21/25", "73/81"]);
    assert!(out.contains("7/9 0.777778 1/2"));
}

#[test]
fn verify_reports_symmetric_pair() {
    let dir = TempDir::new().unwrap();
    let ones = write(&dir, "ones.fsm", "FSM 1 2 2 2\n1 1\n1 1\n");
    let (code, out, err) = call(&["verify", "--input", ones.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(out, "symmetric-pair 0 1\n");
    assert!(err.contains("symmetric-pair 0 1"));

    let zero_diag = write(&dir, "zd.csv", "1,0\n0,0\n");
    let (code, out, _) = call(&["verify", "--input", zero_diag.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(out, "zero-diagonal 1\n");

    let wide = write(&dir, "wide.csv", "1,0,0\n0,1,0\n");
    let (code, _, err) = call(&["verify", "--input", wide.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not square"));
}

#[test]
fn round_trip_gen_verify_rank() {
    let dir = TempDir::new().unwrap();
    for (p, t) in [("2", "1"), ("3", "1"), ("2", "2"), ("5", "1")] {
        let (_, fsm, _) = call(&["gen", "--p", p, "--t", t]);
        let path = write(&dir, &format!("m{p}_{t}.fsm"), &fsm);
        let path = path.to_str().unwrap();
        let bundle = construct(p.parse().unwrap(), t.parse().unwrap()).unwrap();
        assert_eq!(call(&["verify", "--input", path]), (EXIT_OK, "pass\n".into(), String::new()));
        let (code, out, _) = call(&["rank", "--input", path]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, format!("rank {}\n", bundle.rank));
    }
}

#[test]
fn rank_over_another_field() {
    let dir = TempDir::new().unwrap();
    // Rows 0 + 1 = row 2 only in characteristic 2.
    let path = write(&dir, "m.csv", "1,0,1\n0,1,1\n1,1,0\n");
    let path = path.to_str().unwrap();
    assert_eq!(call(&["rank", "--input", path, "--p", "2"]).1, "rank 2\n");
    assert_eq!(call(&["rank", "--input", path, "--p", "3"]).1, "rank 3\n");
    assert_eq!(call(&["rank", "--input", path]).1, "rank 2\n");
    let (code, _, err) = call(&["rank", "--input", path, "--p", "9"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not prime"));
}

#[test]
fn period_command() {
    assert_eq!(call(&["period", "--p", "2", "--r", "3"]).1, "period 7\n");
    assert_eq!(call(&["period", "--p", "3", "--r", "4"]).1, "period 13\n");
    let (code, _, err) = call(&["period", "--p", "2", "--r", "3", "--cap", "3"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(err.contains("within 3 steps"));
    assert_eq!(call(&["period", "--p", "2", "--r", "1"]).0, EXIT_USAGE);
}

#[test]
fn search_command() {
    let dir = TempDir::new().unwrap();
    let upper = write(&dir, "upper.csv", "1,1,1,1\n0,1,1,1\n0,0,1,1\n0,0,0,1\n");
    let upper = upper.to_str().unwrap();
    let (code, out, _) = call(&["search", "--input", upper]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "size 4\n0 0\n1 1\n2 2\n3 3\n");

    let ones = write(&dir, "ones.csv", "1,1,1\n1,1,1\n1,1,1\n");
    let ones = ones.to_str().unwrap();
    let (code, out, _) = call(&["search", "--input", ones, "--target", "2"]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(out, "size 1\n0 0\nanswer no\n");
    let (code, out, _) = call(&["search", "--input", ones, "--target", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("answer yes\n"));

    let (code, _, err) = call(&["search", "--input", ones, "--budget", "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--budget"));
}

#[test]
fn search_with_small_budget_is_flagged() {
    let dir = TempDir::new().unwrap();
    let field = PrimeField::new(2).unwrap();
    let m = Matrix::from_fn(field, 8, 8, |i, j| u64::from((i * 5 + j * 3) % 4 != 0));
    let path = write(&dir, "m.fsm", &to_fsm(&m));
    let (code, out, _) =
        call(&["search", "--input", path.to_str().unwrap(), "--budget", "1", "--target", "8"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("optimal false"));
    assert!(out.ends_with("answer unknown\n"));
}

#[test]
fn kron_command() {
    let dir = TempDir::new().unwrap();
    let (_, fsm, _) = call(&["gen", "--p", "2", "--t", "1"]);
    let m = write(&dir, "m.fsm", &fsm);
    let m = m.to_str().unwrap();
    let (code, out, _) = call(&["kron", "--left", m, "--right", m]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("FSM 1 2 49 49\n"));
    let k = write(&dir, "k.fsm", &out);
    let k = k.to_str().unwrap();
    assert_eq!(call(&["verify", "--input", k]).1, "pass\n");
    assert_eq!(call(&["rank", "--input", k]).1, "rank 9\n");

    let other = write(&dir, "f3.fsm", "FSM 1 3 1 1\n1\n");
    let (code, _, err) = call(&["kron", "--left", m, "--right", other.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("field mismatch"));
    let (code, _, err) = call(&["--size-limit", "40", "kron", "--left", m, "--right", m]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("limit 40"));
}

#[test]
fn exponent_command() {
    let (code, out, _) = call(&["exponent", "--n0", "6", "--r0", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("exponent 1.6309"));
    assert!(call(&["exponent", "--n0", "6", "--r0", "4"]).1.starts_with("exponent 1.2924"));
}

#[test]
fn usage_errors() {
    let (code, _, err) = call(&["gen", "--p", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--t"));
    let (code, _, err) = call(&["gen", "--p", "two", "--t", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--p"));
    assert_eq!(call(&[]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["verify", "--input", "/nonexistent/file.fsm"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot read"));
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Usage"));
}

#[test]
fn size_limit_flag() {
    let (code, _, err) = call(&["--size-limit", "20", "gen", "--p", "2", "--t", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("exceeds the configured limit 20"));
    assert_eq!(call(&["gen", "--p", "2", "--t", "2", "--size-limit", "21"]).0, EXIT_OK);
}

#[test]
fn identical_args_give_identical_bytes() {
    for args in [
        vec!["gen", "--p", "3", "--t", "1", "--format", "table"],
        vec!["table", "--p", "3", "--t-max", "2", "--seed", "17"],
        vec!["period", "--p", "5", "--r", "6"],
    ] {
        assert_eq!(call(&args), call(&args));
    }
}

#[test]
fn binary_exit_codes_and_env_limit() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_foolset");
    let ok = Command::new(bin).args(["gen", "--p", "2", "--t", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(ok.stdout.starts_with(b"FSM 1 2 7 7\n"));

    let limited = Command::new(bin)
        .args(["gen", "--p", "2", "--t", "2"])
        .env("FOOLSET_SIZE_LIMIT", "20")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&limited.stderr).contains("limit 20"));

    let dir = TempDir::new().unwrap();
    let ones = write(&dir, "ones.fsm", "FSM 1 2 2 2\n1 1\n1 1\n");
    let bad = Command::new(bin).args(["verify", "--input"]).arg(&ones).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_FAIL));

    let usage = Command::new(bin).args(["gen", "--t", "1"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}
