use std::io::Write;
use std::process::{Command, Output};

use hessenberg_catalan::{build_path_matrix, custom_boundary, fuss_catalan, rational_boundary};

fn hesscat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hesscat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

const CATALAN_BFILE: &str =
    "# A000108 prefix\n0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n7 429\n8 1430\n9 4862\n10 16796\n";

fn bfile(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn gen_json_catalan_two() {
    let out = hesscat(&[
        "gen", "--kind", "fuss", "--k", "1", "--n", "2", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["entries"], serde_json::json!([["1", "0"], ["1", "2"]]));
    assert_eq!(v["n"], 2);
}

#[test]
fn gen_json_round_trips() {
    let out = hesscat(&[
        "gen", "--kind", "rational", "--m", "7", "--r", "16", "--n", "1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ints = |key: &str| -> Vec<i64> {
        v[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_i64().unwrap())
            .collect()
    };
    let rebuilt = build_path_matrix(&custom_boundary(ints("a"), ints("b")).unwrap());
    assert_eq!(rebuilt.source(), &rational_boundary(7, 16, 1).unwrap());
    let entries = v["entries"].as_array().unwrap();
    for (i, row) in rebuilt.rows().enumerate() {
        for (j, val) in row.iter().enumerate() {
            assert_eq!(entries[i][j].as_str().unwrap(), val.to_string());
        }
    }
}

#[test]
fn gen_plain_flagship_matrix() {
    let out = hesscat(&[
        "gen", "--kind", "rational", "--m", "7", "--r", "16", "--n", "1",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[2], "0 1 5 10 10 5 1");
    assert_eq!(lines[6], "0 0 0 0 0 1 14");
    let csv = hesscat(&["gen", "--kind", "catalan", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&csv), "1,0\n1,2\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        code(&hesscat(&["gen", "--kind", "fuss", "--k", "0", "--n", "3"])),
        2
    );
    assert_eq!(code(&hesscat(&["gen", "--kind", "fuss", "--n", "3"])), 2);
    assert_eq!(
        code(&hesscat(&[
            "gen", "--kind", "rational", "--m", "2", "--r", "4", "--n", "1"
        ])),
        2
    );
    assert_eq!(
        code(&hesscat(&[
            "det", "--kind", "fuss", "--k", "-1", "--n", "3"
        ])),
        2
    );
    assert_eq!(
        code(&hesscat(&["det", "--kind", "custom", "--a", "1,0"])),
        2
    );
    assert_eq!(
        code(&hesscat(&["verify", "--kind", "custom", "--n-max", "3"])),
        2
    );
    assert_eq!(
        code(&hesscat(&[
            "bench", "--kind", "fuss", "--k", "1", "--n", "3", "--reps", "0"
        ])),
        2
    );
}

#[test]
fn det_all_flagship() {
    let out = hesscat(&[
        "det", "--kind", "rational", "--m", "7", "--r", "16", "--n", "1", "--engine", "all",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[..3].iter().all(|l| l.ends_with(" 10659")));
    assert_eq!(lines[3], "AGREE");
}

#[test]
fn det_single_engine() {
    assert_eq!(
        stdout(&hesscat(&["det", "--kind", "fuss", "--k", "3", "--n", "4"])),
        "140\n"
    );
    assert_eq!(
        stdout(&hesscat(&["det", "--kind", "fuss", "--k", "1", "--n", "0"])),
        "1\n"
    );
    let out = hesscat(&[
        "det",
        "--kind",
        "rational",
        "--m",
        "2",
        "--r",
        "1",
        "--n",
        "2",
        "--engine",
        "elimination",
    ]);
    assert_eq!(stdout(&out), "3\ndiagonal: 1 1 2 3/2\n");
    let out = hesscat(&[
        "det",
        "--kind",
        "fuss",
        "--k",
        "2",
        "--n",
        "5",
        "--engine",
        "fraction-free",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], "273");
    assert_eq!(v["engine"], "fraction-free");
}

#[test]
fn verify_rows() {
    let out = hesscat(&["verify", "--kind", "fuss", "--k", "2", "--n-max", "10"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let pass: Vec<&str> = text.lines().filter(|l| l.ends_with("PASS")).collect();
    assert_eq!(pass.len(), 10);
    assert!(pass[3].starts_with("4\t55\t55\t55"));

    let out = hesscat(&[
        "verify", "--kind", "rational", "--m", "2", "--r", "1", "--n-max", "3", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "2,3,3,3,PASS"));

    let out = hesscat(&[
        "verify", "--kind", "fuss", "--k", "1", "--n-max", "4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let dets: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["determinant"].as_str().unwrap())
        .collect();
    assert_eq!(dets, ["1", "2", "5", "14"]);
}

#[test]
fn verify_skips_oracle_beyond_guard() {
    let out = hesscat(&[
        "verify", "--kind", "rational", "--m", "7", "--r", "16", "--n-min", "3", "--n-max", "4",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("3\t") && !l.contains("SKIPPED-ORACLE")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("4\t") && l.contains("SKIPPED-ORACLE\tPASS")));
}

#[test]
fn bench_two_engines_agree() {
    let out = hesscat(&[
        "bench",
        "--kind",
        "fuss",
        "--k",
        "2",
        "--n",
        "100",
        "--engines",
        "recurrence,fraction-free",
        "--reps",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 2);
    let want = fuss_catalan(2, 100).unwrap().to_string();
    assert!(rows.iter().all(|r| r[4] == want));
    assert_eq!(rows[0][0], "recurrence");
    assert_eq!(rows[1][0], "fraction-free");
}

#[test]
fn bench_degenerate() {
    let out = hesscat(&[
        "bench",
        "--kind",
        "fuss",
        "--k",
        "1",
        "--n",
        "0",
        "--reps",
        "1",
        "--engines",
        "recurrence",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("recurrence")).count(),
        1
    );
    assert!(text.contains("value: 1\n"));
}

#[test]
fn oeis_check_clean() {
    let f = bfile(CATALAN_BFILE);
    let path = f.path().to_str().unwrap();
    let out = hesscat(&[
        "oeis-check",
        "--kind",
        "catalan",
        "--bfile",
        path,
        "--from",
        "0",
        "--to",
        "10",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("matched: 11\nmismatches: 0\n"));
    let out = hesscat(&[
        "oeis-check",
        "--kind",
        "catalan",
        "--bfile",
        path,
        "--route",
        "determinant",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("matched: 11\n"));
}

#[test]
fn oeis_check_corrupted_and_missing() {
    let f = bfile(&CATALAN_BFILE.replace("3 5\n", "3 6\n"));
    let path = f.path().to_str().unwrap();
    let out = hesscat(&[
        "oeis-check",
        "--kind",
        "catalan",
        "--bfile",
        path,
        "--from",
        "0",
        "--to",
        "10",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("matched: 10\nmismatches: 1\n"));
    assert!(text.contains("mismatch n=3 b-file=6 computed=5"));

    assert_eq!(
        code(&hesscat(&[
            "oeis-check",
            "--kind",
            "catalan",
            "--bfile",
            "/nonexistent/missing.txt"
        ])),
        2
    );

    let gap = bfile("0 1\n1 1\n3 5\n");
    let out = hesscat(&[
        "oeis-check",
        "--kind",
        "catalan",
        "--bfile",
        gap.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));
}

#[test]
fn oeis_check_alignment() {
    // Fuss k=3 terms stored from index 0 while the sequence starts at n = 1
    let f = bfile("0 1\n1 4\n2 22\n3 140\n4 969\n");
    let path = f.path().to_str().unwrap();
    let out = hesscat(&[
        "oeis-check",
        "--kind",
        "fuss",
        "--k",
        "3",
        "--bfile",
        path,
        "--from",
        "1",
        "--to",
        "5",
        "--align",
        "-1",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).starts_with("matched: 5\n"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify", "--kind", "rational", "--m", "3", "--r", "2", "--n-max", "5",
    ];
    assert_eq!(stdout(&hesscat(&args)), stdout(&hesscat(&args)));
}
