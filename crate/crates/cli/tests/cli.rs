use std::process::{Command, Output};

use proptest::prelude::*;

use quartic_cli::record::{read_csv, read_json, write_csv, write_json, OutputRecord};
use quartic_cli::{exit, verify};
use quartic_core::{builtin, builtin_families, BiPoly, Solution, Source};

fn quartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic"))
        .args(args)
        .env_remove("QUARTIC_THREADS")
        .output()
        .expect("spawn quartic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_ok() {
    let o = quartic(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().all(|l| l.contains(" OK ")), "{text}");
    assert!(text.starts_with("F1  OK"));
}

#[test]
fn verify_json() {
    let o = quartic(&["verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 15);
    assert!(arr
        .iter()
        .all(|r| r["verified"] == true && r["residual"] == "0"));
}

#[test]
fn verify_reports_corrupted_family() {
    let mut bad = builtin("F3").unwrap().clone();
    bad.id = "FX".into();
    bad.a = &bad.a + &BiPoly::constant(1);
    let families = [builtin_families()[0].clone(), bad];
    let mut out = Vec::new();
    let code = verify(&families, false, &mut out).unwrap();
    assert_eq!(code, exit::VERIFY_FAILED);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("F1  OK"), "{text}");
    assert!(text.contains("FX  FAIL"), "{text}");
}

#[test]
fn solve_all_at_bound() {
    let o = quartic(&["solve", "--h", "48", "--bound", "10", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "h,A,B,C,D,source\n48,8,1,4,3,search\n");
}

#[test]
fn solve_prefers_families() {
    let o = quartic(&["solve", "--h", "17", "--bound", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "h,A,B,C,D,source\n17,4,1,1,2,\"FT(p=2,q=1)\"\n");
}

#[test]
fn solve_searches_when_no_family_applies() {
    let o = quartic(&["solve", "--h", "7", "--bound", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "h,A,B,C,D,source\n7,13,2,1,8,search\n");
}

#[test]
fn solve_without_solution() {
    let o = quartic(&["solve", "--h", "2", "--bound", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = quartic(&["solve", "--h", "2", "--bound", "2", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn solve_methods_agree() {
    let run = |m: &str| {
        stdout(&quartic(&[
            "solve", "--h", "6", "--bound", "40", "--all", "--method", m,
        ]))
    };
    let mitm = run("mitm");
    assert_eq!(mitm, run("brute"));
    assert_eq!(mitm, run("auto"));
    assert_eq!(mitm.lines().count(), 8);
}

#[test]
fn threads_from_environment() {
    let args = ["solve", "--h", "1", "--bound", "300", "--all"];
    let base = quartic(&args).stdout;
    for t in ["1", "3"] {
        let o = Command::new(env!("CARGO_BIN_EXE_quartic"))
            .args(args)
            .env("QUARTIC_THREADS", t)
            .output()
            .unwrap();
        assert_eq!(o.stdout, base);
    }
}

#[test]
fn match_lists_instances() {
    let o = quartic(&["match", "--h", "48"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("FG(p=2)\t48,8,1,4,3\tnontrivial"));
    assert_eq!(text.lines().count(), 3);

    let o = quartic(&["match", "--h", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["family"], "F1");
    assert_eq!(v[0]["p"], "-1");

    let o = quartic(&["match", "--h", "7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn table_single_row() {
    let o = quartic(&["table", "--from", "3", "--to", "3", "--bound", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "h,A,B,C,D,source\n3,4,1,2,3,F1(p=1)\n");
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("coverage: 1/1"), "{err}");
}

#[test]
fn table_small_range() {
    let o = quartic(&["table", "--from", "1", "--to", "20", "--bound", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let records = read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(records.len(), 20);
    let solved: Vec<u32> = records
        .iter()
        .filter(|r| r.has_solution())
        .map(|r| r.h.parse().unwrap())
        .collect();
    assert_eq!(
        solved,
        [3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18]
    );
    assert!(records.iter().all(|r| r.validate().unwrap()));
    let row = |h: usize| &records[h - 1];
    assert_eq!(row(13).source.as_deref(), Some("FP(p=4)"));
    assert_eq!(row(15).a.as_deref(), Some("2"));
    assert_eq!(row(20).a, None);
}

#[test]
fn table_csv_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("t.csv");
    let json_path = dir.path().join("t.json");
    let base = ["table", "--from", "1", "--to", "30", "--bound", "60"];
    let mut args = base.to_vec();
    args.extend(["--out", csv_path.to_str().unwrap()]);
    assert_eq!(quartic(&args).status.code(), Some(0));
    let mut args = base.to_vec();
    args.extend(["--format", "json", "--out", json_path.to_str().unwrap()]);
    let o = quartic(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let from_csv = read_csv(std::fs::File::open(&csv_path).unwrap()).unwrap();
    let from_json = read_json(std::fs::File::open(&json_path).unwrap()).unwrap();
    assert_eq!(from_csv.len(), 30);
    assert_eq!(from_csv, from_json);
}

#[test]
fn usage_errors() {
    for args in [
        &["table", "--from", "5", "--to", "4"][..],
        &["table", "--from", "0", "--to", "4"],
        &["solve", "--h", "0"],
        &["solve", "--h", "-3"],
        &["solve", "--h", "5", "--bound", "0"],
        &["solve", "--h", "x"],
        &["solve", "--h", "5", "--method", "magic"],
        &["frobnicate"],
    ] {
        let o = quartic(args);
        assert_eq!(o.status.code(), Some(64), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(quartic(&["--help"]).status.code(), Some(0));
}

#[test]
fn numeric_limit_errors() {
    let o = quartic(&[
        "solve", "--h", "5", "--bound", "70000", "--all", "--method", "mitm",
    ]);
    assert_eq!(o.status.code(), Some(65));
    let o = quartic(&[
        "solve", "--h", "5", "--bound", "300", "--all", "--method", "brute",
    ]);
    assert_eq!(o.status.code(), Some(65));
    let o = quartic(&["solve", "--h", "100000000000000000000"]);
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("t.csv");
    let o = quartic(&[
        "table",
        "--from",
        "1",
        "--to",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(66));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing"));
}

#[test]
fn catalog_lists_expanded_families() {
    let o = quartic(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 15);
    let h4 = arr.iter().find(|f| f["id"] == "H4").unwrap();
    assert_eq!(h4["h"], "p^4 - q^4");
}

fn arb_record() -> impl Strategy<Value = OutputRecord> {
    let int = prop_oneof![(0i64..1000).prop_map(|x| x.to_string()), "[1-9][0-9]{0,40}",];
    (
        1u64..1_000_000,
        prop::option::of((int.clone(), int.clone(), int.clone(), int)),
        prop_oneof![
            Just("search".to_string()),
            (1i64..50).prop_map(|p| format!("F1(p={p})")),
            (1i64..50, 1i64..9).prop_map(|(p, q)| format!("FT(p={p},q={q})")),
        ],
    )
        .prop_map(|(h, vals, src)| match vals {
            None => OutputRecord::empty(h),
            Some((a, b, c, d)) => OutputRecord {
                h: h.to_string(),
                a: Some(a),
                b: Some(b),
                c: Some(c),
                d: Some(d),
                source: Some(src),
            },
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn records_round_trip(records in prop::collection::vec(arb_record(), 0..200)) {
        let mut csv = Vec::new();
        write_csv(&records, &mut csv).unwrap();
        prop_assert_eq!(&read_csv(csv.as_slice()).unwrap(), &records);
        let mut json = Vec::new();
        write_json(&records, &mut json).unwrap();
        prop_assert_eq!(&read_json(json.as_slice()).unwrap(), &records);
    }
}

#[test]
fn emitted_records_round_trip() {
    let mut records = Vec::new();
    for f in builtin_families() {
        for p in 1..=14 {
            if let Ok(s) = f.instantiate_i64(p, 1) {
                records.push(OutputRecord::from_solution(&s));
            }
        }
    }
    records.push(OutputRecord::from_solution(&Solution::from_i64s(
        7,
        [13, 2, 1, 8],
        Source::Search,
    )));
    records.truncate(200);
    assert_eq!(records.len(), 200);
    let mut csv = Vec::new();
    write_csv(&records, &mut csv).unwrap();
    let mut json = Vec::new();
    write_json(&records, &mut json).unwrap();
    let a = read_csv(csv.as_slice()).unwrap();
    let b = read_json(json.as_slice()).unwrap();
    assert_eq!(a, records);
    assert_eq!(b, records);
}
