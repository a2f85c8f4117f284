use std::process::{Command, Output};

use legendre_overlap::{GramMatrix, GramMethod};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legendre-overlap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn overlap_prints_exact_integers() {
    for (n, m, expected) in [("10", "3", "19641872250"), ("10", "5", "137493105750")] {
        let o = bin(&["overlap", "--n", n, "--m", m, "--q", "10", "--k", "3"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), expected);
    }
    let o = bin(&["overlap", "--n", "11", "--m", "4", "--q", "10", "--k", "3"]);
    assert_eq!(stdout(&o).trim(), "962451740250");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&["overlap", "--n", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["boundary", "--n", "x", "--k", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["gram", "--q", "0", "--k", "0", "--n-max", "1", "--m-max", "1", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(bin(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn gram_json_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gram.json");
    let path_s = path.to_str().unwrap();
    let o = bin(&["gram", "--q", "2", "--k", "1", "--n-max", "9", "--m-max", "7", "--out", path_s]);
    assert_eq!(o.status.code(), Some(0));
    let parsed = GramMatrix::read_json(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(parsed, GramMatrix::build(2, 1, 9, 7, GramMethod::ClosedForm));
}

#[test]
fn csv_and_json_cells_agree() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("g.json");
    let csv = dir.path().join("g.csv");
    let common = ["gram", "--q", "1", "--k", "2", "--n-max", "6", "--m-max", "8"];
    let mut a = common.to_vec();
    a.extend(["--out", json.to_str().unwrap()]);
    let mut b = common.to_vec();
    b.extend(["--format", "csv", "--out", csv.to_str().unwrap()]);
    assert!(bin(&a).status.success());
    assert!(bin(&b).status.success());

    let value: serde_json::Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    let json_rows: Vec<Vec<String>> = value["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect())
        .collect();

    let mut reader = csv::Reader::from_path(&csv).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[0], "n\\m");
    assert_eq!(header.len(), 10);
    let csv_rows: Vec<Vec<String>> = reader
        .records()
        .enumerate()
        .map(|(n, r)| {
            let r = r.unwrap();
            assert_eq!(&r[0], n.to_string());
            r.iter().skip(1).map(String::from).collect()
        })
        .collect();
    assert_eq!(csv_rows, json_rows);
}

#[test]
fn swapped_gram_is_transpose() {
    let a = GramMatrix::build(3, 1, 8, 6, GramMethod::ClosedForm);
    let b = GramMatrix::build(1, 3, 6, 8, GramMethod::ClosedForm);
    assert_eq!(a.transpose(), b);
    for (n, row) in a.entries.iter().enumerate() {
        for (m, v) in row.iter().enumerate() {
            if (n + m + 3 + 1) % 2 == 1 {
                assert!(v.is_zero());
            }
        }
    }
}

#[test]
fn gram_to_unwritable_path_exits_one() {
    let o = bin(&["gram", "--q", "0", "--k", "0", "--n-max", "2", "--m-max", "2", "--out", "/proc/nope/g.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot write"));
}

#[test]
fn boundary_all_agrees() {
    let o = bin(&["boundary", "--n", "12", "--k", "5", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("AGREE\n"));
}

#[test]
fn quad_check_default_nodes() {
    let o = bin(&["quad-check", "--n", "12", "--m", "12", "--q", "0", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("(24 nodes)"));
}
