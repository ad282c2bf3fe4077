use std::fs;
use std::process::{Command, Output};

use z4w_dna::code::{span_enumerate, to_dna_code};
use z4w_dna::families::build_simplex_beta;
use z4w_dna::io::parse_code;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_z4w-dna"));
    c.env_remove("Z4W_DNA_LIMIT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn generate_simplex_fasta() {
    let o = run(&["generate", "--family", "simplex", "--k", "2", "--format", "fasta"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let headers: Vec<&str> = text.lines().filter(|l| l.starts_with('>')).collect();
    assert_eq!(headers.len(), 256);
    assert!(headers[0].starts_with(">family=simplex(k=2);index=0;gc="));
    assert!(text.lines().filter(|l| !l.starts_with('>')).all(|l| l.len() == 16));
    assert!(stderr(&o).contains("measured:  (16, 256, 8)"));
}

#[test]
fn generate_rm1_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rm1.json");
    let o = run(&["generate", "--family", "rm1", "--m", "3", "--z", "w", "--format", "json", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["size"], 8192);
    assert_eq!(doc["min_distance"], 4);
    assert_eq!(doc["length"], 16);
    let summary = stdout(&o);
    assert!(summary.contains("measured:  (16, 8192, 4)"), "{summary}");
    assert!(summary.contains("predicted: (16, 8192, 4)"), "{summary}");
}

#[test]
fn generate_rejects_unit_z() {
    let o = run(&["generate", "--family", "rm1", "--m", "1", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("zero divisor"));
}

#[test]
fn limit_from_environment() {
    let o = bin().args(["generate", "--family", "simplex", "--k", "2"]).env("Z4W_DNA_LIMIT", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn pairwise_flag_agrees() {
    let a = run(&["generate", "--family", "octa", "--first-row", "0,2w,2,2+2w", "--format", "text"]);
    let b = run(&["generate", "--family", "octa", "--first-row", "0,2w,2,2+2w", "--format", "text", "--pairwise"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stderr(&a), stderr(&b));
    assert!(stderr(&a).contains("(8, 64, 4)"));
}

#[test]
fn reproduce_tables_match_and_are_deterministic() {
    for (target, summary) in [("table2", "4/4 rows match"), ("table3", "5/5 rows match"), ("simplex", "2/2 rows match")] {
        let a = run(&["reproduce", target]);
        assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
        assert!(stdout(&a).trim_end().ends_with(summary));
        assert_eq!(a.stdout, run(&["reproduce", target]).stdout);
    }
    let json = run(&["reproduce", "table3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5);
}

#[test]
fn reproduce_bounds() {
    let o = run(&["reproduce", "bounds"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(">= 224: confirmed"));
}

#[test]
fn reproduce_rmr_reports_distance_mismatch() {
    let o = run(&["reproduce", "rmr"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("MISMATCH rmr(r=1,m=2,z=2)"), "{text}");
    assert!(text.contains("ok       rmr(r=1,m=2,z=w)"), "{text}");
}

#[test]
fn verify_reports() {
    let dir = tempfile::tempdir().unwrap();
    let example = dir.path().join("example.txt");
    fs::write(
        &example,
        "AGAG\nAGGA\nAGCT\nAGTC\nGAAG\nGAGA\nGACT\nGATC\nCTAG\nCTGA\nCTCT\nCTTC\nTCAG\nTCGA\nTCCT\nTCTC\n",
    )
    .unwrap();
    let o = run(&["verify", example.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("M:        16"));
    assert!(text.contains("d_H:      2"));
    assert!(text.contains("reverse=true complement=true reverse_complement=true"));

    let aa = dir.path().join("aa.txt");
    fs::write(&aa, "AA\n").unwrap();
    let text = stdout(&run(&["verify", aa.to_str().unwrap()]));
    assert!(text.contains("reverse=true complement=false"), "{text}");

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "AXGT\n").unwrap();
    assert_eq!(run(&["verify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["verify", dir.path().join("missing").to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn export_import_round_trip() {
    let expected = to_dna_code(&span_enumerate(&build_simplex_beta(2).unwrap(), 1 << 10).unwrap());
    let dir = tempfile::tempdir().unwrap();
    for format in ["fasta", "csv", "json", "text"] {
        let path = dir.path().join(format!("code.{format}"));
        let o = run(&["generate", "--family", "simplex", "--k", "2", "--format", format, "-o", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let back = parse_code(&fs::read_to_string(&path).unwrap()).unwrap();
        assert!(back.dna.same_words(&expected), "{format}");
        let v = run(&["verify", path.to_str().unwrap(), "--format", "json"]);
        let report: serde_json::Value = serde_json::from_slice(&v.stdout).unwrap();
        assert_eq!(report["size"], 256, "{format}");
        assert_eq!(report["min_distance"], 8, "{format}");
    }
}
