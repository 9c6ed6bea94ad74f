use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn resnum(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_resnum"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn compute_reads_graph6_and_edge_lists() {
    // C5 and K4 as graph6, then the claw as an edge list.
    let out = resnum(&["compute", "--input", "-", "--dim", "--updim"], "Dhc\nC~\n");
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["res"], 2);
    assert_eq!(rows[0]["girth"], 5);
    assert_eq!(rows[0]["dim"], 2);
    assert_eq!(rows[1]["res"], 3);
    assert_eq!(rows[1]["omega"], 4);
    assert_eq!(rows[1]["updim"], 3);

    let out = resnum(&["compute", "--input", "-"], "# claw\nn 4\n0 1\n0 2\n0 3\n");
    let rows = json_lines(&out);
    assert_eq!(rows[0]["res"], 3);
    assert_eq!(rows[0]["is_tree"], true);
    assert_eq!(rows[0]["girth"], Value::Null);
}

#[test]
fn classify_uses_the_catalog() {
    let out = resnum(&["classify", "--input", "-"], "C~\nDhc\nC]\n");
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows[0]["res"], 3);
    assert!(rows[0]["catalog_member"].is_string());
    assert_eq!(rows[1]["category"], "OddCycle");
    assert_eq!(rows[2]["category"], "EvenCycle");
}

#[test]
fn verify_reports_every_proposition() {
    let out = resnum(&["verify", "--input", "-"], "Dhc\n");
    assert!(out.status.success());
    let rows = json_lines(&out);
    let verdicts = rows[0].as_array().unwrap();
    assert_eq!(verdicts.len(), 8);
    assert!(verdicts.iter().all(|v| v["holds"] != false));

    let out = resnum(&["verify", "--input", "-", "--prop", "nonsense"], "Dhc\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_and_enum_round_trip() {
    let out = resnum(&["gen", "--family", "cycle", "--params", "5"], "");
    assert!(out.status.success());
    let c5 = String::from_utf8(out.stdout).unwrap();

    // P5 and C5; exactly one of them has the generated cycle's invariants.
    let out = resnum(&["enum", "--n", "5", "--max-deg", "2"], "");
    let listed = String::from_utf8(out.stdout).unwrap();
    assert_eq!(listed.lines().count(), 2);
    let target = resnum(&["compute", "--input", "-"], &c5).stdout;
    let hits = listed
        .lines()
        .filter(|l| resnum(&["compute", "--input", "-"], &format!("{l}\n")).stdout == target)
        .count();
    assert_eq!(hits, 1);

    // Trees have infinite girth, so they pass any girth floor.
    let out = resnum(&["enum", "--n", "5", "--min-girth", "5"], "");
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);

    let trees = resnum(&["enum", "--n", "8", "--trees"], "");
    assert_eq!(String::from_utf8(trees.stdout).unwrap().lines().count(), 23);
}

#[test]
fn exit_codes() {
    // Malformed graph6.
    assert_eq!(resnum(&["compute", "--input", "-"], "~~~\n").status.code(), Some(2));
    // Disconnected input.
    assert_eq!(resnum(&["compute", "--input", "-"], "n 3\n0 1\n").status.code(), Some(2));
    // Exhaustive enumeration past its cap.
    assert_eq!(resnum(&["enum", "--n", "9"], "").status.code(), Some(3));
    // Unknown family.
    assert_eq!(resnum(&["gen", "--family", "moebius", "--params", "3"], "").status.code(), Some(2));
}

#[test]
fn catalog_matches_its_fixture() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/data/res3_catalog.g6");
    let out = resnum(&["catalog", "--res", "3", "--fixture", fixture], "");
    assert!(out.status.success());
    let report = &json_lines(&out)[0];
    assert_eq!(report["fixture_match"], true);
    assert_eq!(report["count"], 17);
    assert_eq!(report["girth5_orders"], serde_json::json!([6, 7, 8, 10]));

    let dir = std::env::temp_dir().join(format!("resnum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let stale = dir.join("stale.g6");
    std::fs::write(&stale, "CF\n").unwrap();
    let out = resnum(&["catalog", "--fixture", stale.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}
