use std::io::Write;
use std::process::{Command, Output, Stdio};

use boij_soderberg::{BettiTable, Decomposition};
use boij_soderberg::decompose::DecompositionJson;

fn cli(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_boij-soderberg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn betti_output_pipes_into_decompose() {
    let betti = cli(&["betti", "--ideal", "x^2,x*y,x*z^2", "--vars", "x,y,z"], "");
    assert!(betti.status.success());
    let text = stdout(&betti);
    assert!(text.contains("    1: . 2 1 ."), "{text}");

    let dec = cli(&["decompose", "-"], &text);
    assert!(dec.status.success());
    let out = stdout(&dec);
    assert!(out.contains("1/5·β(0,2,3,5) + 1/10·β(0,2,4,5) + 1/6·β(0,3,4) + 1/3·β(0,3)"), "{out}");

    let norm = cli(&["decompose", "-", "--normalized", "--format", "text"], &text);
    assert!(stdout(&norm).starts_with("6·β(0,2,3,5) + 12·β(0,2,4,5) + 2·β(0,3,4) + 1·β(0,3)"));
}

#[test]
fn emitted_json_reads_back() {
    let betti = stdout(&cli(&["betti", "--seed", "7", "--nvars", "4", "--format", "json"], ""));
    let table = BettiTable::from_json_str(&betti).unwrap();
    assert_eq!(table.to_json_string(), betti.trim_end());

    let dec = stdout(&cli(&["decompose", "-", "--format", "json"], &betti));
    let parsed: DecompositionJson = serde_json::from_str(dec.trim_end()).unwrap();
    let d = Decomposition::from_json(&parsed).unwrap();
    assert_eq!(d.reconstruct().unwrap(), table);
}

#[test]
fn pure_subcommand() {
    let o = cli(&["pure", "0,2,3,5", "--vars", "3", "--format", "text"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("total: 1 5 5 1"), "{text}");
}

#[test]
fn exit_codes() {
    let outside = r#"{"vars":2,"entries":[[0,0,"1"],[1,1,"100"]]}"#;
    let o = cli(&["decompose", "-"], outside);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(cli(&["decompose", "-"], "{").status.code(), Some(1));
    assert_eq!(cli(&["decompose", "/nonexistent/table.json"], "").status.code(), Some(1));
    assert_eq!(cli(&["pure"], "").status.code(), Some(1));
    assert_eq!(cli(&["pure", "3,2"], "").status.code(), Some(1));
    assert_eq!(cli(&["supernatural", "--roots", "0,-4", "--window", "5:1"], "").status.code(), Some(1));
    assert_eq!(cli(&["--version"], "").status.code(), Some(0));
}

#[test]
fn identical_arguments_give_identical_bytes() {
    let args = ["betti", "--seed", "42", "--nvars", "4", "--max-gens", "6", "--max-deg", "5"];
    let first = cli(&args, "");
    for _ in 0..3 {
        assert_eq!(cli(&args, "").stdout, first.stdout);
    }
}

#[test]
fn hilbert_and_bounds() {
    let table = stdout(&cli(&["betti", "--ideal", "x^2,x*y,x*z^2", "--vars", "x,y,z", "--format", "json"], ""));
    let h: serde_json::Value =
        serde_json::from_str(&stdout(&cli(&["hilbert", "-", "--at", "2", "--format", "json"], &table))).unwrap();
    assert_eq!(h["at"]["value"], "4");
    assert_eq!(h["multiplicity"], "1");
    assert_eq!(h["codimension"], 1);

    let b: serde_json::Value =
        serde_json::from_str(&stdout(&cli(&["check-bounds", "-", "--format", "json"], &table))).unwrap();
    assert_eq!(b["bound_holds"], true);
    assert_eq!(b["equality"], false);
}
