use std::path::PathBuf;
use std::process::{Command, Output};

use planetrees::tables::{Table, TableKind};

fn planetrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planetrees"))
        .args(args)
        .env_remove("PLANETREES_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)).unwrap()
}

#[test]
fn counts() {
    for (spec, want) in [("N=2 e=5 d=2,3", "24\n"), ("N=7 e=6", "1028160\n"), ("N=1 e=0 d=0", "1\n"), ("N=3 e=2 d=1,1,1", "0\n")] {
        let out = planetrees(&["count", spec]);
        assert_eq!(out.status.code(), Some(0), "{spec}");
        assert_eq!(stdout(&out), want, "{spec}");
    }
}

#[test]
fn all_methods_print_one_value_and_a_banner() {
    let out = planetrees(&["count", "--method", "all", "N=3 e=6 d=3,1,4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], planetrees::count(&"N=3 e=6 d=3,1,4".parse().unwrap()).to_string());
    assert!(lines[1].starts_with("verified:"));
}

#[test]
fn tables_match_fixtures() {
    for kind in TableKind::ALL {
        let out = planetrees(&["table", kind.name()]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), fixture(&format!("{kind}.csv")), "{kind}");
    }
}

#[test]
fn table_dumps_round_trip() {
    for kind in TableKind::ALL {
        let csv = stdout(&planetrees(&["table", kind.name(), "--format", "csv"]));
        assert_eq!(Table::from_csv(kind, &csv).unwrap().to_csv(), csv);
        let json = stdout(&planetrees(&["table", kind.name(), "--format", "json"]));
        assert_eq!(Table::from_json(&json).unwrap().to_json(), json);
    }
}

#[test]
fn bfiles() {
    let out = planetrees(&["bfile", "A002054", "--terms", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), fixture("oeis/A002054.txt"));
    let out = planetrees(&["bfile", "A001763", "--terms", "13"]);
    assert_eq!(stdout(&out), fixture("oeis/A001763.txt"));
    // T_3(3) = 56 is not divisible by 3
    let out = planetrees(&["bfile", "A074922"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("56"));
}

#[test]
fn exit_codes() {
    assert_eq!(planetrees(&["count", "N=2 e=x"]).status.code(), Some(2));
    assert_eq!(planetrees(&["count", "N=2 e=5 d=0,1"]).status.code(), Some(2));
    assert_eq!(planetrees(&["table", "example55"]).status.code(), Some(2));
    assert_eq!(planetrees(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(planetrees(&[]).status.code(), Some(2));
    assert_eq!(planetrees(&["--method", "oracle", "--budget", "100", "count", "N=2 e=8"]).status.code(), Some(3));
    assert_eq!(planetrees(&["tree", "dump", "--edges", "20"]).status.code(), Some(3));
}

#[test]
fn budget_from_environment() {
    let run = |budget: &str| {
        Command::new(env!("CARGO_BIN_EXE_planetrees"))
            .args(["--method", "oracle", "count", "N=2 e=8"])
            .env("PLANETREES_BUDGET", budget)
            .output()
            .unwrap()
    };
    assert_eq!(run("100").status.code(), Some(3));
    let ok = run("5000");
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "19448\n");
    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_planetrees"))
        .args(["--method", "oracle", "--budget", "5000", "count", "N=2 e=8"])
        .env("PLANETREES_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_reports() {
    let out = planetrees(&["verify", "oracle", "--oracle-edges", "6", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("oracle: pass\n"));
    let out = planetrees(&["verify", "series", "--order", "10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["suite"], "series");
    assert_eq!(report["passed"], true);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("planetrees-{}.csv", std::process::id()));
    let out = planetrees(&["table", "example53", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), fixture("example53.csv"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn dumps() {
    let out = planetrees(&["series", "dump", "--roots", "2", "--order", "5", "--recursive"]);
    let closed = planetrees(&["series", "dump", "--roots", "2", "--order", "5"]);
    assert_eq!(out.stdout, closed.stdout);
    assert!(stdout(&out).lines().any(|l| l == "5 2 3 : 24/1"));
    let trees = stdout(&planetrees(&["tree", "dump", "--edges", "4"]));
    assert_eq!(trees.lines().count(), 14);
}
