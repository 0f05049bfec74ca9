use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = "x1^4, x1^3*x2, x1^2*x2^2*x3, x1*x2^3, x2^4";

fn monass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = monass(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("monass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn golden_sequence() {
    let out = stdout(&["sequence", "x1*x2, x2*x3", "--max-n", "5"]);
    let want = "\
variables: x1, x2, x3
ideal: x1*x2, x2*x3
max n: 5
n\tAss(R/I^n)
1\t{(x2), (x1,x3)}
2\t{(x2), (x1,x3)}
3\t{(x2), (x1,x3)}
4\t{(x2), (x1,x3)}
5\t{(x2), (x1,x3)}
stab: 1 (confirmed)
pers: 1 (confirmed)
copers: 1 (confirmed)
window: 4
per-prime copersistence:
  (x2): 1
  (x1,x3): 1
";
    assert_eq!(out, want);
}

#[test]
fn golden_ass() {
    assert_eq!(
        stdout(&["ass", "x1^2"]),
        "variables: x1\nideal: x1^2\npower: 1\nassociated primes: (x1)\n"
    );
    let out = stdout(&["ass", EXAMPLE, "--power", "2"]);
    assert!(
        out.ends_with("power: 2\nassociated primes: (x1,x2)\n"),
        "{out}"
    );
    let out = stdout(&["ass", EXAMPLE]);
    assert!(
        out.ends_with("associated primes: (x1,x2), (x1,x2,x3)\n"),
        "{out}"
    );
}

#[test]
fn golden_bounds() {
    let out = stdout(&["bounds", EXAMPLE]);
    assert!(out.contains(
        "sigma1 raw: ceil 43945312500000000, squared 1931190490722656250000000000000000\n"
    ));
    assert!(out.contains("sigma2 raw: ceil 12768304823671, squared 163029608070172559946547200\n"));
    assert!(out.contains("ratio reduced exceeds 1e6: yes\n"));
    // 1125 * 50^8 > 4 * 10^16
    let ceil: u128 = out
        .lines()
        .find_map(|l| l.strip_prefix("sigma1 raw: ceil "))
        .and_then(|l| l.split(',').next())
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(ceil, 1125 * 50u128.pow(8));
    assert!(ceil > 4 * 10u128.pow(16));
}

#[test]
fn system_dump_and_delta() {
    let out = stdout(&["system", "x1, x2", "--power-kind", "power"]);
    assert_eq!(
        out,
        "power 3 5 2 2\n0 1 -1 0 0\n1 0 0 -1 0\n-1 -1 0 0 1\n0 0 0\n"
    );

    let file = tmp("sat.txt");
    let path = file.to_str().unwrap();
    stdout(&[
        "system",
        "x1^2, x1*x2",
        "--power-kind",
        "sat",
        "--sat-n",
        "3",
        "--dump",
        path,
    ]);
    let dump = std::fs::read_to_string(&file).unwrap();
    assert!(dump.starts_with("sat 6 7 4 2 3\n"), "{dump}");
    assert!(dump.ends_with("3 0 0 0 3 0\n"), "{dump}");

    let out = stdout(&["delta", path]);
    assert!(out.contains("exact: yes\n"), "{out}");
    let capped = stdout(&["delta", path, "--order-cap", "2"]);
    assert!(capped.contains("exact: no\n"), "{capped}");
    assert!(
        capped.contains("degree bound source: hadamard\n"),
        "{capped}"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(monass(&["ass", "x1^0"]).status.code(), Some(2));
    assert_eq!(monass(&["ass", "x1*y"]).status.code(), Some(2));
    assert_eq!(
        monass(&["ass", "x1, x3", "--vars", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(monass(&["ass", "{\"vars\": 2}"]).status.code(), Some(2));
    assert_eq!(
        monass(&["delta", "/nonexistent/system.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(monass(&["sequence", "x1"]).status.code(), Some(2));

    let bad = tmp("bad.txt");
    std::fs::write(&bad, "power 1 3 1 1\n1 2\n0\n").unwrap();
    let out = monass(&["delta", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    let out = monass(&["verify", "x1^2, x1*x2", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("result: ok\n"));
}

#[test]
fn vars_override_and_input_forms() {
    let out = stdout(&["ass", "x1^2", "--vars", "3"]);
    assert!(out.starts_with("variables: x1, x2, x3\n"), "{out}");
    let letters = stdout(&["ass", "a*b, b*c"]);
    assert!(
        letters.ends_with("associated primes: (b), (a,c)\n"),
        "{letters}"
    );
    let structured = stdout(&["ass", r#"{"vars":3,"generators":[[1,1,0],[0,1,1]]}"#]);
    assert_eq!(structured, stdout(&["ass", "x1*x2, x2*x3"]));
}

fn numeric_leaves(v: &Value, out: &mut BTreeSet<String>) {
    match v {
        Value::String(s) if is_number(s) => {
            out.insert(s.clone());
        }
        Value::Array(items) => items.iter().for_each(|x| numeric_leaves(x, out)),
        Value::Object(map) => map.values().for_each(|x| numeric_leaves(x, out)),
        Value::Number(n) => panic!("JSON number {n} should be a string"),
        _ => {}
    }
}

fn is_number(s: &str) -> bool {
    let mut parts = s.splitn(2, '/');
    let ok = |p: &str| {
        !p.is_empty()
            && p.trim_start_matches('-')
                .bytes()
                .all(|b| b.is_ascii_digit())
    };
    parts.next().is_some_and(ok) && parts.next().is_none_or(ok)
}

fn numeric_tokens(text: &str) -> BTreeSet<String> {
    text.split(|c: char| c.is_whitespace() || ",:(){}".contains(c))
        .filter(|t| is_number(t))
        .map(str::to_string)
        .collect()
}

#[test]
fn json_and_text_carry_the_same_numbers() {
    let file = tmp("colon.txt");
    let path = file.to_str().unwrap();
    stdout(&["system", EXAMPLE, "--power-kind", "colon", "--dump", path]);
    let runs: Vec<Vec<&str>> = vec![
        vec!["ass", EXAMPLE, "--power", "3"],
        vec!["sequence", EXAMPLE, "--max-n", "6"],
        vec!["sequence", "x1^2*x2, x1*x2^3, x2*x3", "--max-n", "4"],
        vec!["bounds", EXAMPLE],
        vec!["bounds", "x1^3*x2^2"],
        vec!["verify", "x1^2, x1*x2", "--max-n", "2"],
        vec!["delta", path, "--order-cap", "3"],
        vec![
            "system",
            "x1^2, x1*x2",
            "--power-kind",
            "sat",
            "--sat-n",
            "2",
        ],
    ];
    for args in runs {
        let text = stdout(&args);
        let mut json_args = args.clone();
        json_args.push("--json");
        let json: Value = serde_json::from_str(&stdout(&json_args)).unwrap();
        let mut from_json = BTreeSet::new();
        numeric_leaves(&json, &mut from_json);
        assert!(!from_json.is_empty(), "{args:?}");
        assert_eq!(from_json, numeric_tokens(&text), "{args:?}");
    }
}
