use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_semiclose"));
    cmd.env_remove("SEMICLOSE_MAX_ORDER");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const S2: &str = r#"{"order": 2, "table": [[0, 0], [0, 1]], "names": ["0", "1"]}"#;

#[test]
fn analyze_finite_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "s2.json", S2);
    let out = run(&["analyze", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["finite"], true);
    assert_eq!(v["structure"]["idempotents"], serde_json::json!([0, 1]));
    assert_eq!(v["structure"]["reflection_order"], 2);

    let md = run(&[
        "analyze",
        "--table",
        path.to_str().unwrap(),
        "--format",
        "markdown",
    ]);
    assert_eq!(md.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&md.stdout).contains('|'));
}

#[test]
fn analyze_expression() {
    let v = json(&run(&["analyze", "--expr", "C(3)"]));
    assert_eq!(v["finite"], true);
    assert_eq!(v["structure"]["exponent"], 3);
    assert_eq!(v["structure"]["viable_idempotents"], serde_json::json!([0]));

    let v = json(&run(&["analyze", "--expr", "Prufer(3)"]));
    assert_eq!(v["finite"], false);
    assert_eq!(v["predicates"]["bounded"]["value"], "false");
    assert_eq!(v["predicates"]["periodic"]["value"], "true");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"order": 2, "table": [[1, 0], [0, 0]]}"#,
    );
    let out = run(&["analyze", "--table", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr)
        .to_lowercase()
        .contains("associative"));

    assert_eq!(
        run(&["classify", "--expr", "C(2) +"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["analyze", "--table", "/no/such/file"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "analyze",
            "--table",
            bad.to_str().unwrap(),
            "--expr",
            "C(2)"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
}

#[test]
fn classify_reports() {
    let v = json(&run(&["classify", "--expr", "Sum(omega, C(2))"]));
    assert_eq!(v["classes"]["C_closed"]["value"], "true");
    assert_eq!(v["classes"]["projectively_closed"]["value"], "true");
    assert_eq!(v["classes"]["absolutely_T2S_closed"]["value"], "false");
    let failing = v["classes"]["absolutely_T1S_closed"]["failing_conditions"]
        .as_array()
        .unwrap();
    assert!(failing.iter().any(|f| f == "X is finite"));

    let out = run(&["classify", "--expr", "OmegaChain", "--format", "markdown"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("| C_closed | false |"));

    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = run(&[
        "classify",
        "--expr",
        "C(2) * C(3)",
        "-o",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["classes"]["absolutely_T1S_closed"]["value"], "true");
}

#[test]
fn verify_suite() {
    let out = run(&["verify", "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["semigroups_checked"], 122);
    assert!(v["counterexamples"].as_array().unwrap().is_empty());

    let out = run(&[
        "verify",
        "--order",
        "4",
        "--commutative",
        "--up-to-iso",
        "--format",
        "markdown",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "--order", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SEMICLOSE_MAX_ORDER"));
}

#[test]
fn max_order_override() {
    let out = bin().args(["enumerate", "--order", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["enumerate", "--order", "2"])
        .env("SEMICLOSE_MAX_ORDER", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["enumerate", "--order", "3"])
        .env("SEMICLOSE_MAX_ORDER", "nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["enumerate", "--order", "5", "--commutative"])
        .env("SEMICLOSE_MAX_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let labelled = json(&out)["count"].as_u64().unwrap();

    // orbit-stabilizer over the dumped classes
    let out = run(&[
        "enumerate",
        "--order",
        "5",
        "--commutative",
        "--up-to-iso",
        "--dump",
    ]);
    let classes: Vec<Vec<Vec<usize>>> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| {
            serde_json::from_value(serde_json::from_str::<Value>(l).unwrap()["table"].clone())
                .unwrap()
        })
        .collect();
    assert_eq!(classes.len(), 325);
    let orbit_sum: u64 = classes.iter().map(|t| 120 / automorphisms(t)).sum();
    assert_eq!(labelled, orbit_sum);
}

fn automorphisms(t: &[Vec<usize>]) -> u64 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = t.len();
    perms(n)
        .iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[t[a][b]] == t[p[a]][p[b]])))
        .count() as u64
}

#[test]
fn enumerate_dump_round_trips() {
    let v = json(&run(&["enumerate", "--order", "3", "--up-to-iso"]));
    assert_eq!(v["count"], 24);

    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("dump.jsonl");
    let out = run(&[
        "enumerate",
        "--order",
        "2",
        "--dump",
        "-o",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dump).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    for (i, line) in lines.iter().enumerate() {
        let path = write(dir.path(), &format!("t{i}.json"), line);
        assert_eq!(
            run(&["analyze", "--table", path.to_str().unwrap()])
                .status
                .code(),
            Some(0)
        );
    }
}

#[test]
fn quotient_output_is_a_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["quotient", "--expr", "M(3,2)", "--ideal", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 3);
    let path = write(dir.path(), "q.json", &String::from_utf8_lossy(&out.stdout));
    let again = json(&run(&["analyze", "--table", path.to_str().unwrap()]));
    assert_eq!(again["structure"]["order"], 3);

    let v = json(&run(&[
        "quotient",
        "--expr",
        "C(2) * C(3)",
        "--pairs",
        "0:3",
    ]));
    assert_eq!(v["order"], 3);

    let s2 = write(dir.path(), "s2.json", S2);
    let v = json(&run(&[
        "quotient",
        "--table",
        s2.to_str().unwrap(),
        "--pairs",
        "0:1",
    ]));
    assert_eq!(v["order"], 1);

    assert_eq!(
        run(&["quotient", "--expr", "C(3)", "--ideal", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["quotient", "--expr", "OmegaChain", "--ideal", "0"])
            .status
            .code(),
        Some(2)
    );
}
