use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const BROKEN: &str = "field = Q\ndim = 2\nbasis = [e1, e2]\ntable = [\n  [0, 0, [1, 1]],\n  [0, 1, [0, 1]],\n]\n";

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let ex1 = dir.path().join("example1.txt");
    let emitted = leibniz(&["corpus", "emit", "example1", "-o", ex1.to_str().unwrap()]);
    assert_eq!(code(&emitted), 0);
    let ex1 = ex1.to_str().unwrap();
    let broken = write(dir.path(), "broken.txt", BROKEN);
    let broken = broken.to_str().unwrap();
    let garbled = write(dir.path(), "garbled.txt", "field = Q\ndim = two\n");
    let garbled = garbled.to_str().unwrap();
    let f17 = write(dir.path(), "f17.txt", "field = F17\ndim = 1\ntable = []\n");
    let f17 = f17.to_str().unwrap();

    let cases: &[(&[&str], i32)] = &[
        (&["validate", ex1], 0),
        (&["info", ex1], 0),
        (&["kernel", ex1], 0),
        (&["liesation", ex1], 0),
        (&["series", ex1], 0),
        (&["nilradical", ex1], 0),
        (&["radical", ex1], 0),
        (&["quotient", ex1], 0),
        (&["find-b", ex1], 0),
        (&["verify", ex1], 0),
        (&["verify", ex1, "--b", "1,0"], 0),
        (&["oracle-scan", ex1, "--field", "F3"], 0),
        (&["frattini", ex1, "--field", "F3"], 0),
        (&["corpus", "list"], 0),
        (&["nilradical", "--corpus", "abelian(3)"], 0),
        (&["verify", "--corpus", "nilcyclic2"], 0),
        (&["validate", broken], 1),
        (&["kernel", broken], 1),
        (&["validate", garbled], 2),
        (&["validate", "/nonexistent/file"], 2),
        (&["kernel"], 2),
        (&["kernel", ex1, "--corpus", "sl2"], 2),
        (&["kernel", ex1, "--bogus"], 2),
        (&["nosuchverb"], 2),
        (&["kernel", "--corpus", "nope"], 2),
        (&["quotient", ex1, "--rows", "1,0"], 2),
        (&["quotient", ex1, "--rows", "1,0,0"], 2),
        (&["kernel", f17], 3),
        (&["info", ex1, "--field", "F17"], 3),
        (&["frattini", ex1], 3),
        (&["oracle-scan", ex1], 3),
        (&["verify", ex1, "--field", "F3"], 0),
        (&["oracle-scan", "--corpus", "abelian(3)", "--field", "F3", "--budget", "10"], 3),
    ];
    for (args, want) in cases {
        let out = leibniz(args);
        assert_eq!(
            code(&out),
            *want,
            "{args:?}\nstdout: {}\nstderr: {}",
            stdout(&out),
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn verify_example1_reproduces_the_counterexample() {
    let out = leibniz(&["verify", "--corpus", "example1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("verdict formula_equal: true"));
    assert!(text.contains("fact kernel_quotient_equal: false"));
    assert!(text.contains("notice: lemma1: premise not applicable"));
}

#[test]
fn validate_reports_failing_triple() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.txt", BROKEN);
    let out = leibniz(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("witness: (e1, e1, e1)"));
}

#[test]
fn parse_errors_carry_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "g.txt", "field = Q\ndim = 2\ntable = [[0, 0, [1, 1, 0]]]\n");
    let out = leibniz(&["kernel", p.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("g.txt:3:"), "{err}");
    assert!(err.contains("zero denominator"), "{err}");
}

#[test]
fn unsupported_field_names_alternatives() {
    let out = leibniz(&["oracle-scan", "--corpus", "sl2"]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("lattice scan") && err.contains("F2"), "{err}");
}

#[test]
fn nilradical_of_abelian_is_everything() {
    let out = leibniz(&["nilradical", "--corpus", "abelian(3)"]);
    assert!(stdout(&out).contains("subspace nilradical (ambient 3): [[1, 0, 0], [0, 1, 0], [0, 0, 1]]"));
}

#[test]
fn emitted_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["example1", "example2(3,1)", "cyclic3", "example1+sl2"] {
        let text = stdout(&leibniz(&["corpus", "emit", name]));
        let p = write(dir.path(), "a.txt", &text);
        let out = leibniz(&["liesation", p.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{name}");
        let again = stdout(&leibniz(&["corpus", "emit", name]));
        assert_eq!(text, again);
    }
}

/// Every `kind name: value` line of the text output, with sections
/// prefixed by their check name.
fn text_lines(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = String::new();
    let mut in_algebra = false;
    for line in text.lines() {
        if line.starts_with("[algebra") {
            in_algebra = true;
            continue;
        }
        if line == "[section]" || line.is_empty() {
            continue;
        }
        if in_algebra {
            continue;
        }
        if let Some(c) = line.strip_prefix("check: ") {
            check = c.to_string();
        }
        out.push(format!("{check}/{line}"));
    }
    out
}

fn json_lines(v: &Value) -> Vec<String> {
    fn report(r: &Value, out: &mut Vec<String>) {
        let check = r["check"].as_str().unwrap();
        out.push(format!("{check}/check: {check}"));
        out.push(format!("{check}/field: {}", r["field"].as_str().unwrap()));
        out.push(format!("{check}/status: {}", r["status"].as_str().unwrap()));
        for (kind, key) in [("premise", "premises"), ("verdict", "verdicts"), ("fact", "facts")] {
            for p in r[key].as_array().unwrap() {
                out.push(format!("{check}/{kind} {}: {}", p["name"].as_str().unwrap(), p["holds"]));
            }
        }
        for p in r["values"].as_array().unwrap() {
            out.push(format!("{check}/value {}: {}", p["name"].as_str().unwrap(), p["value"].as_str().unwrap()));
        }
        for s in r["subspaces"].as_array().unwrap() {
            let rows: Vec<String> = s["basis"]
                .as_array()
                .unwrap()
                .iter()
                .map(|row| {
                    let xs: Vec<&str> = row.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
                    format!("[{}]", xs.join(", "))
                })
                .collect();
            out.push(format!(
                "{check}/subspace {} (ambient {}): [{}]",
                s["name"].as_str().unwrap(),
                s["ambient_dim"],
                rows.join(", ")
            ));
        }
        for w in r["witnesses"].as_array().unwrap() {
            out.push(format!("{check}/witness: {}", w.as_str().unwrap()));
        }
        for n in r["notices"].as_array().unwrap() {
            out.push(format!("{check}/notice: {}", n.as_str().unwrap()));
        }
    }
    let mut out = Vec::new();
    report(v, &mut out);
    if let Some(sections) = v.get("sections") {
        for s in sections.as_array().unwrap() {
            report(s, &mut out);
        }
    }
    out
}

#[test]
fn json_and_text_outputs_agree() {
    let runs: &[&[&str]] = &[
        &["verify", "--corpus", "example1"],
        &["verify", "--corpus", "example2(2,1)"],
        &["verify", "--corpus", "sl2"],
        &["nilradical", "--corpus", "cyclic3", "-v"],
        &["radical", "--corpus", "example1+sl2"],
        &["series", "--corpus", "example1"],
        &["info", "--corpus", "heisenberg"],
        &["frattini", "--corpus", "heisenberg", "--field", "F2"],
        &["oracle-scan", "--corpus", "example2(2,1)", "--field", "F3"],
        &["quotient", "--corpus", "example1", "--ideal", "nilradical"],
        &["find-b", "--corpus", "example1"],
        &["corpus", "list"],
    ];
    for args in runs {
        let text = leibniz(args);
        let mut json_args = args.to_vec();
        json_args.extend(["--format", "json"]);
        let json = leibniz(&json_args);
        assert_eq!(code(&text), code(&json), "{args:?}");
        let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
        assert_eq!(text_lines(&stdout(&text)), json_lines(&v), "{args:?}");
        if let Some(algs) = v.get("algebras") {
            for a in algs.as_array().unwrap() {
                assert!(stdout(&text).contains(a["text"].as_str().unwrap()));
            }
        }
    }
}
