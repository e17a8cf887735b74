use std::path::PathBuf;
use std::process::{Command, Output};

use surreal_cli::{parse, run_line, Env, Mode};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_surreal"))
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn corpus_matches_golden_output_byte_for_byte() {
    let want = std::fs::read(golden("corpus.out")).unwrap();
    let corpus = golden("corpus.txt");
    let first = bin().arg("--file").arg(&corpus).output().unwrap();
    let second = bin().arg("--file").arg(&corpus).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&first.stdout), String::from_utf8_lossy(&want));
    assert_eq!(first.stdout, second.stdout);
    // the corpus contains one empty cut
    assert_eq!(first.status.code(), Some(3));
}

#[test]
fn reference_expressions() {
    let env = Env::default();
    assert_eq!(run_line("xi(smp(translations(Z)), 1/2)", &env, Mode::Signs).unwrap(), "+^w -^w");
    assert_eq!(run_line("xi(inc, -2)", &env, Mode::Value).unwrap(), "11/16");
    assert_eq!(run_line("{0 | 1}", &env, Mode::Auto).unwrap(), "1/2");
}

#[test]
fn printing_and_reparsing_is_identity() {
    let text = std::fs::read_to_string(golden("corpus.txt")).unwrap();
    let extra = [
        "-(1 - 2) * 3",
        "--1",
        "{nats, 1/2 | xi(shift(w), neg_nats)}",
        "\"+^(w+1) -^3 +\"",
        "interval(No, _, -w)",
        "w^(w+1)*2+w+3 + 1",
    ];
    for line in text.lines().filter(|l| !l.starts_with(['#', ':'])).chain(extra) {
        let e = parse(line).unwrap();
        let printed = e.to_string();
        assert_eq!(parse(&printed).unwrap(), e, "{line} printed as {printed}");
        assert_eq!(parse(&printed).unwrap().to_string(), printed);
    }
}

#[test]
fn ordinal_literals_bind_tighter_than_spaced_operators() {
    let env = Env::default();
    assert_eq!(run_line("w+1", &env, Mode::Cnf).unwrap(), "w+1");
    // w + 1 is a field sum, which needs finite operands
    assert_eq!(run_line("w + 1", &env, Mode::Signs).unwrap_err().exit_code(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["{0 | 1}"]).status.code(), Some(0));
    assert_eq!(run(&["1 +"]).status.code(), Some(2));
    assert_eq!(run(&["1/3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate(1)"]).status.code(), Some(2));
    assert_eq!(run(&["{1 | 0}"]).status.code(), Some(3));
    assert_eq!(run(&["--render", "value", "{nats | }"]).status.code(), Some(3));
    assert_eq!(run(&["--render", "cnf", "1/2"]).status.code(), Some(3));
    assert_eq!(run(&["xi(smp(homotheties(ord)), 3)"]).status.code(), Some(4));
    assert_eq!(run(&["--budget", "5", "{nats | }"]).status.code(), Some(4));
    let ok = run(&["--budget", "w^(w^w)", "--render", "cnf", "xi(smp(homotheties(ord)), 3)"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "w^3\n");
}

#[test]
fn errors_carry_columns() {
    let env = Env::default();
    let err = run_line("cadd(1, xi(scale(-1), 2))", &env, Mode::Auto).unwrap_err();
    assert_eq!(err.to_string(), "error at column 12: operand must be positive");
    let err = run_line("{0 | 1} *", &env, Mode::Auto).unwrap_err();
    assert!(err.to_string().starts_with("parse error at column 10"), "{err}");
}

#[test]
fn json_lines() {
    let o = run(&["--json", "{0 | 1}", "{1 | 0}"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["output"], "1/2");
    assert_eq!(lines[1]["code"], 3);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn single_suite_report() {
    let o = run(&["--suite", "structure-inc-fixture", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["suite"], "structure-inc-fixture");
    assert_eq!(v[0]["passed"], true);
    assert_eq!(run(&["--suite", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn stdin_batch_with_directives() {
    use std::io::Write;
    let mut child = bin().stdin(std::process::Stdio::piped()).stdout(std::process::Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"# comment\n:render signs\n{0 | 1}\n:render bogus\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "+ -\nerror: unknown render mode `bogus`\n");
    assert_eq!(o.status.code(), Some(2));
}
