use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;
use surreal_cli::{run_line, CliError, Env, Mode};
use surreal_core::laws::{self, Report};
use surreal_core::Ordinal;

/// Exact calculator for surreal numbers written as sign sequences.
///
/// With expressions on the command line each is evaluated in turn.
/// Otherwise lines are read from --file or stdin; a line `:render MODE` or
/// `:budget ORDINAL` changes the setting for the lines after it, and
/// lines starting with `#` are skipped.
#[derive(Parser, Debug)]
#[command(name = "surreal", version)]
struct Args {
    /// Expressions to evaluate.
    exprs: Vec<String>,

    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    render: Mode,

    /// Length budget for brackets and simple-element maps, e.g. `w^(w^w)`.
    #[arg(long)]
    budget: Option<String>,

    /// Run a law suite by name, or `all`.
    #[arg(long)]
    suite: Option<String>,

    /// List the law suites and exit.
    #[arg(long)]
    list_suites: bool,

    /// Seed for randomized suites.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Print machine-readable JSON.
    #[arg(long)]
    json: bool,

    /// Read expressions from a file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
}

fn parse_budget(text: &str) -> Result<Ordinal, CliError> {
    text.trim().parse().map_err(|e: surreal_core::Error| CliError::parse(0, format!("budget: {e}")))
}

fn report_json(r: &Report) -> serde_json::Value {
    json!({
        "suite": r.suite,
        "statement": r.statement,
        "samples": r.tally.samples,
        "failed": r.tally.failed,
        "passed": r.passed(),
        "failures": r.tally.failures,
    })
}

fn run_suites(args: &Args, name: &str) -> ExitCode {
    let reports = if name == "all" {
        laws::run_all(args.seed)
    } else {
        match laws::find(name) {
            Some(s) => vec![laws::run(&s, args.seed)],
            None => {
                eprintln!("unknown suite `{name}`; see --list-suites");
                return ExitCode::from(2);
            }
        }
    };
    let passed = reports.iter().filter(|r| r.passed()).count();
    if args.json {
        println!("{}", serde_json::Value::Array(reports.iter().map(report_json).collect()));
    } else {
        for r in &reports {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            println!("{verdict} {:<34} {:>6} samples  {}", r.suite, r.tally.samples, r.statement);
            for f in &r.tally.failures {
                println!("     {f}");
            }
        }
        println!("{passed}/{} suites passed", reports.len());
    }
    if passed == reports.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

struct Session {
    env: Env,
    mode: Mode,
    json: bool,
    /// Exit code of the first failing line.
    status: i32,
}

impl Session {
    fn fail(&mut self, code: i32) {
        if self.status == 0 {
            self.status = code;
        }
    }

    /// Handles one batch line: a directive, a comment or an expression.
    fn line(&mut self, line: &str, out: &mut impl Write) -> io::Result<()> {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            return Ok(());
        }
        if let Some(rest) = t.strip_prefix(':') {
            let (cmd, arg) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let done = match cmd {
                "render" => arg.trim().parse().map(|m| self.mode = m),
                "budget" => parse_budget(arg).map(|b| self.env.budget = b).map_err(|e| e.to_string()),
                _ => Err(format!("unknown directive `:{cmd}`")),
            };
            if let Err(msg) = done {
                writeln!(out, "error: {msg}")?;
                self.fail(2);
            }
            return Ok(());
        }
        let result = run_line(t, &self.env, self.mode);
        if let Err(e) = &result {
            self.fail(e.exit_code());
        }
        if self.json {
            let v = match &result {
                Ok(s) => json!({ "input": t, "output": s }),
                Err(e) => json!({ "input": t, "error": e.to_string(), "code": e.exit_code() }),
            };
            writeln!(out, "{v}")
        } else {
            match result {
                Ok(s) => writeln!(out, "{s}"),
                Err(e) => writeln!(out, "error: {e}"),
            }
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_suites {
        for s in laws::suites() {
            println!("{:<34} {}", s.name, s.statement);
        }
        return ExitCode::SUCCESS;
    }
    if let Some(name) = &args.suite {
        return run_suites(&args, name);
    }
    let mut env = Env::default();
    if let Some(b) = &args.budget {
        match parse_budget(b) {
            Ok(b) => env.budget = b,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
        }
    }
    let mut session = Session { env, mode: args.render, json: args.json, status: 0 };
    let stdout = io::stdout();
    let mut out = stdout.lock();

    let written = if !args.exprs.is_empty() {
        args.exprs.iter().try_for_each(|e| session.line(e, &mut out))
    } else if let Some(path) = &args.file {
        match std::fs::read_to_string(path) {
            Ok(text) => text.lines().try_for_each(|l| session.line(l, &mut out)),
            Err(e) => {
                eprintln!("cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    } else {
        let stdin = io::stdin();
        let interactive = stdin.is_terminal();
        let mut result = Ok(());
        if interactive {
            let _ = write!(out, "> ");
            let _ = out.flush();
        }
        for line in stdin.lock().lines() {
            result = line.and_then(|l| session.line(&l, &mut out));
            if result.is_err() {
                break;
            }
            if interactive {
                let _ = write!(out, "> ");
                let _ = out.flush();
            }
        }
        result
    };
    if let Err(e) = written {
        eprintln!("{e}");
        return ExitCode::FAILURE;
    }
    ExitCode::from(session.status as u8)
}
