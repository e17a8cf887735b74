//! Acceptance run: one PASS/FAIL line per criterion. Criteria 1 to 9 are
//! groups of law suites; 10 drives the built binary.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use surreal_core::laws;

const SEED: u64 = 1;

const CRITERIA: [(&str, &[&str]); 9] = [
    ("dyadic field oracle", &["field-add-oracle", "field-mul-oracle", "field-neg-oracle"]),
    (
        "bracket oracle and transfinite brackets",
        &["bracket-dyadic-exhaustive", "bracket-dyadic-random", "bracket-transfinite-fixtures"],
    ),
    (
        "concatenation laws",
        &[
            "concat-add-associative",
            "concat-mul-associative",
            "concat-mul-units",
            "concat-left-distributive",
            "concat-mul-limit-continuity",
            "concat-add-sup-continuity",
            "concat-mul-simplicity-transfer",
            "concat-mul-order-transfer",
            "concat-add-cut-equation",
            "concat-mul-cut-equation",
            "concat-nonuniform-sum",
            "concat-nonuniform-product",
        ],
    ),
    ("length homomorphisms", &["length-add-homomorphism", "length-mul-homomorphism"]),
    (
        "structure recursion and Inc",
        &["structure-recursion-closed-forms", "structure-inc-fixture", "structure-inc-extensive"],
    ),
    ("fixed points", &["fix-shift", "fix-scale", "fix-iterated-images"]),
    ("purely infinite family", &["nosucc-family-identities", "nosucc-matches-simplicity"]),
    (
        "simple elements for translations",
        &["smp-translations-concat", "smp-translations-ordinals", "smp-translation-groups-agree"],
    ),
    ("omega map", &["omega-map-ordinals", "omega-map-inverse-fixture"]),
];

fn suite_group(names: &[&str]) -> Result<String, String> {
    let mut samples = 0;
    for name in names {
        let suite = laws::find(name).ok_or_else(|| format!("suite {name} missing"))?;
        let r = laws::run(&suite, SEED);
        if !r.passed() {
            let first = r.tally.failures.first().cloned().unwrap_or_default();
            return Err(format!("{name}: {}/{} failed, e.g. {first}", r.tally.failed, r.tally.samples));
        }
        samples += r.tally.samples;
    }
    Ok(format!("{} suites, {samples} samples", names.len()))
}

fn cli() -> Result<String, String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let want = std::fs::read(dir.join("corpus.out")).map_err(|e| e.to_string())?;
    let got = Command::new(env!("CARGO_BIN_EXE_surreal"))
        .arg("--file")
        .arg(dir.join("corpus.txt"))
        .output()
        .map_err(|e| e.to_string())?;
    if got.stdout != want {
        return Err("golden corpus output differs".into());
    }
    let all = Command::new(env!("CARGO_BIN_EXE_surreal"))
        .args(["--suite", "all", "--seed", &SEED.to_string()])
        .output()
        .map_err(|e| e.to_string())?;
    if !all.status.success() {
        return Err(format!("--suite all exited with {:?}", all.status.code()));
    }
    let expressions = String::from_utf8_lossy(&want).lines().count();
    Ok(format!("{expressions} golden expressions, {} suites", laws::suites().len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failed = 0;
    let results = CRITERIA
        .iter()
        .map(|(title, names)| (*title, suite_group(names)))
        .chain(std::iter::once(("command line", cli())));
    for (i, (title, result)) in results.enumerate() {
        match result {
            Ok(detail) => println!("PASS {:>2} {title} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed in {:.1}s", 10 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
