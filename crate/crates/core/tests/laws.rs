//! Every registered law suite passes under a fixed seed.

use surreal_core::laws;

#[test]
fn every_suite_passes() {
    let reports = laws::run_all(1);
    assert!(reports.len() >= 40);
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {}/{} failed {:?}", r.suite, r.tally.failed, r.tally.samples, r.tally.failures))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn suite_names_are_unique_and_described() {
    let suites = laws::suites();
    let mut names: Vec<&str> = suites.iter().map(|s| s.name).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), suites.len());
    assert!(suites.iter().all(|s| !s.statement.is_empty()));
    assert!(laws::find("field-add-oracle").is_some());
}

#[test]
fn other_seeds_pass_too() {
    for name in ["concat-left-distributive", "length-mul-homomorphism", "structure-inc-extensive"] {
        let r = laws::run(&laws::find(name).unwrap(), 7);
        assert!(r.passed(), "{name}: {:?}", r.tally.failures);
    }
}
