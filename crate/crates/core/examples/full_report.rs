//! Every check over all Mukai genera, as one report. Exits nonzero if anything fails.

use std::process::ExitCode;

use k3nl::{build_report, MukaiCatalog};

fn main() -> ExitCode {
    let report = build_report(&MukaiCatalog::default()).expect("default catalog covers all genera");
    for r in &report.genera {
        let gens: Vec<String> = r.generators.members.iter().map(|c| c.to_string()).collect();
        println!("g = {:>2}  rho = {:>2}  {}", r.genus, r.rho.rho, gens.join(" "));
    }
    let (pass, fail): (Vec<_>, Vec<_>) = report.all_checks().partition(|(_, c)| c.passed);
    for (g, c) in &fail {
        println!("FAIL g={g:?} {}: {}", c.name, c.detail);
    }
    println!("{} checks passed, {} failed", pass.len(), fail.len());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
