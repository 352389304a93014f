//! Runs a scenario in-process and writes both report formats, the same
//! thing `symlab run` does.

use symplectic_lab::lab::{emit_report, run_checks, run_scenario, Format, RunOptions, Scenario};
use symplectic_lab::phase::Coord;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scenario = Scenario {
        schemes: vec![0, 1],
        observables: vec![Coord::X, Coord::Px],
        ..Scenario::default()
    };
    let report = run_scenario(&scenario, RunOptions { timestamp: false })?;
    let dir = std::env::temp_dir();
    emit_report(&report, Format::Csv, &dir.join("symlab_report.csv"))?;
    emit_report(&report, Format::Json, &dir.join("symlab_report.json"))?;
    println!("wrote {} cells to {}", report.cells.len(), dir.display());
    for w in &report.warnings {
        println!("warning: {w}");
    }

    let summary = run_checks(&Scenario { checks: symplectic_lab::lab::Checks { unitary: false, ..Default::default() }, ..scenario })?;
    print!("{summary}");
    Ok(())
}
