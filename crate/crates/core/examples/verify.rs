// Runs a verification suite and prints the report as JSON.

use dexter::config::{Caps, CapsPreset};
use dexter::suites::{run_suite, Suite};

pub fn run_example() -> dexter::Result<()> {
    let report = run_suite(Suite::Counts, &Caps::preset(CapsPreset::Small), 7)?;
    println!("{}", report.to_json());
    assert!(report.all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
