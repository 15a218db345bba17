// Running the built-in verification suites from code.

use nilhecke::error::Result;
use nilhecke::verify::{run_suite, Suite};

pub fn run_example() -> Result<()> {
    for suite in [Suite::Rank2, Suite::Bridge] {
        let report = run_suite(suite, None)?;
        println!("{report}");
        assert!(report.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
