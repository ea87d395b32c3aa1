//! Cop numbers found by the oracle next to the siege lower bound.

use grid_pursuit::oracle::{cop_number, siege_lower_bound, DEFAULT_BUDGET};
use grid_pursuit::GridSpec;

fn main() -> grid_pursuit::Result<()> {
    for spec in [
        GridSpec::grid(4, 4)?,
        GridSpec::grid(3, 5)?,
        GridSpec::semitorus(4, 5)?,
        GridSpec::semitorus(5, 5)?,
        GridSpec::torus(4, 4)?,
        GridSpec::torus(5, 5)?,
    ] {
        println!(
            "{spec:6} cop number {}  (siege bound {})",
            cop_number(&spec, DEFAULT_BUDGET)?,
            siege_lower_bound(&spec)
        );
    }
    Ok(())
}
