//! Closed-form capture times, lower bounds and work as a CSV table.

use grid_pursuit::analysis::{BoundsReport, PLACEMENT_SEARCH_BUDGET};
use grid_pursuit::GridSpec;

fn main() -> grid_pursuit::Result<()> {
    println!("{}", BoundsReport::csv_header());
    let rows = [
        (GridSpec::grid(4, 13)?, [2, 4]),
        (GridSpec::grid(4, 18)?, [2, 4]),
        (GridSpec::semitorus(6, 9)?, [2, 3]),
        (GridSpec::torus(7, 15)?, [3, 4]),
    ];
    for (spec, ks) in rows {
        for k in ks {
            println!("{}", BoundsReport::new(&spec, k, None, PLACEMENT_SEARCH_BUDGET).csv_row());
        }
    }

    // Torus rows also carry the exact round counts of the chase.
    let report = BoundsReport::new(&GridSpec::torus(7, 15)?, 3, None, PLACEMENT_SEARCH_BUDGET);
    print!("\n{}", report.to_text());
    Ok(())
}
