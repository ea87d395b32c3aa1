//! Exact optimal capture times from the retrograde solver, with a Bellman
//! spot check and a round trip through the binary table format.

use grid_pursuit::oracle::retrograde_solve;
use grid_pursuit::oracle::{ValueTable, DEFAULT_BUDGET};
use grid_pursuit::GridSpec;

fn main() -> grid_pursuit::Result<()> {
    for (spec, k) in [
        (GridSpec::grid(3, 3)?, 2),
        (GridSpec::grid(4, 4)?, 2),
        (GridSpec::semitorus(4, 6)?, 2),
        (GridSpec::torus(5, 5)?, 2),
        (GridSpec::torus(5, 5)?, 3),
    ] {
        let table = retrograde_solve(&spec, k, DEFAULT_BUDGET)?;
        let (value, cops) = table.optimum();
        let bellman = table.bellman_check(10_000, 7);
        println!(
            "{spec:6} k={k}  optimum {value:>3}  cops {}  states {}  bellman {}",
            cops.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            table.len(),
            if bellman.passed() { "ok" } else { "VIOLATED" }
        );
    }

    let table = retrograde_solve(&GridSpec::grid(4, 4)?, 2, DEFAULT_BUDGET)?;
    let mut blob = Vec::new();
    table.write_blob(&mut blob)?;
    let back = ValueTable::read_blob(blob.as_slice())?;
    println!("blob: {} bytes, optimum after reload {}", blob.len(), back.optimum().0);
    Ok(())
}
