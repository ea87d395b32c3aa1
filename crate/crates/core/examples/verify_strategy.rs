//! Exhaustive check of a strategy against every robber behaviour.
//!
//! The verifier explores the game tree with the cops' moves fixed by the
//! algorithm, so its answer is the true worst case of that algorithm.

use grid_pursuit::oracle::verify_strategy_worst_case;
use grid_pursuit::{Algorithm, GridSpec};

fn main() -> grid_pursuit::Result<()> {
    let cases = [
        (GridSpec::grid(4, 5)?, Algorithm::Grid, 2),
        (GridSpec::grid(5, 9)?, Algorithm::Grid, 2),
        (GridSpec::semitorus(4, 6)?, Algorithm::SGrid, 2),
        (GridSpec::semitorus(6, 9)?, Algorithm::SGrid, 2),
        (GridSpec::torus(7, 15)?, Algorithm::TGrid, 3),
    ];
    for (spec, alg, k) in cases {
        let report = verify_strategy_worst_case(&spec, alg, k)?;
        println!(
            "{spec:7} {alg:6} max t = {:?} from {} ({} positions)",
            report.max_t, report.worst_start, report.positions
        );
    }

    // The witness is an ordinary trace; print the robber's path.
    let report = verify_strategy_worst_case(&GridSpec::grid(4, 5)?, Algorithm::Grid, 2)?;
    let path: Vec<String> = report.witness.rounds.iter().map(|r| r.robber.to_string()).collect();
    println!("G4,5 witness: {} -> {}", report.worst_start, path.join(" -> "));
    Ok(())
}
