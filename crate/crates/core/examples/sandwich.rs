//! Lower bound, oracle optimum, strategy worst case and formula side by
//! side on small boards.

use grid_pursuit::oracle::{Sandwich, DEFAULT_BUDGET};
use grid_pursuit::{Algorithm, GridSpec};

fn main() -> grid_pursuit::Result<()> {
    let cases = [
        (GridSpec::grid(4, 5)?, Algorithm::Grid, 2),
        (GridSpec::grid(5, 6)?, Algorithm::Grid, 2),
        (GridSpec::grid(4, 6)?, Algorithm::GridK, 4),
        (GridSpec::semitorus(5, 6)?, Algorithm::SGrid, 2),
        (GridSpec::semitorus(4, 6)?, Algorithm::SGridK, 3),
        (GridSpec::torus(6, 6)?, Algorithm::TGrid, 3),
    ];
    for (spec, alg, k) in cases {
        let s = Sandwich::compute(&spec, alg, k, DEFAULT_BUDGET)?;
        let strategy = s.strategy.as_ref().map(|r| r.max_t);
        println!(
            "{spec:6} {alg:7} k={k}: lower {:?}  oracle {:?}  strategy {:?}  formula {:?}  {}",
            s.lower.as_ref().ok(),
            s.oracle.as_ref().ok().map(ToString::to_string),
            strategy.ok().flatten(),
            s.formula.as_ref().ok().map(ToString::to_string),
            if s.passed() { "ok" } else { "VIOLATED" }
        );
    }
    Ok(())
}
