//! Runs each cop algorithm against the adversarial robber on a few boards
//! and prints the capture time beside the closed form.

use grid_pursuit::analysis::capture_time_formula;
use grid_pursuit::engine::{default_round_cap, run_game};
use grid_pursuit::strategies::{initial_placement, worst_case_robber_plan, PolicyRobber};
use grid_pursuit::{Algorithm, GridSpec, RobberPolicy, StrategyController};

fn main() -> grid_pursuit::Result<()> {
    let cases = [
        (GridSpec::grid(5, 9)?, Algorithm::Grid, 2),
        (GridSpec::grid(4, 13)?, Algorithm::GridK, 4),
        (GridSpec::semitorus(6, 9)?, Algorithm::SGrid, 2),
        (GridSpec::semitorus(6, 9)?, Algorithm::SGridK, 3),
        (GridSpec::torus(7, 15)?, Algorithm::TGrid, 3),
        (GridSpec::torus(7, 15)?, Algorithm::TGridK, 4),
    ];
    for (spec, alg, k) in cases {
        let (cops, _) = initial_placement(alg, &spec, k)?;
        let plan = worst_case_robber_plan(alg, &spec, k, &cops)?;
        let mut controller = StrategyController::new(alg, &spec, k)?;
        let mut robber = PolicyRobber::new(RobberPolicy::PaperWorstCase { target: plan.target });
        let trace = run_game(spec, &mut controller, &mut robber, plan.start, default_round_cap(&spec, k))?;
        let formula = capture_time_formula(&spec, k)?;
        println!(
            "{spec:7} {alg:8} k={k}  robber from {}  t={:?}  formula {}",
            plan.start,
            trace.capture_time(),
            formula.time
        );
    }
    Ok(())
}
