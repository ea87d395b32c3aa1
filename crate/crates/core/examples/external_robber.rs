//! A robber steered by caller code, here a fixed list standing in for a
//! person or another program.

use grid_pursuit::engine::run_game;
use grid_pursuit::strategies::ExternalRobber;
use grid_pursuit::{Algorithm, GridSpec, Move, StrategyController, Vertex};

fn main() -> grid_pursuit::Result<()> {
    let spec = GridSpec::grid(6, 7)?;
    let mut cops = StrategyController::new(Algorithm::Grid, &spec, 2)?;
    let mut plan = ["l", "l", "u", "stay", "right"].into_iter();
    let mut robber = ExternalRobber::new(|state: &grid_pursuit::GameState| {
        let cops: Vec<String> = state.cops.iter().map(ToString::to_string).collect();
        println!("round {}: cops {}, robber at {}", state.round, cops.join(" "), state.robber);
        plan.next().unwrap_or("stay").parse::<Move>()
    });
    let trace = run_game(spec, &mut cops, &mut robber, Vertex::new(5, 6), 50)?;
    println!("captured at t = {:?}", trace.capture_time());
    Ok(())
}
