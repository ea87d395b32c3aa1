//! Writes a game as line-delimited JSON, reads it back and replays it.

use grid_pursuit::engine::run_game_seeded;
use grid_pursuit::strategies::PolicyRobber;
use grid_pursuit::{Algorithm, GridSpec, RobberPolicy, StrategyController, Trace, Vertex};

fn main() -> grid_pursuit::Result<()> {
    let spec = GridSpec::semitorus(5, 8)?;
    let mut cops = StrategyController::new(Algorithm::SGrid, &spec, 2)?;
    let mut robber = PolicyRobber::seeded(RobberPolicy::GreedyEscape, 42);
    let trace = run_game_seeded(spec, &mut cops, &mut robber, Vertex::new(4, 6), 200, Some(42))?;

    let text = trace.to_jsonl();
    print!("{text}");

    let back = Trace::read_jsonl(text.as_bytes())?;
    assert_eq!(back, trace);
    let end = back.replay()?;
    println!("replayed: captured={} after {} rounds", end.captured, end.round);
    Ok(())
}
