use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::{GameState, RobberController, Turn};
use crate::error::{Error, Result};
use crate::topology::{Move, Vertex};

/// How the robber chooses its moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RobberPolicy {
    /// The proofs' robber: stands still (or drifts to `target`) until a
    /// cop comes adjacent, then takes the safest free neighbour.
    PaperWorstCase { target: Option<Vertex> },
    /// Maximise distance to the nearest cop, then to the second nearest.
    GreedyEscape,
    /// Move `i` is played in round `i + 1`.
    Scripted(Vec<Move>),
    /// The caller supplies every move; see [`ExternalRobber`].
    ExternalChoice,
}

impl RobberPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            RobberPolicy::PaperWorstCase { .. } => "worst-case",
            RobberPolicy::GreedyEscape => "greedy",
            RobberPolicy::Scripted(_) => "scripted",
            RobberPolicy::ExternalChoice => "external",
        }
    }
}

fn distances(state: &GameState, v: Vertex) -> (usize, usize) {
    let mut d: Vec<usize> = state.cops.iter().map(|&c| state.spec.distance(c, v)).collect();
    d.sort_unstable();
    (d[0], d.get(1).copied().unwrap_or(d[0]))
}

fn threatened(state: &GameState, v: Vertex) -> bool {
    state.cops.iter().any(|&c| state.spec.distance(c, v) <= 1)
}

fn options(state: &GameState) -> impl Iterator<Item = (Move, Vertex)> + '_ {
    Move::ALL
        .into_iter()
        .filter_map(|mv| state.spec.step(state.robber, mv).map(|v| (mv, v)))
}

/// Moves tied for best under `key`, in tie-break order.
fn best_moves<K: Ord>(cands: impl Iterator<Item = (Move, Vertex)>, key: impl Fn(Vertex) -> K) -> Vec<Move> {
    let scored: Vec<(Move, K)> = cands.map(|(mv, v)| (mv, key(v))).collect();
    match scored.iter().map(|(_, k)| k).max() {
        Some(top) => scored.iter().filter(|(_, k)| k == top).map(|(mv, _)| *mv).collect(),
        None => Vec::new(),
    }
}

fn candidates(state: &GameState, policy: &RobberPolicy) -> Result<Vec<Move>> {
    if state.turn != Turn::RobberToMove || state.captured {
        return Err(Error::Policy("not the robber's turn".into()));
    }
    match policy {
        RobberPolicy::PaperWorstCase { target } => {
            if threatened(state, state.robber) {
                let safe = options(state).filter(|&(_, v)| !threatened(state, v));
                let best = best_moves(safe, |v| distances(state, v));
                return Ok(if best.is_empty() { vec![Move::Stay] } else { best });
            }
            let drift = target.and_then(|t| {
                let here = state.spec.distance(state.robber, t);
                options(state)
                    .find(|&(mv, v)| mv != Move::Stay && state.spec.distance(v, t) < here && !threatened(state, v))
                    .map(|(mv, _)| mv)
            });
            Ok(vec![drift.unwrap_or(Move::Stay)])
        }
        RobberPolicy::GreedyEscape => Ok(best_moves(options(state), |v| distances(state, v))),
        RobberPolicy::Scripted(script) => script
            .get(state.round.saturating_sub(1))
            .map(|&mv| vec![mv])
            .ok_or_else(|| Error::Policy(format!("script exhausted at round {}", state.round))),
        RobberPolicy::ExternalChoice => Err(Error::Policy("external policy needs a caller-supplied move".into())),
    }
}

/// The policy's move; ties are broken by the order Stay, Up, Down, Left, Right.
pub fn robber_policy_step(state: &GameState, policy: &RobberPolicy) -> Result<Move> {
    Ok(candidates(state, policy)?[0])
}

/// Runs a [`RobberPolicy`] inside the engine. With a seed, ties are
/// shuffled instead of broken by the fixed order.
#[derive(Debug, Clone)]
pub struct PolicyRobber {
    policy: RobberPolicy,
    rng: Option<ChaCha8Rng>,
}

impl PolicyRobber {
    pub fn new(policy: RobberPolicy) -> Self {
        PolicyRobber { policy, rng: None }
    }

    pub fn seeded(policy: RobberPolicy, seed: u64) -> Self {
        PolicyRobber {
            policy,
            rng: Some(ChaCha8Rng::seed_from_u64(seed)),
        }
    }
}

impl RobberController for PolicyRobber {
    fn name(&self) -> String {
        self.policy.name().to_string()
    }

    fn step(&mut self, state: &GameState) -> Result<Move> {
        let cands = candidates(state, &self.policy)?;
        Ok(match &mut self.rng {
            Some(rng) => *cands.choose(rng).expect("non-empty"),
            None => cands[0],
        })
    }
}

/// A robber driven by a closure.
pub struct ExternalRobber<F> {
    choose: F,
}

impl<F: FnMut(&GameState) -> Result<Move>> ExternalRobber<F> {
    pub fn new(choose: F) -> Self {
        ExternalRobber { choose }
    }
}

impl<F: FnMut(&GameState) -> Result<Move>> RobberController for ExternalRobber<F> {
    fn name(&self) -> String {
        "external".into()
    }

    fn step(&mut self, state: &GameState) -> Result<Move> {
        (self.choose)(state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::GridSpec;

    fn robber_turn(spec: GridSpec, cops: Vec<Vertex>, robber: Vertex) -> GameState {
        let mut s = GameState::new(spec, cops, robber).unwrap();
        s.turn = Turn::RobberToMove;
        s.round = 1;
        s
    }

    #[test]
    fn worst_case_stays_until_threatened() {
        let s = robber_turn(GridSpec::semitorus(6, 9).unwrap(), vec![Vertex::new(2, 0), Vertex::new(2, 5)], Vertex::new(4, 2));
        let p = RobberPolicy::PaperWorstCase { target: None };
        assert_eq!(robber_policy_step(&s, &p).unwrap(), Move::Stay);
    }

    #[test]
    fn worst_case_escapes_a_pre_siege_downwards() {
        let s = robber_turn(GridSpec::semitorus(6, 9).unwrap(), vec![Vertex::new(3, 4), Vertex::new(2, 6)], Vertex::new(3, 5));
        let p = RobberPolicy::PaperWorstCase { target: None };
        assert_eq!(robber_policy_step(&s, &p).unwrap(), Move::Down);
    }

    #[test]
    fn greedy_tie_break_is_fixed() {
        // symmetric position: Up and Down tie, Up wins
        let s = robber_turn(GridSpec::torus(5, 5).unwrap(), vec![Vertex::new(2, 0)], Vertex::new(2, 2));
        assert_eq!(robber_policy_step(&s, &RobberPolicy::GreedyEscape).unwrap(), Move::Up);
        let s = robber_turn(GridSpec::grid(5, 5).unwrap(), vec![Vertex::new(2, 2)], Vertex::new(0, 2));
        assert_eq!(robber_policy_step(&s, &RobberPolicy::GreedyEscape).unwrap(), Move::Left);
    }

    #[test]
    fn script_exhaustion_is_an_error() {
        let s = robber_turn(GridSpec::grid(5, 5).unwrap(), vec![Vertex::new(0, 0)], Vertex::new(4, 4));
        assert!(robber_policy_step(&s, &RobberPolicy::Scripted(vec![])).is_err());
        assert_eq!(robber_policy_step(&s, &RobberPolicy::Scripted(vec![Move::Up])).unwrap(), Move::Up);
    }
}
