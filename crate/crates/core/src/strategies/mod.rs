//! Cop algorithms and robber policies.
//!
//! Each algorithm is a pure function of the game state and a small
//! [`CopStrategyState`], so exhaustive search can memoize on the pair.
//! Algorithms compute in a local [`Frame`] where `m <= n` (planar grids and
//! tori) and cones open downwards; moves are mapped back before returning.

mod breakdown;
mod chase;
pub mod frame;
mod planar;
pub mod robber;
mod torus;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{ConeOrientation, CopController, GameState};
use crate::error::{Error, Result};
use crate::topology::{GridKind, GridSpec, Move, Vertex};

pub use breakdown::{chase_breakdown, ChaseBreakdown};
pub use frame::Frame;
pub use robber::{robber_policy_step, ExternalRobber, PolicyRobber, RobberPolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "grid")]
    Grid,
    #[serde(rename = "sgrid")]
    SGrid,
    #[serde(rename = "tgrid")]
    TGrid,
    #[serde(rename = "grid-k")]
    GridK,
    #[serde(rename = "sgrid-k")]
    SGridK,
    #[serde(rename = "tgrid-k")]
    TGridK,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Grid,
        Algorithm::SGrid,
        Algorithm::TGrid,
        Algorithm::GridK,
        Algorithm::SGridK,
        Algorithm::TGridK,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Grid => "grid",
            Algorithm::SGrid => "sgrid",
            Algorithm::TGrid => "tgrid",
            Algorithm::GridK => "grid-k",
            Algorithm::SGridK => "sgrid-k",
            Algorithm::TGridK => "tgrid-k",
        }
    }

    pub fn kind(self) -> GridKind {
        match self {
            Algorithm::Grid | Algorithm::GridK => GridKind::PlanarGrid,
            Algorithm::SGrid | Algorithm::SGridK => GridKind::SemiTorus,
            Algorithm::TGrid | Algorithm::TGridK => GridKind::Torus,
        }
    }

    /// The algorithm matched to a board kind and team size.
    pub fn for_board(kind: GridKind, k: usize) -> Result<Algorithm> {
        let alg = match (kind, k) {
            (GridKind::PlanarGrid, 2) => Algorithm::Grid,
            (GridKind::PlanarGrid, _) => Algorithm::GridK,
            (GridKind::SemiTorus, 2) => Algorithm::SGrid,
            (GridKind::SemiTorus, _) => Algorithm::SGridK,
            (GridKind::Torus, 3) => Algorithm::TGrid,
            (GridKind::Torus, _) => Algorithm::TGridK,
        };
        Ok(alg)
    }

    /// Checks the algorithm's board and team-size requirements.
    pub fn check(self, spec: &GridSpec, k: usize) -> Result<()> {
        let fail = |what: String| Err(Error::Config(format!("{}: {what}", self.as_str())));
        if spec.kind != self.kind() {
            return fail(format!("runs on {} boards, not {}", self.kind(), spec.kind));
        }
        let (lo, hi) = (spec.m.min(spec.n), spec.m.max(spec.n));
        match self {
            Algorithm::Grid if k != 2 => fail(format!("needs k = 2, got {k}")),
            Algorithm::Grid => Ok(()),
            Algorithm::GridK if k < 4 || k % 2 == 1 => fail(format!("needs an even k >= 4, got {k}")),
            Algorithm::GridK if lo < 4 => fail(format!("needs m, n >= 4 on {spec}")),
            Algorithm::GridK if hi < k / 2 => fail(format!("needs max(m, n) >= k/2 on {spec}")),
            Algorithm::GridK => Ok(()),
            Algorithm::SGrid if k != 2 => fail(format!("needs k = 2, got {k}")),
            Algorithm::SGrid if spec.m < 3 || spec.n < 4 => fail(format!("needs m >= 3, n >= 4 on {spec}")),
            Algorithm::SGrid => Ok(()),
            Algorithm::SGridK if k < 2 => fail(format!("needs k >= 2, got {k}")),
            Algorithm::SGridK if spec.m < 3 || spec.n < 2 * k => {
                fail(format!("needs m >= 3, n >= 2k on {spec} with k = {k}"))
            }
            Algorithm::SGridK => Ok(()),
            Algorithm::TGrid if k != 3 => fail(format!("needs k = 3, got {k}")),
            Algorithm::TGrid if lo < 6 => fail(format!("needs m, n >= 6 on {spec}")),
            Algorithm::TGrid => Ok(()),
            Algorithm::TGridK if k < 4 => fail(format!("needs k >= 4, got {k}")),
            Algorithm::TGridK if lo < 6 || hi < 2 * k => {
                fail(format!("needs min(m, n) >= 6, max(m, n) >= 2k on {spec} with k = {k}"))
            }
            Algorithm::TGridK => Ok(()),
        }
    }

    fn is_torus(self) -> bool {
        self.kind() == GridKind::Torus
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Guard,
    Chase,
    Done,
}

/// Everything a cop algorithm remembers between turns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CopStrategyState {
    pub algorithm: Algorithm,
    pub k: usize,
    /// Global-to-local transform (transposition only; flips are per turn).
    pub frame: Frame,
    pub phase: Phase,
    /// Guard cop index (torus algorithms).
    pub guard: Option<usize>,
    /// Cone orientation each cop last acted under, in global terms.
    pub orientations: Vec<Option<ConeOrientation>>,
    /// Cops bounding the robber's gap in the last turn.
    pub gap: Option<(usize, usize)>,
    /// Guard-phase target columns, in the local frame.
    pub targets: Vec<Option<usize>>,
    /// Local vertical orientation of the chase.
    pub heading: Option<ConeOrientation>,
}

impl CopStrategyState {
    fn local(&self, spec: &GridSpec) -> GridSpec {
        self.frame.local_spec(spec)
    }

    /// Short label of the current phase, recorded in traces.
    pub fn label(&self) -> String {
        let phase = match self.phase {
            Phase::Guard => "guard",
            Phase::Chase => "chase",
            Phase::Done => "done",
        };
        match self.guard {
            Some(g) => format!("{phase} g={}", g + 1),
            None => phase.to_string(),
        }
    }
}

/// Column offsets of `k` cops spread round `n` columns with the
/// `n - k` free columns split into gaps, larger gaps first.
pub(crate) fn slot_offsets(n: usize, k: usize) -> Vec<usize> {
    let free = n - k;
    let (q, r) = (free / k, free % k);
    (0..k).map(|i| i * (q + 1) + i.min(r)).collect()
}

fn base_frame(alg: Algorithm, spec: &GridSpec) -> Frame {
    if alg.kind() != GridKind::SemiTorus && spec.m > spec.n {
        Frame::transposed()
    } else {
        Frame::identity()
    }
}

/// Step 1 of the algorithm: where the cops start.
pub fn initial_placement(alg: Algorithm, spec: &GridSpec, k: usize) -> Result<(Vec<Vertex>, CopStrategyState)> {
    alg.check(spec, k)?;
    let frame = base_frame(alg, spec);
    let local = frame.local_spec(spec);
    let local_cops = match alg {
        Algorithm::Grid => planar::grid_placement(&local),
        Algorithm::GridK => planar::grid_k_placement(&local, k),
        Algorithm::SGrid | Algorithm::SGridK => {
            let row = (local.m - 1) / 2;
            slot_offsets(local.n, k).into_iter().map(|c| Vertex::new(row, c)).collect()
        }
        Algorithm::TGrid | Algorithm::TGridK => torus::placement(&local, k),
    };
    let cops = local_cops.iter().map(|&v| frame.to_global(spec, v)).collect();
    let state = CopStrategyState {
        algorithm: alg,
        k,
        frame,
        phase: if alg.is_torus() { Phase::Guard } else { Phase::Chase },
        guard: None,
        orientations: vec![None; k],
        gap: None,
        targets: vec![None; k],
        heading: None,
    };
    Ok((cops, state))
}

fn global_orientation(frame: Frame, local: ConeOrientation) -> ConeOrientation {
    match frame.move_to_global(local.advance()) {
        Move::Up => ConeOrientation::Up,
        Move::Down => ConeOrientation::Down,
        Move::Left => ConeOrientation::Left,
        _ => ConeOrientation::Right,
    }
}

/// One cop turn: the joint move and the updated strategy state.
///
/// Any cop adjacent to the robber takes it (lowest index first); otherwise
/// the algorithm's own rules apply.
pub fn strategy_step(state: &GameState, s: &CopStrategyState) -> Result<(Vec<Move>, CopStrategyState)> {
    if state.captured || s.phase == Phase::Done {
        return Err(Error::Strategy("the game is already over".into()));
    }
    if state.cops.len() != s.k {
        return Err(Error::Strategy(format!("{} cops on the board, state expects {}", state.cops.len(), s.k)));
    }
    if state.spec.kind != s.algorithm.kind() || s.frame != base_frame(s.algorithm, &state.spec) {
        return Err(Error::Strategy(format!("state does not belong to {}", state.spec)));
    }
    let spec = &state.spec;
    if let Some(i) = state.cops.iter().position(|&c| spec.adjacent(c, state.robber)) {
        let mut moves = vec![Move::Stay; s.k];
        moves[i] = Move::between(spec, state.cops[i], state.robber).expect("adjacent");
        let next = CopStrategyState {
            phase: Phase::Done,
            ..s.clone()
        };
        return Ok((moves, next));
    }

    let frame = s.frame;
    let local = s.local(spec);
    let cops: Vec<Vertex> = state.cops.iter().map(|&c| frame.to_local(spec, c)).collect();
    let robber = frame.to_local(spec, state.robber);
    let mut next = s.clone();
    let local_moves = match s.algorithm {
        Algorithm::Grid | Algorithm::GridK => {
            let st = planar::pairs_step(&local, &cops, robber);
            next.orientations = vec![st.heading.map(|o| global_orientation(frame, o)); s.k];
            next.gap = Some((2 * st.relevant[0], 2 * st.relevant[st.relevant.len() - 1] + 1));
            next.heading = st.heading;
            st.moves
        }
        Algorithm::SGrid | Algorithm::SGridK => {
            let z = cops[0].row;
            if cops.iter().all(|c| c.row == z) {
                if robber.row > z {
                    next.heading = Some(ConeOrientation::Down);
                } else if robber.row < z {
                    next.heading = Some(ConeOrientation::Up);
                }
            }
            let flip = next.heading == Some(ConeOrientation::Up);
            let view = Frame::identity().with_flip(flip);
            let flipped: Vec<Vertex> = cops.iter().map(|&c| view.to_local(&local, c)).collect();
            let chase: Vec<usize> = (0..s.k).collect();
            let st = chase::chase_down(&local, &flipped, &chase, view.to_local(&local, robber));
            next.orientations = vec![next.heading; s.k];
            next.gap = Some(st.pair);
            st.moves.into_iter().map(|mv| view.move_to_global(mv)).collect()
        }
        Algorithm::TGrid | Algorithm::TGridK => {
            let st = torus::step(torus::TorusInput {
                local,
                cops: &cops,
                robber,
                phase: s.phase,
                guard: s.guard,
                targets: &s.targets,
                heading: s.heading,
            })?;
            next.phase = st.phase;
            next.guard = st.guard;
            next.targets = st.targets;
            next.heading = st.heading;
            next.gap = st.pair;
            next.orientations = (0..s.k)
                .map(|i| match (st.heading, st.guard) {
                    (Some(h), Some(g)) if i != g => Some(global_orientation(frame, h)),
                    _ => None,
                })
                .collect();
            st.moves
        }
    };
    let moves = local_moves.into_iter().map(|mv| frame.move_to_global(mv)).collect();
    Ok((moves, next))
}

/// Start vertex of the proofs' adversarial robber, plus the vertex it
/// drifts to before standing still (torus algorithms only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RobberPlan {
    pub start: Vertex,
    pub target: Option<Vertex>,
}

/// The adversarial start vertex used in the capture-time proofs.
pub fn worst_case_robber_placement(alg: Algorithm, spec: &GridSpec, k: usize, cops: &[Vertex]) -> Result<Vertex> {
    Ok(worst_case_robber_plan(alg, spec, k, cops)?.start)
}

pub fn worst_case_robber_plan(alg: Algorithm, spec: &GridSpec, k: usize, cops: &[Vertex]) -> Result<RobberPlan> {
    alg.check(spec, k)?;
    if cops.len() != k {
        return Err(Error::Config(format!("{} cop positions for k = {k}", cops.len())));
    }
    let frame = base_frame(alg, spec);
    let local = frame.local_spec(spec);
    let (m, n) = (local.m, local.n);
    let free = |v: Vertex| cops.iter().all(|&c| spec.distance(c, v) > 1);
    let nearest = |v: Vertex| cops.iter().map(|&c| spec.distance(c, v)).min().unwrap_or(0);
    let (start, target) = match alg {
        Algorithm::Grid | Algorithm::GridK => {
            let corners = [(0, 0), (0, spec.n - 1), (spec.m - 1, 0), (spec.m - 1, spec.n - 1)].map(Vertex::from);
            let best = corners.into_iter().rev().max_by_key(|&v| nearest(v)).expect("four corners");
            (best, None)
        }
        Algorithm::SGrid | Algorithm::SGridK => {
            let r0 = (m - 1) / 2;
            let c = (n - k).div_ceil(2 * k);
            let v = if m / 2 <= c {
                Vertex::new(m - 1, m / 2)
            } else {
                Vertex::new(r0 + c, c)
            };
            (frame.to_global(spec, v), None)
        }
        Algorithm::TGrid | Algorithm::TGridK => {
            let p = n.div_ceil(k - 1);
            let row = if m <= p {
                m / 2
            } else if p % 2 == 0 {
                n.div_ceil(2 * (k - 1))
            } else {
                n / (2 * (k - 1))
            };
            let target_col = p.saturating_sub(row);
            let local_cops: Vec<Vertex> = cops.iter().map(|&c| frame.to_local(spec, c)).collect();
            let (lc, rc) = (local_cops[k - 1].col, local_cops[1].col);
            let start_col = if target_col < lc {
                lc + 1
            } else if target_col >= rc {
                rc - 1
            } else {
                target_col
            };
            let target = Vertex::new(row, target_col);
            let start = Vertex::new(row, start_col);
            let target = (target != start).then(|| frame.to_global(spec, target));
            (frame.to_global(spec, start), target)
        }
    };
    if free(start) {
        return Ok(RobberPlan { start, target });
    }
    let fallback = spec
        .vertices()
        .filter(|&v| free(v))
        .max_by_key(|&v| (nearest(v), std::cmp::Reverse(v)))
        .or_else(|| spec.vertices().find(|v| !cops.contains(v)))
        .ok_or_else(|| Error::Config(format!("no vertex of {spec} is free of cops")))?;
    Ok(RobberPlan {
        start: fallback,
        target: None,
    })
}

/// Adapts [`strategy_step`] to the engine's controller interface.
#[derive(Debug, Clone)]
pub struct StrategyController {
    initial: Vec<Vertex>,
    state: CopStrategyState,
}

impl StrategyController {
    pub fn new(alg: Algorithm, spec: &GridSpec, k: usize) -> Result<Self> {
        let (initial, state) = initial_placement(alg, spec, k)?;
        Ok(StrategyController { initial, state })
    }

    pub fn state(&self) -> &CopStrategyState {
        &self.state
    }
}

impl CopController for StrategyController {
    fn name(&self) -> String {
        self.state.algorithm.as_str().to_string()
    }

    fn initial_positions(&self) -> Vec<Vertex> {
        self.initial.clone()
    }

    fn step(&mut self, state: &GameState) -> Result<Vec<Move>> {
        let (moves, next) = strategy_step(state, &self.state)?;
        self.state = next;
        Ok(moves)
    }

    fn phase(&self) -> Option<String> {
        self.state.algorithm.is_torus().then(|| self.state.label())
    }
}
