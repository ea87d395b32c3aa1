//! Game state machine, structural predicates and the simulation loop.
//!
//! A round is a cops turn followed by a robber turn. The capture time is
//! the 1-based index of the cop turn that lands on the robber; a robber
//! that walks onto a cop is captured in the current round.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::{GridSpec, Move, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    CopsToMove,
    RobberToMove,
}

/// Positions of the cops and the robber plus the round counter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub spec: GridSpec,
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
    pub round: usize,
    pub turn: Turn,
    pub captured: bool,
}

impl GameState {
    /// Initial state (round 0, cops to move).
    pub fn new(spec: GridSpec, cops: Vec<Vertex>, robber: Vertex) -> Result<Self> {
        if cops.is_empty() {
            return Err(Error::Config("at least one cop is required".into()));
        }
        for &v in cops.iter().chain(std::iter::once(&robber)) {
            if !spec.contains(v) {
                return Err(Error::Config(format!("{v} is not on {spec}")));
            }
        }
        let captured = cops.contains(&robber);
        Ok(GameState {
            spec,
            cops,
            robber,
            round: 0,
            turn: Turn::CopsToMove,
            captured,
        })
    }

    pub fn k(&self) -> usize {
        self.cops.len()
    }

    /// Moves all cops simultaneously and advances the round counter.
    pub fn apply_cops_turn(&self, moves: &[Move]) -> Result<GameState> {
        self.expect_turn(Turn::CopsToMove)?;
        if moves.len() != self.cops.len() {
            return Err(Error::IllegalMove(format!(
                "{} moves for {} cops",
                moves.len(),
                self.cops.len()
            )));
        }
        let mut cops = Vec::with_capacity(self.cops.len());
        for (i, (&c, &mv)) in self.cops.iter().zip(moves).enumerate() {
            let to = self.spec.step(c, mv).ok_or_else(|| {
                Error::IllegalMove(format!("cop {} at {c} cannot move {mv:?}", i + 1))
            })?;
            cops.push(to);
        }
        let captured = cops.contains(&self.robber);
        Ok(GameState {
            spec: self.spec,
            cops,
            robber: self.robber,
            round: self.round + 1,
            turn: Turn::RobberToMove,
            captured,
        })
    }

    pub fn apply_robber_turn(&self, mv: Move) -> Result<GameState> {
        self.expect_turn(Turn::RobberToMove)?;
        let robber = self.spec.step(self.robber, mv).ok_or_else(|| {
            Error::IllegalMove(format!("robber at {} cannot move {mv:?}", self.robber))
        })?;
        let captured = self.cops.contains(&robber);
        Ok(GameState {
            spec: self.spec,
            cops: self.cops.clone(),
            robber,
            round: self.round,
            turn: Turn::CopsToMove,
            captured,
        })
    }

    fn expect_turn(&self, turn: Turn) -> Result<()> {
        if self.captured {
            return Err(Error::IllegalMove("the game is already over".into()));
        }
        if self.turn != turn {
            return Err(Error::IllegalMove(format!("it is not {turn:?}")));
        }
        Ok(())
    }

    pub fn is_siege(&self) -> bool {
        is_siege(&self.spec, &self.cops, self.robber)
    }

    /// Whether cops `c1` and `c2` hold the robber in a downward pre-siege
    /// (either chirality).
    pub fn is_pre_siege(&self, c1: usize, c2: usize) -> bool {
        match (self.cops.get(c1), self.cops.get(c2)) {
            (Some(&a), Some(&b)) => {
                pre_siege_escape(&self.spec, self.robber, a, b) == Some(Move::Down)
            }
            _ => false,
        }
    }

    /// Whether any ordered pair of cops forms a pre-siege in any orientation.
    pub fn any_pre_siege(&self) -> bool {
        any_pre_siege(&self.spec, &self.cops, self.robber)
    }
}

/// Siege covering test: some cop is adjacent to `v` and the cops' closed
/// neighbourhoods cover N(v). Minimality is not required.
pub fn is_siege(spec: &GridSpec, cops: &[Vertex], v: Vertex) -> bool {
    let adjacent = cops.iter().any(|&c| spec.adjacent(c, v));
    adjacent
        && spec
            .neighbors(v)
            .into_iter()
            .all(|w| cops.iter().any(|&c| spec.distance(c, w) <= 1))
}

/// Size of the smallest vertex set forming a siege of `v`, by exhaustive
/// search over sets of up to four vertices within distance 2 of `v`.
pub fn minimal_siege_cardinality(spec: &GridSpec, v: Vertex) -> usize {
    let candidates: Vec<Vertex> = spec
        .vertices()
        .filter(|&w| w != v && spec.distance(v, w) <= 2)
        .collect();
    let mut chosen = Vec::with_capacity(4);
    for size in 1..=4 {
        if subset_search(spec, v, &candidates, 0, size, &mut chosen) {
            return size;
        }
    }
    // Four cops on the four neighbours always form a siege.
    unreachable!("every vertex of a grid board has a siege of size <= 4")
}

fn subset_search(
    spec: &GridSpec,
    v: Vertex,
    candidates: &[Vertex],
    start: usize,
    size: usize,
    chosen: &mut Vec<Vertex>,
) -> bool {
    if chosen.len() == size {
        return is_siege(spec, chosen, v);
    }
    for i in start..candidates.len() {
        chosen.push(candidates[i]);
        let found = subset_search(spec, v, candidates, i + 1, size, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// If `c1` and `c2` form a pre-siege around `robber`, returns the single
/// escape direction left to the robber.
///
/// For escape `Down` the shape is `c1` beside the robber and `c2` one row
/// up on the other side; the other orientations are rotations of it.
pub fn pre_siege_escape(spec: &GridSpec, robber: Vertex, c1: Vertex, c2: Vertex) -> Option<Move> {
    for escape in Move::DIRECTIONS {
        let sides: [Move; 2] = match escape {
            Move::Up | Move::Down => [Move::Left, Move::Right],
            _ => [Move::Up, Move::Down],
        };
        for side in sides {
            let Some(beside) = spec.step(robber, side) else {
                continue;
            };
            let behind = spec
                .step(robber, escape.opposite())
                .and_then(|b| spec.step(b, side.opposite()));
            if beside == c1 && behind == Some(c2) {
                return Some(escape);
            }
        }
    }
    None
}

pub fn any_pre_siege(spec: &GridSpec, cops: &[Vertex], robber: Vertex) -> bool {
    cops.iter().enumerate().any(|(i, &a)| {
        cops.iter()
            .enumerate()
            .any(|(j, &b)| i != j && pre_siege_escape(spec, robber, a, b).is_some())
    })
}

/// Direction a shadow cone opens towards, seen from its apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConeOrientation {
    Down,
    Up,
    Left,
    Right,
}

impl ConeOrientation {
    pub const ALL: [ConeOrientation; 4] = [
        ConeOrientation::Down,
        ConeOrientation::Up,
        ConeOrientation::Left,
        ConeOrientation::Right,
    ];

    /// The move that advances a cop into its own cone.
    pub fn advance(self) -> Move {
        match self {
            ConeOrientation::Down => Move::Down,
            ConeOrientation::Up => Move::Up,
            ConeOrientation::Left => Move::Left,
            ConeOrientation::Right => Move::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConeRelation {
    Outside,
    OnEdge,
    Within,
}

impl ConeRelation {
    /// Inside the cone, edges included.
    pub fn is_in(self) -> bool {
        self != ConeRelation::Outside
    }
}

/// Window of consecutive indices on one wrapped axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AxisWindow {
    pub start: usize,
    pub len: usize,
}

/// Unwraps wrapped coordinates into integer windows so that cone
/// geometry can be evaluated as on a plane. Non-wrapped axes ignore
/// their window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ConeFrame {
    pub rows: Option<AxisWindow>,
    pub cols: Option<AxisWindow>,
}

impl ConeFrame {
    pub fn planar() -> Self {
        Self::default()
    }

    fn unwrap_axis(
        window: Option<AxisWindow>,
        wraps: bool,
        size: usize,
        x: usize,
        v: Vertex,
    ) -> Result<isize> {
        match (wraps, window) {
            (false, _) => Ok(x as isize),
            (true, None) => Err(Error::Frame(format!("{v}: wrapped axis has no window"))),
            (true, Some(w)) => {
                let off = (x + size - w.start % size) % size;
                if off < w.len.min(size) {
                    Ok(w.start as isize + off as isize)
                } else {
                    Err(Error::Frame(format!("{v}")))
                }
            }
        }
    }

    pub fn unwrap(&self, spec: &GridSpec, v: Vertex) -> Result<(isize, isize)> {
        let r = Self::unwrap_axis(self.rows, spec.kind.wraps_rows(), spec.m, v.row, v)?;
        let c = Self::unwrap_axis(self.cols, spec.kind.wraps_cols(), spec.n, v.col, v)?;
        Ok((r, c))
    }
}

/// Classifies `q` against the ±45° cone with apex `apex`.
pub fn cone_membership(
    spec: &GridSpec,
    apex: Vertex,
    orientation: ConeOrientation,
    frame: &ConeFrame,
    q: Vertex,
) -> Result<ConeRelation> {
    let (ar, ac) = frame.unwrap(spec, apex)?;
    let (qr, qc) = frame.unwrap(spec, q)?;
    let (depth, offset) = match orientation {
        ConeOrientation::Down => (qr - ar, qc - ac),
        ConeOrientation::Up => (ar - qr, qc - ac),
        ConeOrientation::Right => (qc - ac, qr - ar),
        ConeOrientation::Left => (ac - qc, qr - ar),
    };
    Ok(classify(depth, offset.unsigned_abs() as isize))
}

/// Cone relation from a signed depth along the cone axis and an absolute
/// lateral offset.
pub fn classify(depth: isize, offset: isize) -> ConeRelation {
    if depth > offset {
        ConeRelation::Within
    } else if depth == offset && depth > 0 {
        ConeRelation::OnEdge
    } else {
        ConeRelation::Outside
    }
}

/// Decides the cops' joint move each round.
pub trait CopController {
    fn name(&self) -> String;
    fn initial_positions(&self) -> Vec<Vertex>;
    fn step(&mut self, state: &GameState) -> Result<Vec<Move>>;
    /// Optional phase label recorded in the trace after each cop turn.
    fn phase(&self) -> Option<String> {
        None
    }
}

/// Decides the robber's move each round.
pub trait RobberController {
    fn name(&self) -> String;
    fn step(&mut self, state: &GameState) -> Result<Move>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Captured,
    NoCapture,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceHeader {
    pub spec: GridSpec,
    pub algorithm: String,
    pub k: usize,
    pub robber_policy: String,
    #[serde(default)]
    pub seed: Option<u64>,
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub round: usize,
    pub cop_moves: Vec<Move>,
    pub cops: Vec<Vertex>,
    /// `None` when the cop turn captured the robber.
    pub robber_move: Option<Move>,
    pub robber: Vertex,
    pub siege: bool,
    pub pre_siege: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFooter {
    pub outcome: Outcome,
    pub t: Option<usize>,
}

/// Replayable log of one game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub header: TraceHeader,
    pub rounds: Vec<RoundRecord>,
    pub footer: TraceFooter,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum TraceLine {
    Header(TraceHeader),
    Round(RoundRecord),
    Footer(TraceFooter),
}

impl Trace {
    pub fn capture_time(&self) -> Option<usize> {
        self.footer.t
    }

    pub fn initial_state(&self) -> Result<GameState> {
        GameState::new(self.header.spec, self.header.cops.clone(), self.header.robber)
    }

    /// Writes the trace as line-delimited JSON: header, rounds, footer.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer(&mut out, &TraceLine::Header(self.header.clone()))?;
        out.write_all(b"\n")?;
        for r in &self.rounds {
            serde_json::to_writer(&mut out, &TraceLine::Round(r.clone()))?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, &TraceLine::Footer(self.footer.clone()))?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("json is utf-8")
    }

    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Trace> {
        let mut header = None;
        let mut rounds = Vec::new();
        let mut footer = None;
        for line in input.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str(&line)? {
                TraceLine::Header(h) if header.is_none() => header = Some(h),
                TraceLine::Round(r) if header.is_some() && footer.is_none() => rounds.push(r),
                TraceLine::Footer(f) if header.is_some() && footer.is_none() => footer = Some(f),
                _ => return Err(Error::Trace("records out of order".into())),
            }
        }
        match (header, footer) {
            (Some(header), Some(footer)) => Ok(Trace {
                header,
                rounds,
                footer,
            }),
            _ => Err(Error::Trace("missing header or footer".into())),
        }
    }

    /// Re-applies every recorded move from the initial state and checks
    /// positions, flags and the outcome against the record.
    pub fn replay(&self) -> Result<GameState> {
        let mut state = self.initial_state()?;
        for (i, rec) in self.rounds.iter().enumerate() {
            if state.captured {
                return Err(Error::Trace(format!("round {} recorded after capture", rec.round)));
            }
            if rec.round != i + 1 {
                return Err(Error::Trace(format!("round {} out of sequence", rec.round)));
            }
            state = state.apply_cops_turn(&rec.cop_moves)?;
            if state.cops != rec.cops {
                return Err(Error::Trace(format!("cop positions differ in round {}", rec.round)));
            }
            if let Some(mv) = rec.robber_move {
                state = state.apply_robber_turn(mv)?;
            } else if !state.captured {
                return Err(Error::Trace(format!("robber move missing in round {}", rec.round)));
            }
            if state.robber != rec.robber {
                return Err(Error::Trace(format!("robber position differs in round {}", rec.round)));
            }
            let (siege, pre) = flags(&state);
            if siege != rec.siege || pre != rec.pre_siege {
                return Err(Error::Trace(format!("flags differ in round {}", rec.round)));
            }
        }
        let t = state.captured.then_some(state.round);
        let outcome = if state.captured {
            Outcome::Captured
        } else {
            Outcome::NoCapture
        };
        if t != self.footer.t || outcome != self.footer.outcome {
            return Err(Error::Trace("footer does not match the replayed game".into()));
        }
        Ok(state)
    }
}

pub(crate) fn flags(state: &GameState) -> (bool, bool) {
    if state.captured {
        (false, false)
    } else {
        (state.is_siege(), state.any_pre_siege())
    }
}

/// Default round cap: `4 (m + n) k`.
pub fn default_round_cap(spec: &GridSpec, k: usize) -> usize {
    4 * (spec.m + spec.n) * k
}

/// Plays one game to capture or `round_cap` rounds.
///
/// The robber must start outside the closed neighbourhood of every cop.
pub fn run_game(
    spec: GridSpec,
    cops: &mut dyn CopController,
    robber: &mut dyn RobberController,
    robber_start: Vertex,
    round_cap: usize,
) -> Result<Trace> {
    run_game_seeded(spec, cops, robber, robber_start, round_cap, None)
}

pub fn run_game_seeded(
    spec: GridSpec,
    cops: &mut dyn CopController,
    robber: &mut dyn RobberController,
    robber_start: Vertex,
    round_cap: usize,
    seed: Option<u64>,
) -> Result<Trace> {
    if round_cap == 0 {
        return Err(Error::Config("round cap must be positive".into()));
    }
    let initial = cops.initial_positions();
    if let Some(c) = initial.iter().find(|&&c| spec.distance(c, robber_start) <= 1) {
        return Err(Error::Config(format!(
            "robber start {robber_start} is in the closed neighbourhood of the cop at {c}"
        )));
    }
    let mut state = GameState::new(spec, initial.clone(), robber_start)?;
    let header = TraceHeader {
        spec,
        algorithm: cops.name(),
        k: initial.len(),
        robber_policy: robber.name(),
        seed,
        cops: initial,
        robber: robber_start,
    };
    let mut rounds = Vec::new();
    while !state.captured && state.round < round_cap {
        let cop_moves = cops.step(&state)?;
        state = state.apply_cops_turn(&cop_moves)?;
        let robber_move = if state.captured {
            None
        } else {
            let mv = robber.step(&state)?;
            state = state.apply_robber_turn(mv)?;
            Some(mv)
        };
        let (siege, pre_siege) = flags(&state);
        rounds.push(RoundRecord {
            round: state.round,
            cop_moves,
            cops: state.cops.clone(),
            robber_move,
            robber: state.robber,
            siege,
            pre_siege,
            phase: cops.phase(),
        });
    }
    let footer = if state.captured {
        TraceFooter {
            outcome: Outcome::Captured,
            t: Some(state.round),
        }
    } else {
        TraceFooter {
            outcome: Outcome::NoCapture,
            t: None,
        }
    };
    Ok(Trace {
        header,
        rounds,
        footer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::GridKind;

    fn v(r: usize, c: usize) -> Vertex {
        Vertex::new(r, c)
    }

    #[test]
    fn cop_landing_captures() {
        let spec = GridSpec::grid(3, 3).unwrap();
        let s = GameState::new(spec, vec![v(1, 1)], v(1, 2)).unwrap();
        let s = s.apply_cops_turn(&[Move::Right]).unwrap();
        assert!(s.captured);
        assert_eq!(s.round, 1);
    }

    #[test]
    fn stay_advances_round() {
        let spec = GridSpec::grid(4, 4).unwrap();
        let s = GameState::new(spec, vec![v(0, 0), v(0, 1)], v(3, 3)).unwrap();
        let s2 = s.apply_cops_turn(&[Move::Stay, Move::Stay]).unwrap();
        assert_eq!(s2.cops, s.cops);
        assert_eq!(s2.round, 1);
        assert_eq!(s2.turn, Turn::RobberToMove);
    }

    #[test]
    fn wraparound_moves() {
        let t = GridSpec::torus(3, 4).unwrap();
        let s = GameState::new(t, vec![v(0, 1)], v(1, 3)).unwrap();
        assert_eq!(s.apply_cops_turn(&[Move::Up]).unwrap().cops[0], v(2, 1));
        let st = GridSpec::semitorus(3, 5).unwrap();
        let s = GameState::new(st, vec![v(0, 0)], v(2, 4)).unwrap();
        let s = s.apply_cops_turn(&[Move::Stay]).unwrap();
        assert_eq!(s.apply_robber_turn(Move::Right).unwrap().robber, v(2, 0));
    }

    #[test]
    fn robber_walking_onto_cop_is_captured() {
        let spec = GridSpec::grid(3, 3).unwrap();
        let s = GameState::new(spec, vec![v(0, 0)], v(2, 2)).unwrap();
        let s = s.apply_cops_turn(&[Move::Right]).unwrap();
        let s = s.apply_robber_turn(Move::Up).unwrap();
        assert!(!s.captured);
        let s = s.apply_cops_turn(&[Move::Down]).unwrap();
        let s = s.apply_robber_turn(Move::Left).unwrap();
        assert!(s.captured);
        assert_eq!(s.round, 2);
    }

    #[test]
    fn illegal_moves_are_errors() {
        let spec = GridSpec::grid(3, 3).unwrap();
        let s = GameState::new(spec, vec![v(0, 0)], v(2, 2)).unwrap();
        assert!(s.apply_cops_turn(&[Move::Up]).is_err());
        assert!(s.apply_robber_turn(Move::Stay).is_err());
    }

    #[test]
    fn siege_examples() {
        let g = GridSpec::grid(3, 3).unwrap();
        assert!(is_siege(&g, &[v(0, 1), v(2, 0), v(1, 2)], v(1, 1)));
        assert!(is_siege(&g, &[v(0, 0), v(1, 2)], v(0, 1)));
        let big = GridSpec::grid(5, 5).unwrap();
        assert!(!is_siege(&big, &[v(1, 2)], v(2, 2)));
    }

    #[test]
    fn siege_cardinalities() {
        let g = GridSpec::grid(5, 5).unwrap();
        assert_eq!(minimal_siege_cardinality(&g, v(2, 2)), 3);
        assert_eq!(minimal_siege_cardinality(&g, v(0, 0)), 2);
        assert_eq!(minimal_siege_cardinality(&g, v(0, 2)), 2);
        let t = GridSpec::torus(7, 15).unwrap();
        assert_eq!(minimal_siege_cardinality(&t, v(3, 9)), 3);
    }

    #[test]
    fn pre_siege_shapes() {
        let spec = GridSpec::grid(7, 9).unwrap();
        let s = GameState::new(spec, vec![v(3, 4), v(2, 6)], v(3, 5)).unwrap();
        assert!(s.is_pre_siege(0, 1));
        assert!(!s.is_pre_siege(1, 0));
        let mirror = GameState::new(spec, vec![v(3, 6), v(2, 4)], v(3, 5)).unwrap();
        assert!(mirror.is_pre_siege(0, 1));
        let bad = GameState::new(spec, vec![v(3, 4), v(2, 5)], v(3, 5)).unwrap();
        assert!(!bad.is_pre_siege(0, 1));
        let up = GameState::new(spec, vec![v(3, 4), v(4, 6)], v(3, 5)).unwrap();
        assert!(!up.is_pre_siege(0, 1));
        assert!(up.any_pre_siege());
    }

    #[test]
    fn bottom_row_pre_siege_is_siege() {
        let spec = GridSpec::new(GridKind::SemiTorus, 6, 9).unwrap();
        let s = GameState::new(spec, vec![v(5, 2), v(4, 4)], v(5, 3)).unwrap();
        assert!(s.is_pre_siege(0, 1));
        assert!(s.is_siege());
    }

    #[test]
    fn cone_examples() {
        let spec = GridSpec::grid(8, 8).unwrap();
        let f = ConeFrame::planar();
        let down = ConeOrientation::Down;
        let apex = v(2, 4);
        assert_eq!(cone_membership(&spec, apex, down, &f, v(4, 3)).unwrap(), ConeRelation::Within);
        assert_eq!(cone_membership(&spec, apex, down, &f, v(4, 6)).unwrap(), ConeRelation::OnEdge);
        assert_eq!(cone_membership(&spec, apex, down, &f, v(1, 4)).unwrap(), ConeRelation::Outside);
        assert_eq!(
            cone_membership(&spec, apex, ConeOrientation::Left, &f, v(3, 1)).unwrap(),
            ConeRelation::Within
        );
    }

    #[test]
    fn cone_frame_unwraps_columns() {
        let spec = GridSpec::semitorus(6, 9).unwrap();
        let frame = ConeFrame {
            rows: None,
            cols: Some(AxisWindow { start: 7, len: 5 }),
        };
        // Columns 7, 8, 0, 1, 2 unwrap to 7..=11.
        let rel = cone_membership(&spec, v(1, 8), ConeOrientation::Down, &frame, v(3, 1)).unwrap();
        assert_eq!(rel, ConeRelation::OnEdge);
        let rel = cone_membership(&spec, v(1, 8), ConeOrientation::Down, &frame, v(4, 1)).unwrap();
        assert_eq!(rel, ConeRelation::Within);
        assert!(cone_membership(&spec, v(1, 8), ConeOrientation::Down, &frame, v(3, 4)).is_err());
        assert!(cone_membership(&spec, v(1, 8), ConeOrientation::Down, &ConeFrame::planar(), v(3, 1))
            .is_err());
    }
}
