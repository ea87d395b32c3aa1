use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::engine::{flags, GameState, Outcome, RoundRecord, Trace, TraceFooter, TraceHeader, Turn};
use crate::analysis::{capture_time_formula, lower_bound, CaptureTime, PLACEMENT_SEARCH_BUDGET};
use crate::error::{Error, Result};
use crate::strategies::{initial_placement, strategy_step, Algorithm, CopStrategyState};
use crate::topology::{GridSpec, Move, Vertex};

use super::retrograde::{optimal_capture_time, Value};

/// Default cap on memoised positions for the verifier.
pub const DEFAULT_MEMO_BUDGET: usize = 20_000_000;

type Key = (Vec<Vertex>, Vertex, CopStrategyState);

#[derive(Debug, Clone, Copy)]
enum Memo {
    OnStack,
    /// Worst remaining rounds (`None` if the robber can loop forever) and
    /// the robber move achieving it.
    Done(Option<u32>, Move),
}

/// Result of exhausting every robber behaviour against one strategy.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub spec: GridSpec,
    pub algorithm: Algorithm,
    pub k: usize,
    /// Worst capture time; `None` if the robber can avoid capture forever.
    pub max_t: Option<u32>,
    pub worst_start: Vertex,
    pub positions: usize,
    #[serde(skip)]
    pub witness: Trace,
}

impl VerifyReport {
    pub fn captured(&self) -> bool {
        self.max_t.is_some()
    }
}

struct Frame {
    key: Key,
    cops_after: Vec<Vertex>,
    next_state: CopStrategyState,
    options: Vec<(Move, Vertex)>,
    next: usize,
    best: Option<u32>,
    best_move: Move,
}

struct Search {
    spec: GridSpec,
    memo: HashMap<Key, Memo>,
    budget: usize,
}

impl Search {
    /// Expands a cops-to-move position. Returns the frame, or the value
    /// directly when the cop turn captures.
    fn open(&self, key: Key) -> Result<std::result::Result<Frame, (Key, u32)>> {
        let (cops, robber, s) = &key;
        let state = GameState {
            spec: self.spec,
            cops: cops.clone(),
            robber: *robber,
            round: 0,
            turn: Turn::CopsToMove,
            captured: false,
        };
        let (moves, next_state) = strategy_step(&state, s)?;
        let after = state.apply_cops_turn(&moves)?;
        if after.captured {
            return Ok(Err((key, 1)));
        }
        let options = Move::ALL
            .into_iter()
            .filter_map(|mv| self.spec.step(*robber, mv).map(|v| (mv, v)))
            .collect();
        Ok(Ok(Frame {
            key,
            cops_after: after.cops,
            next_state,
            options,
            next: 0,
            best: Some(0),
            best_move: Move::Stay,
        }))
    }

    fn insert(&mut self, key: Key, memo: Memo) -> Result<()> {
        if self.memo.len() >= self.budget && !self.memo.contains_key(&key) {
            return Err(Error::Budget {
                estimate: self.memo.len() as u128 + 1,
                budget: self.budget as u64,
            });
        }
        self.memo.insert(key, memo);
        Ok(())
    }

    /// Worst-case remaining rounds from a cops-to-move position.
    fn solve(&mut self, root: Key) -> Result<Option<u32>> {
        if let Some(Memo::Done(v, _)) = self.memo.get(&root) {
            return Ok(*v);
        }
        let mut stack: Vec<Frame> = Vec::new();
        match self.open(root)? {
            Err((key, v)) => {
                self.insert(key, Memo::Done(Some(v), Move::Stay))?;
                return Ok(Some(v));
            }
            Ok(frame) => {
                self.insert(frame.key.clone(), Memo::OnStack)?;
                stack.push(frame);
            }
        }
        // value of the child just finished, to fold into the parent
        let mut returned: Option<Option<u32>> = None;
        loop {
            let top = stack.last_mut().expect("stack is non-empty");
            if let Some(child) = returned.take() {
                let (mv, _) = top.options[top.next];
                let through = child.map(|c| c + 1);
                if better(through, top.best) {
                    top.best = through;
                    top.best_move = mv;
                }
                top.next += 1;
            }
            if top.next == top.options.len() || top.best.is_none() {
                let frame = stack.pop().expect("non-empty");
                self.memo.insert(frame.key, Memo::Done(frame.best, frame.best_move));
                if stack.is_empty() {
                    return Ok(frame.best);
                }
                returned = Some(frame.best);
                continue;
            }
            let (mv, to) = top.options[top.next];
            if top.cops_after.contains(&to) {
                if better(Some(1), top.best) {
                    top.best = Some(1);
                    top.best_move = mv;
                }
                top.next += 1;
                continue;
            }
            let child: Key = (top.cops_after.clone(), to, top.next_state.clone());
            match self.memo.get(&child) {
                Some(Memo::OnStack) => returned = Some(None),
                Some(Memo::Done(v, _)) => returned = Some(*v),
                None => match self.open(child)? {
                    Err((key, v)) => {
                        self.insert(key, Memo::Done(Some(v), Move::Stay))?;
                        returned = Some(Some(v));
                    }
                    Ok(frame) => {
                        self.insert(frame.key.clone(), Memo::OnStack)?;
                        stack.push(frame);
                    }
                },
            }
        }
    }
}

/// `a` is a worse outcome for the cops than `b` (`None` is infinite).
fn better(a: Option<u32>, b: Option<u32>) -> bool {
    match (a, b) {
        (None, None) => false,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x > y,
    }
}

/// Exhausts every robber start (outside the cops' closed neighbourhoods)
/// and every robber move against the deterministic strategy.
pub fn verify_strategy_worst_case(spec: &GridSpec, alg: Algorithm, k: usize) -> Result<VerifyReport> {
    verify_with_budget(spec, alg, k, DEFAULT_MEMO_BUDGET)
}

pub fn verify_with_budget(spec: &GridSpec, alg: Algorithm, k: usize, budget: usize) -> Result<VerifyReport> {
    let (cops, s0) = initial_placement(alg, spec, k)?;
    let mut starts: Vec<Vertex> = spec
        .vertices()
        .filter(|&v| cops.iter().all(|&c| spec.distance(c, v) > 1))
        .collect();
    if starts.is_empty() {
        // Tiny boards: every vertex touches a cop.
        starts = spec.vertices().filter(|v| !cops.contains(v)).collect();
    }
    let mut search = Search {
        spec: *spec,
        memo: HashMap::new(),
        budget,
    };
    let mut worst: Option<(Option<u32>, Vertex)> = None;
    for &start in &starts {
        let v = search.solve((cops.clone(), start, s0.clone()))?;
        if worst.is_none_or(|(w, _)| better(v, w)) {
            worst = Some((v, start));
        }
    }
    let (max_t, worst_start) = worst.ok_or_else(|| Error::Config(format!("no robber start on {spec}")))?;
    let witness = witness(&search, spec, alg, &cops, &s0, worst_start)?;
    Ok(VerifyReport {
        spec: *spec,
        algorithm: alg,
        k,
        max_t,
        worst_start,
        positions: search.memo.len(),
        witness,
    })
}

fn witness(
    search: &Search,
    spec: &GridSpec,
    alg: Algorithm,
    cops: &[Vertex],
    s0: &CopStrategyState,
    start: Vertex,
) -> Result<Trace> {
    let mut state = GameState::new(*spec, cops.to_vec(), start)?;
    let mut s = s0.clone();
    let mut seen = HashSet::new();
    let mut rounds = Vec::new();
    loop {
        let key: Key = (state.cops.clone(), state.robber, s.clone());
        if !seen.insert(key.clone()) {
            break;
        }
        let robber_move = match search.memo.get(&key) {
            Some(Memo::Done(_, mv)) => *mv,
            _ => return Err(Error::Strategy("witness left the explored positions".into())),
        };
        let (moves, next) = strategy_step(&state, &s)?;
        state = state.apply_cops_turn(&moves)?;
        let played = if state.captured {
            None
        } else {
            state = state.apply_robber_turn(robber_move)?;
            Some(robber_move)
        };
        let (siege, pre_siege) = flags(&state);
        rounds.push(RoundRecord {
            round: state.round,
            cop_moves: moves,
            cops: state.cops.clone(),
            robber_move: played,
            robber: state.robber,
            siege,
            pre_siege,
            phase: (alg.kind() == crate::topology::GridKind::Torus).then(|| next.label()),
        });
        if state.captured {
            break;
        }
        s = next;
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
        header: TraceHeader {
            spec: *spec,
            algorithm: alg.as_str().to_string(),
            k: cops.len(),
            robber_policy: "exhaustive".into(),
            seed: None,
            cops: cops.to_vec(),
            robber: start,
        },
        rounds,
        footer,
    })
}

/// One cop turn seen during exhaustive exploration.
#[derive(Debug, Clone)]
pub struct Transition<'a> {
    pub cops: &'a [Vertex],
    pub robber: Vertex,
    pub before: &'a CopStrategyState,
    pub moves: &'a [Move],
    pub cops_after: &'a [Vertex],
    pub after: &'a CopStrategyState,
}

/// Visits every cop turn reachable from the algorithm's placement under
/// some robber behaviour (legal starts only).
pub fn explore(
    spec: &GridSpec,
    alg: Algorithm,
    k: usize,
    budget: usize,
    mut visit: impl FnMut(&Transition<'_>) -> Result<()>,
) -> Result<usize> {
    let (cops, s0) = initial_placement(alg, spec, k)?;
    let mut seen: HashSet<Key> = HashSet::new();
    let mut todo: Vec<Key> = spec
        .vertices()
        .filter(|&v| cops.iter().all(|&c| spec.distance(c, v) > 1))
        .map(|v| (cops.clone(), v, s0.clone()))
        .collect();
    while let Some(key) = todo.pop() {
        if !seen.insert(key.clone()) {
            continue;
        }
        if seen.len() > budget {
            return Err(Error::Budget {
                estimate: seen.len() as u128,
                budget: budget as u64,
            });
        }
        let (c, r, s) = &key;
        let state = GameState::new(*spec, c.clone(), *r)?;
        let (moves, next) = strategy_step(&state, s)?;
        let after = state.apply_cops_turn(&moves)?;
        visit(&Transition {
            cops: c,
            robber: *r,
            before: s,
            moves: &moves,
            cops_after: &after.cops,
            after: &next,
        })?;
        if after.captured {
            continue;
        }
        for mv in Move::ALL {
            if let Some(to) = spec.step(*r, mv) {
                if !after.cops.contains(&to) {
                    todo.push((after.cops.clone(), to, next.clone()));
                }
            }
        }
    }
    Ok(seen.len())
}

/// The chain `lower bound <= oracle optimum <= strategy worst case <=
/// formula high end` for one instance. Links that could not be computed
/// hold the reason instead.
#[derive(Debug, Clone)]
pub struct Sandwich {
    pub spec: GridSpec,
    pub algorithm: Algorithm,
    pub k: usize,
    pub lower: std::result::Result<usize, String>,
    pub oracle: std::result::Result<Value, String>,
    pub strategy: std::result::Result<VerifyReport, String>,
    pub formula: std::result::Result<CaptureTime, String>,
}

impl Sandwich {
    /// Computes every link; `budget` bounds both the oracle's state space
    /// and the verifier's memo.
    pub fn compute(spec: &GridSpec, alg: Algorithm, k: usize, budget: u64) -> Result<Sandwich> {
        alg.check(spec, k)?;
        let memo = usize::try_from(budget).unwrap_or(usize::MAX).min(DEFAULT_MEMO_BUDGET);
        let strategy = verify_with_budget(spec, alg, k, memo).map_err(|e| e.to_string());
        Ok(Sandwich::assemble(spec, alg, k, budget, strategy))
    }

    /// Builds the other links around an existing verifier report.
    pub fn around(report: VerifyReport, budget: u64) -> Sandwich {
        let (spec, alg, k) = (report.spec, report.algorithm, report.k);
        Sandwich::assemble(&spec, alg, k, budget, Ok(report))
    }

    fn assemble(
        spec: &GridSpec,
        alg: Algorithm,
        k: usize,
        budget: u64,
        strategy: std::result::Result<VerifyReport, String>,
    ) -> Sandwich {
        let lower = lower_bound(spec, k, PLACEMENT_SEARCH_BUDGET)
            .map(|l| l.value)
            .map_err(|e| e.to_string());
        let oracle = optimal_capture_time(spec, k, budget).map_err(|e| e.to_string());
        let formula = capture_time_formula(spec, k)
            .map(|f| f.time)
            .map_err(|e| e.to_string());
        Sandwich {
            spec: *spec,
            algorithm: alg,
            k,
            lower,
            oracle,
            strategy,
            formula,
        }
    }

    /// All four links were computed.
    pub fn complete(&self) -> bool {
        self.lower.is_ok() && self.oracle.is_ok() && self.strategy.is_ok() && self.formula.is_ok()
    }

    /// Broken inequalities among the computed links.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let oracle = match &self.oracle {
            Ok(Value::Finite(o)) => Some(*o as u64),
            Ok(Value::Infinite) => {
                out.push(format!("{} cops cannot force capture on {}", self.k, self.spec));
                None
            }
            Err(_) => None,
        };
        let strategy = match &self.strategy {
            Ok(r) => match r.max_t {
                Some(t) => Some(t as u64),
                None => {
                    out.push(format!("the robber evades {} from {}", self.algorithm, r.worst_start));
                    None
                }
            },
            Err(_) => None,
        };
        let lower = self.lower.as_ref().ok().map(|&l| l as u64);
        let high = self.formula.as_ref().ok().map(|f| f.bracket_high());
        let chain = [
            ("lower bound", lower),
            ("oracle optimum", oracle),
            ("strategy worst case", strategy),
            ("formula high end", high),
        ];
        let known: Vec<(&str, u64)> = chain.iter().filter_map(|&(name, v)| v.map(|v| (name, v))).collect();
        for pair in known.windows(2) {
            let ((a, x), (b, y)) = (pair[0], pair[1]);
            if x > y {
                out.push(format!("{a} {x} exceeds {b} {y}"));
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}
