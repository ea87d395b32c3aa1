//! Test-side helpers shared by the property suites and the acceptance run.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use grid_pursuit::engine::{cone_membership, ConeFrame, ConeOrientation, ConeRelation, Turn};
use grid_pursuit::oracle::{Value, ValueTable};
use grid_pursuit::strategies::{initial_placement, strategy_step};
use grid_pursuit::{Algorithm, CopStrategyState, GameState, GridSpec, Move, Vertex};

/// Plain breadth-first search over `neighbors`.
pub fn bfs(spec: &GridSpec, from: Vertex) -> HashMap<Vertex, usize> {
    let mut dist = HashMap::from([(from, 0)]);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for w in spec.neighbors(v) {
            dist.entry(w).or_insert_with(|| {
                queue.push_back(w);
                d + 1
            });
        }
    }
    dist
}

/// Whether `v` lies on a non-wrapping top/bottom row or left/right column.
pub fn is_border(spec: &GridSpec, v: Vertex) -> (bool, bool) {
    let top = !spec.kind.wraps_rows() && (v.row == 0 || v.row == spec.m - 1);
    let side = !spec.kind.wraps_cols() && (v.col == 0 || v.col == spec.n - 1);
    (top, side)
}

/// Expected minimal siege size: 3 inside (and everywhere on tori), 2 on
/// borders and corners.
pub fn expected_siege(spec: &GridSpec, v: Vertex) -> usize {
    match is_border(spec, v) {
        (false, false) => 3,
        _ => 2,
    }
}

fn joint_moves(spec: &GridSpec, cops: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    for &c in cops {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                spec.closed_neighbors(c).into_iter().map(move |w| {
                    let mut p = prefix.clone();
                    p.push(w);
                    p
                })
            })
            .collect();
    }
    out
}

/// Plays optimal moves for both sides from the table's optimum and checks
/// the value drops by one per cop turn and holds on robber turns.
pub fn check_optimal_play(table: &ValueTable) {
    let spec = *table.spec();
    let (value, mut cops) = table.optimum();
    let Value::Finite(mut v) = value else { return };
    let mut robber = spec
        .vertices()
        .filter(|r| !cops.contains(r))
        .max_by_key(|&r| table.value(&cops, r, Turn::CopsToMove).unwrap())
        .unwrap();
    assert_eq!(table.value(&cops, robber, Turn::CopsToMove).unwrap(), Value::Finite(v));
    loop {
        let mut best: Option<(Value, Vec<Vertex>)> = None;
        for next in joint_moves(&spec, &cops) {
            let val = if next.contains(&robber) {
                Value::Finite(0)
            } else {
                table.value(&next, robber, Turn::RobberToMove).unwrap()
            };
            if best.as_ref().is_none_or(|(b, _)| val < *b) {
                best = Some((val, next));
            }
        }
        let (after, next) = best.unwrap();
        assert_eq!(after, Value::Finite(v - 1), "{spec}: cop turn from value {v}");
        cops = next;
        if cops.contains(&robber) {
            assert_eq!(v, 1);
            return;
        }
        let (reply, to) = spec
            .closed_neighbors(robber)
            .into_iter()
            .filter(|w| !cops.contains(w))
            .map(|w| (table.value(&cops, w, Turn::CopsToMove).unwrap(), w))
            .max()
            .unwrap();
        assert_eq!(reply, Value::Finite(v - 1), "{spec}: robber turn");
        robber = to;
        v -= 1;
    }
}

/// Which side of a cop's cone edge the robber touches, if any.
fn edge_side(spec: &GridSpec, cop: Vertex, o: ConeOrientation, robber: Vertex) -> Option<i8> {
    let rel = cone_membership(spec, cop, o, &ConeFrame::planar(), robber).unwrap();
    if rel != ConeRelation::OnEdge {
        return None;
    }
    let lateral = match o {
        ConeOrientation::Down | ConeOrientation::Up => robber.col as isize - cop.col as isize,
        ConeOrientation::Left | ConeOrientation::Right => robber.row as isize - cop.row as isize,
    };
    Some(lateral.signum() as i8)
}

type Memory = Vec<Option<(ConeOrientation, i8)>>;

/// Exhausts every robber behaviour against GRID, remembering for each cop
/// the last cone edge the robber held. Panics if the robber ever holds the
/// opposite edge of the same cone; returns the number of positions.
pub fn opposite_edge_search(spec: &GridSpec) -> usize {
    let (cops, s0) = initial_placement(Algorithm::Grid, spec, 2).unwrap();
    let mut seen: HashSet<(Vec<Vertex>, Vertex, CopStrategyState, Memory)> = HashSet::new();
    let mut todo: Vec<_> = spec
        .vertices()
        .filter(|&v| cops.iter().all(|&c| spec.distance(c, v) > 1))
        .map(|v| (cops.clone(), v, s0.clone(), vec![None; 2]))
        .collect();
    while let Some(key) = todo.pop() {
        if !seen.insert(key.clone()) {
            continue;
        }
        let (cops, robber, s, mut memory) = key;
        let state = GameState::new(*spec, cops.clone(), robber).unwrap();
        let (moves, next) = strategy_step(&state, &s).unwrap();
        // A robber next to a cop is taken this turn; it never holds an edge.
        let doomed = cops.iter().any(|&c| spec.distance(c, robber) <= 1);
        for (i, &c) in cops.iter().enumerate().filter(|_| !doomed) {
            let Some(o) = next.orientations[i] else {
                memory[i] = None;
                continue;
            };
            if memory[i].is_some_and(|(prev, _)| prev != o) {
                memory[i] = None;
            }
            if let Some(side) = edge_side(spec, c, o, robber) {
                if let Some((_, before)) = memory[i] {
                    assert!(before == side, "{spec}: robber crossed cop {i}'s cone from {before} to {side} at {robber}");
                }
                memory[i] = Some((o, side));
            }
        }
        let after = state.apply_cops_turn(&moves).unwrap();
        if after.captured {
            continue;
        }
        for mv in Move::ALL {
            let Some(to) = spec.step(robber, mv) else { continue };
            if after.cops.contains(&to) {
                continue;
            }
            todo.push((after.cops.clone(), to, next.clone(), memory.clone()));
        }
    }
    seen.len()
}
