//! TGRID and TGRID-K: one cop becomes a guard that follows the robber's
//! column while the others spread out and then run the cylinder chase.

use crate::engine::{pre_siege_escape, ConeOrientation};
use crate::error::{Error, Result};
use crate::topology::{GridSpec, Move, Vertex};

use super::chase::{active_pair, chase_down};
use super::{slot_offsets, Phase};

/// Row 0 in circular order `c1, ck, c2, ..., c(k-1)`, larger gaps first.
pub(super) fn placement(local: &GridSpec, k: usize) -> Vec<Vertex> {
    let slots = slot_offsets(local.n, k);
    let mut cops = vec![Vertex::new(0, 0); k];
    for (j, &col) in slots.iter().enumerate() {
        let cop = match j {
            0 => 0,
            1 => k - 1,
            j => j - 1,
        };
        cops[cop] = Vertex::new(0, col);
    }
    cops
}

/// Moves one step along row `row` towards column `target`, the short way.
fn towards(n: usize, from: usize, target: usize) -> Move {
    match (target + n - from) % n {
        0 => Move::Stay,
        d if d <= n / 2 => Move::Right,
        _ => Move::Left,
    }
}

pub(super) struct TorusStep {
    pub moves: Vec<Move>,
    pub phase: Phase,
    pub guard: Option<usize>,
    pub targets: Vec<Option<usize>>,
    pub heading: Option<ConeOrientation>,
    pub pair: Option<(usize, usize)>,
}

pub(super) struct TorusInput<'a> {
    pub local: GridSpec,
    pub cops: &'a [Vertex],
    pub robber: Vertex,
    pub phase: Phase,
    pub guard: Option<usize>,
    pub targets: &'a [Option<usize>],
    pub heading: Option<ConeOrientation>,
}

pub(super) fn step(input: TorusInput<'_>) -> Result<TorusStep> {
    let TorusInput {
        local,
        cops,
        robber,
        phase,
        guard,
        targets,
        heading,
    } = input;
    let k = cops.len();
    let n = local.n;
    let y0 = robber.col;
    match (phase, guard) {
        (Phase::Guard, None) => {
            let pair = active_pair(&local, cops, &(0..k).collect::<Vec<_>>(), robber);
            let (l, r) = pair;
            let base = cops[l].col;
            let mut order: Vec<usize> = (0..k).collect();
            order.sort_by_key(|&i| ((cops[i].col + n - base) % n, i));
            let anchor = order[k - 1];
            let claim = [l, r]
                .into_iter()
                .filter(|&i| local.col_distance(cops[i].col, y0) <= 1)
                .min();
            let offsets = slot_offsets(n, k - 1);
            let slot_col = |j: usize| (cops[anchor].col + offsets[j]) % n;
            let mut new_targets = vec![None; k];
            new_targets[anchor] = Some(slot_col(0));
            for (j, &i) in order.iter().enumerate().take(k - 1).skip(2) {
                new_targets[i] = Some(slot_col(j));
            }
            let mut moves = vec![Move::Stay; k];
            let next_guard = match claim {
                Some(g) => {
                    let other = if g == l { r } else { l };
                    new_targets[other] = Some(slot_col(1));
                    moves[g] = towards(n, cops[g].col, y0);
                    Some(g)
                }
                None => {
                    moves[l] = Move::Right;
                    moves[r] = Move::Left;
                    None
                }
            };
            for i in 0..k {
                if next_guard == Some(i) || (next_guard.is_none() && (i == l || i == r)) {
                    continue;
                }
                if let Some(t) = new_targets[i] {
                    moves[i] = towards(n, cops[i].col, t);
                }
            }
            if next_guard.is_none() {
                new_targets = vec![None; k];
            }
            Ok(TorusStep {
                moves,
                phase: Phase::Guard,
                guard: next_guard,
                targets: new_targets,
                heading: None,
                pair: Some(pair),
            })
        }
        (Phase::Guard, Some(g)) => {
            let ready = (0..k).filter(|&i| i != g).all(|i| targets[i] == Some(cops[i].col) && cops[i].row == 0);
            if ready {
                return step(TorusInput {
                    phase: Phase::Chase,
                    ..input
                });
            }
            let mut moves = vec![Move::Stay; k];
            moves[g] = towards(n, cops[g].col, y0);
            for i in (0..k).filter(|&i| i != g) {
                let t = targets[i].ok_or_else(|| Error::Strategy(format!("cop {} has no target", i + 1)))?;
                moves[i] = towards(n, cops[i].col, t);
            }
            Ok(TorusStep {
                moves,
                phase: Phase::Guard,
                guard: Some(g),
                targets: targets.to_vec(),
                heading: None,
                pair: None,
            })
        }
        (Phase::Chase, Some(g)) => {
            let chase: Vec<usize> = (0..k).filter(|&i| i != g).collect();
            let heading = heading.unwrap_or_else(|| {
                let z = cops[chase[0]].row;
                if (robber.row + local.m - z) % local.m <= local.m / 2 {
                    ConeOrientation::Down
                } else {
                    ConeOrientation::Up
                }
            });
            let flip = heading == ConeOrientation::Up;
            let m = local.m;
            let f = |v: Vertex| if flip { Vertex::new(m - 1 - v.row, v.col) } else { v };
            let flipped: Vec<Vertex> = cops.iter().map(|&c| f(c)).collect();
            let fr = f(robber);
            let st = chase_down(&local, &flipped, &chase, fr);
            let mut moves = st.moves;
            moves[g] = if flipped[g].col != fr.col {
                towards(n, flipped[g].col, fr.col)
            } else {
                let (l, r) = st.pair;
                let after = |i: usize| local.step(flipped[i], moves[i]).expect("torus moves are total");
                let (a, b) = (after(l), after(r));
                let pre = pre_siege_escape(&local, fr, a, b) == Some(Move::Down)
                    || pre_siege_escape(&local, fr, b, a) == Some(Move::Down);
                if pre {
                    Move::Up
                } else {
                    Move::Stay
                }
            };
            if flip {
                for mv in &mut moves {
                    *mv = match *mv {
                        Move::Up => Move::Down,
                        Move::Down => Move::Up,
                        other => other,
                    };
                }
            }
            Ok(TorusStep {
                moves,
                phase: Phase::Chase,
                guard: Some(g),
                targets: targets.to_vec(),
                heading: Some(heading),
                pair: Some(st.pair),
            })
        }
        (p, g) => Err(Error::Strategy(format!("unreachable torus phase {p:?} with guard {g:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(r: usize, c: usize) -> Vertex {
        Vertex::new(r, c)
    }

    #[test]
    fn placements() {
        let t = GridSpec::torus(7, 15).unwrap();
        assert_eq!(placement(&t, 3), vec![v(0, 0), v(0, 10), v(0, 5)]);
        assert_eq!(placement(&t, 4), vec![v(0, 0), v(0, 8), v(0, 12), v(0, 4)]);
    }

    #[test]
    fn guard_claim_in_robber_column() {
        let t = GridSpec::torus(7, 15).unwrap();
        let cops = placement(&t, 3);
        let st = step(TorusInput {
            local: t,
            cops: &cops,
            robber: v(3, 5),
            phase: Phase::Guard,
            guard: None,
            targets: &[None, None, None],
            heading: None,
        })
        .unwrap();
        assert_eq!(st.guard, Some(2));
        assert_eq!(st.moves, vec![Move::Stay, Move::Left, Move::Stay]);
        assert_eq!(st.targets, vec![Some(0), Some(8), None]);
    }
}
