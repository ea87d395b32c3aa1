//! The cylinder chase shared by the semi-torus and torus algorithms.
//!
//! Everything here works in a local frame where the chasing cops push the
//! robber downwards and columns wrap.

use crate::engine::{classify, ConeRelation};
use crate::topology::{GridSpec, Move, Vertex};

pub(super) struct ChaseStep {
    pub moves: Vec<Move>,
    /// The chasing pair `(L, R)` whose column arc holds the robber.
    pub pair: (usize, usize),
}

/// Signed depth of the robber below `cop`; on a torus it is taken
/// modulo `m` since the guard row closes the region from below.
pub(super) fn depth(local: &GridSpec, cop: Vertex, robber: Vertex) -> isize {
    if local.kind.wraps_rows() {
        ((robber.row + local.m - cop.row) % local.m) as isize
    } else {
        robber.row as isize - cop.row as isize
    }
}

/// `mv` if it is legal from `v`, otherwise `Stay`.
pub(super) fn legal(local: &GridSpec, v: Vertex, mv: Move) -> Move {
    if local.step(v, mv).is_some() {
        mv
    } else {
        Move::Stay
    }
}

/// The pair of chasing cops whose arc `[L, R)` contains the robber's column.
pub(super) fn active_pair(local: &GridSpec, cops: &[Vertex], chase: &[usize], robber: Vertex) -> (usize, usize) {
    let n = local.n;
    let back = |i: usize| (robber.col + n - cops[i].col) % n;
    let l = *chase
        .iter()
        .min_by_key(|&&i| (back(i), i))
        .expect("at least two chasing cops");
    let fwd = |i: usize| match (cops[i].col + n - robber.col) % n {
        0 => n,
        d => d,
    };
    let r = *chase
        .iter()
        .filter(|&&i| i != l)
        .min_by_key(|&&i| (fwd(i), i))
        .expect("at least two chasing cops");
    (l, r)
}

/// One cop turn of the chase. Cops outside `chase` stay put.
pub(super) fn chase_down(local: &GridSpec, cops: &[Vertex], chase: &[usize], robber: Vertex) -> ChaseStep {
    let n = local.n;
    let (l, r) = active_pair(local, cops, chase, robber);
    let u = ((robber.col + n - cops[l].col) % n) as isize;
    let span = match (cops[r].col + n - cops[l].col) % n {
        0 => n,
        s => s,
    } as isize;
    let (dl, dr) = (depth(local, cops[l], robber), depth(local, cops[r], robber));
    let rel_l = classify(dl, u);
    let rel_r = classify(dr, span - u);

    let mut moves = vec![Move::Stay; cops.len()];
    use ConeRelation::*;
    match (rel_l, rel_r) {
        (Within, _) | (_, Within) => {
            for &i in chase {
                if i == l || i == r || depth(local, cops[i], robber) >= 2 {
                    moves[i] = Move::Down;
                }
            }
        }
        (OnEdge, OnEdge) => {
            let mover = if dl > dr || (dl == dr && l < r) { l } else { r };
            moves[mover] = Move::Down;
        }
        (OnEdge, Outside) => {
            if span - u > 0 {
                moves[r] = Move::Left;
            }
        }
        (Outside, OnEdge) => {
            if u > 0 {
                moves[l] = Move::Right;
            }
        }
        (Outside, Outside) => {
            if u > 0 {
                moves[l] = Move::Right;
            }
            if span - u > 0 {
                moves[r] = Move::Left;
            }
        }
    }
    for (i, mv) in moves.iter_mut().enumerate() {
        *mv = legal(local, cops[i], *mv);
    }
    ChaseStep { moves, pair: (l, r) }
}
