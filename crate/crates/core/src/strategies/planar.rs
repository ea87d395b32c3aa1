//! Pairs of cops on planar grids: GRID is the one-pair case of GRID-K.

use crate::engine::{classify, ConeOrientation};
use crate::topology::{GridSpec, Move, Vertex};

/// Step 1 of GRID in a frame with `m <= n`.
pub(super) fn grid_placement(local: &GridSpec) -> Vec<Vertex> {
    let (m, n) = (local.m, local.n);
    let m1 = (m - 1) / 2;
    let m2 = m / 2;
    let n1 = (n - 1) / 2;
    let n2 = n / 2;
    match (m % 2 == 0, n % 2 == 0) {
        (true, _) => vec![Vertex::new(m1, n1), Vertex::new(m2, n1)],
        (false, false) => vec![Vertex::new(m1 - 1, n1), Vertex::new(m1, n1)],
        (false, true) => vec![Vertex::new(m1, n1), Vertex::new(m1, n2)],
    }
}

/// `k/2` vertical pairs in rows `⌊m/2⌋-1` and `⌊m/2⌋`.
///
/// The `n - h` free columns are split into `h` gaps, larger first; the
/// last gap is cut in two and placed at both ends of the row.
pub(super) fn grid_k_placement(local: &GridSpec, k: usize) -> Vec<Vertex> {
    let h = k / 2;
    let top = local.m / 2 - 1;
    let free = local.n - h;
    let (q, r) = (free / h, free % h);
    let gap = |j: usize| q + usize::from(j < r);
    let mut col = gap(h - 1).div_ceil(2);
    let mut cops = Vec::with_capacity(k);
    for j in 0..h {
        cops.push(Vertex::new(top, col));
        cops.push(Vertex::new(top + 1, col));
        col += gap(j) + 1;
    }
    cops
}

pub(super) struct PairsStep {
    pub moves: Vec<Move>,
    pub heading: Option<ConeOrientation>,
    pub relevant: Vec<usize>,
}

/// One cop turn for `cops.len() / 2` pairs; pair `j` is cops `2j, 2j+1`
/// and pairs are ordered left to right.
///
/// The robber picks out one pair (or the two pairs around it). If it lies
/// in both cones of a picked pair, every cop advances vertically towards
/// it; otherwise the picked pairs shift sideways towards its column.
pub(super) fn pairs_step(local: &GridSpec, cops: &[Vertex], robber: Vertex) -> PairsStep {
    let h = cops.len() / 2;
    let top = cops.iter().map(|c| c.row).min().unwrap_or(0);
    let bottom = cops.iter().map(|c| c.row).max().unwrap_or(0);
    let heading = if robber.row > bottom {
        Some(ConeOrientation::Down)
    } else if robber.row < top {
        Some(ConeOrientation::Up)
    } else {
        None
    };
    let lo = |j: usize| cops[2 * j].col.min(cops[2 * j + 1].col);
    let hi = |j: usize| cops[2 * j].col.max(cops[2 * j + 1].col);
    let rc = robber.col;
    let relevant: Vec<usize> = if rc < lo(0) {
        vec![0]
    } else if rc > hi(h - 1) {
        vec![h - 1]
    } else {
        match (0..h).find(|&j| lo(j) <= rc && rc <= hi(j)) {
            Some(j) => vec![j],
            None => {
                let j = (0..h - 1).find(|&j| hi(j) < rc && rc < lo(j + 1)).expect("columns are ordered");
                vec![j, j + 1]
            }
        }
    };

    let in_cone = |c: Vertex, o: ConeOrientation| {
        let depth = match o {
            ConeOrientation::Down => robber.row as isize - c.row as isize,
            _ => c.row as isize - robber.row as isize,
        };
        classify(depth, c.col.abs_diff(rc) as isize).is_in()
    };
    let mut moves = vec![Move::Stay; cops.len()];
    match heading {
        Some(o) if relevant.iter().any(|&j| in_cone(cops[2 * j], o) && in_cone(cops[2 * j + 1], o)) => {
            moves.fill(o.advance());
        }
        _ => {
            for &j in &relevant {
                let dir = if rc < lo(j) {
                    Move::Left
                } else if rc > hi(j) {
                    Move::Right
                } else {
                    Move::Stay
                };
                moves[2 * j] = dir;
                moves[2 * j + 1] = dir;
            }
        }
    }
    for (i, mv) in moves.iter_mut().enumerate() {
        if local.step(cops[i], *mv).is_none() {
            *mv = Move::Stay;
        }
    }
    PairsStep {
        moves,
        heading,
        relevant,
    }
}
