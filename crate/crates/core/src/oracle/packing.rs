use serde::{Deserialize, Serialize};

use crate::engine::Turn;

/// Ranks sorted cop multisets with the combinatorial number system.
///
/// A sorted multiset `c0 <= c1 <= ... <= c(k-1)` over `v` vertices maps to
/// the strictly increasing `d_i = c_i + i`, whose rank is `sum C(d_i, i+1)`.
#[derive(Debug, Clone)]
pub struct Packer {
    v: usize,
    k: usize,
    binom: Vec<Vec<u64>>,
    multisets: u64,
}

impl Packer {
    pub fn new(v: usize, k: usize) -> Self {
        let rows = v + k;
        let mut binom = vec![vec![0u64; k + 1]; rows + 1];
        for n in 0..=rows {
            binom[n][0] = 1;
            for r in 1..=k.min(n) {
                binom[n][r] = binom[n - 1][r - 1].saturating_add(if r <= n - 1 { binom[n - 1][r] } else { 0 });
            }
        }
        let multisets = binom[v + k - 1][k];
        Packer { v, k, binom, multisets }
    }

    pub fn vertices(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of distinct cop multisets, `C(v + k - 1, k)`.
    pub fn multisets(&self) -> u64 {
        self.multisets
    }

    /// Rank of a sorted multiset.
    pub fn rank(&self, sorted: &[usize]) -> u64 {
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c + i][i + 1])
            .sum()
    }

    /// Inverse of [`Packer::rank`]; writes the sorted multiset to `out`.
    pub fn unrank(&self, mut idx: u64, out: &mut [usize]) {
        let mut hi = self.v + self.k - 1;
        for i in (0..self.k).rev() {
            // largest d < hi with C(d, i+1) <= idx
            let mut d = hi;
            while d > i && self.binom[d - 1][i + 1] > idx {
                d -= 1;
            }
            let d = d - 1;
            idx -= self.binom[d][i + 1];
            out[i] = d - i;
            hi = d;
        }
    }
}

/// Dense index of a canonical game state: cop multiset rank, robber
/// vertex and side to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PackedState(pub u64);

impl PackedState {
    pub fn new(rank: u64, robber: usize, v: usize, turn: Turn) -> Self {
        let t = match turn {
            Turn::CopsToMove => 0,
            Turn::RobberToMove => 1,
        };
        PackedState(((rank * v as u64) + robber as u64) * 2 + t)
    }

    /// `(rank, robber, turn)` for a board with `v` vertices.
    pub fn split(self, v: usize) -> (u64, usize, Turn) {
        let turn = if self.0 % 2 == 0 {
            Turn::CopsToMove
        } else {
            Turn::RobberToMove
        };
        let rest = self.0 / 2;
        (rest / v as u64, (rest % v as u64) as usize, turn)
    }
}

/// Exact state count `C(v + k - 1, k) * v * 2`, without overflow.
pub fn state_count(v: usize, k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * (v as u128 + i) / (i + 1);
    }
    c * v as u128 * 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_is_a_bijection() {
        for (v, k) in [(6, 1), (6, 2), (5, 3), (4, 4)] {
            let p = Packer::new(v, k);
            let mut seen = vec![false; p.multisets() as usize];
            let mut cur = vec![0usize; k];
            loop {
                let r = p.rank(&cur) as usize;
                assert!(!seen[r]);
                seen[r] = true;
                let mut back = vec![0; k];
                p.unrank(r as u64, &mut back);
                assert_eq!(back, cur);
                // next nondecreasing sequence
                let Some(i) = (0..k).rev().find(|&i| cur[i] < v - 1) else {
                    break;
                };
                let x = cur[i] + 1;
                cur[i..].fill(x);
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(state_count(36, 3), 8436 * 36 * 2);
        assert_eq!(Packer::new(25, 2).multisets(), 325);
        let s = PackedState::new(17, 4, 25, Turn::RobberToMove);
        assert_eq!(s.split(25), (17, 4, Turn::RobberToMove));
    }
}
