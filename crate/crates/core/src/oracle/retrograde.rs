use std::collections::HashMap;
use std::fmt;
use std::io::{Read, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::engine::{minimal_siege_cardinality, Turn};
use crate::error::{Error, Result};
use crate::topology::{GridKind, GridSpec, Vertex};

use super::packing::{state_count, PackedState, Packer};

/// Joint-move expansions allowed per unit of budget.
pub const WORK_PER_STATE: u128 = 100;

/// Default state budget for the retrograde solver.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

const INF: u8 = u8::MAX;
const OVERFLOW: u8 = u8::MAX - 1;

/// Remaining cop turns to capture under optimal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Value {
    Finite(u32),
    Infinite,
}

impl Value {
    pub fn finite(self) -> Option<u32> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinite => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinite => f.write_str("inf"),
        }
    }
}

/// Solved game: one value per canonical state.
#[derive(Debug, Clone)]
pub struct ValueTable {
    spec: GridSpec,
    packer: Packer,
    cop: Vec<u8>,
    rob: Vec<u8>,
    overflow: HashMap<u64, u32>,
}

fn closed_neighbourhoods(spec: &GridSpec) -> Vec<Vec<usize>> {
    spec.vertices()
        .map(|v| spec.closed_neighbors(v).into_iter().map(|w| spec.index(w)).collect())
        .collect()
}

fn check_budget(spec: &GridSpec, k: usize, budget: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::Config("k must be positive".into()));
    }
    let estimate = state_count(spec.vertex_count(), k);
    if estimate > budget as u128 {
        return Err(Error::Budget { estimate, budget });
    }
    // Every robber state expands all joint cop moves once.
    let branching = spec.vertices().map(|v| spec.closed_neighbors(v).len()).max().unwrap_or(1) as u128;
    let work = (estimate / 2).saturating_mul(branching.saturating_pow(k as u32));
    if work > budget as u128 * WORK_PER_STATE {
        return Err(Error::Budget {
            estimate: work.div_ceil(WORK_PER_STATE),
            budget,
        });
    }
    Ok(())
}

/// Calls `f` with every sorted multiset reachable from `cops` in one joint
/// move (duplicates possible).
fn for_each_joint_move(nbrs: &[Vec<usize>], cops: &[usize], buf: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let k = cops.len();
    let mut digits = vec![0usize; k];
    loop {
        for i in 0..k {
            buf[i] = nbrs[cops[i]][digits[i]];
        }
        buf.sort_unstable();
        f(buf);
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            digits[i] += 1;
            if digits[i] < nbrs[cops[i]].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Backward induction from the capture states.
///
/// Cop states are resolved the first time a successor gets a value (BFS
/// order makes that the minimum); robber states when their last successor
/// does, so the value is the maximum.
pub fn retrograde_solve(spec: &GridSpec, k: usize, budget: u64) -> Result<ValueTable> {
    check_budget(spec, k, budget)?;
    let v = spec.vertex_count();
    let packer = Packer::new(v, k);
    let total = packer.multisets() as usize * v;
    let nbrs = closed_neighbourhoods(spec);
    let mut cop = vec![INF; total];
    let mut rob = vec![INF; total];
    let mut counter = vec![0u8; total];
    let mut overflow = HashMap::new();

    let mut cs = vec![0usize; k];
    let mut frontier = Vec::new();
    for rank in 0..packer.multisets() {
        packer.unrank(rank, &mut cs);
        for r in 0..v {
            let idx = rank as usize * v + r;
            if cs.contains(&r) {
                cop[idx] = 0;
                rob[idx] = 0;
                continue;
            }
            counter[idx] = nbrs[r].iter().filter(|d| !cs.contains(d)).count() as u8;
            if cs.iter().any(|c| nbrs[r].contains(c)) {
                cop[idx] = 1;
                frontier.push(idx);
            }
        }
    }

    let mut t: u32 = 1;
    let mut buf = vec![0usize; k];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let rank = (idx / v) as u64;
            let r = idx % v;
            packer.unrank(rank, &mut cs);
            for &from in &nbrs[r] {
                if cs.contains(&from) {
                    continue;
                }
                let ridx = rank as usize * v + from;
                if rob[ridx] != INF {
                    continue;
                }
                counter[ridx] -= 1;
                if counter[ridx] > 0 {
                    continue;
                }
                store(&mut rob, &mut overflow, ridx, t, false);
                for_each_joint_move(&nbrs, &cs, &mut buf, &mut |prev| {
                    if prev.contains(&from) {
                        return;
                    }
                    let cidx = packer.rank(prev) as usize * v + from;
                    if cop[cidx] == INF {
                        store(&mut cop, &mut overflow, cidx, t + 1, true);
                        next.push(cidx);
                    }
                });
            }
        }
        frontier = next;
        t += 1;
    }
    Ok(ValueTable {
        spec: *spec,
        packer,
        cop,
        rob,
        overflow,
    })
}

fn overflow_key(idx: usize, cops_turn: bool) -> u64 {
    (idx as u64) * 2 + u64::from(!cops_turn)
}

fn store(table: &mut [u8], overflow: &mut HashMap<u64, u32>, idx: usize, value: u32, cops_turn: bool) {
    if value >= OVERFLOW as u32 {
        table[idx] = OVERFLOW;
        overflow.insert(overflow_key(idx, cops_turn), value);
    } else {
        table[idx] = value as u8;
    }
}

impl ValueTable {
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn k(&self) -> usize {
        self.packer.k()
    }

    /// Number of packed states (both sides to move).
    pub fn len(&self) -> usize {
        self.cop.len() * 2
    }

    pub fn is_empty(&self) -> bool {
        self.cop.is_empty()
    }

    fn decode(&self, idx: usize, cops_turn: bool) -> Value {
        let raw = if cops_turn { self.cop[idx] } else { self.rob[idx] };
        match raw {
            INF => Value::Infinite,
            OVERFLOW => Value::Finite(self.overflow[&overflow_key(idx, cops_turn)]),
            x => Value::Finite(x as u32),
        }
    }

    fn slot(&self, cops: &[Vertex], robber: Vertex) -> Result<usize> {
        if cops.len() != self.k() {
            return Err(Error::Input(format!("{} cops for a k = {} table", cops.len(), self.k())));
        }
        for &v in cops.iter().chain(std::iter::once(&robber)) {
            if !self.spec.contains(v) {
                return Err(Error::Input(format!("{v} is not on {}", self.spec)));
            }
        }
        let mut cs: Vec<usize> = cops.iter().map(|&c| self.spec.index(c)).collect();
        cs.sort_unstable();
        Ok(self.packer.rank(&cs) as usize * self.spec.vertex_count() + self.spec.index(robber))
    }

    /// Value of a position; cop order does not matter.
    pub fn value(&self, cops: &[Vertex], robber: Vertex, turn: Turn) -> Result<Value> {
        let idx = self.slot(cops, robber)?;
        Ok(self.decode(idx, turn == Turn::CopsToMove))
    }

    pub fn value_packed(&self, s: PackedState) -> Value {
        let (rank, r, turn) = s.split(self.spec.vertex_count());
        self.decode(rank as usize * self.spec.vertex_count() + r, turn == Turn::CopsToMove)
    }

    pub fn pack(&self, cops: &[Vertex], robber: Vertex, turn: Turn) -> Result<PackedState> {
        let idx = self.slot(cops, robber)?;
        let v = self.spec.vertex_count();
        Ok(PackedState::new((idx / v) as u64, idx % v, v, turn))
    }

    pub fn unpack(&self, s: PackedState) -> (Vec<Vertex>, Vertex, Turn) {
        let v = self.spec.vertex_count();
        let (rank, r, turn) = s.split(v);
        let mut cs = vec![0; self.k()];
        self.packer.unrank(rank, &mut cs);
        (cs.into_iter().map(|c| self.spec.vertex(c)).collect(), self.spec.vertex(r), turn)
    }

    /// Worst robber placement (any non-cop vertex) against each cop
    /// placement, minimised over cop placements. Returns the value and a
    /// best cop placement.
    pub fn optimum(&self) -> (Value, Vec<Vertex>) {
        let v = self.spec.vertex_count();
        let mut cs = vec![0; self.k()];
        let mut best: Option<(Value, u64)> = None;
        for rank in 0..self.packer.multisets() {
            self.packer.unrank(rank, &mut cs);
            let worst = (0..v)
                .filter(|r| !cs.contains(r))
                .map(|r| self.decode(rank as usize * v + r, true))
                .max();
            if let Some(w) = worst {
                if best.is_none_or(|(b, _)| w < b) {
                    best = Some((w, rank));
                }
            }
        }
        let (value, rank) = best.unwrap_or((Value::Finite(0), 0));
        self.packer.unrank(rank, &mut cs);
        (value, cs.iter().map(|&c| self.spec.vertex(c)).collect())
    }

    /// The robber's best reply to a fixed cop placement.
    pub fn value_against(&self, cops: &[Vertex], robber_may_touch: bool) -> Result<Value> {
        let mut worst = None;
        for r in self.spec.vertices() {
            let blocked = if robber_may_touch {
                cops.contains(&r)
            } else {
                cops.iter().any(|&c| self.spec.distance(c, r) <= 1)
            };
            if !blocked {
                let val = self.value(cops, r, Turn::CopsToMove)?;
                worst = worst.max(Some(val));
            }
        }
        Ok(worst.unwrap_or(Value::Finite(0)))
    }

    /// Checks the Bellman equations at `samples` random states.
    pub fn bellman_check(&self, samples: usize, seed: u64) -> BellmanReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = self.spec.vertex_count();
        let nbrs = closed_neighbourhoods(&self.spec);
        let mut cs = vec![0; self.k()];
        let mut buf = vec![0; self.k()];
        let mut violations = Vec::new();
        for _ in 0..samples {
            let rank = rng.gen_range(0..self.packer.multisets());
            let r = rng.gen_range(0..v);
            let cops_turn = rng.gen_bool(0.5);
            self.packer.unrank(rank, &mut cs);
            let idx = rank as usize * v + r;
            let got = self.decode(idx, cops_turn);
            let expected = if cs.contains(&r) {
                Value::Finite(0)
            } else if cops_turn {
                let mut best = Value::Infinite;
                for_each_joint_move(&nbrs, &cs, &mut buf, &mut |next| {
                    let succ = self.decode(self.packer.rank(next) as usize * v + r, false);
                    best = best.min(succ);
                });
                match best {
                    Value::Finite(x) => Value::Finite(x + 1),
                    Value::Infinite => Value::Infinite,
                }
            } else {
                nbrs[r]
                    .iter()
                    .map(|&to| self.decode(rank as usize * v + to, true))
                    .max()
                    .expect("closed neighbourhood is non-empty")
            };
            if got != expected {
                let turn = if cops_turn { Turn::CopsToMove } else { Turn::RobberToMove };
                violations.push(PackedState::new(rank, r, v, turn));
            }
        }
        BellmanReport {
            checked: samples,
            violations,
        }
    }

    /// Writes the table as a binary blob: magic, version, spec, k, then
    /// both value arrays and the overflow entries.
    pub fn write_blob<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(BLOB_MAGIC)?;
        out.write_all(&BLOB_VERSION.to_le_bytes())?;
        let kind = match self.spec.kind {
            GridKind::PlanarGrid => 0u32,
            GridKind::SemiTorus => 1,
            GridKind::Torus => 2,
        };
        for x in [kind, self.spec.m as u32, self.spec.n as u32, self.k() as u32] {
            out.write_all(&x.to_le_bytes())?;
        }
        out.write_all(&(self.cop.len() as u64).to_le_bytes())?;
        out.write_all(&self.cop)?;
        out.write_all(&self.rob)?;
        let mut extra: Vec<(&u64, &u32)> = self.overflow.iter().collect();
        extra.sort();
        out.write_all(&(extra.len() as u64).to_le_bytes())?;
        for (key, val) in extra {
            out.write_all(&key.to_le_bytes())?;
            out.write_all(&val.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_blob<R: Read>(mut input: R) -> Result<ValueTable> {
        let bad = |what: &str| Error::Input(format!("value table blob: {what}"));
        let mut magic = [0u8; 4];
        input.read_exact(&mut magic)?;
        if &magic != BLOB_MAGIC {
            return Err(bad("bad magic"));
        }
        if read_u32(&mut input)? != BLOB_VERSION {
            return Err(bad("unsupported version"));
        }
        let kind = match read_u32(&mut input)? {
            0 => GridKind::PlanarGrid,
            1 => GridKind::SemiTorus,
            2 => GridKind::Torus,
            _ => return Err(bad("unknown board kind")),
        };
        let m = read_u32(&mut input)? as usize;
        let n = read_u32(&mut input)? as usize;
        let k = read_u32(&mut input)? as usize;
        let spec = GridSpec::new(kind, m, n)?;
        let packer = Packer::new(spec.vertex_count(), k);
        let len = read_u64(&mut input)? as usize;
        if len != packer.multisets() as usize * spec.vertex_count() {
            return Err(bad("length does not match the header"));
        }
        let mut cop = vec![0u8; len];
        let mut rob = vec![0u8; len];
        input.read_exact(&mut cop)?;
        input.read_exact(&mut rob)?;
        let entries = read_u64(&mut input)?;
        let mut overflow = HashMap::new();
        for _ in 0..entries {
            let key = read_u64(&mut input)?;
            overflow.insert(key, read_u32(&mut input)?);
        }
        Ok(ValueTable {
            spec,
            packer,
            cop,
            rob,
            overflow,
        })
    }
}

fn read_u32<R: Read>(input: &mut R) -> Result<u32> {
    let mut b = [0u8; 4];
    input.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64<R: Read>(input: &mut R) -> Result<u64> {
    let mut b = [0u8; 8];
    input.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

const BLOB_MAGIC: &[u8; 4] = b"GPVT";
const BLOB_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellmanReport {
    pub checked: usize,
    pub violations: Vec<PackedState>,
}

impl BellmanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `min over cop placements, max over robber placements` of the optimal
/// capture time.
pub fn optimal_capture_time(spec: &GridSpec, k: usize, budget: u64) -> Result<Value> {
    Ok(retrograde_solve(spec, k, budget)?.optimum().0)
}

/// Outcome of a cop-number search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CopNumber {
    Exact(usize),
    /// Every `k` below the bound was refuted; the bound itself exceeded
    /// the budget.
    AtLeast(usize),
}

impl fmt::Display for CopNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CopNumber::Exact(k) => write!(f, "{k}"),
            CopNumber::AtLeast(k) => write!(f, ">= {k} (k = {k} untested within budget)"),
        }
    }
}

/// Smallest `k` with a finite optimum, trying `k = 1, 2, ...`.
pub fn cop_number(spec: &GridSpec, budget: u64) -> Result<CopNumber> {
    for k in 1..=spec.vertex_count() {
        match retrograde_solve(spec, k, budget) {
            Ok(table) => {
                if table.optimum().0 != Value::Infinite {
                    return Ok(CopNumber::Exact(k));
                }
            }
            Err(Error::Budget { .. }) => return Ok(CopNumber::AtLeast(k)),
            Err(e) => return Err(e),
        }
    }
    Ok(CopNumber::Exact(spec.vertex_count()))
}

/// `min over v` of the minimal siege cardinality: a lower bound on the
/// cop number.
pub fn siege_lower_bound(spec: &GridSpec) -> usize {
    spec.vertices()
        .map(|v| minimal_siege_cardinality(spec, v))
        .min()
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_boards() {
        let g = GridSpec::grid(3, 3).unwrap();
        assert_eq!(optimal_capture_time(&g, 1, DEFAULT_BUDGET).unwrap(), Value::Infinite);
        assert_eq!(optimal_capture_time(&g, 2, DEFAULT_BUDGET).unwrap(), Value::Finite(2));
    }

    #[test]
    fn blob_round_trip() {
        let g = GridSpec::semitorus(3, 4).unwrap();
        let t = retrograde_solve(&g, 2, DEFAULT_BUDGET).unwrap();
        let mut buf = Vec::new();
        t.write_blob(&mut buf).unwrap();
        let back = ValueTable::read_blob(buf.as_slice()).unwrap();
        assert_eq!(back.cop, t.cop);
        assert_eq!(back.rob, t.rob);
        assert!(ValueTable::read_blob(&buf[..10]).is_err());
    }

    #[test]
    fn budget_refusal_reports_estimate() {
        let g = GridSpec::grid(6, 6).unwrap();
        match retrograde_solve(&g, 4, 1000) {
            Err(Error::Budget { estimate, budget }) => {
                assert_eq!(estimate, 82251 * 36 * 2);
                assert_eq!(budget, 1000);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bellman_holds() {
        let t = retrograde_solve(&GridSpec::torus(4, 4).unwrap(), 2, DEFAULT_BUDGET).unwrap();
        assert!(t.bellman_check(2000, 7).passed());
    }
}
