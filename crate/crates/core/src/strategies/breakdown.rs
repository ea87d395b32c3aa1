use serde::Serialize;

use crate::engine::{any_pre_siege, is_siege, Trace};
use crate::error::{Error, Result};

/// Round counts read off a captured game: guard rounds, rounds until a
/// cop move first builds a pre-siege, rounds from there until a cop move
/// builds a siege, and the capture time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChaseBreakdown {
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
    pub t: usize,
}

/// Splits a trace into guard, pre-siege and siege stretches.
///
/// Positions are judged right after each cop move, before the robber
/// answers. Rounds without a phase label count as chase rounds.
pub fn chase_breakdown(trace: &Trace) -> Result<ChaseBreakdown> {
    let t = trace
        .capture_time()
        .ok_or_else(|| Error::Trace("the game did not end in capture".into()))?;
    let spec = &trace.header.spec;
    let t1 = trace
        .rounds
        .iter()
        .filter(|r| r.phase.as_deref().is_some_and(|p| p.starts_with("guard")))
        .count();
    let mut robber = trace.header.robber;
    let mut pre = None;
    let mut siege = None;
    for rec in &trace.rounds {
        if is_siege(spec, &rec.cops, robber) || rec.robber_move.is_none() {
            siege.get_or_insert(rec.round);
        }
        if any_pre_siege(spec, &rec.cops, robber) || siege.is_some() {
            pre.get_or_insert(rec.round);
        }
        robber = rec.robber;
    }
    let (pre, siege) = (pre.unwrap_or(t), siege.unwrap_or(t));
    Ok(ChaseBreakdown {
        t1,
        t2: pre.saturating_sub(t1),
        t3: siege - pre,
        t,
    })
}
