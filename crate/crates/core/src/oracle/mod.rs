//! Exact ground truth at desk scale.
//!
//! [`retrograde_solve`] computes optimal play for every position by
//! backward induction; [`verify_strategy_worst_case`] exhausts every robber
//! behaviour against one deterministic cop strategy.

mod packing;
mod retrograde;
mod verify;

pub use packing::{state_count, PackedState, Packer};
pub use retrograde::{
    WORK_PER_STATE,
    cop_number, optimal_capture_time, retrograde_solve, siege_lower_bound, BellmanReport, CopNumber, Value,
    ValueTable, DEFAULT_BUDGET,
};
pub use verify::{explore, Sandwich, verify_strategy_worst_case, verify_with_budget, Transition, VerifyReport, DEFAULT_MEMO_BUDGET};
