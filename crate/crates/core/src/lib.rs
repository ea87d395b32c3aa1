//! Cops-and-robber pursuit on planar grids, semi-tori and tori.
//!
//! The crate covers the board model ([`topology`]), the game engine and
//! structural predicates ([`engine`]), the cop algorithms and robber
//! policies ([`strategies`]), an exact retrograde solver and exhaustive
//! strategy verifier ([`oracle`]), the closed-form bounds ([`analysis`])
//! and the command-line front end ([`cli`]).

pub mod error;
pub mod topology;
pub mod engine;
pub mod strategies;
pub mod oracle;
pub mod analysis;
pub mod cli;

pub use engine::{run_game, GameState, Trace};
pub use error::{Error, Result};
pub use strategies::{Algorithm, CopStrategyState, RobberPolicy, StrategyController};
pub use topology::{GridKind, GridSpec, Move, Vertex};
