//! Solvers for poset positional games: Maker-Breaker and Maker-Maker games
//! played on a partially ordered board, where a vertex may be claimed only
//! once every vertex below it has been claimed.
//!
//! The [`oracle`] module is an exhaustive reference solver. Everything else
//! (the antichain DP, chain DPs, closed-form solvers, the union calculus and
//! the hardness generators) is checked against it.

pub mod chains;
pub mod dispatch;
pub mod dp;
pub mod error;
pub mod format;
pub mod game;
pub mod oracle;
pub mod poly;
pub mod poset;
pub mod random;
pub mod reductions;
pub mod union;
pub mod verify;

pub use error::{PpgError, Result};
pub use game::{Convention, Game, MmResult, Outcome, Player, Position, Status};
pub use poset::{Color, Poset, PosetStats};
