//! Base-p Sprague-Grundy arithmetic for subtraction games.
//!
//! Covers carry-free base-`p` arithmetic ([`padic`]), bounded evaluation of
//! subtraction games and their canonical `p`-saturations ([`gamecore`]),
//! closed forms and full-descendant search for sums of Welter's games
//! ([`welter`]), Young-diagram combinatorics ([`young`]) and exhaustive
//! verification sweeps ([`verify`]).

pub mod error;
pub mod gamecore;
pub mod padic;
pub mod verify;
pub mod welter;
pub mod young;

pub use error::{Error, Result};
pub use gamecore::{Eval, EvalTable, GameSpec, MoveSet, Position, PositionSet, Reachability};
pub use padic::{Base, Order};
pub use verify::{list_suites, run_suite, Outcome, Params, Verdict};
pub use welter::{psi, psi_sum, SumPosition, WelterPosition};
pub use young::{DiagramTuple, HookMultiset, Shape, YoungDiagram};
