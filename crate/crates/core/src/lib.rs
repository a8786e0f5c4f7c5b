#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

//! Exact solver and structure library for the Maker-Breaker domination game.
//!
//! Two players alternately claim unplayed vertices of a graph. Dominator wins
//! once his claimed vertices dominate the graph; Staller wins once she owns a
//! whole closed neighborhood, which makes domination impossible. The library
//! computes the optimal number of Dominator moves for both move orders,
//! decides edge-criticality of that invariant, builds the graph families that
//! realize the critical graphs, and recognizes them structurally.
//!
//! Everything here is `no_std`-compatible (allocation only); IO, parallel
//! census runs, and report formats live in the companion `mbd-cli` crate.

extern crate alloc;

pub mod bitset;
pub mod canon;
pub mod criticality;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod solver;

pub use bitset::VertexSet;
pub use canon::CanonicalForm;
pub use criticality::{ClassificationRecord, GameVariant};
pub use graph::{Edge, Graph, GraphError};
pub use solver::{GameValue, Player, Position};
