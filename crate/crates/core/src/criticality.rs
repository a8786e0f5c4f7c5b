//! Edge-criticality of the game domination invariants and whole-graph
//! classification records.

use alloc::format;
use alloc::string::String;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, MAX_CANON_VERTICES};
use crate::families::{family_membership, FamilyFlags};
use crate::graph::Graph;
use crate::graph6::graph6_encode;
use crate::solver::{game_value, game_value_capped, CappedValue, GameValue, Player};

/// Which player opens the game.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum GameVariant {
    /// Dominator moves first.
    DGame,
    /// Staller moves first.
    SGame,
}

impl GameVariant {
    pub fn first_player(self) -> Player {
        match self {
            GameVariant::DGame => Player::Dominator,
            GameVariant::SGame => Player::Staller,
        }
    }
}

impl core::fmt::Display for GameVariant {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GameVariant::DGame => write!(f, "D"),
            GameVariant::SGame => write!(f, "S"),
        }
    }
}

/// Both game domination invariants: Dominator-start first, Staller-start
/// second.
pub fn mb_invariants(g: &Graph) -> (GameValue, GameValue) {
    (
        game_value(g, VertexSet::EMPTY, Player::Dominator),
        game_value(g, VertexSet::EMPTY, Player::Staller),
    )
}

/// The variant's invariant paired with whether deleting any single edge
/// strictly raises it. Only graphs with a finite value qualify; an edgeless
/// graph with a finite value qualifies vacuously.
pub fn is_critical(g: &Graph, variant: GameVariant) -> (GameValue, bool) {
    let first = variant.first_player();
    let value = game_value(g, VertexSet::EMPTY, first);
    let GameValue::Finite(k) = value else {
        return (value, false);
    };
    let critical = g.edges().into_iter().all(|e| {
        let reduced = g.delete_edge(e).expect("edge listed by the graph");
        game_value_capped(&reduced, VertexSet::EMPTY, first, k) == CappedValue::ExceedsCap
    });
    (value, critical)
}

/// Conditions every Staller-start-critical graph with value 2 satisfies:
/// order at least 5, minimum degree at least 2, no vertex adjacent to all
/// others.
pub fn necessary_conditions(g: &Graph) -> bool {
    g.n() >= 5
        && g.min_degree().is_some_and(|d| d >= 2)
        && g.max_degree().is_some_and(|d| d + 2 <= g.n())
}

/// Stable identifier: canonical-form hex for orders up to 16, otherwise the
/// graph6 encoding of the given labeling prefixed with `g6:`.
pub fn canonical_id(g: &Graph) -> String {
    if g.n() <= MAX_CANON_VERTICES {
        canonical_form(g).expect("order within canonical capacity").hex()
    } else {
        format!("g6:{}", graph6_encode(g))
    }
}

/// Everything the census records about one graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassificationRecord {
    pub canonical_id: String,
    pub n: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub has_cut_vertex: bool,
    pub gamma: usize,
    pub gamma_mb: GameValue,
    pub gamma_mb_prime: GameValue,
    pub critical_d: bool,
    pub critical_s: bool,
    pub family: FamilyFlags,
}

pub fn classify(g: &Graph) -> ClassificationRecord {
    let (gamma_mb, gamma_mb_prime) = mb_invariants(g);
    ClassificationRecord {
        canonical_id: canonical_id(g),
        n: g.n(),
        connected: g.is_connected(),
        bipartite: g.is_bipartite().is_some(),
        triangle_free: g.is_triangle_free(),
        has_cut_vertex: !g.cut_vertices().is_empty(),
        gamma: g.domination_number(),
        gamma_mb,
        gamma_mb_prime,
        critical_d: is_critical(g, GameVariant::DGame).1,
        critical_s: is_critical(g, GameVariant::SGame).1,
        family: family_membership(g),
    }
}
