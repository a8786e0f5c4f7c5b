//! Exact solver for the Maker-Breaker domination game.
//!
//! Dominator and Staller alternately claim unplayed vertices. Dominator wins
//! when his claimed set dominates the graph and wants to get there in as few
//! of his own moves as possible; Staller wins by claiming a whole closed
//! neighborhood, and otherwise delays Dominator as long as she can. The value
//! of a game is the number of Dominator moves under optimal play, infinite
//! when Staller wins.
//!
//! A game state abstracts to `(U, A, turn)`: `U` the undominated vertices
//! outside the predominated set, `A` the unplayed vertices. The value
//! recursion is memoized per solve on that key. A Dominator move budget
//! prunes deep branches for decision queries; the budget at a state is a
//! function of `|A|` and the root, so the cache never mixes budgets.

use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    #[inline]
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Dominator => write!(f, "dominator"),
            Player::Staller => write!(f, "staller"),
        }
    }
}

/// Number of Dominator moves under optimal play; `Infinity` when Staller
/// prevents domination forever. The derived order puts every finite value
/// below `Infinity`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GameValue {
    Finite(u32),
    Infinity,
}

impl GameValue {
    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    /// Adds one Dominator move; infinity absorbs.
    #[inline]
    pub fn plus_one(self) -> GameValue {
        match self {
            GameValue::Finite(k) => GameValue::Finite(k + 1),
            GameValue::Infinity => GameValue::Infinity,
        }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(k) => write!(f, "{k}"),
            GameValue::Infinity => write!(f, "inf"),
        }
    }
}

/// Outcome of a capped decision query.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CappedValue {
    /// Exact value, at most the cap.
    AtMost(u32),
    /// Value exceeds the cap (infinite values included).
    ExceedsCap,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TerminalStatus {
    DominatorWon,
    StallerWon,
    Ongoing,
}

/// Move ordering used when expanding a state. Orderings never change values,
/// only search effort; tests compare both.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub enum MoveOrdering {
    /// Dominator tries moves by descending fresh coverage `|N[a] ∩ U|`;
    /// Staller by descending count of nearly-surrounded undominated
    /// vertices she attacks. Ties break toward lower index.
    #[default]
    Heuristic,
    /// Plain ascending vertex index.
    IndexOrder,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolverError {
    /// A predominated or partition vertex is not in the graph.
    VertexOutOfRange { v: usize, n: usize },
    /// The requested move is not an unplayed vertex of an ongoing game.
    IllegalMove { v: usize },
    /// The position has already been decided.
    TerminalPosition,
    /// The two sets do not partition the vertex set.
    InvalidPartition,
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SolverError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            SolverError::IllegalMove { v } => write!(f, "vertex {v} is not a legal move"),
            SolverError::TerminalPosition => write!(f, "position is already decided"),
            SolverError::InvalidPartition => write!(f, "sets do not partition the vertex set"),
        }
    }
}

impl core::error::Error for SolverError {}

/// A game state: the abstraction `(U, A, turn)` that drives the value,
/// plus the concrete claim sets for provenance and replay.
#[derive(Clone)]
pub struct Position<'g> {
    g: &'g Graph,
    undominated: VertexSet,
    available: VertexSet,
    to_move: Player,
    dominator: VertexSet,
    staller: VertexSet,
}

/// Fresh position on `g` with `predominated` treated as already dominated.
/// Predominated vertices stay playable; they just need no covering.
pub fn make_position(
    g: &Graph,
    predominated: VertexSet,
    first: Player,
) -> Result<Position<'_>, SolverError> {
    if let Some(v) = (predominated - g.vertices()).first() {
        return Err(SolverError::VertexOutOfRange { v, n: g.n() });
    }
    Ok(Position {
        g,
        undominated: g.vertices() - predominated,
        available: g.vertices(),
        to_move: first,
        dominator: VertexSet::EMPTY,
        staller: VertexSet::EMPTY,
    })
}

impl<'g> Position<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Vertices not yet dominated by Dominator's claims or predomination.
    pub fn undominated(&self) -> VertexSet {
        self.undominated
    }

    /// Unplayed vertices.
    pub fn available(&self) -> VertexSet {
        self.available
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn dominator_claims(&self) -> VertexSet {
        self.dominator
    }

    pub fn staller_claims(&self) -> VertexSet {
        self.staller
    }

    /// Dominator has won when nothing is left to dominate; Staller has won
    /// when some undominated vertex has its whole closed neighborhood
    /// unavailable, which covers the board running out.
    pub fn terminal_status(&self) -> TerminalStatus {
        terminal(self.g, self.undominated, self.available)
    }

    /// Plays `v` for the player to move.
    pub fn apply(&self, v: usize) -> Result<Position<'g>, SolverError> {
        if self.terminal_status() != TerminalStatus::Ongoing {
            return Err(SolverError::TerminalPosition);
        }
        if !self.available.contains(v) {
            return Err(SolverError::IllegalMove { v });
        }
        let mut next = self.clone();
        next.available.remove(v);
        match self.to_move {
            Player::Dominator => {
                next.dominator.insert(v);
                next.undominated -= self.g.closed_neighborhood(v);
            }
            Player::Staller => next.staller.insert(v),
        }
        next.to_move = self.to_move.other();
        Ok(next)
    }
}

#[inline]
fn terminal(g: &Graph, u: VertexSet, a: VertexSet) -> TerminalStatus {
    if u.is_empty() {
        return TerminalStatus::DominatorWon;
    }
    for v in u.iter() {
        if !g.closed_neighborhood(v).intersects(a) {
            return TerminalStatus::StallerWon;
        }
    }
    TerminalStatus::Ongoing
}

// ===== memoized minimax engine =====

struct Engine {
    nbhd: Vec<VertexSet>, // closed neighborhoods
    memo: HashMap<(u64, u64, bool), CappedValue>,
    ordering: MoveOrdering,
}

impl Engine {
    fn new(g: &Graph, ordering: MoveOrdering) -> Self {
        Engine {
            nbhd: (0..g.n()).map(|v| g.closed_neighborhood(v)).collect(),
            memo: HashMap::new(),
            ordering,
        }
    }

    /// Value of `(u, a, turn)` as long as Dominator needs at most `budget`
    /// further moves. Budget at a state is determined by `|a|` and the root
    /// cap, so memoizing on the state alone is sound within one engine.
    fn solve(&mut self, u: VertexSet, a: VertexSet, turn: Player, budget: u32) -> CappedValue {
        if u.is_empty() {
            return CappedValue::AtMost(0);
        }
        let mut staller_won = false;
        for v in u.iter() {
            if !self.nbhd[v].intersects(a) {
                staller_won = true;
                break;
            }
        }
        if staller_won {
            return CappedValue::ExceedsCap;
        }
        if turn == Player::Dominator && budget == 0 {
            return CappedValue::ExceedsCap;
        }
        let key = (u.bits(), a.bits(), turn == Player::Dominator);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        debug_assert!(!a.is_empty(), "ongoing positions have moves");
        let result = match turn {
            Player::Dominator => {
                let mut best = CappedValue::ExceedsCap;
                for m in self.ordered_moves(u, a, turn) {
                    let child = self.solve(u - self.nbhd[m], a.without(m), Player::Staller, budget - 1);
                    if let CappedValue::AtMost(k) = child {
                        let total = k + 1;
                        match best {
                            CappedValue::AtMost(b) if b <= total => {}
                            _ => best = CappedValue::AtMost(total),
                        }
                        if total == 1 {
                            break;
                        }
                    }
                }
                best
            }
            Player::Staller => {
                let mut best = CappedValue::AtMost(0);
                for m in self.ordered_moves(u, a, turn) {
                    match self.solve(u, a.without(m), Player::Dominator, budget) {
                        CappedValue::ExceedsCap => {
                            best = CappedValue::ExceedsCap;
                            break;
                        }
                        CappedValue::AtMost(k) => {
                            if let CappedValue::AtMost(b) = best {
                                if k > b {
                                    best = CappedValue::AtMost(k);
                                }
                            }
                        }
                    }
                }
                best
            }
        };
        self.memo.insert(key, result);
        result
    }

    fn ordered_moves(&self, u: VertexSet, a: VertexSet, turn: Player) -> Vec<usize> {
        let mut moves: Vec<usize> = a.iter().collect();
        if self.ordering == MoveOrdering::IndexOrder {
            return moves;
        }
        match turn {
            Player::Dominator => {
                moves.sort_by_key(|&m| core::cmp::Reverse((self.nbhd[m] & u).len()));
            }
            Player::Staller => {
                moves.sort_by_key(|&m| {
                    let threat = u
                        .iter()
                        .filter(|&v| self.nbhd[v].contains(m) && (self.nbhd[v] & a).len() <= 2)
                        .count();
                    core::cmp::Reverse(threat)
                });
            }
        }
        moves
    }
}

// A game value never exceeds the order (Dominator moves at most n times),
// so this budget never prunes and the engine returns exact values.
fn unbounded_budget(g: &Graph) -> u32 {
    g.n() as u32 + 1
}

fn to_game_value(c: CappedValue) -> GameValue {
    match c {
        CappedValue::AtMost(k) => GameValue::Finite(k),
        CappedValue::ExceedsCap => GameValue::Infinity,
    }
}

/// Value of the game on `g` with `predominated` already dominated and
/// `first` to move. `first = Staller` gives the Staller-start invariant,
/// `first = Dominator` the Dominator-start one.
pub fn game_value(g: &Graph, predominated: VertexSet, first: Player) -> GameValue {
    game_value_with_ordering(g, predominated, first, MoveOrdering::default())
}

/// Same as [`game_value`] with an explicit move ordering, for equivalence
/// testing.
pub fn game_value_with_ordering(
    g: &Graph,
    predominated: VertexSet,
    first: Player,
    ordering: MoveOrdering,
) -> GameValue {
    let p = make_position(g, predominated, first).expect("predominated within the vertex set");
    position_value_with_ordering(&p, ordering)
}

/// Exact value of an arbitrary position.
pub fn position_value(p: &Position<'_>) -> GameValue {
    position_value_with_ordering(p, MoveOrdering::default())
}

fn position_value_with_ordering(p: &Position<'_>, ordering: MoveOrdering) -> GameValue {
    let mut engine = Engine::new(p.graph(), ordering);
    let budget = unbounded_budget(p.graph());
    to_game_value(engine.solve(p.undominated(), p.available(), p.to_move(), budget))
}

/// Decision query: the exact value when it is at most `cap`, otherwise just
/// the fact that it exceeds `cap` (infinite values included). Branches where
/// Dominator has spent `cap` moves are pruned, which is what makes
/// edge-criticality sweeps cheap.
pub fn game_value_capped(
    g: &Graph,
    predominated: VertexSet,
    first: Player,
    cap: u32,
) -> CappedValue {
    let p = make_position(g, predominated, first).expect("predominated within the vertex set");
    let mut engine = Engine::new(g, MoveOrdering::default());
    engine.solve(p.undominated(), p.available(), p.to_move(), cap)
}

/// Moves achieving the minimax value for the player to move: minimizers for
/// Dominator, maximizers for Staller. When Dominator is lost every move
/// "achieves" infinity, so all of `A` comes back.
pub fn optimal_moves(p: &Position<'_>) -> Result<VertexSet, SolverError> {
    if p.terminal_status() != TerminalStatus::Ongoing {
        return Err(SolverError::TerminalPosition);
    }
    let mut engine = Engine::new(p.graph(), MoveOrdering::default());
    let budget = unbounded_budget(p.graph());
    let value = engine.solve(p.undominated(), p.available(), p.to_move(), budget);
    let mut out = VertexSet::EMPTY;
    for m in p.available().iter() {
        let a = p.available().without(m);
        let achieved = match p.to_move() {
            Player::Dominator => {
                let u = p.undominated() - p.graph().closed_neighborhood(m);
                match engine.solve(u, a, Player::Staller, budget - 1) {
                    CappedValue::AtMost(k) => CappedValue::AtMost(k + 1),
                    CappedValue::ExceedsCap => CappedValue::ExceedsCap,
                }
            }
            Player::Staller => engine.solve(p.undominated(), a, Player::Dominator, budget),
        };
        if achieved == value {
            out.insert(m);
        }
    }
    debug_assert!(!out.is_empty(), "some move achieves the minimax value");
    Ok(out)
}

// ===== transcripts =====

/// Alternating claimed vertices with player tags, in play order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MoveTranscript {
    pub moves: Vec<(Player, usize)>,
}

impl fmt::Display for MoveTranscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moves.is_empty() {
            return write!(f, "(no moves)");
        }
        let mut d = 0;
        let mut s = 0;
        let mut sep = "";
        for &(player, v) in &self.moves {
            let tag = match player {
                Player::Dominator => {
                    d += 1;
                    ('d', d)
                }
                Player::Staller => {
                    s += 1;
                    ('s', s)
                }
            };
            write!(f, "{sep}{}{}={v}", tag.0, tag.1)?;
            sep = " ";
        }
        Ok(())
    }
}

/// Optimal play from a fresh position, both sides playing minimax moves and
/// breaking ties toward the lowest vertex index. Returns the game value and
/// the realizing line; a finite value `k` yields exactly `k` Dominator moves.
pub fn principal_line(
    g: &Graph,
    predominated: VertexSet,
    first: Player,
) -> Result<(GameValue, MoveTranscript), SolverError> {
    let mut pos = make_position(g, predominated, first)?;
    let value = position_value(&pos);
    let mut transcript = MoveTranscript::default();
    while pos.terminal_status() == TerminalStatus::Ongoing {
        let m = optimal_moves(&pos)?
            .first()
            .expect("ongoing positions have optimal moves");
        transcript.moves.push((pos.to_move(), m));
        pos = pos.apply(m)?;
    }
    if let GameValue::Finite(k) = value {
        debug_assert_eq!(
            pos.dominator_claims().len(),
            k as usize,
            "optimal play realizes the game value"
        );
    }
    Ok((value, transcript))
}

// ===== history-level oracle =====

/// Game value computed directly on claim histories: no state abstraction, no
/// memoization, no move ordering, no pruning. Exponential; cross-validation
/// for small orders only.
pub fn game_value_bruteforce(g: &Graph, predominated: VertexSet, first: Player) -> GameValue {
    bruteforce_from_claims(g, predominated, VertexSet::EMPTY, VertexSet::EMPTY, first)
}

/// Oracle continuation from explicit claim sets; returns the total count of
/// Dominator claims at the end of optimal play (including those already in
/// `dominator`).
pub fn bruteforce_from_claims(
    g: &Graph,
    predominated: VertexSet,
    dominator: VertexSet,
    staller: VertexSet,
    turn: Player,
) -> GameValue {
    let dominated = predominated | g.closed_neighborhood_of_set(dominator);
    let undominated = g.vertices() - dominated;
    if undominated.is_empty() {
        return GameValue::Finite(dominator.len() as u32);
    }
    let free = g.vertices() - dominator - staller;
    for v in undominated.iter() {
        if g.closed_neighborhood(v).is_subset_of(staller) {
            return GameValue::Infinity;
        }
    }
    debug_assert!(!free.is_empty(), "undominated vertices leave free moves");
    let children = free.iter().map(|m| match turn {
        Player::Dominator => {
            bruteforce_from_claims(g, predominated, dominator.with(m), staller, Player::Staller)
        }
        Player::Staller => {
            bruteforce_from_claims(g, predominated, dominator, staller.with(m), Player::Dominator)
        }
    });
    match turn {
        Player::Dominator => children.min().expect("free moves exist"),
        Player::Staller => children.max().expect("free moves exist"),
    }
}

// ===== pairing bound =====

/// True when both halves of the partition induce subgraphs with at least two
/// universal vertices. In that case Dominator can pair his replies inside
/// each half and win the Staller-start game in at most two moves.
pub fn pairing_bound(g: &Graph, v1: VertexSet, v2: VertexSet) -> Result<bool, SolverError> {
    if v1.intersects(v2) || (v1 | v2) != g.vertices() {
        return Err(SolverError::InvalidPartition);
    }
    let (g1, _) = g.induced_subgraph(v1);
    let (g2, _) = g.induced_subgraph(v2);
    Ok(g1.universal_vertices().len() >= 2 && g2.universal_vertices().len() >= 2)
}
