//! The memoized solver against a plain unmemoized recursion on raw claim
//! sets, plus invariance checks that justify its internal shortcuts.

use std::collections::HashMap;

use mbd_core::bitset::VertexSet;
use mbd_core::enumerate::enumerate_all;
use mbd_core::graph::Graph;
use mbd_core::solver::{
    bruteforce_from_claims, game_value, game_value_bruteforce, game_value_with_ordering,
    GameValue, MoveOrdering, Player,
};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BOTH: [Player; 2] = [Player::Dominator, Player::Staller];

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mask = rng.next_u64();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| *p)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn matches_oracle_exhaustively_through_order_5() {
    for n in 1..=5 {
        for g in enumerate_all(n).unwrap() {
            for first in BOTH {
                assert_eq!(
                    game_value(&g, VertexSet::EMPTY, first),
                    game_value_bruteforce(&g, VertexSet::EMPTY, first),
                    "order {n}, {first} first, edges {:?}",
                    g.edges()
                );
            }
        }
    }
}

#[test]
fn matches_oracle_on_sampled_order_6_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd5);
    for round in 0..200 {
        let g = random_graph(6, &mut rng);
        // A quarter of the rounds also exercise predominated starts.
        let pre = if round % 4 == 0 {
            (0..6).filter(|_| rng.gen::<bool>()).collect()
        } else {
            VertexSet::EMPTY
        };
        for first in BOTH {
            assert_eq!(
                game_value(&g, pre, first),
                game_value_bruteforce(&g, pre, first),
                "round {round}, {first} first, pre {pre}, edges {:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn move_ordering_never_changes_the_value() {
    for n in 1..=5 {
        for g in enumerate_all(n).unwrap() {
            for first in BOTH {
                assert_eq!(
                    game_value_with_ordering(&g, VertexSet::EMPTY, first, MoveOrdering::Heuristic),
                    game_value_with_ordering(&g, VertexSet::EMPTY, first, MoveOrdering::IndexOrder),
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x04de4);
    for _ in 0..100 {
        let g = random_graph(6, &mut rng);
        for first in BOTH {
            assert_eq!(
                game_value_with_ordering(&g, VertexSet::EMPTY, first, MoveOrdering::Heuristic),
                game_value_with_ordering(&g, VertexSet::EMPTY, first, MoveOrdering::IndexOrder),
            );
        }
    }
}

#[test]
fn continuation_depends_only_on_the_abstract_state() {
    // The solver caches on (undominated, available, to_move). Distinct claim
    // histories that collapse to the same triple must have the same
    // continuation; check with the raw-claim oracle over random histories.
    let mut rng = ChaCha8Rng::seed_from_u64(0xab57);
    let mut histories = 0usize;
    for _ in 0..40 {
        let g = random_graph(6, &mut rng);
        for first in BOTH {
            let mut seen: HashMap<(VertexSet, VertexSet, Player), GameValue> = HashMap::new();
            for _ in 0..25 {
                let mut d = VertexSet::EMPTY;
                let mut s = VertexSet::EMPTY;
                let mut turn = first;
                for _ in 0..rng.gen_range(0..=g.n()) {
                    let avail = g.vertices() - d - s;
                    let Some(v) = avail.iter().nth(rng.gen_range(0..avail.len().max(1))) else {
                        break;
                    };
                    if turn == Player::Dominator {
                        d = d.with(v);
                    } else {
                        s = s.with(v);
                    }
                    turn = turn.other();
                }
                let u = g.vertices() - g.closed_neighborhood_of_set(d);
                let a = g.vertices() - d - s;
                let continuation =
                    match bruteforce_from_claims(&g, VertexSet::EMPTY, d, s, turn) {
                        GameValue::Finite(total) => GameValue::Finite(total - d.len() as u32),
                        GameValue::Infinity => GameValue::Infinity,
                    };
                histories += 1;
                if let Some(prev) = seen.insert((u, a, turn), continuation) {
                    assert_eq!(prev, continuation, "abstract state ({u}, {a}, {turn})");
                }
            }
        }
    }
    assert!(histories >= 1000);
}
