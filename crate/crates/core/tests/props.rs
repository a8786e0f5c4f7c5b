//! Property tests over randomly generated graphs.

use mbd_core::bitset::VertexSet;
use mbd_core::canon::canonical_form;
use mbd_core::graph::Graph;
use mbd_core::graph6::{graph6_decode, graph6_encode};
use mbd_core::solver::{game_value, Player};
use proptest::prelude::*;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask.rotate_left(*i as u32) & 1 == 1)
        .map(|(_, p)| *p)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn permutation_from_seed(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut state = seed | 1;
    for i in (1..n).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        perm.swap(i, (state >> 33) as usize % (i + 1));
    }
    perm
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|e| (perm[e.u()], perm[e.v()]))
        .collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

proptest! {
    #[test]
    fn graph6_round_trips(n in 0usize..=10, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let line = graph6_encode(&g);
        prop_assert_eq!(graph6_decode(&line).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labeling(n in 1usize..=8, mask in any::<u64>(), seed in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let h = relabel(&g, &permutation_from_seed(n, seed));
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn deleting_an_edge_never_lowers_the_value(n in 2usize..=6, mask in any::<u64>(), pick in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let e = edges[(pick % edges.len() as u64) as usize];
        let reduced = g.delete_edge(e).unwrap();
        for first in [Player::Dominator, Player::Staller] {
            prop_assert!(
                game_value(&reduced, VertexSet::EMPTY, first)
                    >= game_value(&g, VertexSet::EMPTY, first)
            );
        }
    }

    #[test]
    fn predominating_more_never_raises_the_value(n in 1usize..=6, mask in any::<u64>(), pre in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let smaller: VertexSet = (0..n).filter(|v| pre >> v & 1 == 1).collect();
        let larger = (0..n)
            .filter(|v| pre >> (v + 8) & 1 == 1)
            .collect::<VertexSet>()
            | smaller;
        for first in [Player::Dominator, Player::Staller] {
            prop_assert!(
                game_value(&g, larger, first) <= game_value(&g, smaller, first)
            );
        }
    }
}
