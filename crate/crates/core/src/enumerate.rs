//! Built-in graph enumeration for small orders.
//!
//! Walks every edge subset of `K_n` (at most 2^21 subsets for `n = 7`),
//! deduplicates by canonical certificate, and returns one canonical
//! representative per isomorphism class, ordered by certificate. Larger
//! corpora are expected to arrive as graph6 files instead.

use alloc::vec::Vec;
use hashbrown::HashSet;

use crate::canon::min_certificate;
use crate::graph::{Graph, GraphError};

/// Largest order the built-in enumerators accept.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// All connected graphs of order `n` up to isomorphism, `1 ≤ n ≤ 7`.
///
/// Counts by order: 1, 1, 2, 6, 21, 112, 853.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    enumerate(n, true)
}

/// All graphs of order `n` up to isomorphism, connected or not, `1 ≤ n ≤ 7`.
///
/// Counts by order: 1, 2, 4, 11, 34, 156, 1044.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, GraphError> {
    enumerate(n, false)
}

fn enumerate(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(GraphError::UnsupportedOrder {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut certs: HashSet<u128> = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut g = Graph::edgeless(n).expect("order within capacity");
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v).expect("distinct pairs");
            }
        }
        if connected_only && !g.is_connected() {
            continue;
        }
        certs.insert(min_certificate(&g));
    }
    let mut certs: Vec<u128> = certs.into_iter().collect();
    certs.sort_unstable();
    Ok(certs
        .into_iter()
        .map(|cert| rebuild(n, cert))
        .collect())
}

/// Inverse of the certificate packing for a known order.
fn rebuild(n: usize, cert: u128) -> Graph {
    let nbits = n * (n - 1) / 2;
    let mut g = Graph::edgeless(n).expect("order within capacity");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if cert >> (nbits - 1 - k) & 1 == 1 {
                g.add_edge(i, j).expect("upper-triangle order");
            }
            k += 1;
        }
    }
    debug_assert_eq!(min_certificate(&g), cert, "representative is canonical");
    g
}
