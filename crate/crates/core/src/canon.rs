//! Canonical forms for isomorphism testing, for orders up to 16.
//!
//! Color refinement (degrees, then iterated neighbor-color counts) narrows
//! the vertex orderings; backtracking individualizes one vertex of the first
//! non-singleton class at a time and keeps the lexicographically least
//! relabeled adjacency bit-string. Two graphs on at most 16 vertices get the
//! same certificate exactly when they are isomorphic. This trades speed on
//! highly symmetric graphs for simplicity, which is fine at census scale.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

/// Largest order `canonical_form` accepts.
pub const MAX_CANON_VERTICES: usize = 16;

/// Isomorphism certificate: the order byte followed by the relabeled upper
/// triangle, packed big-endian, eight bits per byte.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Lowercase hex rendering, usable as a stable identifier.
    pub fn hex(&self) -> String {
        use fmt::Write;
        let mut s = String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            write!(s, "{b:02x}").expect("writing to a String");
        }
        s
    }

    /// Rebuilds the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.bytes[0] as usize;
        let mut g = Graph::edgeless(n).expect("certificate order within capacity");
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = self.bytes[1 + k / 8];
                if byte >> (7 - k % 8) & 1 == 1 {
                    g.add_edge(i, j).expect("upper-triangle order");
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hex())
    }
}

/// Canonical certificate of the isomorphism class of `g`; `n ≤ 16`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::UnsupportedOrder {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let cert = min_certificate(g);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut bytes = Vec::with_capacity(1 + nbits.div_ceil(8));
    bytes.push(n as u8);
    for byte_idx in 0..nbits.div_ceil(8) {
        let mut b = 0u8;
        for bit in 0..8 {
            let k = byte_idx * 8 + bit;
            if k < nbits {
                b |= (cert_bit(cert, nbits, k) as u8) << (7 - bit);
            }
        }
        bytes.push(b);
    }
    Ok(CanonicalForm { bytes })
}

#[inline]
fn cert_bit(cert: u128, nbits: usize, k: usize) -> bool {
    cert >> (nbits - 1 - k) & 1 == 1
}

/// Least relabeled adjacency bit-string over the orderings consistent with
/// color refinement. Exposed within the crate for bulk deduplication.
pub(crate) fn min_certificate(g: &Graph) -> u128 {
    let n = g.n();
    debug_assert!(n <= MAX_CANON_VERTICES);
    if n < 2 {
        return 0;
    }
    let mut cells: Vec<VertexSet> = Vec::new();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        cells.push((0..n).filter(|&v| g.degree(v) == d).collect());
    }
    let mut best: Option<u128> = None;
    search(g, cells, &mut best);
    best.expect("some ordering is always reachable")
}

fn search(g: &Graph, mut cells: Vec<VertexSet>, best: &mut Option<u128>) {
    refine(g, &mut cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let cand = certificate_for(g, &cells);
            if best.is_none_or(|b| cand < b) {
                *best = Some(cand);
            }
        }
        Some(i) => {
            let cell = cells[i];
            // Pairwise interchangeable vertices (equal adjacency outside the
            // cell, clique or independent inside) admit every transposition
            // as an automorphism, so one branch suffices.
            let candidates = if interchangeable(g, cell) {
                VertexSet::singleton(cell.first().expect("non-singleton cell"))
            } else {
                cell
            };
            for v in candidates.iter() {
                let mut child = cells.clone();
                child[i] = VertexSet::singleton(v);
                child.insert(i + 1, cell.without(v));
                search(g, child, best);
            }
        }
    }
}

fn interchangeable(g: &Graph, cell: VertexSet) -> bool {
    let mut iter = cell.iter();
    let first = iter.next().expect("non-empty cell");
    let outside = g.neighborhood(first) - cell;
    let clique = (cell.without(first)).is_subset_of(g.neighborhood(first));
    let independent = !g.neighborhood(first).intersects(cell);
    if !clique && !independent {
        return false;
    }
    cell.iter().all(|v| {
        g.neighborhood(v) - cell == outside
            && if clique {
                cell.without(v).is_subset_of(g.neighborhood(v))
            } else {
                !g.neighborhood(v).intersects(cell)
            }
    })
}

/// Splits cells by neighbor counts against the current cell list until
/// stable. Sub-cells are ordered by their count signature, which keeps the
/// refined partition isomorphism-invariant.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    loop {
        let mut changed = false;
        let mut next: Vec<VertexSet> = Vec::with_capacity(cells.len());
        for &cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            // Counts fit 4 bits each and there are at most 16 cells, so a
            // whole signature packs into one u64.
            let mut groups: Vec<(u64, VertexSet)> = Vec::new();
            for v in cell.iter() {
                let mut sig = 0u64;
                for &c in cells.iter() {
                    sig = sig << 4 | (g.neighborhood(v) & c).len() as u64;
                }
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => members.insert(v),
                    None => groups.push((sig, VertexSet::singleton(v))),
                }
            }
            groups.sort_unstable_by_key(|&(sig, _)| sig);
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_iter().map(|(_, members)| members));
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn certificate_for(g: &Graph, cells: &[VertexSet]) -> u128 {
    let order: Vec<usize> = cells
        .iter()
        .map(|c| c.first().expect("discrete cells are singletons"))
        .collect();
    let mut cert = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            cert = cert << 1 | u128::from(g.has_edge(order[i], order[j]));
        }
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    #[test]
    fn relabelings_agree() {
        let c4 = cycle(4);
        let relabeled = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_ne!(c4, relabeled);
        assert_eq!(
            canonical_form(&c4).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // C_4 and P_4 ⊔ anything share nothing; use two 6-vertex 2-regular
        // graphs: C_6 versus 2·C_3 have equal degree sequences.
        let c6 = cycle(6);
        let two_triangles = complete(3).disjoint_union(&complete(3)).unwrap();
        assert_ne!(
            canonical_form(&c6).unwrap(),
            canonical_form(&two_triangles).unwrap()
        );
        assert_ne!(
            canonical_form(&cycle(4)).unwrap(),
            canonical_form(&path(4)).unwrap()
        );
    }

    #[test]
    fn certificate_rebuilds_representative() {
        for g in [cycle(5), path(6), complete_bipartite(2, 3), complete(1)] {
            let c = canonical_form(&g).unwrap();
            let rep = c.to_graph();
            assert_eq!(canonical_form(&rep).unwrap(), c);
            assert_eq!(rep.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn order_cap() {
        let g = Graph::edgeless(17).unwrap();
        assert_eq!(
            canonical_form(&g),
            Err(GraphError::UnsupportedOrder { n: 17, max: 16 })
        );
        assert!(canonical_form(&complete(16)).is_ok());
    }

    #[test]
    fn tiny_orders() {
        assert_eq!(canonical_form(&Graph::edgeless(0).unwrap()).unwrap().bytes(), &[0]);
        assert_eq!(canonical_form(&Graph::edgeless(1).unwrap()).unwrap().bytes(), &[1]);
        let k2 = canonical_form(&complete(2)).unwrap();
        assert_eq!(k2.bytes(), &[2, 0b1000_0000]);
        assert_eq!(k2.hex(), "0280");
    }
}
