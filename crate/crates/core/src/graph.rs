//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one [`VertexSet`] per vertex. The representation is always
//! symmetric and irreflexive; constructors validate input and internal
//! mutation keeps both invariants.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};

/// An undirected edge with endpoints stored as `u < v`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop; loops are rejected with
    /// an error at every data boundary before `Edge` values exist.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Errors for graph construction and structural operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// Requested order exceeds the 64-vertex capacity.
    TooManyVertices { n: usize },
    /// A vertex index is not in `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// An edge joins a vertex to itself.
    LoopEdge { v: usize },
    /// The same edge was listed twice.
    DuplicateEdge { u: usize, v: usize },
    /// The edge to delete is not present.
    EdgeNotPresent { u: usize, v: usize },
    /// Two vertex sets that must be disjoint overlap.
    OverlappingSets,
    /// The operation only supports a smaller order than requested.
    UnsupportedOrder { n: usize, max: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceed the capacity of {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            GraphError::LoopEdge { v } => write!(f, "loop edge at vertex {v}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            GraphError::EdgeNotPresent { u, v } => write!(f, "edge {u}-{v} not present"),
            GraphError::OverlappingSets => write!(f, "vertex sets overlap"),
            GraphError::UnsupportedOrder { n, max } => {
                write!(f, "order {n} unsupported here (maximum {max})")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected graph with vertex set `{0, …, n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: alloc::vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Inserts one edge; rejects loops, repeats, and bad indices.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        if a >= self.n {
            return Err(GraphError::VertexOutOfRange { v: a, n: self.n });
        }
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange { v: b, n: self.n });
        }
        if a == b {
            return Err(GraphError::LoopEdge { v: a });
        }
        if self.adj[a].contains(b) {
            let e = Edge::new(a, b);
            return Err(GraphError::DuplicateEdge { u: e.u(), v: e.v() });
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        self.debug_check();
        Ok(())
    }

    /// Copy of the graph with one edge removed.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if e.v() >= self.n {
            return Err(GraphError::VertexOutOfRange { v: e.v(), n: self.n });
        }
        if !self.adj[e.u()].contains(e.v()) {
            return Err(GraphError::EdgeNotPresent { u: e.u(), v: e.v() });
        }
        let mut g = self.clone();
        g.adj[e.u()].remove(e.v());
        g.adj[e.v()].remove(e.u());
        g.debug_check();
        Ok(g)
    }

    #[inline]
    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        for v in 0..self.n {
            debug_assert!(!self.adj[v].contains(v), "irreflexive");
            debug_assert!(
                self.adj[v].is_subset_of(VertexSet::full(self.n)),
                "adjacency within range"
            );
            for u in self.adj[v].iter() {
                debug_assert!(self.adj[u].contains(v), "symmetric");
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The set `{0, …, n-1}`.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.neighborhood(v).with(v)
    }

    /// Union of closed neighborhoods over a set of vertices.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = s;
        for v in s.iter() {
            out |= self.neighborhood(v);
        }
        out
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighborhood(v).len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// All edges, ordered by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.degree(v) == self.n - 1)
            .collect()
    }

    /// Subgraph induced on `s`, plus the map from new indices to old ones
    /// (old vertices taken in increasing order).
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        assert!(
            s.is_subset_of(self.vertices()),
            "induced set {s} not within the vertex set"
        );
        let old_of_new: Vec<usize> = s.iter().collect();
        let mut new_of_old = [usize::MAX; MAX_VERTICES];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut g = Graph::edgeless(old_of_new.len()).expect("within capacity");
        for (new, &old) in old_of_new.iter().enumerate() {
            for w in (self.adj[old] & s).iter() {
                let nw = new_of_old[w];
                if nw > new {
                    g.adj[new].insert(nw);
                    g.adj[nw].insert(new);
                }
            }
        }
        g.debug_check();
        (g, old_of_new)
    }

    /// Set of vertices reachable from `start` while staying inside `within`.
    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v] & within;
            }
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Components of the subgraph induced on `within`, ordered by least element.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within;
        while let Some(v) = rest.first() {
            let comp = self.reach(v, within);
            out.push(comp);
            rest -= comp;
        }
        out
    }

    /// Connected components as vertex sets, ordered by least element.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True for graphs with at most one component (the null graph counts).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices whose removal raises the component count.
    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.components().len();
        (0..self.n)
            .filter(|&v| {
                self.components_within(self.vertices().without(v)).len() > base
            })
            .collect()
    }

    /// Edges whose removal raises the component count.
    pub fn bridges(&self) -> Vec<Edge> {
        let base = self.components().len();
        self.edges()
            .into_iter()
            .filter(|&e| {
                let g = self.delete_edge(e).expect("edge from edges()");
                g.components().len() > base
            })
            .collect()
    }

    /// Bipartition `(V1, V2)` if one exists. Within each component the class
    /// of the least vertex goes to `V1`, so the split is deterministic.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut v1 = VertexSet::EMPTY;
        let mut v2 = VertexSet::EMPTY;
        for comp in self.components() {
            let start = comp.first().expect("components are nonempty");
            let mut even = VertexSet::singleton(start);
            let mut odd = VertexSet::EMPTY;
            let mut frontier = even;
            let mut level_even = true;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next |= self.adj[v];
                }
                next -= even | odd;
                if level_even {
                    odd |= next;
                } else {
                    even |= next;
                }
                level_even = !level_even;
                frontier = next;
            }
            for v in even.iter() {
                if self.adj[v].intersects(even) {
                    return None;
                }
            }
            for v in odd.iter() {
                if self.adj[v].intersects(odd) {
                    return None;
                }
            }
            v1 |= even;
            v2 |= odd;
        }
        Some((v1, v2))
    }

    /// True when no two adjacent vertices share a neighbor.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u && self.adj[u].intersects(self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// Join `G ∨ H`: disjoint union plus every edge between the two sides.
    /// `H`'s vertices are shifted by `n(G)`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..g.n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g.debug_check();
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted by `n(self)`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::edgeless(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            g.adj[self.n + v] = VertexSet::new(other.adj[v].bits() << self.n);
        }
        g.debug_check();
        Ok(g)
    }

    /// Every edge with one endpoint in `a` and the other in `b`, ordered by
    /// `(u, v)`. The sets must be disjoint subsets of the vertex set.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> Result<Vec<Edge>, GraphError> {
        if a.intersects(b) {
            return Err(GraphError::OverlappingSets);
        }
        if let Some(v) = ((a | b) - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut out: Vec<Edge> = Vec::new();
        for u in a.iter() {
            for v in (self.adj[u] & b).iter() {
                out.push(Edge::new(u, v));
            }
        }
        out.sort();
        Ok(out)
    }

    /// True when `N[s] ⊇ V`.
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.closed_neighborhood_of_set(s & self.vertices()) == self.vertices()
    }

    /// Classical domination number, by exhaustive subset search in
    /// increasing cardinality. Intended for small orders.
    pub fn domination_number(&self) -> usize {
        for k in 0..=self.n {
            if self.some_dominating_set_of_size(k).is_some() {
                return k;
            }
        }
        unreachable!("the full vertex set dominates")
    }

    fn some_dominating_set_of_size(&self, k: usize) -> Option<VertexSet> {
        self.subsets_of_size(k)
            .into_iter()
            .find(|&s| self.is_dominating(s))
    }

    /// All minimum dominating sets, with the domination number.
    pub fn minimum_dominating_sets(&self) -> (usize, Vec<VertexSet>) {
        let k = self.domination_number();
        let sets = self
            .subsets_of_size(k)
            .into_iter()
            .filter(|&s| self.is_dominating(s))
            .collect();
        (k, sets)
    }

    fn subsets_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if k == 0 {
            out.push(VertexSet::EMPTY);
            return out;
        }
        if k > self.n {
            return out;
        }
        // Gosper's hack walks k-subsets of {0,…,n-1} in increasing bit order.
        let limit = VertexSet::full(self.n).bits();
        let mut x = VertexSet::full(k).bits();
        while x <= limit {
            out.push(VertexSet::new(x));
            let c = x & x.wrapping_neg();
            let r = x + c;
            if r == 0 {
                break;
            }
            x = (((x ^ r) >> 2) / c) | r;
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.n)?;
        let mut sep = "";
        for e in self.edges() {
            write!(f, "{sep}{e}")?;
            sep = " ";
        }
        write!(f, ")")
    }
}

// ===== common constructions =====

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::edgeless(n).expect("capacity checked by caller");
    for u in 0..n {
        for v in u + 1..n {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
    }
    g
}

/// Path `P_n` with vertices in path order.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("consecutive indices")
}

/// Cycle `C_n` for `n ≥ 3`, with vertices in cycle order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle indices")
}

/// Complete bipartite graph `K_{a,b}`; the first `a` vertices form one side.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::edgeless(a + b).expect("capacity checked by caller");
    for u in 0..a {
        for v in a..a + b {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
    }
    g
}
