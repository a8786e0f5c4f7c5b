//! The graph families behind edge-critical Maker-Breaker domination games,
//! with validated constructors, vertex role maps, and structural recognizers
//! that work up to isomorphism.
//!
//! * `H_m`: two adjacent universal vertices joined to `m−2` independent
//!   vertices (`m = 0` is the null graph, `m = 1` is invalid).
//! * `B`: either `K_{2,n}` with `n ≥ 3`, or a connected bipartite graph with
//!   parts of sizes `m, n ≥ 3` holding exactly two full-degree vertices each
//!   while every other vertex has degree 2.
//! * `F_{m1,t,m2}`: hubs `v1, v2` (nonadjacent), `t` common degree-2
//!   neighbors, and blocks `H_{m1}`, `H_{m2}` fully joined to `v1`
//!   respectively `v2`.
//! * `F'_{s,q,m}`: an apex `v1` over `K_{2,s}` (part `{a,b}`) plus `q−2`
//!   pendant-like vertices, and a vertex `x` joined to `{a,b}`, those
//!   pendants, and a disjoint `H_m`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::canon::canonical_form;
use crate::graph::{cycle, Graph};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyError {
    /// A parameter constraint is violated; the message names it.
    InvalidParameter(&'static str),
    /// The requested member would exceed the 64-vertex capacity.
    TooLarge { n: usize },
    /// A textual family spec did not parse.
    Parse(String),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParameter(msg) => write!(f, "{msg}"),
            FamilyError::TooLarge { n } => write!(f, "member would have {n} > 64 vertices"),
            FamilyError::Parse(s) => write!(f, "invalid family spec: {s}"),
        }
    }
}

impl core::error::Error for FamilyError {}

/// Named vertex groups of a constructed family member.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RoleMap {
    entries: Vec<(&'static str, VertexSet)>,
}

impl RoleMap {
    fn push(&mut self, name: &'static str, vs: VertexSet) {
        self.entries.push((name, vs));
    }

    pub fn get(&self, name: &str) -> Option<VertexSet> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, vs)| vs)
    }

    pub fn entries(&self) -> &[(&'static str, VertexSet)] {
        &self.entries
    }
}

impl fmt::Display for RoleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for (name, vs) in &self.entries {
            write!(f, "{sep}{name}={vs}")?;
            sep = " ";
        }
        Ok(())
    }
}

/// A parsed family member description.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    H { m: usize },
    B { m: usize, n: usize },
    F { m1: usize, t: usize, m2: usize },
    FPrime { s: usize, q: usize, m: usize },
    C5,
}

impl FamilySpec {
    /// Parses `"H:m"`, `"B:m,n"`, `"F:m1,t,m2"`, `"Fprime:s,q,m"`, `"C5"`.
    pub fn parse(text: &str) -> Result<FamilySpec, FamilyError> {
        let bad = || FamilyError::Parse(String::from(text));
        let (kind, args) = match text.split_once(':') {
            Some((k, a)) => (k, a),
            None => (text, ""),
        };
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?
        };
        match (kind, nums.as_slice()) {
            ("H", [m]) => Ok(FamilySpec::H { m: *m }),
            ("B", [m, n]) => Ok(FamilySpec::B { m: *m, n: *n }),
            ("F", [m1, t, m2]) => Ok(FamilySpec::F {
                m1: *m1,
                t: *t,
                m2: *m2,
            }),
            ("Fprime", [s, q, m]) => Ok(FamilySpec::FPrime {
                s: *s,
                q: *q,
                m: *m,
            }),
            ("C5", []) => Ok(FamilySpec::C5),
            _ => Err(bad()),
        }
    }

    pub fn validate(self) -> Result<(), FamilyError> {
        let fail = |msg| Err(FamilyError::InvalidParameter(msg));
        match self {
            FamilySpec::H { m } => {
                if m == 1 {
                    return fail("H requires m=0 or m>=2");
                }
            }
            FamilySpec::B { m, n } => {
                if m < 2 {
                    return fail("B requires m>=2");
                }
                if n < 3 {
                    return fail("B requires n>=3");
                }
            }
            FamilySpec::F { m1, t, m2 } => {
                if m2 < 2 {
                    return fail("F requires m2>=2");
                }
                if m1 == 1 {
                    return fail("F requires m1=0 or m1>=2");
                }
                if m1 > m2 {
                    return fail("F requires m1<=m2");
                }
                if t < 1 {
                    return fail("F requires t>=1");
                }
                if m1 == 0 && t < 2 {
                    return fail("m1=0 requires t>=2");
                }
            }
            FamilySpec::FPrime { s, q, m } => {
                if s < 2 {
                    return fail("Fprime requires s>=2");
                }
                if q < 2 {
                    return fail("Fprime requires q>=2");
                }
                if m < 2 {
                    return fail("Fprime requires m>=2");
                }
            }
            FamilySpec::C5 => {}
        }
        Ok(())
    }

    /// Validates and builds the member with its role map.
    pub fn build(self) -> Result<(Graph, RoleMap), FamilyError> {
        self.validate()?;
        match self {
            FamilySpec::H { m } => build_h(m),
            FamilySpec::B { m, n } => build_b(m, n),
            FamilySpec::F { m1, t, m2 } => build_f(m1, t, m2),
            FamilySpec::FPrime { s, q, m } => build_fprime(s, q, m),
            FamilySpec::C5 => {
                let mut roles = RoleMap::default();
                roles.push("cycle", VertexSet::full(5));
                Ok((cycle(5), roles))
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::H { m } => write!(f, "H:{m}"),
            FamilySpec::B { m, n } => write!(f, "B:{m},{n}"),
            FamilySpec::F { m1, t, m2 } => write!(f, "F:{m1},{t},{m2}"),
            FamilySpec::FPrime { s, q, m } => write!(f, "Fprime:{s},{q},{m}"),
            FamilySpec::C5 => write!(f, "C5"),
        }
    }
}

fn capacity_checked(n: usize) -> Result<Graph, FamilyError> {
    Graph::edgeless(n).map_err(|_| FamilyError::TooLarge { n })
}

/// Adds the edges of `H_m` on the `m` vertices starting at `base`:
/// `base` and `base+1` adjacent to each other and to the rest of the block.
fn add_h_block(g: &mut Graph, base: usize, m: usize) {
    if m < 2 {
        return;
    }
    g.add_edge(base, base + 1).expect("fresh block edge");
    for k in 2..m {
        g.add_edge(base, base + k).expect("fresh block edge");
        g.add_edge(base + 1, base + k).expect("fresh block edge");
    }
}

/// `H_m` on vertices `0..m`: `{0,1}` is the universal pair, the rest are
/// independent. `m = 0` gives the null graph; `m = 1` is invalid.
pub fn build_h(m: usize) -> Result<(Graph, RoleMap), FamilyError> {
    FamilySpec::H { m }.validate()?;
    let mut g = capacity_checked(m)?;
    add_h_block(&mut g, 0, m);
    let mut roles = RoleMap::default();
    if m >= 2 {
        roles.push("universal", [0, 1].into_iter().collect());
        roles.push("independent", VertexSet::full(m) - VertexSet::full(2));
    }
    Ok((g, roles))
}

/// Family-B member on parts `0..m` and `m..m+n`. For `m = 2` this is
/// `K_{2,n}`; for `m ≥ 3` vertices `{0,1}` and `{m,m+1}` are the full-degree
/// pairs and everything else has degree 2.
pub fn build_b(m: usize, n: usize) -> Result<(Graph, RoleMap), FamilyError> {
    FamilySpec::B { m, n }.validate()?;
    let mut g = capacity_checked(m + n)?;
    let side1 = VertexSet::full(m);
    let side2 = VertexSet::full(m + n) - side1;
    for u in [0, 1] {
        for v in side2.iter() {
            g.add_edge(u, v).expect("cross edge");
        }
    }
    if m >= 3 {
        for u in [m, m + 1] {
            for v in 2..m {
                g.add_edge(v, u).expect("cross edge");
            }
        }
    }
    let mut roles = RoleMap::default();
    roles.push("side1", side1);
    roles.push("side2", side2);
    roles.push("side1_full", [0, 1].into_iter().collect());
    if m >= 3 {
        roles.push("side2_full", [m, m + 1].into_iter().collect());
    }
    Ok((g, roles))
}

/// `F_{m1,t,m2}` with `v1 = 0`, `v2 = 1`, connectors `2..2+t`, then the
/// `H_{m1}` block and the `H_{m2}` block.
pub fn build_f(m1: usize, t: usize, m2: usize) -> Result<(Graph, RoleMap), FamilyError> {
    FamilySpec::F { m1, t, m2 }.validate()?;
    let n = 2 + t + m1 + m2;
    let mut g = capacity_checked(n)?;
    let b_base = 2;
    let h1_base = b_base + t;
    let h2_base = h1_base + m1;
    for k in 0..t {
        g.add_edge(0, b_base + k).expect("connector edge");
        g.add_edge(1, b_base + k).expect("connector edge");
    }
    add_h_block(&mut g, h1_base, m1);
    add_h_block(&mut g, h2_base, m2);
    for k in 0..m1 {
        g.add_edge(0, h1_base + k).expect("hub edge");
    }
    for k in 0..m2 {
        g.add_edge(1, h2_base + k).expect("hub edge");
    }
    let block = |base: usize, len: usize| -> VertexSet {
        (base..base + len).collect()
    };
    let mut roles = RoleMap::default();
    roles.push("v1", VertexSet::singleton(0));
    roles.push("v2", VertexSet::singleton(1));
    roles.push("b", block(b_base, t));
    roles.push("h1", block(h1_base, m1));
    roles.push("h2", block(h2_base, m2));
    Ok((g, roles))
}

/// `F'_{s,q,m}` with `v1 = 0`, `a = 1`, `b = 2`, the `s`-part `3..3+s`, the
/// `q−2` extra vertices next, then `x`, then the `H_m` block.
pub fn build_fprime(s: usize, q: usize, m: usize) -> Result<(Graph, RoleMap), FamilyError> {
    FamilySpec::FPrime { s, q, m }.validate()?;
    let n = s + q + m + 2;
    let mut g = capacity_checked(n)?;
    let u_base = 3;
    let extra_base = u_base + s;
    let x = extra_base + (q - 2);
    let h_base = x + 1;
    for k in 0..s {
        g.add_edge(1, u_base + k).expect("K_{2,s} edge");
        g.add_edge(2, u_base + k).expect("K_{2,s} edge");
        g.add_edge(0, u_base + k).expect("apex edge");
    }
    g.add_edge(0, 1).expect("apex edge");
    g.add_edge(0, 2).expect("apex edge");
    for k in 0..q - 2 {
        g.add_edge(0, extra_base + k).expect("apex edge");
        g.add_edge(x, extra_base + k).expect("x edge");
    }
    g.add_edge(x, 1).expect("x edge");
    g.add_edge(x, 2).expect("x edge");
    add_h_block(&mut g, h_base, m);
    for k in 0..m {
        g.add_edge(x, h_base + k).expect("x edge");
    }
    let mut roles = RoleMap::default();
    roles.push("v1", VertexSet::singleton(0));
    roles.push("a", VertexSet::singleton(1));
    roles.push("b", VertexSet::singleton(2));
    roles.push("u", (u_base..u_base + s).collect());
    roles.push("b_extra", (extra_base..extra_base + (q - 2)).collect());
    roles.push("x", VertexSet::singleton(x));
    roles.push("h", (h_base..h_base + m).collect());
    roles.push("h_universal", [h_base, h_base + 1].into_iter().collect());
    Ok((g, roles))
}

// ===== structural recognition =====

fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighborhood(v).intersects(s))
}

/// `Some(m)` exactly when `G ≅ H_m`.
pub fn h_parameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    match n {
        0 => Some(0),
        1 => None,
        2 => g.has_edge(0, 1).then_some(2),
        3 => (g.edge_count() == 3).then_some(3),
        _ => {
            let u = g.universal_vertices();
            (u.len() == 2 && is_independent(g, g.vertices() - u)).then_some(n)
        }
    }
}

/// `Some((m, n))` when `G` is a family-B member with part sizes `m ≤` both
/// readings considered: `K_{2,n}` or the doubly-full bipartite form.
pub fn b_parameters(g: &Graph) -> Option<(usize, usize)> {
    if !g.is_connected() || g.n() == 0 {
        return None;
    }
    let (p1, p2) = g.is_bipartite()?;
    for (a, b) in [(p1, p2), (p2, p1)] {
        let m = a.len();
        let n = b.len();
        if n < 3 {
            continue;
        }
        if m == 2 {
            if a.iter().all(|v| g.neighborhood(v) == b) {
                return Some((2, n));
            }
        } else if m >= 3 {
            let fulls_a = a.iter().filter(|&v| g.neighborhood(v) == b).count();
            let fulls_b = b.iter().filter(|&v| g.neighborhood(v) == a).count();
            let rest_ok = a
                .iter()
                .all(|v| g.neighborhood(v) == b || g.degree(v) == 2)
                && b
                    .iter()
                    .all(|v| g.neighborhood(v) == a || g.degree(v) == 2);
            if fulls_a == 2 && fulls_b == 2 && rest_ok {
                return Some((m, n));
            }
        }
    }
    None
}

/// All `(m1, t, m2)` such that `G ≅ F_{m1,t,m2}`, sorted and deduplicated.
pub fn f_parameterizations(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for v1 in 0..n {
        for v2 in 0..n {
            if v1 == v2 || g.has_edge(v1, v2) {
                continue;
            }
            let nb1 = g.neighborhood(v1);
            let nb2 = g.neighborhood(v2);
            let b = nb1 & nb2;
            let h1 = nb1 - b;
            let h2 = nb2 - b;
            let (m1, t, m2) = (h1.len(), b.len(), h2.len());
            if m1 > m2 || m2 < 2 || t < 1 || (m1 == 0 && t < 2) {
                continue;
            }
            let hubs: VertexSet = [v1, v2].into_iter().collect();
            if (hubs | b | h1 | h2) != g.vertices() {
                continue;
            }
            if !b.iter().all(|x| g.neighborhood(x) == hubs) {
                continue;
            }
            if !h1
                .iter()
                .all(|x| g.neighborhood(x) - h1 == VertexSet::singleton(v1))
            {
                continue;
            }
            if !h2
                .iter()
                .all(|x| g.neighborhood(x) - h2 == VertexSet::singleton(v2))
            {
                continue;
            }
            if h_parameter(&g.induced_subgraph(h1).0) != Some(m1) {
                continue;
            }
            if h_parameter(&g.induced_subgraph(h2).0) != Some(m2) {
                continue;
            }
            out.push((m1, t, m2));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// All `(s, q, m)` such that `G ≅ F'_{s,q,m}`, sorted and deduplicated.
pub fn fprime_parameterizations(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        for v1 in 0..n {
            if x == v1 || g.has_edge(x, v1) {
                continue;
            }
            let nx = g.neighborhood(x);
            let nv = g.neighborhood(v1);
            let h = nx - nv;
            let u = nv - nx;
            let common = nx & nv;
            let (m, s, q) = (h.len(), u.len(), common.len());
            if m < 2 || s < 2 || q < 2 {
                continue;
            }
            let pair: VertexSet = [x, v1].into_iter().collect();
            if (pair | h | u | common) != g.vertices() {
                continue;
            }
            let ab: VertexSet = common
                .iter()
                .filter(|&c| g.neighborhood(c) == (u | pair))
                .collect();
            if ab.len() != 2 {
                continue;
            }
            if !(common - ab).iter().all(|e| g.neighborhood(e) == pair) {
                continue;
            }
            if !u.iter().all(|w| g.neighborhood(w) == ab.with(v1)) {
                continue;
            }
            if !h
                .iter()
                .all(|w| g.neighborhood(w) - h == VertexSet::singleton(x))
            {
                continue;
            }
            if h_parameter(&g.induced_subgraph(h).0) != Some(m) {
                continue;
            }
            out.push((s, q, m));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Isomorphism check against the 5-cycle via canonical forms.
pub fn is_c5(g: &Graph) -> bool {
    g.n() == 5
        && canonical_form(g).expect("order 5") == canonical_form(&cycle(5)).expect("order 5")
}

/// Membership flags for the classification record.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct FamilyFlags {
    pub b: bool,
    pub f: bool,
    pub f_prime: bool,
    pub c5: bool,
    pub h: bool,
}

/// Tests `g` against every family, up to isomorphism.
pub fn family_membership(g: &Graph) -> FamilyFlags {
    FamilyFlags {
        b: b_parameters(g).is_some(),
        f: !f_parameterizations(g).is_empty(),
        f_prime: !fprime_parameterizations(g).is_empty(),
        c5: is_c5(g),
        h: h_parameter(g).is_some(),
    }
}
