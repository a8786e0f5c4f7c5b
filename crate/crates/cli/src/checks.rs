//! The falsifiable predicates behind the census: each named check
//! instantiates one characterization or auxiliary statement on a single
//! graph and reports a violation carrying a full witness when it fails.

use std::fmt;
use std::str::FromStr;

use mbd_core::bitset::VertexSet;
use mbd_core::criticality::{classify, necessary_conditions, ClassificationRecord};
use mbd_core::families::{f_parameterizations, h_parameter};
use mbd_core::graph::{Edge, Graph};
use mbd_core::graph6::graph6_encode;
use mbd_core::solver::{game_value, make_position, optimal_moves, GameValue, Player};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fixed check vocabulary; each name maps to exactly one predicate.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CheckName {
    ThmBip,
    ThmNoK3,
    ThmCutvertex,
    LemmaNoLeaves,
    OneCriticalHm,
    ObservationO1,
    ContinuationPrinciple,
    LemmaDoky,
    LemmaMultipleuniversal,
    LemmaCutTriangle,
    PropNecessary,
    PropFamilyF,
    PropFamilyFprime,
    PropAllbridge,
}

pub const ALL_CHECKS: [CheckName; 14] = [
    CheckName::ThmBip,
    CheckName::ThmNoK3,
    CheckName::ThmCutvertex,
    CheckName::LemmaNoLeaves,
    CheckName::OneCriticalHm,
    CheckName::ObservationO1,
    CheckName::ContinuationPrinciple,
    CheckName::LemmaDoky,
    CheckName::LemmaMultipleuniversal,
    CheckName::LemmaCutTriangle,
    CheckName::PropNecessary,
    CheckName::PropFamilyF,
    CheckName::PropFamilyFprime,
    CheckName::PropAllbridge,
];

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::ThmBip => "thm_bip",
            CheckName::ThmNoK3 => "thm_NoK3",
            CheckName::ThmCutvertex => "thm_cutvertex",
            CheckName::LemmaNoLeaves => "lemma_NoLeaves",
            CheckName::OneCriticalHm => "one_critical_Hm",
            CheckName::ObservationO1 => "observation_o1",
            CheckName::ContinuationPrinciple => "continuation_principle",
            CheckName::LemmaDoky => "lemma_doky",
            CheckName::LemmaMultipleuniversal => "lemma_multipleuniversal",
            CheckName::LemmaCutTriangle => "lemma_cut_triangle",
            CheckName::PropNecessary => "prop_necessary",
            CheckName::PropFamilyF => "prop_familyF",
            CheckName::PropFamilyFprime => "prop_familyFprime",
            CheckName::PropAllbridge => "prop_allbridge",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> Result<CheckName, String> {
        ALL_CHECKS
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check '{s}'"))
    }
}

/// Parses a comma-separated check list; `all` selects the whole vocabulary.
/// The result follows the fixed vocabulary order and drops duplicates.
pub fn parse_check_list(s: &str) -> Result<Vec<CheckName>, String> {
    if s.trim() == "all" {
        return Ok(ALL_CHECKS.to_vec());
    }
    let mut requested = Vec::new();
    for part in s.split(',') {
        requested.push(CheckName::from_str(part.trim())?);
    }
    Ok(ALL_CHECKS
        .into_iter()
        .filter(|c| requested.contains(c))
        .collect())
}

/// Reproducibility inputs for sampled checks: the census seed, how many
/// samples this graph gets, and the graph's position in its input stream.
#[derive(Copy, Clone, Debug)]
pub struct CheckContext {
    pub seed: u64,
    pub samples: usize,
    pub index: usize,
}

impl Default for CheckContext {
    fn default() -> CheckContext {
        CheckContext {
            seed: 1,
            samples: 500,
            index: 0,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub canonical_id: String,
    pub check: CheckName,
    pub detail: String,
}

fn universal_in(g: &Graph, comp: VertexSet) -> VertexSet {
    comp.iter()
        .filter(|&v| comp.is_subset_of(g.closed_neighborhood(v)))
        .collect()
}

fn random_subset(within: VertexSet, rng: &mut ChaCha8Rng) -> VertexSet {
    within.iter().filter(|_| rng.gen::<bool>()).collect()
}

/// Evaluates one named predicate on `g`; `record` must be `classify(g)`.
pub fn run_check(
    name: CheckName,
    g: &Graph,
    record: &ClassificationRecord,
    ctx: &CheckContext,
) -> Option<Violation> {
    let fail = |detail: String| {
        Some(Violation {
            canonical_id: record.canonical_id.clone(),
            check: name,
            detail: format!("g6={}; {detail}", graph6_encode(g)),
        })
    };
    let two_crit = record.critical_s && record.gamma_mb_prime == GameValue::Finite(2);
    match name {
        CheckName::ThmBip => {
            if record.connected && record.bipartite && two_crit != record.family.b {
                return fail(format!(
                    "connected bipartite: 2-critical={two_crit} but B membership={}",
                    record.family.b
                ));
            }
        }
        CheckName::ThmNoK3 => {
            if record.connected && record.triangle_free {
                let listed = record.family.b || record.family.c5;
                if two_crit != listed {
                    return fail(format!(
                        "connected triangle-free: 2-critical={two_crit} but B/C5 membership={listed}"
                    ));
                }
            }
        }
        CheckName::ThmCutvertex => {
            if !(record.connected && record.has_cut_vertex) {
                return None;
            }
            let listed = record.family.f || record.family.f_prime;
            if two_crit != listed {
                return fail(format!(
                    "connected with cut-vertex: 2-critical={two_crit} but F/F' membership={listed}"
                ));
            }
            // Re-check the decomposition steps the characterization rests
            // on, each guarded by its own hypotheses.
            let bridges = g.bridges();
            let is_bridge = |a: usize, b: usize| bridges.contains(&Edge::new(a, b));
            for x in g.cut_vertices().iter() {
                let comps = g.components_within(g.vertices().without(x));
                if comps.len() != 2 {
                    continue;
                }
                for (this, other) in [(comps[0], comps[1]), (comps[1], comps[0])] {
                    let u_this = universal_in(g, this);
                    let u_other = universal_in(g, other);
                    for v1 in u_this.iter() {
                        // A universal vertex joined to x by a bridge while
                        // deg(x) >= 3 rules out 2-criticality.
                        if two_crit
                            && g.has_edge(v1, x)
                            && g.degree(x) >= 3
                            && is_bridge(v1, x)
                        {
                            return fail(format!(
                                "cut-vertex {x}: side universal {v1} joined by a bridge with deg({x})>=3, yet 2-critical"
                            ));
                        }
                        // So does a non-bridge edge from a universal vertex
                        // on the side with no more universal vertices.
                        if two_crit
                            && u_this.len() <= u_other.len()
                            && g.has_edge(v1, x)
                            && !is_bridge(v1, x)
                        {
                            return fail(format!(
                                "cut-vertex {x}: non-bridge edge {v1}-{x} from the smaller side's universal vertex, yet 2-critical"
                            ));
                        }
                    }
                    // Two far-side universal vertices on x with none on the
                    // near side forces membership in F or F'.
                    if two_crit
                        && (u_other & g.neighborhood(x)).len() >= 2
                        && !u_this.intersects(g.neighborhood(x))
                        && !listed
                    {
                        return fail(format!(
                            "cut-vertex {x}: two far-side universal neighbors and none near, yet outside F and F'"
                        ));
                    }
                }
            }
        }
        CheckName::LemmaNoLeaves => {
            if g.min_degree() != Some(1) {
                return None;
            }
            let comps = g.components();
            let decomposed = comps.len() == 2 && {
                let a = h_parameter(&g.induced_subgraph(comps[0]).0);
                let b = h_parameter(&g.induced_subgraph(comps[1]).0);
                matches!((a, b), (Some(2), Some(m)) if m >= 2)
                    || matches!((a, b), (Some(m), Some(2)) if m >= 2)
            };
            if two_crit != decomposed {
                return fail(format!(
                    "minimum degree 1: 2-critical={two_crit} but H_2+H_m decomposition={decomposed}"
                ));
            }
        }
        CheckName::OneCriticalHm => {
            let one_crit = record.critical_s && record.gamma_mb_prime == GameValue::Finite(1);
            let is_h = h_parameter(g).is_some_and(|m| m >= 2);
            if one_crit != is_h {
                return fail(format!(
                    "1-critical={one_crit} but H_m membership={is_h}"
                ));
            }
        }
        CheckName::ObservationO1 => {
            if record.connected && two_crit {
                let pos = make_position(g, VertexSet::EMPTY, Player::Staller)
                    .expect("fresh position");
                let optimal = optimal_moves(&pos).expect("value 2, game ongoing");
                if optimal != g.vertices() {
                    return fail(format!(
                        "Staller's optimal first moves are {optimal}, not all of {}",
                        g.vertices()
                    ));
                }
            }
        }
        CheckName::ContinuationPrinciple => {
            let mut rng = ChaCha8Rng::seed_from_u64(
                ctx.seed ^ (ctx.index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
            );
            for round in 0..ctx.samples {
                let smaller = random_subset(g.vertices(), &mut rng);
                let larger = smaller | random_subset(g.vertices(), &mut rng);
                for first in [Player::Dominator, Player::Staller] {
                    let with_more = game_value(g, larger, first);
                    let with_less = game_value(g, smaller, first);
                    if with_more > with_less {
                        return fail(format!(
                            "sample {round}: predominating {larger} gives {with_more} but subset {smaller} gives {with_less} ({first} first)"
                        ));
                    }
                }
            }
        }
        CheckName::LemmaDoky => {
            for e in g.edges() {
                let reduced = g.delete_edge(e).expect("edge listed by the graph");
                for (first, before) in [
                    (Player::Dominator, record.gamma_mb),
                    (Player::Staller, record.gamma_mb_prime),
                ] {
                    let after = game_value(&reduced, VertexSet::EMPTY, first);
                    if after < before {
                        return fail(format!(
                            "edge {e}: value drops from {before} to {after} ({first} first)"
                        ));
                    }
                }
            }
        }
        CheckName::LemmaMultipleuniversal => {
            if !(record.connected && record.gamma_mb_prime == GameValue::Finite(2)) {
                return None;
            }
            for x in g.cut_vertices().iter() {
                let comps = g.components_within(g.vertices().without(x));
                if comps.len() != 2 {
                    return fail(format!(
                        "cut-vertex {x} leaves {} components, not 2",
                        comps.len()
                    ));
                }
                let u0 = universal_in(g, comps[0]).len();
                let u1 = universal_in(g, comps[1]).len();
                if u0 == 0 || u1 == 0 || u0.max(u1) < 2 {
                    return fail(format!(
                        "cut-vertex {x}: component universal counts {u0} and {u1}"
                    ));
                }
            }
        }
        CheckName::LemmaCutTriangle => {
            if !(record.connected && two_crit) {
                return None;
            }
            for x in g.cut_vertices().iter() {
                for comp in g.components_within(g.vertices().without(x)) {
                    if comp.is_subset_of(g.neighborhood(x))
                        && universal_in(g, comp).len() >= 2
                        && !h_parameter(&g.induced_subgraph(comp).0).is_some_and(|m| m >= 2)
                    {
                        return fail(format!(
                            "cut-vertex {x}: dominated component {comp} with two universal vertices is not an H member"
                        ));
                    }
                }
            }
        }
        CheckName::PropNecessary => {
            if record.connected && two_crit && !necessary_conditions(g) {
                return fail(format!(
                    "n={}, min degree {:?}, max degree {:?}",
                    g.n(),
                    g.min_degree(),
                    g.max_degree()
                ));
            }
        }
        CheckName::PropFamilyF => {
            if record.family.f && !two_crit {
                return fail(format!(
                    "F member with gamma'_MB={} and critical_s={}",
                    record.gamma_mb_prime, record.critical_s
                ));
            }
        }
        CheckName::PropFamilyFprime => {
            if record.family.f_prime && !two_crit {
                return fail(format!(
                    "F' member with gamma'_MB={} and critical_s={}",
                    record.gamma_mb_prime, record.critical_s
                ));
            }
        }
        CheckName::PropAllbridge => {
            if !(record.connected && two_crit) {
                return None;
            }
            let bridges = g.bridges();
            for x in g.cut_vertices().iter() {
                let all_bridges = g
                    .neighborhood(x)
                    .iter()
                    .all(|y| bridges.contains(&Edge::new(x, y)));
                if all_bridges
                    && !f_parameterizations(g)
                        .iter()
                        .any(|&(m1, t, _)| m1 >= 2 && t == 1)
                {
                    return fail(format!(
                        "cut-vertex {x} meets only bridges but the graph is not an F member with t=1"
                    ));
                }
            }
        }
    }
    None
}

/// Characterization checks, given a precomputed record.
pub fn check_characterization(
    name: CheckName,
    g: &Graph,
    record: &ClassificationRecord,
) -> Option<Violation> {
    run_check(name, g, record, &CheckContext::default())
}

/// Auxiliary-statement checks; classifies internally.
pub fn check_lemma_suite(name: CheckName, g: &Graph, ctx: &CheckContext) -> Option<Violation> {
    run_check(name, g, &classify(g), ctx)
}
