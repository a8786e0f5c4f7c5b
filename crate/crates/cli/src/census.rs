//! Batch classification: run every requested check over a graph stream
//! and assemble a deterministic report.

use std::collections::BTreeMap;

use mbd_core::criticality::classify;
use mbd_core::enumerate::enumerate_connected;
use mbd_core::graph::Graph;
use mbd_core::solver::GameValue;
use rayon::prelude::*;

use crate::checks::{run_check, CheckContext, CheckName};
use crate::ingest::parse_graph6_stream;
use crate::report::{CensusReport, RecordJson, ViolationJson};

/// Target number of continuation-principle samples shared by each
/// graph-order bucket; every graph of order n gets ceil(target/bucket).
pub const CONTINUATION_SAMPLES_PER_ORDER: usize = 500;

/// What to classify: all connected graphs of one order, or a graph6 stream.
pub enum CensusInput {
    Builtin(usize),
    Stream { label: String, content: String },
}

/// Classifies the input, runs `checks` on every graph, and returns the
/// report. Workers classify in parallel; the aggregation keeps input
/// order, so the report bytes do not depend on `jobs` (0 = one worker
/// per CPU). Undecodable stream lines become `decode` violations.
pub fn run_census(
    input: &CensusInput,
    checks: &[CheckName],
    jobs: usize,
    seed: u64,
) -> Result<CensusReport, String> {
    let label;
    let mut decoded: Vec<Graph> = Vec::new();
    // Input slot = index into `decoded`, or a decode violation.
    let mut slots: Vec<Result<usize, ViolationJson>> = Vec::new();
    match input {
        CensusInput::Builtin(n) => {
            label = format!("builtin({n})");
            decoded = enumerate_connected(*n).map_err(|e| e.to_string())?;
            slots.extend((0..decoded.len()).map(Ok));
        }
        CensusInput::Stream { label: l, content } => {
            label = l.clone();
            for line in parse_graph6_stream(content) {
                match line.parsed {
                    Ok(g) => {
                        slots.push(Ok(decoded.len()));
                        decoded.push(g);
                    }
                    Err(err) => slots.push(Err(ViolationJson {
                        canonical_id: format!("line {}", line.line_number),
                        check: "decode".to_string(),
                        detail: format!("{err}; text={:?}", line.text),
                    })),
                }
            }
        }
    }

    let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &decoded {
        *per_order.entry(g.n()).or_default() += 1;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let mut classified: Vec<Option<(RecordJson, bool, Vec<ViolationJson>)>> = pool.install(|| {
        decoded
            .par_iter()
            .enumerate()
            .map(|(index, g)| {
                let record = classify(g);
                let samples = CONTINUATION_SAMPLES_PER_ORDER.div_ceil(per_order[&g.n()]);
                let ctx = CheckContext {
                    seed,
                    samples,
                    index,
                };
                let violations = checks
                    .iter()
                    .filter_map(|&name| run_check(name, g, &record, &ctx))
                    .map(|v| ViolationJson {
                        canonical_id: v.canonical_id,
                        check: v.check.to_string(),
                        detail: v.detail,
                    })
                    .collect();
                let critical2 =
                    record.critical_s && record.gamma_mb_prime == GameValue::Finite(2);
                Some((RecordJson::from(&record), critical2, violations))
            })
            .collect()
    });

    let mut critical_list = Vec::new();
    let mut violations = Vec::new();
    for slot in slots {
        match slot {
            Ok(i) => {
                let (record, critical2, vs) =
                    classified[i].take().expect("one result per decoded graph");
                if critical2 {
                    critical_list.push(record);
                }
                violations.extend(vs);
            }
            Err(v) => violations.push(v),
        }
    }

    Ok(CensusReport {
        source: label,
        seed,
        total: decoded.len(),
        per_order,
        checks: checks.iter().map(|c| c.to_string()).collect(),
        critical_list,
        violations,
    })
}
