//! JSON shapes for classification records and census reports.

use std::collections::BTreeMap;

use mbd_core::criticality::ClassificationRecord;
use mbd_core::solver::GameValue;
use serde::{Deserialize, Serialize};

/// A game value in JSON: a plain integer, or the string `"inf"`.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Finite(u32),
    Symbol(InfSymbol),
}

/// The only string a game value may serialize to.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum InfSymbol {
    #[serde(rename = "inf")]
    Inf,
}

impl From<GameValue> for ValueJson {
    fn from(v: GameValue) -> ValueJson {
        match v {
            GameValue::Finite(k) => ValueJson::Finite(k),
            GameValue::Infinity => ValueJson::Symbol(InfSymbol::Inf),
        }
    }
}

impl From<ValueJson> for GameValue {
    fn from(v: ValueJson) -> GameValue {
        match v {
            ValueJson::Finite(k) => GameValue::Finite(k),
            ValueJson::Symbol(InfSymbol::Inf) => GameValue::Infinity,
        }
    }
}

/// Family membership flags under their report keys.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    #[serde(rename = "B")]
    pub b: bool,
    #[serde(rename = "F")]
    pub f: bool,
    #[serde(rename = "F_prime")]
    pub f_prime: bool,
    #[serde(rename = "C5")]
    pub c5: bool,
    #[serde(rename = "H_m")]
    pub h_m: bool,
}

/// One census row; field order is the wire format.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RecordJson {
    pub canonical_id: String,
    pub n: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub has_cut_vertex: bool,
    pub gamma: usize,
    pub gamma_mb: ValueJson,
    pub gamma_mb_prime: ValueJson,
    pub critical_d: bool,
    pub critical_s: bool,
    pub family: FamilyJson,
}

impl From<&ClassificationRecord> for RecordJson {
    fn from(r: &ClassificationRecord) -> RecordJson {
        RecordJson {
            canonical_id: r.canonical_id.clone(),
            n: r.n,
            connected: r.connected,
            bipartite: r.bipartite,
            triangle_free: r.triangle_free,
            has_cut_vertex: r.has_cut_vertex,
            gamma: r.gamma,
            gamma_mb: r.gamma_mb.into(),
            gamma_mb_prime: r.gamma_mb_prime.into(),
            critical_d: r.critical_d,
            critical_s: r.critical_s,
            family: FamilyJson {
                b: r.family.b,
                f: r.family.f,
                f_prime: r.family.f_prime,
                c5: r.family.c5,
                h_m: r.family.h,
            },
        }
    }
}

/// One failed predicate instance, with enough witness detail to re-check it
/// by hand through the solve command.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ViolationJson {
    pub canonical_id: String,
    pub check: String,
    pub detail: String,
}

/// The census artifact. Serialization is deterministic: ordered maps, input
/// order preserved in lists.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CensusReport {
    pub source: String,
    pub seed: u64,
    pub total: usize,
    pub per_order: BTreeMap<usize, usize>,
    pub checks: Vec<String>,
    pub critical_list: Vec<RecordJson>,
    pub violations: Vec<ViolationJson>,
}

impl CensusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One record per line, input order.
    pub fn criticals_jsonl(&self) -> String {
        let mut out = String::new();
        for rec in &self.critical_list {
            out.push_str(&serde_json::to_string(rec).expect("record serializes"));
            out.push('\n');
        }
        out
    }

    /// Aligned text table of violations, empty string when there are none.
    pub fn violations_table(&self) -> String {
        if self.violations.is_empty() {
            return String::new();
        }
        let id_w = self
            .violations
            .iter()
            .map(|v| v.canonical_id.len())
            .max()
            .unwrap()
            .max("canonical_id".len());
        let check_w = self
            .violations
            .iter()
            .map(|v| v.check.len())
            .max()
            .unwrap()
            .max("check".len());
        let mut out = format!("{:id_w$}  {:check_w$}  detail\n", "canonical_id", "check");
        for v in &self.violations {
            out.push_str(&format!(
                "{:id_w$}  {:check_w$}  {}\n",
                v.canonical_id, v.check, v.detail
            ));
        }
        out
    }
}

pub fn record_json_line(r: &ClassificationRecord) -> String {
    serde_json::to_string(&RecordJson::from(r)).expect("record serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbd_core::criticality::classify;
    use mbd_core::graph::cycle;

    #[test]
    fn record_line_has_exact_field_names_and_inf_encoding() {
        let line = record_json_line(&classify(&cycle(5)));
        // Field order is part of the wire format, so assert it on the raw
        // line; a parsed Value would re-sort the keys.
        let positions: Vec<usize> = [
            "\"canonical_id\"",
            "\"n\"",
            "\"connected\"",
            "\"bipartite\"",
            "\"triangle_free\"",
            "\"has_cut_vertex\"",
            "\"gamma\"",
            "\"gamma_mb\"",
            "\"gamma_mb_prime\"",
            "\"critical_d\"",
            "\"critical_s\"",
            "\"family\"",
            "\"B\"",
            "\"F\"",
            "\"F_prime\"",
            "\"C5\"",
            "\"H_m\"",
        ]
        .iter()
        .map(|k| line.find(k).unwrap_or_else(|| panic!("missing key {k}")))
        .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v.as_object().unwrap().len(), 12);
        assert_eq!(v["gamma_mb"], 2);
        assert_eq!(v["family"].as_object().unwrap().len(), 5);
        assert_eq!(v["family"]["B"], false);

        let back: RecordJson = serde_json::from_str(&line).unwrap();
        assert_eq!(GameValue::from(back.gamma_mb), GameValue::Finite(2));
    }

    #[test]
    fn infinity_round_trips_as_the_inf_string() {
        let j = serde_json::to_string(&ValueJson::from(GameValue::Infinity)).unwrap();
        assert_eq!(j, "\"inf\"");
        let v: ValueJson = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(GameValue::from(v), GameValue::Infinity);
        assert!(serde_json::from_str::<ValueJson>("\"oo\"").is_err());
    }
}
