//! JSON documents for verification reports and sparsification statistics.
//!
//! Non-finite numbers are written as strings (`"inf"`, `"-inf"`, `"nan"`).

use motifcut_core::sparsify::{Engine, RoundStats, SparsifyStats};
use motifcut_core::verify::{InvariantCheck, VerificationReport};
use serde::{Serialize, Serializer};
use serde_json::Value;

fn number<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else if x.is_nan() {
        s.serialize_str("nan")
    } else if *x > 0.0 {
        s.serialize_str("inf")
    } else {
        s.serialize_str("-inf")
    }
}

fn numbers<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&Num(*x))?;
    }
    seq.end()
}

struct Num(f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        number(&self.0, s)
    }
}

#[derive(Debug, Serialize)]
pub struct InvariantJson {
    pub name: &'static str,
    pub pass: bool,
    #[serde(serialize_with = "number")]
    pub slack: f64,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    #[serde(serialize_with = "number")]
    pub max_relative_error: f64,
    pub argmax_cut: Option<Vec<usize>>,
    pub cuts_checked: u64,
    pub mode: &'static str,
    pub invariants: Vec<InvariantJson>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            max_relative_error: r.max_relative_error,
            argmax_cut: r.argmax_cut.as_ref().map(|c| c.side().to_vec()),
            cuts_checked: r.cuts_checked,
            mode: r.mode.as_str(),
            invariants: r.invariants.iter().map(InvariantJson::from).collect(),
        }
    }
}

impl From<&InvariantCheck> for InvariantJson {
    fn from(c: &InvariantCheck) -> Self {
        InvariantJson { name: c.name, pass: c.pass, slack: c.slack }
    }
}

#[derive(Debug, Serialize)]
pub struct RoundJson {
    pub round: usize,
    pub edges_in: usize,
    pub critical: Vec<usize>,
    pub critical_union: usize,
    pub edges_out: usize,
    pub audit_misses: Option<usize>,
}

impl From<&RoundStats> for RoundJson {
    fn from(r: &RoundStats) -> Self {
        RoundJson {
            round: r.round,
            edges_in: r.edges_in,
            critical: r.critical.clone(),
            critical_union: r.critical_union,
            edges_out: r.edges_out,
            audit_misses: r.audit_misses,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct StatsJson {
    pub engine: &'static str,
    pub input_edges: usize,
    pub output_edges: usize,
    #[serde(serialize_with = "number")]
    pub eps_prime: f64,
    pub rounds: usize,
    pub rounds_run: usize,
    #[serde(serialize_with = "number")]
    pub keep_probability: f64,
    #[serde(serialize_with = "numbers")]
    pub thresholds: Vec<f64>,
    pub accuracy_budget_ok: bool,
    pub per_round: Vec<RoundJson>,
}

pub fn engine_name(e: Engine) -> &'static str {
    match e {
        Engine::Strength => "strength",
        Engine::Connectivity => "connectivity",
    }
}

impl From<&SparsifyStats> for StatsJson {
    fn from(s: &SparsifyStats) -> Self {
        StatsJson {
            engine: engine_name(s.engine),
            input_edges: s.input_edges,
            output_edges: s.output_edges,
            eps_prime: s.eps_prime,
            rounds: s.rounds,
            rounds_run: s.rounds_run,
            keep_probability: s.keep_probability,
            thresholds: s.thresholds.clone(),
            accuracy_budget_ok: s.accuracy_budget_ok,
            per_round: s.per_round.iter().map(RoundJson::from).collect(),
        }
    }
}

pub fn report_to_json(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("report serializes")
}

pub fn stats_to_json(s: &SparsifyStats) -> String {
    serde_json::to_string_pretty(&StatsJson::from(s)).expect("stats serialize")
}

fn is_number(v: &Value) -> bool {
    v.is_number() || matches!(v.as_str(), Some("inf" | "-inf" | "nan"))
}

/// Checks a parsed document against the report layout; returns the first violation.
pub fn validate_report(doc: &Value) -> Result<(), String> {
    let obj = doc.as_object().ok_or("report is not an object")?;
    let field = |k: &str| obj.get(k).ok_or_else(|| format!("missing field {k}"));
    if !is_number(field("max_relative_error")?) {
        return Err("max_relative_error is not a number".into());
    }
    match field("argmax_cut")? {
        Value::Null => {}
        Value::Array(vs) if vs.iter().all(|v| v.is_u64()) => {}
        _ => return Err("argmax_cut is not a vertex list".into()),
    }
    if !field("cuts_checked")?.is_u64() {
        return Err("cuts_checked is not a count".into());
    }
    if !matches!(field("mode")?.as_str(), Some("exhaustive" | "sampled")) {
        return Err("mode is not exhaustive or sampled".into());
    }
    let invariants = field("invariants")?.as_array().ok_or("invariants is not a list")?;
    for inv in invariants {
        let ok = inv.get("name").is_some_and(Value::is_string)
            && inv.get("pass").is_some_and(Value::is_boolean)
            && inv.get("slack").is_some_and(is_number);
        if !ok {
            return Err(format!("malformed invariant entry {inv}"));
        }
    }
    if obj.len() != 5 {
        return Err("unexpected extra fields".into());
    }
    Ok(())
}
