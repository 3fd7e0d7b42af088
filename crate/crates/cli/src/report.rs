use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};
use vwc_core::{CriterionReport, Violation};

pub const TOOL: &str = "vwc";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A violation tagged with the check that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub source: String,
    #[serde(flatten)]
    pub violation: Violation,
}

/// One side of a `--both` comparison.
#[derive(Clone, Debug, Serialize)]
pub struct MismatchSide {
    pub check: String,
    pub verdict: bool,
    /// What supports the verdict: the violations when it is false, a short
    /// certificate when it is true.
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub left: MismatchSide,
    pub right: MismatchSide,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub kind: String,
    pub sha256: String,
}

/// Everything a command produces. Rendered as text, a table or JSON.
#[derive(Debug, Default)]
pub struct Outcome {
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: Vec<Witness>,
    pub mismatch: Option<Mismatch>,
    pub notes: Vec<String>,
    pub result: Map<String, Value>,
    pub rows: Vec<(String, String)>,
    /// Replaces the default `key: value` text output.
    pub text: Option<Vec<String>>,
    pub timings: BTreeMap<String, f64>,
}

impl Outcome {
    pub fn timed<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.insert(key.to_string(), start.elapsed().as_secs_f64() * 1e3);
        out
    }

    pub fn verdict(&mut self, key: &str, report: &CriterionReport) {
        self.verdicts.insert(key.to_string(), report.verdict());
        self.row(key, verdict_word(report.verdict()));
        self.witnesses.extend(
            report
                .violations()
                .iter()
                .map(|v| Witness { source: key.to_string(), violation: v.clone() }),
        );
    }

    pub fn row(&mut self, key: &str, value: impl ToString) {
        self.rows.push((key.to_string(), value.to_string()));
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.result
            .insert(key.to_string(), serde_json::to_value(value).expect("plain data serializes"));
    }

    /// 0 when every verdict holds and no mismatch was found, else 1.
    pub fn exit_code(&self) -> u8 {
        if self.mismatch.is_none() && self.verdicts.values().all(|&v| v) {
            0
        } else {
            1
        }
    }
}

pub fn verdict_word(v: bool) -> &'static str {
    if v {
        "true"
    } else {
        "false"
    }
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<&'a InputInfo>,
    field: u64,
    verdicts: &'a BTreeMap<String, bool>,
    witnesses: &'a [Witness],
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<&'a Mismatch>,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    notes: &'a [String],
    timings_ms: &'a BTreeMap<String, f64>,
    exit_code: u8,
    #[serde(flatten)]
    result: &'a Map<String, Value>,
}

pub fn to_json(command: &str, input: Option<&InputInfo>, field: u64, o: &Outcome) -> Value {
    let doc = ReportDocument {
        tool: TOOL,
        version: VERSION,
        command,
        input,
        field,
        verdicts: &o.verdicts,
        witnesses: &o.witnesses,
        mismatch: o.mismatch.as_ref(),
        notes: &o.notes,
        timings_ms: &o.timings,
        exit_code: o.exit_code(),
        result: &o.result,
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

pub fn error_json(command: &str, message: &str, code: u8) -> Value {
    serde_json::json!({
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "error": message,
        "exit_code": code,
    })
}

fn witness_line(w: &Witness) -> String {
    let v = &w.violation;
    let mut line = format!("witness [{}] {}: {}", w.source, v.clause, v.detail);
    if !v.indices.is_empty() {
        line.push_str(&format!("; pairs {:?}", v.indices));
    }
    let face = v.degree.is_some();
    for set in &v.sets {
        line.push_str(&format!("; {}{{{}}}", if face { "F = " } else { "" }, set.join(", ")));
    }
    line
}

fn mismatch_lines(m: &Mismatch) -> Vec<String> {
    let mut out = vec!["MISMATCH".to_string()];
    for side in [&m.left, &m.right] {
        out.push(format!("  {}: {}", side.check, side.verdict));
        out.extend(side.evidence.iter().map(|e| format!("    {e}")));
    }
    out
}

pub fn to_text(o: &Outcome) -> String {
    let mut lines = match &o.text {
        Some(t) => t.clone(),
        None => o.rows.iter().map(|(k, v)| format!("{k}: {v}")).collect(),
    };
    lines.extend(o.witnesses.iter().map(witness_line));
    if let Some(m) = &o.mismatch {
        lines.extend(mismatch_lines(m));
    }
    lines.extend(o.notes.iter().map(|n| format!("note: {n}")));
    join(lines)
}

pub fn to_table(o: &Outcome) -> String {
    let kw = o.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let vw = o.rows.iter().map(|(_, v)| v.chars().count()).max().unwrap_or(0);
    let rule = format!("+{}+{}+", "-".repeat(kw + 2), "-".repeat(vw + 2));
    let mut lines = vec![rule.clone()];
    for (k, v) in &o.rows {
        lines.push(format!("| {k:<kw$} | {v:<vw$} |"));
    }
    lines.push(rule);
    if let Some(t) = &o.text {
        if o.rows.is_empty() {
            lines = t.clone();
        }
    }
    if !o.witnesses.is_empty() {
        lines.push("witnesses:".into());
        lines.extend(o.witnesses.iter().map(|w| format!("  {}", witness_line(w))));
    }
    if let Some(m) = &o.mismatch {
        lines.extend(mismatch_lines(m));
    }
    lines.extend(o.notes.iter().map(|n| format!("note: {n}")));
    join(lines)
}

fn join(lines: Vec<String>) -> String {
    let mut s = lines.join("\n");
    if !s.is_empty() {
        s.push('\n');
    }
    s
}
