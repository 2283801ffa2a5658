//! Plain-text renderings of verification results.
//!
//! The report file is a sequence of blocks. Each block starts with
//! `lemma <id>`, holds `key value` lines and ends with `end`. A counterexample
//! or witness table follows its block verbatim between `table` and
//! `endtable`, in the table file format. Lines starting with `#` are
//! comments.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::verify::{Outcome, Summary, VerificationReport};
use crate::magma::write_table;

pub const SEMANTICS_NOTE: &str = "all results are for finite carriers: a translation is one-to-one exactly when it is onto, so cancellation and division hypotheses coincide and infinite models are out of scope";

/// One line per lemma: id, outcome, order bound, models examined, time.
pub fn summary_line(r: &VerificationReport) -> String {
    let mut line = format!(
        "{:<24} {:<14} orders=1..{} models={} ms={}",
        r.id,
        r.outcome.name(),
        r.max_order,
        r.models_examined(),
        r.elapsed.as_millis()
    );
    match &r.outcome {
        Outcome::Counterexample { order, witness, .. } => {
            let _ = write!(line, " order={order} witness=\"{witness}\"");
        }
        Outcome::Inconclusive { order } => {
            let _ = write!(line, " budget-exhausted-at={order}");
        }
        _ => {}
    }
    line
}

pub fn summary_text(summary: &Summary) -> String {
    let mut out = String::new();
    for r in &summary.reports {
        out.push_str(&summary_line(r));
        out.push('\n');
    }
    let ok = summary
        .reports
        .iter()
        .filter(|r| r.outcome.is_success())
        .count();
    let _ = writeln!(
        out,
        "{ok}/{} claims hold up to order {} ({} ms)",
        summary.reports.len(),
        summary.max_order,
        summary.elapsed.as_millis()
    );
    out
}

pub fn report_block(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lemma {}", r.id);
    let _ = writeln!(out, "label {}", r.label);
    let _ = writeln!(out, "outcome {}", r.outcome.name());
    let _ = writeln!(out, "max_order {}", r.max_order);
    let models: Vec<String> = r.models_per_order.iter().map(|m| m.to_string()).collect();
    let _ = writeln!(out, "models_per_order {}", models.join(","));
    let _ = writeln!(out, "without_companion {}", r.without_companion);
    let _ = writeln!(out, "nodes {}", r.nodes);
    let _ = writeln!(out, "millis {}", r.elapsed.as_millis());
    let _ = writeln!(out, "note {}", r.note);
    let table = match &r.outcome {
        Outcome::Counterexample {
            order,
            algebra,
            witness,
        } => {
            let _ = writeln!(out, "order {order}");
            let _ = writeln!(out, "witness {witness}");
            let _ = writeln!(out, "witness_values {}", witness.values_text());
            Some(algebra)
        }
        Outcome::Witnessed(a) | Outcome::WrongWitness(a) => Some(a),
        Outcome::Inconclusive { order } => {
            let _ = writeln!(out, "order {order}");
            None
        }
        Outcome::Verified | Outcome::NoWitness => None,
    };
    if let Some(a) = table {
        out.push_str("table\n");
        out.push_str(&write_table(a));
        out.push_str("endtable\n");
    }
    out.push_str("end\n");
    out
}

pub fn report_file(summary: &Summary) -> String {
    let mut out = String::from("# groupoid-lab verification report\n");
    let _ = writeln!(out, "max_order {}", summary.max_order);
    let _ = writeln!(out, "claims {}", summary.reports.len());
    out.push('\n');
    for r in &summary.reports {
        out.push_str(&report_block(r));
        out.push('\n');
    }
    let _ = writeln!(out, "semantics {SEMANTICS_NOTE}");
    out
}

/// Reads back the `key value` pairs of each block of a report file. Tables
/// are returned under the key `table`.
pub fn parse_report(text: &str) -> Vec<BTreeMap<String, String>> {
    let mut blocks = Vec::new();
    let mut current: Option<BTreeMap<String, String>> = None;
    let mut table: Option<String> = None;
    for line in text.lines() {
        if let Some(t) = table.as_mut() {
            if line == "endtable" {
                let t = table.take().unwrap();
                if let Some(b) = current.as_mut() {
                    b.insert("table".into(), t);
                }
            } else {
                t.push_str(line);
                t.push('\n');
            }
            continue;
        }
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let (key, value) = line.split_once(' ').unwrap_or((line, ""));
        match (key, current.as_mut()) {
            ("lemma", None) => {
                let mut b = BTreeMap::new();
                b.insert("lemma".into(), value.to_string());
                current = Some(b);
            }
            ("end", Some(_)) => blocks.push(current.take().unwrap()),
            ("table", Some(_)) => table = Some(String::new()),
            (_, Some(b)) => {
                b.insert(key.to_string(), value.to_string());
            }
            (_, None) => {}
        }
    }
    blocks
}
