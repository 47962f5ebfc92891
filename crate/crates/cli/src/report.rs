//! Report serialization.
//!
//! TSV occurrence rows are `start, m, k, j, N`, one per line, under a
//! header; summaries follow as `#` comment lines. JSON documents are
//! wrapped as `{tool_version, params, generated_at, body}`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use twisted_words::avoidance::CampaignReport;
use twisted_words::{ComplexityProfile, FreenessReport, LinearFit, Occurrence};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const OCCURRENCE_HEADER: &str = "start\tm\tk\tj\tN";

#[derive(Debug, Serialize)]
pub struct Envelope<'a> {
    pub tool_version: &'a str,
    pub params: Value,
    pub generated_at: Option<String>,
    pub body: Value,
}

pub fn envelope_json(params: Value, body: Value, timestamp: bool) -> String {
    let env = Envelope {
        tool_version: TOOL_VERSION,
        params,
        generated_at: timestamp.then(|| chrono::Utc::now().to_rfc3339()),
        body,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("serializable");
    s.push('\n');
    s
}

pub fn occurrence_row(o: &Occurrence, j: u64, n: usize) -> String {
    format!("{}\t{}\t{}\t{}\t{}", o.start, o.m, o.k, j, n)
}

/// Describes a freeness report's scanned range for summary lines.
fn range_note(r: &FreenessReport) -> String {
    format!(
        "word_length={} k={} m={}..={} delta={} algorithm={}",
        r.word_length,
        r.query.k(),
        r.query.m_min(),
        r.scanned_m_max(),
        r.query.delta(),
        match r.scan_algorithm {
            twisted_words::ScanAlgorithm::Naive => "naive",
            twisted_words::ScanAlgorithm::Fast => "fast",
        }
    )
}

pub fn freeness_tsv(r: &FreenessReport, j: u64, n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "{OCCURRENCE_HEADER}").unwrap();
    for o in &r.occurrences {
        writeln!(out, "{}", occurrence_row(o, j, n)).unwrap();
    }
    if r.is_free() {
        writeln!(out, "# free within range: {}", range_note(r)).unwrap();
    } else {
        writeln!(
            out,
            "# {} occurrences within range: {}; minimal m = {}",
            r.occurrences.len(),
            range_note(r),
            r.minimal_m().expect("non-empty")
        )
        .unwrap();
    }
    if r.self_check_failures > 0 {
        writeln!(out, "# SELF-CHECK FAILED for {} scanner hits", r.self_check_failures).unwrap();
    }
    out
}

pub fn freeness_body(r: &FreenessReport, j: u64, n: usize) -> Value {
    json!({
        "N": n,
        "j": j,
        "k": r.query.k(),
        "delta": r.query.delta().to_string(),
        "word_length": r.word_length,
        "m_min": r.query.m_min(),
        "m_max": r.scanned_m_max(),
        "algorithm": r.scan_algorithm,
        "free_within_range": r.is_free(),
        "minimal_m": r.minimal_m(),
        "self_check_failures": r.self_check_failures,
        "occurrences": r.occurrences,
    })
}

pub fn campaign_tsv(r: &CampaignReport) -> String {
    let mut out = String::new();
    writeln!(out, "{OCCURRENCE_HEADER}").unwrap();
    for c in &r.cells {
        for o in &c.occurrences {
            writeln!(out, "{}", occurrence_row(o, c.j as u64, c.n)).unwrap();
        }
    }
    let p = &r.params;
    writeln!(
        out,
        "# campaign: k={} prefix_length={} m_max={} seed={} (results hold within range only)",
        p.k, p.prefix_length, p.m_max, p.seed
    )
    .unwrap();
    for c in &r.cells {
        let minimal = c.minimal_m.map_or("-".to_string(), |m| m.to_string());
        let earliest = c
            .earliest
            .map_or("-".to_string(), |o| format!("start={},m={}", o.start, o.m));
        write!(
            out,
            "# N={} j={} status={} ({}) occurrences={} minimal_m={} earliest={}",
            c.n,
            c.j,
            serde_json::to_value(c.status).expect("serializable").as_str().unwrap_or("?"),
            c.status.label(),
            c.occurrences.len(),
            minimal,
            earliest
        )
        .unwrap();
        if let Some(e) = &c.error {
            write!(out, " error={e}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn campaign_body(r: &CampaignReport) -> Value {
    let cells: Vec<Value> = r
        .cells
        .iter()
        .map(|c| {
            let mut v = serde_json::to_value(c).expect("serializable");
            v["status_label"] = json!(c.status.label());
            v
        })
        .collect();
    json!({ "params": r.params, "cells": cells })
}

pub fn rational(r: &num_rational::Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn complexity_tsv(
    p: &ComplexityProfile,
    fit: Option<&LinearFit>,
    fit_note: Option<&str>,
    entropy: Option<f64>,
) -> String {
    let mut out = String::new();
    writeln!(out, "k\tp(k)\tstable").unwrap();
    for (i, c) in p.counts().iter().enumerate() {
        let k = i + 1;
        writeln!(out, "{k}\t{c}\t{}", p.is_stable(k) as u8).unwrap();
    }
    writeln!(
        out,
        "# word_length={} N={} stable_upto={} (counts trusted only up to the stable horizon)",
        p.word_length, p.alphabet_size, p.stable_upto
    )
    .unwrap();
    if let Some(f) = fit {
        writeln!(
            out,
            "# fit window=[{},{}] slope={} intercept={} max_residual={} conjectured_slope={} matches={}",
            f.window.0,
            f.window.1,
            rational(&f.slope),
            rational(&f.intercept),
            rational(&f.max_residual),
            p.alphabet_size as i64 - 1,
            f.matches_conjectured_slope(p.alphabet_size)
        )
        .unwrap();
    }
    if let Some(note) = fit_note {
        writeln!(out, "# fit skipped: {note}").unwrap();
    }
    match entropy {
        Some(h) => writeln!(out, "# entropy_estimate={h:.6}").unwrap(),
        None => writeln!(out, "# entropy_estimate=-").unwrap(),
    }
    out
}

pub fn complexity_body(
    p: &ComplexityProfile,
    fit: Option<&LinearFit>,
    fit_note: Option<&str>,
    entropy: Option<f64>,
) -> Value {
    json!({
        "N": p.alphabet_size,
        "word_length": p.word_length,
        "stable_upto": p.stable_upto,
        "counts": p.counts(),
        "fit": fit.map(|f| json!({
            "window": [f.window.0, f.window.1],
            "slope": rational(&f.slope),
            "intercept": rational(&f.intercept),
            "max_residual": rational(&f.max_residual),
            "conjectured_slope": p.alphabet_size as i64 - 1,
            "matches_conjectured_slope": f.matches_conjectured_slope(p.alphabet_size),
        })),
        "fit_note": fit_note,
        "entropy_estimate": entropy,
    })
}

/// Parses occurrence rows back out of a TSV report: `(occurrence, j, N)`.
pub fn parse_occurrence_tsv(text: &str) -> Result<Vec<(Occurrence, u64, usize)>, String> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.is_empty() || line.starts_with('#') || line == OCCURRENCE_HEADER {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let parse = |i: usize| -> Result<usize, String> {
            fields
                .get(i)
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| format!("line {}: malformed occurrence row {line:?}", lineno + 1))
        };
        if fields.len() != 5 {
            return Err(format!("line {}: expected 5 columns, got {}", lineno + 1, fields.len()));
        }
        let occ = Occurrence { start: parse(0)?, m: parse(1)?, k: parse(2)? };
        rows.push((occ, parse(3)? as u64, parse(4)?));
    }
    Ok(rows)
}

/// Parses occurrence rows out of a JSON scan, verify or campaign report.
pub fn parse_occurrence_json(text: &str) -> Result<Vec<(Occurrence, u64, usize)>, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let body = doc.get("body").ok_or("missing body")?;
    let groups: Vec<&Value> = match body.get("cells") {
        Some(Value::Array(cells)) => cells.iter().collect(),
        _ => vec![body],
    };
    let mut rows = Vec::new();
    for g in groups {
        let n = g.get("N").and_then(Value::as_u64).ok_or("missing N")? as usize;
        let j = g.get("j").and_then(Value::as_u64).ok_or("missing j")?;
        let occs: Vec<Occurrence> = serde_json::from_value(
            g.get("occurrences").cloned().ok_or("missing occurrences")?,
        )
        .map_err(|e| e.to_string())?;
        rows.extend(occs.into_iter().map(|o| (o, j, n)));
    }
    Ok(rows)
}
