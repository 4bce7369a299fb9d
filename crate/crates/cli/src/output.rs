//! Rendering results as text, JSON or CSV.

use serde::Serialize;

use reciprocity::VerificationReport;

use crate::config::Format;

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    s.push('\n');
    Ok(s)
}

pub fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// One CSV line of a report. `section` is one of `proposition`, `param`,
/// `range`, `tested`, `by_class`, `mismatch`, `anomaly`.
#[derive(Debug, Default, Serialize)]
struct ReportRow {
    section: &'static str,
    key: String,
    value: String,
    prime: Option<u64>,
    symbol: String,
    class: String,
    representation: String,
    note: String,
}

fn report_csv(r: &VerificationReport) -> Result<String, String> {
    let mut rows = vec![ReportRow {
        section: "proposition",
        key: r.proposition.name().to_string(),
        value: r.proposition.to_string(),
        ..Default::default()
    }];
    for (k, v) in r.proposition.params() {
        rows.push(ReportRow {
            section: "param",
            key: k.to_string(),
            value: v.to_string(),
            ..Default::default()
        });
    }
    for (k, v) in [("min", r.range.min), ("max", r.range.max)] {
        rows.push(ReportRow {
            section: "range",
            key: k.to_string(),
            value: v.to_string(),
            ..Default::default()
        });
    }
    rows.push(ReportRow {
        section: "tested",
        value: r.tested.to_string(),
        ..Default::default()
    });
    for (k, v) in &r.by_class {
        rows.push(ReportRow {
            section: "by_class",
            key: k.clone(),
            value: v.to_string(),
            ..Default::default()
        });
    }
    for m in &r.mismatches {
        rows.push(ReportRow {
            section: "mismatch",
            prime: Some(m.prime),
            symbol: m.symbol.clone(),
            class: m.class.clone(),
            representation: m.representation.clone().unwrap_or_default(),
            note: m.note.clone(),
            ..Default::default()
        });
    }
    for a in &r.anomalies {
        rows.push(ReportRow {
            section: "anomaly",
            key: a.kind.to_string(),
            prime: a.prime,
            note: a.detail.clone(),
            ..Default::default()
        });
    }
    csv_rows(&rows)
}

pub fn report(r: &VerificationReport, format: Format) -> Result<String, String> {
    match format {
        Format::Text => Ok(format!("{r}\n")),
        Format::Json => json(r),
        Format::Csv => report_csv(r),
    }
}
