//! JSON and CSV forms of verification records.
//!
//! CSV numbers carry 17 significant digits, so every f64 survives a round trip.

use crate::error::{Error, Result};

use super::{LhsSummary, Params, RhsSummary, VerificationRecord};

fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

fn parse_num(s: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|e| Error::Parse(format!("bad number '{s}': {e}")))
}

fn parse_bool(s: &str) -> Result<bool> {
    s.trim().parse::<bool>().map_err(|e| Error::Parse(format!("bad boolean '{s}': {e}")))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

/// A single record as an object, several as an array.
pub fn records_to_json(records: &[VerificationRecord]) -> String {
    let out = if records.len() == 1 {
        serde_json::to_string_pretty(&records[0])
    } else {
        serde_json::to_string_pretty(records)
    };
    out.expect("records always serialize")
}

/// Accepts either form written by [`records_to_json`].
pub fn records_from_json(s: &str) -> Result<Vec<VerificationRecord>> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let parse = |v: serde_json::Value| serde_json::from_value::<VerificationRecord>(v).map_err(|e| Error::Parse(e.to_string()));
    match v {
        serde_json::Value::Array(items) => items.into_iter().map(parse).collect(),
        other => Ok(vec![parse(other)?]),
    }
}

const HEADER: [&str; 14] = [
    "case", "params", "lhs_re", "lhs_im", "lhs_err", "evals", "flags", "rhs_re", "rhs_im", "abs_err", "rel_err", "pass",
    "ms", "error",
];

fn params_field(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={}", num(*v))).collect::<Vec<_>>().join(";")
}

fn parse_params(s: &str) -> Result<Params> {
    let mut out = Params::new();
    for part in s.split(';').filter(|t| !t.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse(format!("bad parameter '{part}'")))?;
        out.insert(k.to_string(), parse_num(v)?);
    }
    Ok(out)
}

/// Full records, one row each.
pub fn records_to_csv(records: &[VerificationRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for r in records {
        w.write_record([
            r.case.clone(),
            params_field(&r.params),
            num(r.lhs.re),
            num(r.lhs.im),
            num(r.lhs.err),
            r.lhs.evals.to_string(),
            r.lhs.flags.join("|"),
            num(r.rhs.re),
            num(r.rhs.im),
            num(r.abs_err),
            num(r.rel_err),
            r.pass.to_string(),
            num(r.ms),
            r.error.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

pub fn records_from_csv(s: &str) -> Result<Vec<VerificationRecord>> {
    let mut rd = csv::Reader::from_reader(s.as_bytes());
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row.map_err(csv_err)?;
        if row.len() != HEADER.len() {
            return Err(Error::Parse(format!("expected {} columns, found {}", HEADER.len(), row.len())));
        }
        let flags = if row[6].is_empty() { Vec::new() } else { row[6].split('|').map(str::to_string).collect() };
        out.push(VerificationRecord {
            case: row[0].to_string(),
            params: parse_params(&row[1])?,
            lhs: LhsSummary {
                re: parse_num(&row[2])?,
                im: parse_num(&row[3])?,
                err: parse_num(&row[4])?,
                evals: row[5].trim().parse().map_err(|e| Error::Parse(format!("bad count: {e}")))?,
                flags,
            },
            rhs: RhsSummary { re: parse_num(&row[7])?, im: parse_num(&row[8])? },
            abs_err: parse_num(&row[9])?,
            rel_err: parse_num(&row[10])?,
            pass: parse_bool(&row[11])?,
            ms: parse_num(&row[12])?,
            error: if row[13].is_empty() { None } else { Some(row[13].to_string()) },
        });
    }
    Ok(out)
}

/// One row of a sweep table.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub abs_err: f64,
    pub pass: bool,
}

impl SweepRow {
    pub fn from_record(param: &str, r: &VerificationRecord) -> SweepRow {
        SweepRow {
            value: r.params.get(param).copied().unwrap_or(f64::NAN),
            lhs_re: r.lhs.re,
            lhs_im: r.lhs.im,
            rhs_re: r.rhs.re,
            rhs_im: r.rhs.im,
            abs_err: r.abs_err,
            pass: r.pass,
        }
    }
}

/// Plot-ready sweep table with the swept parameter as first column.
pub fn sweep_to_csv(param: &str, records: &[VerificationRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([param, "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "pass"]).expect("in-memory write");
    for r in records {
        let row = SweepRow::from_record(param, r);
        w.write_record([
            num(row.value),
            num(row.lhs_re),
            num(row.lhs_im),
            num(row.rhs_re),
            num(row.rhs_im),
            num(row.abs_err),
            row.pass.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

/// Parses a table written by [`sweep_to_csv`]; returns the parameter name and rows.
pub fn sweep_from_csv(s: &str) -> Result<(String, Vec<SweepRow>)> {
    let mut rd = csv::Reader::from_reader(s.as_bytes());
    let name = rd.headers().map_err(csv_err)?.get(0).unwrap_or_default().to_string();
    let mut rows = Vec::new();
    for row in rd.records() {
        let row = row.map_err(csv_err)?;
        if row.len() != 7 {
            return Err(Error::Parse(format!("expected 7 columns, found {}", row.len())));
        }
        rows.push(SweepRow {
            value: parse_num(&row[0])?,
            lhs_re: parse_num(&row[1])?,
            lhs_im: parse_num(&row[2])?,
            rhs_re: parse_num(&row[3])?,
            rhs_im: parse_num(&row[4])?,
            abs_err: parse_num(&row[5])?,
            pass: parse_bool(&row[6])?,
        });
    }
    Ok((name, rows))
}
