//! Report records and their text, NDJSON and CSV encodings.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use qcong_core::congruence::CongruenceReport;

/// One verification outcome. Field order is the JSON key order and the CSV
/// column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub claim: String,
    pub instance: u64,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    pub modulus: String,
    pub elapsed_ms: u64,
}

impl Record {
    /// Numeric part of the claim id (`eq12` -> 12), used for ordering.
    pub fn claim_number(&self) -> u32 {
        self.claim
            .trim_start_matches("eq")
            .parse()
            .unwrap_or(u32::MAX)
    }

    pub fn failure(claim: &str, instance: u64, error: impl std::fmt::Display) -> Self {
        Self {
            claim: claim.to_string(),
            instance,
            holds: false,
            lhs: format!("error: {error}"),
            rhs: String::new(),
            modulus: String::new(),
            elapsed_ms: 0,
        }
    }
}

impl From<CongruenceReport> for Record {
    fn from(r: CongruenceReport) -> Self {
        Self {
            claim: r.claim.to_string(),
            instance: r.instance,
            holds: r.holds,
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            modulus: r.modulus,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

/// Sorts by claim id, then instance.
pub fn sort_records(records: &mut [Record]) {
    records.sort_by_key(|r| (r.claim_number(), r.instance));
}

/// 0 when every record holds, 1 otherwise.
pub fn exit_code(records: &[Record]) -> i32 {
    if records.iter().all(|r| r.holds) {
        0
    } else {
        1
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn write_records<W: Write>(out: W, records: &[Record], format: Format) -> io::Result<()> {
    match format {
        Format::Text => write_text(out, records),
        Format::Json => write_ndjson(out, records),
        Format::Csv => write_csv(out, records),
    }
}

fn write_text<W: Write>(mut out: W, records: &[Record]) -> io::Result<()> {
    for r in records {
        let status = if r.holds { "ok  " } else { "FAIL" };
        writeln!(
            out,
            "{status} {:<5} {:>6}  lhs = {}  rhs = {}  mod {}  {} ms",
            r.claim, r.instance, r.lhs, r.rhs, r.modulus, r.elapsed_ms
        )?;
    }
    let failed = records.iter().filter(|r| !r.holds).count();
    writeln!(out, "{} checks, {} failed", records.len(), failed)?;
    out.flush()
}

/// One JSON object per line.
fn write_ndjson<W: Write>(mut out: W, records: &[Record]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

fn write_csv<W: Write>(out: W, records: &[Record]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn read_ndjson(text: &str) -> serde_json::Result<Vec<Record>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(claim: &str, instance: u64, holds: bool) -> Record {
        Record {
            claim: claim.into(),
            instance,
            holds,
            lhs: "35/16".into(),
            rhs: "1 + 7*q".into(),
            modulus: "25".into(),
            elapsed_ms: 3,
        }
    }

    #[test]
    fn json_keys_in_schema_order() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[record("eq7", 5, true)], Format::Json).unwrap();
        let line = String::from_utf8(buf).unwrap();
        assert_eq!(
            line,
            "{\"claim\":\"eq7\",\"instance\":5,\"holds\":true,\"lhs\":\"35/16\",\
             \"rhs\":\"1 + 7*q\",\"modulus\":\"25\",\"elapsed_ms\":3}\n"
        );
    }

    #[test]
    fn csv_header_mirrors_json() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[record("eq8", 3, true)], Format::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "claim,instance,holds,lhs,rhs,modulus,elapsed_ms"
        );
    }

    #[test]
    fn ordering_and_exit_code() {
        let mut rs = vec![
            record("eq12", 1, true),
            record("eq9", 2, true),
            record("eq9", 1, false),
        ];
        sort_records(&mut rs);
        let keys: Vec<_> = rs.iter().map(|r| (r.claim.as_str(), r.instance)).collect();
        assert_eq!(keys, vec![("eq9", 1), ("eq9", 2), ("eq12", 1)]);
        assert_eq!(exit_code(&rs), 1);
        assert_eq!(exit_code(&rs[1..]), 0);
        assert_eq!(exit_code(&[]), 0);
    }

    #[test]
    fn ndjson_round_trip() {
        let rs = vec![record("eq7", 3, true), Record::failure("eq8", 9, "not prime")];
        let mut buf = Vec::new();
        write_records(&mut buf, &rs, Format::Json).unwrap();
        assert_eq!(read_ndjson(&String::from_utf8(buf).unwrap()).unwrap(), rs);
    }
}
