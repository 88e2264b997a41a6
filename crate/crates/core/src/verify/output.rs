//! Serializations of congruence reports: json-lines, CSV, and the
//! tab-separated record line extended by residual fields.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use super::{Classification, CongruenceReport, Summary};
use crate::families::Family;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    JsonLines,
    Csv,
    Lines,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "jsonl" | "json-lines" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            "lines" | "tsv" => Ok(Format::Lines),
            _ => Err(Error::param(format!(
                "unknown format {s:?} (expected jsonl, csv or lines)"
            ))),
        }
    }
}

#[derive(Serialize)]
struct JsonCandidate {
    a: i64,
    residual: i64,
    holds: bool,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    family: Family,
    params: &'a [i64],
    p: i64,
    chi_neg: i64,
    candidates: Vec<JsonCandidate>,
    classification: Classification,
}

pub fn json_line(r: &CongruenceReport) -> Result<String> {
    let rep = JsonReport {
        family: r.record.family,
        params: &r.record.params,
        p: r.record.p,
        chi_neg: r.record.chi_neg,
        candidates: r
            .entries
            .iter()
            .map(|e| JsonCandidate {
                a: e.a.value(),
                residual: e.residual.value(),
                holds: e.holds,
            })
            .collect(),
        classification: r.classification,
    };
    serde_json::to_string(&rep).map_err(|e| Error::Parse(format!("json: {e}")))
}

pub const CSV_HEADER: [&str; 8] = [
    "family",
    "params",
    "p",
    "chi_neg",
    "a",
    "residual",
    "holds",
    "classification",
];

fn csv_rows(r: &CongruenceReport) -> Vec<[String; 8]> {
    let params = r
        .record
        .params
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    r.entries
        .iter()
        .map(|e| {
            [
                r.record.family.to_string(),
                params.clone(),
                r.record.p.to_string(),
                r.record.chi_neg.to_string(),
                e.a.value().to_string(),
                e.residual.value().to_string(),
                e.holds.to_string(),
                r.classification.to_string(),
            ]
        })
        .collect()
}

/// The record line followed by `residuals`, `holds` and the classification.
pub fn report_line(r: &CongruenceReport) -> String {
    let residuals = r
        .entries
        .iter()
        .map(|e| e.residual.value().to_string())
        .collect::<Vec<_>>()
        .join(",");
    let holds = r
        .entries
        .iter()
        .map(|e| e.holds.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "{}\t{}\t{}\t{}",
        r.record, residuals, holds, r.classification
    )
}

pub fn summary_block(s: &Summary) -> String {
    let mut out = String::from("# summary\n");
    out.push_str(&format!("# reports\t{}\n", s.reports));
    out.push_str(&format!("# candidates\t{}\n", s.candidates));
    out.push_str(&format!("# holds\t{}\n", s.holds));
    for c in Classification::ALL {
        out.push_str(&format!("# {}\t{}\n", c, s.count(c)));
    }
    out
}

fn io_err(e: std::io::Error) -> Error {
    Error::param(format!("write failed: {e}"))
}

/// Streams reports to `out` in one of the formats.
pub struct ReportWriter<W: Write> {
    format: Format,
    inner: Option<W>,
    csv: Option<csv::Writer<W>>,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(format: Format, out: W) -> Result<Self> {
        if format == Format::Csv {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)
                .map_err(|e| Error::param(format!("csv: {e}")))?;
            return Ok(ReportWriter {
                format,
                inner: None,
                csv: Some(w),
            });
        }
        Ok(ReportWriter {
            format,
            inner: Some(out),
            csv: None,
        })
    }

    pub fn write(&mut self, r: &CongruenceReport) -> Result<()> {
        match (self.format, &mut self.inner, &mut self.csv) {
            (Format::Csv, _, Some(w)) => {
                for row in csv_rows(r) {
                    w.write_record(&row)
                        .map_err(|e| Error::param(format!("csv: {e}")))?;
                }
                Ok(())
            }
            (Format::JsonLines, Some(w), _) => writeln!(w, "{}", json_line(r)?).map_err(io_err),
            (Format::Lines, Some(w), _) => writeln!(w, "{}", report_line(r)).map_err(io_err),
            _ => unreachable!("writer state matches its format"),
        }
    }

    /// Flushes and appends the summary block for the `lines` format. Returns
    /// whether the summary was written into the stream.
    pub fn finish(mut self, summary: &Summary) -> Result<bool> {
        if let Some(w) = self.csv.as_mut() {
            w.flush().map_err(io_err)?;
            return Ok(false);
        }
        let w = self.inner.as_mut().expect("non-csv writer");
        let in_stream = self.format == Format::Lines;
        if in_stream {
            w.write_all(summary_block(summary).as_bytes())
                .map_err(io_err)?;
        }
        w.flush().map_err(io_err)?;
        Ok(in_stream)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::verify::classify;

    fn trefoil() -> CongruenceReport {
        classify(&families::type_i(2, 3, 1).unwrap()).unwrap()
    }

    #[test]
    fn json() {
        assert_eq!(
            json_line(&trefoil()).unwrap(),
            r#"{"family":"I","params":[2,3,1],"p":7,"chi_neg":1,"candidates":[{"a":3,"residual":0,"holds":true},{"a":4,"residual":3,"holds":false}],"classification":"expected-torus"}"#
        );
    }

    #[test]
    fn csv_and_lines() {
        let mut buf = Vec::new();
        let mut w = ReportWriter::new(Format::Csv, &mut buf).unwrap();
        w.write(&trefoil()).unwrap();
        assert!(!w.finish(&Summary::default()).unwrap());
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "family,params,p,chi_neg,a,residual,holds,classification\n\
             I,\"2,3,1\",7,1,3,0,true,expected-torus\n\
             I,\"2,3,1\",7,1,4,3,false,expected-torus\n"
        );

        let line = report_line(&trefoil());
        assert!(line.ends_with("\t0,3\ttrue,false\texpected-torus"));
        assert!(line.starts_with("I\t2,3,1\t7\t1\t3,4\t"));
    }

    #[test]
    fn formats() {
        assert_eq!("jsonl".parse::<Format>().unwrap(), Format::JsonLines);
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
