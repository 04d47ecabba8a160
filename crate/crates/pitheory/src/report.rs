//! Report documents and their text and line-delimited JSON renderings.
//!
//! The structured format is one JSON object per line. The first line is a
//! `header` record with the tool version and caps, then one `verdict`
//! record per report carrying the [`VerdictReport`] fields, then a single
//! `summary` record:
//!
//! ```text
//! {"record":"header","tool_version":"0.1.0","caps":{"closure":5000,...}}
//! {"record":"verdict","group_name":"Alt4","theorem_id":"A","p":2,...}
//! {"record":"summary","pass":1,"fail":0,"vacuous":0,"indeterminate":0}
//! ```

use std::io::{self, BufRead, Write};

use pitheory_core::lab::{Outcome, VerdictReport};
use pitheory_core::Caps;
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub indeterminate: usize,
}

impl Summary {
    pub fn of(reports: &[VerdictReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.outcome {
                Outcome::Pass => s.pass += 1,
                Outcome::Fail => s.fail += 1,
                Outcome::Vacuous => s.vacuous += 1,
                Outcome::Indeterminate => s.indeterminate += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.vacuous + self.indeterminate
    }

    /// 0 clean, 2 on any failure, 3 when the only problems are
    /// indeterminate verdicts.
    pub fn exit_code(&self) -> i32 {
        if self.fail > 0 {
            2
        } else if self.indeterminate > 0 {
            3
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportDocument {
    pub tool_version: String,
    pub caps: Caps,
    pub reports: Vec<VerdictReport>,
    pub summary: Summary,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "lowercase")]
enum Record {
    Header { tool_version: String, caps: Caps },
    Verdict(VerdictReport),
    Summary(Summary),
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("line {line}: {msg}")]
    Layout { line: usize, msg: &'static str },
}

impl ReportDocument {
    pub fn new(caps: Caps, reports: Vec<VerdictReport>) -> Self {
        let summary = Summary::of(&reports);
        ReportDocument { tool_version: TOOL_VERSION.into(), caps, reports, summary }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code()
    }

    pub fn write_structured(&self, w: &mut dyn Write) -> io::Result<()> {
        let mut line = |r: &Record| -> io::Result<()> {
            serde_json::to_writer(&mut *w, r)?;
            w.write_all(b"\n")
        };
        line(&Record::Header { tool_version: self.tool_version.clone(), caps: self.caps })?;
        for r in &self.reports {
            line(&Record::Verdict(r.clone()))?;
        }
        line(&Record::Summary(self.summary))
    }

    pub fn read_structured(r: impl BufRead) -> Result<ReportDocument, ReadError> {
        let mut header = None;
        let mut reports = Vec::new();
        let mut summary = None;
        for (i, l) in r.lines().enumerate() {
            let l = l?;
            let line = i + 1;
            if l.trim().is_empty() {
                continue;
            }
            let rec: Record = serde_json::from_str(&l).map_err(|source| ReadError::Json { line, source })?;
            match rec {
                Record::Header { .. } if header.is_some() || !reports.is_empty() => {
                    return Err(ReadError::Layout { line, msg: "header must come first, once" })
                }
                Record::Header { tool_version, caps } => header = Some((tool_version, caps)),
                _ if summary.is_some() => return Err(ReadError::Layout { line, msg: "records after the summary" }),
                Record::Verdict(v) => reports.push(v),
                Record::Summary(s) => summary = Some(s),
            }
        }
        let (tool_version, caps) = header.ok_or(ReadError::Layout { line: 1, msg: "missing header" })?;
        let summary = summary.ok_or(ReadError::Layout { line: reports.len() + 2, msg: "missing summary" })?;
        Ok(ReportDocument { tool_version, caps, reports, summary })
    }

    pub fn write_text(&self, w: &mut dyn Write) -> io::Result<()> {
        let c = self.caps;
        writeln!(
            w,
            "pitheory {} (caps: closure {}, lattice {}, series {}, module_dim {}, iso {})",
            self.tool_version, c.closure, c.lattice, c.series, c.module_dim, c.iso
        )?;
        for r in &self.reports {
            write_verdict_line(w, r)?;
        }
        let s = &self.summary;
        writeln!(
            w,
            "{} reports: {} pass, {} fail, {} vacuous, {} indeterminate",
            s.total(),
            s.pass,
            s.fail,
            s.vacuous,
            s.indeterminate
        )
    }
}

fn write_verdict_line(w: &mut dyn Write, r: &VerdictReport) -> io::Result<()> {
    write!(w, "{:<18} {:<26} p={}", r.group_name, r.theorem_id, r.p)?;
    if let Some(d) = r.d {
        write!(w, " d={d}")?;
    }
    write!(w, "  {}", r.outcome)?;
    if !r.conclusion_cases.is_empty() {
        write!(w, "  cases {}", r.conclusion_cases.join(","))?;
    }
    if r.outcome == Outcome::Vacuous {
        let failed: Vec<&str> = r.hypotheses.iter().filter(|h| !h.holds).map(|h| h.name.as_str()).collect();
        write!(w, "  [not: {}]", failed.join("; "))?;
    }
    if let Some(e) = &r.error {
        write!(w, "  error: {e}")?;
    }
    if let Some(t) = r.timing_us {
        write!(w, "  {t}us")?;
    }
    writeln!(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pitheory_core::lab::check_theorem_a;

    fn doc() -> ReportDocument {
        let a4 = pitheory_core::construct::alternating(4).unwrap().with_name("Alt4");
        let s4 = pitheory_core::construct::symmetric(4).unwrap().with_name("Sym4");
        ReportDocument::new(Caps::default(), vec![check_theorem_a(&a4, 2), check_theorem_a(&s4, 2)])
    }

    #[test]
    fn structured_round_trip() {
        let d = doc();
        let mut buf = Vec::new();
        d.write_structured(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.starts_with("{\"record\":\"header\""));
        assert!(!text.contains("timing_us"));
        assert_eq!(ReportDocument::read_structured(&buf[..]).unwrap(), d);
    }

    #[test]
    fn summary_counts_sum_to_reports() {
        let d = doc();
        assert_eq!(d.summary, Summary { pass: 1, fail: 0, vacuous: 1, indeterminate: 0 });
        assert_eq!(d.summary.total(), d.reports.len());
        assert_eq!(d.exit_code(), 0);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Summary { fail: 1, indeterminate: 1, ..Default::default() }.exit_code(), 2);
        assert_eq!(Summary { indeterminate: 1, ..Default::default() }.exit_code(), 3);
        assert_eq!(Summary::default().exit_code(), 0);
    }

    #[test]
    fn layout_errors() {
        let summary = "{\"record\":\"summary\",\"pass\":0,\"fail\":0,\"vacuous\":0,\"indeterminate\":0}\n";
        assert!(matches!(ReportDocument::read_structured(summary.as_bytes()), Err(ReadError::Layout { .. })));
        assert!(matches!(ReportDocument::read_structured("{".as_bytes()), Err(ReadError::Json { .. })));
    }

    #[test]
    fn text_lists_every_report() {
        let mut buf = Vec::new();
        doc().write_text(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("Alt4"));
        assert!(text.contains("cases 2"));
        assert!(text.contains("vacuous"));
        assert!(text.ends_with("2 reports: 1 pass, 0 fail, 1 vacuous, 0 indeterminate\n"));
    }
}
